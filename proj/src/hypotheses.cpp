#include "mbound/hypotheses.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mbound {

int eval_linear(const Fvec& a, const Fvec& x, const Params& params) {
    return dot_mod(a, x, params);
}

void ExplicitClass::finalize() {
    if (k < 1 || k > 255) throw std::invalid_argument("label count out of range");
    if (domain_size < 1) throw std::invalid_argument("empty domain");
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& row : labels) {
        if (row.size() != static_cast<std::size_t>(domain_size))
            throw std::invalid_argument("label row length mismatch");
        for (auto l : row)
            if (l >= k) throw std::invalid_argument("label out of range");
        if (!seen.insert(row).second)
            throw std::invalid_argument("duplicate function");
    }
    // FNV-1a over the table contents
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](std::uint64_t v) { h = (h ^ v) * 1099511628211ULL; };
    mix(static_cast<std::uint64_t>(k));
    mix(static_cast<std::uint64_t>(domain_size));
    for (const auto& row : labels)
        for (auto l : row) mix(l);
    identity_hash = h;
}

ExplicitClass tabulate(const LinearClass& cls, long long budget) {
    const Params& pr = cls.params;
    BigInt count = pow_big(pr.p, pr.n);
    if (count * count > budget)
        throw std::invalid_argument("tabulate: table exceeds budget");
    const long long m = count.convert_to<long long>();

    ExplicitClass out;
    out.k = pr.p;
    out.domain_size = static_cast<int>(m);
    out.labels.reserve(m);
    for (long long ai = 0; ai < m; ++ai) {
        Fvec a = index_to_vec(ai, pr.p, pr.n);
        std::vector<std::uint8_t> row(m);
        for (long long xi = 0; xi < m; ++xi)
            row[xi] = static_cast<std::uint8_t>(eval_linear(a, index_to_vec(xi, pr.p, pr.n), pr));
        out.labels.push_back(std::move(row));
    }
    out.finalize();
    return out;
}

ExplicitClass constant_class(int k) {
    ExplicitClass out;
    out.k = k;
    out.domain_size = 1;
    for (int i = 0; i < k; ++i)
        out.labels.push_back({static_cast<std::uint8_t>(i)});
    out.finalize();
    return out;
}

ExplicitClass read_explicit_class(std::istream& in) {
    ExplicitClass out;
    if (!(in >> out.k >> out.domain_size))
        throw std::invalid_argument("class file: missing header");
    int v;
    std::vector<std::uint8_t> row;
    while (in >> v) {
        row.push_back(static_cast<std::uint8_t>(v));
        if (row.size() == static_cast<std::size_t>(out.domain_size)) {
            out.labels.push_back(std::move(row));
            row.clear();
        }
    }
    if (!row.empty()) throw std::invalid_argument("class file: truncated row");
    out.finalize();
    return out;
}

void write_explicit_class(std::ostream& out, const ExplicitClass& cls) {
    out << cls.k << " " << cls.domain_size << "\n";
    for (const auto& row : cls.labels) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? " " : "") << static_cast<int>(row[i]);
        out << "\n";
    }
}

std::vector<int> consistent_subset(const ExplicitClass& cls,
                                   const std::vector<Constraint>& history) {
    std::vector<int> out;
    for (std::size_t f = 0; f < cls.size(); ++f) {
        bool ok = true;
        for (const auto& c : history) {
            int l = cls.eval(f, c.point);
            if (c.equals ? (l != c.label) : (l == c.label)) { ok = false; break; }
        }
        if (ok) out.push_back(static_cast<int>(f));
    }
    return out;
}

}  // namespace mbound
