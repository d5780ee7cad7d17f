#include "mbound/gfp.hpp"

#include <algorithm>

namespace mbound {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Params::Params(int p_, int n_) : p(p_), n(n_) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
}

int mod_inverse(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::invalid_argument("zero has no inverse");
    // extended Euclid
    int r0 = p, r1 = a;
    int s0 = 0, s1 = 1;
    while (r1 != 0) {
        int q = r0 / r1;
        int r2 = r0 - q * r1;
        int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    int inv = s0 % p;
    if (inv < 0) inv += p;
    return inv;
}

BigInt pow_big(int base, int exp) {
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

FieldMatrix::FieldMatrix(std::vector<Fvec> rows_, std::optional<std::vector<int>> aug_)
    : rows(std::move(rows_)), aug(std::move(aug_)) {
    for (const auto& r : rows)
        if (r.size() != col_count()) throw std::invalid_argument("ragged matrix");
    if (aug && aug->size() != rows.size())
        throw std::invalid_argument("augmented column length mismatch");
}

int dot_mod(const Fvec& x, const Fvec& u, const Params& params) {
    if (x.size() != u.size() || x.size() != static_cast<std::size_t>(params.n))
        throw std::invalid_argument("dot_mod: length mismatch");
    long long acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += static_cast<long long>(x[i]) * u[i];
    return static_cast<int>(acc % params.p);
}

RrefResult rref_mod(FieldMatrix m, const Params& params) {
    const int p = params.p;
    const std::size_t rows = m.row_count();
    const std::size_t cols = m.col_count();
    // Work on coefficient columns plus the augmented column (if any) as one
    // block so pivots in the augmented column are detected naturally.
    const std::size_t total = cols + (m.aug ? 1 : 0);

    auto at = [&](std::size_t r, std::size_t c) -> int& {
        return c < cols ? m.rows[r][c] : (*m.aug)[r];
    };

    std::size_t pivot_row = 0;
    int coeff_rank = 0;
    bool aug_pivot = false;
    for (std::size_t c = 0; c < total && pivot_row < rows; ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows && at(sel, c) % p == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m.rows[sel], m.rows[pivot_row]);
        if (m.aug) std::swap((*m.aug)[sel], (*m.aug)[pivot_row]);

        int inv = mod_inverse(at(pivot_row, c), p);
        for (std::size_t j = c; j < total; ++j)
            at(pivot_row, j) = static_cast<int>(static_cast<long long>(at(pivot_row, j)) * inv % p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row) continue;
            long long f = at(r, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < total; ++j) {
                long long v = at(r, j) - f * at(pivot_row, j) % p;
                at(r, j) = static_cast<int>(((v % p) + p) % p);
            }
        }
        if (c < cols) ++coeff_rank; else aug_pivot = true;
        ++pivot_row;
    }
    return RrefResult{std::move(m), coeff_rank, !aug_pivot};
}

BigInt solution_count(const FieldMatrix& m, const Params& params) {
    if (m.col_count() != static_cast<std::size_t>(params.n))
        throw std::invalid_argument("solution_count: coefficient width must equal n");
    RrefResult r = rref_mod(m, params);
    if (!r.consistent) return 0;
    return pow_big(params.p, params.n - r.rank);
}

bool is_zero_vec(const Fvec& v) {
    return std::all_of(v.begin(), v.end(), [](int e) { return e == 0; });
}

bool is_multiple_pair(const Fvec& s, const Fvec& t, const Params& params) {
    if (s.size() != t.size() || s.size() != static_cast<std::size_t>(params.n))
        throw std::invalid_argument("is_multiple_pair: length mismatch");
    if (is_zero_vec(s) || is_zero_vec(t))
        throw std::invalid_argument("is_multiple_pair: zero vector");
    const int p = params.p;
    std::size_t i = 0;
    while (s[i] % p == 0) ++i;
    long long lambda = static_cast<long long>(t[i]) * mod_inverse(s[i], p) % p;
    if (lambda == 0) return false;
    for (std::size_t j = 0; j < s.size(); ++j)
        if (t[j] % p != lambda * s[j] % p) return false;
    return true;
}

Fvec index_to_vec(long long index, int base, int n, int lo) {
    const int span = base - lo;
    Fvec v(n);
    for (int i = n - 1; i >= 0; --i) {
        v[i] = lo + static_cast<int>(index % span);
        index /= span;
    }
    return v;
}

long long vec_to_index(const Fvec& v, int base, int lo) {
    const int span = base - lo;
    long long idx = 0;
    for (int e : v) idx = idx * span + (e - lo);
    return idx;
}

}  // namespace mbound
