#include "mbound/lemma_lab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mbound/rng.hpp"

namespace mbound {

namespace {

void require_s_range(const Fvec& v, const Params& params, const char* who) {
    if (v.size() != static_cast<std::size_t>(params.n))
        throw std::invalid_argument(std::string(who) + ": length mismatch");
    for (int e : v)
        if (e < 1 || e >= params.p)
            throw std::invalid_argument(std::string(who) + ": entries must lie in {1,...,p-1}");
}

}  // namespace

CoeffSet::CoeffSet(std::vector<Fvec> members_, Params params_)
    : members(std::move(members_)), params(params_) {
    for (const auto& m : members) require_s_range(m, params, "CoeffSet");
}

CoeffSet full_nonzero_set(const Params& params) {
    BigInt total = pow_big(params.p - 1, params.n);
    if (total > 1'000'000) throw std::invalid_argument("full_nonzero_set: too large");
    const long long m = total.convert_to<long long>();
    std::vector<Fvec> members;
    members.reserve(m);
    for (long long i = 0; i < m; ++i)
        members.push_back(index_to_vec(i, params.p, params.n, 1));
    return CoeffSet(std::move(members), params);
}

Rational marginal_probability(const Fvec& x, int y, const Params& params) {
    FieldMatrix m({x}, std::vector<int>{y});
    return Rational(solution_count(m, params), pow_big(params.p, params.n));
}

Rational conditional_probability(const Fvec& s, const Fvec& t, int z, const Params& params) {
    if (params.n < 2) throw std::invalid_argument("conditional_probability: n >= 2 required");
    require_s_range(s, params, "conditional_probability");
    require_s_range(t, params, "conditional_probability");
    BigInt joint = solution_count(FieldMatrix({s, t}, std::vector<int>{z, z}), params);
    BigInt cond = solution_count(FieldMatrix({s}, std::vector<int>{z}), params);
    return Rational(joint, cond);  // cond = p^(n-1) > 0 since s is nonzero
}

Rational exact_covariance(const Fvec& s, const Fvec& t, int z, const Params& params) {
    if (params.n < 2) throw std::invalid_argument("exact_covariance: n >= 2 required");
    require_s_range(s, params, "exact_covariance");
    require_s_range(t, params, "exact_covariance");
    if (s == t) throw std::invalid_argument("exact_covariance: s = t is a variance");
    BigInt total = pow_big(params.p, params.n);
    Rational joint(solution_count(FieldMatrix({s, t}, std::vector<int>{z, z}), params), total);
    Rational es(solution_count(FieldMatrix({s}, std::vector<int>{z}), params), total);
    Rational et(solution_count(FieldMatrix({t}, std::vector<int>{z}), params), total);
    return joint - es * et;
}

BucketCounts bucket_counts(const CoeffSet& S, const Fvec& u) {
    BucketCounts counts(S.params.p, 0);
    for (const auto& x : S.members) ++counts[dot_mod(x, u, S.params)];
    return counts;
}

double lemma4_bound(long long size, const Params& params) {
    return static_cast<double>(size) / params.p + 2.0 * std::sqrt(static_cast<double>(size));
}

bool bucket_bound_holds(long long count, long long size, int p) {
    // count <= size/p + 2*sqrt(size)  iff  p*count - size <= 2*p*sqrt(size)
    BigInt lhs = BigInt(p) * count - size;
    if (lhs <= 0) return true;
    return lhs * lhs <= BigInt(4) * p * p * size;
}

bool all_buckets_bounded(const BucketCounts& counts, long long size, int p) {
    return std::all_of(counts.begin(), counts.end(),
                       [&](long long c) { return bucket_bound_holds(c, size, p); });
}

BalancedSearchResult find_balanced_u(const CoeffSet& S, long long budget, std::uint64_t seed) {
    if (budget < 1) throw std::invalid_argument("find_balanced_u: budget >= 1 required");
    const Params& pr = S.params;
    const long long size = static_cast<long long>(S.size());

    if (size == 0) {
        Fvec zero(pr.n, 0);
        return {zero, true, BucketCounts(pr.p, 0), 0, false};
    }

    Fvec best_u;
    BucketCounts best_counts;
    long long best_max = -1;
    auto consider = [&](const Fvec& u) -> bool {
        BucketCounts counts = bucket_counts(S, u);
        long long mx = *std::max_element(counts.begin(), counts.end());
        if (best_max < 0 || mx < best_max) {
            best_max = mx;
            best_u = u;
            best_counts = counts;
        }
        return all_buckets_bounded(counts, size, pr.p);
    };

    for (long long trial = 0; trial < budget; ++trial) {
        Rng rng = trial_stream(seed, static_cast<std::uint64_t>(trial));
        Fvec u = rng.vec(pr);
        if (consider(u)) return {u, true, bucket_counts(S, u), trial + 1, false};
    }

    BigInt space = pow_big(pr.p, pr.n);
    if (space <= 100'000) {
        const long long total = space.convert_to<long long>();
        for (long long i = 0; i < total; ++i) {
            Fvec u = index_to_vec(i, pr.p, pr.n);
            if (consider(u)) return {u, true, bucket_counts(S, u), budget, true};
        }
        // Lemma 4 promises existence, so reaching here means a bug upstream.
    }
    return {best_u, false, best_counts, budget, false};
}

Rational success_frequency(const CoeffSet& S, long long trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("success_frequency: trials >= 1 required");
    const Params& pr = S.params;
    const long long size = static_cast<long long>(S.size());
    if (size == 0) return Rational(1);

    long long hits = 0;
    for (long long trial = 0; trial < trials; ++trial) {
        Rng rng = trial_stream(seed, static_cast<std::uint64_t>(trial));
        BucketCounts counts = bucket_counts(S, rng.vec(pr));
        if (all_buckets_bounded(counts, size, pr.p)) ++hits;
    }
    return Rational(BigInt(hits), BigInt(trials));
}

long long count_multiple_pairs(const CoeffSet& S) {
    long long count = 0;
    for (std::size_t i = 0; i < S.members.size(); ++i)
        for (std::size_t j = 0; j < S.members.size(); ++j) {
            if (i == j) continue;
            if (is_multiple_pair(S.members[i], S.members[j], S.params)) ++count;
        }
    return count;
}

}  // namespace mbound
