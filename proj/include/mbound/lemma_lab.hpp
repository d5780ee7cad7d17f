#pragma once

#include <cstdint>
#include <vector>

#include "mbound/gfp.hpp"
#include "mbound/rational.hpp"

namespace mbound {

// An explicit subset of {1,...,p-1}^n (the sets S and R_t).
struct CoeffSet {
    std::vector<Fvec> members;
    Params params;

    CoeffSet(std::vector<Fvec> members_, Params params_);
    std::size_t size() const { return members.size(); }
};

// Full set {1,...,p-1}^n in lexicographic order.
CoeffSet full_nonzero_set(const Params& params);

// counts[z] = |{x in S : x.u = z mod p}|; sums to |S|.
using BucketCounts = std::vector<long long>;

// Pr(x.u = y mod p) over uniform u, exact: solution_count / p^n.
Rational marginal_probability(const Fvec& x, int y, const Params& params);

// Pr(t.u = z | s.u = z), exact. Requires n >= 2 and s, t in {1,...,p-1}^n.
Rational conditional_probability(const Fvec& s, const Fvec& t, int z, const Params& params);

// cov(X_{s,z}, X_{t,z}) for the indicator variables of s.u = z and t.u = z.
// Requires s != t.
Rational exact_covariance(const Fvec& s, const Fvec& t, int z, const Params& params);

BucketCounts bucket_counts(const CoeffSet& S, const Fvec& u);

// |S|/p + 2*sqrt(|S|), as a double. Use bucket_bound_holds for comparisons.
double lemma4_bound(long long size, const Params& params);

// Exact test of count <= |S|/p + 2*sqrt(|S|):
// p*count - |S| <= 0, or (p*count - |S|)^2 <= 4*p^2*|S|.
bool bucket_bound_holds(long long count, long long size, int p);

// All p buckets within the bound.
bool all_buckets_bounded(const BucketCounts& counts, long long size, int p);

struct BalancedSearchResult {
    Fvec u;
    bool success;
    BucketCounts counts;       // buckets of the returned u
    long long trials_used;
    bool exhausted_fallback;   // exhaustive scan was used after sampling failed
};

// Random search for a u whose buckets all satisfy the Lemma-4 bound.
// Samples `budget` candidates; if all fail and p^n <= 1e5, scans
// exhaustively. On failure returns the best-seen u (minimal max bucket).
BalancedSearchResult find_balanced_u(const CoeffSet& S, long long budget, std::uint64_t seed);

// Fraction of `trials` uniform draws of u satisfying the all-z bound.
Rational success_frequency(const CoeffSet& S, long long trials, std::uint64_t seed);

// Ordered pairs (s,t), s != t, both in S, that are multiples of each other.
long long count_multiple_pairs(const CoeffSet& S);

}  // namespace mbound
