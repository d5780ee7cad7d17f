#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "mbound/lemma_lab.hpp"
#include "mbound/rng.hpp"

using namespace mbound;

namespace {

Rational frac(long long n, long long d) { return Rational(BigInt(n), BigInt(d)); }

// Conditional probability by direct enumeration over all u, independent of
// the row-reduction path.
Rational naive_conditional(const Fvec& s, const Fvec& t, int z, const Params& pr) {
    long long total = 1;
    for (int i = 0; i < pr.n; ++i) total *= pr.p;
    long long joint = 0, cond = 0;
    for (long long idx = 0; idx < total; ++idx) {
        Fvec u = index_to_vec(idx, pr.p, pr.n);
        if (dot_mod(s, u, pr) != z) continue;
        ++cond;
        if (dot_mod(t, u, pr) == z) ++joint;
    }
    return Rational(BigInt(joint), BigInt(cond));
}

CoeffSet random_subset(const Params& pr, Rng& rng) {
    CoeffSet full = full_nonzero_set(pr);
    std::vector<Fvec> members;
    for (auto& m : full.members)
        if (rng.below(2) == 0) members.push_back(std::move(m));
    return CoeffSet(std::move(members), pr);
}

}  // namespace

TEST_CASE("marginal_probability") {
    CHECK(marginal_probability({1, 1}, 3, Params(5, 2)) == frac(1, 5));
    CHECK(marginal_probability({0, 0}, 0, Params(5, 2)) == frac(1, 1));
    CHECK(marginal_probability({0, 0}, 1, Params(5, 2)) == frac(0, 1));
    for (int p : {2, 3, 5}) {
        for (int n : {2, 3}) {
            Params pr(p, n);
            long long total = 1;
            for (int i = 0; i < n; ++i) total *= p;
            for (long long xi = 1; xi < total; ++xi) {
                Fvec x = index_to_vec(xi, p, n);
                for (int y = 0; y < p; ++y)
                    CHECK(marginal_probability(x, y, pr) == frac(1, p));
            }
        }
    }
}

TEST_CASE("conditional_probability paper cases") {
    Params pr(5, 2);
    CHECK(conditional_probability({1, 1}, {2, 2}, 0, pr) == frac(1, 1));
    CHECK(conditional_probability({1, 1}, {2, 2}, 1, pr) == frac(0, 1));
    CHECK(conditional_probability({1, 1}, {1, 2}, 3, pr) == frac(1, 5));
    CHECK_THROWS_AS(conditional_probability({1}, {1}, 0, Params(5, 1)), std::invalid_argument);
    CHECK_THROWS_AS(conditional_probability({0, 1}, {1, 2}, 0, pr), std::invalid_argument);
}

TEST_CASE("conditional_probability case law, exhaustive small fields") {
    for (int p : {3, 5, 7}) {
        Params pr(p, 2);
        long long span = static_cast<long long>(p - 1) * (p - 1);
        for (long long si = 0; si < span; ++si) {
            Fvec s = index_to_vec(si, p, 2, 1);
            for (long long ti = 0; ti < span; ++ti) {
                if (si == ti) continue;
                Fvec t = index_to_vec(ti, p, 2, 1);
                bool mult = is_multiple_pair(s, t, pr);
                for (int z = 0; z < p; ++z) {
                    Rational got = conditional_probability(s, t, z, pr);
                    if (!mult) CHECK(got == frac(1, p));
                    else CHECK(got == (z == 0 ? frac(1, 1) : frac(0, 1)));
                }
            }
        }
    }
}

TEST_CASE("conditional_probability agrees with naive enumeration") {
    Rng rng(3);
    for (int p : {3, 5}) {
        for (int n : {2, 3}) {
            Params pr(p, n);
            for (int iter = 0; iter < 30; ++iter) {
                Fvec s = rng.vec(pr, 1);
                Fvec t = rng.vec(pr, 1);
                int z = static_cast<int>(rng.below(p));
                CHECK(conditional_probability(s, t, z, pr) == naive_conditional(s, t, z, pr));
            }
        }
    }
}

TEST_CASE("exact_covariance paper cases") {
    Params pr(5, 2);
    CHECK(exact_covariance({1, 1}, {1, 2}, 2, pr) == frac(0, 1));
    CHECK(exact_covariance({1, 1}, {2, 2}, 1, pr) == frac(-1, 25));
    CHECK(exact_covariance({1, 1}, {2, 2}, 0, pr) == frac(4, 25));
    CHECK_THROWS_AS(exact_covariance({1, 1}, {1, 1}, 0, pr), std::invalid_argument);
}

TEST_CASE("exact_covariance three-case closed form, exhaustive") {
    for (int p : {3, 5}) {
        Params pr(p, 2);
        long long span = static_cast<long long>(p - 1) * (p - 1);
        for (long long si = 0; si < span; ++si) {
            Fvec s = index_to_vec(si, p, 2, 1);
            for (long long ti = 0; ti < span; ++ti) {
                if (si == ti) continue;
                Fvec t = index_to_vec(ti, p, 2, 1);
                bool mult = is_multiple_pair(s, t, pr);
                for (int z = 0; z < p; ++z) {
                    Rational got = exact_covariance(s, t, z, pr);
                    Rational want = !mult ? frac(0, 1)
                                  : z != 0 ? frac(-1, static_cast<long long>(p) * p)
                                           : frac(p - 1, static_cast<long long>(p) * p);
                    CHECK(got == want);
                }
            }
        }
    }
}

TEST_CASE("variance of bucket sizes stays under the Chebyshev inputs") {
    // var(|T_z|) = sum var + sum cov; must be < |S|/p for z != 0, < |S| for z = 0
    Rng rng(5);
    Params pr(5, 2);
    for (int iter = 0; iter < 10; ++iter) {
        CoeffSet S = random_subset(pr, rng);
        if (S.size() < 2) continue;
        long long sz = static_cast<long long>(S.size());
        for (int z = 0; z < pr.p; ++z) {
            Rational var = Rational(sz) * (frac(1, pr.p) - frac(1, pr.p * pr.p));
            for (std::size_t i = 0; i < S.members.size(); ++i)
                for (std::size_t j = 0; j < S.members.size(); ++j)
                    if (i != j) var = var + exact_covariance(S.members[i], S.members[j], z, pr);
            if (z != 0) CHECK(var < frac(sz, pr.p));
            else CHECK(var < Rational(sz));
        }
    }
}

TEST_CASE("bucket_counts") {
    Params pr(5, 2);
    CoeffSet S = full_nonzero_set(pr);
    REQUIRE(S.size() == 16);

    BucketCounts zero_u = bucket_counts(S, {0, 0});
    CHECK(zero_u == BucketCounts{16, 0, 0, 0, 0});

    CHECK(bucket_counts(CoeffSet({{1, 1}}, pr), {1, 1}) == BucketCounts{0, 0, 1, 0, 0});
    CHECK(bucket_counts(S, {1, 1}) == BucketCounts{4, 3, 3, 3, 3});
}

TEST_CASE("bucket_counts sums to |S|") {
    Rng rng(9);
    Params pr(7, 2);
    for (int iter = 0; iter < 20; ++iter) {
        CoeffSet S = random_subset(pr, rng);
        BucketCounts c = bucket_counts(S, rng.vec(pr));
        long long sum = 0;
        for (long long v : c) sum += v;
        CHECK(sum == static_cast<long long>(S.size()));
    }
}

TEST_CASE("lemma4_bound") {
    CHECK(lemma4_bound(16, Params(5, 2)) == doctest::Approx(11.2));
    CHECK(lemma4_bound(0, Params(5, 2)) == 0.0);
    CHECK(lemma4_bound(1000, Params(11, 3)) == doctest::Approx(1000.0 / 11 + 2 * std::sqrt(1000.0)));
}

TEST_CASE("bucket_bound_holds matches the float bound away from ties") {
    for (int p : {3, 5, 11}) {
        Params pr(p, 2);
        for (long long size : {0LL, 1LL, 16LL, 100LL, 1000LL}) {
            double bound = lemma4_bound(size, pr);
            for (long long count = 0; count <= size; ++count) {
                bool exact = bucket_bound_holds(count, size, p);
                if (std::fabs(count - bound) > 1e-6)
                    CHECK(exact == (count < bound));
            }
        }
    }
}

TEST_CASE("find_balanced_u") {
    Params pr(5, 2);
    auto empty = find_balanced_u(CoeffSet({}, pr), 4, 0);
    CHECK(empty.success);
    CHECK(empty.u == Fvec{0, 0});

    auto single = find_balanced_u(CoeffSet({{1, 1}}, pr), 4, 0);
    CHECK(single.success);

    Params pr3(5, 3);
    auto big = find_balanced_u(full_nonzero_set(pr3), 64, 0);
    CHECK(big.success);
    CHECK(big.trials_used <= 64);
    CHECK(all_buckets_bounded(big.counts, 64, 5));
    CHECK(bucket_counts(full_nonzero_set(pr3), big.u) == big.counts);
}

TEST_CASE("success_frequency") {
    Params pr(5, 3);
    CHECK(success_frequency(CoeffSet({}, pr), 10, 0) == Rational(1));
    CHECK(success_frequency(CoeffSet({{1, 1}}, Params(5, 2)), 50, 0) == Rational(1));

    Rational freq = success_frequency(full_nonzero_set(Params(5, 2)), 400, 1);
    CHECK(freq >= frac(45, 100));
}

TEST_CASE("count_multiple_pairs") {
    Params pr(5, 2);
    CHECK(count_multiple_pairs(CoeffSet({{1, 1}, {2, 2}}, pr)) == 2);
    CHECK(count_multiple_pairs(CoeffSet({{1, 1}, {1, 2}}, pr)) == 0);
    CoeffSet full = full_nonzero_set(pr);
    CHECK(count_multiple_pairs(full) == 48);  // (p-2)|S| with every multiple inside S

    Rng rng(13);
    for (int iter = 0; iter < 100; ++iter) {
        CoeffSet S = random_subset(pr, rng);
        CHECK(count_multiple_pairs(S) <= (pr.p - 2) * static_cast<long long>(S.size()));
    }
}
