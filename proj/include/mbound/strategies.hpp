#pragma once

#include <cstdint>
#include <vector>

#include "mbound/game.hpp"
#include "mbound/gfp.hpp"
#include "mbound/lemma_lab.hpp"
#include "mbound/rng.hpp"

namespace mbound {

// Standard-model learner for F_L(p,n). Accumulates the equations a.x_t = y_t
// and predicts with the lexicographically least coefficient vector consistent
// with them. Every mistake strictly increases the constraint rank, so the
// total is at most n.
class SubspaceLearner : public Learner {
public:
    explicit SubspaceLearner(Params params);
    int predict(const Fvec& x) override;
    void observe(const Round& r) override;
    int rank() const;

private:
    Fvec least_consistent() const;
    Params params_;
    FieldMatrix constraints_;
};

// Presents e_1,...,e_n and answers (guess+1) mod p, then stops. Forces
// exactly n mistakes; always consistent because the coordinates of a are
// independent.
class BasisAdversary : public Adversary {
public:
    explicit BasisAdversary(Params params) : params_(params), t_(0) {}
    std::optional<Fvec> next_query() override;
    Feedback respond(const Fvec& x, int guess) override;

private:
    Params params_;
    int t_;
};

// Maintains an explicit consistent coefficient set and guesses the label of
// the largest bucket (ties: smallest label).
class PluralityLearner : public Learner {
public:
    PluralityLearner(std::vector<Fvec> initial, Params params);
    int predict(const Fvec& x) override;
    void observe(const Round& r) override;
    std::size_t consistent_count() const { return consistent_.size(); }

private:
    std::vector<Fvec> consistent_;
    Params params_;
};

class RandomLearner : public Learner {
public:
    RandomLearner(Params params, std::uint64_t seed) : params_(params), rng_(seed) {}
    int predict(const Fvec&) override { return static_cast<int>(rng_.below(params_.p)); }

private:
    Params params_;
    Rng rng_;
};

// Standard-model adversary: commits to a random hidden a, presents random
// queries, answers truthfully. Consistent by construction.
class RandomConsistentAdversary : public Adversary {
public:
    RandomConsistentAdversary(Params params, std::uint64_t seed, int rounds);
    std::optional<Fvec> next_query() override;
    Feedback respond(const Fvec& x, int guess) override;
    const Fvec& hidden() const { return hidden_; }

private:
    Params params_;
    Rng rng_;
    Fvec hidden_;
    int rounds_left_;
};

struct USearchConfig {
    long long budget = 64;
    std::uint64_t seed = 0;
    // Exhaustive query search when p^n is at most this many candidates.
    long long exhaustive_cap = 100'000;
};

// The bandit adversary of the lower-bound theorem. Starts from
// R = {1,...,p-1}^n, each round presents the query minimizing the maximum
// bucket of R, answers "no" to every guess, removes the guessed bucket, and
// stops once |R| < p^2 ln p.
class Lemma4Adversary : public Adversary {
public:
    Lemma4Adversary(Params params, USearchConfig cfg);
    std::optional<Fvec> next_query() override;
    Feedback respond(const Fvec& x, int guess) override;

    bool threshold_reached() const { return threshold_reached_; }
    // |R_t| before each issued query, then the final size.
    const std::vector<long long>& size_log() const { return size_log_; }

private:
    Fvec pick_query() const;
    Params params_;
    USearchConfig cfg_;
    std::vector<Fvec> consistent_;
    std::uint64_t round_ = 0;
    bool threshold_reached_ = false;
    std::vector<long long> size_log_;
};

// p^2 ln p.
double rt_threshold(const Params& params);
bool below_threshold(long long r_size, const Params& params);

struct RoundBound {
    long long b;
    Params params;
};

// Largest b >= 0 with (1 - (1 + 2/sqrt(ln p))/p)^(b-1) * (p-1)^n >= p^2 ln p.
RoundBound lower_bound_rounds(const Params& params);

}  // namespace mbound
