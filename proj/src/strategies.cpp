#include "mbound/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mbound {

namespace {

// Label histogram of {a.x : a in set}.
std::vector<long long> label_buckets(const std::vector<Fvec>& set, const Fvec& x,
                                     const Params& params) {
    std::vector<long long> counts(params.p, 0);
    for (const auto& a : set) ++counts[dot_mod(a, x, params)];
    return counts;
}

}  // namespace

SubspaceLearner::SubspaceLearner(Params params) : params_(params) {
    constraints_.aug = std::vector<int>{};
}

Fvec SubspaceLearner::least_consistent() const {
    // Fix coordinates left to right, taking the smallest value that keeps the
    // system solvable. Leftmost-most-significant, so this is the lex minimum.
    FieldMatrix sys = constraints_;
    Fvec a;
    for (int i = 0; i < params_.n; ++i) {
        for (int v = 0; v < params_.p; ++v) {
            Fvec unit(params_.n, 0);
            unit[i] = 1;
            FieldMatrix trial = sys;
            trial.rows.push_back(unit);
            trial.aug->push_back(v);
            if (rref_mod(trial, params_).consistent) {
                sys = std::move(trial);
                a.push_back(v);
                break;
            }
        }
    }
    if (a.size() != static_cast<std::size_t>(params_.n))
        throw std::logic_error("SubspaceLearner: constraint system inconsistent");
    return a;
}

int SubspaceLearner::predict(const Fvec& x) {
    return dot_mod(least_consistent(), x, params_);
}

void SubspaceLearner::observe(const Round& r) {
    // A bandit "no" carries no equation; everything else pins a.x.
    int y;
    if (r.feedback.is_label) y = r.feedback.label;
    else if (r.feedback.ok) y = r.guess;
    else return;
    constraints_.rows.push_back(r.query);
    constraints_.aug->push_back(y);
    if (!rref_mod(constraints_, params_).consistent)
        throw std::logic_error("SubspaceLearner: observed inconsistent feedback");
}

int SubspaceLearner::rank() const {
    return rref_mod(constraints_, params_).rank;
}

std::optional<Fvec> BasisAdversary::next_query() {
    if (t_ >= params_.n) return std::nullopt;
    Fvec e(params_.n, 0);
    e[t_] = 1;
    ++t_;
    return e;
}

Feedback BasisAdversary::respond(const Fvec&, int guess) {
    return Feedback::make_label((guess + 1) % params_.p);
}

PluralityLearner::PluralityLearner(std::vector<Fvec> initial, Params params)
    : consistent_(std::move(initial)), params_(params) {
    if (consistent_.empty())
        throw std::invalid_argument("PluralityLearner: initial consistent set empty");
}

int PluralityLearner::predict(const Fvec& x) {
    std::vector<long long> counts = label_buckets(consistent_, x, params_);
    int best = 0;
    for (int y = 1; y < params_.p; ++y)
        if (counts[y] > counts[best]) best = y;  // ties keep the smallest label
    return best;
}

void PluralityLearner::observe(const Round& r) {
    std::vector<Fvec> kept;
    for (auto& a : consistent_) {
        int l = dot_mod(a, r.query, params_);
        bool keep;
        if (r.feedback.is_label) keep = l == r.feedback.label;
        else keep = r.feedback.ok ? l == r.guess : l != r.guess;
        if (keep) kept.push_back(std::move(a));
    }
    if (kept.empty())
        throw std::logic_error("PluralityLearner: adversary inconsistent with tracked set");
    consistent_ = std::move(kept);
}

RandomConsistentAdversary::RandomConsistentAdversary(Params params, std::uint64_t seed, int rounds)
    : params_(params), rng_(seed), hidden_(rng_.vec(params)), rounds_left_(rounds) {}

std::optional<Fvec> RandomConsistentAdversary::next_query() {
    if (rounds_left_ <= 0) return std::nullopt;
    --rounds_left_;
    return rng_.vec(params_);
}

Feedback RandomConsistentAdversary::respond(const Fvec& x, int) {
    return Feedback::make_label(dot_mod(hidden_, x, params_));
}

Lemma4Adversary::Lemma4Adversary(Params params, USearchConfig cfg)
    : params_(params), cfg_(cfg) {
    consistent_ = full_nonzero_set(params).members;
}

Fvec Lemma4Adversary::pick_query() const {
    BigInt space = pow_big(params_.p, params_.n);
    Fvec best;
    long long best_max = -1;
    auto consider = [&](const Fvec& u) {
        std::vector<long long> counts = label_buckets(consistent_, u, params_);
        long long mx = *std::max_element(counts.begin(), counts.end());
        if (best_max < 0 || mx < best_max) {
            best_max = mx;
            best = u;
        }
    };
    if (space <= cfg_.exhaustive_cap) {
        const long long total = space.convert_to<long long>();
        // lex order, strict improvement only: ties resolve to the lex-least u
        for (long long i = 0; i < total; ++i) consider(index_to_vec(i, params_.p, params_.n));
    } else {
        for (long long trial = 0; trial < cfg_.budget; ++trial) {
            Rng rng = trial_stream(cfg_.seed, round_ * static_cast<std::uint64_t>(cfg_.budget) +
                                                  static_cast<std::uint64_t>(trial));
            consider(rng.vec(params_));
        }
    }
    const long long size = static_cast<long long>(consistent_.size());
    if (!bucket_bound_holds(best_max, size, params_.p))
        throw std::runtime_error("Lemma4Adversary: no query met the balanced-bucket bound");
    return best;
}

std::optional<Fvec> Lemma4Adversary::next_query() {
    size_log_.push_back(static_cast<long long>(consistent_.size()));
    if (below_threshold(static_cast<long long>(consistent_.size()), params_)) {
        threshold_reached_ = true;
        return std::nullopt;
    }
    return pick_query();
}

Feedback Lemma4Adversary::respond(const Fvec& x, int guess) {
    std::vector<Fvec> kept;
    for (auto& a : consistent_)
        if (dot_mod(a, x, params_) != guess) kept.push_back(std::move(a));
    consistent_ = std::move(kept);
    ++round_;
    return Feedback::make_ok(false);
}

double rt_threshold(const Params& params) {
    double p = params.p;
    return p * p * std::log(p);
}

bool below_threshold(long long r_size, const Params& params) {
    double thr = rt_threshold(params);
    double r = static_cast<double>(r_size);
    if (std::fabs(r - thr) > 0.5) return r < thr;
    // near the boundary, compare squares to pin the rounding
    double p = params.p;
    return r * r < p * p * p * p * std::log(p) * std::log(p);
}

RoundBound lower_bound_rounds(const Params& params) {
    if (params.p < 3)
        throw std::invalid_argument("lower_bound_rounds: p >= 3 required");
    const double p = params.p;
    const double shrink = 1.0 - (1.0 + 2.0 / std::sqrt(std::log(p))) / p;
    const double log_thr = std::log(p * p * std::log(p));
    const double log_start = params.n * std::log(p - 1.0);
    const double log_shrink = std::log(shrink);  // negative

    auto holds = [&](long long b) {
        return (b - 1) * log_shrink + log_start >= log_thr;
    };
    long long b = 0;
    while (holds(b + 1)) ++b;
    return RoundBound{b, params};
}

}  // namespace mbound
