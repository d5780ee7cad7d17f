#include "doctest.h"

#include <sstream>

#include "mbound/game.hpp"
#include "mbound/strategies.hpp"

using namespace mbound;

namespace {

struct FixedLearner : Learner {
    int label;
    explicit FixedLearner(int l) : label(l) {}
    int predict(const Fvec&) override { return label; }
};

// Truthful standard-model adversary for a fixed hidden coefficient vector,
// playing a scripted query sequence.
struct ScriptedAdversary : Adversary {
    Params params;
    Fvec hidden;
    std::vector<Fvec> queries;
    std::size_t next = 0;
    bool bandit = false;

    ScriptedAdversary(Params pr, Fvec h, std::vector<Fvec> qs)
        : params(pr), hidden(std::move(h)), queries(std::move(qs)) {}

    std::optional<Fvec> next_query() override {
        if (next >= queries.size()) return std::nullopt;
        return queries[next++];
    }
    Feedback respond(const Fvec& x, int guess) override {
        int y = dot_mod(hidden, x, params);
        return bandit ? Feedback::make_ok(guess == y) : Feedback::make_label(y);
    }
};

struct YesAdversary : Adversary {
    Params params;
    int rounds;
    explicit YesAdversary(Params pr, int r) : params(pr), rounds(r) {}
    std::optional<Fvec> next_query() override {
        if (rounds-- <= 0) return std::nullopt;
        return Fvec(params.n, 0);
    }
    Feedback respond(const Fvec&, int guess) override {
        // yes to guess 0 only; f_0 maps the zero query to 0
        return Feedback::make_ok(guess == 0);
    }
};

}  // namespace

TEST_CASE("run_game with max_rounds 0") {
    LinearFunctionClass cls(Params(2, 1));
    FixedLearner learner(0);
    BasisAdversary adv(Params(2, 1));
    Transcript t = run_game(cls, learner, adv, FeedbackMode::Standard, 0);
    CHECK(t.rounds.empty());
    CHECK(t.mistakes() == 0);
}

TEST_CASE("standard game, truthful adversary, one mistake") {
    Params pr(2, 1);
    LinearFunctionClass cls(pr);
    FixedLearner learner(0);
    ScriptedAdversary adv(pr, {1}, {{1}});
    Transcript t = run_game(cls, learner, adv, FeedbackMode::Standard, 10);
    REQUIRE(t.rounds.size() == 1);
    CHECK(t.mistakes() == 1);  // f_1(1) = 1, learner said 0
    CHECK(verify_transcript(cls, t));
}

TEST_CASE("bandit game, all-yes answers, zero mistakes") {
    Params pr(3, 2);
    LinearFunctionClass cls(pr);
    FixedLearner learner(0);
    YesAdversary adv(pr, 5);
    Transcript t = run_game(cls, learner, adv, FeedbackMode::Bandit, 10);
    CHECK(t.rounds.size() == 5);
    CHECK(t.mistakes() == 0);
    CHECK(verify_transcript(cls, t));
}

TEST_CASE("inconsistent feedback raises a protocol violation") {
    Params pr(2, 1);
    LinearFunctionClass cls(pr);
    FixedLearner learner(0);

    struct LiarAdversary : Adversary {
        int t = 0;
        std::optional<Fvec> next_query() override { return Fvec{1}; }
        Feedback respond(const Fvec&, int) override {
            return Feedback::make_label(t++ == 0 ? 0 : 1);  // contradicts itself on x=1
        }
    } adv;
    CHECK_THROWS_AS(run_game(cls, learner, adv, FeedbackMode::Standard, 5), ProtocolViolation);
}

TEST_CASE("verify_transcript") {
    Params pr(2, 1);
    LinearFunctionClass cls(pr);

    Transcript empty;
    CHECK(verify_transcript(cls, empty));

    Transcript bad;
    bad.mode = FeedbackMode::Standard;
    bad.rounds.push_back({{1}, 0, Feedback::make_label(0)});
    bad.rounds.push_back({{1}, 0, Feedback::make_label(1)});
    CHECK_FALSE(verify_transcript(cls, bad));
}

TEST_CASE("run_game output always verifies") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Params pr(5, 2);
        LinearFunctionClass cls(pr);
        RandomLearner learner(pr, seed);
        RandomConsistentAdversary adv(pr, seed + 100, 8);
        Transcript t = run_game(cls, learner, adv, FeedbackMode::Standard, 20);
        CHECK(verify_transcript(cls, t));
    }
}

TEST_CASE("transcript JSON lines round trip") {
    Params pr(3, 2);
    LinearFunctionClass cls(pr);
    FixedLearner learner(1);
    ScriptedAdversary adv(pr, {1, 2}, {{1, 0}, {0, 1}, {2, 2}});
    adv.bandit = true;
    Transcript t = run_game(cls, learner, adv, FeedbackMode::Bandit, 10);

    std::stringstream ss(transcript_to_jsonl(t));
    Transcript back = transcript_from_jsonl(ss);
    CHECK(back.mode == FeedbackMode::Bandit);
    REQUIRE(back.rounds.size() == t.rounds.size());
    for (std::size_t i = 0; i < t.rounds.size(); ++i) {
        CHECK(back.rounds[i].query == t.rounds[i].query);
        CHECK(back.rounds[i].guess == t.rounds[i].guess);
        CHECK(back.rounds[i].mistake() == t.rounds[i].mistake());
    }
    CHECK(back.mistakes() == t.mistakes());
}

TEST_CASE("bandit with two labels is as informative as standard feedback") {
    // With k = 2 a "no" pins the true label; a learner drawing that inference
    // should match its standard-model self against the same adversary script.
    Params pr(2, 2);
    LinearFunctionClass cls(pr);
    std::vector<Fvec> script = {{1, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 1}};

    struct InferringLearner : Learner {
        SubspaceLearner inner;
        explicit InferringLearner(Params p) : inner(p) {}
        int predict(const Fvec& x) override { return inner.predict(x); }
        void observe(const Round& r) override {
            Round translated = r;
            if (!r.feedback.is_label && !r.feedback.ok)
                translated.feedback = Feedback::make_label(1 - r.guess);
            inner.observe(translated);
        }
    };

    ScriptedAdversary std_adv(pr, {1, 1}, script);
    SubspaceLearner std_learner(pr);
    Transcript st = run_game(cls, std_learner, std_adv, FeedbackMode::Standard, 10);

    ScriptedAdversary bandit_adv(pr, {1, 1}, script);
    bandit_adv.bandit = true;
    InferringLearner bandit_learner(pr);
    Transcript bt = run_game(cls, bandit_learner, bandit_adv, FeedbackMode::Bandit, 10);

    CHECK(st.mistakes() == bt.mistakes());
}
