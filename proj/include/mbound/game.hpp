#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mbound/gfp.hpp"

namespace mbound {

enum class FeedbackMode { Standard, Bandit };

// Standard feedback carries the true label; bandit feedback carries yes/no.
struct Feedback {
    bool is_label;
    int label = 0;
    bool ok = false;

    static Feedback make_label(int y) { return Feedback{true, y, false}; }
    static Feedback make_ok(bool v) { return Feedback{false, 0, v}; }
};

struct Round {
    Fvec query;
    int guess;
    Feedback feedback;

    bool mistake() const {
        return feedback.is_label ? feedback.label != guess : !feedback.ok;
    }
};

struct Transcript {
    FeedbackMode mode = FeedbackMode::Standard;
    std::vector<Round> rounds;

    // Always recomputed from the rounds, never cached.
    int mistakes() const;
};

// A finite multiclass class whose domain points are field vectors.
class FunctionClass {
public:
    virtual ~FunctionClass() = default;
    virtual std::size_t size() const = 0;
    virtual int eval(std::size_t member, const Fvec& x) const = 0;
};

// F_L(p,n) with members enumerated by coefficient vector, lexicographically.
class LinearFunctionClass : public FunctionClass {
public:
    explicit LinearFunctionClass(Params params);
    std::size_t size() const override { return static_cast<std::size_t>(count_); }
    int eval(std::size_t member, const Fvec& x) const override;
    const Params& params() const { return params_; }

private:
    Params params_;
    long long count_;
};

class Learner {
public:
    virtual ~Learner() = default;
    virtual void start() {}
    virtual int predict(const Fvec& x) = 0;
    virtual void observe(const Round&) {}
};

class Adversary {
public:
    virtual ~Adversary() = default;
    virtual void start() {}
    // nullopt signals end of game.
    virtual std::optional<Fvec> next_query() = 0;
    // Called after seeing the learner's guess (adaptive).
    virtual Feedback respond(const Fvec& x, int guess) = 0;
    virtual void observe(const Round&) {}
};

struct ProtocolViolation : std::runtime_error {
    int round;
    ProtocolViolation(int round_, const std::string& what);
};

// Whether feedback `f` on (x, guess) is what class member `m` would induce.
bool feedback_consistent(const FunctionClass& cls, std::size_t m, const Round& r);

// Runs the round loop: adversary emits x_t, learner guesses, adversary
// answers, both observe. The engine re-validates after every answer that
// some class member remains consistent; otherwise ProtocolViolation.
Transcript run_game(const FunctionClass& cls, Learner& learner, Adversary& adversary,
                    FeedbackMode mode, int max_rounds);

// True iff at least one class member is consistent with every round.
bool verify_transcript(const FunctionClass& cls, const Transcript& t);

// JSON lines, one round per line:
// {"t": i, "x": [..], "guess": g, "feedback": {"label": y} | {"ok": bool}}
std::string transcript_to_jsonl(const Transcript& t);
Transcript transcript_from_jsonl(std::istream& in);

}  // namespace mbound
