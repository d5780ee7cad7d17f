#include "mbound/game.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mbound {

using nlohmann::json;

int Transcript::mistakes() const {
    return static_cast<int>(
        std::count_if(rounds.begin(), rounds.end(), [](const Round& r) { return r.mistake(); }));
}

LinearFunctionClass::LinearFunctionClass(Params params) : params_(params) {
    BigInt count = pow_big(params.p, params.n);
    if (count > 1'000'000)
        throw std::invalid_argument("LinearFunctionClass: p^n too large for game play");
    count_ = count.convert_to<long long>();
}

int LinearFunctionClass::eval(std::size_t member, const Fvec& x) const {
    Fvec a = index_to_vec(static_cast<long long>(member), params_.p, params_.n);
    return dot_mod(a, x, params_);
}

ProtocolViolation::ProtocolViolation(int round_, const std::string& what)
    : std::runtime_error(what), round(round_) {}

bool feedback_consistent(const FunctionClass& cls, std::size_t m, const Round& r) {
    int l = cls.eval(m, r.query);
    if (r.feedback.is_label) return l == r.feedback.label;
    return r.feedback.ok ? l == r.guess : l != r.guess;
}

Transcript run_game(const FunctionClass& cls, Learner& learner, Adversary& adversary,
                    FeedbackMode mode, int max_rounds) {
    if (max_rounds < 0) throw std::invalid_argument("run_game: max_rounds >= 0 required");

    learner.start();
    adversary.start();

    // Consistent members are tracked incrementally; feedback that empties the
    // set is a protocol violation.
    std::vector<char> alive(cls.size(), 1);
    std::size_t alive_count = cls.size();

    Transcript t;
    t.mode = mode;
    for (int round = 0; round < max_rounds; ++round) {
        std::optional<Fvec> query = adversary.next_query();
        if (!query) break;

        int guess = learner.predict(*query);
        Feedback fb = adversary.respond(*query, guess);
        if (fb.is_label != (mode == FeedbackMode::Standard))
            throw ProtocolViolation(round, "feedback kind does not match mode");

        Round r{*query, guess, fb};
        for (std::size_t m = 0; m < cls.size(); ++m) {
            if (alive[m] && !feedback_consistent(cls, m, r)) {
                alive[m] = 0;
                --alive_count;
            }
        }
        if (alive_count == 0)
            throw ProtocolViolation(round, "adversary feedback inconsistent with every class member");

        t.rounds.push_back(r);
        learner.observe(r);
        adversary.observe(r);
    }
    return t;
}

bool verify_transcript(const FunctionClass& cls, const Transcript& t) {
    for (std::size_t m = 0; m < cls.size(); ++m) {
        bool ok = true;
        for (const auto& r : t.rounds)
            if (!feedback_consistent(cls, m, r)) { ok = false; break; }
        if (ok) return true;
    }
    return cls.size() == 0 ? t.rounds.empty() : false;
}

std::string transcript_to_jsonl(const Transcript& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.rounds.size(); ++i) {
        const Round& r = t.rounds[i];
        json line;
        line["t"] = i;
        line["x"] = r.query;
        line["guess"] = r.guess;
        if (r.feedback.is_label)
            line["feedback"] = {{"label", r.feedback.label}};
        else
            line["feedback"] = {{"ok", r.feedback.ok}};
        out << line.dump() << "\n";
    }
    return out.str();
}

Transcript transcript_from_jsonl(std::istream& in) {
    Transcript t;
    std::string line;
    bool mode_known = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        Round r;
        r.query = j.at("x").get<Fvec>();
        r.guess = j.at("guess").get<int>();
        const json& fb = j.at("feedback");
        if (fb.contains("label"))
            r.feedback = Feedback::make_label(fb.at("label").get<int>());
        else
            r.feedback = Feedback::make_ok(fb.at("ok").get<bool>());
        if (!mode_known) {
            t.mode = r.feedback.is_label ? FeedbackMode::Standard : FeedbackMode::Bandit;
            mode_known = true;
        }
        t.rounds.push_back(std::move(r));
    }
    return t;
}

}  // namespace mbound
