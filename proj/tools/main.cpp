// Command-line front end: lemma verification sweeps, balanced-vector search,
// game runs, exact opt solving, and round-bound tables.
//
// Exit codes: 0 success/verified, 1 search failure, 2 usage/validation,
// 3 protocol violation.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mbound/game.hpp"
#include "mbound/gfp.hpp"
#include "mbound/hypotheses.hpp"
#include "mbound/lemma_lab.hpp"
#include "mbound/opt_solver.hpp"
#include "mbound/rational.hpp"
#include "mbound/rng.hpp"
#include "mbound/strategies.hpp"

using namespace mbound;
using nlohmann::json;

namespace {

constexpr int kExitSearchFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitProtocol = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << text;
    }
}

Params make_params(int p, int n) {
    if (p > 10'000) throw CLI::ValidationError("--p", "modulus capped at 10000");
    return Params(p, n);
}

json violation_record(const Fvec& s, const Fvec& t, int z, const Rational& expected,
                      const Rational& actual) {
    return json{{"s", s}, {"t", t}, {"z", z}, {"expected", expected.str()}, {"actual", actual.str()}};
}

// ---- lemma sweeps ----------------------------------------------------------

struct LemmaReport {
    json body;
    long long violations = 0;
};

LemmaReport sweep_marginal(const Params& pr) {
    LemmaReport rep;
    long long total = 1;
    for (int i = 0; i < pr.n; ++i) total *= pr.p;
    long long cases = 0;
    json violations = json::array();
    Rational want(BigInt(1), BigInt(pr.p));
    for (long long xi = 1; xi < total; ++xi) {
        Fvec x = index_to_vec(xi, pr.p, pr.n);
        for (int y = 0; y < pr.p; ++y) {
            ++cases;
            Rational got = marginal_probability(x, y, pr);
            if (got != want) {
                ++rep.violations;
                violations.push_back(violation_record(x, x, y, want, got));
            }
        }
    }
    rep.body = {{"lemma", "marginal"}, {"params", {{"p", pr.p}, {"n", pr.n}}},
                {"cases_checked", cases}, {"violations", violations}};
    return rep;
}

// Sweeps all ordered pairs s != t in {1,...,p-1}^n and all z. In "conditional"
// mode the expected value follows the corrected case law; in "falselemma"
// mode the expectation is the uniform 1/p, so the multiples pairs show up as
// counterexamples.
LemmaReport sweep_conditional(const Params& pr, bool corrected) {
    LemmaReport rep;
    long long span = 1;
    for (int i = 0; i < pr.n; ++i) span *= pr.p - 1;
    long long cases = 0;
    json violations = json::array();
    Rational uniform(BigInt(1), BigInt(pr.p));
    for (long long si = 0; si < span; ++si) {
        Fvec s = index_to_vec(si, pr.p, pr.n, 1);
        for (long long ti = 0; ti < span; ++ti) {
            if (si == ti) continue;
            Fvec t = index_to_vec(ti, pr.p, pr.n, 1);
            bool mult = is_multiple_pair(s, t, pr);
            for (int z = 0; z < pr.p; ++z) {
                ++cases;
                Rational got = conditional_probability(s, t, z, pr);
                Rational want = uniform;
                if (corrected && mult) want = z == 0 ? Rational(1) : Rational(0);
                if (got != want) {
                    ++rep.violations;
                    violations.push_back(violation_record(s, t, z, want, got));
                }
            }
        }
    }
    rep.body = {{"lemma", corrected ? "conditional" : "falselemma"},
                {"params", {{"p", pr.p}, {"n", pr.n}}},
                {"cases_checked", cases}, {"violations", violations}};
    return rep;
}

LemmaReport sweep_covariance(const Params& pr) {
    LemmaReport rep;
    long long span = 1;
    for (int i = 0; i < pr.n; ++i) span *= pr.p - 1;
    long long cases = 0;
    json violations = json::array();
    long long p2 = static_cast<long long>(pr.p) * pr.p;
    for (long long si = 0; si < span; ++si) {
        Fvec s = index_to_vec(si, pr.p, pr.n, 1);
        for (long long ti = 0; ti < span; ++ti) {
            if (si == ti) continue;
            Fvec t = index_to_vec(ti, pr.p, pr.n, 1);
            bool mult = is_multiple_pair(s, t, pr);
            for (int z = 0; z < pr.p; ++z) {
                ++cases;
                Rational got = exact_covariance(s, t, z, pr);
                Rational want = !mult ? Rational(0)
                              : z != 0 ? Rational(BigInt(-1), BigInt(p2))
                                       : Rational(BigInt(pr.p - 1), BigInt(p2));
                if (got != want) {
                    ++rep.violations;
                    violations.push_back(violation_record(s, t, z, want, got));
                }
            }
        }
    }
    rep.body = {{"lemma", "covariance"}, {"params", {{"p", pr.p}, {"n", pr.n}}},
                {"cases_checked", cases}, {"violations", violations}};
    return rep;
}

LemmaReport sweep_lemma4(const Params& pr, long long trials, std::uint64_t seed) {
    LemmaReport rep;
    CoeffSet S = full_nonzero_set(pr);
    Rational freq = success_frequency(S, trials, seed);
    json violations = json::array();
    // the paper's guarantee is >= 1/2; flag only a clearly contradicting run
    if (freq < Rational(BigInt(45), BigInt(100))) {
        ++rep.violations;
        violations.push_back({{"observed_frequency", freq.str()}});
    }
    rep.body = {{"lemma", "lemma4"}, {"params", {{"p", pr.p}, {"n", pr.n}}},
                {"cases_checked", trials}, {"success_frequency", freq.str()},
                {"violations", violations}};
    return rep;
}

// ---- strategies ------------------------------------------------------------

std::unique_ptr<Learner> make_learner(const std::string& name, const Params& pr) {
    if (name == "subspace") return std::make_unique<SubspaceLearner>(pr);
    if (name == "plurality")
        return std::make_unique<PluralityLearner>(full_nonzero_set(pr).members, pr);
    if (name.rfind("random:", 0) == 0) {
        std::uint64_t seed = std::stoull(name.substr(7));
        return std::make_unique<RandomLearner>(pr, seed);
    }
    throw CLI::ValidationError("--learner", "unknown learner: " + name);
}

std::unique_ptr<Adversary> make_adversary(const std::string& name, const Params& pr,
                                          std::uint64_t seed, int max_rounds) {
    if (name == "basis-adversary") return std::make_unique<BasisAdversary>(pr);
    if (name == "lemma4-adversary") {
        USearchConfig cfg;
        cfg.seed = seed;
        return std::make_unique<Lemma4Adversary>(pr, cfg);
    }
    if (name.rfind("random:", 0) == 0) {
        std::uint64_t s = std::stoull(name.substr(7));
        return std::make_unique<RandomConsistentAdversary>(pr, s, max_rounds);
    }
    throw CLI::ValidationError("--adversary", "unknown adversary: " + name);
}

ExplicitClass load_class(const std::string& spec) {
    if (spec.rfind("fl:", 0) == 0) {
        std::istringstream ss(spec.substr(3));
        int p = 0, n = 0;
        char colon = 0;
        if (!(ss >> p >> colon >> n) || colon != ':')
            throw CLI::ValidationError("--class", "expected fl:<p>:<n>");
        Params pr = make_params(p, n);
        BigInt count = pow_big(p, n);
        if (count > kOptClassCap)
            throw CLI::ValidationError("--class", "class exceeds the solver cap of 20 functions");
        return tabulate(LinearClass(pr));
    }
    if (spec.rfind("const:", 0) == 0) {
        int k = std::stoi(spec.substr(6));
        if (k < 2 || k > kOptClassCap)
            throw CLI::ValidationError("--class", "const:<k> needs 2 <= k <= 20");
        return constant_class(k);
    }
    std::ifstream f(spec);
    if (!f) throw CLI::ValidationError("--class", "cannot open class file: " + spec);
    ExplicitClass cls = read_explicit_class(f);
    if (cls.size() > kOptClassCap)
        throw CLI::ValidationError("--class", "class exceeds the solver cap of 20 functions");
    return cls;
}

CoeffSet load_coeff_set(const std::string& path, const Params& pr) {
    if (path.empty()) return full_nonzero_set(pr);
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("--set", "cannot open set file: " + path);
    std::vector<Fvec> members;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        Fvec v;
        int e;
        while (ss >> e) v.push_back(e);
        members.push_back(std::move(v));
    }
    return CoeffSet(std::move(members), pr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lower-bound machinery for bandit-feedback online multiclass learning"};
    app.require_subcommand(1);

    int p = 5, n = 2, max_rounds = 10'000;
    long long trials = 2000, budget = 64;
    std::uint64_t seed = 0;
    std::string which, out_path, learner_name, adversary_name, mode_name = "standard";
    std::string class_spec, set_path, format = "json";
    int p_max = 0, n_max = 0;

    auto* lemma = app.add_subcommand("lemma", "verify a probability lemma exhaustively");
    lemma->add_option("--which", which, "marginal|conditional|falselemma|covariance|lemma4")
        ->required();
    lemma->add_option("--p", p)->required();
    lemma->add_option("--n", n)->required();
    lemma->add_option("--trials", trials);
    lemma->add_option("--seed", seed);
    lemma->add_option("--out", out_path);

    auto* findu = app.add_subcommand("findu", "search for a balanced bucket vector u");
    findu->add_option("--p", p)->required();
    findu->add_option("--n", n)->required();
    findu->add_option("--budget", budget);
    findu->add_option("--seed", seed);
    findu->add_option("--set", set_path, "file with one coefficient vector per line");
    findu->add_option("--out", out_path);

    auto* play = app.add_subcommand("play", "run a learner/adversary game");
    play->add_option("--p", p)->required();
    play->add_option("--n", n)->required();
    play->add_option("--mode", mode_name, "standard|bandit");
    play->add_option("--learner", learner_name)->required();
    play->add_option("--adversary", adversary_name)->required();
    play->add_option("--seed", seed);
    play->add_option("--max-rounds", max_rounds);
    play->add_option("--out", out_path, "transcript file (JSON lines)");

    auto* replay = app.add_subcommand("replay", "re-verify a transcript file");
    replay->add_option("--p", p)->required();
    replay->add_option("--n", n)->required();
    replay->add_option("--in", set_path, "transcript file")->required();

    auto* opt = app.add_subcommand("opt", "exact opt_s/opt_b for a small class");
    opt->add_option("--class", class_spec, "fl:<p>:<n>, const:<k>, or a class file")->required();
    opt->add_option("--out", out_path);

    auto* bound = app.add_subcommand("bound", "round lower bound b over (p,n) ranges");
    bound->add_option("--p", p)->required();
    bound->add_option("--n", n)->required();
    bound->add_option("--p-max", p_max, "sweep primes p..p-max (default: p only)");
    bound->add_option("--n-max", n_max, "sweep n..n-max (default: n only)");
    bound->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (lemma->parsed()) {
            Params pr = make_params(p, n);
            BigInt work = pow_big(pr.p - 1, pr.n);
            if (which != "marginal" && work * work * pr.p > 50'000'000)
                throw CLI::ValidationError("--n", "sweep too large for exhaustive mode");
            LemmaReport rep;
            if (which == "marginal") rep = sweep_marginal(pr);
            else if (which == "conditional") rep = sweep_conditional(pr, true);
            else if (which == "falselemma") rep = sweep_conditional(pr, false);
            else if (which == "covariance") rep = sweep_covariance(pr);
            else if (which == "lemma4") rep = sweep_lemma4(pr, trials, seed);
            else throw CLI::ValidationError("--which", "unknown lemma: " + which);
            emit(rep.body.dump(2) + "\n", out_path);
            return rep.violations == 0 ? 0 : kExitSearchFailure;
        }

        if (findu->parsed()) {
            Params pr = make_params(p, n);
            if (budget < 1) {
                json rep = {{"success", false}, {"attempts", json::array()}};
                emit(rep.dump(2) + "\n", out_path);
                return kExitSearchFailure;
            }
            CoeffSet S = load_coeff_set(set_path, pr);
            BalancedSearchResult r = find_balanced_u(S, budget, seed);
            json rep = {{"success", r.success}, {"u", r.u}, {"buckets", r.counts},
                        {"set_size", S.size()},
                        {"bound", lemma4_bound(static_cast<long long>(S.size()), pr)},
                        {"trials_used", r.trials_used}};
            emit(rep.dump(2) + "\n", out_path);
            return r.success ? 0 : kExitSearchFailure;
        }

        if (play->parsed()) {
            Params pr = make_params(p, n);
            FeedbackMode mode;
            if (mode_name == "standard") mode = FeedbackMode::Standard;
            else if (mode_name == "bandit") mode = FeedbackMode::Bandit;
            else throw CLI::ValidationError("--mode", "expected standard or bandit");

            LinearFunctionClass cls(pr);
            auto learner = make_learner(learner_name, pr);
            auto adversary = make_adversary(adversary_name, pr, seed, max_rounds);
            auto* lemma4 = dynamic_cast<Lemma4Adversary*>(adversary.get());

            Transcript t;
            try {
                t = run_game(cls, *learner, *adversary, mode, max_rounds);
            } catch (const ProtocolViolation& e) {
                std::cerr << "protocol violation in round " << e.round << ": " << e.what() << "\n";
                return kExitProtocol;
            }
            if (!out_path.empty()) emit(transcript_to_jsonl(t), out_path);

            json summary = {{"mistakes", t.mistakes()},
                            {"rounds", t.rounds.size()},
                            {"threshold_reached", lemma4 ? lemma4->threshold_reached() : false}};
            if (pr.p >= 3) summary["b_bound"] = lower_bound_rounds(pr).b;
            std::cout << summary.dump() << "\n";
            return verify_transcript(cls, t) ? 0 : kExitProtocol;
        }

        if (replay->parsed()) {
            Params pr = make_params(p, n);
            LinearFunctionClass cls(pr);
            std::ifstream f(set_path);
            if (!f) throw CLI::ValidationError("--in", "cannot open transcript: " + set_path);
            Transcript t = transcript_from_jsonl(f);
            bool ok = verify_transcript(cls, t);
            json summary = {{"rounds", t.rounds.size()}, {"mistakes", t.mistakes()},
                            {"verified", ok}};
            std::cout << summary.dump() << "\n";
            return ok ? 0 : kExitSearchFailure;
        }

        if (opt->parsed()) {
            ExplicitClass cls = load_class(class_spec);
            json rep = {{"class", class_spec}, {"k", cls.k}, {"m", cls.domain_size},
                        {"opt_s", opt_standard(cls)}, {"opt_b", opt_bandit(cls)}};
            emit(rep.dump() + "\n", out_path);
            return 0;
        }

        if (bound->parsed()) {
            if (p_max == 0) p_max = p;
            if (n_max == 0) n_max = n;
            std::ostringstream csv;
            csv << "p,n,b,npln,ratio\n";
            for (int pp = p; pp <= p_max; ++pp) {
                if (!is_prime(pp) || pp < 3) continue;
                for (int nn = n; nn <= n_max; ++nn) {
                    Params pr(pp, nn);
                    long long b = lower_bound_rounds(pr).b;
                    double npln = nn * pp * std::log(static_cast<double>(pp));
                    csv << pp << "," << nn << "," << b << "," << npln << ","
                        << (b / npln) << "\n";
                }
            }
            emit(csv.str(), out_path);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
