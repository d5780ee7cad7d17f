#include "mbound/opt_solver.hpp"

#include <bit>
#include <stdexcept>

namespace mbound {

namespace {

std::uint64_t memo_key(const ExplicitClass& cls, VersionMask mask) {
    return cls.identity_hash ^ (static_cast<std::uint64_t>(mask) * 0x9e3779b97f4a7c15ULL);
}

void check_solvable(const ExplicitClass& cls, VersionMask mask) {
    if (cls.size() > kOptClassCap)
        throw std::invalid_argument("opt solver: class exceeds size cap");
    if (mask == 0) throw std::invalid_argument("opt solver: empty version space");
}

// Labels realized by the version space at x, plus whether it disagrees there.
struct PointView {
    VersionMask by_label[256];
    int realized = 0;
};

PointView view_at(const ExplicitClass& cls, VersionMask mask, int x) {
    PointView v{};
    for (int f = 0; f < static_cast<int>(cls.size()); ++f) {
        if (!(mask & (VersionMask{1} << f))) continue;
        int l = cls.eval(f, x);
        if (v.by_label[l] == 0) ++v.realized;
        v.by_label[l] |= VersionMask{1} << f;
    }
    return v;
}

}  // namespace

VersionMask full_mask(const ExplicitClass& cls) {
    if (cls.size() > kOptClassCap)
        throw std::invalid_argument("opt solver: class exceeds size cap");
    return (VersionMask{1} << cls.size()) - 1;
}

int OptSolver::opt_standard(const ExplicitClass& cls, VersionMask mask) {
    check_solvable(cls, mask);
    if (std::has_single_bit(mask)) return 0;
    auto it = memo_standard_.find(memo_key(cls, mask));
    if (it != memo_standard_.end()) return it->second;

    int value = 0;
    for (int x = 0; x < cls.domain_size; ++x) {
        PointView v = view_at(cls, mask, x);
        if (v.realized < 2) continue;  // unanimous point, adversary gains nothing
        // learner picks a guess, adversary then any realized true label
        int best_guess = -1;
        for (int g = 0; g < cls.k; ++g) {
            if (v.by_label[g] == 0) continue;  // dominated guess
            int worst = 0;
            for (int y = 0; y < cls.k; ++y) {
                if (v.by_label[y] == 0) continue;
                int branch = (y != g ? 1 : 0) + opt_standard(cls, v.by_label[y]);
                worst = std::max(worst, branch);
            }
            if (best_guess < 0 || worst < best_guess) best_guess = worst;
        }
        value = std::max(value, best_guess);
    }
    memo_standard_[memo_key(cls, mask)] = value;
    return value;
}

int OptSolver::opt_bandit(const ExplicitClass& cls, VersionMask mask) {
    check_solvable(cls, mask);
    if (std::has_single_bit(mask)) return 0;
    auto it = memo_bandit_.find(memo_key(cls, mask));
    if (it != memo_bandit_.end()) return it->second;

    int value = 0;
    for (int x = 0; x < cls.domain_size; ++x) {
        PointView v = view_at(cls, mask, x);
        if (v.realized < 2) continue;
        int best_guess = -1;
        for (int g = 0; g < cls.k; ++g) {
            VersionMask yes = v.by_label[g];
            if (yes == 0) continue;  // unrealized guesses are dominated
            VersionMask no = mask & ~yes;
            // x disagrees, so both branches are nonempty
            int worst = std::max(opt_bandit(cls, yes), 1 + opt_bandit(cls, no));
            if (best_guess < 0 || worst < best_guess) best_guess = worst;
        }
        value = std::max(value, best_guess);
    }
    memo_bandit_[memo_key(cls, mask)] = value;
    return value;
}

int opt_standard(const ExplicitClass& cls) {
    OptSolver s;
    return s.opt_standard(cls, full_mask(cls));
}

int opt_bandit(const ExplicitClass& cls) {
    OptSolver s;
    return s.opt_bandit(cls, full_mask(cls));
}

}  // namespace mbound
