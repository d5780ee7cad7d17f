#pragma once

#include <cstdint>
#include <unordered_map>

#include "mbound/hypotheses.hpp"

namespace mbound {

// Largest class the exact solver accepts (bitmask version spaces).
inline constexpr int kOptClassCap = 20;

using VersionMask = std::uint32_t;

VersionMask full_mask(const ExplicitClass& cls);

// Exact minimax mistake values by memoized recursion over version spaces.
// The adversary moves only on points where the version space disagrees;
// every counted branch strictly shrinks it, so values are finite. Memo keys
// include the class identity hash, so one solver serves multiple classes.
class OptSolver {
public:
    int opt_standard(const ExplicitClass& cls, VersionMask mask);
    int opt_bandit(const ExplicitClass& cls, VersionMask mask);

private:
    std::unordered_map<std::uint64_t, int> memo_standard_;
    std::unordered_map<std::uint64_t, int> memo_bandit_;
};

// Convenience entry points over the full class.
int opt_standard(const ExplicitClass& cls);
int opt_bandit(const ExplicitClass& cls);

}  // namespace mbound
