#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mbound/gfp.hpp"

namespace mbound {

// The linear class F_L(p,n): all f_a(x) = a.x mod p with a in {0,...,p-1}^n.
// Label set is {0,...,p-1}, so k = p.
struct LinearClass {
    Params params;
    explicit LinearClass(Params pr) : params(pr) {}
};

int eval_linear(const Fvec& a, const Fvec& x, const Params& params);

// An explicit finite multiclass function class: one label row per function,
// one column per domain point. Functions are pairwise distinct.
struct ExplicitClass {
    int k = 0;                                    // label count
    int domain_size = 0;
    std::vector<std::vector<std::uint8_t>> labels;  // labels[f][x]
    std::uint64_t identity_hash = 0;              // content hash, set by finalize()

    void finalize();  // validates ranges/distinctness and computes the hash
    std::size_t size() const { return labels.size(); }
    int eval(std::size_t f, int x) const { return labels[f][x]; }
};

// Tabulates F_L(p,n); functions enumerate a lexicographically, domain
// enumerates x lexicographically. Fails if p^n * p^n exceeds the budget.
ExplicitClass tabulate(const LinearClass& cls, long long budget = 1'000'000);

// k constant functions over a single point (label i for function i).
ExplicitClass constant_class(int k);

// Text format: first line "k m", then one line of m labels per function.
ExplicitClass read_explicit_class(std::istream& in);
void write_explicit_class(std::ostream& out, const ExplicitClass& cls);

struct Constraint {
    int point;
    int label;
    bool equals;  // false means "not-equals" (bandit "no")
};

// Indices of functions satisfying every constraint.
std::vector<int> consistent_subset(const ExplicitClass& cls,
                                   const std::vector<Constraint>& history);

}  // namespace mbound
