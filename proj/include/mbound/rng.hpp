#pragma once

#include <cstdint>
#include <random>

#include "mbound/gfp.hpp"

namespace mbound {

// Seedable generator used by every randomized operation. The engine is
// std::mt19937_64; bounded draws use rejection sampling so the stream of
// values depends only on the seed, not on a library's distribution
// implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform on {0,...,bound-1}.
    std::uint64_t below(std::uint64_t bound);

    // Uniform vector in {lo,...,p-1}^n.
    Fvec vec(const Params& params, int lo = 0);

private:
    std::mt19937_64 gen_;
};

// Independent stream for trial `index` of a run seeded with `seed`, so
// per-trial results do not depend on evaluation order.
Rng trial_stream(std::uint64_t seed, std::uint64_t index);

}  // namespace mbound
