#include "mbound/rng.hpp"

namespace mbound {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    // rejection sampling on the top of the range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = gen_();
    } while (v >= limit);
    return v % bound;
}

Fvec Rng::vec(const Params& params, int lo) {
    Fvec v(params.n);
    for (int i = 0; i < params.n; ++i)
        v[i] = lo + static_cast<int>(below(static_cast<std::uint64_t>(params.p - lo)));
    return v;
}

Rng trial_stream(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 mix of (seed, index); distinct trials get distinct streams
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return Rng(z);
}

}  // namespace mbound
