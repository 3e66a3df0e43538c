#ifndef MVGROWTH_RNG_HPP
#define MVGROWTH_RNG_HPP

#include <cstdint>
#include <random>

namespace mvg {

/// splitmix64 step; used to derive independent per-task seeds so parallel
/// execution preserves the seed -> result mapping.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(uint64_t seed, uint64_t stream = 0) {
    return std::mt19937_64(mix_seed(seed, stream));
}

}  // namespace mvg

#endif
