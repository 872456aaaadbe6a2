#pragma once

#include <cstdint>

namespace rotalg {

// Counter-based deterministic generator (splitmix64 finalizer).  Stateless:
// stream(seed, i) is reproducible regardless of evaluation order, which keeps
// sampled reports byte-identical across runs and thread layouts.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline double uniform01(std::uint64_t seed, std::uint64_t index) {
    // 53 random bits into [0,1)
    return static_cast<double>(splitmix64(seed ^ (index * 0xd1342543de82ef95ULL)) >> 11) *
           0x1.0p-53;
}

}  // namespace rotalg
