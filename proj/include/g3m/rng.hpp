#pragma once

#include <cstdint>

#include "g3m/normal.hpp"

namespace g3m {

// SplitMix64 step (Steele, Lea & Flood 2014). Used both to mix the user
// seed with a path index and as the per-path generator, so every path's
// stream is a pure function of (seed, path_index).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic per-path stream of standard normal variates.
/// Uniforms come from SplitMix64, normals from the inverse CDF, so the
/// draws are fully specified by (seed, path_index, draw ordinal).
class PathRng {
public:
    PathRng(std::uint64_t seed, std::uint64_t path_index) {
        state_ = seed ^ 0x5851f42d4c957f2dULL;
        splitmix64(state_);
        state_ ^= 0x9e3779b97f4a7c15ULL * (path_index + 1);
        splitmix64(state_);
    }

    // Uniform on the open interval (0,1); never returns an endpoint.
    double uniform() {
        const std::uint64_t bits = splitmix64(state_);
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
    }

    double gaussian() { return norm_inv(uniform()); }

private:
    std::uint64_t state_;
};

}  // namespace g3m
