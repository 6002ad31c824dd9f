#pragma once

#include <cstdint>

namespace pnw {

/// SplitMix64 stream with a fixed per-trial seed derivation.
///
/// Reproducibility contract (stable across releases):
///   gamma       = 0x9E3779B97F4A7C15
///   mix(z)      = z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///                 z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31
///   trial state = mix(master_seed + gamma * (trial_index + 1))
///   next()      : state += gamma; return mix(state)
///   uniform()   : (next() >> 11) * 2^-53, in [0, 1)
/// Bit k of a sampled word is 1 iff the k-th uniform() draw (one draw per
/// position, in order) is below p_k.
class TrialRng {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    TrialRng(std::uint64_t master_seed, std::uint64_t trial_index)
        : state_(mix(master_seed + kGamma * (trial_index + 1))) {}

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t next() noexcept {
        state_ += kGamma;
        return mix(state_);
    }

    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept;

private:
    std::uint64_t state_;
};

}  // namespace pnw
