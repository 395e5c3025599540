#pragma once

// Portable random number generation.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Standard distributions are not portable across library
// implementations, so every variate drawn here is derived from raw engine
// output by the routines below. Same seed, same results, on any platform.

#include <cstdint>
#include <random>

namespace hyperphase {

/// SplitMix64 finalizer: a bijective 64-bit mixing function.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of trial `index` in an experiment based at `base_seed`.
inline std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t index) noexcept {
    return splitmix64(base_seed + index);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound); bound must be positive. Lemire's
    /// multiply-shift with rejection, so exactly unbiased.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    /// Standard normal (Box-Muller).
    double normal();

    /// Binomial(trials, p) variate. Inversion from the mode when the mean
    /// is at most 1e7 and trials <= 2^53, normal approximation with
    /// continuity correction otherwise.
    std::uint64_t binomial(std::uint64_t trials, double p);

private:
    std::mt19937_64 engine_;
};

}  // namespace hyperphase
