#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cutgap {

// All randomness in the project flows through per-object seeds derived from a
// master seed and a structural address, so that samples are reproducible and
// independent of evaluation order or thread count.
//
// The derivation is fixed so alternate implementations can reproduce it:
//   h <- splitmix64_next(master)
//   for each component c (int64): h <- splitmix64_next(h ^ (uint64)(c + 1))
//   seed(master, components) = splitmix64_next(h ^ (uint64)len(components))
// where splitmix64_next advances the standard SplitMix64 generator once and
// returns its output.
uint64_t splitmix64_next(uint64_t& state);

uint64_t derive_seed(uint64_t master, std::span<const int> components);

/// Deterministic 64-bit stream. uniform_below uses rejection sampling, so the
/// result does not depend on the platform's integer distribution.
class SeedStream {
  public:
    explicit SeedStream(uint64_t seed) : state_(seed) {}

    uint64_t next() { return splitmix64_next(state_); }

    /// Uniform value in [0, bound), bound >= 1.
    uint64_t uniform_below(uint64_t bound);

    /// Fisher-Yates selection of `count` distinct values from [0, universe),
    /// returned as a bitmask. Requires universe <= 32.
    uint32_t choose_mask(int universe, int count);

  private:
    uint64_t state_;
};

}  // namespace cutgap
