#pragma once

#include <array>
#include <cstdint>

// Counter-based RNG: Philox-4x64 with 10 rounds, bit-compatible with
// numpy.random.Philox (verified against its raw output in the tests).
// Substreams are cheap: every (seed, stream, index) triple owns an
// independent key, so work can be partitioned across workers in any order
// without changing the drawn values.

namespace vapormem {

class Philox4x64 {
  public:
    explicit Philox4x64(std::uint64_t key0, std::uint64_t key1 = 0)
        : key_{key0, key1} {}

    // One 4-word block for a given 256-bit counter value (low word given,
    // high words zero).
    std::array<std::uint64_t, 4> block(std::uint64_t counter_lo) const;

    std::uint64_t next_u64();

    // Uniform double in [0, 1), 53-bit resolution.
    double next_double();

    // Standard normal pair via Box-Muller (two uniforms per pair).
    std::array<double, 2> next_normal_pair();

  private:
    std::array<std::uint64_t, 2> key_;
    std::uint64_t counter_ = 0;
    std::array<std::uint64_t, 4> buffer_{};
    int buffered_ = 0;  // values left in buffer_
};

// Derives the key for a named substream. `stream` tags the purpose (velocity
// chunks, histogram bins, ...), `index` the unit of work within it.
inline Philox4x64 substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return Philox4x64{seed, (stream << 48) | (index & 0xFFFFFFFFFFFFull)};
}

// Poisson sample with the given mean, consuming uniforms from rng.
// Exact for all means (multiplicative method on <= 500-mean slices).
std::uint64_t poisson_sample(Philox4x64& rng, double mean);

}  // namespace vapormem
