#pragma once

#include <cstdint>
#include <span>

#include "qcount/errors.hpp"

namespace qcount {

// Deterministic counter-based generator (SplitMix64).  The state advances by
// a fixed odd increment and the output is a bijective hash of the state, so
// an identical seed yields an identical stream on every platform.  Substreams
// for parallel Monte Carlo trials are derived from (seed, stream id) and are
// independent of how much of the parent stream has been consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream), state_(mix(seed) ^ mix(~stream)) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Inverse-CDF sample from an explicit probability vector.  Probabilities
  // are expected to sum to 1 within tolerance; the final bucket absorbs any
  // rounding slack so the sampler is total.
  std::size_t sample(std::span<const double> probabilities) {
    if (probabilities.empty()) throw DomainError("Rng::sample: empty distribution");
    const double u = next_double();
    double cumulative = 0.0;
    for (std::size_t i = 0; i + 1 < probabilities.size(); ++i) {
      cumulative += probabilities[i];
      if (u < cumulative) return i;
    }
    return probabilities.size() - 1;
  }

  // Independent substream for trial `index` of the same experiment, derived
  // from the original (seed, stream) pair.
  Rng substream(std::uint64_t index) const {
    return Rng(seed_ ^ mix(stream_), index + 1);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t state_;
};

}  // namespace qcount
