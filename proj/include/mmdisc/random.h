#ifndef MMDISC_RANDOM_H
#define MMDISC_RANDOM_H

#include <cstdint>
#include <random>

namespace mmdisc {

/// Independent random streams hang off one top-level seed.
enum class StreamPurpose : std::uint64_t
{
  kPopulation = 1,
  kLocationError = 2,
  kRandomPolicy = 3,
};

/// SplitMix64 finalizer.
std::uint64_t MixBits (std::uint64_t x);

/// Seed of the substream (seed, purpose, index). Distinct keys give unrelated streams.
std::uint64_t SubstreamSeed (std::uint64_t seed, StreamPurpose purpose, std::uint64_t index);

/**
 * mt19937_64 plus the handful of variates the simulator needs. The variates
 * are computed here instead of through <random> distributions so that a
 * given seed yields the same numbers on every standard library.
 */
class Rng
{
public:
  explicit Rng (std::uint64_t seed) : m_engine (seed) {}
  Rng (std::uint64_t seed, StreamPurpose purpose, std::uint64_t index)
    : m_engine (SubstreamSeed (seed, purpose, index))
  {
  }

  /// Uniform on [0, 1) with 53 random bits.
  double Uniform01 ();
  double Uniform (double lo, double hi) { return lo + (hi - lo) * Uniform01 (); }
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t Below (std::uint64_t bound);
  /// Standard normal via Box-Muller; consumes two uniforms per call.
  double StandardNormal ();

private:
  std::mt19937_64 m_engine;
};

} // namespace mmdisc

#endif
