#include "mmdisc/random.h"

#include <cmath>
#include <numbers>

namespace mmdisc {

std::uint64_t
MixBits (std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t
SubstreamSeed (std::uint64_t seed, StreamPurpose purpose, std::uint64_t index)
{
  return MixBits (MixBits (MixBits (seed) ^ static_cast<std::uint64_t> (purpose)) ^ index);
}

double
Rng::Uniform01 ()
{
  return static_cast<double> (m_engine () >> 11) * 0x1.0p-53;
}

std::uint64_t
Rng::Below (std::uint64_t bound)
{
  // rejection keeps the draw exactly uniform
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do
    {
      r = m_engine ();
    }
  while (r >= limit);
  return r % bound;
}

double
Rng::StandardNormal ()
{
  const double u1 = 1.0 - Uniform01 (); // (0, 1]
  const double u2 = Uniform01 ();
  return std::sqrt (-2.0 * std::log (u1)) * std::cos (2.0 * std::numbers::pi * u2);
}

} // namespace mmdisc
