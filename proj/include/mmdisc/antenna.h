#ifndef MMDISC_ANTENNA_H
#define MMDISC_ANTENNA_H

#include "mmdisc/geometry.h"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace mmdisc {

/// Off-boresight attenuation law of the main lobe.
enum class GainModel
{
  kQuadratic, ///< -12 (Δθ/θ)^2: exactly -3 dB at half the beam-width
  kLinear,    ///< -12 (Δθ/θ): the form as literally printed, kept for comparison
};

struct AntennaPattern
{
  double elevation_width = 0.1745; // rad, 10 degrees
  GainModel model = GainModel::kQuadratic;
  /// Lower clamp on the pattern in dB; -inf leaves the formula unbounded.
  double gain_floor_db = -std::numeric_limits<double>::infinity ();
};

/// One selectable antenna configuration.
struct BeamConfig
{
  double width = kTwoPi; // azimuth half-power beam-width, rad
  Azimuth boresight;

  friend bool operator== (const BeamConfig &, const BeamConfig &) = default;
};

/**
 * Selectable beam-widths, stored as direction counts N with width 2π/N.
 * Level 0 is the widest beam; levels run toward narrower beams.
 */
class Codebook
{
public:
  /// 2, 3, 4, ... 360 directions.
  Codebook ();
  /// Throws std::invalid_argument unless counts are positive and strictly increasing.
  explicit Codebook (std::vector<std::uint32_t> directionCounts);

  const std::vector<std::uint32_t> &DirectionCounts () const { return m_counts; }
  std::size_t Levels () const { return m_counts.size (); }
  std::uint32_t Count (std::size_t level) const { return m_counts.at (level); }
  double Width (std::size_t level) const { return kTwoPi / m_counts.at (level); }
  double WidestWidth () const { return Width (0); }
  double NarrowestWidth () const { return Width (Levels () - 1); }

  /// Σ N over all levels.
  std::size_t ConfigurationCount () const;

  /// Level whose width equals `width` (relative tolerance 1e-12), if any.
  std::optional<std::size_t> LevelOf (double width) const;

  /// The N boresights anchor + j 2π/N, j = 0..N-1. Throws when width is not in the codebook.
  std::vector<Azimuth> DirectionsFor (double width, Azimuth anchor) const;

  /// Boresight of grid slot `slot` at `level`, grid anchored at `anchor`.
  BeamConfig Beam (std::size_t level, std::uint32_t slot, Azimuth anchor) const;

private:
  std::vector<std::uint32_t> m_counts;
};

/// Boresight gain in dB, 10 log10(16π / (6.76 φ θ)). Throws for non-positive widths.
double PeakGain (double width, double elevationWidth);

/// Gain in dB toward `toward`; elevation offset is fixed at zero.
double Gain (const BeamConfig &beam, Azimuth toward, const AntennaPattern &pattern);

/// Gain at a given azimuth offset from boresight.
double GainAtOffset (double width, double offset, const AntennaPattern &pattern);

} // namespace mmdisc

#endif
