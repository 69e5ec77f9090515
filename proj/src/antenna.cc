#include "mmdisc/antenna.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace mmdisc {

Codebook::Codebook ()
  : Codebook ({2, 3, 4, 6, 8, 12, 24, 48, 60, 72, 90, 120, 180, 360})
{
}

Codebook::Codebook (std::vector<std::uint32_t> directionCounts)
  : m_counts (std::move (directionCounts))
{
  if (m_counts.empty ())
    {
      throw std::invalid_argument ("codebook: direction_counts must not be empty");
    }
  for (std::size_t i = 0; i < m_counts.size (); ++i)
    {
      if (m_counts[i] == 0)
        {
          throw std::invalid_argument ("codebook: direction counts must be positive");
        }
      if (i > 0 && m_counts[i] <= m_counts[i - 1])
        {
          throw std::invalid_argument ("codebook: direction counts must be strictly increasing");
        }
    }
}

std::size_t
Codebook::ConfigurationCount () const
{
  return std::accumulate (m_counts.begin (), m_counts.end (), std::size_t{0});
}

std::optional<std::size_t>
Codebook::LevelOf (double width) const
{
  for (std::size_t level = 0; level < m_counts.size (); ++level)
    {
      const double w = Width (level);
      if (std::fabs (w - width) <= 1e-12 * w)
        {
          return level;
        }
    }
  return std::nullopt;
}

std::vector<Azimuth>
Codebook::DirectionsFor (double width, Azimuth anchor) const
{
  const auto level = LevelOf (width);
  if (!level)
    {
      throw std::invalid_argument ("beam-width is not in the codebook");
    }
  const std::uint32_t n = m_counts[*level];
  std::vector<Azimuth> dirs;
  dirs.reserve (n);
  for (std::uint32_t j = 0; j < n; ++j)
    {
      dirs.push_back (Beam (*level, j, anchor).boresight);
    }
  return dirs;
}

BeamConfig
Codebook::Beam (std::size_t level, std::uint32_t slot, Azimuth anchor) const
{
  const std::uint32_t n = Count (level);
  return BeamConfig{kTwoPi / n, anchor + kTwoPi * (static_cast<double> (slot % n) / n)};
}

double
PeakGain (double width, double elevationWidth)
{
  if (!(width > 0.0) || !(elevationWidth > 0.0))
    {
      throw std::invalid_argument ("peak gain: beam-widths must be positive");
    }
  return 10.0 * std::log10 (16.0 * std::numbers::pi / (6.76 * elevationWidth * width));
}

double
GainAtOffset (double width, double offset, const AntennaPattern &pattern)
{
  const double ratio = offset / width;
  const double loss = pattern.model == GainModel::kQuadratic ? 12.0 * ratio * ratio : 12.0 * ratio;
  return std::max (PeakGain (width, pattern.elevation_width) - loss, pattern.gain_floor_db);
}

double
Gain (const BeamConfig &beam, Azimuth toward, const AntennaPattern &pattern)
{
  return GainAtOffset (beam.width, AngularOffset (beam.boresight, toward), pattern);
}

} // namespace mmdisc
