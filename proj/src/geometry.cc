#include "mmdisc/geometry.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmdisc {

double
Distance (const Point2D &a, const Point2D &b)
{
  return std::hypot (b.x - a.x, b.y - a.y);
}

double
NormalizeAngle (double radians)
{
  double r = std::fmod (radians, kTwoPi);
  if (r < 0.0)
    {
      r += kTwoPi;
    }
  // fmod of a tiny negative value can round up to exactly 2π
  if (r >= kTwoPi)
    {
      r = 0.0;
    }
  return r;
}

Azimuth::Azimuth (double radians)
  : m_angle (NormalizeAngle (radians))
{
}

Azimuth
AzimuthTo (const Point2D &origin, const Point2D &target)
{
  if (origin == target)
    {
      throw std::domain_error ("undefined bearing: origin and target coincide");
    }
  return Azimuth (std::atan2 (target.y - origin.y, target.x - origin.x));
}

double
AngularOffset (Azimuth a, Azimuth b)
{
  double d = std::fabs (a.Radians () - b.Radians ());
  return std::min (d, kTwoPi - d);
}

std::uint32_t
SectorOf (std::uint32_t partitionN, Azimuth anchor, Azimuth a)
{
  if (partitionN <= 1)
    {
      return 0;
    }
  const double width = kTwoPi / partitionN;
  const double shifted = NormalizeAngle (a.Radians () - anchor.Radians () + 0.5 * width);
  auto index = static_cast<std::uint32_t> (std::floor (shifted / width));
  return std::min (index, partitionN - 1);
}

std::uint32_t
SectorOfSlot (std::uint32_t partitionN, std::uint32_t slot, std::uint32_t slots)
{
  if (partitionN <= 1)
    {
      return 0;
    }
  // sector k covers turns [k/n - 1/2n, k/n + 1/2n); slot sits at slot/slots turns
  const std::uint64_t num = 2ULL * (slot % slots) * partitionN + slots;
  const std::uint64_t den = 2ULL * slots;
  return static_cast<std::uint32_t> ((num / den) % partitionN);
}

Sector
SectorAt (std::uint32_t partitionN, Azimuth anchor, std::uint32_t index)
{
  const double width = kTwoPi / std::max<std::uint32_t> (partitionN, 1);
  return Sector{anchor + index * width, width};
}

} // namespace mmdisc
