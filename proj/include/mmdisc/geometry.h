#ifndef MMDISC_GEOMETRY_H
#define MMDISC_GEOMETRY_H

#include <cstdint>
#include <numbers>

namespace mmdisc {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Planar position in meters.
struct Point2D
{
  double x = 0.0;
  double y = 0.0;

  friend bool operator== (const Point2D &, const Point2D &) = default;
};

double Distance (const Point2D &a, const Point2D &b);

/**
 * Bearing on the circle, stored in radians and always normalized to [0, 2π).
 * Angles grow counter-clockwise from the positive x-axis, as atan2 does.
 */
class Azimuth
{
public:
  constexpr Azimuth () = default;
  explicit Azimuth (double radians);

  double Radians () const { return m_angle; }

  Azimuth operator+ (double radians) const { return Azimuth (m_angle + radians); }
  Azimuth operator- (double radians) const { return Azimuth (m_angle - radians); }

  friend bool operator== (const Azimuth &, const Azimuth &) = default;

private:
  double m_angle = 0.0;
};

/// Maps any finite angle into [0, 2π).
double NormalizeAngle (double radians);

/// Bearing from origin to target. Throws std::domain_error when the points coincide.
Azimuth AzimuthTo (const Point2D &origin, const Point2D &target);

/// Smallest absolute angle between a and b, in [0, π].
double AngularOffset (Azimuth a, Azimuth b);

/**
 * Index of the sector holding `a` when the circle is cut into `partitionN`
 * equal sectors, sector 0 centered on `anchor` and indices increasing with
 * azimuth. Sectors are half-open [lo, hi), so a boundary angle belongs to
 * the sector that starts there.
 */
std::uint32_t SectorOf (std::uint32_t partitionN, Azimuth anchor, Azimuth a);

/**
 * Exact-arithmetic variant of SectorOf for a point of a regular grid:
 * the angle is anchor + slot * 2π / slots. Used for probe grids, where
 * boundary hits are common and must not depend on rounding.
 */
std::uint32_t SectorOfSlot (std::uint32_t partitionN, std::uint32_t slot, std::uint32_t slots);

struct Sector
{
  Azimuth center;
  double width = kTwoPi;
};

/// Sector `index` of the n-way partition centered on `anchor`.
Sector SectorAt (std::uint32_t partitionN, Azimuth anchor, std::uint32_t index);

} // namespace mmdisc

#endif
