#ifndef MMDISC_SCENARIO_H
#define MMDISC_SCENARIO_H

#include "mmdisc/geometry.h"
#include "mmdisc/random.h"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace mmdisc {

struct Deployment
{
  double area_width_m = 1000.0;
  double area_height_m = 1000.0;
  double inter_site_distance_m = 200.0;
  std::vector<Point2D> bs_positions;

  /// Five BSs in a plus pattern centered in the area, neighbors one inter-site distance apart.
  static Deployment Default ();

  bool Contains (const Point2D &p) const;
  /// Throws std::invalid_argument naming the violated constraint.
  void Validate () const;
};

enum class PopulationKind
{
  kNormal,
  kNormalForbidden,
  kUniform,
};

struct PopulationSpec
{
  PopulationKind kind = PopulationKind::kNormal;
  double sigma_m = 40.0;
  double forbidden_radius_m = 0.0;
  std::uint32_t count = 1000;
  /// Rejection attempts allowed per user before sampling gives up.
  std::uint32_t max_attempts = 100000;

  void Validate () const;
};

enum class LocationErrorKind
{
  kGaussian,     ///< isotropic, scale is the per-axis standard deviation
  kDiscUniform,  ///< uniform in a disc, scale is the radius
};

struct LocationErrorSpec
{
  LocationErrorKind kind = LocationErrorKind::kGaussian;
  double scale_m = 0.0;

  void Validate () const;
};

struct UserDrop
{
  Point2D true_pos;
  Point2D est_pos;
  std::size_t serving_bs = 0;
};

std::string_view ToString (PopulationKind kind);
std::string_view ToString (LocationErrorKind kind);
/// Throws std::invalid_argument for unknown names.
PopulationKind ParsePopulationKind (std::string_view name);
LocationErrorKind ParseLocationErrorKind (std::string_view name);

/// Nearest BS, lowest index on ties.
std::size_t ServingBs (const Deployment &deployment, const Point2D &p);

/**
 * True user positions. User i draws from its own substream of `seed`, so the
 * result does not depend on generation order. Normal kinds pick a BS
 * uniformly and add an N(0, σ²I) offset; every kind rejects points outside
 * the area, and the forbidden kind also rejects points closer than the
 * forbidden radius to any BS.
 */
std::vector<Point2D> SamplePopulation (const PopulationSpec &spec, const Deployment &deployment, std::uint64_t seed);

/// One user's position as seen through the context estimate.
Point2D ApplyLocationError (const Point2D &truePos, const LocationErrorSpec &spec, Rng &rng);

/// Population plus estimates plus serving BS. Estimates use substreams keyed by user index.
std::vector<UserDrop> DropUsers (const PopulationSpec &population, const LocationErrorSpec &error,
                                 const Deployment &deployment, std::uint64_t seed);

} // namespace mmdisc

#endif
