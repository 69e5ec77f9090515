#include "mmdisc/scenario.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mmdisc {

Deployment
Deployment::Default ()
{
  Deployment d;
  const Point2D c{d.area_width_m / 2.0, d.area_height_m / 2.0};
  const double s = d.inter_site_distance_m;
  d.bs_positions = {c, {c.x + s, c.y}, {c.x, c.y + s}, {c.x - s, c.y}, {c.x, c.y - s}};
  return d;
}

bool
Deployment::Contains (const Point2D &p) const
{
  return p.x >= 0.0 && p.x <= area_width_m && p.y >= 0.0 && p.y <= area_height_m;
}

void
Deployment::Validate () const
{
  if (!(area_width_m > 0.0) || !(area_height_m > 0.0))
    {
      throw std::invalid_argument ("deployment.area: width and height must be positive");
    }
  if (bs_positions.empty ())
    {
      throw std::invalid_argument ("deployment.bs_positions_m: at least one BS is required");
    }
  for (std::size_t i = 0; i < bs_positions.size (); ++i)
    {
      if (!std::isfinite (bs_positions[i].x) || !std::isfinite (bs_positions[i].y)
          || !Contains (bs_positions[i]))
        {
          throw std::invalid_argument ("deployment.bs_positions_m: BS " + std::to_string (i)
                                       + " lies outside the area");
        }
      for (std::size_t j = 0; j < i; ++j)
        {
          // small slack so exact lattice layouts pass
          if (Distance (bs_positions[i], bs_positions[j]) < inter_site_distance_m * (1.0 - 1e-9))
            {
              throw std::invalid_argument ("deployment.bs_positions_m: BS " + std::to_string (j) + " and "
                                           + std::to_string (i) + " are closer than inter_site_distance_m");
            }
        }
    }
}

void
PopulationSpec::Validate () const
{
  if (kind != PopulationKind::kUniform && !(sigma_m > 0.0))
    {
      throw std::invalid_argument ("population.sigma_m: must be positive");
    }
  if (!(forbidden_radius_m >= 0.0))
    {
      throw std::invalid_argument ("population.forbidden_radius_m: must be non-negative");
    }
  if (count < 1)
    {
      throw std::invalid_argument ("population.count: must be at least 1");
    }
  if (max_attempts < 1)
    {
      throw std::invalid_argument ("population.max_attempts: must be at least 1");
    }
}

void
LocationErrorSpec::Validate () const
{
  if (!(scale_m >= 0.0) || !std::isfinite (scale_m))
    {
      throw std::invalid_argument ("location_error.scale_m: must be finite and non-negative");
    }
}

std::string_view
ToString (PopulationKind kind)
{
  switch (kind)
    {
    case PopulationKind::kNormal:
      return "normal";
    case PopulationKind::kNormalForbidden:
      return "normal_forbidden";
    case PopulationKind::kUniform:
      return "uniform";
    }
  return "?";
}

std::string_view
ToString (LocationErrorKind kind)
{
  return kind == LocationErrorKind::kGaussian ? "gaussian" : "disc_uniform";
}

PopulationKind
ParsePopulationKind (std::string_view name)
{
  for (auto k : {PopulationKind::kNormal, PopulationKind::kNormalForbidden, PopulationKind::kUniform})
    {
      if (ToString (k) == name)
        {
          return k;
        }
    }
  throw std::invalid_argument ("population.kind: unknown value '" + std::string (name)
                               + "' (expected normal, normal_forbidden, uniform)");
}

LocationErrorKind
ParseLocationErrorKind (std::string_view name)
{
  for (auto k : {LocationErrorKind::kGaussian, LocationErrorKind::kDiscUniform})
    {
      if (ToString (k) == name)
        {
          return k;
        }
    }
  throw std::invalid_argument ("location_error.kind: unknown value '" + std::string (name)
                               + "' (expected gaussian, disc_uniform)");
}

std::size_t
ServingBs (const Deployment &deployment, const Point2D &p)
{
  std::size_t best = 0;
  double bestDistance = Distance (deployment.bs_positions.at (0), p);
  for (std::size_t i = 1; i < deployment.bs_positions.size (); ++i)
    {
      const double d = Distance (deployment.bs_positions[i], p);
      if (d < bestDistance)
        {
          best = i;
          bestDistance = d;
        }
    }
  return best;
}

namespace {

bool
InsideForbiddenZone (const Deployment &deployment, const Point2D &p, double radius)
{
  for (const auto &bs : deployment.bs_positions)
    {
      if (Distance (bs, p) < radius)
        {
          return true;
        }
    }
  return false;
}

Point2D
SampleOne (const PopulationSpec &spec, const Deployment &deployment, Rng &rng)
{
  const double forbidden = spec.kind == PopulationKind::kNormalForbidden ? spec.forbidden_radius_m : 0.0;
  for (std::uint32_t attempt = 0; attempt < spec.max_attempts; ++attempt)
    {
      Point2D p;
      if (spec.kind == PopulationKind::kUniform)
        {
          p = {rng.Uniform (0.0, deployment.area_width_m), rng.Uniform (0.0, deployment.area_height_m)};
        }
      else
        {
          const Point2D &bs = deployment.bs_positions[rng.Below (deployment.bs_positions.size ())];
          p = {bs.x + spec.sigma_m * rng.StandardNormal (), bs.y + spec.sigma_m * rng.StandardNormal ()};
        }
      if (deployment.Contains (p) && !(forbidden > 0.0 && InsideForbiddenZone (deployment, p, forbidden)))
        {
          return p;
        }
    }
  throw std::runtime_error ("population: rejection sampling exhausted " + std::to_string (spec.max_attempts)
                            + " attempts; forbidden_radius_m leaves (almost) no admissible area");
}

} // namespace

std::vector<Point2D>
SamplePopulation (const PopulationSpec &spec, const Deployment &deployment, std::uint64_t seed)
{
  spec.Validate ();
  deployment.Validate ();
  std::vector<Point2D> users;
  users.reserve (spec.count);
  for (std::uint32_t i = 0; i < spec.count; ++i)
    {
      Rng rng (seed, StreamPurpose::kPopulation, i);
      users.push_back (SampleOne (spec, deployment, rng));
    }
  return users;
}

Point2D
ApplyLocationError (const Point2D &truePos, const LocationErrorSpec &spec, Rng &rng)
{
  // draws are taken even for scale 0 so that sweeps over scale stay paired
  if (spec.kind == LocationErrorKind::kGaussian)
    {
      const double dx = rng.StandardNormal ();
      const double dy = rng.StandardNormal ();
      if (spec.scale_m == 0.0)
        {
          return truePos;
        }
      return {truePos.x + spec.scale_m * dx, truePos.y + spec.scale_m * dy};
    }
  const double r = std::sqrt (rng.Uniform01 ());
  const double theta = kTwoPi * rng.Uniform01 ();
  if (spec.scale_m == 0.0)
    {
      return truePos;
    }
  return {truePos.x + spec.scale_m * r * std::cos (theta), truePos.y + spec.scale_m * r * std::sin (theta)};
}

std::vector<UserDrop>
DropUsers (const PopulationSpec &population, const LocationErrorSpec &error, const Deployment &deployment,
           std::uint64_t seed)
{
  error.Validate ();
  const auto positions = SamplePopulation (population, deployment, seed);
  std::vector<UserDrop> users;
  users.reserve (positions.size ());
  for (std::size_t i = 0; i < positions.size (); ++i)
    {
      Rng rng (seed, StreamPurpose::kLocationError, i);
      users.push_back ({positions[i], ApplyLocationError (positions[i], error, rng), ServingBs (deployment, positions[i])});
    }
  return users;
}

} // namespace mmdisc
