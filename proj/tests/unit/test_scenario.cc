#include "mmdisc/scenario.h"

#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <numbers>

using namespace mmdisc;

namespace {

Deployment
SingleBs ()
{
  Deployment d;
  d.bs_positions = {{500, 500}};
  return d;
}

} // namespace

TEST_CASE ("default deployment")
{
  const Deployment d = Deployment::Default ();
  CHECK (d.bs_positions.size () == 5);
  CHECK_NOTHROW (d.Validate ());
  CHECK (d.bs_positions[0] == Point2D{500, 500});
  for (std::size_t i = 1; i < 5; ++i)
    {
      CHECK (Distance (d.bs_positions[0], d.bs_positions[i]) == doctest::Approx (200.0));
    }

  Deployment tooClose = d;
  tooClose.bs_positions.push_back ({550, 500});
  CHECK_THROWS_WITH_AS (tooClose.Validate (), doctest::Contains ("inter_site_distance_m"), std::invalid_argument);
  Deployment outside = d;
  outside.bs_positions.push_back ({1500, 500});
  CHECK_THROWS_AS (outside.Validate (), std::invalid_argument);
}

TEST_CASE ("ServingBs is the nearest BS, lowest index on ties")
{
  const Deployment d = Deployment::Default ();
  CHECK (ServingBs (d, {510, 505}) == 0);
  CHECK (ServingBs (d, {690, 500}) == 1);
  // equidistant from BS 0 (500,500) and BS 1 (700,500)
  CHECK (ServingBs (d, {600, 500}) == 0);
  // equidistant from BS 1 (700,500) and BS 2 (500,700)
  CHECK (ServingBs (d, {700, 700}) == 1);
}

TEST_CASE ("forbidden zone is respected around every BS")
{
  PopulationSpec spec;
  spec.kind = PopulationKind::kNormalForbidden;
  spec.sigma_m = 40;
  spec.forbidden_radius_m = 100;
  spec.count = 3000;
  const Deployment d = Deployment::Default ();
  for (const auto &p : SamplePopulation (spec, d, 5))
    {
      CHECK (d.Contains (p));
      for (const auto &bs : d.bs_positions)
        {
          CHECK (Distance (p, bs) >= 100.0);
        }
    }
}

TEST_CASE ("normal population has the configured per-axis spread")
{
  PopulationSpec spec;
  spec.kind = PopulationKind::kNormal;
  spec.sigma_m = 20;
  spec.count = 100000;
  const auto pts = SamplePopulation (spec, SingleBs (), 17);
  double sx = 0, sy = 0, sxx = 0, syy = 0;
  for (const auto &p : pts)
    {
      sx += p.x - 500;
      sy += p.y - 500;
      sxx += (p.x - 500) * (p.x - 500);
      syy += (p.y - 500) * (p.y - 500);
    }
  const double n = static_cast<double> (pts.size ());
  const double stdX = std::sqrt (sxx / n - (sx / n) * (sx / n));
  const double stdY = std::sqrt (syy / n - (sy / n) * (sy / n));
  CHECK (stdX == doctest::Approx (20.0).epsilon (0.05));
  CHECK (stdY == doctest::Approx (20.0).epsilon (0.05));
}

TEST_CASE ("uniform population centers on the area")
{
  PopulationSpec spec;
  spec.kind = PopulationKind::kUniform;
  spec.count = 100000;
  const Deployment d = Deployment::Default ();
  const auto pts = SamplePopulation (spec, d, 23);
  double mx = 0, my = 0;
  for (const auto &p : pts)
    {
      REQUIRE (d.Contains (p));
      mx += p.x;
      my += p.y;
    }
  CHECK (mx / pts.size () == doctest::Approx (500.0).epsilon (0.01));
  CHECK (my / pts.size () == doctest::Approx (500.0).epsilon (0.01));
}

TEST_CASE ("population sampling is reproducible and order independent")
{
  PopulationSpec spec;
  spec.kind = PopulationKind::kNormalForbidden;
  spec.forbidden_radius_m = 50;
  spec.sigma_m = 20;
  spec.count = 500;
  const Deployment d = Deployment::Default ();
  const auto a = SamplePopulation (spec, d, 99);
  const auto b = SamplePopulation (spec, d, 99);
  CHECK (a == b);
  CHECK (a != SamplePopulation (spec, d, 100));
  // user i is the same whatever the population size
  spec.count = 50;
  const auto prefix = SamplePopulation (spec, d, 99);
  CHECK (std::equal (prefix.begin (), prefix.end (), a.begin ()));
}

TEST_CASE ("impossible forbidden zone fails after the retry budget")
{
  PopulationSpec spec;
  spec.kind = PopulationKind::kNormalForbidden;
  spec.forbidden_radius_m = 5000;
  spec.count = 3;
  spec.max_attempts = 1000;
  CHECK_THROWS_WITH_AS (SamplePopulation (spec, Deployment::Default (), 1), doctest::Contains ("rejection"),
                        std::runtime_error);
}

TEST_CASE ("population spec validation")
{
  PopulationSpec bad;
  bad.sigma_m = 0;
  CHECK_THROWS_AS (bad.Validate (), std::invalid_argument);
  bad = {};
  bad.forbidden_radius_m = -1;
  CHECK_THROWS_AS (bad.Validate (), std::invalid_argument);
  bad = {};
  bad.count = 0;
  CHECK_THROWS_AS (bad.Validate (), std::invalid_argument);
  LocationErrorSpec err;
  err.scale_m = -1;
  CHECK_THROWS_AS (err.Validate (), std::invalid_argument);
  CHECK_THROWS_AS (ParsePopulationKind ("gaussian"), std::invalid_argument);
  CHECK (ParsePopulationKind ("normal_forbidden") == PopulationKind::kNormalForbidden);
  CHECK (ParseLocationErrorKind ("disc_uniform") == LocationErrorKind::kDiscUniform);
}

TEST_CASE ("location error laws")
{
  const Point2D p{321.5, 654.25};
  SUBCASE ("scale 0 is the identity")
  {
    for (auto kind : {LocationErrorKind::kGaussian, LocationErrorKind::kDiscUniform})
      {
        Rng rng (4);
        for (int i = 0; i < 100; ++i)
          {
            CHECK (ApplyLocationError (p, {kind, 0.0}, rng) == p);
          }
      }
  }
  SUBCASE ("gaussian displacement has the Rayleigh mean")
  {
    Rng rng (8);
    double sum = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i)
      {
        sum += Distance (p, ApplyLocationError (p, {LocationErrorKind::kGaussian, 10.0}, rng));
      }
    CHECK (sum / n == doctest::Approx (10.0 * std::sqrt (std::numbers::pi / 2)).epsilon (0.03));
    CHECK (10.0 * std::sqrt (std::numbers::pi / 2) == doctest::Approx (12.53).epsilon (1e-3));
  }
  SUBCASE ("disc displacement stays inside the radius")
  {
    Rng rng (9);
    double maxSeen = 0;
    for (int i = 0; i < 20000; ++i)
      {
        const double d = Distance (p, ApplyLocationError (p, {LocationErrorKind::kDiscUniform, 10.0}, rng));
        CHECK (d <= 10.0 + 1e-9);
        maxSeen = std::max (maxSeen, d);
      }
    CHECK (maxSeen > 9.9);
  }
}

TEST_CASE ("DropUsers pairs estimates across error scales")
{
  PopulationSpec pop;
  pop.count = 200;
  const Deployment d = Deployment::Default ();
  const auto a = DropUsers (pop, {LocationErrorKind::kGaussian, 5.0}, d, 3);
  const auto b = DropUsers (pop, {LocationErrorKind::kGaussian, 10.0}, d, 3);
  const auto z = DropUsers (pop, {LocationErrorKind::kGaussian, 0.0}, d, 3);
  for (std::size_t i = 0; i < a.size (); ++i)
    {
      CHECK (a[i].true_pos == b[i].true_pos);
      CHECK (z[i].est_pos == z[i].true_pos);
      CHECK (a[i].serving_bs == ServingBs (d, a[i].true_pos));
      // same direction of displacement, twice the length
      CHECK (b[i].est_pos.x - b[i].true_pos.x == doctest::Approx (2 * (a[i].est_pos.x - a[i].true_pos.x)));
      CHECK (b[i].est_pos.y - b[i].true_pos.y == doctest::Approx (2 * (a[i].est_pos.y - a[i].true_pos.y)));
    }
}
