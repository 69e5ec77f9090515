#include "mmdisc/channel.h"

#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>

using namespace mmdisc;
using std::numbers::pi;

namespace {

LinkBudget
DefaultBudget ()
{
  return CalibrateTxPower (LinkBudget{}, Codebook ().NarrowestWidth (), 200.0);
}

// largest boresight distance still detected, by bisection on Detects alone
double
BisectRange (const LinkBudget &budget, double width)
{
  const Point2D bs{0, 0};
  const BeamConfig beam{width, Azimuth (0)};
  double lo = 1e-6;
  double hi = 1e6;
  REQUIRE (Detects (budget, beam, bs, {lo, 0}));
  REQUIRE_FALSE (Detects (budget, beam, bs, {hi, 0}));
  for (int i = 0; i < 200; ++i)
    {
      const double mid = 0.5 * (lo + hi);
      (Detects (budget, beam, bs, {mid, 0}) ? lo : hi) = mid;
    }
  return lo;
}

} // namespace

TEST_CASE ("Pathloss")
{
  const PathlossModel m;
  CHECK (Pathloss (m, 5.0) == 82.02);
  CHECK (Pathloss (m, 50.0) == doctest::Approx (105.62));
  CHECK (Pathloss (m, 2.5) == doctest::Approx (75.9994).epsilon (1e-6));
  // both branches meet at l0
  CHECK (std::fabs (Pathloss (m, 5.0 * (1 + 1e-14)) - Pathloss (m, 5.0)) <= 1e-12);
  CHECK (std::fabs (Pathloss (m, 5.0 * (1 - 1e-14)) - Pathloss (m, 5.0)) <= 1e-12);
  CHECK_THROWS_AS (Pathloss (m, 0.0), std::domain_error);
  CHECK_THROWS_AS (Pathloss (m, -3.0), std::domain_error);

  double prev = Pathloss (m, 0.01);
  for (double l = 0.02; l < 1000.0; l *= 1.07)
    {
      const double pl = Pathloss (m, l);
      CHECK (pl > prev);
      CHECK (DistanceForPathloss (m, pl) == doctest::Approx (l));
      prev = pl;
    }
}

TEST_CASE ("ReceivedPower composes gain and pathloss")
{
  const LinkBudget b = DefaultBudget ();
  const double w = kTwoPi / 24;
  const BeamConfig beam{w, Azimuth (0)};
  const double peak = PeakGain (w, b.antenna.elevation_width);
  CHECK (ReceivedPower (b, beam, {0, 0}, {5, 0}) == doctest::Approx (b.tx_power_dbm + peak - 82.02));

  const Point2D bs{100, 100};
  const double l = 40.0;
  const double onAxis = ReceivedPower (b, beam, bs, {bs.x + l, bs.y});
  const double off = ReceivedPower (b, beam, bs, {bs.x + l * std::cos (w / 2), bs.y + l * std::sin (w / 2)});
  CHECK (onAxis - off == doctest::Approx (3.0));

  // rigid rotation of beam and user about the BS
  std::mt19937_64 gen (11);
  std::uniform_real_distribution<double> ang (0, kTwoPi);
  for (int i = 0; i < 200; ++i)
    {
      const double rot = ang (gen);
      const double userAngle = 0.05;
      const BeamConfig turned{w, Azimuth (rot)};
      const Point2D ue{bs.x + l * std::cos (rot + userAngle), bs.y + l * std::sin (rot + userAngle)};
      const Point2D ue0{bs.x + l * std::cos (userAngle), bs.y + l * std::sin (userAngle)};
      CHECK (ReceivedPower (b, turned, bs, ue) == doctest::Approx (ReceivedPower (b, beam, bs, ue0)).epsilon (1e-9));
    }

  // monotone in the off-boresight offset
  double prev = onAxis;
  for (double d = 0.01; d < pi; d += 0.01)
    {
      const double p = ReceivedPower (b, beam, bs, {bs.x + l * std::cos (d), bs.y + l * std::sin (d)});
      CHECK (p < prev);
      prev = p;
    }
  CHECK_THROWS_AS (ReceivedPower (b, beam, bs, bs), std::domain_error);
}

TEST_CASE ("Detects")
{
  const LinkBudget b = DefaultBudget ();
  const Codebook cb;
  for (std::size_t l = 0; l < cb.Levels (); ++l)
    {
      const BeamConfig beam{cb.Width (l), Azimuth (0)};
      CHECK (Detects (b, beam, {0, 0}, {1e-3, 0}));
      const double range = RangeOnBoresight (b, cb.Width (l)).meters;
      CHECK_FALSE (Detects (b, beam, {0, 0}, {range * 1.001, 0}));
      CHECK (Detects (b, beam, {0, 0}, {range * 0.999, 0}));
    }

  // equality counts: pick tx so the received power equals Th to the bit
  LinkBudget exact = b;
  const BeamConfig beam{kTwoPi / 8, Azimuth (0)};
  exact.tx_power_dbm = 0.0;
  const double rx0 = ReceivedPower (exact, beam, {0, 0}, {5, 0});
  exact.noise_floor_dbm = rx0 - exact.snr_threshold_db;
  REQUIRE (ReceivedPower (exact, beam, {0, 0}, {5, 0}) == exact.ThresholdDbm ());
  CHECK (Detects (exact, beam, {0, 0}, {5, 0}));
}

TEST_CASE ("RangeOnBoresight")
{
  const LinkBudget b = DefaultBudget ();
  const Codebook cb;
  CHECK (RangeOnBoresight (b, cb.NarrowestWidth ()).meters == doctest::Approx (200.0));
  for (std::size_t l = 1; l < cb.Levels (); ++l)
    {
      CHECK (RangeOnBoresight (b, cb.Width (l)).meters > RangeOnBoresight (b, cb.Width (l - 1)).meters);
    }

  SUBCASE ("matches a bisection oracle on Detects")
  {
    for (std::size_t l = 0; l < cb.Levels (); ++l)
      {
        const auto r = RangeOnBoresight (b, cb.Width (l));
        REQUIRE (r.covered);
        CHECK (std::fabs (r.meters - BisectRange (b, cb.Width (l))) <= 1e-6);
      }
  }

  SUBCASE ("budget exactly at the reference distance")
  {
    LinkBudget atRef = b;
    const double w = kTwoPi / 8;
    atRef.tx_power_dbm = atRef.ThresholdDbm () + 82.02 - PeakGain (w, atRef.antenna.elevation_width);
    CHECK (RangeOnBoresight (atRef, w).meters == doctest::Approx (5.0));
  }

  SUBCASE ("halving the width stretches far-regime range by 10^(3.01/23.6)")
  {
    const double r1 = RangeOnBoresight (b, 0.2).meters;
    const double r2 = RangeOnBoresight (b, 0.1).meters;
    REQUIRE (r1 > 5.0);
    CHECK (r2 / r1 == doctest::Approx (std::pow (10.0, 10 * std::log10 (2.0) / 23.6)));
    CHECK (r2 / r1 == doctest::Approx (1.3414).epsilon (1e-4));
  }

  SUBCASE ("no coverage")
  {
    LinkBudget weak = b;
    weak.tx_power_dbm = -200;
    const auto r = RangeOnBoresight (weak, kTwoPi / 360);
    CHECK_FALSE (r.covered);
    CHECK (r.meters == 0.0);
  }
}
