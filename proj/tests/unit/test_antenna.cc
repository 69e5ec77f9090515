#include "mmdisc/antenna.h"

#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>

using namespace mmdisc;
using std::numbers::pi;

TEST_CASE ("default codebook")
{
  const Codebook cb;
  const std::vector<std::uint32_t> expected{2, 3, 4, 6, 8, 12, 24, 48, 60, 72, 90, 120, 180, 360};
  CHECK (cb.DirectionCounts () == expected);
  CHECK (cb.ConfigurationCount () == 989);
  CHECK (cb.NarrowestWidth () == doctest::Approx (kTwoPi / 360));
  CHECK (cb.WidestWidth () == doctest::Approx (pi));
  for (std::size_t l = 1; l < cb.Levels (); ++l)
    {
      CHECK (cb.Width (l) < cb.Width (l - 1));
    }
}

TEST_CASE ("codebook rejects malformed count lists")
{
  CHECK_THROWS_AS (Codebook (std::vector<std::uint32_t>{}), std::invalid_argument);
  CHECK_THROWS_AS (Codebook ({4, 4}), std::invalid_argument);
  CHECK_THROWS_AS (Codebook ({8, 4}), std::invalid_argument);
  CHECK_THROWS_AS (Codebook ({0, 4}), std::invalid_argument);
  CHECK_NOTHROW (Codebook ({1}));
}

TEST_CASE ("PeakGain")
{
  // 10 log10(16 pi / (6.76 * 0.1745 * 0.785398)) evaluated by hand: 17.344
  CHECK (PeakGain (kTwoPi / 8, 0.1745) == doctest::Approx (17.344).epsilon (1e-4));
  CHECK (PeakGain (0.1, 0.1745) > PeakGain (0.2, 0.1745));
  CHECK (PeakGain (0.1, 0.1745) - PeakGain (0.2, 0.1745) == doctest::Approx (10 * std::log10 (2.0)));
  CHECK_THROWS_AS (PeakGain (0.0, 0.1745), std::invalid_argument);
  CHECK_THROWS_AS (PeakGain (-1.0, 0.1745), std::invalid_argument);
  CHECK_THROWS_AS (PeakGain (0.1, 0.0), std::invalid_argument);
}

TEST_CASE ("Gain follows the quadratic main lobe")
{
  const AntennaPattern pattern;
  const Codebook cb;
  for (std::size_t l = 0; l < cb.Levels (); ++l)
    {
      const double w = cb.Width (l);
      const BeamConfig beam{w, Azimuth (1.0)};
      const double peak = PeakGain (w, pattern.elevation_width);
      CHECK (Gain (beam, Azimuth (1.0), pattern) == peak);
      CHECK (std::fabs (Gain (beam, Azimuth (1.0 + w / 2), pattern) - (peak - 3.0)) <= 1e-9);
      CHECK (std::fabs (Gain (beam, Azimuth (1.0 - w / 2), pattern) - (peak - 3.0)) <= 1e-9);
      CHECK (Gain (beam, Azimuth (1.0 + w), pattern) == doctest::Approx (peak - 12.0));
    }
}

TEST_CASE ("linear gain model and gain floor")
{
  AntennaPattern linear;
  linear.model = GainModel::kLinear;
  const double w = kTwoPi / 8;
  const double peak = PeakGain (w, linear.elevation_width);
  CHECK (GainAtOffset (w, w / 2, linear) == doctest::Approx (peak - 6.0));

  AntennaPattern floored;
  floored.gain_floor_db = -5.0;
  CHECK (GainAtOffset (w, pi, floored) == -5.0);
  CHECK (GainAtOffset (w, 0.0, floored) == peak);
}

TEST_CASE ("gain depends on direction only through the angular offset")
{
  const AntennaPattern pattern;
  std::mt19937_64 gen (3);
  std::uniform_real_distribution<double> ang (0.0, kTwoPi);
  for (int i = 0; i < 2000; ++i)
    {
      const double b = ang (gen);
      const double d = ang (gen) / 2.0;
      const BeamConfig beam{kTwoPi / 24, Azimuth (b)};
      CHECK (Gain (beam, Azimuth (b + d), pattern) == doctest::Approx (Gain (beam, Azimuth (b - d), pattern)));
      CHECK (Gain (beam, Azimuth (b + d), pattern) <= Gain (beam, Azimuth (b), pattern));
    }
}

TEST_CASE ("DirectionsFor")
{
  const Codebook cb;
  const auto quarter = cb.DirectionsFor (kTwoPi / 4, Azimuth (0));
  REQUIRE (quarter.size () == 4);
  CHECK (quarter[0].Radians () == doctest::Approx (0));
  CHECK (quarter[1].Radians () == doctest::Approx (pi / 2));
  CHECK (quarter[2].Radians () == doctest::Approx (pi));
  CHECK (quarter[3].Radians () == doctest::Approx (3 * pi / 2));

  const auto two = cb.DirectionsFor (kTwoPi / 2, Azimuth (pi / 3));
  REQUIRE (two.size () == 2);
  CHECK (two[0].Radians () == doctest::Approx (pi / 3));
  CHECK (two[1].Radians () == doctest::Approx (pi / 3 + pi));

  for (std::uint32_t n : cb.DirectionCounts ())
    {
      const auto a = cb.DirectionsFor (kTwoPi / n, Azimuth (0));
      const auto b = cb.DirectionsFor (kTwoPi / n, Azimuth (0.3));
      REQUIRE (a.size () == n);
      for (std::size_t j = 0; j < n; ++j)
        {
          // pure rotation by the anchor difference
          CHECK (AngularOffset (a[j] + 0.3, b[j]) == doctest::Approx (0.0).epsilon (1e-12));
        }
    }
  CHECK_THROWS_AS (cb.DirectionsFor (kTwoPi / 5, Azimuth (0)), std::invalid_argument);
}
