#include "mmdisc/stats.h"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmdisc {

EmpiricalCdf::EmpiricalCdf (std::span<const std::uint32_t> samples)
  : m_sorted (samples.begin (), samples.end ())
{
  if (m_sorted.empty ())
    {
      throw std::invalid_argument ("cdf: no samples");
    }
  std::sort (m_sorted.begin (), m_sorted.end ());
}

double
EmpiricalCdf::operator() (double x) const
{
  // count of samples <= x; comparing in double keeps non-integer x exact
  const auto it = std::upper_bound (m_sorted.begin (), m_sorted.end (), x,
                                    [] (double v, std::uint32_t s) { return v < static_cast<double> (s); });
  return static_cast<double> (it - m_sorted.begin ()) / static_cast<double> (m_sorted.size ());
}

std::uint32_t
EmpiricalCdf::Quantile (double q) const
{
  if (!(q > 0.0 && q <= 1.0))
    {
      throw std::invalid_argument ("quantile: q must be in (0, 1]");
    }
  const auto n = static_cast<double> (m_sorted.size ());
  auto k = static_cast<std::size_t> (std::ceil (q * n));
  k = std::clamp<std::size_t> (k, 1, m_sorted.size ());
  return m_sorted[k - 1];
}

std::vector<EmpiricalCdf::Step>
EmpiricalCdf::Steps () const
{
  std::vector<Step> steps;
  const auto n = static_cast<double> (m_sorted.size ());
  for (std::size_t i = 0; i < m_sorted.size (); ++i)
    {
      if (i + 1 == m_sorted.size () || m_sorted[i + 1] != m_sorted[i])
        {
          steps.push_back ({m_sorted[i], static_cast<double> (i + 1) / n});
        }
    }
  return steps;
}

MeanInterval
MeanCi (std::span<const double> samples, double confidence)
{
  if (samples.size () < 2)
    {
      throw std::invalid_argument ("mean_ci: at least two samples are required");
    }
  if (!(confidence > 0.0 && confidence < 1.0))
    {
      throw std::invalid_argument ("mean_ci: confidence must be in (0, 1)");
    }
  const auto n = static_cast<double> (samples.size ());
  double sum = 0.0;
  for (double v : samples)
    {
      sum += v;
    }
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : samples)
    {
      ss += (v - mean) * (v - mean);
    }
  const double sd = std::sqrt (ss / (n - 1.0));
  const boost::math::normal_distribution<double> standard;
  const double z = boost::math::quantile (standard, 0.5 + confidence / 2.0);
  return {mean, z * sd / std::sqrt (n)};
}

MeanInterval
MeanCi (std::span<const std::uint32_t> samples, double confidence)
{
  std::vector<double> values (samples.begin (), samples.end ());
  return MeanCi (std::span<const double> (values), confidence);
}

} // namespace mmdisc
