#ifndef MMDISC_STATS_H
#define MMDISC_STATS_H

#include <cstdint>
#include <span>
#include <vector>

namespace mmdisc {

/// Right-continuous step CDF of integer samples (switch counts).
class EmpiricalCdf
{
public:
  /// Throws std::invalid_argument on empty input.
  explicit EmpiricalCdf (std::span<const std::uint32_t> samples);

  /// Fraction of samples <= x.
  double operator() (double x) const;
  /// Smallest sample value v with F(v) >= q, for q in (0, 1].
  std::uint32_t Quantile (double q) const;

  std::size_t Size () const { return m_sorted.size (); }
  const std::vector<std::uint32_t> &Sorted () const { return m_sorted; }

  /// Distinct sample values with F at each, ascending.
  struct Step
  {
    std::uint32_t value;
    double cumulative;
  };
  std::vector<Step> Steps () const;

private:
  std::vector<std::uint32_t> m_sorted;
};

struct MeanInterval
{
  double mean = 0.0;
  double half_width = 0.0;
};

/**
 * Sample mean with a normal-approximation interval z * s / sqrt(n), s the
 * unbiased standard deviation. Needs at least two samples and a confidence
 * level in (0, 1); throws std::invalid_argument otherwise.
 */
MeanInterval MeanCi (std::span<const double> samples, double confidence = 0.95);
MeanInterval MeanCi (std::span<const std::uint32_t> samples, double confidence = 0.95);

} // namespace mmdisc

#endif
