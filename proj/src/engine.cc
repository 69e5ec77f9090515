#include "mmdisc/engine.h"

#include "mmdisc/random.h"
#include "mmdisc/stats.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace mmdisc {

std::string_view
ToString (SweepAxis axis)
{
  switch (axis)
    {
    case SweepAxis::kNone:
      return "none";
    case SweepAxis::kLocationErrorScale:
      return "location_error_scale_m";
    case SweepAxis::kEdpSectors:
      return "edp_sectors";
    }
  return "?";
}

SweepAxis
ParseSweepAxis (std::string_view name)
{
  for (auto a : {SweepAxis::kNone, SweepAxis::kLocationErrorScale, SweepAxis::kEdpSectors})
    {
      if (ToString (a) == name)
        {
          return a;
        }
    }
  throw std::invalid_argument ("sweep.axis: unknown value '" + std::string (name)
                               + "' (expected none, location_error_scale_m, edp_sectors)");
}

namespace {

std::string
JoinProblems (const std::vector<std::string> &problems)
{
  std::string msg = "invalid configuration:";
  for (const auto &p : problems)
    {
      msg += "\n  - " + p;
    }
  return msg;
}

} // namespace

ConfigError::ConfigError (std::vector<std::string> problems)
  : std::runtime_error (JoinProblems (problems)),
    m_problems (std::move (problems))
{
}

LinkBudget
ExperimentConfig::ResolvedBudget () const
{
  if (tx_power_override_dbm)
    {
      LinkBudget b = budget;
      b.tx_power_dbm = *tx_power_override_dbm;
      return b;
    }
  return CalibrateTxPower (budget, codebook.NarrowestWidth (), calibration_range_m);
}

void
ExperimentConfig::Validate () const
{
  std::vector<std::string> problems;
  auto check = [&] (auto &&fn) {
    try
      {
        fn ();
      }
    catch (const std::exception &e)
      {
        problems.emplace_back (e.what ());
      }
  };
  check ([&] { deployment.Validate (); });
  check ([&] { population.Validate (); });
  check ([&] { location_error.Validate (); });

  const auto &pl = budget.pathloss;
  if (!(pl.l0_m > 0.0))
    {
      problems.emplace_back ("pathloss.l0_m: must be positive");
    }
  if (!(pl.k_far > 0.0) || !(pl.k_near > 0.0))
    {
      problems.emplace_back ("pathloss.k_far/k_near: must be positive");
    }
  if (!(budget.snr_threshold_db >= 0.0))
    {
      problems.emplace_back ("link_budget.snr_threshold_db: must be non-negative");
    }
  if (!(budget.antenna.elevation_width > 0.0))
    {
      problems.emplace_back ("antenna.elevation_width_rad: must be positive");
    }
  if (!tx_power_override_dbm && !(calibration_range_m > 0.0))
    {
      problems.emplace_back ("link_budget.calibration_range_m: must be positive");
    }
  if (policy.kind == PolicyKind::kEdp && policy.edp_sectors < 1)
    {
      problems.emplace_back ("policy.edp_sectors: must be at least 1");
    }
  if (sweep.axis != SweepAxis::kNone)
    {
      if (sweep.values.empty ())
        {
          problems.emplace_back ("sweep.values: must not be empty when an axis is set");
        }
      for (double v : sweep.values)
        {
          if (sweep.axis == SweepAxis::kEdpSectors && (v < 1.0 || v != std::floor (v)))
            {
              problems.emplace_back ("sweep.values: edp_sectors values must be integers >= 1");
              break;
            }
          if (sweep.axis == SweepAxis::kLocationErrorScale && !(v >= 0.0 && std::isfinite (v)))
            {
              problems.emplace_back ("sweep.values: location error scales must be finite and >= 0");
              break;
            }
        }
    }
  if (parallelism < 1)
    {
      problems.emplace_back ("parallelism: must be at least 1");
    }
  if (!(confidence > 0.0 && confidence < 1.0))
    {
      problems.emplace_back ("confidence: must be in (0, 1)");
    }
  if (!problems.empty ())
    {
      throw ConfigError (std::move (problems));
    }
}

std::vector<std::uint32_t>
ExperimentResult::DetectedSwitches () const
{
  std::vector<std::uint32_t> out;
  out.reserve (detected_count);
  for (const auto &t : trials)
    {
      if (t.detected)
        {
          out.push_back (t.switches);
        }
    }
  return out;
}

TrialResult
RunTrial (const LinkBudget &budget, const Codebook & /*codebook*/, const Point2D &bs, const UserDrop &user,
          const ProbeSequence &sequence, std::size_t userIndex)
{
  if (sequence.probes.empty ())
    {
      throw std::invalid_argument ("run_trial: empty probe sequence");
    }
  TrialResult result;
  result.user_index = userIndex;
  const LinkGeometry link = MeasureLink (budget, bs, user.true_pos);
  for (std::size_t i = 0; i < sequence.probes.size (); ++i)
    {
      if (Detects (budget, sequence.probes[i].beam, link))
        {
          result.detected = true;
          result.switches = static_cast<std::uint32_t> (i + 1);
          result.detecting = sequence.probes[i];
          break;
        }
    }
  return result;
}

ProbeSequence
SequenceFor (const ExperimentConfig &config, const LinkBudget &budget, const UserDrop &user, std::size_t userIndex)
{
  if (config.policy.kind == PolicyKind::kRandom)
    {
      return RandomSequence (config.codebook,
                             SubstreamSeed (config.seed, StreamPurpose::kRandomPolicy, userIndex));
    }
  const Point2D &bs = config.deployment.bs_positions.at (user.serving_bs);
  const InitialConfig init = ComputeInitialConfig (budget, config.codebook, bs, user.est_pos);
  if (config.policy.kind == PolicyKind::kGreedy)
    {
      return GreedySequence (init, config.codebook, config.policy.probe_wider_after);
    }
  return EdpSequence (init, config.codebook, config.policy.edp_sectors, config.policy.probe_wider_after);
}

void
Aggregate (ExperimentResult &result)
{
  result.detected_count = 0;
  result.histogram.clear ();
  for (const auto &t : result.trials)
    {
      if (t.detected)
        {
          ++result.detected_count;
          ++result.histogram[t.switches];
        }
    }
  const auto switches = result.DetectedSwitches ();
  result.mean_switches.reset ();
  result.ci_half_width.reset ();
  if (switches.size () >= 2)
    {
      const MeanInterval mi = MeanCi (std::span<const std::uint32_t> (switches), result.config.confidence);
      result.mean_switches = mi.mean;
      result.ci_half_width = mi.half_width;
    }
  else if (switches.size () == 1)
    {
      result.mean_switches = static_cast<double> (switches.front ());
    }
  result.unreachable_fraction
      = result.trials.empty ()
            ? 0.0
            : static_cast<double> (result.trials.size () - result.detected_count)
                  / static_cast<double> (result.trials.size ());
}

ExperimentResult
RunExperiment (const ExperimentConfig &config)
{
  config.Validate ();
  ExperimentResult result;
  result.config = config;
  result.budget = config.ResolvedBudget ();
  result.users = DropUsers (config.population, config.location_error, config.deployment, config.seed);
  result.trials.resize (result.users.size ());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failureMutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < result.users.size (); i = next++)
      {
        try
          {
            const UserDrop &user = result.users[i];
            const ProbeSequence seq = SequenceFor (config, result.budget, user, i);
            result.trials[i]
                = RunTrial (result.budget, config.codebook, config.deployment.bs_positions[user.serving_bs], user, seq, i);
          }
        catch (...)
          {
            std::lock_guard lock (failureMutex);
            if (!failure)
              {
                failure = std::current_exception ();
              }
            next = result.users.size ();
          }
      }
  };

  const unsigned threads = std::max (1u, std::min<unsigned> (config.parallelism, result.users.size ()));
  if (threads == 1)
    {
      worker ();
    }
  else
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t)
        {
          pool.emplace_back (worker);
        }
    }
  if (failure)
    {
      std::rethrow_exception (failure);
    }
  Aggregate (result);
  return result;
}

ExperimentConfig
WithAxisValue (const ExperimentConfig &config, SweepAxis axis, double value)
{
  ExperimentConfig point = config;
  point.sweep = {};
  switch (axis)
    {
    case SweepAxis::kLocationErrorScale:
      point.location_error.scale_m = value;
      break;
    case SweepAxis::kEdpSectors:
      point.policy.edp_sectors = static_cast<std::uint32_t> (value);
      break;
    case SweepAxis::kNone:
      break;
    }
  return point;
}

std::vector<ExperimentResult>
Sweep (const ExperimentConfig &config, SweepAxis axis, const std::vector<double> &values)
{
  if (values.empty ())
    {
      throw ConfigError ({"sweep.values: must not be empty"});
    }
  std::vector<ExperimentResult> results;
  results.reserve (values.size ());
  for (double v : values)
    {
      if (axis == SweepAxis::kEdpSectors && (v < 1.0 || v != std::floor (v)))
        {
          throw ConfigError ({"sweep.values: edp_sectors values must be integers >= 1"});
        }
      results.push_back (RunExperiment (WithAxisValue (config, axis, v)));
    }
  return results;
}

} // namespace mmdisc
