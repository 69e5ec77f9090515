#ifndef MMDISC_ENGINE_H
#define MMDISC_ENGINE_H

#include "mmdisc/antenna.h"
#include "mmdisc/channel.h"
#include "mmdisc/policy.h"
#include "mmdisc/scenario.h"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mmdisc {

struct PolicySpec
{
  PolicyKind kind = PolicyKind::kGreedy;
  std::uint32_t edp_sectors = 1;
  bool probe_wider_after = false;
};

enum class SweepAxis
{
  kNone,
  kLocationErrorScale,
  kEdpSectors,
};

std::string_view ToString (SweepAxis axis);
SweepAxis ParseSweepAxis (std::string_view name);

struct SweepSpec
{
  SweepAxis axis = SweepAxis::kNone;
  std::vector<double> values;
};

/// Invalid configuration; lists every offending field.
class ConfigError : public std::runtime_error
{
public:
  explicit ConfigError (std::vector<std::string> problems);
  const std::vector<std::string> &Problems () const { return m_problems; }

private:
  std::vector<std::string> m_problems;
};

struct ExperimentConfig
{
  Deployment deployment = Deployment::Default ();
  PopulationSpec population;
  LocationErrorSpec location_error;
  /// tx_power_dbm in here is only used when tx_power_override_dbm is set.
  LinkBudget budget;
  std::optional<double> tx_power_override_dbm;
  /// Without an override, tx power is set so the narrowest beam reaches this far on boresight.
  double calibration_range_m = 200.0;
  Codebook codebook;
  PolicySpec policy;
  SweepSpec sweep;
  std::uint64_t seed = 1;
  unsigned parallelism = 1;
  double confidence = 0.95;

  /// Link budget with the calibration applied.
  LinkBudget ResolvedBudget () const;
  /// Throws ConfigError listing every problem found.
  void Validate () const;
};

struct TrialResult
{
  std::size_t user_index = 0;
  bool detected = false;
  std::uint32_t switches = 0; // 1-based index of the detecting probe; 0 when not detected
  std::optional<Probe> detecting;
};

struct ExperimentResult
{
  ExperimentConfig config;
  LinkBudget budget; // resolved
  std::vector<UserDrop> users;
  std::vector<TrialResult> trials;
  std::size_t detected_count = 0;
  /// Averages over detected users only; empty when nobody was detected.
  std::optional<double> mean_switches;
  /// Needs at least two detected users.
  std::optional<double> ci_half_width;
  double unreachable_fraction = 0.0;
  std::map<std::uint32_t, std::size_t> histogram;

  std::vector<std::uint32_t> DetectedSwitches () const;
};

/// Walks `sequence` until a probe is detected at the user's true position.
TrialResult RunTrial (const LinkBudget &budget, const Codebook &codebook, const Point2D &bs, const UserDrop &user,
                      const ProbeSequence &sequence, std::size_t userIndex = 0);

/// The probe sequence `config.policy` prescribes for one user.
ProbeSequence SequenceFor (const ExperimentConfig &config, const LinkBudget &budget, const UserDrop &user,
                           std::size_t userIndex);

/// Full experiment; output depends only on the config, never on parallelism.
ExperimentResult RunExperiment (const ExperimentConfig &config);

/// Fills the aggregate fields of `result` from its trials.
void Aggregate (ExperimentResult &result);

/// Applies one sweep value to a copy of `config`.
ExperimentConfig WithAxisValue (const ExperimentConfig &config, SweepAxis axis, double value);

/// One experiment per value with a shared seed, so only the swept axis differs between points.
std::vector<ExperimentResult> Sweep (const ExperimentConfig &config, SweepAxis axis, const std::vector<double> &values);

} // namespace mmdisc

#endif
