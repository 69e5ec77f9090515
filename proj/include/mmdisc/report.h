#ifndef MMDISC_REPORT_H
#define MMDISC_REPORT_H

#include "mmdisc/engine.h"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmdisc {

/// Column header of the per-user CSV.
inline constexpr std::string_view kUserCsvHeader = "user_index,true_x,true_y,est_x,est_y,detected,switches";

/// Column header of the per-curve sweep CSV.
inline constexpr std::string_view kSweepCsvHeader
    = "axis,axis_value,mean_switches,ci_half_width,unreachable_fraction,detected,users";

/// Thrown when an output file cannot be written.
class OutputError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Identifies a result as one point of a sweep.
struct SweepPoint
{
  SweepAxis axis = SweepAxis::kNone;
  double value = 0.0;
};

std::string UserCsv (const ExperimentResult &result);
nlohmann::json SummaryJson (const ExperimentResult &result, std::optional<SweepPoint> point = std::nullopt);
std::string SweepCsv (SweepAxis axis, const std::vector<double> &values, const std::vector<ExperimentResult> &results);

/// Writes <dir>/<stem>.csv and <dir>/<stem>.json, creating dir if needed.
void Emit (const ExperimentResult &result, const std::filesystem::path &dir, const std::string &stem,
           std::optional<SweepPoint> point = std::nullopt);

/// Writes `text` byte-for-byte; throws OutputError on failure.
void WriteTextFile (const std::filesystem::path &path, std::string_view text);

/// "10", "2.5": shortest round-trip spelling, used in file names and the axis column.
std::string FormatAxisValue (double value);

} // namespace mmdisc

#endif
