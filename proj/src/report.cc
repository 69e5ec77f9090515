#include "mmdisc/report.h"

#include "mmdisc/config_io.h"

#include <fmt/format.h>

#include <fstream>

namespace mmdisc {

using nlohmann::json;

std::string
FormatAxisValue (double value)
{
  return fmt::format ("{}", value);
}

std::string
UserCsv (const ExperimentResult &result)
{
  std::string out (kUserCsvHeader);
  out += '\n';
  for (std::size_t i = 0; i < result.users.size (); ++i)
    {
      const UserDrop &u = result.users[i];
      const TrialResult &t = result.trials[i];
      out += fmt::format ("{},{:.6f},{:.6f},{:.6f},{:.6f},{},", i, u.true_pos.x, u.true_pos.y, u.est_pos.x,
                          u.est_pos.y, t.detected ? 1 : 0);
      if (t.detected)
        {
          out += std::to_string (t.switches);
        }
      out += '\n';
    }
  return out;
}

json
SummaryJson (const ExperimentResult &result, std::optional<SweepPoint> point)
{
  json histogram = json::array ();
  for (const auto &[switches, count] : result.histogram)
    {
      histogram.push_back ({switches, count});
    }
  json doc;
  doc["schema"] = "mmdisc.summary/1";
  doc["seed"] = result.config.seed;
  doc["config"] = ConfigToJson (result.config);
  doc["mean_convention"] = "mean over detected users only; unreachable users reported separately";
  doc["users"] = result.trials.size ();
  doc["detected"] = result.detected_count;
  doc["unreachable_fraction"] = result.unreachable_fraction;
  doc["mean_switches"] = result.mean_switches ? json (*result.mean_switches) : json ();
  doc["ci_half_width"] = result.ci_half_width ? json (*result.ci_half_width) : json ();
  doc["confidence"] = result.config.confidence;
  doc["histogram"] = histogram;
  if (point && point->axis != SweepAxis::kNone)
    {
      doc["sweep"] = {{"axis", ToString (point->axis)}, {"value", point->value}};
    }
  return doc;
}

std::string
SweepCsv (SweepAxis axis, const std::vector<double> &values, const std::vector<ExperimentResult> &results)
{
  std::string out (kSweepCsvHeader);
  out += '\n';
  for (std::size_t i = 0; i < results.size (); ++i)
    {
      const auto &r = results[i];
      out += fmt::format ("{},{},{},{},{},{},{}\n", ToString (axis), FormatAxisValue (values.at (i)),
                          r.mean_switches ? fmt::format ("{}", *r.mean_switches) : std::string (),
                          r.ci_half_width ? fmt::format ("{}", *r.ci_half_width) : std::string (),
                          r.unreachable_fraction, r.detected_count, r.trials.size ());
    }
  return out;
}

void
WriteTextFile (const std::filesystem::path &path, std::string_view text)
{
  std::ofstream out (path, std::ios::binary | std::ios::trunc);
  if (!out)
    {
      throw OutputError ("cannot write " + path.string ());
    }
  out.write (text.data (), static_cast<std::streamsize> (text.size ()));
  out.close ();
  if (!out)
    {
      throw OutputError ("failed while writing " + path.string ());
    }
}

void
Emit (const ExperimentResult &result, const std::filesystem::path &dir, const std::string &stem,
      std::optional<SweepPoint> point)
{
  std::error_code ec;
  std::filesystem::create_directories (dir, ec);
  if (ec)
    {
      throw OutputError ("cannot create output directory " + dir.string () + ": " + ec.message ());
    }
  WriteTextFile (dir / (stem + ".csv"), UserCsv (result));
  WriteTextFile (dir / (stem + ".json"), SummaryJson (result, point).dump (2) + "\n");
}

} // namespace mmdisc
