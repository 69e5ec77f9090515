#include "mmdisc/config_io.h"
#include "mmdisc/engine.h"
#include "mmdisc/report.h"
#include "mmdisc/reproduce.h"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <tuple>

namespace py = pybind11;
using namespace mmdisc;
using nlohmann::json;

namespace {

using Xy = std::pair<double, double>;
using ProbeTuple = std::tuple<std::size_t, std::uint32_t, double, double>;

Point2D
ToPoint (const Xy &p)
{
  return {p.first, p.second};
}

Codebook
MakeCodebook (const std::optional<std::vector<std::uint32_t>> &counts)
{
  return counts ? Codebook (*counts) : Codebook ();
}

std::vector<ProbeTuple>
ToTuples (const ProbeSequence &seq)
{
  std::vector<ProbeTuple> out;
  out.reserve (seq.probes.size ());
  for (const auto &p : seq.probes)
    {
      out.emplace_back (p.level, p.slot, p.beam.width, p.beam.boresight.Radians ());
    }
  return out;
}

json
ResultJson (const ExperimentResult &r, std::optional<SweepPoint> point = std::nullopt)
{
  json doc = SummaryJson (r, point);
  json users = json::array ();
  for (std::size_t i = 0; i < r.users.size (); ++i)
    {
      const auto &u = r.users[i];
      const auto &t = r.trials[i];
      users.push_back ({{"true_pos", {u.true_pos.x, u.true_pos.y}},
                        {"est_pos", {u.est_pos.x, u.est_pos.y}},
                        {"serving_bs", u.serving_bs},
                        {"detected", t.detected},
                        {"switches", t.detected ? json (t.switches) : json (nullptr)}});
    }
  doc["per_user"] = std::move (users);
  return doc;
}

ExperimentConfig
ParseConfig (const std::string &text)
{
  return ParseRunSpec (json::parse (text)).experiment;
}

} // namespace

PYBIND11_MODULE (_mmdisc, m)
{
  m.doc () = "Directional cell discovery simulator for mm-wave base stations";

  py::register_exception<ConfigError> (m, "ConfigError", PyExc_ValueError);

  m.def ("azimuth_to", [] (Xy from, Xy to) { return AzimuthTo (ToPoint (from), ToPoint (to)).Radians (); },
         py::arg ("origin"), py::arg ("target"));
  m.def ("angular_offset", [] (double a, double b) { return AngularOffset (Azimuth (a), Azimuth (b)); });

  m.def ("peak_gain", &PeakGain, py::arg ("width"), py::arg ("elevation_width") = AntennaPattern{}.elevation_width);
  m.def (
      "gain_at_offset",
      [] (double width, double offset, const std::string &model) {
        AntennaPattern pattern;
        pattern.model = model == "linear" ? GainModel::kLinear : GainModel::kQuadratic;
        return GainAtOffset (width, offset, pattern);
      },
      py::arg ("width"), py::arg ("offset"), py::arg ("model") = "quadratic");
  m.def ("pathloss", [] (double l) { return Pathloss (PathlossModel{}, l); }, py::arg ("distance_m"));

  m.def (
      "calibrated_tx_power",
      [] (double rangeM) { return CalibrateTxPower (LinkBudget{}, Codebook ().NarrowestWidth (), rangeM).tx_power_dbm; },
      py::arg ("calibration_range_m") = 200.0);
  m.def (
      "boresight_range",
      [] (double width, double rangeM) {
        const auto b = CalibrateTxPower (LinkBudget{}, Codebook ().NarrowestWidth (), rangeM);
        return RangeOnBoresight (b, width).meters;
      },
      py::arg ("width"), py::arg ("calibration_range_m") = 200.0);

  m.def (
      "random_sequence",
      [] (std::uint64_t seed, std::optional<std::vector<std::uint32_t>> counts) {
        return ToTuples (RandomSequence (MakeCodebook (counts), seed));
      },
      py::arg ("seed"), py::arg ("direction_counts") = py::none ());
  m.def (
      "greedy_sequence",
      [] (std::size_t level, double dirStar, std::optional<std::vector<std::uint32_t>> counts, bool wider) {
        const Codebook cb = MakeCodebook (counts);
        return ToTuples (GreedySequence ({level, cb.Width (level), Azimuth (dirStar)}, cb, wider));
      },
      py::arg ("level"), py::arg ("dir_star"), py::arg ("direction_counts") = py::none (),
      py::arg ("probe_wider_after") = false);
  m.def (
      "edp_sequence",
      [] (std::size_t level, double dirStar, std::uint32_t sectors, std::optional<std::vector<std::uint32_t>> counts,
          bool wider) {
        const Codebook cb = MakeCodebook (counts);
        return ToTuples (EdpSequence ({level, cb.Width (level), Azimuth (dirStar)}, cb, sectors, wider));
      },
      py::arg ("level"), py::arg ("dir_star"), py::arg ("sectors"), py::arg ("direction_counts") = py::none (),
      py::arg ("probe_wider_after") = false);

  m.def (
      "run_experiment_json",
      [] (const std::string &config) {
        const ExperimentConfig cfg = ParseConfig (config);
        py::gil_scoped_release release;
        return ResultJson (RunExperiment (cfg)).dump ();
      },
      py::arg ("config_json"));
  m.def (
      "sweep_json",
      [] (const std::string &config) {
        const ExperimentConfig cfg = ParseConfig (config);
        py::gil_scoped_release release;
        const auto results = Sweep (cfg, cfg.sweep.axis, cfg.sweep.values);
        json out = json::array ();
        for (std::size_t i = 0; i < results.size (); ++i)
          {
            out.push_back (ResultJson (results[i], SweepPoint{cfg.sweep.axis, cfg.sweep.values[i]}));
          }
        return out.dump ();
      },
      py::arg ("config_json"));
  m.def (
      "reproduce",
      [] (const std::string &figure, const std::filesystem::path &outDir, std::uint64_t seed, std::uint32_t users,
          unsigned parallelism) {
        ReproduceOptions options{outDir, seed, parallelism, users};
        std::vector<std::pair<std::string, std::filesystem::path>> out;
        py::gil_scoped_release release;
        for (const auto &f : ReproduceFigure (figure, options))
          {
            out.emplace_back (f.label, f.csv);
          }
        return out;
      },
      py::arg ("figure"), py::arg ("out_dir"), py::arg ("seed") = 1, py::arg ("users") = 1000,
      py::arg ("parallelism") = 1);
  m.attr ("figure_ids") = FigureIds ();
}
