#include "mmdisc/reproduce.h"

#include "mmdisc/report.h"

#include <fmt/format.h>

#include <stdexcept>

namespace mmdisc {

using nlohmann::json;

const std::vector<std::string> &
FigureIds ()
{
  static const std::vector<std::string> ids{"fig3", "fig5a", "fig5b", "fig5c", "fig5d"};
  return ids;
}

ExperimentConfig
EdgeUserScenario ()
{
  ExperimentConfig cfg;
  cfg.population.kind = PopulationKind::kNormalForbidden;
  cfg.population.sigma_m = 40.0;
  cfg.population.forbidden_radius_m = 100.0;
  return cfg;
}

ExperimentConfig
NormalUserScenario ()
{
  ExperimentConfig cfg;
  cfg.population.kind = PopulationKind::kNormal;
  cfg.population.sigma_m = 40.0;
  return cfg;
}

namespace {

const std::vector<double> kErrorScales{0, 5, 10, 15, 20, 25, 30};
const std::vector<double> kSectorCounts{1, 2, 3, 4, 6, 8, 12};
const std::vector<std::uint32_t> kSectorCurves{1, 2, 3, 4, 6, 12};

void
Prepare (ExperimentConfig &cfg, const ReproduceOptions &options)
{
  cfg.seed = options.seed;
  cfg.parallelism = options.parallelism;
  cfg.population.count = options.users;
}

CurveFile
WriteSweepCurve (const ReproduceOptions &options, const std::string &stem, const std::string &label,
                 SweepAxis axis, const std::vector<double> &values, const std::vector<ExperimentResult> &results)
{
  std::filesystem::create_directories (options.out_dir);
  const auto path = options.out_dir / (stem + ".csv");
  WriteTextFile (path, SweepCsv (axis, values, results));
  return {label, path};
}

std::vector<CurveFile>
Fig3 (const ReproduceOptions &options)
{
  struct Curve
  {
    const char *stem;
    const char *label;
    PopulationKind kind;
    double sigma;
    double forbidden;
  };
  const Curve curves[] = {
      {"fig3_normal_s20", "normal sigma=20m", PopulationKind::kNormal, 20, 0},
      {"fig3_normal_s40", "normal sigma=40m", PopulationKind::kNormal, 40, 0},
      {"fig3_uniform", "uniform", PopulationKind::kUniform, 40, 0},
      {"fig3_forbidden_s20_r50", "normal sigma=20m, forbidden 50m", PopulationKind::kNormalForbidden, 20, 50},
      {"fig3_forbidden_s40_r100", "normal sigma=40m, forbidden 100m", PopulationKind::kNormalForbidden, 40, 100},
  };
  std::vector<CurveFile> files;
  for (const auto &c : curves)
    {
      ExperimentConfig cfg;
      cfg.policy.kind = PolicyKind::kRandom;
      cfg.population.kind = c.kind;
      cfg.population.sigma_m = c.sigma;
      cfg.population.forbidden_radius_m = c.forbidden;
      Prepare (cfg, options);
      Emit (RunExperiment (cfg), options.out_dir, c.stem);
      files.push_back ({c.label, options.out_dir / (std::string (c.stem) + ".csv")});
    }
  return files;
}

std::vector<CurveFile>
AccuracyFigure (const std::string &id, ExperimentConfig base, const ReproduceOptions &options)
{
  Prepare (base, options);
  std::vector<CurveFile> files;
  ExperimentConfig greedy = base;
  greedy.policy.kind = PolicyKind::kGreedy;
  files.push_back (WriteSweepCurve (options, id + "_greedy", "greedy", SweepAxis::kLocationErrorScale, kErrorScales,
                                    Sweep (greedy, SweepAxis::kLocationErrorScale, kErrorScales)));
  for (std::uint32_t n : kSectorCurves)
    {
      ExperimentConfig edp = base;
      edp.policy.kind = PolicyKind::kEdp;
      edp.policy.edp_sectors = n;
      files.push_back (WriteSweepCurve (options, fmt::format ("{}_edp_n{}", id, n),
                                        fmt::format ("EDP {} deg sectors", 360 / n), SweepAxis::kLocationErrorScale,
                                        kErrorScales, Sweep (edp, SweepAxis::kLocationErrorScale, kErrorScales)));
    }
  return files;
}

std::vector<CurveFile>
SectorFigure (const std::string &id, ExperimentConfig base, const std::vector<double> &errors,
              const ReproduceOptions &options)
{
  Prepare (base, options);
  std::vector<CurveFile> files;
  for (double err : errors)
    {
      ExperimentConfig edp = base;
      edp.policy.kind = PolicyKind::kEdp;
      edp.location_error.scale_m = err;
      files.push_back (WriteSweepCurve (options, fmt::format ("{}_edp_err{}", id, FormatAxisValue (err)),
                                        fmt::format ("EDP, error {} m", FormatAxisValue (err)), SweepAxis::kEdpSectors,
                                        kSectorCounts, Sweep (edp, SweepAxis::kEdpSectors, kSectorCounts)));

      // greedy ignores the sector count: one run, repeated at every x
      ExperimentConfig greedy = edp;
      greedy.policy.kind = PolicyKind::kGreedy;
      const ExperimentResult flat = RunExperiment (greedy);
      const std::vector<ExperimentResult> rows (kSectorCounts.size (), flat);
      files.push_back (WriteSweepCurve (options, fmt::format ("{}_greedy_err{}", id, FormatAxisValue (err)),
                                        fmt::format ("greedy, error {} m", FormatAxisValue (err)),
                                        SweepAxis::kEdpSectors, kSectorCounts, rows));
    }
  return files;
}

} // namespace

std::vector<CurveFile>
ReproduceFigure (std::string_view id, const ReproduceOptions &options)
{
  std::vector<CurveFile> files;
  if (id == "fig3")
    {
      files = Fig3 (options);
    }
  else if (id == "fig5a")
    {
      files = AccuracyFigure ("fig5a", EdgeUserScenario (), options);
    }
  else if (id == "fig5b")
    {
      files = SectorFigure ("fig5b", EdgeUserScenario (), {5, 10, 15, 20}, options);
    }
  else if (id == "fig5c")
    {
      files = AccuracyFigure ("fig5c", NormalUserScenario (), options);
    }
  else if (id == "fig5d")
    {
      files = SectorFigure ("fig5d", NormalUserScenario (), {2, 5, 10}, options);
    }
  else
    {
      std::string valid;
      for (const auto &f : FigureIds ())
        {
          valid += (valid.empty () ? "" : ", ") + f;
        }
      throw std::invalid_argument ("unknown figure id '" + std::string (id) + "'; valid ids: " + valid);
    }

  json manifest;
  manifest["figure"] = id;
  manifest["seed"] = options.seed;
  manifest["users"] = options.users;
  manifest["curves"] = json::array ();
  for (const auto &f : files)
    {
      manifest["curves"].push_back ({{"label", f.label}, {"csv", f.csv.filename ().string ()}});
    }
  WriteTextFile (options.out_dir / (std::string (id) + "_manifest.json"), manifest.dump (2) + "\n");
  return files;
}

} // namespace mmdisc
