#include "mmdisc/cli.h"

#include "mmdisc/config_io.h"
#include "mmdisc/report.h"
#include "mmdisc/reproduce.h"

#include "CLI11.hpp"

#include <fmt/format.h>

#include <optional>
#include <string>

namespace mmdisc {

namespace {

void
PrintHeader (std::ostream &out, const ExperimentResult &r)
{
  const LinkBudget &b = r.budget;
  out << fmt::format ("# policy={} seed={} users={} tx_power_dbm={:.4f} threshold_dbm={:.2f} "
                      "narrowest_range_m={:.2f}\n",
                      ToString (r.config.policy.kind), r.config.seed, r.trials.size (), b.tx_power_dbm,
                      b.ThresholdDbm (), RangeOnBoresight (b, r.config.codebook.NarrowestWidth ()).meters);
}

void
PrintSummary (std::ostream &out, const std::string &what, const ExperimentResult &r)
{
  out << fmt::format ("{}: mean_switches={} ci_half_width={} unreachable_fraction={:.4f} (mean over detected users)\n",
                      what, r.mean_switches ? fmt::format ("{:.3f}", *r.mean_switches) : "n/a",
                      r.ci_half_width ? fmt::format ("{:.3f}", *r.ci_half_width) : "n/a", r.unreachable_fraction);
}

int
CmdRun (const std::string &configPath, std::optional<std::uint64_t> seed, std::optional<std::string> outDir,
        std::optional<unsigned> parallelism, std::ostream &out)
{
  RunSpec spec = LoadRunSpec (configPath);
  if (seed)
    {
      spec.experiment.seed = *seed;
    }
  if (outDir)
    {
      spec.output.dir = *outDir;
    }
  if (parallelism)
    {
      spec.experiment.parallelism = *parallelism;
    }
  spec.experiment.Validate ();

  const ExperimentConfig &cfg = spec.experiment;
  const std::filesystem::path dir = spec.output.dir;
  if (cfg.sweep.axis == SweepAxis::kNone)
    {
      const ExperimentResult result = RunExperiment (cfg);
      PrintHeader (out, result);
      Emit (result, dir, spec.output.prefix);
      PrintSummary (out, spec.output.prefix, result);
      return kExitOk;
    }

  const auto results = Sweep (cfg, cfg.sweep.axis, cfg.sweep.values);
  PrintHeader (out, results.front ());
  for (std::size_t i = 0; i < results.size (); ++i)
    {
      const std::string stem
          = fmt::format ("{}_{}_{}", spec.output.prefix, ToString (cfg.sweep.axis), FormatAxisValue (cfg.sweep.values[i]));
      Emit (results[i], dir, stem, SweepPoint{cfg.sweep.axis, cfg.sweep.values[i]});
      PrintSummary (out, stem, results[i]);
    }
  WriteTextFile (dir / (spec.output.prefix + "_sweep.csv"), SweepCsv (cfg.sweep.axis, cfg.sweep.values, results));
  return kExitOk;
}

} // namespace

int
RunCli (int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Directional cell discovery simulator for mm-wave base stations", "mmdisc"};
  app.require_subcommand (1);

  std::string configPath;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> outDir;
  std::optional<unsigned> parallelism;

  auto *run = app.add_subcommand ("run", "Run one experiment (or sweep) from a JSON config");
  run->add_option ("config_path", configPath, "Config file (same as --config)")->type_name ("FILE");
  run->add_option ("--config,-c", configPath, "Config file")->type_name ("FILE");
  run->add_option ("--seed", seed, "Override the top-level seed");
  run->add_option ("--out,-o", outDir, "Output directory");
  run->add_option ("--parallelism,-j", parallelism, "Worker threads")->check (CLI::PositiveNumber);

  std::string figure;
  ReproduceOptions repro;
  auto *reproduce = app.add_subcommand ("reproduce", "Regenerate the data behind one figure");
  reproduce->add_option ("figure", figure, "fig3 | fig5a | fig5b | fig5c | fig5d")->required ();
  reproduce->add_option ("--out,-o", repro.out_dir, "Output directory");
  reproduce->add_option ("--seed", repro.seed, "Top-level seed");
  reproduce->add_option ("--parallelism,-j", repro.parallelism, "Worker threads")->check (CLI::PositiveNumber);
  reproduce->add_option ("--users", repro.users, "Users per experiment")->check (CLI::PositiveNumber);

  try
    {
      app.parse (argc, argv);
    }
  catch (const CLI::CallForHelp &)
    {
      out << app.help ();
      return kExitOk;
    }
  catch (const CLI::CallForAllHelp &)
    {
      out << app.help ("", CLI::AppFormatMode::All);
      return kExitOk;
    }
  catch (const CLI::ParseError &e)
    {
      err << "error: " << e.what () << "\n";
      return kExitConfigError;
    }

  try
    {
      if (run->parsed ())
        {
          if (configPath.empty ())
            {
              err << "error: run needs a config file (--config FILE)\n";
              return kExitConfigError;
            }
          return CmdRun (configPath, seed, outDir, parallelism, out);
        }
      const auto &ids = FigureIds ();
      if (std::find (ids.begin (), ids.end (), figure) == ids.end ())
        {
          std::string valid;
          for (const auto &f : ids)
            {
              valid += (valid.empty () ? "" : ", ") + f;
            }
          err << "error: unknown figure id '" << figure << "'; valid ids: " << valid << "\n";
          return kExitConfigError;
        }
      for (const auto &curve : ReproduceFigure (figure, repro))
        {
          out << curve.csv.string () << "  (" << curve.label << ")\n";
        }
      return kExitOk;
    }
  catch (const ConfigError &e)
    {
      err << "error: " << e.what () << "\n";
      return kExitConfigError;
    }
  catch (const std::exception &e)
    {
      err << "error: " << e.what () << "\n";
      return kExitRuntimeError;
    }
}

} // namespace mmdisc
