#ifndef MMDISC_REPRODUCE_H
#define MMDISC_REPRODUCE_H

#include "mmdisc/engine.h"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mmdisc {

struct ReproduceOptions
{
  std::filesystem::path out_dir = "results";
  std::uint64_t seed = 1;
  unsigned parallelism = 1;
  std::uint32_t users = 1000;
};

/// fig3, fig5a, fig5b, fig5c, fig5d.
const std::vector<std::string> &FigureIds ();

/// Users dropped normally (σ = 40 m) around the BSs, none within 100 m of any BS.
ExperimentConfig EdgeUserScenario ();
/// Users dropped normally (σ = 40 m) around the BSs.
ExperimentConfig NormalUserScenario ();

struct CurveFile
{
  std::string label;
  std::filesystem::path csv;
};

/**
 * Runs the scenario family behind one figure and writes one CSV per curve
 * plus <id>_manifest.json. fig3 curves are per-user CSVs (Random policy,
 * five user distributions); fig5 curves are sweep CSVs. Throws
 * std::invalid_argument for an unknown id.
 */
std::vector<CurveFile> ReproduceFigure (std::string_view id, const ReproduceOptions &options);

} // namespace mmdisc

#endif
