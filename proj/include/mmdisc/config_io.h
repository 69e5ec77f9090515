#ifndef MMDISC_CONFIG_IO_H
#define MMDISC_CONFIG_IO_H

#include "mmdisc/engine.h"

#include "json.hpp"

#include <filesystem>
#include <string>

namespace mmdisc {

/// Where a run writes its files: <dir>/<prefix>.csv and <dir>/<prefix>.json.
struct OutputSpec
{
  std::string dir = "results";
  std::string prefix = "run";
};

struct RunSpec
{
  ExperimentConfig experiment;
  OutputSpec output;
};

/**
 * Builds a run from a JSON document. Absent keys keep their defaults;
 * unknown keys, wrong types and out-of-range values are all reported
 * together in one ConfigError.
 */
RunSpec ParseRunSpec (const nlohmann::json &doc);

/// Reads and parses a config file. A missing or malformed file is a ConfigError naming the path.
RunSpec LoadRunSpec (const std::filesystem::path &path);

/// The fully resolved config, including the calibrated transmit power.
nlohmann::json ConfigToJson (const ExperimentConfig &config);

} // namespace mmdisc

#endif
