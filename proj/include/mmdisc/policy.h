#ifndef MMDISC_POLICY_H
#define MMDISC_POLICY_H

#include "mmdisc/antenna.h"
#include "mmdisc/channel.h"
#include "mmdisc/geometry.h"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace mmdisc {

enum class PolicyKind
{
  kRandom,
  kGreedy,
  kEdp,
};

std::string_view ToString (PolicyKind kind);
PolicyKind ParsePolicyKind (std::string_view name);

/// Beam-width and pointing direction aimed at the estimated user position.
struct InitialConfig
{
  std::size_t level = 0;
  double width_star = kTwoPi;
  Azimuth dir_star;
};

/**
 * One probe: grid slot `slot` of codebook level `level` on a grid anchored
 * at the owning sequence's anchor. (level, slot) is the probe identity;
 * `beam` is the derived antenna configuration.
 */
struct Probe
{
  std::size_t level = 0;
  std::uint32_t slot = 0;
  BeamConfig beam;
};

struct ProbeSequence
{
  PolicyKind policy = PolicyKind::kRandom;
  std::uint32_t sectors = 1; // EDP only
  Azimuth anchor;            // grid anchor shared by every probe
  std::vector<Probe> probes;
};

/**
 * Widest codebook width whose boresight range covers the estimated distance,
 * or the narrowest width when none does; direction points at the estimate.
 * Throws std::domain_error when the estimate coincides with the BS.
 */
InitialConfig ComputeInitialConfig (const LinkBudget &budget, const Codebook &codebook, const Point2D &bs,
                                    const Point2D &est);

/// Uniformly shuffled permutation of every (width, direction) pair on the 0-anchored grid.
ProbeSequence RandomSequence (const Codebook &codebook, std::uint64_t seed);

/**
 * Discovery Greedy Search. Starts at (θ*, d*), sweeps the rest of the
 * d*-anchored grid at θ*, then sweeps each narrower level in full starting
 * from d*. Sweeps advance in the direction of increasing azimuth.
 * With `probeWiderAfter`, the wider levels are swept afterwards, next-wider first.
 */
ProbeSequence GreedySequence (const InitialConfig &init, const Codebook &codebook, bool probeWiderAfter = false);

/**
 * Enhanced Discovery Procedure over `sectors` equal sectors, sector 0
 * centered on d*. Sectors are visited 0, +1, -1, +2, -2, ... . Inside a
 * sector every level from θ* down to the narrowest is scanned in turn,
 * starting from the grid direction closest to the sector's image of d* and
 * alternating +1, -1, +2, -2 steps around it. A probe belongs to the sector
 * holding its boresight. Throws std::invalid_argument when sectors < 1.
 */
ProbeSequence EdpSequence (const InitialConfig &init, const Codebook &codebook, std::uint32_t sectors,
                           bool probeWiderAfter = false);

struct OracleVerdict
{
  bool reachable = false;
  std::optional<Probe> best; // strongest detecting configuration
  double best_power_dbm = 0.0;
};

/// Brute force over every codebook configuration on the grid anchored at `anchor`.
OracleVerdict OracleReachable (const LinkBudget &budget, const Codebook &codebook, const Point2D &bs,
                               const Point2D &ue, Azimuth anchor = Azimuth ());

} // namespace mmdisc

#endif
