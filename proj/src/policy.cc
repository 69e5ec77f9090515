#include "mmdisc/policy.h"

#include "mmdisc/random.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace mmdisc {

std::string_view
ToString (PolicyKind kind)
{
  switch (kind)
    {
    case PolicyKind::kRandom:
      return "random";
    case PolicyKind::kGreedy:
      return "greedy";
    case PolicyKind::kEdp:
      return "edp";
    }
  return "?";
}

PolicyKind
ParsePolicyKind (std::string_view name)
{
  for (auto k : {PolicyKind::kRandom, PolicyKind::kGreedy, PolicyKind::kEdp})
    {
      if (ToString (k) == name)
        {
          return k;
        }
    }
  throw std::invalid_argument ("policy.kind: unknown value '" + std::string (name)
                               + "' (expected random, greedy, edp)");
}

InitialConfig
ComputeInitialConfig (const LinkBudget &budget, const Codebook &codebook, const Point2D &bs, const Point2D &est)
{
  const Azimuth dir = AzimuthTo (bs, est);
  const double distance = Distance (bs, est);
  std::size_t chosen = codebook.Levels () - 1;
  for (std::size_t level = 0; level < codebook.Levels (); ++level)
    {
      const BoresightRange range = RangeOnBoresight (budget, codebook.Width (level));
      if (range.covered && range.meters >= distance)
        {
          chosen = level;
          break;
        }
    }
  return {chosen, codebook.Width (chosen), dir};
}

ProbeSequence
RandomSequence (const Codebook &codebook, std::uint64_t seed)
{
  ProbeSequence seq;
  seq.policy = PolicyKind::kRandom;
  seq.probes.reserve (codebook.ConfigurationCount ());
  for (std::size_t level = 0; level < codebook.Levels (); ++level)
    {
      for (std::uint32_t slot = 0; slot < codebook.Count (level); ++slot)
        {
          seq.probes.push_back ({level, slot, codebook.Beam (level, slot, seq.anchor)});
        }
    }
  Rng rng (seed);
  for (std::size_t i = seq.probes.size (); i > 1; --i)
    {
      std::swap (seq.probes[i - 1], seq.probes[rng.Below (i)]);
    }
  return seq;
}

namespace {

void
AppendSweep (ProbeSequence &seq, const Codebook &codebook, std::size_t level)
{
  for (std::uint32_t slot = 0; slot < codebook.Count (level); ++slot)
    {
      seq.probes.push_back ({level, slot, codebook.Beam (level, slot, seq.anchor)});
    }
}

void
AppendWiderLevels (ProbeSequence &seq, const Codebook &codebook, std::size_t starLevel)
{
  for (std::size_t level = starLevel; level-- > 0;)
    {
      AppendSweep (seq, codebook, level);
    }
}

// slot nearest to sector `sector`'s center on an N-slot grid, half-up rounding
std::uint32_t
SectorCenterSlot (std::uint32_t sector, std::uint32_t sectors, std::uint32_t slots)
{
  const std::uint64_t num = 2ULL * sector * slots + sectors;
  return static_cast<std::uint32_t> ((num / (2ULL * sectors)) % slots);
}

void
AppendSectorScan (ProbeSequence &seq, const Codebook &codebook, std::size_t level, std::uint32_t sector,
                  std::uint32_t sectors)
{
  const std::uint32_t n = codebook.Count (level);
  const std::uint32_t start = SectorCenterSlot (sector, sectors, n);
  if (SectorOfSlot (sectors, start, n) != sector)
    {
      return; // sector narrower than one grid step holds no boresight
    }
  auto emit = [&] (std::uint32_t slot) { seq.probes.push_back ({level, slot, codebook.Beam (level, slot, seq.anchor)}); };
  emit (start);
  // alternate +d / -d until both sides leave the sector or the grid wraps onto itself
  for (std::uint32_t d = 1; 2 * d <= n; ++d)
    {
      const std::uint32_t up = (start + d) % n;
      const std::uint32_t down = (start + n - d) % n;
      const bool upIn = SectorOfSlot (sectors, up, n) == sector;
      const bool downIn = down != up && SectorOfSlot (sectors, down, n) == sector;
      if (!upIn && !downIn)
        {
          break;
        }
      if (upIn)
        {
          emit (up);
        }
      if (downIn)
        {
          emit (down);
        }
    }
}

} // namespace

ProbeSequence
GreedySequence (const InitialConfig &init, const Codebook &codebook, bool probeWiderAfter)
{
  ProbeSequence seq;
  seq.policy = PolicyKind::kGreedy;
  seq.anchor = init.dir_star;
  for (std::size_t level = init.level; level < codebook.Levels (); ++level)
    {
      AppendSweep (seq, codebook, level);
    }
  if (probeWiderAfter)
    {
      AppendWiderLevels (seq, codebook, init.level);
    }
  return seq;
}

ProbeSequence
EdpSequence (const InitialConfig &init, const Codebook &codebook, std::uint32_t sectors, bool probeWiderAfter)
{
  if (sectors < 1)
    {
      throw std::invalid_argument ("edp: number of sectors must be at least 1");
    }
  ProbeSequence seq;
  seq.policy = PolicyKind::kEdp;
  seq.sectors = sectors;
  seq.anchor = init.dir_star;

  std::vector<std::uint32_t> order{0};
  for (std::uint32_t step = 1; order.size () < sectors; ++step)
    {
      order.push_back (step % sectors);
      if (order.size () < sectors)
        {
          order.push_back ((sectors - step % sectors) % sectors);
        }
    }

  for (std::uint32_t sector : order)
    {
      for (std::size_t level = init.level; level < codebook.Levels (); ++level)
        {
          AppendSectorScan (seq, codebook, level, sector, sectors);
        }
    }
  if (probeWiderAfter)
    {
      AppendWiderLevels (seq, codebook, init.level);
    }
  return seq;
}

OracleVerdict
OracleReachable (const LinkBudget &budget, const Codebook &codebook, const Point2D &bs, const Point2D &ue,
                 Azimuth anchor)
{
  const LinkGeometry link = MeasureLink (budget, bs, ue);
  OracleVerdict verdict;
  for (std::size_t level = 0; level < codebook.Levels (); ++level)
    {
      for (std::uint32_t slot = 0; slot < codebook.Count (level); ++slot)
        {
          const BeamConfig beam = codebook.Beam (level, slot, anchor);
          if (!Detects (budget, beam, link))
            {
              continue;
            }
          const double power = ReceivedPower (budget, beam, link);
          if (!verdict.reachable || power > verdict.best_power_dbm)
            {
              verdict.reachable = true;
              verdict.best = Probe{level, slot, beam};
              verdict.best_power_dbm = power;
            }
        }
    }
  return verdict;
}

} // namespace mmdisc
