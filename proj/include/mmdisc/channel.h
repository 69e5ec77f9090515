#ifndef MMDISC_CHANNEL_H
#define MMDISC_CHANNEL_H

#include "mmdisc/antenna.h"
#include "mmdisc/geometry.h"

namespace mmdisc {

/// PL = alpha + 10 k log10(l / l0), k switching at the reference distance.
struct PathlossModel
{
  double alpha_db = 82.02;
  double l0_m = 5.0;
  double k_far = 2.36;
  double k_near = 2.00;
};

/**
 * Everything that decides whether a probe is heard: transmit power, noise,
 * the SNR needed for synchronization-signal acquisition, the pathloss law and
 * the BS antenna pattern. The UE antenna is isotropic (0 dBi).
 */
struct LinkBudget
{
  double tx_power_dbm = 0.0;
  double noise_floor_dbm = -84.0;
  double snr_threshold_db = 10.0;
  PathlossModel pathloss;
  AntennaPattern antenna;

  /// Minimum received power for detection, Th.
  double ThresholdDbm () const { return noise_floor_dbm + snr_threshold_db; }
};

/// Throws std::domain_error for l <= 0.
double Pathloss (const PathlossModel &model, double l);

/// Inverse of Pathloss on l > 0.
double DistanceForPathloss (const PathlossModel &model, double pathlossDb);

/// Geometry-only part of a BS-to-UE link, reusable across many probes.
struct LinkGeometry
{
  Azimuth toward;
  double distance_m = 0.0;
  double pathloss_db = 0.0;
};

/// Throws std::domain_error when the positions coincide.
LinkGeometry MeasureLink (const LinkBudget &budget, const Point2D &bs, const Point2D &ue);

double ReceivedPower (const LinkBudget &budget, const BeamConfig &beam, const LinkGeometry &link);
double ReceivedPower (const LinkBudget &budget, const BeamConfig &beam, const Point2D &bs, const Point2D &ue);

bool Detects (const LinkBudget &budget, const BeamConfig &beam, const LinkGeometry &link);

/// received power >= Th; equality counts as detected.
bool Detects (const LinkBudget &budget, const BeamConfig &beam, const Point2D &bs, const Point2D &ue);

struct BoresightRange
{
  double meters = 0.0;
  /// False when even the reference distance is out of reach; meters is then 0.
  bool covered = false;
};

/// Farthest boresight distance at which a beam of this width is still detected.
BoresightRange RangeOnBoresight (const LinkBudget &budget, double width);

/**
 * Returns `budget` with tx_power chosen so that a beam of `width` reaches
 * exactly `rangeM` on its boresight.
 */
LinkBudget CalibrateTxPower (LinkBudget budget, double width, double rangeM);

} // namespace mmdisc

#endif
