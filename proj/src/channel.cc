#include "mmdisc/channel.h"

#include <cmath>
#include <stdexcept>

namespace mmdisc {

double
Pathloss (const PathlossModel &model, double l)
{
  if (!(l > 0.0))
    {
      throw std::domain_error ("pathloss: distance must be positive");
    }
  const double k = l > model.l0_m ? model.k_far : model.k_near;
  return model.alpha_db + 10.0 * k * std::log10 (l / model.l0_m);
}

double
DistanceForPathloss (const PathlossModel &model, double pathlossDb)
{
  const double k = pathlossDb > model.alpha_db ? model.k_far : model.k_near;
  return model.l0_m * std::pow (10.0, (pathlossDb - model.alpha_db) / (10.0 * k));
}

LinkGeometry
MeasureLink (const LinkBudget &budget, const Point2D &bs, const Point2D &ue)
{
  const double distance = Distance (bs, ue);
  return {AzimuthTo (bs, ue), distance, Pathloss (budget.pathloss, distance)};
}

double
ReceivedPower (const LinkBudget &budget, const BeamConfig &beam, const LinkGeometry &link)
{
  return budget.tx_power_dbm + Gain (beam, link.toward, budget.antenna) - link.pathloss_db;
}

double
ReceivedPower (const LinkBudget &budget, const BeamConfig &beam, const Point2D &bs, const Point2D &ue)
{
  return ReceivedPower (budget, beam, MeasureLink (budget, bs, ue));
}

bool
Detects (const LinkBudget &budget, const BeamConfig &beam, const LinkGeometry &link)
{
  return ReceivedPower (budget, beam, link) >= budget.ThresholdDbm ();
}

bool
Detects (const LinkBudget &budget, const BeamConfig &beam, const Point2D &bs, const Point2D &ue)
{
  return Detects (budget, beam, MeasureLink (budget, bs, ue));
}

BoresightRange
RangeOnBoresight (const LinkBudget &budget, double width)
{
  const double allowedLoss = budget.tx_power_dbm + PeakGain (width, budget.antenna.elevation_width)
                             - budget.ThresholdDbm ();
  if (allowedLoss < budget.pathloss.alpha_db)
    {
      return {};
    }
  return {DistanceForPathloss (budget.pathloss, allowedLoss), true};
}

LinkBudget
CalibrateTxPower (LinkBudget budget, double width, double rangeM)
{
  budget.tx_power_dbm = budget.ThresholdDbm () + Pathloss (budget.pathloss, rangeM)
                        - PeakGain (width, budget.antenna.elevation_width);
  return budget;
}

} // namespace mmdisc
