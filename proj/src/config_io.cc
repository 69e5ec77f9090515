#include "mmdisc/config_io.h"

#include <cmath>
#include <fstream>
#include <set>
#include <string_view>

namespace mmdisc {

using nlohmann::json;

namespace {

// One JSON object of the config. Reads are recorded so leftover keys can be
// reported as unknown.
class Section
{
public:
  Section (const json &doc, std::string name, std::vector<std::string> &problems)
    : m_name (std::move (name)),
      m_problems (problems)
  {
    if (doc.is_null ())
      {
        return;
      }
    if (!doc.is_object ())
      {
        Problem ("", "expected an object");
        return;
      }
    m_obj = &doc;
  }

  const json *Find (const std::string &key)
  {
    m_seen.insert (key);
    if (m_obj == nullptr)
      {
        return nullptr;
      }
    const auto it = m_obj->find (key);
    return it == m_obj->end () || it->is_null () ? nullptr : &*it;
  }

  void Number (const std::string &key, double &out)
  {
    if (const json *v = Find (key))
      {
        if (v->is_number ())
          {
            out = v->get<double> ();
          }
        else
          {
            Problem (key, "expected a number");
          }
      }
  }

  void OptionalNumber (const std::string &key, std::optional<double> &out)
  {
    if (const json *v = Find (key))
      {
        double d = 0.0;
        Number (key, d);
        if (v->is_number ())
          {
            out = d;
          }
      }
  }

  template <typename Int>
  void Integer (const std::string &key, Int &out)
  {
    if (const json *v = Find (key))
      {
        if (v->is_number_unsigned () || (v->is_number_integer () && v->get<std::int64_t> () >= 0))
          {
            out = static_cast<Int> (v->get<std::uint64_t> ());
          }
        else
          {
            Problem (key, "expected a non-negative integer");
          }
      }
  }

  void Bool (const std::string &key, bool &out)
  {
    if (const json *v = Find (key))
      {
        if (v->is_boolean ())
          {
            out = v->get<bool> ();
          }
        else
          {
            Problem (key, "expected true or false");
          }
      }
  }

  void String (const std::string &key, std::string &out)
  {
    if (const json *v = Find (key))
      {
        if (v->is_string ())
          {
            out = v->get<std::string> ();
          }
        else
          {
            Problem (key, "expected a string");
          }
      }
  }

  template <typename Enum, typename ParseFn>
  void Choice (const std::string &key, Enum &out, ParseFn parse)
  {
    std::string name;
    if (Find (key) == nullptr)
      {
        return;
      }
    String (key, name);
    if (name.empty ())
      {
        return;
      }
    try
      {
        out = parse (name);
      }
    catch (const std::exception &e)
      {
        m_problems.emplace_back (e.what ());
      }
  }

  void Problem (const std::string &key, const std::string &what)
  {
    m_problems.push_back (Path (key) + ": " + what);
  }

  std::string Path (const std::string &key) const
  {
    if (m_name.empty ())
      {
        return key;
      }
    return key.empty () ? m_name : m_name + "." + key;
  }

  void RejectUnknown ()
  {
    if (m_obj == nullptr)
      {
        return;
      }
    for (const auto &[key, value] : m_obj->items ())
      {
        if (!m_seen.contains (key))
          {
            Problem (key, "unknown key");
          }
      }
  }

private:
  std::string m_name;
  std::vector<std::string> &m_problems;
  const json *m_obj = nullptr;
  std::set<std::string> m_seen;
};

const json &
Child (const json &doc, const char *key)
{
  static const json null;
  if (doc.is_object ())
    {
      const auto it = doc.find (key);
      if (it != doc.end ())
        {
          return *it;
        }
    }
  return null;
}

std::vector<double>
NumberList (Section &s, const std::string &key, std::vector<std::string> &problems)
{
  std::vector<double> out;
  if (const json *v = s.Find (key))
    {
      if (!v->is_array ())
        {
          s.Problem (key, "expected an array of numbers");
          return out;
        }
      for (const auto &e : *v)
        {
          if (!e.is_number ())
            {
              problems.push_back (s.Path (key) + ": expected an array of numbers");
              return {};
            }
          out.push_back (e.get<double> ());
        }
    }
  return out;
}

} // namespace

RunSpec
ParseRunSpec (const json &doc)
{
  std::vector<std::string> problems;
  RunSpec spec;
  ExperimentConfig &cfg = spec.experiment;

  Section top (doc, "", problems);
  top.Integer ("seed", cfg.seed);
  top.Integer ("parallelism", cfg.parallelism);
  top.Number ("confidence", cfg.confidence);

  {
    Section s (Child (doc, "deployment"), "deployment", problems);
    top.Find ("deployment");
    s.Number ("area_width_m", cfg.deployment.area_width_m);
    s.Number ("area_height_m", cfg.deployment.area_height_m);
    s.Number ("inter_site_distance_m", cfg.deployment.inter_site_distance_m);
    if (const json *v = s.Find ("bs_positions_m"))
      {
        std::vector<Point2D> bs;
        bool ok = v->is_array ();
        if (ok)
          {
            for (const auto &p : *v)
              {
                if (!p.is_array () || p.size () != 2 || !p[0].is_number () || !p[1].is_number ())
                  {
                    ok = false;
                    break;
                  }
                bs.push_back ({p[0].get<double> (), p[1].get<double> ()});
              }
          }
        if (ok)
          {
            cfg.deployment.bs_positions = std::move (bs);
          }
        else
          {
            s.Problem ("bs_positions_m", "expected an array of [x, y] pairs");
          }
      }
    else
      {
        // default layout follows the configured area and spacing
        const double w = cfg.deployment.area_width_m;
        const double h = cfg.deployment.area_height_m;
        const double isd = cfg.deployment.inter_site_distance_m;
        const Point2D c{w / 2.0, h / 2.0};
        cfg.deployment.bs_positions = {c, {c.x + isd, c.y}, {c.x, c.y + isd}, {c.x - isd, c.y}, {c.x, c.y - isd}};
      }
    s.RejectUnknown ();
  }
  {
    Section s (Child (doc, "population"), "population", problems);
    top.Find ("population");
    s.Choice ("kind", cfg.population.kind, ParsePopulationKind);
    s.Number ("sigma_m", cfg.population.sigma_m);
    s.Number ("forbidden_radius_m", cfg.population.forbidden_radius_m);
    s.Integer ("count", cfg.population.count);
    s.Integer ("max_attempts", cfg.population.max_attempts);
    s.RejectUnknown ();
  }
  {
    Section s (Child (doc, "location_error"), "location_error", problems);
    top.Find ("location_error");
    s.Choice ("kind", cfg.location_error.kind, ParseLocationErrorKind);
    s.Number ("scale_m", cfg.location_error.scale_m);
    s.RejectUnknown ();
  }
  {
    Section s (Child (doc, "link_budget"), "link_budget", problems);
    top.Find ("link_budget");
    s.OptionalNumber ("tx_power_dbm", cfg.tx_power_override_dbm);
    s.Number ("noise_floor_dbm", cfg.budget.noise_floor_dbm);
    s.Number ("snr_threshold_db", cfg.budget.snr_threshold_db);
    s.Number ("calibration_range_m", cfg.calibration_range_m);
    s.RejectUnknown ();
  }
  {
    Section s (Child (doc, "pathloss"), "pathloss", problems);
    top.Find ("pathloss");
    s.Number ("alpha_db", cfg.budget.pathloss.alpha_db);
    s.Number ("l0_m", cfg.budget.pathloss.l0_m);
    s.Number ("k_far", cfg.budget.pathloss.k_far);
    s.Number ("k_near", cfg.budget.pathloss.k_near);
    s.RejectUnknown ();
  }
  {
    Section s (Child (doc, "antenna"), "antenna", problems);
    top.Find ("antenna");
    s.Number ("elevation_width_rad", cfg.budget.antenna.elevation_width);
    s.Choice ("gain_model", cfg.budget.antenna.model, [] (std::string_view name) {
      if (name == "quadratic")
        {
          return GainModel::kQuadratic;
        }
      if (name == "linear")
        {
          return GainModel::kLinear;
        }
      throw std::invalid_argument ("antenna.gain_model: unknown value '" + std::string (name)
                                   + "' (expected quadratic, linear)");
    });
    s.Number ("gain_floor_db", cfg.budget.antenna.gain_floor_db);
    s.RejectUnknown ();
  }
  {
    Section s (Child (doc, "codebook"), "codebook", problems);
    top.Find ("codebook");
    const auto counts = NumberList (s, "direction_counts", problems);
    if (!counts.empty ())
      {
        std::vector<std::uint32_t> n;
        bool integral = true;
        for (double c : counts)
          {
            integral = integral && c >= 1.0 && c == std::floor (c) && c < 1e9;
            n.push_back (static_cast<std::uint32_t> (c));
          }
        if (!integral)
          {
            s.Problem ("direction_counts", "expected positive integers");
          }
        else
          {
            try
              {
                cfg.codebook = Codebook (std::move (n));
              }
            catch (const std::exception &e)
              {
                s.Problem ("direction_counts", e.what ());
              }
          }
      }
    s.RejectUnknown ();
  }
  {
    Section s (Child (doc, "policy"), "policy", problems);
    top.Find ("policy");
    s.Choice ("kind", cfg.policy.kind, ParsePolicyKind);
    s.Integer ("edp_sectors", cfg.policy.edp_sectors);
    s.Bool ("probe_wider_after", cfg.policy.probe_wider_after);
    s.RejectUnknown ();
  }
  {
    Section s (Child (doc, "sweep"), "sweep", problems);
    top.Find ("sweep");
    s.Choice ("axis", cfg.sweep.axis, ParseSweepAxis);
    cfg.sweep.values = NumberList (s, "values", problems);
    s.RejectUnknown ();
  }
  {
    Section s (Child (doc, "output"), "output", problems);
    top.Find ("output");
    s.String ("dir", spec.output.dir);
    s.String ("prefix", spec.output.prefix);
    s.RejectUnknown ();
  }
  top.RejectUnknown ();

  if (problems.empty ())
    {
      try
        {
          cfg.Validate ();
        }
      catch (const ConfigError &e)
        {
          problems = e.Problems ();
        }
    }
  if (!problems.empty ())
    {
      throw ConfigError (std::move (problems));
    }
  return spec;
}

RunSpec
LoadRunSpec (const std::filesystem::path &path)
{
  std::ifstream in (path);
  if (!in)
    {
      throw ConfigError ({"cannot read config file " + path.string ()});
    }
  json doc;
  try
    {
      doc = json::parse (in);
    }
  catch (const json::parse_error &e)
    {
      throw ConfigError ({"config file " + path.string () + " is not valid JSON: " + e.what ()});
    }
  return ParseRunSpec (doc);
}

json
ConfigToJson (const ExperimentConfig &cfg)
{
  const LinkBudget b = cfg.ResolvedBudget ();
  json bs = json::array ();
  for (const auto &p : cfg.deployment.bs_positions)
    {
      bs.push_back ({p.x, p.y});
    }
  json doc;
  doc["seed"] = cfg.seed;
  doc["confidence"] = cfg.confidence;
  doc["deployment"] = {{"area_width_m", cfg.deployment.area_width_m},
                       {"area_height_m", cfg.deployment.area_height_m},
                       {"inter_site_distance_m", cfg.deployment.inter_site_distance_m},
                       {"bs_positions_m", bs}};
  doc["population"] = {{"kind", ToString (cfg.population.kind)},
                       {"sigma_m", cfg.population.sigma_m},
                       {"forbidden_radius_m", cfg.population.forbidden_radius_m},
                       {"count", cfg.population.count},
                       {"max_attempts", cfg.population.max_attempts}};
  doc["location_error"] = {{"kind", ToString (cfg.location_error.kind)}, {"scale_m", cfg.location_error.scale_m}};
  const BoresightRange narrowest = RangeOnBoresight (b, cfg.codebook.NarrowestWidth ());
  doc["link_budget"] = {{"tx_power_dbm", b.tx_power_dbm},
                        {"tx_power_source", cfg.tx_power_override_dbm ? "explicit" : "calibrated"},
                        {"noise_floor_dbm", b.noise_floor_dbm},
                        {"snr_threshold_db", b.snr_threshold_db},
                        {"threshold_dbm", b.ThresholdDbm ()},
                        {"calibration_range_m", cfg.calibration_range_m},
                        {"narrowest_boresight_range_m", narrowest.meters}};
  doc["pathloss"] = {{"alpha_db", b.pathloss.alpha_db},
                     {"l0_m", b.pathloss.l0_m},
                     {"k_far", b.pathloss.k_far},
                     {"k_near", b.pathloss.k_near}};
  doc["antenna"] = {{"elevation_width_rad", b.antenna.elevation_width},
                    {"gain_model", b.antenna.model == GainModel::kQuadratic ? "quadratic" : "linear"},
                    {"gain_floor_db", std::isfinite (b.antenna.gain_floor_db) ? json (b.antenna.gain_floor_db) : json ()}};
  doc["codebook"] = {{"direction_counts", cfg.codebook.DirectionCounts ()}};
  doc["policy"] = {{"kind", ToString (cfg.policy.kind)},
                   {"edp_sectors", cfg.policy.edp_sectors},
                   {"probe_wider_after", cfg.policy.probe_wider_after}};
  return doc;
}

} // namespace mmdisc
