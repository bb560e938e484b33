#include "tbnet/roles.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace tbnet {

namespace {

std::vector<RoleScores> scores_for(const TemporalNetwork& net, const Partition& partition, int year,
                                   const RoleThresholds& thresholds) {
  const Slice& s = net.slice(year);
  const auto& reg = net.registry();
  std::vector<int> module(reg.size(), -1);
  for (ActorIndex i = 0; i < reg.size(); ++i) {
    if (!s.present(i)) continue;
    const auto m = partition.module_of(i, year);
    if (!m) throw std::invalid_argument("partition does not cover every present node");
    module[i] = *m;
  }

  std::vector<RoleScores> out;
  std::map<int, std::vector<std::size_t>> by_module;
  for (ActorIndex i = 0; i < reg.size(); ++i) {
    if (module[i] < 0) continue;
    RoleScores r;
    r.actor = i;
    r.year = year;
    r.module = module[i];
    r.degree = s.degree(i);
    std::map<int, std::uint32_t> per_module;
    for (ActorIndex j : s.neighbors(i)) ++per_module[module[j]];
    r.within_degree = per_module.count(r.module) ? per_module[r.module] : 0;
    double sum_sq = 0.0;
    for (const auto& [m, k] : per_module) {
      const double share = static_cast<double>(k) / static_cast<double>(r.degree);
      sum_sq += share * share;
    }
    r.c = std::max(0.0, 1.0 - sum_sq);
    by_module[r.module].push_back(out.size());
    out.push_back(r);
  }

  for (const auto& [m, members] : by_module) {
    double mu = 0.0;
    for (std::size_t idx : members) mu += out[idx].within_degree;
    mu /= static_cast<double>(members.size());
    double var = 0.0;
    for (std::size_t idx : members) {
      const double dev = out[idx].within_degree - mu;
      var += dev * dev;
    }
    const double sd = std::sqrt(var / static_cast<double>(members.size()));
    for (std::size_t idx : members) {
      RoleScores& r = out[idx];
      if (members.size() < 2 || sd == 0.0) {
        r.d = 0.0;
        r.degenerate = true;
      } else {
        r.d = (r.within_degree - mu) / sd;
      }
    }
  }
  for (RoleScores& r : out) r.category = categorize(r.d, r.c, thresholds);
  return out;
}

}  // namespace

std::string_view role_category_name(RoleCategory c) {
  switch (c) {
    case RoleCategory::Peripheral: return "peripheral";
    case RoleCategory::Connector: return "connector";
    case RoleCategory::ModuleHub: return "module_hub";
    case RoleCategory::NetworkHub: return "network_hub";
  }
  return "unknown";
}

RoleCategory categorize(double d, double c, const RoleThresholds& thresholds) {
  const bool hub = d >= thresholds.d_hub;
  const bool connector = c >= thresholds.c_connector;
  if (hub) return connector ? RoleCategory::NetworkHub : RoleCategory::ModuleHub;
  return connector ? RoleCategory::Connector : RoleCategory::Peripheral;
}

std::vector<RoleScores> role_scores(const TemporalNetwork& net, const Partition& partition, int year,
                                    const RoleThresholds& thresholds) {
  if (!std::isfinite(thresholds.d_hub) || !std::isfinite(thresholds.c_connector)) {
    throw std::invalid_argument("role thresholds must be finite");
  }
  return scores_for(net, partition, year, thresholds);
}

std::vector<RoleScores> all_role_scores(const TemporalNetwork& net, const Partition& partition,
                                        const RoleThresholds& thresholds) {
  std::vector<RoleScores> out;
  for (const Slice& s : net.slices()) {
    auto year_scores = role_scores(net, partition, s.year(), thresholds);
    out.insert(out.end(), year_scores.begin(), year_scores.end());
  }
  return out;
}

std::vector<RoleFluctuation> role_fluctuation(const TemporalNetwork& net, const Partition& partition,
                                              const RoleThresholds& thresholds) {
  std::map<ActorIndex, std::pair<std::vector<double>, std::vector<double>>> series;
  for (const RoleScores& r : all_role_scores(net, partition, thresholds)) {
    series[r.actor].first.push_back(r.d);
    series[r.actor].second.push_back(r.c);
  }
  std::vector<RoleFluctuation> out;
  out.reserve(series.size());
  for (const auto& [actor, dc] : series) {
    RoleFluctuation f;
    f.actor = actor;
    f.years_present = dc.first.size();
    if (f.years_present >= 2) {
      f.std_d = stats::population_std(dc.first);
      f.std_c = stats::population_std(dc.second);
    }
    out.push_back(f);
  }
  return out;
}

std::optional<stats::Correlation> subnetwork_role_correlation(const TemporalNetwork& net,
                                                              const Partition& partition, int year,
                                                              RoleScore score) {
  const TemporalNetwork active = project_subnetwork(net, Projection::ActiveOnly);
  const TemporalNetwork passive = project_subnetwork(net, Projection::PassiveOnly);
  return subnetwork_role_correlation(role_scores(active, partition, year), role_scores(passive, partition, year),
                                     score);
}

std::optional<stats::Correlation> subnetwork_role_correlation(const std::vector<RoleScores>& active,
                                                              const std::vector<RoleScores>& passive,
                                                              RoleScore score) {
  std::map<ActorIndex, double> passive_value;
  for (const auto& r : passive) passive_value[r.actor] = score == RoleScore::D ? r.d : r.c;
  std::vector<double> x, y;
  for (const auto& r : active) {
    auto it = passive_value.find(r.actor);
    if (it == passive_value.end()) continue;
    x.push_back(score == RoleScore::D ? r.d : r.c);
    y.push_back(it->second);
  }
  if (x.size() < 3) return std::nullopt;
  try {
    return stats::correlate(x, y);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace tbnet
