// Within-module degree z-scores (d), participation coefficients (c) and the
// four role categories they induce.

#pragma once

#include "tbnet/modularity.hpp"
#include "tbnet/netcore.hpp"
#include "tbnet/stats.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace tbnet {

enum class RoleCategory { Peripheral, Connector, ModuleHub, NetworkHub };

std::string_view role_category_name(RoleCategory c);

struct RoleThresholds {
  double d_hub = 2.5;
  double c_connector = 0.625;
};

struct RoleScores {
  ActorIndex actor = 0;
  int year = 0;
  int module = 0;
  std::uint32_t degree = 0;
  std::uint32_t within_degree = 0;
  double d = 0.0;
  double c = 0.0;
  RoleCategory category = RoleCategory::Peripheral;
  bool degenerate = false;  // module-year of size 1 or zero spread; d set to 0
};

/// hub iff d >= d_hub; connector iff c >= c_connector.
RoleCategory categorize(double d, double c, const RoleThresholds& thresholds);

/// Scores of every present actor in `year`, in registry order. Throws
/// std::invalid_argument if a present actor is not covered by the partition.
std::vector<RoleScores> role_scores(const TemporalNetwork& net, const Partition& partition, int year,
                                    const RoleThresholds& thresholds = {});

/// role_scores over every year, concatenated in year order.
std::vector<RoleScores> all_role_scores(const TemporalNetwork& net, const Partition& partition,
                                        const RoleThresholds& thresholds = {});

struct RoleFluctuation {
  ActorIndex actor = 0;
  std::size_t years_present = 0;
  std::optional<double> std_d;  // population std; no value below two years
  std::optional<double> std_c;
};

std::vector<RoleFluctuation> role_fluctuation(const TemporalNetwork& net, const Partition& partition,
                                              const RoleThresholds& thresholds = {});

enum class RoleScore { D, C };

/// Correlates an actor's score in the active-only and passive-only
/// subnetworks, with module membership taken from the full-network partition.
/// No value with fewer than 3 actors present in both, or a constant series.
std::optional<stats::Correlation> subnetwork_role_correlation(const TemporalNetwork& net,
                                                              const Partition& partition, int year,
                                                              RoleScore score);

/// Same, from scores already computed on the two projections for one year.
std::optional<stats::Correlation> subnetwork_role_correlation(const std::vector<RoleScores>& active,
                                                              const std::vector<RoleScores>& passive,
                                                              RoleScore score);

}  // namespace tbnet
