// Module composition over time: per-guild sizes, consecutive-year Jaccard
// indices, major/transitory classification and guild co-fluctuation.

#pragma once

#include "tbnet/modularity.hpp"
#include "tbnet/netcore.hpp"
#include "tbnet/stats.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tbnet {

/// Membership of one module over [first_year, last_year]. Per-year member
/// lists are sorted; years inside the lifespan may be empty.
struct ModuleTimeline {
  int module_id = 0;
  int first_year = 0;
  int last_year = 0;
  std::vector<std::vector<ActorIndex>> members_A;  // indexed by year - first_year
  std::vector<std::vector<ActorIndex>> members_B;
  std::size_t distinct_A = 0;
  std::size_t distinct_B = 0;

  std::size_t years() const { return members_A.size(); }
  const std::vector<ActorIndex>& members(Guild g, std::size_t idx) const {
    return g == Guild::A ? members_A[idx] : members_B[idx];
  }
  std::size_t size(Guild g, std::size_t idx) const { return members(g, idx).size(); }
  std::size_t distinct_actors() const { return distinct_A + distinct_B; }
};

/// One timeline per module id, in id order. Throws std::invalid_argument if a
/// present node is not covered or a key names a year outside the network.
std::vector<ModuleTimeline> module_timelines(const TemporalNetwork& net, const Partition& partition);

struct JaccardPoint {
  int year = 0;                 // later year of the pair (t-1, t)
  std::optional<double> value;  // no value when either year is empty
};

/// J(t, t-1) for every consecutive pair inside the lifespan.
std::vector<JaccardPoint> jaccard_series(const ModuleTimeline& timeline, Guild guild);

struct MajorRule {
  std::size_t joint = 3;  // major iff distinct actors of both guilds > joint
  std::optional<std::size_t> min_A;  // optionally also distinct_A > min_A
  std::optional<std::size_t> min_B;
};

struct ModuleClasses {
  std::vector<int> major;
  std::vector<int> transitory;
};

ModuleClasses classify_modules(const std::vector<ModuleTimeline>& timelines, const MajorRule& rule = {});

/// Pearson correlation of the two guilds' Jaccard series over years where
/// both are defined. Throws std::invalid_argument for fewer than 3 pairs or a
/// constant series.
stats::Correlation submodule_correlation(const ModuleTimeline& timeline);

}  // namespace tbnet
