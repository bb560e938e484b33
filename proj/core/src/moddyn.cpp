#include "tbnet/moddyn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tbnet {

std::vector<ModuleTimeline> module_timelines(const TemporalNetwork& net, const Partition& partition) {
  const auto& reg = net.registry();
  for (const Slice& s : net.slices()) {
    for (ActorIndex i = 0; i < reg.size(); ++i) {
      if (s.present(i) && !partition.module_of(i, s.year())) {
        throw std::invalid_argument("partition does not cover every present node");
      }
    }
  }
  std::map<int, std::vector<NodeKey>> by_module;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    const NodeKey& k = partition.keys()[i];
    if (!net.has_year(k.year) || k.actor >= reg.size()) {
      throw std::invalid_argument("partition names a node outside the network");
    }
    by_module[partition.modules()[i]].push_back(k);
  }
  std::vector<ModuleTimeline> out;
  out.reserve(by_module.size());
  for (auto& [id, keys] : by_module) {
    ModuleTimeline t;
    t.module_id = id;
    // keys are in (year, actor) order
    t.first_year = keys.front().year;
    t.last_year = keys.back().year;
    const auto span = static_cast<std::size_t>(t.last_year - t.first_year + 1);
    t.members_A.resize(span);
    t.members_B.resize(span);
    std::set<ActorIndex> seen_A, seen_B;
    for (const NodeKey& k : keys) {
      const auto idx = static_cast<std::size_t>(k.year - t.first_year);
      if (reg[k.actor].guild == Guild::A) {
        t.members_A[idx].push_back(k.actor);
        seen_A.insert(k.actor);
      } else {
        t.members_B[idx].push_back(k.actor);
        seen_B.insert(k.actor);
      }
    }
    t.distinct_A = seen_A.size();
    t.distinct_B = seen_B.size();
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<JaccardPoint> jaccard_series(const ModuleTimeline& timeline, Guild guild) {
  if (timeline.years() == 0) throw std::invalid_argument("jaccard_series: empty timeline");
  std::vector<JaccardPoint> out;
  for (std::size_t idx = 1; idx < timeline.years(); ++idx) {
    JaccardPoint p;
    p.year = timeline.first_year + static_cast<int>(idx);
    const auto& prev = timeline.members(guild, idx - 1);
    const auto& cur = timeline.members(guild, idx);
    if (!prev.empty() && !cur.empty()) {
      std::vector<ActorIndex> common;
      std::set_intersection(prev.begin(), prev.end(), cur.begin(), cur.end(), std::back_inserter(common));
      const std::size_t uni = prev.size() + cur.size() - common.size();
      p.value = static_cast<double>(common.size()) / static_cast<double>(uni);
    }
    out.push_back(p);
  }
  return out;
}

ModuleClasses classify_modules(const std::vector<ModuleTimeline>& timelines, const MajorRule& rule) {
  ModuleClasses out;
  for (const auto& t : timelines) {
    bool major = t.distinct_actors() > rule.joint;
    if (rule.min_A) major = major && t.distinct_A > *rule.min_A;
    if (rule.min_B) major = major && t.distinct_B > *rule.min_B;
    (major ? out.major : out.transitory).push_back(t.module_id);
  }
  return out;
}

stats::Correlation submodule_correlation(const ModuleTimeline& timeline) {
  const auto ja = jaccard_series(timeline, Guild::A);
  const auto jb = jaccard_series(timeline, Guild::B);
  std::vector<double> x, y;
  for (std::size_t i = 0; i < ja.size(); ++i) {
    if (ja[i].value && jb[i].value) {
      x.push_back(*ja[i].value);
      y.push_back(*jb[i].value);
    }
  }
  if (x.size() < 3) throw std::invalid_argument("submodule_correlation: fewer than 3 aligned Jaccard pairs");
  return stats::correlate(x, y);
}

}  // namespace tbnet
