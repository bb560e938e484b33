// Assembly and disassembly of the network between consecutive years.
//
// diff_slices() classifies every added and removed link against the t-1
// snapshot. The relative-probability estimators weight each event at a target
// actor of prior degree k by N(t)/n(k,t), where n(k,t) counts incumbent target
// actors of degree k in t-1 and N(t) all incumbent target actors, so that a
// uniformly random choice of target gives 1 at every k.

#pragma once

#include "tbnet/netcore.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tbnet {

/// Added links: B1 both endpoints incumbent, B2 GuildA endpoint new,
/// B3 GuildB endpoint new, B4 both new.
/// Removed links: B1 both endpoints remain in t, B2 GuildA endpoint departs,
/// B3 GuildB endpoint departs, B4 both depart.
enum class Block : std::uint8_t { B1 = 1, B2 = 2, B3 = 3, B4 = 4 };

struct LinkEvent {
  ActorIndex a = 0;
  ActorIndex b = 0;
  Block block = Block::B1;
  std::uint32_t ka_prev = 0;
  std::uint32_t kb_prev = 0;
};

struct SliceDiff {
  int year = 0;
  std::vector<LinkEvent> added;
  std::vector<LinkEvent> removed;
};

/// Differences between year-1 and year. Throws std::out_of_range for the first
/// year or years outside the network.
SliceDiff diff_slices(const TemporalNetwork& net, int year);

enum class EventClass {
  AttachNew,         // T+: newly joining source attaches to an incumbent target
  DetachDeparting,   // T-: source departing the network drops a target
  AttachIncumbent,   // R+: incumbent source attaches to an incumbent target
  DetachIncumbent,   // R-: link lost while the source stays in the network
};

const char* event_class_name(EventClass c);

struct RelProbPoint {
  std::uint32_t k = 0;
  double value = 0.0;
  double weight_sum = 0.0;
  std::uint64_t raw_count = 0;
  /// Number of events that could have landed at degree k (events in years
  /// where some incumbent target had degree k). The normalizer of `value`.
  std::uint64_t exposure = 0;
};

struct RelProbCurve {
  EventClass event_class = EventClass::AttachNew;
  Guild target = Guild::B;
  std::vector<RelProbPoint> points;
  std::uint64_t events = 0;
  std::optional<double> exponent;
  std::optional<double> exponent_stderr;
  std::size_t fit_bins = 0;
};

struct EstimatorOptions {
  /// Bins with fewer raw events are left out of the exponent fit.
  std::uint64_t min_count = 5;
  /// Merge bins into [2^j, 2^(j+1)) before fitting.
  bool log_bins = false;
  /// Weight the log-log fit by raw_count.
  bool weighted_fit = false;
};

/// Throws std::invalid_argument when no qualifying event exists.
RelProbCurve relative_probability(const TemporalNetwork& net, Guild target, EventClass cls,
                                  const EstimatorOptions& opts = {});

inline RelProbCurve relative_attach_new(const TemporalNetwork& net, Guild target,
                                        const EstimatorOptions& opts = {}) {
  return relative_probability(net, target, EventClass::AttachNew, opts);
}
inline RelProbCurve relative_detach_departing(const TemporalNetwork& net, Guild target,
                                              const EstimatorOptions& opts = {}) {
  return relative_probability(net, target, EventClass::DetachDeparting, opts);
}
inline RelProbCurve relative_attach_incumbent(const TemporalNetwork& net, Guild target,
                                              const EstimatorOptions& opts = {}) {
  return relative_probability(net, target, EventClass::AttachIncumbent, opts);
}
inline RelProbCurve relative_detach_incumbent(const TemporalNetwork& net, Guild target,
                                              const EstimatorOptions& opts = {}) {
  return relative_probability(net, target, EventClass::DetachIncumbent, opts);
}

}  // namespace tbnet
