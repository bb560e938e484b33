#include "tbnet/dynamics.hpp"

#include "tbnet/stats.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace tbnet {

namespace {

Block classify(bool a_flag, bool b_flag) {
  if (!a_flag && !b_flag) return Block::B1;
  if (a_flag && !b_flag) return Block::B2;
  if (!a_flag && b_flag) return Block::B3;
  return Block::B4;
}

bool qualifies(const LinkEvent& e, bool added, Guild target, EventClass cls) {
  // Blocks in which only the source side, or only the target side, is new
  // (added) or departs (removed).
  const Block source_only = target == Guild::B ? Block::B2 : Block::B3;
  const Block target_only = target == Guild::B ? Block::B3 : Block::B2;
  switch (cls) {
    case EventClass::AttachNew:
      return added && e.block == source_only;
    case EventClass::DetachDeparting:
      return !added && (e.block == source_only || e.block == Block::B4);
    case EventClass::AttachIncumbent:
      return added && e.block == Block::B1;
    case EventClass::DetachIncumbent:
      return !added && (e.block == Block::B1 || e.block == target_only);
  }
  return false;
}

struct Bin {
  double weight_sum = 0.0;
  std::uint64_t raw_count = 0;
  std::uint64_t exposure = 0;
};

}  // namespace

const char* event_class_name(EventClass c) {
  switch (c) {
    case EventClass::AttachNew: return "T_plus";
    case EventClass::DetachDeparting: return "T_minus";
    case EventClass::AttachIncumbent: return "R_plus";
    case EventClass::DetachIncumbent: return "R_minus";
  }
  return "unknown";
}

SliceDiff diff_slices(const TemporalNetwork& net, int year) {
  const std::size_t idx = net.slice_index(year);
  if (idx == 0) throw std::out_of_range("diff_slices: first year has no predecessor");
  const Slice& prev = net.slices()[idx - 1];
  const Slice& cur = net.slices()[idx];
  SliceDiff d;
  d.year = year;
  auto key = [](const Link& l) { return std::pair{l.a, l.b}; };
  // Both link lists are sorted by (a, b); walk them together.
  auto p = prev.links().begin();
  auto c = cur.links().begin();
  auto emit_added = [&](const Link& l) {
    const auto ka = prev.degree(l.a), kb = prev.degree(l.b);
    d.added.push_back({l.a, l.b, classify(ka == 0, kb == 0), ka, kb});
  };
  auto emit_removed = [&](const Link& l) {
    d.removed.push_back({l.a, l.b, classify(cur.degree(l.a) == 0, cur.degree(l.b) == 0),
                         prev.degree(l.a), prev.degree(l.b)});
  };
  while (p != prev.links().end() || c != cur.links().end()) {
    if (c == cur.links().end() || (p != prev.links().end() && key(*p) < key(*c))) {
      emit_removed(*p++);
    } else if (p == prev.links().end() || key(*c) < key(*p)) {
      emit_added(*c++);
    } else {
      ++p;
      ++c;
    }
  }
  return d;
}

RelProbCurve relative_probability(const TemporalNetwork& net, Guild target, EventClass cls,
                                  const EstimatorOptions& opts) {
  RelProbCurve curve;
  curve.event_class = cls;
  curve.target = target;
  std::map<std::uint32_t, Bin> bins;
  const auto& reg = net.registry();
  for (std::size_t idx = 1; idx < net.slice_count(); ++idx) {
    const Slice& prev = net.slices()[idx - 1];
    std::map<std::uint32_t, std::uint64_t> n_k;
    std::uint64_t n_total = 0;
    for (ActorIndex i = 0; i < reg.size(); ++i) {
      if (reg[i].guild != target) continue;
      const auto k = prev.degree(i);
      if (k == 0) continue;
      ++n_k[k];
      ++n_total;
    }
    const SliceDiff diff = diff_slices(net, net.slices()[idx].year());
    const bool added = cls == EventClass::AttachNew || cls == EventClass::AttachIncumbent;
    std::uint64_t events_this_year = 0;
    for (const LinkEvent& e : added ? diff.added : diff.removed) {
      if (!qualifies(e, added, target, cls)) continue;
      const std::uint32_t k = target == Guild::B ? e.kb_prev : e.ka_prev;
      Bin& bin = bins[k];
      bin.weight_sum += static_cast<double>(n_total) / static_cast<double>(n_k.at(k));
      ++bin.raw_count;
      ++events_this_year;
    }
    if (events_this_year == 0) continue;
    for (const auto& [k, count] : n_k) bins[k].exposure += events_this_year;
    curve.events += events_this_year;
  }
  if (curve.events == 0) {
    throw std::invalid_argument(std::string("no qualifying events for ") + event_class_name(cls));
  }
  for (const auto& [k, bin] : bins) {
    if (bin.raw_count == 0) continue;
    curve.points.push_back({k, bin.weight_sum / static_cast<double>(bin.exposure), bin.weight_sum,
                            bin.raw_count, bin.exposure});
  }

  std::vector<std::pair<double, double>> fit_points;
  std::vector<double> fit_weights;
  if (opts.log_bins) {
    std::map<int, Bin> merged;
    std::map<int, std::pair<std::uint32_t, std::uint32_t>> range;
    for (const auto& pt : curve.points) {
      const int j = static_cast<int>(std::floor(std::log2(static_cast<double>(pt.k))));
      Bin& m = merged[j];
      m.weight_sum += pt.weight_sum;
      m.raw_count += pt.raw_count;
      m.exposure += pt.exposure;
      auto [it, fresh] = range.try_emplace(j, pt.k, pt.k);
      if (!fresh) it->second.second = pt.k;
    }
    for (const auto& [j, m] : merged) {
      if (m.raw_count < opts.min_count || m.weight_sum <= 0.0) continue;
      const auto [lo, hi] = range.at(j);
      fit_points.emplace_back(std::sqrt(static_cast<double>(lo) * hi), m.weight_sum / m.exposure);
      fit_weights.push_back(static_cast<double>(m.raw_count));
    }
  } else {
    for (const auto& pt : curve.points) {
      if (pt.raw_count < opts.min_count || pt.value <= 0.0) continue;
      fit_points.emplace_back(pt.k, pt.value);
      fit_weights.push_back(static_cast<double>(pt.raw_count));
    }
  }
  curve.fit_bins = fit_points.size();
  if (fit_points.size() >= 2) {
    const auto fit = stats::loglog_fit(fit_points, opts.weighted_fit ? std::span<const double>(fit_weights)
                                                                     : std::span<const double>{});
    curve.exponent = fit.slope;
    curve.exponent_stderr = fit.stderr_slope;
  }
  return curve;
}

}  // namespace tbnet
