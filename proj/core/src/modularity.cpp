#include "tbnet/modularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tbnet {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<NodeKey> keys, std::vector<int> modules) {
  if (keys.size() != modules.size()) throw std::invalid_argument("partition: key/module count mismatch");
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  keys_.reserve(keys.size());
  modules_.reserve(keys.size());
  std::unordered_map<int, int> dense;
  for (std::size_t i : order) {
    if (!keys_.empty() && keys_.back() == keys[i]) throw std::invalid_argument("partition: duplicate node");
    keys_.push_back(keys[i]);
    auto [it, fresh] = dense.try_emplace(modules[i], static_cast<int>(dense.size()));
    modules_.push_back(it->second);
  }
  n_modules_ = static_cast<int>(dense.size());
}

std::optional<int> Partition::module_of(const NodeKey& key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || !(*it == key)) return std::nullopt;
  return modules_[static_cast<std::size_t>(it - keys_.begin())];
}

std::optional<int> Partition::module_of(ActorIndex actor, int year) const {
  return module_of(NodeKey{actor, year});
}

// --------------------------------------------------------------- SupraGraph

SupraGraph SupraGraph::from_network(const TemporalNetwork& net, double omega) {
  if (omega < 0.0) throw std::invalid_argument("omega must be nonnegative");
  SupraGraph g;
  const std::size_t n_actors = net.registry().size();
  g.slice_count_ = net.slice_count();
  // node id of (actor, slice), or -1 when absent
  std::vector<std::int64_t> prev_ids(n_actors, -1), cur_ids(n_actors, -1);
  std::vector<WeightedEdge> edges;
  for (std::size_t s = 0; s < net.slice_count(); ++s) {
    const Slice& slice = net.slices()[s];
    std::fill(cur_ids.begin(), cur_ids.end(), -1);
    for (ActorIndex i = 0; i < n_actors; ++i) {
      if (!slice.present(i)) continue;
      const auto id = static_cast<std::uint32_t>(g.keys_.size());
      cur_ids[i] = id;
      g.keys_.push_back({i, slice.year()});
      g.slice_.push_back(static_cast<std::uint32_t>(s));
      g.guild_.push_back(net.registry()[i].guild);
      g.strength_.push_back(static_cast<double>(slice.degree(i)));
      if (omega > 0.0 && prev_ids[i] >= 0) {
        edges.push_back({static_cast<std::uint32_t>(prev_ids[i]), id, omega});
      }
    }
    for (const Link& l : slice.links()) {
      edges.push_back({static_cast<std::uint32_t>(cur_ids[l.a]), static_cast<std::uint32_t>(cur_ids[l.b]), 1.0});
    }
    std::swap(prev_ids, cur_ids);
  }
  g.finish(edges);
  return g;
}

SupraGraph SupraGraph::weighted(std::vector<NodeKey> keys, const std::vector<WeightedEdge>& edges) {
  SupraGraph g;
  g.slice_count_ = 1;
  g.keys_ = std::move(keys);
  const std::size_t n = g.keys_.size();
  g.slice_.assign(n, 0);
  g.guild_.assign(n, Guild::A);
  g.strength_.assign(n, 0.0);
  std::vector<WeightedEdge> kept;
  kept.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw std::out_of_range("weighted graph: edge endpoint out of range");
    if (e.weight < 0.0) throw std::invalid_argument("weighted graph: negative weight");
    if (e.u == e.v || e.weight == 0.0) continue;
    g.strength_[e.u] += e.weight;
    g.strength_[e.v] += e.weight;
    kept.push_back(e);
  }
  g.finish(kept);
  return g;
}

void SupraGraph::finish(const std::vector<WeightedEdge>& edges) {
  const std::size_t n = keys_.size();
  offsets_.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  adj_.resize(offsets_.back());
  adj_w_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  total_weight_ = 0.0;
  for (const auto& e : edges) {
    adj_[fill[e.u]] = e.v;
    adj_w_[fill[e.u]++] = e.weight;
    adj_[fill[e.v]] = e.u;
    adj_w_[fill[e.v]++] = e.weight;
    total_weight_ += 2.0 * e.weight;
  }
}

std::optional<std::uint32_t> SupraGraph::node_of(const NodeKey& key) const {
  // Nodes are created in (slice, actor) order, so keys_ is sorted.
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || !(*it == key)) return std::nullopt;
  return static_cast<std::uint32_t>(it - keys_.begin());
}

std::span<const std::uint32_t> SupraGraph::neighbors(std::uint32_t u) const {
  return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
}

std::span<const double> SupraGraph::weights(std::uint32_t u) const {
  return {adj_w_.data() + offsets_[u], adj_w_.data() + offsets_[u + 1]};
}

// ------------------------------------------------------- optimizer internals

namespace {

constexpr double kGainEps = 1e-12;

// One aggregation level. Node strengths are sparse over slots, where
// slot = 2 * slice + guild.
struct Level {
  std::size_t n = 0;
  std::vector<std::size_t> off;
  std::vector<std::uint32_t> nbr;
  std::vector<double> w;
  std::vector<double> self;  // ordered-pair weight inside the node
  std::vector<std::size_t> soff;
  std::vector<std::uint32_t> slot;
  std::vector<double> sval;
};

struct NullTerm {
  std::size_t n_slots = 0;
  std::vector<double> inv_two_m;  // per slice; 0 for empty slices
  double gamma = 1.0;
  bool bipartite = false;
};

Level base_level(const SupraGraph& g) {
  Level L;
  L.n = g.node_count();
  L.off.assign(L.n + 1, 0);
  L.self.assign(L.n, 0.0);
  L.soff.assign(L.n + 1, 0);
  for (std::uint32_t u = 0; u < L.n; ++u) {
    const auto nb = g.neighbors(u);
    const auto wt = g.weights(u);
    L.nbr.insert(L.nbr.end(), nb.begin(), nb.end());
    L.w.insert(L.w.end(), wt.begin(), wt.end());
    L.off[u + 1] = L.nbr.size();
    if (g.strength(u) != 0.0) {
      L.slot.push_back(2 * g.slice_of(u) + static_cast<std::uint32_t>(g.guild_of(u)));
      L.sval.push_back(g.strength(u));
    }
    L.soff[u + 1] = L.slot.size();
  }
  return L;
}

NullTerm make_null(const SupraGraph& g, const MultilayerParams& p) {
  NullTerm nt;
  nt.n_slots = 2 * std::max<std::size_t>(g.slice_count(), 1);
  nt.gamma = p.gamma;
  nt.bipartite = p.null_model == NullModel::Bipartite;
  std::vector<double> two_m(nt.n_slots / 2, 0.0);
  for (std::uint32_t u = 0; u < g.node_count(); ++u) two_m[g.slice_of(u)] += g.strength(u);
  nt.inv_two_m.resize(two_m.size());
  for (std::size_t a = 0; a < two_m.size(); ++a) nt.inv_two_m[a] = two_m[a] > 0.0 ? 1.0 / two_m[a] : 0.0;
  return nt;
}

// Per-community slot totals plus the null-term and gain formulas.
class Communities {
 public:
  Communities(const Level& L, const NullTerm& nt, std::vector<int> membership)
      : L_(L), nt_(nt), comm_(std::move(membership)) {
    int max_id = -1;
    for (int c : comm_) {
      if (c < 0) throw std::invalid_argument("module ids must be nonnegative");
      max_id = std::max(max_id, c);
    }
    ensure(static_cast<std::size_t>(max_id + 1));
    for (std::uint32_t u = 0; u < L_.n; ++u) add_strength(u, comm_[u], +1.0);
  }

  int comm(std::uint32_t u) const { return comm_[u]; }
  const std::vector<int>& membership() const { return comm_; }
  int size(int c) const { return static_cast<std::size_t>(c) < size_.size() ? size_[c] : 0; }

  // Null-model mass between node u and community c, one direction:
  // sum_{v in c} P_uv. With exclude_u, u's own strength is taken out of c.
  double null_between(std::uint32_t u, int c, bool exclude_u) const {
    if (static_cast<std::size_t>(c) >= size_.size()) return 0.0;
    const double* K = &K_[static_cast<std::size_t>(c) * nt_.n_slots];
    double total = 0.0;
    for (std::size_t i = L_.soff[u]; i < L_.soff[u + 1]; ++i) {
      const std::uint32_t s = L_.slot[i];
      const std::uint32_t slice = s / 2;
      double partner = nt_.bipartite ? K[s ^ 1u] : K[s] + K[s ^ 1u];
      if (exclude_u) partner -= nt_.bipartite ? own(u, s ^ 1u) : own(u, s) + own(u, s ^ 1u);
      const double scale = nt_.bipartite ? 2.0 * nt_.inv_two_m[slice] : nt_.inv_two_m[slice];
      total += L_.sval[i] * partner * scale;
    }
    return nt_.gamma * total;
  }

  void remove(std::uint32_t u) {
    add_strength(u, comm_[u], -1.0);
  }
  void insert(std::uint32_t u, int c) {
    ensure(static_cast<std::size_t>(c) + 1);
    comm_[u] = c;
    add_strength(u, c, +1.0);
  }

  /// Q * 2mu, summed over communities.
  double scaled_quality() const {
    double in = 0.0;
    for (std::uint32_t u = 0; u < L_.n; ++u) {
      in += L_.self[u];
      for (std::size_t e = L_.off[u]; e < L_.off[u + 1]; ++e) {
        if (comm_[L_.nbr[e]] == comm_[u]) in += L_.w[e];
      }
    }
    double null = 0.0;
    for (std::size_t c = 0; c < size_.size(); ++c) {
      if (size_[c] == 0) continue;
      const double* K = &K_[c * nt_.n_slots];
      for (std::size_t a = 0; a < nt_.n_slots / 2; ++a) {
        const double ka = K[2 * a], kb = K[2 * a + 1];
        null += nt_.bipartite ? 4.0 * ka * kb * nt_.inv_two_m[a] : (ka + kb) * (ka + kb) * nt_.inv_two_m[a];
      }
    }
    return in - nt_.gamma * null;
  }

  std::size_t capacity() const { return size_.size(); }

 private:
  double own(std::uint32_t u, std::uint32_t s) const {
    for (std::size_t i = L_.soff[u]; i < L_.soff[u + 1]; ++i) {
      if (L_.slot[i] == s) return L_.sval[i];
    }
    return 0.0;
  }
  void ensure(std::size_t n) {
    if (n <= size_.size()) return;
    size_.resize(n, 0);
    K_.resize(n * nt_.n_slots, 0.0);
  }
  void add_strength(std::uint32_t u, int c, double sign) {
    double* K = &K_[static_cast<std::size_t>(c) * nt_.n_slots];
    for (std::size_t i = L_.soff[u]; i < L_.soff[u + 1]; ++i) K[L_.slot[i]] += sign * L_.sval[i];
    size_[c] += sign > 0 ? 1 : -1;
  }

  const Level& L_;
  const NullTerm& nt_;
  std::vector<int> comm_;
  std::vector<int> size_;
  std::vector<double> K_;
};

// Weight from u to each community it touches, excluding self loops.
class NeighborWeights {
 public:
  explicit NeighborWeights(std::size_t n) : acc_(n, 0.0), seen_(n, 0) {}

  void collect(const Level& L, const Communities& C, std::uint32_t u) {
    for (int c : touched_) {
      acc_[c] = 0.0;
      seen_[c] = 0;
    }
    touched_.clear();
    for (std::size_t e = L.off[u]; e < L.off[u + 1]; ++e) {
      const std::uint32_t v = L.nbr[e];
      if (v == u) continue;
      const int c = C.comm(v);
      if (static_cast<std::size_t>(c) >= acc_.size()) grow(static_cast<std::size_t>(c) + 1);
      if (!seen_[c]) {
        seen_[c] = 1;
        touched_.push_back(c);
      }
      acc_[c] += L.w[e];
    }
  }
  double weight_to(int c) const {
    return static_cast<std::size_t>(c) < acc_.size() ? acc_[c] : 0.0;
  }
  const std::vector<int>& touched() const { return touched_; }

 private:
  void grow(std::size_t n) {
    acc_.resize(n, 0.0);
    seen_.resize(n, 0);
  }
  std::vector<double> acc_;
  std::vector<char> seen_;
  std::vector<int> touched_;
};

// One local-move phase. Returns true if any node moved.
bool move_nodes(const Level& L, Communities& C, std::mt19937_64& rng) {
  std::vector<std::uint32_t> order(L.n);
  std::iota(order.begin(), order.end(), 0u);
  std::shuffle(order.begin(), order.end(), rng);
  NeighborWeights nw(L.n);
  std::vector<int> free_ids;
  for (std::size_t c = 0; c < C.capacity(); ++c) {
    if (C.size(static_cast<int>(c)) == 0) free_ids.push_back(static_cast<int>(c));
  }
  bool any = false;
  for (int pass = 0; pass < 10000; ++pass) {
    bool moved = false;
    for (std::uint32_t u : order) {
      const int c0 = C.comm(u);
      nw.collect(L, C, u);
      C.remove(u);
      const double stay = nw.weight_to(c0) - C.null_between(u, c0, false);
      int cand = -1;
      double cand_gain = -std::numeric_limits<double>::infinity();
      for (int c : nw.touched()) {
        if (c == c0) continue;
        const double g = nw.weight_to(c) - C.null_between(u, c, false);
        if (g > cand_gain + kGainEps || (std::fabs(g - cand_gain) <= kGainEps && c < cand)) {
          cand = c;
          cand_gain = g;
        }
      }
      int target = c0;
      double best = stay;
      if (cand >= 0 && cand_gain > stay + kGainEps) {
        target = cand;
        best = cand_gain;
      }
      // An empty module has gain 0.
      if (C.size(c0) > 0 && 0.0 > best + kGainEps && !free_ids.empty()) {
        target = free_ids.back();
        free_ids.pop_back();
      }
      C.insert(u, target);
      if (target != c0) {
        moved = true;
        if (C.size(c0) == 0) free_ids.push_back(c0);
      }
    }
    if (!moved) break;
    any = true;
  }
  return any;
}

// Renumbers C's communities densely in node order and builds the next level.
Level aggregate(const Level& L, const Communities& C, std::vector<int>& dense_of_node) {
  std::vector<int> dense(C.capacity(), -1);
  int n_new = 0;
  dense_of_node.resize(L.n);
  for (std::uint32_t u = 0; u < L.n; ++u) {
    int& d = dense[C.comm(u)];
    if (d < 0) d = n_new++;
    dense_of_node[u] = d;
  }
  std::vector<std::vector<std::uint32_t>> members(n_new);
  for (std::uint32_t u = 0; u < L.n; ++u) members[dense_of_node[u]].push_back(u);

  Level out;
  out.n = static_cast<std::size_t>(n_new);
  out.off.assign(out.n + 1, 0);
  out.soff.assign(out.n + 1, 0);
  out.self.assign(out.n, 0.0);
  std::vector<double> edge_acc(out.n, 0.0);
  std::vector<char> edge_seen(out.n, 0);
  std::unordered_map<std::uint32_t, double> slot_acc;
  for (std::size_t c = 0; c < out.n; ++c) {
    std::vector<std::uint32_t> touched;
    slot_acc.clear();
    for (std::uint32_t u : members[c]) {
      out.self[c] += L.self[u];
      for (std::size_t e = L.off[u]; e < L.off[u + 1]; ++e) {
        const auto d = static_cast<std::uint32_t>(dense_of_node[L.nbr[e]]);
        if (d == c) {
          out.self[c] += L.w[e];
          continue;
        }
        if (!edge_seen[d]) {
          edge_seen[d] = 1;
          touched.push_back(d);
        }
        edge_acc[d] += L.w[e];
      }
      for (std::size_t i = L.soff[u]; i < L.soff[u + 1]; ++i) slot_acc[L.slot[i]] += L.sval[i];
    }
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t d : touched) {
      out.nbr.push_back(d);
      out.w.push_back(edge_acc[d]);
      edge_acc[d] = 0.0;
      edge_seen[d] = 0;
    }
    out.off[c + 1] = out.nbr.size();
    std::vector<std::pair<std::uint32_t, double>> slots(slot_acc.begin(), slot_acc.end());
    std::sort(slots.begin(), slots.end());
    for (const auto& [s, v] : slots) {
      out.slot.push_back(s);
      out.sval.push_back(v);
    }
    out.soff[c + 1] = out.slot.size();
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------- ModularityState

struct ModularityState::Impl {
  Level level;
  NullTerm null;
  double two_mu = 0.0;
  std::unique_ptr<Communities> communities;
};

ModularityState::ModularityState(const SupraGraph& g, const MultilayerParams& params,
                                 std::vector<int> membership)
    : impl_(std::make_unique<Impl>()) {
  if (membership.size() != g.node_count()) throw std::invalid_argument("membership size mismatch");
  impl_->level = base_level(g);
  impl_->null = make_null(g, params);
  impl_->two_mu = g.total_weight();
  impl_->communities = std::make_unique<Communities>(impl_->level, impl_->null, std::move(membership));
}

ModularityState::~ModularityState() = default;
ModularityState::ModularityState(ModularityState&&) noexcept = default;
ModularityState& ModularityState::operator=(ModularityState&&) noexcept = default;

double ModularityState::move_delta(std::uint32_t u, int module) const {
  const Communities& C = *impl_->communities;
  const int c0 = C.comm(u);
  if (module == c0) return 0.0;
  NeighborWeights nw(impl_->level.n);
  nw.collect(impl_->level, C, u);
  const double leave = nw.weight_to(c0) - C.null_between(u, c0, true);
  const double join = nw.weight_to(module) - C.null_between(u, module, false);
  return 2.0 * (join - leave) / impl_->two_mu;
}

void ModularityState::move(std::uint32_t u, int module) {
  impl_->communities->remove(u);
  impl_->communities->insert(u, module);
}

double ModularityState::quality() const {
  return impl_->communities->scaled_quality() / impl_->two_mu;
}

const std::vector<int>& ModularityState::membership() const { return impl_->communities->membership(); }

// ------------------------------------------------------------ public entry

double quality(const SupraGraph& g, std::span<const int> membership, const MultilayerParams& params) {
  if (g.total_weight() <= 0.0) throw std::invalid_argument("quality: graph has no edges");
  return ModularityState(g, params, std::vector<int>(membership.begin(), membership.end())).quality();
}

double quality(const TemporalNetwork& net, const Partition& partition, const MultilayerParams& params) {
  const SupraGraph g = SupraGraph::from_network(net, params.omega);
  std::vector<int> membership(g.node_count());
  for (std::uint32_t u = 0; u < g.node_count(); ++u) {
    const auto m = partition.module_of(g.keys()[u]);
    if (!m) throw std::invalid_argument("partition does not cover every present node");
    membership[u] = *m;
  }
  return quality(g, membership, params);
}

std::vector<int> louvain(const SupraGraph& g, const MultilayerParams& params, std::uint64_t seed) {
  const std::size_t n = g.node_count();
  std::vector<int> result(n);
  std::iota(result.begin(), result.end(), 0);
  if (n == 0 || g.total_weight() <= 0.0) return result;

  const NullTerm nt = make_null(g, params);
  std::mt19937_64 rng(seed);
  Level level = base_level(g);
  while (true) {
    std::vector<int> init(level.n);
    std::iota(init.begin(), init.end(), 0);
    Communities C(level, nt, std::move(init));
    if (!move_nodes(level, C, rng)) break;
    std::vector<int> dense;
    Level next = aggregate(level, C, dense);
    for (int& r : result) r = dense[r];
    if (next.n == level.n) break;
    level = std::move(next);
  }

  // Never return less than the trivial baselines.
  const double q = quality(g, result, params);
  std::vector<int> singletons(n), together(n, 0);
  std::iota(singletons.begin(), singletons.end(), 0);
  const double q_single = quality(g, singletons, params);
  const double q_together = quality(g, together, params);
  if (q_together > q + kGainEps && q_together >= q_single) return together;
  if (q_single > q + kGainEps) return singletons;
  return result;
}

Partition to_partition(const SupraGraph& g, std::span<const int> membership) {
  return Partition(g.keys(), std::vector<int>(membership.begin(), membership.end()));
}

Partition optimize(const TemporalNetwork& net, const MultilayerParams& params, std::uint64_t seed) {
  const SupraGraph g = SupraGraph::from_network(net, params.omega);
  return to_partition(g, louvain(g, params, seed));
}

std::vector<std::pair<int, std::optional<double>>> yearly_q(const TemporalNetwork& net,
                                                            const Partition& partition, double gamma) {
  std::vector<std::pair<int, std::optional<double>>> out;
  for (const Slice& s : net.slices()) {
    if (s.empty()) {
      out.emplace_back(s.year(), std::nullopt);
      continue;
    }
    const double two_m = 2.0 * static_cast<double>(s.link_count());
    std::unordered_map<int, double> volume;
    double inside = 0.0;
    auto module = [&](ActorIndex i) {
      const auto m = partition.module_of(i, s.year());
      if (!m) throw std::invalid_argument("partition does not cover every present node");
      return *m;
    };
    for (ActorIndex i = 0; i < net.registry().size(); ++i) {
      if (s.present(i)) volume[module(i)] += s.degree(i);
    }
    for (const Link& l : s.links()) {
      if (module(l.a) == module(l.b)) inside += 2.0;
    }
    double null = 0.0;
    for (const auto& [m, vol] : volume) null += vol * vol;
    out.emplace_back(s.year(), (inside - gamma * null / two_m) / two_m);
  }
  return out;
}

TemporalNetwork null_permute_slices(const TemporalNetwork& net, std::uint64_t seed) {
  std::vector<std::size_t> perm(net.slice_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Slice> slices;
  slices.reserve(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    slices.emplace_back(net.slices()[i].year(), net.slices()[perm[i]].links(), net.registry().size());
  }
  return TemporalNetwork(net.registry(), std::move(slices));
}

TemporalNetwork null_degree_shuffle(const TemporalNetwork& net, std::uint64_t seed,
                                    std::size_t attempts_per_link) {
  std::vector<Slice> slices;
  slices.reserve(net.slice_count());
  for (std::size_t idx = 0; idx < net.slice_count(); ++idx) {
    const Slice& s = net.slices()[idx];
    std::vector<Link> links = s.links();
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (idx + 1)));
    auto key = [](ActorIndex a, ActorIndex b) { return (static_cast<std::uint64_t>(a) << 32) | b; };
    std::unordered_set<std::uint64_t> present;
    for (const Link& l : links) present.insert(key(l.a, l.b));
    if (links.size() >= 2) {
      std::uniform_int_distribution<std::size_t> pick(0, links.size() - 1);
      const std::size_t attempts = attempts_per_link * links.size();
      for (std::size_t t = 0; t < attempts; ++t) {
        const std::size_t i = pick(rng), j = pick(rng);
        Link& x = links[i];
        Link& y = links[j];
        if (x.a == y.a || x.b == y.b) continue;
        if (present.count(key(x.a, y.b)) || present.count(key(y.a, x.b))) continue;
        present.erase(key(x.a, x.b));
        present.erase(key(y.a, y.b));
        std::swap(x.b, y.b);
        present.insert(key(x.a, x.b));
        present.insert(key(y.a, y.b));
      }
    }
    slices.emplace_back(s.year(), std::move(links), net.registry().size());
  }
  return TemporalNetwork(net.registry(), std::move(slices));
}

}  // namespace tbnet
