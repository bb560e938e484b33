// Multilayer modularity over yearly slices with ordinal interslice coupling.
//
// Every present (actor, year) pair is a node of a supra-graph. Intraslice
// links carry weight 1; each actor is coupled to its own copy in the next
// year with weight omega when it is present in both years. The quality is
//
//   Q = 1/(2 mu) * sum_{ij ab} [(A_ija - gamma k_ia k_ja / (2 m_a)) d_ab + d_ij C_jab] d(s_ia, s_jb)
//
// with 2 m_a the total intraslice degree of slice a and 2 mu the total
// supra-graph weight including coupling. optimize() runs a Louvain-style
// local-move/aggregate scheme on this objective.

#pragma once

#include "tbnet/netcore.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tbnet {

struct NodeKey {
  ActorIndex actor = 0;
  int year = 0;

  friend auto operator<=>(const NodeKey& x, const NodeKey& y) {
    if (auto c = x.year <=> y.year; c != 0) return c;
    return x.actor <=> y.actor;
  }
  friend bool operator==(const NodeKey&, const NodeKey&) = default;
};

/// Module assignment of (actor, year) nodes. Keys are kept sorted by
/// (year, actor) and module ids are renumbered densely in that order, so two
/// partitions that differ only by labels compare equal.
class Partition {
 public:
  Partition() = default;
  Partition(std::vector<NodeKey> keys, std::vector<int> modules);

  const std::vector<NodeKey>& keys() const { return keys_; }
  const std::vector<int>& modules() const { return modules_; }
  std::size_t size() const { return keys_.size(); }
  int n_modules() const { return n_modules_; }

  std::optional<int> module_of(ActorIndex actor, int year) const;
  std::optional<int> module_of(const NodeKey& key) const;
  bool same_nodes(const Partition& other) const { return keys_ == other.keys_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<NodeKey> keys_;
  std::vector<int> modules_;
  int n_modules_ = 0;
};

enum class NullModel {
  Standard,   // k_i k_j / 2m over the unipartite encoding
  Bipartite,  // cross-guild pairs only, k_i k_j / m
};

struct MultilayerParams {
  double gamma = 1.0;
  double omega = 1.0;
  NullModel null_model = NullModel::Standard;
};

struct WeightedEdge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  double weight = 0.0;
};

/// Supra-graph of a temporal network (or a single weighted layer).
class SupraGraph {
 public:
  static SupraGraph from_network(const TemporalNetwork& net, double omega);
  /// Single layer with arbitrary symmetric weights; each undirected edge once.
  static SupraGraph weighted(std::vector<NodeKey> keys, const std::vector<WeightedEdge>& edges);

  std::size_t node_count() const { return keys_.size(); }
  std::size_t slice_count() const { return slice_count_; }
  const std::vector<NodeKey>& keys() const { return keys_; }
  std::optional<std::uint32_t> node_of(const NodeKey& key) const;

  std::uint32_t slice_of(std::uint32_t u) const { return slice_[u]; }
  Guild guild_of(std::uint32_t u) const { return guild_[u]; }
  /// Intraslice strength k_ia used by the null term.
  double strength(std::uint32_t u) const { return strength_[u]; }
  std::span<const std::uint32_t> neighbors(std::uint32_t u) const;
  /// Weights aligned with neighbors(u); intraslice and coupling combined.
  std::span<const double> weights(std::uint32_t u) const;
  /// 2 mu: sum of all adjacency entries, both directions.
  double total_weight() const { return total_weight_; }

 private:
  void finish(const std::vector<WeightedEdge>& edges);

  std::vector<NodeKey> keys_;
  std::vector<std::uint32_t> slice_;
  std::vector<Guild> guild_;
  std::vector<double> strength_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> adj_;
  std::vector<double> adj_w_;
  std::size_t slice_count_ = 0;
  double total_weight_ = 0.0;
};

/// Quality of a membership vector aligned with g's nodes.
double quality(const SupraGraph& g, std::span<const int> membership, const MultilayerParams& params);

/// Throws std::invalid_argument if some present node is not covered.
double quality(const TemporalNetwork& net, const Partition& partition, const MultilayerParams& params);

/// Incremental bookkeeping for single-node moves on the base supra-graph.
/// The optimizer uses the same gain formula.
class ModularityState {
 public:
  ModularityState(const SupraGraph& g, const MultilayerParams& params, std::vector<int> membership);
  ~ModularityState();
  ModularityState(ModularityState&&) noexcept;
  ModularityState& operator=(ModularityState&&) noexcept;

  /// Change in Q if node u moves to `module` (which may be a fresh id).
  double move_delta(std::uint32_t u, int module) const;
  void move(std::uint32_t u, int module);
  double quality() const;
  const std::vector<int>& membership() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Louvain on the supra-graph; deterministic for a seed. Returns dense module
/// ids aligned with g's nodes.
std::vector<int> louvain(const SupraGraph& g, const MultilayerParams& params, std::uint64_t seed);

Partition to_partition(const SupraGraph& g, std::span<const int> membership);

Partition optimize(const TemporalNetwork& net, const MultilayerParams& params, std::uint64_t seed);

/// Newman-Girvan modularity of each slice under the partition restricted to
/// it; nullopt for empty slices.
std::vector<std::pair<int, std::optional<double>>> yearly_q(const TemporalNetwork& net,
                                                            const Partition& partition,
                                                            double gamma = 1.0);

/// Slices reordered by a uniform random permutation, relabeled with the
/// original years.
TemporalNetwork null_permute_slices(const TemporalNetwork& net, std::uint64_t seed);

/// Each slice rewired by cross-guild double-edge swaps that keep every degree.
/// Performs attempts_per_link * link_count swap attempts per slice.
TemporalNetwork null_degree_shuffle(const TemporalNetwork& net, std::uint64_t seed,
                                    std::size_t attempts_per_link = 10);

}  // namespace tbnet
