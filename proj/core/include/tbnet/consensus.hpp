// Consensus over an ensemble of partitions: co-assignment frequencies,
// a random-reassignment threshold, re-partitioning of the thresholded
// matrix, and selection of a representative by mean AMI.

#pragma once

#include "tbnet/modularity.hpp"
#include "tbnet/netcore.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tbnet {

/// Sparse symmetric co-assignment matrix. The diagonal is implicit (1) and
/// never stored; rows list only entries above `threshold`.
struct AssociationMatrix {
  std::vector<NodeKey> keys;
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> cols;
  std::vector<double> values;
  double threshold = 0.0;
  std::size_t ensemble_size = 0;

  std::size_t size() const { return keys.size(); }
  /// Entry (u, v); 1 on the diagonal, 0 for entries not stored.
  double at(std::uint32_t u, std::uint32_t v) const;
  std::size_t stored_entries() const { return values.size(); }
};

/// Frequency with which each node pair shares a module. Keeps entries strictly
/// above `threshold`; with binarize, kept entries become 1. Throws
/// std::invalid_argument for fewer than two partitions or mismatched nodes.
AssociationMatrix association_matrix(std::span<const Partition> partitions, double threshold = 0.0,
                                     bool binarize = false);

/// Largest off-diagonal co-assignment frequency among `ensemble_size` random
/// partitions of n_nodes into n_modules groups of near-equal size.
double null_threshold(std::size_t n_nodes, std::size_t n_modules, std::size_t ensemble_size,
                      std::uint64_t seed);

/// Adjusted mutual information with max-entropy normalization and the exact
/// expected MI under the permutation model. Exactly 1 for partitions equal up
/// to relabeling.
double ami(std::span<const int> x, std::span<const int> y);
/// Throws std::invalid_argument if the node sets differ.
double ami(const Partition& x, const Partition& y);

/// Pairwise AMI matrix with unit diagonal.
std::vector<std::vector<double>> ami_matrix(std::span<const Partition> partitions, unsigned threads = 1);

struct ConsensusOptions {
  std::size_t ensemble_size = 50;
  bool binarize = false;
  unsigned threads = 1;
};

struct ConsensusDiagnostics {
  std::size_t ensemble_size = 0;
  std::size_t null_modules = 0;  // N_m used for the threshold null
  double threshold = 0.0;
  std::size_t retained_entries = 0;  // stored off-diagonal entries, both triangles
  std::vector<std::vector<double>> ami;  // among the re-partitioned ensemble
  std::vector<double> mean_ami;
  std::size_t representative = 0;
  double stability = 0.0;           // mean off-diagonal AMI of the re-partitioned ensemble
  double ensemble_stability = 0.0;  // same for the raw optimizer ensemble
};

struct ConsensusResult {
  Partition partition;
  ConsensusDiagnostics diagnostics;
};

/// Index maximizing mean AMI against the other members; ties go to the lowest
/// index. Fills `mean_ami`.
std::size_t most_central(const std::vector<std::vector<double>>& ami, std::vector<double>& mean_ami);

/// Deterministic for (seed, ensemble_size) regardless of thread count.
ConsensusResult representative_partition(const TemporalNetwork& net, const MultilayerParams& params,
                                         const ConsensusOptions& opts, std::uint64_t seed);

/// Actor-level view: each actor's most frequent module over its presence
/// years, ties to the lowest module id. Sorted by actor.
std::vector<std::pair<ActorIndex, int>> collapse_to_actors(const Partition& partition);

}  // namespace tbnet
