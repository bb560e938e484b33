#include "tbnet/consensus.hpp"

#include "tbnet/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tbnet {

namespace {

std::vector<int> canonical_labels(std::span<const int> x) {
  std::map<int, int> dense;
  std::vector<int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = dense.try_emplace(x[i], static_cast<int>(dense.size())).first->second;
  }
  return out;
}

double entropy(const std::vector<std::size_t>& sizes, double n) {
  double h = 0.0;
  for (std::size_t s : sizes) {
    if (s == 0) continue;
    const double p = static_cast<double>(s) / n;
    h -= p * std::log(p);
  }
  return h;
}

// E[MI] under the permutation model with fixed marginals a and b.
double expected_mi(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b, std::size_t n_total) {
  const double n = static_cast<double>(n_total);
  const double lg_n = std::lgamma(n + 1.0);
  double emi = 0.0;
  for (std::size_t ai : a) {
    for (std::size_t bj : b) {
      const std::size_t lo = ai + bj > n_total ? std::max<std::size_t>(1, ai + bj - n_total) : 1;
      const std::size_t hi = std::min(ai, bj);
      const double fa = static_cast<double>(ai), fb = static_cast<double>(bj);
      const double base = std::lgamma(fa + 1) + std::lgamma(fb + 1) + std::lgamma(n - fa + 1) +
                          std::lgamma(n - fb + 1) - lg_n;
      for (std::size_t nij = lo; nij <= hi; ++nij) {
        const double k = static_cast<double>(nij);
        const double log_p = base - std::lgamma(k + 1) - std::lgamma(fa - k + 1) - std::lgamma(fb - k + 1) -
                             std::lgamma(n - fa - fb + k + 1);
        emi += k / n * std::log(n * k / (fa * fb)) * std::exp(log_p);
      }
    }
  }
  return emi;
}

// Members of each module per partition, aligned with a shared key order.
struct ModuleLists {
  std::vector<int> module_of;
  std::vector<std::vector<std::uint32_t>> members;
};

ModuleLists module_lists(const std::vector<int>& modules) {
  ModuleLists out;
  out.module_of = modules;
  int n_mod = 0;
  for (int m : modules) n_mod = std::max(n_mod, m + 1);
  out.members.resize(static_cast<std::size_t>(n_mod));
  for (std::uint32_t u = 0; u < modules.size(); ++u) out.members[modules[u]].push_back(u);
  return out;
}

double mean_off_diagonal(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  if (n < 2) return 1.0;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) s += m[i][j];
    }
  }
  return s / static_cast<double>(n * (n - 1));
}

}  // namespace

double AssociationMatrix::at(std::uint32_t u, std::uint32_t v) const {
  if (u == v) return 1.0;
  const auto first = cols.begin() + static_cast<std::ptrdiff_t>(offsets[u]);
  const auto last = cols.begin() + static_cast<std::ptrdiff_t>(offsets[u + 1]);
  const auto it = std::lower_bound(first, last, v);
  if (it == last || *it != v) return 0.0;
  return values[static_cast<std::size_t>(it - cols.begin())];
}

AssociationMatrix association_matrix(std::span<const Partition> partitions, double threshold, bool binarize) {
  if (partitions.size() < 2) throw std::invalid_argument("association matrix needs at least two partitions");
  for (const auto& p : partitions.subspan(1)) {
    if (!p.same_nodes(partitions.front())) throw std::invalid_argument("partitions cover different nodes");
  }
  AssociationMatrix out;
  out.keys = partitions.front().keys();
  out.threshold = threshold;
  out.ensemble_size = partitions.size();
  const std::size_t n = out.keys.size();
  std::vector<ModuleLists> lists;
  lists.reserve(partitions.size());
  for (const auto& p : partitions) lists.push_back(module_lists(p.modules()));

  const double total = static_cast<double>(partitions.size());
  std::vector<std::uint32_t> count(n, 0);
  std::vector<std::uint32_t> touched;
  out.offsets.assign(n + 1, 0);
  for (std::uint32_t u = 0; u < n; ++u) {
    touched.clear();
    for (const auto& l : lists) {
      for (std::uint32_t v : l.members[l.module_of[u]]) {
        if (v == u) continue;
        if (count[v]++ == 0) touched.push_back(v);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t v : touched) {
      const double f = static_cast<double>(count[v]) / total;
      count[v] = 0;
      if (f <= threshold) continue;
      out.cols.push_back(v);
      out.values.push_back(binarize ? 1.0 : f);
    }
    out.offsets[u + 1] = out.cols.size();
  }
  return out;
}

double null_threshold(std::size_t n_nodes, std::size_t n_modules, std::size_t ensemble_size,
                      std::uint64_t seed) {
  if (n_nodes < 2) throw std::invalid_argument("null_threshold: need at least two nodes");
  if (n_modules < 1 || n_modules > n_nodes) throw std::invalid_argument("null_threshold: module count out of range");
  if (ensemble_size < 1) throw std::invalid_argument("null_threshold: empty ensemble");
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> order(n_nodes);
  std::vector<ModuleLists> lists;
  lists.reserve(ensemble_size);
  for (std::size_t r = 0; r < ensemble_size; ++r) {
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> modules(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i) {
      modules[order[i]] = static_cast<int>(i * n_modules / n_nodes);
    }
    lists.push_back(module_lists(modules));
  }
  std::vector<std::uint32_t> count(n_nodes, 0);
  std::vector<std::uint32_t> touched;
  std::uint32_t best = 0;
  for (std::uint32_t u = 0; u < n_nodes && best < ensemble_size; ++u) {
    touched.clear();
    for (const auto& l : lists) {
      for (std::uint32_t v : l.members[l.module_of[u]]) {
        if (v <= u) continue;
        if (count[v]++ == 0) touched.push_back(v);
      }
    }
    for (std::uint32_t v : touched) {
      best = std::max(best, count[v]);
      count[v] = 0;
    }
  }
  return static_cast<double>(best) / static_cast<double>(ensemble_size);
}

double ami(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) throw std::invalid_argument("ami: label vectors differ in length");
  if (x.empty()) throw std::invalid_argument("ami: empty partitions");
  const std::vector<int> cx = canonical_labels(x), cy = canonical_labels(y);
  if (cx == cy) return 1.0;
  const std::size_t n_total = x.size();
  const double n = static_cast<double>(n_total);
  const int kx = *std::max_element(cx.begin(), cx.end()) + 1;
  const int ky = *std::max_element(cy.begin(), cy.end()) + 1;
  std::vector<std::size_t> a(static_cast<std::size_t>(kx), 0), b(static_cast<std::size_t>(ky), 0);
  std::map<std::pair<int, int>, std::size_t> joint;
  for (std::size_t i = 0; i < n_total; ++i) {
    ++a[cx[i]];
    ++b[cy[i]];
    ++joint[{cx[i], cy[i]}];
  }
  double mi = 0.0;
  for (const auto& [cell, c] : joint) {
    const double nij = static_cast<double>(c);
    mi += nij / n * std::log(n * nij / (static_cast<double>(a[cell.first]) * static_cast<double>(b[cell.second])));
  }
  const double emi = expected_mi(a, b, n_total);
  const double denom = std::max(entropy(a, n), entropy(b, n)) - emi;
  if (std::fabs(denom) < 1e-15) return 0.0;
  return (mi - emi) / denom;
}

double ami(const Partition& x, const Partition& y) {
  if (!x.same_nodes(y)) throw std::invalid_argument("ami: partitions cover different nodes");
  return ami(std::span<const int>(x.modules()), std::span<const int>(y.modules()));
}

std::vector<std::vector<double>> ami_matrix(std::span<const Partition> partitions, unsigned threads) {
  const std::size_t n = partitions.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 1.0));
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = ami(partitions[i], partitions[j]);
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) m[i][j] = m[j][i];
  }
  return m;
}

std::size_t most_central(const std::vector<std::vector<double>>& ami, std::vector<double>& mean_ami) {
  const std::size_t n = ami.size();
  if (n == 0) throw std::invalid_argument("most_central: empty ensemble");
  mean_ami.assign(n, 1.0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (n > 1) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) s += ami[i][j];
      }
      mean_ami[i] = s / static_cast<double>(n - 1);
    }
    if (mean_ami[i] > mean_ami[best]) best = i;
  }
  return best;
}

ConsensusResult representative_partition(const TemporalNetwork& net, const MultilayerParams& params,
                                         const ConsensusOptions& opts, std::uint64_t seed) {
  if (opts.ensemble_size < 2) throw std::invalid_argument("consensus: ensemble size must be at least 2");
  const std::size_t runs = opts.ensemble_size;
  const SupraGraph g = SupraGraph::from_network(net, params.omega);
  if (g.node_count() < 2) throw std::invalid_argument("consensus: network has fewer than two nodes");

  std::vector<Partition> ensemble(runs);
  parallel_for(runs, opts.threads, [&](std::size_t i) {
    ensemble[i] = to_partition(g, louvain(g, params, derive_seed(seed, 2 * i)));
  });

  ConsensusResult result;
  ConsensusDiagnostics& diag = result.diagnostics;
  diag.ensemble_size = runs;
  diag.ensemble_stability = mean_off_diagonal(ami_matrix(ensemble, opts.threads));
  double mean_modules = 0.0;
  for (const auto& p : ensemble) mean_modules += p.n_modules();
  mean_modules /= static_cast<double>(runs);
  diag.null_modules = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(mean_modules)), 1,
                                              g.node_count());
  diag.threshold = null_threshold(g.node_count(), diag.null_modules, runs, derive_seed(seed, 2 * runs + 1));

  const AssociationMatrix assoc = association_matrix(ensemble, diag.threshold, opts.binarize);
  diag.retained_entries = assoc.stored_entries();
  std::vector<WeightedEdge> edges;
  for (std::uint32_t u = 0; u < assoc.size(); ++u) {
    for (std::size_t e = assoc.offsets[u]; e < assoc.offsets[u + 1]; ++e) {
      if (assoc.cols[e] > u) edges.push_back({u, assoc.cols[e], assoc.values[e]});
    }
  }
  const SupraGraph h = SupraGraph::weighted(assoc.keys, edges);
  const MultilayerParams flat{1.0, 0.0, NullModel::Standard};
  std::vector<Partition> repartitioned(runs);
  parallel_for(runs, opts.threads, [&](std::size_t i) {
    repartitioned[i] = to_partition(h, louvain(h, flat, derive_seed(seed, 2 * i + 1)));
  });

  diag.ami = ami_matrix(repartitioned, opts.threads);
  diag.representative = most_central(diag.ami, diag.mean_ami);
  diag.stability = mean_off_diagonal(diag.ami);
  result.partition = std::move(repartitioned[diag.representative]);
  return result;
}

std::vector<std::pair<ActorIndex, int>> collapse_to_actors(const Partition& partition) {
  std::map<ActorIndex, std::map<int, std::size_t>> counts;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    ++counts[partition.keys()[i].actor][partition.modules()[i]];
  }
  std::vector<std::pair<ActorIndex, int>> out;
  out.reserve(counts.size());
  for (const auto& [actor, per_module] : counts) {
    int best = per_module.begin()->first;
    std::size_t best_count = 0;
    for (const auto& [m, c] : per_module) {
      if (c > best_count) {
        best = m;
        best_count = c;
      }
    }
    out.emplace_back(actor, best);
  }
  return out;
}

}  // namespace tbnet
