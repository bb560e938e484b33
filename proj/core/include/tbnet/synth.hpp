// Generators with planted structure: a growth/decay process with degree-biased
// attachment and detachment, a multilayer planted partition, and noisy
// staircase matrices.

#pragma once

#include "tbnet/modularity.hpp"
#include "tbnet/nestedness.hpp"
#include "tbnet/netcore.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace tbnet {

namespace io {
class Config;
}

/// Growth process, one step per year after the first:
///  1. detachment: Poisson(departure_prob * L) events; each picks a target in
///     `target` guild with weight k^beta_detach and drops a uniform neighbor.
///  2. rewiring: Poisson(rewire_rate * L) events; each picks a target with
///     weight k^alpha_attach + baseline_weight and links it to a uniform
///     incumbent of the other guild.
///  3. arrivals: Poisson(arrival_rate) newcomers per guild, each with a degree
///     drawn from a power law on [1, degree_max], attaching to incumbents of
///     the other guild with weight k^alpha_attach + baseline_weight.
/// Degrees k are taken from the previous year. Partners stay in the chooser's
/// planted module with probability 1 - mixing.
struct SynthConfig {
  int first_year = 1950;
  int years = 30;
  std::size_t initial_A = 30;
  std::size_t initial_B = 15;
  double arrival_rate_A = 6.0;
  double arrival_rate_B = 1.0;
  double degree_exponent = 2.5;
  std::uint32_t degree_max = 6;
  double alpha_attach = 1.0;
  double beta_detach = 1.0;
  double baseline_weight = 1.0;
  double departure_prob = 0.15;
  double rewire_rate = 0.05;
  double passive_fraction = 0.3;
  std::size_t n_planted_modules = 1;
  double mixing = 0.0;
  Guild target = Guild::B;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument naming the first violated bound.
  void validate() const;
  /// Reads synth.* keys, keeping defaults for absent ones.
  static SynthConfig from_config(const io::Config& cfg);
};

enum class SynthEventKind { Initial, AttachNew, AttachIncumbent, Detach };

const char* synth_event_name(SynthEventKind k);

struct SynthEvent {
  int year = 0;
  SynthEventKind kind = SynthEventKind::Initial;
  ActorIndex target = 0;   // actor selected by the kernel
  ActorIndex partner = 0;  // other endpoint
  std::uint32_t target_degree = 0;  // previous-year degree of target
  double probability = 1.0;         // normalized selection probability of target
  LinkKind link_kind;
};

struct SynthResult {
  TemporalNetwork network;
  std::vector<SynthEvent> events;  // in application order
  std::vector<int> planted_module;  // per actor index
};

SynthResult generate(const SynthConfig& cfg);

/// Rebuilds the network from the event log alone.
TemporalNetwork replay(const ActorRegistry& registry, int first_year, int years,
                       const std::vector<SynthEvent>& events);

/// One JSON object per event, with actor ids rather than indices.
void write_ground_truth(const SynthResult& r, const std::filesystem::path& path);
/// actor_id, guild, module
void write_planted_modules(const SynthResult& r, const std::filesystem::path& path);

struct PlantedConfig {
  std::size_t n_modules = 2;
  std::size_t per_module_A = 10;
  std::size_t per_module_B = 10;
  int slices = 5;
  int first_year = 2000;
  double mean_degree = 4.0;
  double mixing = 0.1;  // probability that a link crosses modules
  std::uint64_t seed = 1;
};

struct PlantedResult {
  TemporalNetwork network;
  Partition truth;  // over present (actor, year) nodes
};

/// Fixed rosters; every slice is drawn independently with the same modules.
PlantedResult generate_planted(const PlantedConfig& cfg);

/// Ferrers-shaped (perfectly nested) matrix holding round(fill * rows * cols)
/// ones, after which round(noise * rows * cols) random cells are redrawn as
/// Bernoulli(fill).
BinaryMatrix generate_nested(std::size_t rows, std::size_t cols, double fill, double noise, std::uint64_t seed);

}  // namespace tbnet
