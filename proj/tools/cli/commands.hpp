// Subcommand bodies. Each writes its artifacts through the RunContext; the
// caller writes the manifest afterwards.

#pragma once

#include "context.hpp"

#include <optional>
#include <string>

namespace tbnet::cli {

/// Union of every subcommand's flags; unset optionals fall back to config.
struct Args {
  std::string input;
  std::optional<std::string> format;
  std::string partition;

  // dynamics
  std::optional<long long> min_count;
  bool log_bins = false;
  bool weighted_fit = false;

  // nestedness
  std::optional<long long> window;
  std::optional<long long> n_null;

  // modularity / consensus
  std::optional<double> gamma;
  std::optional<double> omega;
  std::optional<std::string> null_model;
  std::optional<long long> ensemble;
  bool binarize = false;

  // modules / roles
  std::optional<long long> major_joint;
  std::optional<double> d_hub;
  std::optional<double> c_connector;

  // synth
  std::optional<long long> years;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<long long> modules;
  std::optional<double> mixing;

  // correlate
  std::string table;
  std::string join_with;
  std::string x_column;
  std::string y_column;
  std::string key = "year";
};

void cmd_ingest(RunContext& ctx, const Args& a);
void cmd_describe(RunContext& ctx, const Args& a);
void cmd_dynamics(RunContext& ctx, const Args& a);
void cmd_nestedness(RunContext& ctx, const Args& a);
void cmd_modularity(RunContext& ctx, const Args& a);
void cmd_consensus(RunContext& ctx, const Args& a);
void cmd_modules(RunContext& ctx, const Args& a);
void cmd_roles(RunContext& ctx, const Args& a);
void cmd_synth(RunContext& ctx, const Args& a);
void cmd_pipeline(RunContext& ctx, const Args& a);
void cmd_correlate(RunContext& ctx, const Args& a);

}  // namespace tbnet::cli
