#include "cli.hpp"
#include "commands.hpp"
#include "context.hpp"

#include "tbnet/ingest.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <map>

namespace tbnet::cli {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

using Handler = void (*)(RunContext&, const Args&);

void add_input(CLI::App* sub, Args& a) {
  sub->add_option("-i,--input", a.input, "Edge list (CSV or JSON lines)")->check(CLI::ExistingFile);
  sub->add_option("--format", a.format, "auto, csv or jsonl")->check(CLI::IsMember({"auto", "csv", "jsonl"}));
}

void add_modularity(CLI::App* sub, Args& a) {
  sub->add_option("--gamma", a.gamma, "Resolution parameter");
  sub->add_option("--omega", a.omega, "Interslice coupling");
  sub->add_option("--null-model", a.null_model, "standard or bipartite")
      ->check(CLI::IsMember({"standard", "bipartite"}));
}

void add_consensus(CLI::App* sub, Args& a) {
  add_modularity(sub, a);
  sub->add_option("--ensemble", a.ensemble, "Optimizer runs in the ensemble");
  sub->add_flag("--binarize", a.binarize, "Binarize the thresholded association matrix");
}

void add_dynamics(CLI::App* sub, Args& a) {
  sub->add_option("--min-count", a.min_count, "Minimum raw events per bin for the exponent fit");
  sub->add_flag("--log-bins", a.log_bins, "Merge degree bins logarithmically before fitting");
  sub->add_flag("--weighted-fit", a.weighted_fit, "Weight the log-log fit by raw counts");
}

void add_nestedness(CLI::App* sub, Args& a) {
  sub->add_option("--window", a.window, "Sliding window width in years");
  sub->add_option("--n-null", a.n_null, "Null samples per window");
}

void add_modules(CLI::App* sub, Args& a) {
  sub->add_option("--major-joint", a.major_joint, "A module is major above this many distinct actors");
}

void add_roles(CLI::App* sub, Args& a) {
  sub->add_option("--d-hub", a.d_hub, "Hub threshold on d");
  sub->add_option("--c-connector", a.c_connector, "Connector threshold on c");
}

void print_error(const char* category, const std::string& what) {
  std::cerr << "tbnet: " << category << ": " << what << '\n';
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Temporal bipartite network analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Random seed (default: config 'seed' or 1)");
  app.add_option("--threads", global.threads, "Worker threads; 0 uses every core")->capture_default_str();
  app.add_option("--config", global.config_path, "key=value configuration file")->check(CLI::ExistingFile);
  app.add_option("-o,--out", global.out_dir, "Output directory (default: $TBNET_OUT_ROOT/<command>)");
  app.add_option("--set", global.overrides, "Override a config key: section.key=value");

  Args a;
  std::map<CLI::App*, Handler> handlers;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    handlers[s] = h;
    return s;
  };

  {
    auto* s = sub("ingest", "Parse an edge list and write it back in canonical form", cmd_ingest);
    add_input(s, a);
  }
  {
    auto* s = sub("describe", "Yearly sizes, connectance, link types and lifespans", cmd_describe);
    add_input(s, a);
  }
  {
    auto* s = sub("dynamics", "Relative attachment/detachment probability curves", cmd_dynamics);
    add_input(s, a);
    add_dynamics(s, a);
  }
  {
    auto* s = sub("nestedness", "Windowed NODF against the occupation null", cmd_nestedness);
    add_input(s, a);
    add_nestedness(s, a);
  }
  {
    auto* s = sub("modularity", "Single multilayer modularity optimization", cmd_modularity);
    add_input(s, a);
    add_modularity(s, a);
  }
  {
    auto* s = sub("consensus", "Representative partition of an optimizer ensemble", cmd_consensus);
    add_input(s, a);
    add_consensus(s, a);
  }
  {
    auto* s = sub("modules", "Module timelines, Jaccard series and classification", cmd_modules);
    add_input(s, a);
    s->add_option("-p,--partition", a.partition, "partition.csv from modularity or consensus")
        ->check(CLI::ExistingFile);
    add_modules(s, a);
  }
  {
    auto* s = sub("roles", "Within-module degree and participation roles", cmd_roles);
    add_input(s, a);
    s->add_option("-p,--partition", a.partition, "partition.csv from modularity or consensus")
        ->check(CLI::ExistingFile);
    add_roles(s, a);
  }
  {
    auto* s = sub("synth", "Generate a synthetic network with ground truth", cmd_synth);
    s->add_option("--years", a.years, "Number of yearly slices");
    s->add_option("--alpha", a.alpha, "Attachment exponent");
    s->add_option("--beta", a.beta, "Detachment exponent");
    s->add_option("--modules", a.modules, "Planted modules");
    s->add_option("--mixing", a.mixing, "Probability of ignoring planted modules");
  }
  {
    auto* s = sub("pipeline", "describe, dynamics, consensus, modules, roles and nestedness in one run",
                  cmd_pipeline);
    add_input(s, a);
    add_dynamics(s, a);
    add_nestedness(s, a);
    add_consensus(s, a);
    add_modules(s, a);
    add_roles(s, a);
  }
  {
    auto* s = sub("correlate", "Pearson correlation of two numeric columns", cmd_correlate);
    s->add_option("--table", a.table, "CSV holding the x column")->check(CLI::ExistingFile);
    s->add_option("--with", a.join_with, "Second CSV holding the y column, joined on --key")
        ->check(CLI::ExistingFile);
    s->add_option("--key", a.key, "Join column")->capture_default_str();
    s->add_option("-x,--x", a.x_column, "x column");
    s->add_option("-y,--y", a.y_column, "y column");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    RunContext ctx(chosen->get_name(), global);
    handlers.at(chosen)(ctx, a);
    ctx.write_manifest();
    std::cout << "tbnet " << chosen->get_name() << ": wrote " << ctx.out_dir().string() << '\n';
    return 0;
  } catch (const UsageError& e) {
    print_error("usage error", e.what());
    return kExitUsage;
  } catch (const ParseError& e) {
    print_error("parse error", e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    print_error("I/O error", e.what());
  } catch (const std::invalid_argument& e) {
    print_error("invalid input", e.what());
  } catch (const std::out_of_range& e) {
    print_error("invalid input", e.what());
  } catch (const std::exception& e) {
    print_error("error", e.what());
  }
  return kExitFailure;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& s : args) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace tbnet::cli
