#include "commands.hpp"

#include "tbnet/consensus.hpp"
#include "tbnet/dynamics.hpp"
#include "tbnet/ingest.hpp"
#include "tbnet/moddyn.hpp"
#include "tbnet/modularity.hpp"
#include "tbnet/nestedness.hpp"
#include "tbnet/roles.hpp"
#include "tbnet/stats.hpp"
#include "tbnet/synth.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

namespace tbnet::cli {

namespace {

using json = nlohmann::json;
using Row = std::vector<std::string>;

std::string num(double v) { return io::format_number(v); }
std::string opt(const std::optional<double>& v) { return io::format_optional(v); }
template <class I>
std::string integer(I v) {
  return std::to_string(v);
}

json correlation_json(const std::optional<stats::Correlation>& c) {
  if (!c) return nullptr;
  return {{"rho", json_number(c->rho)}, {"p_value", json_number(c->p_value)}, {"n", c->n}};
}

std::optional<stats::Correlation> try_correlate(const std::vector<double>& x, const std::vector<double>& y) {
  try {
    return stats::correlate(x, y);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Guild parse_guild(const std::string& s) {
  if (s == "NAG" || s == "A") return Guild::A;
  if (s == "HS" || s == "B") return Guild::B;
  throw std::invalid_argument("unknown guild '" + s + "'");
}

std::optional<double> parse_value(const std::string& s) {
  if (s.empty() || s == io::kNoValue) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument(what + ": not an integer: '" + s + "'");
  return v;
}

std::size_t positive(long long v, const std::string& key) {
  if (v <= 0) throw std::invalid_argument(key + " must be positive");
  return static_cast<std::size_t>(v);
}

// ---------------------------------------------------------------- inputs

TemporalNetwork load_network(RunContext& ctx, const Args& a) {
  if (a.input.empty()) throw UsageError(ctx.command() + ": --input is required");
  if (a.format) ctx.override("ingest.format", *a.format);
  const FormatConfig fc = FormatConfig::from_config(ctx.config());
  ctx.add_input(a.input);
  TemporalNetwork net = parse_edge_list(a.input, fc);
  if (net.empty()) throw std::invalid_argument(a.input + ": no links");
  return net;
}

Partition load_partition(RunContext& ctx, const TemporalNetwork& net, const std::string& path) {
  if (path.empty()) throw UsageError(ctx.command() + ": --partition is required");
  ctx.add_input(path);
  const io::CsvTable t = io::read_csv(path);
  const std::size_t c_actor = t.column("actor_id"), c_guild = t.column("guild"), c_year = t.column("year"),
                    c_module = t.column("module");
  std::vector<NodeKey> keys;
  std::vector<int> modules;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    const std::string where = path + ":" + std::to_string(t.line_numbers[r]);
    const auto actor = net.registry().find(parse_guild(row.at(c_guild)), row.at(c_actor));
    if (!actor) throw std::invalid_argument(where + ": actor '" + row.at(c_actor) + "' not in the network");
    keys.push_back({*actor, parse_int(row.at(c_year), where)});
    modules.push_back(parse_int(row.at(c_module), where));
  }
  return Partition(std::move(keys), std::move(modules));
}

MultilayerParams modularity_params(RunContext& ctx, const Args& a) {
  MultilayerParams p;
  p.gamma = ctx.setting("modularity.gamma", a.gamma, 1.0);
  p.omega = ctx.setting("modularity.omega", a.omega, 1.0);
  const std::string null = ctx.setting("modularity.null_model", a.null_model, "standard");
  if (null == "standard") {
    p.null_model = NullModel::Standard;
  } else if (null == "bipartite") {
    p.null_model = NullModel::Bipartite;
  } else {
    throw std::invalid_argument("modularity.null_model must be standard or bipartite");
  }
  if (p.gamma < 0.0 || p.omega < 0.0) throw std::invalid_argument("gamma and omega must be >= 0");
  return p;
}

json params_json(const MultilayerParams& p) {
  return {{"gamma", p.gamma},
          {"omega", p.omega},
          {"null_model", p.null_model == NullModel::Standard ? "standard" : "bipartite"}};
}

// ---------------------------------------------------------------- writers

void write_describe(RunContext& ctx, const TemporalNetwork& net) {
  std::vector<Row> rows;
  for (const YearSummary& y : describe(net)) {
    rows.push_back({integer(y.year), integer(y.n_a), integer(y.n_b), integer(y.links), integer(y.components),
                    opt(y.connectance), opt(y.fractions ? std::optional(y.fractions->active_only) : std::nullopt),
                    opt(y.fractions ? std::optional(y.fractions->passive_only) : std::nullopt),
                    opt(y.fractions ? std::optional(y.fractions->both) : std::nullopt)});
  }
  ctx.write_csv("describe.csv",
                {"year", "n_NAG", "n_HS", "links", "components", "connectance", "active_only", "passive_only", "both"},
                rows);

  const auto& reg = net.registry();
  std::vector<Row> durations, survival;
  json guilds = json::object();
  for (Guild g : {Guild::A, Guild::B}) {
    const auto stats_g = actor_durations(net, g);
    std::vector<int> d;
    for (const DurationStats& s : stats_g) {
      durations.push_back({reg[s.actor].id, guild_label(g), integer(s.duration), integer(s.max_degree),
                           num(s.mean_degree)});
      d.push_back(s.duration);
    }
    const auto ccdf = survival_ccdf(d);
    std::vector<std::pair<double, double>> ccdf_d;
    for (const auto& [dur, p] : ccdf) {
      survival.push_back({guild_label(g), integer(dur), num(p)});
      ccdf_d.emplace_back(dur, p);
    }
    std::optional<double> decay;
    try {
      decay = stats::exp_survival_fit(ccdf_d);
    } catch (const std::invalid_argument&) {
    }
    std::optional<stats::Correlation> by_max, by_mean;
    try {
      by_max = duration_degree_correlation(net, g, DegreeSummary::Max);
    } catch (const std::invalid_argument&) {
    }
    try {
      by_mean = duration_degree_correlation(net, g, DegreeSummary::Mean);
    } catch (const std::invalid_argument&) {
    }
    guilds[guild_label(g)] = {{"actors", stats_g.size()},
                              {"survival_decay_rate", json_number(decay)},
                              {"duration_max_degree", correlation_json(by_max)},
                              {"duration_mean_degree", correlation_json(by_mean)}};
  }
  ctx.write_csv("durations.csv", {"actor_id", "guild", "duration", "max_degree", "mean_degree"}, durations);
  ctx.write_csv("survival.csv", {"guild", "duration", "ccdf"}, survival);
  ctx.write_json("describe.json",
                 {{"first_year", net.first_year()}, {"last_year", net.last_year()}, {"guilds", guilds}});
}

void write_dynamics(RunContext& ctx, const TemporalNetwork& net, const Args& a) {
  EstimatorOptions opts;
  const long long min_count = ctx.setting("dynamics.min_count", a.min_count, 5LL);
  if (min_count < 1) throw std::invalid_argument("dynamics.min_count must be >= 1");
  opts.min_count = static_cast<std::uint64_t>(min_count);
  opts.log_bins = ctx.setting("dynamics.log_bins", a.log_bins, false);
  opts.weighted_fit = ctx.setting("dynamics.weighted_fit", a.weighted_fit, false);

  json curves = json::array();
  for (Guild g : {Guild::B, Guild::A}) {
    for (EventClass cls : {EventClass::AttachNew, EventClass::DetachDeparting, EventClass::AttachIncumbent,
                           EventClass::DetachIncumbent}) {
      const std::string file = fmt::format("{}_{}.csv", event_class_name(cls), guild_label(g));
      std::optional<RelProbCurve> curve;
      try {
        curve = relative_probability(net, g, cls, opts);
      } catch (const std::invalid_argument&) {
        // no qualifying event: header-only table
      }
      std::vector<Row> rows;
      if (curve) {
        for (const RelProbPoint& p : curve->points) {
          rows.push_back({integer(p.k), num(p.value), integer(p.raw_count), num(p.weight_sum), integer(p.exposure)});
        }
      }
      ctx.write_csv(file, {"k", "value", "raw_count", "weight_sum", "exposure"}, rows);
      curves.push_back({{"target", guild_label(g)},
                        {"class", event_class_name(cls)},
                        {"file", file},
                        {"events", curve ? curve->events : 0},
                        {"exponent", json_number(curve ? curve->exponent : std::nullopt)},
                        {"exponent_stderr", json_number(curve ? curve->exponent_stderr : std::nullopt)},
                        {"fit_bins", curve ? curve->fit_bins : 0}});
    }
  }
  ctx.write_json("dynamics.json", {{"min_count", opts.min_count},
                                   {"log_bins", opts.log_bins},
                                   {"weighted_fit", opts.weighted_fit},
                                   {"curves", curves}});
}

std::vector<NestednessReport> write_nestedness(RunContext& ctx, const TemporalNetwork& net, const Args& a) {
  NestednessOptions opts;
  opts.window_width = static_cast<int>(positive(ctx.setting("nestedness.window", a.window, 5LL), "nestedness.window"));
  opts.n_null = positive(ctx.setting("nestedness.n_null", a.n_null, 100LL), "nestedness.n_null");
  opts.seed = ctx.seed();
  opts.threads = ctx.threads();
  const auto reports = nestedness_series(net, opts);
  std::vector<Row> rows;
  for (const NestednessReport& r : reports) {
    rows.push_back({integer(r.year), integer(r.rows), integer(r.cols), opt(r.nodf), opt(r.null_mean),
                    opt(r.null_std), opt(r.z_score)});
  }
  ctx.write_csv("nestedness.csv", {"year", "rows", "cols", "nodf", "null_mean", "null_std", "z"}, rows);
  return reports;
}

void write_partition(RunContext& ctx, const TemporalNetwork& net, const Partition& p) {
  const auto& reg = net.registry();
  std::vector<Row> rows;
  rows.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const NodeKey& k = p.keys()[i];
    rows.push_back({reg[k.actor].id, guild_label(reg[k.actor].guild), integer(k.year), integer(p.modules()[i])});
  }
  ctx.write_csv("partition.csv", {"actor_id", "guild", "year", "module"}, rows);
}

std::map<int, std::optional<double>> write_yearly_q(RunContext& ctx, const TemporalNetwork& net,
                                                    const Partition& p, double gamma) {
  std::map<int, std::optional<double>> out;
  std::vector<Row> rows;
  for (const auto& [year, q] : yearly_q(net, p, gamma)) {
    out[year] = q;
    rows.push_back({integer(year), opt(q)});
  }
  ctx.write_csv("yearly_q.csv", {"year", "q"}, rows);
  return out;
}

struct ConsensusOutput {
  Partition partition;
  std::map<int, std::optional<double>> yearly;
};

ConsensusOutput write_consensus(RunContext& ctx, const TemporalNetwork& net, const Args& a) {
  const MultilayerParams params = modularity_params(ctx, a);
  ConsensusOptions opts;
  opts.ensemble_size = positive(ctx.setting("consensus.ensemble_size", a.ensemble, 50LL), "consensus.ensemble_size");
  if (opts.ensemble_size < 2) throw std::invalid_argument("consensus.ensemble_size must be >= 2");
  opts.binarize = ctx.setting("consensus.binarize", a.binarize, false);
  opts.threads = ctx.threads();
  ConsensusResult r = representative_partition(net, params, opts, ctx.seed());
  write_partition(ctx, net, r.partition);
  auto yearly = write_yearly_q(ctx, net, r.partition, params.gamma);
  const auto& d = r.diagnostics;
  ctx.write_json("consensus.json", {{"params", params_json(params)},
                                    {"ensemble_size", d.ensemble_size},
                                    {"binarize", opts.binarize},
                                    {"null_modules", d.null_modules},
                                    {"threshold", d.threshold},
                                    {"retained_entries", d.retained_entries},
                                    {"representative", d.representative},
                                    {"mean_ami", d.mean_ami},
                                    {"stability", d.stability},
                                    {"ensemble_stability", d.ensemble_stability},
                                    {"n_modules", r.partition.n_modules()},
                                    {"quality", quality(net, r.partition, params)}});
  return {std::move(r.partition), std::move(yearly)};
}

void write_modules(RunContext& ctx, const TemporalNetwork& net, const Partition& p, const Args& a) {
  MajorRule rule;
  rule.joint = static_cast<std::size_t>(
      std::max(0LL, ctx.setting("modules.major_joint", a.major_joint, static_cast<long long>(rule.joint))));
  if (ctx.config().contains("modules.min_A")) {
    rule.min_A = static_cast<std::size_t>(std::max(0LL, ctx.config().get_or("modules.min_A", 0LL)));
  }
  if (ctx.config().contains("modules.min_B")) {
    rule.min_B = static_cast<std::size_t>(std::max(0LL, ctx.config().get_or("modules.min_B", 0LL)));
  }
  const auto timelines = module_timelines(net, p);
  const ModuleClasses classes = classify_modules(timelines, rule);
  const std::set<int> major(classes.major.begin(), classes.major.end());

  json modules = json::array();
  std::vector<double> avg_a, avg_b;
  for (const ModuleTimeline& t : timelines) {
    const auto ja = jaccard_series(t, Guild::A);
    const auto jb = jaccard_series(t, Guild::B);
    std::vector<Row> rows;
    std::vector<double> va, vb;
    for (std::size_t idx = 0; idx < t.years(); ++idx) {
      std::optional<double> j_a, j_b;
      if (idx > 0) {
        j_a = ja[idx - 1].value;
        j_b = jb[idx - 1].value;
        if (j_a) va.push_back(*j_a);
        if (j_b) vb.push_back(*j_b);
      }
      rows.push_back({integer(t.first_year + static_cast<int>(idx)), integer(t.size(Guild::A, idx)),
                      integer(t.size(Guild::B, idx)), opt(j_a), opt(j_b)});
    }
    const std::string file = fmt::format("module_{}.csv", t.module_id);
    ctx.write_csv(file, {"year", "size_A", "size_B", "J_A", "J_B"}, rows);

    std::optional<stats::Correlation> corr;
    try {
      corr = submodule_correlation(t);
    } catch (const std::invalid_argument&) {
    }
    std::optional<double> mean_a, mean_b;
    if (!va.empty()) mean_a = stats::mean(va);
    if (!vb.empty()) mean_b = stats::mean(vb);
    const bool is_major = major.count(t.module_id) > 0;
    if (is_major && mean_a && mean_b) {
      avg_a.push_back(*mean_a);
      avg_b.push_back(*mean_b);
    }
    modules.push_back({{"module", t.module_id},
                       {"file", file},
                       {"class", is_major ? "major" : "transitory"},
                       {"first_year", t.first_year},
                       {"last_year", t.last_year},
                       {"distinct_A", t.distinct_A},
                       {"distinct_B", t.distinct_B},
                       {"mean_J_A", json_number(mean_a)},
                       {"mean_J_B", json_number(mean_b)},
                       {"submodule_correlation", correlation_json(corr)}});
  }
  json rule_json = {{"joint", rule.joint}};
  rule_json["min_A"] = rule.min_A ? json(*rule.min_A) : json(nullptr);
  rule_json["min_B"] = rule.min_B ? json(*rule.min_B) : json(nullptr);
  ctx.write_json("modules.json", {{"rule", rule_json},
                                  {"n_modules", timelines.size()},
                                  {"major", classes.major},
                                  {"transitory", classes.transitory},
                                  {"mean_jaccard_correlation", correlation_json(try_correlate(avg_a, avg_b))},
                                  {"modules", modules}});
}

void write_roles(RunContext& ctx, const TemporalNetwork& net, const Partition& p, const Args& a) {
  RoleThresholds th;
  th.d_hub = ctx.setting("roles.d_hub", a.d_hub, th.d_hub);
  th.c_connector = ctx.setting("roles.c_connector", a.c_connector, th.c_connector);
  const auto& reg = net.registry();
  const TemporalNetwork active = project_subnetwork(net, Projection::ActiveOnly);
  const TemporalNetwork passive = project_subnetwork(net, Projection::PassiveOnly);

  std::vector<Row> rows;
  auto emit = [&](const std::vector<RoleScores>& scores, const char* tag) {
    for (const RoleScores& r : scores) {
      rows.push_back({reg[r.actor].id, guild_label(reg[r.actor].guild), integer(r.year), integer(r.module),
                      integer(r.degree), integer(r.within_degree), num(r.d), num(r.c),
                      std::string(role_category_name(r.category)), r.degenerate ? "1" : "0", tag});
    }
  };

  json yearly = json::array();
  std::map<std::string, std::size_t> category_counts;
  for (const Slice& s : net.slices()) {
    const auto all = role_scores(net, p, s.year(), th);
    const auto sa = role_scores(active, p, s.year(), th);
    const auto sp = role_scores(passive, p, s.year(), th);
    emit(all, "all");
    emit(sa, "active");
    emit(sp, "passive");
    for (const RoleScores& r : all) ++category_counts[std::string(role_category_name(r.category))];
    yearly.push_back({{"year", s.year()},
                      {"d", correlation_json(subnetwork_role_correlation(sa, sp, RoleScore::D))},
                      {"c", correlation_json(subnetwork_role_correlation(sa, sp, RoleScore::C))}});
  }
  ctx.write_csv("roles.csv",
                {"actor_id", "guild", "year", "module", "degree", "within_degree", "d", "c", "category", "degenerate",
                 "subnetwork"},
                rows);

  constexpr double kBin = 0.1;
  std::vector<std::size_t> hist_d, hist_c;
  auto bump = [&](std::vector<std::size_t>& h, double v) {
    const auto b = static_cast<std::size_t>(std::floor(v / kBin + 1e-9));
    if (h.size() <= b) h.resize(b + 1, 0);
    ++h[b];
  };
  std::size_t n = 0, d_below = 0, c_within = 0;
  std::vector<Row> fl_rows;
  for (const RoleFluctuation& f : role_fluctuation(net, p, th)) {
    fl_rows.push_back({reg[f.actor].id, guild_label(reg[f.actor].guild), integer(f.years_present), opt(f.std_d),
                       opt(f.std_c)});
    if (!f.std_d || !f.std_c) continue;
    ++n;
    if (*f.std_d < 0.5) ++d_below;
    if (*f.std_c <= 0.1) ++c_within;
    bump(hist_d, *f.std_d);
    bump(hist_c, *f.std_c);
  }
  ctx.write_csv("role_fluctuation.csv", {"actor_id", "guild", "years_present", "std_d", "std_c"}, fl_rows);

  auto share = [&](std::size_t k) { return n ? json_number(static_cast<double>(k) / static_cast<double>(n)) : json(nullptr); };
  ctx.write_json("roles.json",
                 {{"thresholds", {{"d_hub", th.d_hub}, {"c_connector", th.c_connector}}},
                  {"category_counts", category_counts},
                  {"fluctuation",
                   {{"actors", n},
                    {"share_std_d_below_0_5", share(d_below)},
                    {"share_std_c_at_most_0_1", share(c_within)},
                    {"bin_width", kBin},
                    {"histogram_std_d", hist_d},
                    {"histogram_std_c", hist_c}}},
                  {"subnetwork_correlation", yearly}});
}

// ---------------------------------------------------------------- correlate

std::map<std::string, std::optional<double>> column_by_key(const io::CsvTable& t, const std::string& key,
                                                            const std::string& column) {
  const std::size_t ck = t.column(key), cv = t.column(column);
  std::map<std::string, std::optional<double>> out;
  for (const auto& row : t.rows) out[row.at(ck)] = parse_value(row.at(cv));
  return out;
}

}  // namespace

void cmd_ingest(RunContext& ctx, const Args& a) {
  const TemporalNetwork net = load_network(ctx, a);
  write_edge_list(net, ctx.output("network.csv"));
  std::vector<Row> rows;
  for (const Actor& actor : net.registry().actors()) rows.push_back({actor.id, guild_label(actor.guild), actor.label});
  ctx.write_csv("actors.csv", {"actor_id", "guild", "label"}, rows);
  std::size_t links = 0;
  for (const Slice& s : net.slices()) links += s.link_count();
  ctx.write_json("ingest.json", {{"first_year", net.first_year()},
                                 {"last_year", net.last_year()},
                                 {"actors", net.registry().size()},
                                 {"yearly_links_total", links}});
}

void cmd_describe(RunContext& ctx, const Args& a) { write_describe(ctx, load_network(ctx, a)); }

void cmd_dynamics(RunContext& ctx, const Args& a) { write_dynamics(ctx, load_network(ctx, a), a); }

void cmd_nestedness(RunContext& ctx, const Args& a) { write_nestedness(ctx, load_network(ctx, a), a); }

void cmd_modularity(RunContext& ctx, const Args& a) {
  const TemporalNetwork net = load_network(ctx, a);
  const MultilayerParams params = modularity_params(ctx, a);
  const Partition p = optimize(net, params, ctx.seed());
  write_partition(ctx, net, p);
  write_yearly_q(ctx, net, p, params.gamma);
  ctx.write_json("modularity.json", {{"params", params_json(params)},
                                     {"n_modules", p.n_modules()},
                                     {"quality", quality(net, p, params)}});
}

void cmd_consensus(RunContext& ctx, const Args& a) { write_consensus(ctx, load_network(ctx, a), a); }

void cmd_modules(RunContext& ctx, const Args& a) {
  const TemporalNetwork net = load_network(ctx, a);
  write_modules(ctx, net, load_partition(ctx, net, a.partition), a);
}

void cmd_roles(RunContext& ctx, const Args& a) {
  const TemporalNetwork net = load_network(ctx, a);
  write_roles(ctx, net, load_partition(ctx, net, a.partition), a);
}

void cmd_synth(RunContext& ctx, const Args& a) {
  if (a.years) ctx.override("synth.years", std::to_string(*a.years));
  if (a.alpha) ctx.override("synth.alpha_attach", num(*a.alpha));
  if (a.beta) ctx.override("synth.beta_detach", num(*a.beta));
  if (a.modules) ctx.override("synth.n_planted_modules", std::to_string(*a.modules));
  if (a.mixing) ctx.override("synth.mixing", num(*a.mixing));
  ctx.override("synth.seed", std::to_string(ctx.seed()));
  const SynthConfig cfg = SynthConfig::from_config(ctx.config());
  const SynthResult r = generate(cfg);
  write_edge_list(r.network, ctx.output("edges.csv"));
  write_ground_truth(r, ctx.output("ground_truth.jsonl"));
  write_planted_modules(r, ctx.output("ground_truth_modules.csv"));
  std::size_t present = 0;
  for (ActorIndex i = 0; i < r.network.registry().size(); ++i) {
    if (std::any_of(r.network.slices().begin(), r.network.slices().end(),
                    [&](const Slice& s) { return s.present(i); })) {
      ++present;
    }
  }
  ctx.write_json("synth.json", {{"first_year", r.network.first_year()},
                                {"last_year", r.network.last_year()},
                                {"actors", present},
                                {"events", r.events.size()}});
}

void cmd_pipeline(RunContext& ctx, const Args& a) {
  const TemporalNetwork net = load_network(ctx, a);
  write_describe(ctx, net);
  write_dynamics(ctx, net, a);
  const ConsensusOutput consensus = write_consensus(ctx, net, a);
  write_modules(ctx, net, consensus.partition, a);
  write_roles(ctx, net, consensus.partition, a);
  const auto reports = write_nestedness(ctx, net, a);

  std::vector<Row> rows;
  std::vector<double> nodf, z, q_nodf, q_z;
  for (const NestednessReport& r : reports) {
    const auto it = consensus.yearly.find(r.year);
    const std::optional<double> q = it == consensus.yearly.end() ? std::nullopt : it->second;
    rows.push_back({integer(r.year), opt(r.nodf), opt(r.z_score), opt(q)});
    if (q && r.nodf) {
      nodf.push_back(*r.nodf);
      q_nodf.push_back(*q);
    }
    if (q && r.z_score) {
      z.push_back(*r.z_score);
      q_z.push_back(*q);
    }
  }
  ctx.write_csv("nestedness_modularity.csv", {"year", "nodf", "z", "q"}, rows);
  ctx.write_json("pipeline.json", {{"nodf_vs_q", correlation_json(try_correlate(nodf, q_nodf))},
                                   {"z_vs_q", correlation_json(try_correlate(z, q_z))}});
}

void cmd_correlate(RunContext& ctx, const Args& a) {
  if (a.table.empty() || a.x_column.empty() || a.y_column.empty()) {
    throw UsageError("correlate: --table, --x and --y are required");
  }
  ctx.add_input(a.table);
  const io::CsvTable left = io::read_csv(a.table);
  std::vector<double> x, y;
  if (a.join_with.empty()) {
    const std::size_t cx = left.column(a.x_column), cy = left.column(a.y_column);
    for (const auto& row : left.rows) {
      const auto vx = parse_value(row.at(cx)), vy = parse_value(row.at(cy));
      if (vx && vy) {
        x.push_back(*vx);
        y.push_back(*vy);
      }
    }
  } else {
    ctx.add_input(a.join_with);
    const io::CsvTable right = io::read_csv(a.join_with);
    const auto xs = column_by_key(left, a.key, a.x_column);
    const auto ys = column_by_key(right, a.key, a.y_column);
    for (const auto& [k, vx] : xs) {
      const auto it = ys.find(k);
      if (it != ys.end() && vx && it->second) {
        x.push_back(*vx);
        y.push_back(*it->second);
      }
    }
  }
  const auto c = try_correlate(x, y);
  if (!c) throw std::invalid_argument("correlate: need at least 3 paired finite values with nonzero variance");
  ctx.write_json("correlation.json",
                 {{"x", a.x_column}, {"y", a.y_column}, {"rho", c->rho}, {"p_value", c->p_value}, {"n", c->n}});
}

}  // namespace tbnet::cli
