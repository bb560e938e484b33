#include "tbnet/synth.hpp"

#include "tbnet/io.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <optional>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <stdexcept>

namespace tbnet {

namespace {

using Rng = std::mt19937_64;

std::size_t pick_weighted(const std::vector<double>& w, double total, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, total);
  const double x = u(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc += w[i];
    if (x < acc) return i;
  }
  // Rounding can leave x == total; return the last positive weight.
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] > 0.0) return i;
  }
  return 0;
}

std::size_t pick_uniform(std::size_t n, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool bernoulli(double p, Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

std::uint64_t poisson(double mean, Rng& rng) {
  if (mean <= 0.0) return 0;
  return std::poisson_distribution<std::uint64_t>(mean)(rng);
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("synth config: ") + what);
}

struct SimActor {
  Guild guild;
  int module;
};

using Pair = std::pair<int, int>;  // (A sim index, B sim index)

// Prefix sums over nonnegative weights with O(log n) update and sampling.
class Fenwick {
 public:
  explicit Fenwick(const std::vector<double>& w) : n_(w.size()), tree_(w.size() + 1, 0.0), w_(w) {
    for (std::size_t i = 0; i < n_; ++i) {
      tree_[i + 1] += w[i];
      const std::size_t j = i + 1 + ((i + 1) & (~(i + 1) + 1));
      if (j <= n_) tree_[j] += tree_[i + 1];
    }
    for (double v : w) {
      total_ += v;
      if (v > 0.0) ++positive_;
    }
  }
  double total() const { return positive_ > 0 ? total_ : 0.0; }
  double weight(std::size_t i) const { return w_[i]; }
  void set(std::size_t i, double v) {
    const double delta = v - w_[i];
    positive_ += (v > 0.0) - (w_[i] > 0.0);
    w_[i] = v;
    total_ += delta;
    for (std::size_t j = i + 1; j <= n_; j += j & (~j + 1)) tree_[j] += delta;
  }
  /// Index i with weight(i) > 0 drawn with probability weight(i) / total.
  std::size_t sample(Rng& rng) const {
    std::uniform_real_distribution<double> u(0.0, total_);
    for (;;) {
      double x = u(rng);
      std::size_t pos = 0;
      std::size_t step = std::bit_floor(n_);
      for (; step > 0; step >>= 1) {
        if (pos + step <= n_ && tree_[pos + step] <= x) {
          pos += step;
          x -= tree_[pos];
        }
      }
      if (pos < n_ && w_[pos] > 0.0) return pos;
    }
  }

 private:
  std::size_t n_;
  std::vector<double> tree_;
  std::vector<double> w_;
  double total_ = 0.0;
  std::ptrdiff_t positive_ = 0;
};

// Incumbents of one guild with a fixed per-year weight, overall and per module.
struct Pool {
  std::vector<int> members;
  std::unordered_map<int, std::size_t> position;
  std::vector<std::vector<std::size_t>> by_module;  // positions into members
  std::vector<std::size_t> module_slot;             // index of a position within by_module
  std::vector<Fenwick> module_weights;
  std::optional<Fenwick> weights;
};

class Simulation {
 public:
  explicit Simulation(const SynthConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
    std::vector<double> w(cfg.degree_max);
    for (std::uint32_t d = 1; d <= cfg.degree_max; ++d) w[d - 1] = std::pow(static_cast<double>(d), -cfg.degree_exponent);
    degree_weights_ = std::move(w);
    degree_total_ = std::accumulate(degree_weights_.begin(), degree_weights_.end(), 0.0);
  }

  void run() {
    initial_year();
    for (int t = 1; t < cfg_.years; ++t) step(cfg_.first_year + t);
  }

  const std::vector<SimActor>& actors() const { return actors_; }
  const std::vector<SynthEvent>& events() const { return events_; }

 private:
  int new_actor(Guild g) {
    const std::size_t count = g == Guild::A ? count_A_++ : count_B_++;
    actors_.push_back({g, static_cast<int>(count % cfg_.n_planted_modules)});
    nbr_.emplace_back();
    prev_degree_.push_back(0);
    return static_cast<int>(actors_.size() - 1);
  }

  Pair key(int x, int y) const { return actors_[x].guild == Guild::A ? Pair{x, y} : Pair{y, x}; }

  LinkKind draw_kind() { return bernoulli(cfg_.passive_fraction, rng_) ? kPassiveOnly : kActiveOnly; }

  void add_link(int year, SynthEventKind kind, int target, int partner, double prob) {
    const LinkKind lk = draw_kind();
    links_[key(target, partner)] = lk;
    nbr_[target].insert(partner);
    nbr_[partner].insert(target);
    events_.push_back({year, kind, static_cast<ActorIndex>(target), static_cast<ActorIndex>(partner),
                       prev_degree_[target], prob, lk});
  }

  double attach_weight(int x) const {
    return std::pow(static_cast<double>(prev_degree_[x]), cfg_.alpha_attach) + cfg_.baseline_weight;
  }

  std::uint32_t draw_degree() {
    return static_cast<std::uint32_t>(pick_weighted(degree_weights_, degree_total_, rng_) + 1);
  }

  /// Whether a partner of `chooser` is drawn from its own module.
  bool within_module() {
    return cfg_.n_planted_modules > 1 && !bernoulli(cfg_.mixing, rng_);
  }

  Pool make_pool(Guild g, bool weighted, bool include_new = false) {
    Pool p;
    std::vector<double> w;
    for (std::size_t i = 0; i < actors_.size(); ++i) {
      if (actors_[i].guild != g || (prev_degree_[i] == 0 && !include_new)) continue;
      p.position[static_cast<int>(i)] = p.members.size();
      p.members.push_back(static_cast<int>(i));
      w.push_back(weighted ? attach_weight(static_cast<int>(i)) : 1.0);
    }
    p.by_module.resize(cfg_.n_planted_modules);
    p.module_slot.resize(p.members.size());
    for (std::size_t pos = 0; pos < p.members.size(); ++pos) {
      auto& list = p.by_module[actors_[p.members[pos]].module];
      p.module_slot[pos] = list.size();
      list.push_back(pos);
    }
    for (const auto& positions : p.by_module) {
      std::vector<double> mw;
      for (std::size_t pos : positions) mw.push_back(w[pos]);
      p.module_weights.emplace_back(mw);
    }
    p.weights.emplace(w);
    return p;
  }

  // Draws a partner for `chooser` from `pool`, skipping actors already linked
  // to it and pairs in `removed`. Returns the member and its selection
  // probability renormalized over unlinked members, or nullopt when nobody is
  // eligible.
  std::optional<std::pair<int, double>> draw_partner(int chooser, const Pool& pool, bool weighted,
                                                     const std::set<Pair>* removed) {
    if (pool.members.empty()) return std::nullopt;
    const bool restrict = within_module() && !pool.by_module[actors_[chooser].module].empty();
    const auto* positions = restrict ? &pool.by_module[actors_[chooser].module] : nullptr;
    const Fenwick& fw = restrict ? pool.module_weights[actors_[chooser].module] : *pool.weights;
    const std::size_t n = restrict ? positions->size() : pool.members.size();
    auto member_at = [&](std::size_t i) { return pool.members[restrict ? (*positions)[i] : i]; };
    auto eligible = [&](int v) {
      return !nbr_[chooser].count(v) && !(removed && removed->count(key(chooser, v)));
    };
    double excluded = 0.0;
    std::size_t n_excluded = 0;
    for (int v : nbr_[chooser]) {
      const auto it = pool.position.find(v);
      if (it == pool.position.end()) continue;
      if (restrict && actors_[v].module != actors_[chooser].module) continue;
      excluded += weighted ? fw.weight(restrict ? pool.module_slot[it->second] : it->second) : 1.0;
      ++n_excluded;
    }
    if (n_excluded >= n) return std::nullopt;
    const double total = (weighted ? fw.total() : static_cast<double>(n)) - excluded;
    for (int attempt = 0; attempt < 64; ++attempt) {
      const std::size_t i = weighted ? fw.sample(rng_) : pick_uniform(n, rng_);
      const int v = member_at(i);
      if (eligible(v)) return std::pair{v, (weighted ? fw.weight(i) : 1.0) / total};
    }
    // Few eligible members left: sample among them directly.
    std::vector<std::size_t> open;
    std::vector<double> w;
    double open_total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!eligible(member_at(i))) continue;
      open.push_back(i);
      w.push_back(weighted ? fw.weight(i) : 1.0);
      open_total += w.back();
    }
    if (open.empty() || open_total <= 0.0) return std::nullopt;
    const std::size_t k = pick_weighted(w, open_total, rng_);
    return std::pair{member_at(open[k]), w[k] / total};
  }

  void initial_year() {
    const int year = cfg_.first_year;
    std::vector<int> as, bs;
    for (std::size_t i = 0; i < cfg_.initial_A; ++i) as.push_back(new_actor(Guild::A));
    for (std::size_t i = 0; i < cfg_.initial_B; ++i) bs.push_back(new_actor(Guild::B));
    const Pool pool_B = make_pool(Guild::B, false, true);
    for (int a : as) {
      const std::uint32_t d = draw_degree();
      for (std::uint32_t j = 0; j < d; ++j) {
        const auto pick = draw_partner(a, pool_B, false, nullptr);
        if (!pick) break;
        add_link(year, SynthEventKind::Initial, pick->first, a, pick->second);
      }
    }
    const Pool pool_A = make_pool(Guild::A, false, true);
    for (int b : bs) {
      if (!nbr_[b].empty()) continue;
      const auto pick = draw_partner(b, pool_A, false, nullptr);
      if (pick) add_link(year, SynthEventKind::Initial, b, pick->first, pick->second);
    }
  }

  void step(int year) {
    for (std::size_t i = 0; i < actors_.size(); ++i) prev_degree_[i] = static_cast<std::uint32_t>(nbr_[i].size());
    const double prev_links = static_cast<double>(links_.size());
    const Guild target = cfg_.target;
    std::set<Pair> removed;

    {
      std::vector<int> cand;
      std::vector<double> w;
      for (std::size_t i = 0; i < actors_.size(); ++i) {
        if (actors_[i].guild != target || prev_degree_[i] == 0) continue;
        cand.push_back(static_cast<int>(i));
        w.push_back(std::pow(static_cast<double>(prev_degree_[i]), cfg_.beta_detach));
      }
      Fenwick fw(w);
      const std::uint64_t n_detach = poisson(cfg_.departure_prob * prev_links, rng_);
      for (std::uint64_t e = 0; e < n_detach && fw.total() > 0.0; ++e) {
        const std::size_t pick = fw.sample(rng_);
        const double prob = fw.weight(pick) / fw.total();
        const int x = cand[pick];
        auto it = nbr_[x].begin();
        std::advance(it, static_cast<std::ptrdiff_t>(pick_uniform(nbr_[x].size(), rng_)));
        const int y = *it;
        const Pair k = key(x, y);
        events_.push_back({year, SynthEventKind::Detach, static_cast<ActorIndex>(x), static_cast<ActorIndex>(y),
                           prev_degree_[x], prob, links_.at(k)});
        links_.erase(k);
        nbr_[x].erase(y);
        nbr_[y].erase(x);
        removed.insert(k);
        if (nbr_[x].empty()) fw.set(pick, 0.0);
      }
    }

    {
      Pool targets = make_pool(target, true);
      Pool partners = make_pool(other(target), false);
      const std::uint64_t n_rewire = poisson(cfg_.rewire_rate * prev_links, rng_);
      for (std::uint64_t e = 0; e < n_rewire && !targets.members.empty(); ++e) {
        const std::size_t pick = targets.weights->sample(rng_);
        const double prob = targets.weights->weight(pick) / targets.weights->total();
        const int x = targets.members[pick];
        const auto partner = draw_partner(x, partners, false, &removed);
        if (!partner) continue;
        add_link(year, SynthEventKind::AttachIncumbent, x, partner->first, prob);
      }
    }

    for (Guild g : {Guild::A, Guild::B}) {
      const double rate = g == Guild::A ? cfg_.arrival_rate_A : cfg_.arrival_rate_B;
      const std::uint64_t n_new = poisson(rate, rng_);
      Pool incumbents = make_pool(other(g), true);
      if (incumbents.members.empty()) continue;
      for (std::uint64_t e = 0; e < n_new; ++e) {
        const int s = new_actor(g);
        const std::uint32_t d = draw_degree();
        for (std::uint32_t j = 0; j < d; ++j) {
          const auto pick = draw_partner(s, incumbents, true, nullptr);
          if (!pick) break;
          add_link(year, SynthEventKind::AttachNew, pick->first, s, pick->second);
        }
      }
    }
  }

  const SynthConfig& cfg_;
  Rng rng_;
  std::vector<double> degree_weights_;
  double degree_total_ = 0.0;
  std::vector<SimActor> actors_;
  std::vector<std::set<int>> nbr_;
  std::vector<std::uint32_t> prev_degree_;
  std::map<Pair, LinkKind> links_;
  std::vector<SynthEvent> events_;
  std::size_t count_A_ = 0;
  std::size_t count_B_ = 0;
};

std::string actor_id(Guild g, std::size_t n) {
  return fmt::format("{}{:05d}", guild_label(g), n);
}

}  // namespace

const char* synth_event_name(SynthEventKind k) {
  switch (k) {
    case SynthEventKind::Initial: return "initial";
    case SynthEventKind::AttachNew: return "attach_new";
    case SynthEventKind::AttachIncumbent: return "attach_incumbent";
    case SynthEventKind::Detach: return "detach";
  }
  return "unknown";
}

void SynthConfig::validate() const {
  auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  auto unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  require(years >= 2, "years must be at least 2");
  require(initial_A >= 1 && initial_B >= 1, "initial_A and initial_B must be at least 1");
  require(finite_nonneg(arrival_rate_A) && finite_nonneg(arrival_rate_B), "arrival rates must be finite and >= 0");
  require(finite_nonneg(degree_exponent), "degree_exponent must be finite and >= 0");
  require(degree_max >= 1, "degree_max must be at least 1");
  require(finite_nonneg(alpha_attach), "alpha_attach must be finite and >= 0");
  require(finite_nonneg(beta_detach), "beta_detach must be finite and >= 0");
  require(std::isfinite(baseline_weight) && baseline_weight > 0.0, "baseline_weight must be finite and > 0");
  require(unit(departure_prob), "departure_prob must lie in [0, 1]");
  require(finite_nonneg(rewire_rate), "rewire_rate must be finite and >= 0");
  require(unit(passive_fraction), "passive_fraction must lie in [0, 1]");
  require(n_planted_modules >= 1, "n_planted_modules must be at least 1");
  require(unit(mixing), "mixing must lie in [0, 1]");
}

SynthConfig SynthConfig::from_config(const io::Config& c) {
  SynthConfig s;
  s.first_year = c.get_or("synth.first_year", s.first_year);
  s.years = c.get_or("synth.years", s.years);
  s.initial_A = static_cast<std::size_t>(c.get_or("synth.initial_A", static_cast<long long>(s.initial_A)));
  s.initial_B = static_cast<std::size_t>(c.get_or("synth.initial_B", static_cast<long long>(s.initial_B)));
  s.arrival_rate_A = c.get_or("synth.arrival_rate_A", s.arrival_rate_A);
  s.arrival_rate_B = c.get_or("synth.arrival_rate_B", s.arrival_rate_B);
  s.degree_exponent = c.get_or("synth.degree_exponent", s.degree_exponent);
  const long long dmax = c.get_or("synth.degree_max", static_cast<long long>(s.degree_max));
  require(dmax >= 1 && dmax <= 1000000, "degree_max must be at least 1");
  s.degree_max = static_cast<std::uint32_t>(dmax);
  s.alpha_attach = c.get_or("synth.alpha_attach", s.alpha_attach);
  s.beta_detach = c.get_or("synth.beta_detach", s.beta_detach);
  s.baseline_weight = c.get_or("synth.baseline_weight", s.baseline_weight);
  s.departure_prob = c.get_or("synth.departure_prob", s.departure_prob);
  s.rewire_rate = c.get_or("synth.rewire_rate", s.rewire_rate);
  s.passive_fraction = c.get_or("synth.passive_fraction", s.passive_fraction);
  const long long modules = c.get_or("synth.n_planted_modules", static_cast<long long>(s.n_planted_modules));
  require(modules >= 1, "n_planted_modules must be at least 1");
  s.n_planted_modules = static_cast<std::size_t>(modules);
  s.mixing = c.get_or("synth.mixing", s.mixing);
  const std::string target = c.get_or("synth.target", std::string("B"));
  if (target == "A" || target == "NAG") {
    s.target = Guild::A;
  } else if (target == "B" || target == "HS") {
    s.target = Guild::B;
  } else {
    throw std::invalid_argument("synth config: target must be A or B");
  }
  s.seed = static_cast<std::uint64_t>(c.get_or("synth.seed", static_cast<long long>(s.seed)));
  return s;
}

SynthResult generate(const SynthConfig& cfg) {
  cfg.validate();
  Simulation sim(cfg);
  sim.run();

  // Registry holds all A actors, then all B actors, each in creation order;
  // zero-padded ids keep this order under sorting by (guild, id).
  const auto& actors = sim.actors();
  std::vector<ActorIndex> index(actors.size());
  NetworkBuilder builder;
  std::size_t n_A = 0, n_B = 0;
  for (Guild g : {Guild::A, Guild::B}) {
    for (std::size_t i = 0; i < actors.size(); ++i) {
      if (actors[i].guild != g) continue;
      const std::string id = actor_id(g, g == Guild::A ? n_A++ : n_B++);
      index[i] = builder.add_actor(g, id, id);
    }
  }
  SynthResult r;
  r.planted_module.resize(actors.size());
  for (std::size_t i = 0; i < actors.size(); ++i) r.planted_module[index[i]] = actors[i].module;
  r.events = sim.events();
  for (SynthEvent& e : r.events) {
    e.target = index[e.target];
    e.partner = index[e.partner];
  }
  r.network = replay(builder.registry(), cfg.first_year, cfg.years, r.events);
  return r;
}

TemporalNetwork replay(const ActorRegistry& registry, int first_year, int years,
                       const std::vector<SynthEvent>& events) {
  NetworkBuilder builder;
  for (const Actor& a : registry.actors()) builder.add_actor(a.guild, a.id, a.label);
  std::map<std::pair<ActorIndex, ActorIndex>, LinkKind> current;
  auto flush = [&](int year) {
    builder.cover_year(year);
    for (const auto& [k, kind] : current) builder.add_link(year, k.first, k.second, kind);
  };
  std::size_t e = 0;
  for (int t = 0; t < years; ++t) {
    const int year = first_year + t;
    for (; e < events.size() && events[e].year == year; ++e) {
      const SynthEvent& ev = events[e];
      const auto k = std::minmax(ev.target, ev.partner);
      if (ev.kind == SynthEventKind::Detach) {
        current.erase(k);
      } else {
        current[k] = ev.link_kind;
      }
    }
    flush(year);
  }
  if (e != events.size()) throw std::invalid_argument("replay: events out of year order or range");
  return builder.build();
}

void write_ground_truth(const SynthResult& r, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  const auto& reg = r.network.registry();
  for (const SynthEvent& e : r.events) {
    nlohmann::json j;
    j["year"] = e.year;
    j["event"] = synth_event_name(e.kind);
    j["target"] = reg[e.target].id;
    j["target_guild"] = guild_label(reg[e.target].guild);
    j["partner"] = reg[e.partner].id;
    j["target_degree"] = e.target_degree;
    j["probability"] = e.probability;
    j["kind"] = e.link_kind.passive ? "passive" : "active";
    j["target_module"] = r.planted_module[e.target];
    j["partner_module"] = r.planted_module[e.partner];
    out << j.dump() << '\n';
  }
}

void write_planted_modules(const SynthResult& r, const std::filesystem::path& path) {
  const auto& reg = r.network.registry();
  std::vector<std::vector<std::string>> rows;
  for (ActorIndex i = 0; i < reg.size(); ++i) {
    rows.push_back({reg[i].id, guild_label(reg[i].guild), std::to_string(r.planted_module[i])});
  }
  io::write_csv(path, {"actor_id", "guild", "module"}, rows);
}

PlantedResult generate_planted(const PlantedConfig& cfg) {
  if (cfg.n_modules < 1 || cfg.per_module_A < 1 || cfg.per_module_B < 1 || cfg.slices < 1) {
    throw std::invalid_argument("planted config: sizes must be positive");
  }
  if (!(cfg.mixing >= 0.0 && cfg.mixing <= 1.0) || !(cfg.mean_degree > 0.0)) {
    throw std::invalid_argument("planted config: mixing must lie in [0, 1] and mean_degree be positive");
  }
  Rng rng(cfg.seed);
  NetworkBuilder builder;
  const std::size_t n_A = cfg.n_modules * cfg.per_module_A, n_B = cfg.n_modules * cfg.per_module_B;
  std::vector<ActorIndex> as(n_A), bs(n_B);
  for (std::size_t i = 0; i < n_A; ++i) as[i] = builder.add_actor(Guild::A, actor_id(Guild::A, i));
  for (std::size_t i = 0; i < n_B; ++i) bs[i] = builder.add_actor(Guild::B, actor_id(Guild::B, i));
  const auto links_per_slice = static_cast<std::size_t>(std::llround(cfg.mean_degree * static_cast<double>(n_A + n_B) / 2.0));
  const std::size_t cap = std::min(links_per_slice, n_A * n_B);
  for (int s = 0; s < cfg.slices; ++s) {
    const int year = cfg.first_year + s;
    builder.cover_year(year);
    std::set<std::pair<std::size_t, std::size_t>> chosen;
    for (std::size_t attempt = 0; chosen.size() < cap && attempt < 100 * cap; ++attempt) {
      const std::size_t a = pick_uniform(n_A, rng);
      const std::size_t ma = a / cfg.per_module_A;
      const bool cross = cfg.n_modules > 1 && bernoulli(cfg.mixing, rng);
      std::size_t mb = ma;
      if (cross) {
        mb = pick_uniform(cfg.n_modules - 1, rng);
        if (mb >= ma) ++mb;
      }
      const std::size_t b = mb * cfg.per_module_B + pick_uniform(cfg.per_module_B, rng);
      if (chosen.insert({a, b}).second) {
        builder.add_link(year, as[a], bs[b], bernoulli(0.5, rng) ? kActiveOnly : kPassiveOnly);
      }
    }
  }
  PlantedResult r;
  r.network = builder.build();
  std::vector<NodeKey> keys;
  std::vector<int> modules;
  for (const Slice& sl : r.network.slices()) {
    for (ActorIndex i = 0; i < r.network.registry().size(); ++i) {
      if (!sl.present(i)) continue;
      keys.push_back({i, sl.year()});
      const std::size_t pos = i < n_A ? i / cfg.per_module_A : (i - n_A) / cfg.per_module_B;
      modules.push_back(static_cast<int>(pos));
    }
  }
  r.truth = Partition(std::move(keys), std::move(modules));
  return r;
}

BinaryMatrix generate_nested(std::size_t rows, std::size_t cols, double fill, double noise, std::uint64_t seed) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("generate_nested: empty shape");
  if (!(fill >= 0.0 && fill <= 1.0) || !(noise >= 0.0 && noise <= 1.0)) {
    throw std::invalid_argument("generate_nested: fill and noise must lie in [0, 1]");
  }
  const std::size_t cells = rows * cols;
  std::vector<std::size_t> order(cells);
  std::iota(order.begin(), order.end(), 0);
  auto score = [&](std::size_t i) {
    return (static_cast<double>(i / cols) + 0.5) / static_cast<double>(rows) +
           (static_cast<double>(i % cols) + 0.5) / static_cast<double>(cols);
  };
  // Any linear extension of the cell product order yields a Ferrers shape.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return score(x) < score(y); });
  BinaryMatrix m(rows, cols);
  const auto ones = static_cast<std::size_t>(std::llround(fill * static_cast<double>(cells)));
  for (std::size_t k = 0; k < ones; ++k) m.set(order[k] / cols, order[k] % cols);
  Rng rng(seed);
  std::vector<std::size_t> cells_idx(cells);
  std::iota(cells_idx.begin(), cells_idx.end(), 0);
  std::shuffle(cells_idx.begin(), cells_idx.end(), rng);
  const auto redraw = static_cast<std::size_t>(std::llround(noise * static_cast<double>(cells)));
  for (std::size_t k = 0; k < redraw; ++k) {
    m.set(cells_idx[k] / cols, cells_idx[k] % cols, bernoulli(fill, rng));
  }
  return m;
}

}  // namespace tbnet
