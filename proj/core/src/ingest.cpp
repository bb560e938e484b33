#include "tbnet/ingest.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace tbnet {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

int parse_year(const std::string& text, const char* what) {
  std::size_t pos = 0;
  int y = 0;
  try {
    y = std::stoi(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("invalid ") + what + " '" + text + "'");
  }
  if (pos != text.size()) throw std::invalid_argument(std::string("invalid ") + what + " '" + text + "'");
  return y;
}

SupportType parse_token(std::string tok, const FormatConfig& cfg) {
  std::transform(tok.begin(), tok.end(), tok.begin(), [](unsigned char c) { return std::tolower(c); });
  if (tok == "active") return {0, true};
  if (tok == "passive") return {0, false};
  std::optional<bool> flag;
  if (!tok.empty() && (tok.back() == 'a' || tok.back() == 'p')) {
    flag = tok.back() == 'a';
    tok.pop_back();
  }
  std::size_t pos = 0;
  int code = 0;
  try {
    code = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (tok.empty() || pos != tok.size()) throw std::invalid_argument("invalid support token");
  if (code < 1 || code > 10) throw std::invalid_argument("support code outside 1..10");
  return {code, flag.value_or(cfg.passive_codes.count(code) == 0)};
}

void validate(const EdgeRecord& r) {
  if (r.guild_a_id.empty() || r.guild_b_id.empty()) throw std::invalid_argument("empty actor id");
  if (r.start_year > r.end_year) throw std::invalid_argument("start year after end year");
  if (r.support.empty()) throw std::invalid_argument("no support types");
}

std::vector<EdgeRecord> read_csv_records(const std::filesystem::path& path, const FormatConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  io::CsvTable table;
  try {
    table = io::parse_csv(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  std::vector<EdgeRecord> out;
  if (table.header.empty()) return out;
  const auto col = [&](const std::string& name) {
    auto c = table.find_column(name);
    if (!c) throw ParseError(path.string(), 1, "missing column '" + name + "'");
    return *c;
  };
  const auto ga = col(cfg.group_column);
  const auto gb = col(cfg.state_column);
  const auto st = col(cfg.start_column);
  const auto en = col(cfg.end_column);
  const auto ty = col(cfg.types_column);
  const auto la = table.find_column(cfg.group_label_column);
  const auto lb = table.find_column(cfg.state_label_column);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    try {
      EdgeRecord r;
      r.guild_a_id = trim(row[ga]);
      r.guild_b_id = trim(row[gb]);
      r.guild_a_label = la ? trim(row[*la]) : std::string{};
      r.guild_b_label = lb ? trim(row[*lb]) : std::string{};
      r.start_year = parse_year(trim(row[st]), "start year");
      r.end_year = parse_year(trim(row[en]), "end year");
      r.support = parse_support_tokens(row[ty], cfg);
      validate(r);
      out.push_back(std::move(r));
    } catch (const std::invalid_argument& e) {
      throw ParseError(path.string(), table.line_numbers[i], e.what());
    }
  }
  return out;
}

std::string json_field(const nlohmann::json& obj, const std::string& key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw std::invalid_argument("missing field '" + key + "'");
  if (it->is_string()) return trim(it->get<std::string>());
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  throw std::invalid_argument("field '" + key + "' must be a string or integer");
}

std::vector<EdgeRecord> read_jsonl_records(const std::filesystem::path& path, const FormatConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<EdgeRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    try {
      const auto obj = nlohmann::json::parse(line);
      if (!obj.is_object()) throw std::invalid_argument("expected a JSON object");
      EdgeRecord r;
      r.guild_a_id = json_field(obj, cfg.group_column);
      r.guild_b_id = json_field(obj, cfg.state_column);
      if (obj.contains(cfg.group_label_column)) r.guild_a_label = json_field(obj, cfg.group_label_column);
      if (obj.contains(cfg.state_label_column)) r.guild_b_label = json_field(obj, cfg.state_label_column);
      r.start_year = parse_year(json_field(obj, cfg.start_column), "start year");
      r.end_year = parse_year(json_field(obj, cfg.end_column), "end year");
      const auto types = obj.find(cfg.types_column);
      if (types == obj.end()) throw std::invalid_argument("missing field '" + cfg.types_column + "'");
      if (types->is_array()) {
        for (const auto& t : *types) {
          const std::string tok = t.is_number_integer() ? std::to_string(t.get<int>()) : t.get<std::string>();
          r.support.push_back(parse_token(trim(tok), cfg));
        }
      } else if (types->is_number_integer()) {
        r.support.push_back(parse_token(std::to_string(types->get<int>()), cfg));
      } else {
        r.support = parse_support_tokens(types->get<std::string>(), cfg);
      }
      validate(r);
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path.string(), lineno, e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(path.string(), lineno, e.what());
    }
  }
  return out;
}

}  // namespace

FormatConfig FormatConfig::from_config(const io::Config& cfg) {
  FormatConfig f;
  const std::string fmt = cfg.get_or("ingest.format", std::string("auto"));
  if (fmt == "csv") {
    f.format = InputFormat::Csv;
  } else if (fmt == "jsonl") {
    f.format = InputFormat::JsonLines;
  } else if (fmt != "auto") {
    throw std::runtime_error("ingest.format must be auto, csv or jsonl");
  }
  f.group_column = cfg.get_or("ingest.group_column", f.group_column);
  f.state_column = cfg.get_or("ingest.state_column", f.state_column);
  f.start_column = cfg.get_or("ingest.start_column", f.start_column);
  f.end_column = cfg.get_or("ingest.end_column", f.end_column);
  f.types_column = cfg.get_or("ingest.types_column", f.types_column);
  f.group_label_column = cfg.get_or("ingest.group_label_column", f.group_label_column);
  f.state_label_column = cfg.get_or("ingest.state_label_column", f.state_label_column);
  if (auto codes = cfg.get("ingest.passive_codes")) {
    std::string tok;
    std::stringstream ss(*codes);
    while (std::getline(ss, tok, ',')) {
      tok = trim(tok);
      if (!tok.empty()) f.passive_codes.insert(std::stoi(tok));
    }
  }
  return f;
}

LinkKind EdgeRecord::kind() const {
  LinkKind k;
  for (const auto& s : support) k = k | (s.active ? kActiveOnly : kPassiveOnly);
  return k;
}

std::vector<SupportType> parse_support_tokens(const std::string& field, const FormatConfig& cfg) {
  std::vector<SupportType> out;
  std::string tok;
  std::stringstream ss(field);
  while (std::getline(ss, tok, ';')) {
    tok = trim(tok);
    if (!tok.empty()) out.push_back(parse_token(tok, cfg));
  }
  return out;
}

std::vector<EdgeRecord> read_edge_records(const std::filesystem::path& path, const FormatConfig& cfg) {
  InputFormat fmt = cfg.format;
  if (fmt == InputFormat::Auto) {
    const auto ext = path.extension().string();
    fmt = (ext == ".jsonl" || ext == ".json" || ext == ".ndjson") ? InputFormat::JsonLines : InputFormat::Csv;
  }
  return fmt == InputFormat::Csv ? read_csv_records(path, cfg) : read_jsonl_records(path, cfg);
}

TemporalNetwork build_network(const std::vector<EdgeRecord>& records) {
  std::map<std::pair<Guild, std::string>, std::string> actors;
  for (const auto& r : records) {
    auto& la = actors[{Guild::A, r.guild_a_id}];
    if (la.empty()) la = r.guild_a_label;
    auto& lb = actors[{Guild::B, r.guild_b_id}];
    if (lb.empty()) lb = r.guild_b_label;
  }
  NetworkBuilder b;
  for (const auto& [key, label] : actors) b.add_actor(key.first, key.second, label);
  for (const auto& r : records) {
    const auto a = *b.registry().find(Guild::A, r.guild_a_id);
    const auto h = *b.registry().find(Guild::B, r.guild_b_id);
    const LinkKind kind = r.kind();
    for (int y = r.start_year; y <= r.end_year; ++y) b.add_link(y, a, h, kind);
  }
  return b.build();
}

TemporalNetwork parse_edge_list(const std::filesystem::path& path, const FormatConfig& cfg) {
  return build_network(read_edge_records(path, cfg));
}

void write_edge_list(const TemporalNetwork& net, const std::filesystem::path& path) {
  // (a, b) -> year -> kind, so runs can be merged per pair.
  std::map<std::pair<ActorIndex, ActorIndex>, std::vector<std::pair<int, LinkKind>>> history;
  for (const Slice& s : net.slices()) {
    for (const Link& l : s.links()) history[{l.a, l.b}].push_back({s.year(), l.kind});
  }
  const auto& reg = net.registry();
  std::vector<std::vector<std::string>> rows;
  auto kind_text = [](LinkKind k) {
    if (k.active && k.passive) return "active;passive";
    return k.active ? "active" : "passive";
  };
  for (const auto& [pair, years] : history) {
    std::size_t i = 0;
    while (i < years.size()) {
      std::size_t j = i;
      while (j + 1 < years.size() && years[j + 1].first == years[j].first + 1 &&
             years[j + 1].second == years[i].second) {
        ++j;
      }
      rows.push_back({reg[pair.first].id, reg[pair.second].id, reg[pair.first].label,
                      reg[pair.second].label, std::to_string(years[i].first),
                      std::to_string(years[j].first), kind_text(years[i].second)});
      i = j + 1;
    }
  }
  io::write_csv(path, {"groupid", "stateid", "groupname", "statename", "styear", "endyear", "types"}, rows);
}

std::vector<DurationStats> actor_durations(const TemporalNetwork& net, Guild guild) {
  std::vector<DurationStats> out;
  const auto& reg = net.registry();
  for (ActorIndex i = 0; i < reg.size(); ++i) {
    if (reg[i].guild != guild) continue;
    DurationStats d;
    d.actor = i;
    double total = 0.0;
    for (const Slice& s : net.slices()) {
      const auto k = s.degree(i);
      if (k == 0) continue;
      ++d.duration;
      d.max_degree = std::max(d.max_degree, k);
      total += k;
    }
    if (d.duration == 0) continue;
    d.mean_degree = total / d.duration;
    out.push_back(d);
  }
  return out;
}

std::vector<std::pair<int, double>> survival_ccdf(std::vector<int> durations) {
  if (durations.empty()) throw std::invalid_argument("survival_ccdf: empty duration list");
  std::sort(durations.begin(), durations.end());
  const double n = static_cast<double>(durations.size());
  std::vector<std::pair<int, double>> out;
  for (std::size_t i = 0; i < durations.size(); ++i) {
    if (durations[i] <= 0) throw std::invalid_argument("survival_ccdf: durations must be positive");
    if (i == 0 || durations[i] != durations[i - 1]) {
      out.emplace_back(durations[i], static_cast<double>(durations.size() - i) / n);
    }
  }
  return out;
}

stats::Correlation duration_degree_correlation(const TemporalNetwork& net, Guild guild,
                                               DegreeSummary summary) {
  const auto ds = actor_durations(net, guild);
  if (ds.size() < 3) throw std::invalid_argument("duration_degree_correlation: need at least 3 actors");
  std::vector<double> x, y;
  for (const auto& d : ds) {
    x.push_back(d.duration);
    y.push_back(summary == DegreeSummary::Max ? static_cast<double>(d.max_degree) : d.mean_degree);
  }
  return stats::correlate(x, y);
}

std::optional<LinkTypeFractions> link_type_fractions(const TemporalNetwork& net, int year) {
  const Slice& s = net.slice(year);
  if (s.empty()) return std::nullopt;
  std::size_t a = 0, p = 0, both = 0;
  for (const Link& l : s.links()) {
    if (l.kind.active && l.kind.passive) {
      ++both;
    } else if (l.kind.active) {
      ++a;
    } else {
      ++p;
    }
  }
  const double n = static_cast<double>(s.link_count());
  return LinkTypeFractions{a / n, p / n, both / n};
}

std::vector<YearSummary> describe(const TemporalNetwork& net) {
  std::vector<YearSummary> out;
  for (const Slice& s : net.slices()) {
    YearSummary y;
    y.year = s.year();
    y.n_a = net.present_actors(s.year(), Guild::A).size();
    y.n_b = net.present_actors(s.year(), Guild::B).size();
    y.links = s.link_count();
    y.components = component_count(net, s.year());
    y.connectance = connectance(net, s.year());
    y.fractions = link_type_fractions(net, s.year());
    out.push_back(y);
  }
  return out;
}

}  // namespace tbnet
