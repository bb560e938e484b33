#include "context.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>

#ifndef TBNET_VERSION
#define TBNET_VERSION "unknown"
#endif

namespace tbnet::cli {

namespace fs = std::filesystem;

RunContext::RunContext(std::string command, const GlobalOptions& opts)
    : command_(std::move(command)), threads_(opts.threads), start_(std::chrono::steady_clock::now()) {
  if (!opts.config_path.empty()) {
    config_ = io::Config::load(opts.config_path);
    inputs_.push_back(opts.config_path);
  }
  for (const std::string& kv : opts.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--set expects key=value, got '" + kv + "'");
    config_.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  snapshot_ = config_.values();

  if (opts.seed) {
    seed_ = *opts.seed;
  } else {
    seed_ = static_cast<std::uint64_t>(config_.get_or("seed", 1LL));
  }

  if (!opts.out_dir.empty()) {
    out_dir_ = opts.out_dir;
  } else {
    const char* root = std::getenv("TBNET_OUT_ROOT");
    out_dir_ = fs::path(root && *root ? root : "tbnet_out") / command_;
  }
  fs::create_directories(out_dir_);
}

double RunContext::setting(const std::string& key, const std::optional<double>& flag, double fallback) {
  const double v = flag ? *flag : config_.get_or(key, fallback);
  if (!std::isfinite(v)) throw std::invalid_argument(key + " must be finite");
  snapshot_[key] = io::format_number(v);
  return v;
}

long long RunContext::setting(const std::string& key, const std::optional<long long>& flag, long long fallback) {
  const long long v = flag ? *flag : config_.get_or(key, fallback);
  snapshot_[key] = std::to_string(v);
  return v;
}

bool RunContext::setting(const std::string& key, bool flag, bool fallback) {
  const bool v = flag || config_.get_or(key, fallback);
  snapshot_[key] = v ? "true" : "false";
  return v;
}

std::string RunContext::setting(const std::string& key, const std::optional<std::string>& flag,
                                std::string fallback) {
  std::string v = flag ? *flag : config_.get_or(key, fallback);
  snapshot_[key] = v;
  return v;
}

void RunContext::override(const std::string& key, const std::string& value) {
  config_.set(key, value);
  snapshot_[key] = value;
}

void RunContext::add_input(const fs::path& path) {
  if (std::find(inputs_.begin(), inputs_.end(), path) == inputs_.end()) inputs_.push_back(path);
}

fs::path RunContext::output(const std::string& name) {
  if (name == "manifest.json") throw std::logic_error("manifest.json is reserved");
  if (std::find(outputs_.begin(), outputs_.end(), name) == outputs_.end()) outputs_.push_back(name);
  return out_dir_ / name;
}

void RunContext::write_csv(const std::string& name, const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
  io::write_csv(output(name), header, rows);
}

void RunContext::write_json(const std::string& name, const nlohmann::json& value) {
  const fs::path path = output(name);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << value.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void RunContext::write_manifest() const {
  nlohmann::json m;
  m["command"] = command_;
  m["version"] = TBNET_VERSION;
  m["seed"] = seed_;
  m["threads"] = threads_;
  m["config"] = nlohmann::json::object();
  for (const auto& [k, v] : snapshot_) m["config"][k] = v;
  m["inputs"] = nlohmann::json::array();
  for (const fs::path& p : inputs_) {
    m["inputs"].push_back({{"path", p.string()}, {"digest", io::file_digest(p)}});
  }
  std::vector<std::string> names = outputs_;
  std::sort(names.begin(), names.end());
  m["outputs"] = nlohmann::json::array();
  for (const std::string& n : names) {
    m["outputs"].push_back({{"file", n}, {"digest", io::file_digest(out_dir_ / n)}});
  }
  const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start_;
  m["wall_time_seconds"] = wall.count();

  const fs::path path = out_dir_ / "manifest.json";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << m.dump(2) << '\n';
}

nlohmann::json json_number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

}  // namespace tbnet::cli
