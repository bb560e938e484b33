// Per-invocation state: resolved settings, output directory bookkeeping and
// the run manifest.

#pragma once

#include "tbnet/io.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tbnet::cli {

/// Bad flag combinations detected after parsing; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string config_path;
  std::string out_dir;
  std::vector<std::string> overrides;  // "section.key=value"
};

class RunContext {
 public:
  RunContext(std::string command, const GlobalOptions& opts);

  const std::string& command() const { return command_; }
  std::uint64_t seed() const { return seed_; }
  unsigned threads() const { return threads_; }
  const std::filesystem::path& out_dir() const { return out_dir_; }
  /// Config file contents with --set overrides applied.
  const io::Config& config() const { return config_; }

  /// Flag value if given, else the config key, else `fallback`. The result is
  /// recorded in the manifest's config snapshot under `key`.
  double setting(const std::string& key, const std::optional<double>& flag, double fallback);
  long long setting(const std::string& key, const std::optional<long long>& flag, long long fallback);
  bool setting(const std::string& key, bool flag, bool fallback);
  std::string setting(const std::string& key, const std::optional<std::string>& flag, std::string fallback);

  /// Forces a config key, e.g. from a command-specific flag.
  void override(const std::string& key, const std::string& value);

  void add_input(const std::filesystem::path& path);

  /// Registers `name` as an output and returns its full path.
  std::filesystem::path output(const std::string& name);
  void write_csv(const std::string& name, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows);
  void write_json(const std::string& name, const nlohmann::json& value);

  /// manifest.json: command, config snapshot, seed, input digests, outputs
  /// with digests, tool version and wall time.
  void write_manifest() const;

 private:
  std::string command_;
  std::uint64_t seed_ = 1;
  unsigned threads_ = 0;
  std::filesystem::path out_dir_;
  io::Config config_;
  std::map<std::string, std::string> snapshot_;
  std::vector<std::filesystem::path> inputs_;
  std::vector<std::string> outputs_;
  std::chrono::steady_clock::time_point start_;
};

/// Null for missing values, the number otherwise.
nlohmann::json json_number(const std::optional<double>& v);

}  // namespace tbnet::cli
