// Small file-format helpers: CSV reading/writing (comma, header row, LF) and
// the key=value configuration file with [section] headers.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tbnet::io {

/// Sentinel written for undefined numeric values.
inline constexpr std::string_view kNoValue = "NA";

/// Splits one CSV record. Double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv_line(std::string_view line);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// 1-based file line of each row, for error messages.
  std::vector<std::size_t> line_numbers;

  /// Column position by name; throws std::runtime_error if absent.
  std::size_t column(std::string_view name) const;
  std::optional<std::size_t> find_column(std::string_view name) const;
};

/// Reads a whole CSV file. Blank lines are skipped; CRLF is accepted.
CsvTable read_csv(const std::filesystem::path& path);
CsvTable parse_csv(std::istream& in);

/// Quotes a field when it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

/// Shortest round-trip decimal representation; NaN/inf become kNoValue.
std::string format_number(double v);
std::string format_optional(const std::optional<double>& v);

/// Writes rows with LF line endings; throws on I/O failure.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Plain-text key=value configuration with optional [section] headers.
/// Keys are addressed as "section.key"; keys before any header have no prefix.
class Config {
 public:
  Config() = default;
  static Config load(const std::filesystem::path& path);
  static Config parse(std::istream& in);

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool contains(const std::string& key) const { return values_.count(key) > 0; }
  std::optional<std::string> get(const std::string& key) const;

  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_or(const std::string& key, double fallback) const;
  long long get_or(const std::string& key, long long fallback) const;
  int get_or(const std::string& key, int fallback) const;
  bool get_or(const std::string& key, bool fallback) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// 64-bit FNV-1a digest of a file's bytes, as 16 hex digits.
std::string file_digest(const std::filesystem::path& path);

}  // namespace tbnet::io
