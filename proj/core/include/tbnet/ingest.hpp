// Edge-list ingestion and descriptive statistics.
//
// Input rows describe a GuildA-GuildB support relation over an inclusive year
// span. The `types` field is a ';'-separated list of support tokens:
//   "3"        support type code 3 (1..10); passive when listed in passive_codes
//   "3a" "3p"  code 3 with an explicit active/passive flag
//   "active" "passive"
// A row yields one link per year in [start, end]; its LinkKind ORs the flags.

#pragma once

#include "tbnet/io.hpp"
#include "tbnet/netcore.hpp"
#include "tbnet/stats.hpp"

#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tbnet {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class InputFormat { Auto, Csv, JsonLines };

struct FormatConfig {
  InputFormat format = InputFormat::Auto;
  std::string group_column = "groupid";
  std::string state_column = "stateid";
  std::string start_column = "styear";
  std::string end_column = "endyear";
  std::string types_column = "types";
  // Optional display-name columns; ignored when missing from the file.
  std::string group_label_column = "groupname";
  std::string state_label_column = "statename";
  std::set<int> passive_codes;

  /// Reads keys from the [ingest] section, e.g. ingest.group_column.
  static FormatConfig from_config(const io::Config& cfg);
};

struct SupportType {
  int code = 0;  // 0 when the token named only the kind
  bool active = true;
};

struct EdgeRecord {
  std::string guild_a_id;
  std::string guild_b_id;
  std::string guild_a_label;
  std::string guild_b_label;
  int start_year = 0;
  int end_year = 0;
  std::vector<SupportType> support;

  LinkKind kind() const;
};

std::vector<SupportType> parse_support_tokens(const std::string& field, const FormatConfig& cfg);

std::vector<EdgeRecord> read_edge_records(const std::filesystem::path& path, const FormatConfig& cfg);

/// Actors are registered in (guild, id) order so parsing is canonical.
TemporalNetwork build_network(const std::vector<EdgeRecord>& records);

TemporalNetwork parse_edge_list(const std::filesystem::path& path, const FormatConfig& cfg = {});

/// Writes the CSV edge-list format with default column names, merging runs of
/// consecutive years with the same kind into one row.
void write_edge_list(const TemporalNetwork& net, const std::filesystem::path& path);

struct DurationStats {
  ActorIndex actor = 0;
  int duration = 0;  // years with degree >= 1
  std::uint32_t max_degree = 0;
  double mean_degree = 0.0;  // over active years
};

enum class DegreeSummary { Max, Mean };

/// One entry per actor of `guild` that is present at least once.
std::vector<DurationStats> actor_durations(const TemporalNetwork& net, Guild guild);

/// (duration, P(D >= duration)) at each distinct duration, ascending.
std::vector<std::pair<int, double>> survival_ccdf(std::vector<int> durations);

/// Pearson correlation of duration with lifetime max (or mean) yearly degree.
stats::Correlation duration_degree_correlation(const TemporalNetwork& net, Guild guild,
                                               DegreeSummary summary = DegreeSummary::Max);

struct LinkTypeFractions {
  double active_only = 0.0;
  double passive_only = 0.0;
  double both = 0.0;
};

std::optional<LinkTypeFractions> link_type_fractions(const TemporalNetwork& net, int year);

struct YearSummary {
  int year = 0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::size_t links = 0;
  std::size_t components = 0;
  std::optional<double> connectance;
  std::optional<LinkTypeFractions> fractions;
};

std::vector<YearSummary> describe(const TemporalNetwork& net);

}  // namespace tbnet
