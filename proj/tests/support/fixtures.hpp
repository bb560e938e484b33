// Small hand-built networks and filesystem helpers shared by the tests.

#pragma once

#include "tbnet/netcore.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace tbnet::testing {

struct LinkSpec {
  int year;
  std::string a;  // GuildA id
  std::string b;  // GuildB id
  LinkKind kind = kActiveOnly;
};

/// Actors are registered in (guild, id) order, as the edge-list parser does.
TemporalNetwork make_network(const std::vector<LinkSpec>& links);

/// Two disjoint complete bipartite K(2,2) blocks in one year:
/// {a0,a1} x {b0,b1} and {a2,a3} x {b2,b3}.
TemporalNetwork two_k22(int year = 2000);

/// Fresh empty directory under the system temp dir; removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& text);

}  // namespace tbnet::testing
