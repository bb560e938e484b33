#include "fixtures.hpp"

#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace tbnet::testing {

TemporalNetwork make_network(const std::vector<LinkSpec>& links) {
  std::set<std::pair<Guild, std::string>> actors;
  for (const LinkSpec& l : links) {
    actors.insert({Guild::A, l.a});
    actors.insert({Guild::B, l.b});
  }
  NetworkBuilder b;
  for (const auto& [g, id] : actors) b.add_actor(g, id);
  for (const LinkSpec& l : links) {
    b.add_link(l.year, *b.registry().find(Guild::A, l.a), *b.registry().find(Guild::B, l.b), l.kind);
  }
  return b.build();
}

TemporalNetwork two_k22(int year) {
  std::vector<LinkSpec> links;
  for (int block = 0; block < 2; ++block) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        links.push_back({year, "a" + std::to_string(2 * block + i), "b" + std::to_string(2 * block + j)});
      }
    }
  }
  return make_network(links);
}

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("tbnet_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + p.string());
}

}  // namespace tbnet::testing
