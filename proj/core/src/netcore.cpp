#include "tbnet/netcore.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tbnet {

const char* guild_label(Guild g) { return g == Guild::A ? "NAG" : "HS"; }

ActorIndex ActorRegistry::add(Guild guild, const std::string& id, const std::string& label) {
  auto key = std::make_pair(guild, id);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const auto idx = static_cast<ActorIndex>(actors_.size());
  actors_.push_back(Actor{id, guild, label.empty() ? id : label});
  index_.emplace(std::move(key), idx);
  return idx;
}

std::optional<ActorIndex> ActorRegistry::find(Guild guild, const std::string& id) const {
  if (auto it = index_.find({guild, id}); it != index_.end()) return it->second;
  return std::nullopt;
}

Slice::Slice(int year, std::vector<Link> links, std::size_t n_actors)
    : year_(year), degree_(n_actors, 0) {
  std::sort(links.begin(), links.end(), [](const Link& x, const Link& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  for (const Link& l : links) {
    if (!l.kind.any()) throw std::invalid_argument("link without active or passive kind");
    if (l.a >= n_actors || l.b >= n_actors) throw std::out_of_range("link endpoint outside registry");
    if (!links_.empty() && links_.back().a == l.a && links_.back().b == l.b) {
      links_.back().kind = links_.back().kind | l.kind;
    } else {
      links_.push_back(l);
    }
  }
  for (const Link& l : links_) {
    ++degree_[l.a];
    ++degree_[l.b];
  }
  offsets_.assign(n_actors + 1, 0);
  for (std::size_t i = 0; i < n_actors; ++i) offsets_[i + 1] = offsets_[i] + degree_[i];
  adjacency_.resize(offsets_.back());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Link& l : links_) {
    adjacency_[fill[l.a]++] = l.b;
    adjacency_[fill[l.b]++] = l.a;
  }
  for (std::size_t i = 0; i < n_actors; ++i) {
    std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1]);
  }
}

std::uint32_t Slice::degree(ActorIndex actor) const {
  return actor < degree_.size() ? degree_[actor] : 0;
}

std::uint32_t Slice::degree(ActorIndex actor, LinkKind mask) const {
  std::uint32_t k = 0;
  for (ActorIndex nb : neighbors(actor)) {
    const auto kind = find(actor, nb);
    if (kind && kind->matches(mask)) ++k;
  }
  return k;
}

std::span<const ActorIndex> Slice::neighbors(ActorIndex actor) const {
  if (actor >= degree_.size()) return {};
  return {adjacency_.data() + offsets_[actor], adjacency_.data() + offsets_[actor + 1]};
}

std::optional<LinkKind> Slice::find(ActorIndex x, ActorIndex y) const {
  // Either endpoint order is accepted.
  for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
    auto it = std::lower_bound(links_.begin(), links_.end(), std::pair{a, b},
                               [](const Link& l, const std::pair<ActorIndex, ActorIndex>& k) {
                                 return std::tie(l.a, l.b) < std::tie(k.first, k.second);
                               });
    if (it != links_.end() && it->a == a && it->b == b) return it->kind;
  }
  return std::nullopt;
}

TemporalNetwork::TemporalNetwork(ActorRegistry registry, std::vector<Slice> slices)
    : registry_(std::move(registry)), slices_(std::move(slices)) {
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    if (i > 0 && slices_[i].year() != slices_[i - 1].year() + 1) {
      throw std::invalid_argument("slice years must be consecutive");
    }
    for (const Link& l : slices_[i].links()) {
      if (l.a >= registry_.size() || l.b >= registry_.size()) {
        throw std::out_of_range("link endpoint outside registry");
      }
      if (registry_[l.a].guild != Guild::A || registry_[l.b].guild != Guild::B) {
        throw std::invalid_argument("link does not cross guilds");
      }
    }
  }
}

int TemporalNetwork::first_year() const {
  if (slices_.empty()) throw std::out_of_range("empty network has no years");
  return slices_.front().year();
}

int TemporalNetwork::last_year() const {
  if (slices_.empty()) throw std::out_of_range("empty network has no years");
  return slices_.back().year();
}

bool TemporalNetwork::has_year(int year) const {
  return !slices_.empty() && year >= first_year() && year <= last_year();
}

std::size_t TemporalNetwork::slice_index(int year) const {
  if (!has_year(year)) throw std::out_of_range("year " + std::to_string(year) + " outside network range");
  return static_cast<std::size_t>(year - first_year());
}

const Slice& TemporalNetwork::slice(int year) const { return slices_[slice_index(year)]; }

std::vector<ActorIndex> TemporalNetwork::present_actors(int year, Guild guild) const {
  const Slice& s = slice(year);
  std::vector<ActorIndex> out;
  for (ActorIndex i = 0; i < registry_.size(); ++i) {
    if (registry_[i].guild == guild && s.present(i)) out.push_back(i);
  }
  return out;
}

ActorIndex NetworkBuilder::add_actor(Guild guild, const std::string& id, const std::string& label) {
  return registry_.add(guild, id, label);
}

void NetworkBuilder::add_link(int year, ActorIndex x, ActorIndex y, LinkKind kind) {
  if (x >= registry_.size() || y >= registry_.size()) throw std::out_of_range("unknown actor");
  if (!kind.any()) throw std::invalid_argument("link needs an active or passive kind");
  if (registry_[x].guild == registry_[y].guild) throw std::invalid_argument("link does not cross guilds");
  if (registry_[x].guild == Guild::B) std::swap(x, y);
  auto& slot = links_[year][{x, y}];
  slot = slot | kind;
  cover_year(year);
}

void NetworkBuilder::cover_year(int year) {
  min_year_ = min_year_ ? std::min(*min_year_, year) : year;
  max_year_ = max_year_ ? std::max(*max_year_, year) : year;
}

TemporalNetwork NetworkBuilder::build() const {
  std::vector<Slice> slices;
  if (min_year_) {
    for (int y = *min_year_; y <= *max_year_; ++y) {
      std::vector<Link> links;
      if (auto it = links_.find(y); it != links_.end()) {
        links.reserve(it->second.size());
        for (const auto& [pair, kind] : it->second) links.push_back({pair.first, pair.second, kind});
      }
      slices.emplace_back(y, std::move(links), registry_.size());
    }
  }
  return TemporalNetwork(registry_, std::move(slices));
}

std::uint32_t degree(const TemporalNetwork& net, ActorIndex actor, int year,
                     std::optional<LinkKind> kind_filter) {
  if (actor >= net.registry().size()) throw std::out_of_range("unknown actor");
  const Slice& s = net.slice(year);
  return kind_filter ? s.degree(actor, *kind_filter) : s.degree(actor);
}

std::optional<double> connectance(const TemporalNetwork& net, int year) {
  const Slice& s = net.slice(year);
  const auto n_a = net.present_actors(year, Guild::A).size();
  const auto n_b = net.present_actors(year, Guild::B).size();
  if (n_a == 0 || n_b == 0) return std::nullopt;
  return static_cast<double>(s.link_count()) / (static_cast<double>(n_a) * static_cast<double>(n_b));
}

std::size_t component_count(const TemporalNetwork& net, int year) {
  const Slice& s = net.slice(year);
  const std::size_t n = net.registry().size();
  std::vector<ActorIndex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](ActorIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Link& l : s.links()) parent[root(l.a)] = root(l.b);
  std::size_t count = 0;
  for (ActorIndex i = 0; i < n; ++i) {
    if (s.present(i) && root(i) == i) ++count;
  }
  return count;
}

TemporalNetwork project_subnetwork(const TemporalNetwork& net, Projection kind) {
  const LinkKind keep = kind == Projection::ActiveOnly ? kActiveOnly : kPassiveOnly;
  std::vector<Slice> slices;
  slices.reserve(net.slice_count());
  for (const Slice& s : net.slices()) {
    std::vector<Link> links;
    for (const Link& l : s.links()) {
      if (l.kind.matches(keep)) links.push_back({l.a, l.b, keep});
    }
    slices.emplace_back(s.year(), std::move(links), net.registry().size());
  }
  return TemporalNetwork(net.registry(), std::move(slices));
}

Slice aggregate_window(const TemporalNetwork& net, int center_year, int width) {
  if (width <= 0 || width % 2 == 0) throw std::invalid_argument("window width must be odd and positive");
  net.slice_index(center_year);
  const int lo = std::max(net.first_year(), center_year - width / 2);
  const int hi = std::min(net.last_year(), center_year + width / 2);
  std::vector<Link> links;
  for (int y = lo; y <= hi; ++y) {
    const auto& ls = net.slice(y).links();
    links.insert(links.end(), ls.begin(), ls.end());
  }
  return Slice(center_year, std::move(links), net.registry().size());
}

}  // namespace tbnet
