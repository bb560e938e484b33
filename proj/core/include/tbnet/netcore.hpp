// Core data model for temporal bipartite networks.
//
// A TemporalNetwork is a contiguous run of yearly slices over a shared actor
// registry. Actors belong to one of two guilds (GuildA, e.g. armed groups, and
// GuildB, e.g. host states) and links only ever cross guilds. Each link carries
// a LinkKind with independent active/passive flags.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tbnet {

enum class Guild : std::uint8_t { A = 0, B = 1 };

inline constexpr Guild other(Guild g) { return g == Guild::A ? Guild::B : Guild::A; }

/// Short label used in files: "NAG" for GuildA, "HS" for GuildB.
const char* guild_label(Guild g);

using ActorIndex = std::uint32_t;

struct Actor {
  std::string id;
  Guild guild = Guild::A;
  std::string label;
};

struct LinkKind {
  bool active = false;
  bool passive = false;

  bool any() const { return active || passive; }
  LinkKind operator|(LinkKind o) const { return {active || o.active, passive || o.passive}; }
  bool matches(LinkKind mask) const {
    return (mask.active && active) || (mask.passive && passive);
  }
  friend bool operator==(const LinkKind&, const LinkKind&) = default;
};

inline constexpr LinkKind kActiveOnly{true, false};
inline constexpr LinkKind kPassiveOnly{false, true};
inline constexpr LinkKind kBothKinds{true, true};

/// A link always stores the GuildA endpoint in `a` and the GuildB endpoint in `b`.
struct Link {
  ActorIndex a = 0;
  ActorIndex b = 0;
  LinkKind kind;

  friend bool operator==(const Link&, const Link&) = default;
};

/// Actors keyed by (guild, id). Ids may repeat across guilds.
class ActorRegistry {
 public:
  /// Returns the existing index when (guild, id) is already registered.
  ActorIndex add(Guild guild, const std::string& id, const std::string& label = {});
  std::optional<ActorIndex> find(Guild guild, const std::string& id) const;

  const Actor& operator[](ActorIndex i) const { return actors_.at(i); }
  std::size_t size() const { return actors_.size(); }
  bool empty() const { return actors_.empty(); }
  const std::vector<Actor>& actors() const { return actors_; }

  friend bool operator==(const ActorRegistry& x, const ActorRegistry& y) {
    return x.actors_.size() == y.actors_.size() &&
           std::equal(x.actors_.begin(), x.actors_.end(), y.actors_.begin(),
                      [](const Actor& p, const Actor& q) {
                        return p.id == q.id && p.guild == q.guild && p.label == q.label;
                      });
  }

 private:
  std::vector<Actor> actors_;
  std::map<std::pair<Guild, std::string>, ActorIndex> index_;
};

/// One year of the network. Links are sorted by (a, b) with no duplicates.
class Slice {
 public:
  Slice() = default;
  /// `links` must already be validated against the registry; duplicates are OR-merged.
  Slice(int year, std::vector<Link> links, std::size_t n_actors);

  int year() const { return year_; }
  const std::vector<Link>& links() const { return links_; }
  std::size_t link_count() const { return links_.size(); }
  bool empty() const { return links_.empty(); }

  std::uint32_t degree(ActorIndex actor) const;
  std::uint32_t degree(ActorIndex actor, LinkKind mask) const;
  bool present(ActorIndex actor) const { return degree(actor) > 0; }

  /// Partners of `actor` in this slice, ascending.
  std::span<const ActorIndex> neighbors(ActorIndex actor) const;
  std::optional<LinkKind> find(ActorIndex a, ActorIndex b) const;

  std::size_t actor_capacity() const { return degree_.size(); }

  friend bool operator==(const Slice& x, const Slice& y) {
    return x.year_ == y.year_ && x.links_ == y.links_;
  }

 private:
  int year_ = 0;
  std::vector<Link> links_;
  std::vector<std::uint32_t> degree_;
  // CSR adjacency over the full registry.
  std::vector<std::uint32_t> offsets_;
  std::vector<ActorIndex> adjacency_;
};

/// Immutable after construction; safe for concurrent reads.
class TemporalNetwork {
 public:
  TemporalNetwork() = default;
  /// `slices` must hold consecutive years.
  TemporalNetwork(ActorRegistry registry, std::vector<Slice> slices);

  const ActorRegistry& registry() const { return registry_; }
  const std::vector<Slice>& slices() const { return slices_; }
  std::size_t slice_count() const { return slices_.size(); }
  bool empty() const { return slices_.empty(); }

  int first_year() const;
  int last_year() const;
  bool has_year(int year) const;
  /// Throws std::out_of_range for years outside the range.
  const Slice& slice(int year) const;
  std::size_t slice_index(int year) const;

  /// Actors of `guild` with degree >= 1 in `year`, ascending.
  std::vector<ActorIndex> present_actors(int year, Guild guild) const;

  friend bool operator==(const TemporalNetwork&, const TemporalNetwork&) = default;

 private:
  ActorRegistry registry_;
  std::vector<Slice> slices_;
};

/// Accumulates actors and (year, a, b, kind) links, then materializes a
/// contiguous TemporalNetwork. Repeated links in one year are OR-merged.
class NetworkBuilder {
 public:
  ActorIndex add_actor(Guild guild, const std::string& id, const std::string& label = {});
  /// Endpoints may be given in either order but must be in different guilds.
  void add_link(int year, ActorIndex x, ActorIndex y, LinkKind kind);
  /// Extends the materialized year range even without links in those years.
  void cover_year(int year);

  const ActorRegistry& registry() const { return registry_; }
  TemporalNetwork build() const;

 private:
  ActorRegistry registry_;
  std::map<int, std::map<std::pair<ActorIndex, ActorIndex>, LinkKind>> links_;
  std::optional<int> min_year_, max_year_;
};

enum class Projection { ActiveOnly, PassiveOnly };

std::uint32_t degree(const TemporalNetwork& net, ActorIndex actor, int year,
                     std::optional<LinkKind> kind_filter = std::nullopt);

/// L / (n_A * n_B) over present actors; nullopt when either guild is absent.
std::optional<double> connectance(const TemporalNetwork& net, int year);

/// Connected components among present actors; 0 for an empty slice.
std::size_t component_count(const TemporalNetwork& net, int year);

/// Keeps each link that carries the requested kind. The retained link keeps
/// only that kind, so projections are idempotent.
TemporalNetwork project_subnetwork(const TemporalNetwork& net, Projection kind);

/// Union of the slices in [center - width/2, center + width/2], clipped to the
/// network's range. Kinds are OR-ed across years. The result carries `center`
/// as its year.
Slice aggregate_window(const TemporalNetwork& net, int center_year, int width = 5);

}  // namespace tbnet
