#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mimgraph/cost_model.hpp"
#include "mimgraph/error.hpp"
#include "mimgraph/geometry.hpp"
#include "mimgraph/glyph.hpp"

namespace mimgraph {

/// Node and edge ids share one namespace: `[A-Za-z_][A-Za-z0-9_.-]*`.
using ItemId = std::string;

bool is_valid_id(std::string_view id);

enum class SpeciesKind { protein, dna, complex, other };

std::string_view species_kind_name(SpeciesKind kind);
std::optional<SpeciesKind> species_kind_from_name(std::string_view name);

enum class Side { north, east, south, west };

/// "N", "E", "S", "W".
std::string_view side_name(Side side);
std::optional<Side> side_from_name(std::string_view name);

struct SpeciesNode {
  ItemId id;
  SpeciesKind kind = SpeciesKind::protein;
  std::string label;
  Point position;  // top-left corner
  Size size{80.0, 40.0};
  double corner_radius = 6.0;

  Rect bounds() const;
  Point center() const;

  friend bool operator==(const SpeciesNode&, const SpeciesNode&) = default;
};

/// A point on a species border. An empty `side` means "the side facing the
/// other end of the edge", re-evaluated whenever the geometry changes.
struct SpeciesAnchor {
  ItemId node;
  std::optional<Side> side;
  double offset = 0.5;

  friend bool operator==(const SpeciesAnchor&, const SpeciesAnchor&) = default;
};

/// A point at arc-length fraction `t` along another interaction's polyline.
struct EdgeAnchor {
  ItemId edge;
  double t = 0.5;

  friend bool operator==(const EdgeAnchor&, const EdgeAnchor&) = default;
};

using Anchor = std::variant<SpeciesAnchor, EdgeAnchor>;

enum class RoutingMode { automatic, manual };

/// "auto" / "manual".
std::string_view routing_mode_name(RoutingMode mode);
std::optional<RoutingMode> routing_mode_from_name(std::string_view name);

struct InteractionEdge {
  ItemId id;
  Glyph glyph = Glyph::covalent_modification;
  Anchor source;
  Anchor target;
  Polyline waypoints;
  RoutingMode mode = RoutingMode::automatic;

  friend bool operator==(const InteractionEdge&, const InteractionEdge&) = default;
};

inline constexpr std::string_view kSchemaVersion = "1";

struct MapMeta {
  std::string name;
  std::string schema_version{kSchemaVersion};
  std::string created_by;

  friend bool operator==(const MapMeta&, const MapMeta&) = default;
};

/// One broken invariant reported by `validate`.
struct Violation {
  ErrorCode rule;
  ItemId id;
  std::string message;
};

/// Edges touched by a geometry change, in the order they were updated.
struct UpdateReport {
  std::vector<ItemId> rerouted;  // auto edges re-run through the router
  std::vector<ItemId> adjusted;  // manual edges whose end segments were stretched
};

struct BatchRouteReport {
  std::vector<ItemId> routed;
  std::vector<std::pair<ItemId, std::string>> failed;
};

/// The MIM document. Every mutation either succeeds completely or throws
/// `Error` and leaves the map untouched. Not internally synchronised.
class SceneMap {
 public:
  SceneMap() = default;
  explicit SceneMap(CategoryTable categories) : categories_(categories) {}

  const std::map<ItemId, SpeciesNode, std::less<>>& nodes() const noexcept { return nodes_; }
  const std::map<ItemId, InteractionEdge, std::less<>>& edges() const noexcept { return edges_; }
  const MapMeta& meta() const noexcept { return meta_; }
  MapMeta& meta() noexcept { return meta_; }
  const CategoryTable& categories() const noexcept { return categories_; }

  const SpeciesNode* find_node(std::string_view id) const;
  const InteractionEdge* find_edge(std::string_view id) const;
  bool contains(std::string_view id) const;
  Category category_of(const InteractionEdge& edge) const { return categories_.category_of(edge.glyph); }

  /// Errors: InvalidId, DuplicateId, InvalidGeometry, InvalidArgument (label).
  const SpeciesNode& add_species(SpeciesNode node);

  /// Adds an auto-routed interaction. An empty `id` picks the next free
  /// `e<N>`. Errors: InvalidId, DuplicateId, InvalidArgument,
  /// UnresolvedAnchor, RuleViolation, RoutingFailed.
  const InteractionEdge& add_interaction(Glyph glyph, const Anchor& source, const Anchor& target,
                                         const RouteOptions& options = {}, ItemId id = {});

  /// Moves a species; attached auto edges (and edges anchored on them) are
  /// re-routed, attached manual edges keep their shape and only stretch
  /// their end segments. Errors: UnknownId, InvalidGeometry, RoutingFailed.
  UpdateReport move_species(std::string_view id, Point position, const RouteOptions& options = {});

  /// Stores a hand-drawn polyline (after simplification) and switches the
  /// edge to manual routing. Dependent edges follow. Errors: UnknownId,
  /// NonOrthogonal, InvalidGeometry, EndpointMismatch, RoutingFailed.
  UpdateReport set_manual_waypoints(std::string_view edge_id, std::span<const Point> waypoints,
                                    const RouteOptions& options = {});

  /// Removes a species or an edge together with everything anchored on it.
  /// Returns the removed ids. Errors: UnknownId.
  std::vector<ItemId> remove_item(std::string_view id);

  /// Re-routes every auto edge from scratch in dependency order. Each edge
  /// avoids only geometry that is final at that point, so a second run
  /// reproduces the first. Failures are reported, not thrown.
  BatchRouteReport reroute_all(const RouteOptions& options = {});

  /// Structural insertion for deserialisers: checks id syntax and uniqueness
  /// only. Call `validate` afterwards.
  void insert_node(SpeciesNode node);
  void insert_edge(InteractionEdge edge);

  std::string next_edge_id() const;

  friend bool operator==(const SceneMap& a, const SceneMap& b);

 private:
  /// Brings every edge of `order` up to date with the current geometry.
  /// Edges still in `pending` are not obstacles. Route failures throw,
  /// unless `failures` is given.
  void apply_updates(const std::vector<ItemId>& order, std::set<ItemId> pending,
                     const RouteOptions& options, UpdateReport& report,
                     BatchRouteReport* failures = nullptr);

  std::map<ItemId, SpeciesNode, std::less<>> nodes_;
  std::map<ItemId, InteractionEdge, std::less<>> edges_;
  MapMeta meta_;
  CategoryTable categories_;
};

struct ValidateOptions {
  /// Check the stored polylines of auto-routed edges. Off when the map is
  /// about to be re-routed anyway.
  bool auto_waypoints = true;
};

/// Empty iff every map invariant holds.
std::vector<Violation> validate(const SceneMap& map, const ValidateOptions& options = {});

/// Side actually used by a species anchor, given the opposite end.
Side effective_side(const SceneMap& map, const SpeciesAnchor& anchor, const Anchor& other);

/// Scene position of `anchor`; `other` is the opposite end of the same edge.
/// Errors: UnresolvedAnchor.
Point anchor_point(const SceneMap& map, const Anchor& anchor, const Anchor& other);

/// Anchor positions of both ends of `edge`.
std::pair<Point, Point> terminal_points(const SceneMap& map, const InteractionEdge& edge);

/// Ids of the edges whose anchors reference `id` directly (a species or an edge).
std::vector<ItemId> edges_attached_to(const SceneMap& map, std::string_view id);

/// `seeds` plus every edge transitively anchored on them, ordered so that an
/// edge always follows the edge it is anchored on (ties by id).
std::vector<ItemId> dependency_order(const SceneMap& map, const std::vector<ItemId>& seeds);

/// Moves the end points of an orthogonal polyline, stretching (never
/// rotating) the first and last segments. Inserts a jog when a single
/// segment can no longer stay straight.
Polyline stretch_endpoints(std::span<const Point> points, Point new_start, Point new_end);

}  // namespace mimgraph
