#include "mimgraph/scene.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mimgraph/router.hpp"

namespace mimgraph {

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

bool unit_fraction(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

const ItemId& anchor_ref(const Anchor& a) {
  if (const auto* s = std::get_if<SpeciesAnchor>(&a)) return s->node;
  return std::get<EdgeAnchor>(a).edge;
}

const EdgeAnchor* as_edge_anchor(const Anchor& a) { return std::get_if<EdgeAnchor>(&a); }

void check_species_geometry(const SpeciesNode& node) {
  if (!finite(node.position) || !std::isfinite(node.size.width) ||
      !std::isfinite(node.size.height) || !std::isfinite(node.corner_radius)) {
    throw Error(ErrorCode::invalid_geometry, "species geometry must be finite", node.id);
  }
  if (node.size.width <= 0.0 || node.size.height <= 0.0) {
    throw Error(ErrorCode::invalid_geometry, "species size must be positive", node.id);
  }
  if (node.corner_radius < 0.0) {
    throw Error(ErrorCode::invalid_geometry, "corner radius must not be negative", node.id);
  }
}

void check_anchor_range(const Anchor& a) {
  if (const auto* s = std::get_if<SpeciesAnchor>(&a); s && !unit_fraction(s->offset)) {
    throw Error(ErrorCode::invalid_geometry, "anchor offset must be in [0, 1]", s->node);
  }
  if (const auto* e = as_edge_anchor(a); e && !unit_fraction(e->t)) {
    throw Error(ErrorCode::invalid_geometry, "anchor position must be in [0, 1]", e->edge);
  }
}

Point reference_point(const SceneMap& map, const Anchor& other) {
  if (const auto* s = std::get_if<SpeciesAnchor>(&other)) {
    const SpeciesNode* n = map.find_node(s->node);
    if (!n) throw Error(ErrorCode::unresolved_anchor, "anchor references a missing species", s->node);
    return n->center();
  }
  return anchor_point(map, other, other);
}

/// Fixes any automatic side of `edge` to the side currently in use.
void pin_sides(const SceneMap& map, InteractionEdge& edge) {
  if (auto* s = std::get_if<SpeciesAnchor>(&edge.source); s && !s->side) {
    s->side = effective_side(map, *s, edge.target);
  }
  if (auto* s = std::get_if<SpeciesAnchor>(&edge.target); s && !s->side) {
    s->side = effective_side(map, *s, edge.source);
  }
}

}  // namespace

bool is_valid_id(std::string_view id) {
  if (id.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  if (!alpha(id.front())) return false;
  return std::all_of(id.begin() + 1, id.end(), [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9') || c == '.' || c == '-';
  });
}

std::string_view species_kind_name(SpeciesKind kind) {
  switch (kind) {
    case SpeciesKind::protein: return "protein";
    case SpeciesKind::dna: return "dna";
    case SpeciesKind::complex: return "complex";
    case SpeciesKind::other: return "other";
  }
  return "";
}

std::optional<SpeciesKind> species_kind_from_name(std::string_view name) {
  for (SpeciesKind k : {SpeciesKind::protein, SpeciesKind::dna, SpeciesKind::complex, SpeciesKind::other}) {
    if (species_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view side_name(Side side) {
  switch (side) {
    case Side::north: return "N";
    case Side::east: return "E";
    case Side::south: return "S";
    case Side::west: return "W";
  }
  return "";
}

std::optional<Side> side_from_name(std::string_view name) {
  for (Side s : {Side::north, Side::east, Side::south, Side::west}) {
    if (side_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view routing_mode_name(RoutingMode mode) {
  return mode == RoutingMode::automatic ? "auto" : "manual";
}

std::optional<RoutingMode> routing_mode_from_name(std::string_view name) {
  if (name == "auto") return RoutingMode::automatic;
  if (name == "manual") return RoutingMode::manual;
  return std::nullopt;
}

Rect SpeciesNode::bounds() const {
  return {position.x, position.y, position.x + size.width, position.y + size.height};
}

Point SpeciesNode::center() const {
  return {position.x + size.width / 2.0, position.y + size.height / 2.0};
}

// SceneMap -------------------------------------------------------------------

const SpeciesNode* SceneMap::find_node(std::string_view id) const {
  const auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

const InteractionEdge* SceneMap::find_edge(std::string_view id) const {
  const auto it = edges_.find(id);
  return it == edges_.end() ? nullptr : &it->second;
}

bool SceneMap::contains(std::string_view id) const {
  return nodes_.contains(id) || edges_.contains(id);
}

void SceneMap::insert_node(SpeciesNode node) {
  if (!is_valid_id(node.id)) throw Error(ErrorCode::invalid_id, "invalid id", node.id);
  if (contains(node.id)) throw Error(ErrorCode::duplicate_id, "id already in use", node.id);
  ItemId id = node.id;
  nodes_.emplace(std::move(id), std::move(node));
}

void SceneMap::insert_edge(InteractionEdge edge) {
  if (!is_valid_id(edge.id)) throw Error(ErrorCode::invalid_id, "invalid id", edge.id);
  if (contains(edge.id)) throw Error(ErrorCode::duplicate_id, "id already in use", edge.id);
  ItemId id = edge.id;
  edges_.emplace(std::move(id), std::move(edge));
}

std::string SceneMap::next_edge_id() const {
  for (std::size_t i = 1;; ++i) {
    std::string id = "e" + std::to_string(i);
    if (!contains(id)) return id;
  }
}

const SpeciesNode& SceneMap::add_species(SpeciesNode node) {
  if (!is_valid_id(node.id)) throw Error(ErrorCode::invalid_id, "invalid id", node.id);
  if (contains(node.id)) throw Error(ErrorCode::duplicate_id, "id already in use", node.id);
  check_species_geometry(node);
  if (std::any_of(node.label.begin(), node.label.end(),
                  [](char c) { return static_cast<unsigned char>(c) < 0x20; })) {
    throw Error(ErrorCode::invalid_argument, "label contains control characters", node.id);
  }
  const ItemId id = node.id;
  insert_node(std::move(node));
  return nodes_.find(id)->second;
}

const InteractionEdge& SceneMap::add_interaction(Glyph glyph, const Anchor& source, const Anchor& target,
                                                 const RouteOptions& options, ItemId id) {
  if (id.empty()) id = next_edge_id();
  if (!is_valid_id(id)) throw Error(ErrorCode::invalid_id, "invalid id", id);
  if (contains(id)) throw Error(ErrorCode::duplicate_id, "id already in use", id);

  const auto* src = std::get_if<SpeciesAnchor>(&source);
  if (!src) throw Error(ErrorCode::rule_violation, "an interaction must start at a species", id);
  const auto* tgt_species = std::get_if<SpeciesAnchor>(&target);
  if (categories_.category_of(glyph) == Category::reaction && !tgt_species) {
    throw Error(ErrorCode::rule_violation, "a reaction must end at a species", id);
  }
  for (const Anchor* a : {&source, &target}) {
    const ItemId& ref = anchor_ref(*a);
    const bool ok = std::holds_alternative<SpeciesAnchor>(*a) ? nodes_.contains(ref) : edges_.contains(ref);
    if (!ok) throw Error(ErrorCode::unresolved_anchor, "anchor references a missing item", ref);
    check_anchor_range(*a);
  }
  if (tgt_species && tgt_species->node == src->node) {
    throw Error(ErrorCode::rule_violation, "an interaction may not join a species to itself", id);
  }

  const RouteResult routed = route(*this, source, target, options);
  insert_edge(InteractionEdge{id, glyph, source, target, routed.waypoints, RoutingMode::automatic});
  return edges_.find(id)->second;
}

void SceneMap::apply_updates(const std::vector<ItemId>& order, std::set<ItemId> pending,
                             const RouteOptions& options, UpdateReport& report,
                             BatchRouteReport* failures) {
  for (const ItemId& id : order) {
    InteractionEdge& edge = edges_.find(id)->second;
    if (edge.mode == RoutingMode::manual) {
      const auto [start, end] = terminal_points(*this, edge);
      Polyline stretched = stretch_endpoints(edge.waypoints, start, end);
      if (stretched != edge.waypoints) {
        edge.waypoints = std::move(stretched);
        report.adjusted.push_back(id);
      }
      pending.erase(id);
      continue;
    }
    RouteOptions opts = options;
    opts.ignore_edges.insert(pending.begin(), pending.end());
    if (failures) {
      try {
        edge.waypoints = route(*this, edge.source, edge.target, opts).waypoints;
        failures->routed.push_back(id);
      } catch (const Error& e) {
        failures->failed.emplace_back(id, e.what());
      }
    } else {
      edge.waypoints = route(*this, edge.source, edge.target, opts).waypoints;
    }
    report.rerouted.push_back(id);
    pending.erase(id);
  }
}

UpdateReport SceneMap::move_species(std::string_view id, Point position, const RouteOptions& options) {
  const SpeciesNode* node = find_node(id);
  if (!node) throw Error(ErrorCode::unknown_id, "no such species", std::string(id));
  if (!finite(position)) throw Error(ErrorCode::invalid_geometry, "position must be finite", std::string(id));

  SceneMap next = *this;
  const std::vector<ItemId> order = dependency_order(*this, edges_attached_to(*this, id));
  for (const ItemId& e : order) {
    InteractionEdge& edge = next.edges_.find(e)->second;
    if (edge.mode == RoutingMode::manual) pin_sides(*this, edge);
  }
  next.nodes_.find(id)->second.position = position;

  UpdateReport report;
  next.apply_updates(order, {order.begin(), order.end()}, options, report);
  *this = std::move(next);
  return report;
}

UpdateReport SceneMap::set_manual_waypoints(std::string_view edge_id, std::span<const Point> waypoints,
                                            const RouteOptions& options) {
  const InteractionEdge* current = find_edge(edge_id);
  if (!current) throw Error(ErrorCode::unknown_id, "no such interaction", std::string(edge_id));
  const std::string id(edge_id);
  if (waypoints.size() < 2) throw Error(ErrorCode::invalid_geometry, "a polyline needs two points", id);
  if (!std::all_of(waypoints.begin(), waypoints.end(), finite)) {
    throw Error(ErrorCode::invalid_geometry, "waypoints must be finite", id);
  }
  if (!is_orthogonal(waypoints)) throw Error(ErrorCode::non_orthogonal, "segments must be axis-aligned", id);
  Polyline simplified = simplify(waypoints);
  if (simplified.size() < 2) throw Error(ErrorCode::invalid_geometry, "polyline has zero length", id);

  const auto [start, end] = terminal_points(*this, *current);
  if (!same_point(simplified.front(), start) || !same_point(simplified.back(), end)) {
    throw Error(ErrorCode::endpoint_mismatch, "polyline must start and end at the anchor points", id);
  }

  SceneMap next = *this;
  std::vector<ItemId> order = dependency_order(*this, {id});
  order.erase(order.begin());
  for (const ItemId& e : order) {
    InteractionEdge& dep = next.edges_.find(e)->second;
    if (dep.mode == RoutingMode::manual) pin_sides(*this, dep);
  }
  InteractionEdge& edge = next.edges_.find(id)->second;
  pin_sides(*this, edge);
  simplified.front() = start;
  simplified.back() = end;
  edge.waypoints = std::move(simplified);
  edge.mode = RoutingMode::manual;

  UpdateReport report;
  next.apply_updates(order, {order.begin(), order.end()}, options, report);
  *this = std::move(next);
  return report;
}

std::vector<ItemId> SceneMap::remove_item(std::string_view id) {
  std::vector<ItemId> removed;
  std::vector<ItemId> edges;
  if (nodes_.contains(id)) {
    removed.emplace_back(id);
    edges = dependency_order(*this, edges_attached_to(*this, id));
  } else if (edges_.contains(id)) {
    edges = dependency_order(*this, {std::string(id)});
  } else {
    throw Error(ErrorCode::unknown_id, "no such item", std::string(id));
  }
  removed.insert(removed.end(), edges.begin(), edges.end());
  if (const auto it = nodes_.find(id); it != nodes_.end()) nodes_.erase(it);
  for (const ItemId& e : edges) edges_.erase(edges_.find(e));
  return removed;
}

BatchRouteReport SceneMap::reroute_all(const RouteOptions& options) {
  std::vector<ItemId> all;
  std::vector<ItemId> automatic;
  for (const auto& [id, edge] : edges_) {
    all.push_back(id);
    if (edge.mode == RoutingMode::automatic) automatic.push_back(id);
  }
  const std::vector<ItemId> order = dependency_order(*this, all);
  const std::vector<ItemId> pending = dependency_order(*this, automatic);

  SceneMap next = *this;
  UpdateReport ignored;
  BatchRouteReport report;
  next.apply_updates(order, {pending.begin(), pending.end()}, options, ignored, &report);
  *this = std::move(next);
  return report;
}

bool operator==(const SceneMap& a, const SceneMap& b) {
  return a.nodes_ == b.nodes_ && a.edges_ == b.edges_ && a.meta_ == b.meta_ &&
         a.categories_ == b.categories_;
}

// Free functions ---------------------------------------------------------------

Side effective_side(const SceneMap& map, const SpeciesAnchor& anchor, const Anchor& other) {
  if (anchor.side) return *anchor.side;
  const SpeciesNode* node = map.find_node(anchor.node);
  if (!node) throw Error(ErrorCode::unresolved_anchor, "anchor references a missing species", anchor.node);
  const Point c = node->center();
  const Point ref = reference_point(map, other);
  const double dx = ref.x - c.x;
  const double dy = ref.y - c.y;
  if (std::abs(dx) * node->size.height >= std::abs(dy) * node->size.width) {
    return dx >= 0.0 ? Side::east : Side::west;
  }
  return dy > 0.0 ? Side::south : Side::north;
}

Point anchor_point(const SceneMap& map, const Anchor& anchor, const Anchor& other) {
  if (const auto* e = as_edge_anchor(anchor)) {
    const InteractionEdge* base = map.find_edge(e->edge);
    if (!base || base->waypoints.empty()) {
      throw Error(ErrorCode::unresolved_anchor, "anchor references a missing interaction", e->edge);
    }
    return point_along(base->waypoints, e->t);
  }
  const auto& s = std::get<SpeciesAnchor>(anchor);
  const SpeciesNode* node = map.find_node(s.node);
  if (!node) throw Error(ErrorCode::unresolved_anchor, "anchor references a missing species", s.node);
  const Rect r = node->bounds();
  switch (effective_side(map, s, other)) {
    case Side::north: return {r.left + s.offset * node->size.width, r.top};
    case Side::south: return {r.left + s.offset * node->size.width, r.bottom};
    case Side::east: return {r.right, r.top + s.offset * node->size.height};
    case Side::west: return {r.left, r.top + s.offset * node->size.height};
  }
  return {};
}

std::pair<Point, Point> terminal_points(const SceneMap& map, const InteractionEdge& edge) {
  return {anchor_point(map, edge.source, edge.target), anchor_point(map, edge.target, edge.source)};
}

std::vector<ItemId> edges_attached_to(const SceneMap& map, std::string_view id) {
  std::vector<ItemId> out;
  for (const auto& [eid, edge] : map.edges()) {
    if (anchor_ref(edge.source) == id || anchor_ref(edge.target) == id) out.push_back(eid);
  }
  return out;
}

std::vector<ItemId> dependency_order(const SceneMap& map, const std::vector<ItemId>& seeds) {
  // Dependents of each edge: the edges anchored on it.
  std::map<ItemId, std::vector<ItemId>, std::less<>> dependents;
  for (const auto& [id, edge] : map.edges()) {
    for (const Anchor* a : {&edge.source, &edge.target}) {
      if (const auto* e = as_edge_anchor(*a)) dependents[e->edge].push_back(id);
    }
  }

  std::set<ItemId> closure;
  std::vector<ItemId> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    ItemId id = std::move(stack.back());
    stack.pop_back();
    if (!map.find_edge(id) || !closure.insert(id).second) continue;
    if (const auto it = dependents.find(id); it != dependents.end()) {
      stack.insert(stack.end(), it->second.begin(), it->second.end());
    }
  }

  std::map<ItemId, int, std::less<>> indegree;
  for (const ItemId& id : closure) {
    const InteractionEdge& edge = *map.find_edge(id);
    int deps = 0;
    for (const Anchor* a : {&edge.source, &edge.target}) {
      if (const auto* e = as_edge_anchor(*a); e && closure.contains(e->edge)) ++deps;
    }
    indegree[id] = deps;
  }
  std::set<ItemId> ready;
  for (const auto& [id, deg] : indegree) {
    if (deg == 0) ready.insert(id);
  }
  std::vector<ItemId> order;
  while (!ready.empty()) {
    ItemId id = *ready.begin();
    ready.erase(ready.begin());
    if (const auto it = dependents.find(id); it != dependents.end()) {
      for (const ItemId& d : it->second) {
        if (closure.contains(d) && --indegree[d] == 0) ready.insert(d);
      }
    }
    order.push_back(std::move(id));
  }
  // Members of a cycle never become ready; keep them, in id order.
  for (const auto& [id, deg] : indegree) {
    if (deg > 0) order.push_back(id);
  }
  return order;
}

Polyline stretch_endpoints(std::span<const Point> points, Point new_start, Point new_end) {
  if (same_point(new_start, new_end)) {
    throw Error(ErrorCode::degenerate_terminals, "interaction end points coincide");
  }
  Polyline p = simplify(points);
  if (p.size() < 2) p = {new_start, new_end};
  const bool first_horizontal = nearly_equal(p[0].y, p[1].y);
  const std::size_t n = p.size();

  if (n == 2) {
    if (first_horizontal ? nearly_equal(new_start.y, new_end.y) : nearly_equal(new_start.x, new_end.x)) {
      return {new_start, new_end};
    }
    Polyline jog;
    if (first_horizontal) {
      const double mx = (new_start.x + new_end.x) / 2.0;
      jog = {new_start, {mx, new_start.y}, {mx, new_end.y}, new_end};
    } else {
      const double my = (new_start.y + new_end.y) / 2.0;
      jog = {new_start, {new_start.x, my}, {new_end.x, my}, new_end};
    }
    return simplify(jog);
  }

  const bool last_horizontal = nearly_equal(p[n - 2].y, p[n - 1].y);
  p.front() = new_start;
  if (first_horizontal) p[1].y = new_start.y; else p[1].x = new_start.x;
  p.back() = new_end;
  if (last_horizontal) p[n - 2].y = new_end.y; else p[n - 2].x = new_end.x;
  return simplify(p);
}

std::vector<Violation> validate(const SceneMap& map, const ValidateOptions& options) {
  std::vector<Violation> out;
  auto report = [&](ErrorCode rule, const ItemId& id, std::string message) {
    out.push_back(Violation{rule, id, std::move(message)});
  };

  for (const auto& [id, node] : map.nodes()) {
    if (!is_valid_id(id)) report(ErrorCode::invalid_id, id, "invalid id");
    try {
      check_species_geometry(node);
    } catch (const Error& e) {
      report(e.code(), id, e.what());
    }
  }

  for (const auto& [id, edge] : map.edges()) {
    if (!is_valid_id(id)) report(ErrorCode::invalid_id, id, "invalid id");
    if (map.find_node(id)) report(ErrorCode::duplicate_id, id, "id used by both a species and an interaction");

    bool resolved = true;
    for (const Anchor* a : {&edge.source, &edge.target}) {
      const ItemId& ref = anchor_ref(*a);
      const bool ok = std::holds_alternative<SpeciesAnchor>(*a) ? map.find_node(ref) != nullptr
                                                                 : map.find_edge(ref) != nullptr;
      if (!ok) {
        report(ErrorCode::unresolved_anchor, id, "anchor references missing item '" + ref + "'");
        resolved = false;
      }
      try {
        check_anchor_range(*a);
      } catch (const Error& e) {
        report(e.code(), id, e.what());
        resolved = false;
      }
    }

    const auto* src = std::get_if<SpeciesAnchor>(&edge.source);
    const auto* tgt = std::get_if<SpeciesAnchor>(&edge.target);
    if (!src) report(ErrorCode::rule_violation, id, "an interaction must start at a species");
    if (map.category_of(edge) == Category::reaction && !tgt) {
      report(ErrorCode::rule_violation, id, "a reaction must end at a species");
    }
    if (src && tgt && src->node == tgt->node) {
      report(ErrorCode::rule_violation, id, "an interaction may not join a species to itself");
    }

    if (edge.mode == RoutingMode::automatic && !options.auto_waypoints) continue;
    const Polyline& w = edge.waypoints;
    if (w.size() < 2) {
      report(ErrorCode::invalid_geometry, id, "a polyline needs two points");
      continue;
    }
    if (!std::all_of(w.begin(), w.end(), finite)) {
      report(ErrorCode::invalid_geometry, id, "waypoints must be finite");
      continue;
    }
    if (!is_orthogonal(w)) {
      report(ErrorCode::non_orthogonal, id, "segments must be axis-aligned");
      continue;
    }
    if (has_zero_length_segment(w)) {
      report(ErrorCode::invalid_geometry, id, "zero-length segment");
      continue;
    }
    if (!resolved) continue;
    try {
      const auto [start, end] = terminal_points(map, edge);
      if (!same_point(w.front(), start) || !same_point(w.back(), end)) {
        report(ErrorCode::endpoint_mismatch, id, "polyline does not end at its anchors");
      }
    } catch (const Error& e) {
      report(e.code(), id, e.what());
    }
  }

  // Cycles in the edge-on-edge attachment graph (Tarjan).
  const auto& edges = map.edges();
  std::map<ItemId, int, std::less<>> index;
  std::map<ItemId, int, std::less<>> low;
  std::set<ItemId> on_stack;
  std::vector<ItemId> stack;
  int counter = 0;
  auto base_of = [&](const InteractionEdge& e) -> std::vector<ItemId> {
    std::vector<ItemId> out_edges;
    for (const Anchor* a : {&e.source, &e.target}) {
      if (const auto* ea = as_edge_anchor(*a); ea && edges.contains(ea->edge)) out_edges.push_back(ea->edge);
    }
    return out_edges;
  };
  std::function<void(const ItemId&)> strongconnect = [&](const ItemId& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    for (const ItemId& w : base_of(edges.find(v)->second)) {
      if (!index.contains(w)) {
        strongconnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack.contains(w)) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] != index[v]) return;
    std::vector<ItemId> component;
    for (;;) {
      ItemId w = stack.back();
      stack.pop_back();
      on_stack.erase(w);
      component.push_back(w);
      if (w == v) break;
    }
    const auto self = base_of(edges.find(v)->second);
    const bool cyclic = component.size() > 1 || std::find(self.begin(), self.end(), v) != self.end();
    if (!cyclic) return;
    std::sort(component.begin(), component.end());
    std::string members;
    for (const ItemId& m : component) members += (members.empty() ? "" : ", ") + m;
    report(ErrorCode::contingency_cycle, component.front(), "attachment cycle: " + members);
  };
  for (const auto& [id, edge] : edges) {
    if (!index.contains(id)) strongconnect(id);
  }
  return out;
}

}  // namespace mimgraph
