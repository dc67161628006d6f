#include "mimgraph/service.hpp"

#include <httplib.h>

#include "mimgraph/map_xml.hpp"
#include "mimgraph/sbml.hpp"
#include "mimgraph/svg.hpp"

namespace mimgraph {

namespace {

HttpResponse json_response(int status, const Json& body) {
  return {status, "application/json", body.dump()};
}

HttpResponse error_response(const Error& e) {
  return json_response(http_status(e.code()), error_body(error_code_name(e.code()), e.what(), e.detail()));
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    const auto slash = path.find('/');
    const auto part = path.substr(0, slash);
    if (!part.empty()) parts.push_back(part);
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash + 1);
  }
  return parts;
}

RouteOptions route_options(const Json& body, RouteOptions base) {
  if (!body.is_object()) return base;
  if (body.contains("grid")) {
    if (!body["grid"].is_number_integer()) throw Error(ErrorCode::invalid_argument, "field 'grid' must be an integer", "grid");
    base.grid_n = body["grid"].get<int>();
  }
  if (body.contains("mode")) {
    const std::string mode = string_field(body, "mode");
    if (mode == "exact") {
      base.mode = SearchMode::exact;
    } else if (mode == "paper") {
      base.mode = SearchMode::paper_faithful;
    } else {
      throw Error(ErrorCode::invalid_argument, "field 'mode' must be exact or paper", "mode");
    }
  }
  return base;
}

Json id_list(const std::vector<ItemId>& ids) {
  Json out = Json::array();
  for (const ItemId& id : ids) out.push_back(id);
  return out;
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
    case ErrorCode::invalid_id:
    case ErrorCode::invalid_geometry:
    case ErrorCode::non_orthogonal:
    case ErrorCode::endpoint_mismatch:
    case ErrorCode::malformed_xml:
    case ErrorCode::schema_violation:
    case ErrorCode::unsupported_version:
      return 400;
    case ErrorCode::unknown_id:
    case ErrorCode::unknown_map:
      return 404;
    case ErrorCode::duplicate_id:
    case ErrorCode::rule_violation:
    case ErrorCode::unresolved_anchor:
    case ErrorCode::contingency_cycle:
    case ErrorCode::nothing_to_undo:
      return 409;
    case ErrorCode::degenerate_terminals:
    case ErrorCode::routing_failed:
    case ErrorCode::unreachable:
    case ErrorCode::broken_chain:
    case ErrorCode::invalid_map:
      return 422;
  }
  return 500;
}

Json error_body(std::string_view code, std::string_view message, std::string_view detail) {
  return {{"code", code}, {"message", message}, {"detail", detail}};
}

Json glyph_catalog(const CategoryTable& categories) {
  Json out = Json::array();
  for (Glyph g : kAllGlyphs) {
    const MarkerShape& m = marker_for(g);
    out.push_back({{"name", glyph_name(g)},
                   {"category", category_name(categories.category_of(g))},
                   {"marker", m.shape},
                   {"both_ends", m.both_ends}});
  }
  return out;
}

Service::Service(ServiceOptions options) : options_(std::move(options)) {}

std::size_t Service::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

std::shared_ptr<Service::Session> Service::find(std::string_view id) const {
  std::shared_lock lock(sessions_mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::unknown_map, "no such map", std::string(id));
  return it->second;
}

HttpResponse Service::handle(std::string_view method, std::string_view path,
                             const std::multimap<std::string, std::string>& query, std::string_view body) {
  const auto parts = split_path(path);
  const auto not_found = [] { return json_response(404, error_body("NotFound", "no such endpoint")); };
  const auto bad_method = [] { return json_response(405, error_body("MethodNotAllowed", "method not allowed")); };
  try {
    if (method == "OPTIONS") return {204, "text/plain", ""};
    if (parts.size() == 1 && parts[0] == "healthz") {
      return method == "GET" ? json_response(200, {{"status", "ok"}}) : bad_method();
    }
    if (parts.size() == 1 && parts[0] == "glyphs") {
      return method == "GET" ? json_response(200, glyph_catalog()) : bad_method();
    }
    if (parts.empty() || parts[0] != "maps") return not_found();
    if (parts.size() == 1) return method == "POST" ? create_map(body) : bad_method();

    const auto session = find(parts[1]);
    std::lock_guard lock(session->mutex);
    if (parts.size() == 2) return method == "GET" ? get_map(*session) : bad_method();
    if (parts.size() != 3) return not_found();
    const std::string_view action = parts[2];
    if (action == "ops") return method == "POST" ? apply_op(*session, body) : bad_method();
    if (action == "undo" || action == "redo") {
      return method == "POST" ? undo_redo(*session, action == "undo") : bad_method();
    }
    if (action == "export") return method == "GET" ? export_map(*session, query) : bad_method();
    return not_found();
  } catch (const Error& e) {
    return error_response(e);
  } catch (const Json::exception& e) {
    return json_response(400, error_body(error_code_name(ErrorCode::invalid_argument), e.what()));
  }
}

HttpResponse Service::create_map(std::string_view body) {
  auto session = std::make_shared<Session>();
  if (body.find_first_not_of(" \t\r\n") != std::string_view::npos) session->map = parse_map(body);
  std::string id;
  {
    std::unique_lock lock(sessions_mutex_);
    id = "m" + std::to_string(next_id_++);
    sessions_.emplace(id, session);
  }
  return json_response(201, {{"id", id}, {"map", to_json(session->map)}});
}

HttpResponse Service::get_map(Session& s) { return json_response(200, to_json(s.map)); }

HttpResponse Service::apply_op(Session& s, std::string_view body) {
  const Json req = Json::parse(body);
  const std::string op = string_field(req, "op");
  const RouteOptions routing = route_options(req, options_.routing);

  SceneMap next = s.map;
  Json nodes = Json::array();
  Json edges = Json::array();
  std::vector<ItemId> removed;
  UpdateReport report;

  if (op == "add_species") {
    SpeciesNode n;
    n.id = string_field(req, "id");
    const std::string kind = string_field(req, "kind", "protein");
    const auto k = species_kind_from_name(kind);
    if (!k) throw Error(ErrorCode::invalid_argument, "unknown species kind '" + kind + "'", "kind");
    n.kind = *k;
    n.label = string_field(req, "label", n.id);
    n.position = {number_field(req, "x"), number_field(req, "y")};
    n.size = {number_field(req, "w", n.size.width), number_field(req, "h", n.size.height)};
    n.corner_radius = number_field(req, "r", n.corner_radius);
    nodes.push_back(to_json(next.add_species(std::move(n))));
  } else if (op == "add_interaction") {
    const std::string kind = string_field(req, "kind");
    const auto g = glyph_from_name(kind);
    if (!g) throw Error(ErrorCode::invalid_argument, "unknown interaction kind '" + kind + "'", "kind");
    if (!req.contains("from") || !req.contains("to")) {
      throw Error(ErrorCode::invalid_argument, "add_interaction needs 'from' and 'to'");
    }
    const auto& e = next.add_interaction(*g, anchor_from_json(req["from"]), anchor_from_json(req["to"]),
                                         routing, string_field(req, "id", ""));
    edges.push_back(to_json(e));
  } else if (op == "move_species") {
    const std::string id = string_field(req, "id");
    report = next.move_species(id, {number_field(req, "x"), number_field(req, "y")}, routing);
    nodes.push_back(to_json(*next.find_node(id)));
  } else if (op == "set_manual_waypoints") {
    const std::string id = string_field(req, "id");
    if (!req.contains("points")) throw Error(ErrorCode::invalid_argument, "field 'points' is required", "points");
    report = next.set_manual_waypoints(id, points_from_json(req["points"]), routing);
    edges.push_back(to_json(*next.find_edge(id)));
  } else if (op == "delete") {
    removed = next.remove_item(string_field(req, "id"));
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown op '" + op + "'", op);
  }
  for (const auto* list : {&report.rerouted, &report.adjusted}) {
    for (const ItemId& id : *list) edges.push_back(to_json(*next.find_edge(id)));
  }

  s.undo.push_back(std::move(s.map));
  if (s.undo.size() > options_.undo_depth) s.undo.erase(s.undo.begin());
  s.redo.clear();
  s.map = std::move(next);
  s.dirty = true;
  return json_response(200, {{"op", op},
                              {"nodes", std::move(nodes)},
                              {"edges", std::move(edges)},
                              {"removed", id_list(removed)},
                              {"rerouted", id_list(report.rerouted)},
                              {"adjusted", id_list(report.adjusted)}});
}

HttpResponse Service::undo_redo(Session& s, bool undo) {
  auto& from = undo ? s.undo : s.redo;
  auto& to = undo ? s.redo : s.undo;
  if (from.empty()) {
    throw Error(ErrorCode::nothing_to_undo, undo ? "nothing to undo" : "nothing to redo");
  }
  to.push_back(std::move(s.map));
  if (to.size() > options_.undo_depth) to.erase(to.begin());
  s.map = std::move(from.back());
  from.pop_back();
  s.dirty = true;
  return json_response(200, to_json(s.map));
}

HttpResponse Service::export_map(Session& s, const std::multimap<std::string, std::string>& query) {
  const auto it = query.find("format");
  const std::string format = it == query.end() ? "xml" : it->second;
  if (format == "xml") return {200, "application/xml", serialize_map(s.map)};
  if (format == "sbml") return {200, "application/sbml+xml", export_sbml(s.map)};
  if (format == "svg") return {200, "image/svg+xml", render_svg(s.map)};
  throw Error(ErrorCode::invalid_argument, "unknown export format '" + format + "'", format);
}

// HttpServer -----------------------------------------------------------------

HttpServer::HttpServer(Service& service) : server_(std::make_unique<httplib::Server>()) {
  server_->set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    const HttpResponse out = service.handle(req.method, req.path, req.params, req.body);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  server_->Get(".*", forward);
  server_->Post(".*", forward);
  server_->Options(".*", forward);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return server_->listen_after_bind(); }

void HttpServer::start() {
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
}

void HttpServer::stop() {
  server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace mimgraph
