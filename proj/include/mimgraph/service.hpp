#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "mimgraph/map_json.hpp"
#include "mimgraph/scene.hpp"

namespace httplib {
class Server;
}

namespace mimgraph {

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// HTTP status for a library error code.
int http_status(ErrorCode code);

/// `{code, message, detail}`.
Json error_body(std::string_view code, std::string_view message, std::string_view detail = {});

/// Glyph names, categories and marker shapes, in catalog order.
Json glyph_catalog(const CategoryTable& categories = {});

struct ServiceOptions {
  RouteOptions routing{};
  std::size_t undo_depth = 100;
};

/// Map sessions behind a transport-neutral request handler. Requests on
/// different maps run concurrently; requests on one map are serialised.
class Service {
 public:
  explicit Service(ServiceOptions options = {});

  HttpResponse handle(std::string_view method, std::string_view path,
                      const std::multimap<std::string, std::string>& query, std::string_view body);

  std::size_t session_count() const;

 private:
  struct Session {
    std::mutex mutex;
    SceneMap map;
    std::vector<SceneMap> undo;
    std::vector<SceneMap> redo;
    bool dirty = false;
  };

  HttpResponse create_map(std::string_view body);
  HttpResponse get_map(Session& s);
  HttpResponse apply_op(Session& s, std::string_view body);
  HttpResponse undo_redo(Session& s, bool undo);
  HttpResponse export_map(Session& s, const std::multimap<std::string, std::string>& query);
  std::shared_ptr<Session> find(std::string_view id) const;

  ServiceOptions options_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>, std::less<>> sessions_;
  std::uint64_t next_id_ = 1;
};

/// cpp-httplib front end with permissive CORS headers.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds (port 0 picks a free port) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Serves until `stop`; blocks.
  bool listen();
  /// Runs `listen` on a background thread.
  void start();
  void stop();

 private:
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

inline constexpr int kDefaultPort = 7071;

}  // namespace mimgraph
