#include "vison/service.hpp"

#include <atomic>
#include <charconv>
#include <csignal>
#include <ctime>
#include <stdexcept>
#include <thread>

#include <pthread.h>

#include "httplib.h"
#include "vison/catalog.hpp"
#include "vison/consistency.hpp"
#include "vison/discovery.hpp"
#include "vison/metrics.hpp"
#include "vison/query.hpp"
#include "vison/snapshot.hpp"

namespace vison {

using nlohmann::json;

SnapshotStore::SnapshotStore(Ontology ontology)
    : current_(std::make_shared<const Ontology>(std::move(ontology))) {}

std::shared_ptr<const Ontology> SnapshotStore::current() const {
  std::lock_guard lock(mutex_);
  return current_;
}

void SnapshotStore::replace(Ontology ontology) {
  auto next = std::make_shared<const Ontology>(std::move(ontology));
  std::lock_guard lock(mutex_);
  current_ = std::move(next);
}

HttpResponse error_response(int status, std::string_view code, const std::string& message) {
  return {status, {{"error", message}, {"code", code}}};
}

namespace {

HttpResponse query_error(const QueryError& e) {
  HttpResponse response = error_response(400, to_string(e.code()), e.what());
  if (e.code() == QueryErrorCode::SyntaxError || e.code() == QueryErrorCode::EmptyInput) {
    response.body["position"] = e.position();
  }
  if (e.code() == QueryErrorCode::UnknownName) response.body["name"] = e.name();
  return response;
}

}  // namespace

HttpResponse Api::tools() const { return {200, to_json(list_tools(*store_.current()))}; }

HttpResponse Api::tool(const std::string& slug) const {
  try {
    return {200, to_json(summarize_tool(*store_.current(), slug))};
  } catch (const NotFoundError& e) {
    return error_response(404, "not-found", e.what());
  }
}

HttpResponse Api::query(const std::string& body) const {
  json request = json::parse(body, nullptr, false);
  if (request.is_discarded() || !request.is_object()) {
    return error_response(400, "bad-request", "request body must be a JSON object");
  }
  auto it = request.find("query");
  if (it == request.end() || !it->is_string()) {
    return error_response(400, "bad-request", "request body needs a string field \"query\"");
  }
  try {
    return {200, query_json(*store_.current(), it->get<std::string>())};
  } catch (const QueryError& e) {
    return query_error(e);
  }
}

HttpResponse Api::facets() const { return {200, to_json(compute_facets(*store_.current()))}; }

HttpResponse Api::graph(const std::optional<std::string>& root, const std::optional<std::string>& depth) const {
  std::size_t levels = kDefaultGraphDepth;
  if (depth) {
    const char* end = depth->data() + depth->size();
    auto [ptr, ec] = std::from_chars(depth->data(), end, levels);
    if (depth->empty() || ec != std::errc() || ptr != end) {
      return error_response(400, "bad-request", "depth must be a non-negative integer, got '" + *depth + "'");
    }
  }
  try {
    return {200, to_json(export_graph(*store_.current(), root.value_or(std::string(kDefaultGraphRoot)), levels))};
  } catch (const NotFoundError& e) {
    return error_response(404, "unknown-root", e.what());
  }
}

HttpResponse Api::metrics() const { return {200, to_json(compute_metrics(*store_.current()))}; }

HttpResponse Api::health() const {
  auto ontology = store_.current();
  return {200, {{"status", "ok"}, {"format", kSnapshotFormat}, {"tools", tool_universe(*ontology).size()}}};
}

HttpResponse Api::sankey() const { return {200, to_json(export_sankey(*store_.current()))}; }

HttpResponse Api::check() const { return {200, to_json(check_consistency(*store_.current()))}; }

void mount(httplib::Server& server, const Api& api) {
  auto send = [](httplib::Response& res, const HttpResponse& out) {
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
  };
  auto param = [](const httplib::Request& req, const char* key) -> std::optional<std::string> {
    if (!req.has_param(key)) return std::nullopt;
    return req.get_param_value(key);
  };

  server.Get("/api/tools", [&api, send](const httplib::Request&, httplib::Response& res) { send(res, api.tools()); });
  server.Get(R"(/api/tools/([^/]+))", [&api, send](const httplib::Request& req, httplib::Response& res) {
    send(res, api.tool(req.matches[1]));
  });
  server.Post("/api/query",
              [&api, send](const httplib::Request& req, httplib::Response& res) { send(res, api.query(req.body)); });
  server.Get("/api/facets", [&api, send](const httplib::Request&, httplib::Response& res) { send(res, api.facets()); });
  server.Get("/api/graph", [&api, send, param](const httplib::Request& req, httplib::Response& res) {
    send(res, api.graph(param(req, "root"), param(req, "depth")));
  });
  server.Get("/api/metrics",
             [&api, send](const httplib::Request&, httplib::Response& res) { send(res, api.metrics()); });
  server.Get("/api/health", [&api, send](const httplib::Request&, httplib::Response& res) { send(res, api.health()); });
  server.Get("/api/sankey", [&api, send](const httplib::Request&, httplib::Response& res) { send(res, api.sankey()); });
  server.Get("/api/check", [&api, send](const httplib::Request&, httplib::Response& res) { send(res, api.check()); });

  server.set_error_handler([send](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    if (res.status == 404) {
      send(res, error_response(404, "not-found", "no route for " + req.method + " " + req.path));
    } else if (res.status == 405) {
      send(res, error_response(405, "method-not-allowed", req.method + " not allowed on " + req.path));
    }
  });
  server.set_exception_handler([send](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    send(res, error_response(500, "internal", message));
  });
}

BindAddress parse_bind(std::string_view text) {
  auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw std::invalid_argument("bind address must be host:port, got '" + std::string(text) + "'");
  }
  BindAddress out{std::string(text.substr(0, colon)), 0};
  std::string_view port = text.substr(colon + 1);
  auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), out.port);
  if (port.empty() || ec != std::errc() || ptr != port.data() + port.size() || out.port < 0 || out.port > 65535) {
    throw std::invalid_argument("bad port in bind address '" + std::string(text) + "'");
  }
  return out;
}

int run_server(SnapshotStore& store, const std::string& snapshot_path, const BindAddress& bind, std::ostream& log) {
  httplib::Server server;
  // Without SO_REUSEPORT a second server on the same port fails to bind.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  });
  Api api(store);
  mount(server, api);

  int port = bind.port;
  if (port == 0) {
    port = server.bind_to_any_port(bind.host);
  } else if (!server.bind_to_port(bind.host, port)) {
    port = -1;
  }
  if (port < 0) {
    log << "error: cannot bind " << bind.host << ":" << bind.port << "\n";
    return 2;
  }

  // Signals are taken synchronously by a watcher thread; every other thread
  // inherits the blocked mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGHUP);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  sigset_t previous;
  pthread_sigmask(SIG_BLOCK, &signals, &previous);

  std::atomic<bool> done{false};
  std::thread watcher([&] {
    const timespec tick{0, 200'000'000};
    while (!done) {
      int sig = sigtimedwait(&signals, nullptr, &tick);
      if (sig == SIGHUP) {
        try {
          store.replace(load_snapshot_file(snapshot_path));
          log << "reloaded " << snapshot_path << "\n" << std::flush;
        } catch (const std::exception& e) {
          log << "reload failed, keeping previous snapshot: " << e.what() << "\n" << std::flush;
        }
      } else if (sig == SIGINT || sig == SIGTERM) {
        server.stop();
        return;
      }
    }
  });

  log << "listening on http://" << bind.host << ":" << port << "\n" << std::flush;
  bool ok = server.listen_after_bind();
  done = true;
  watcher.join();
  pthread_sigmask(SIG_SETMASK, &previous, nullptr);
  return ok ? 0 : 2;
}

}  // namespace vison
