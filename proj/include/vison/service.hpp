#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "vison/ontology.hpp"

namespace httplib {
class Server;
}

namespace vison {

inline constexpr std::string_view kDefaultBind = "127.0.0.1:8470";

// Holds the live snapshot. Readers take a shared_ptr and keep using it even if
// a reload swaps in a new one mid-request.
class SnapshotStore {
 public:
  explicit SnapshotStore(Ontology ontology);

  std::shared_ptr<const Ontology> current() const;
  void replace(Ontology ontology);

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const Ontology> current_;
};

struct HttpResponse {
  int status = 200;
  nlohmann::json body;
};

// Error payload: {"error": message, "code": code} plus "position" for syntax
// errors and "name" for unknown names.
HttpResponse error_response(int status, std::string_view code, const std::string& message);

// Transport-free handlers, one per endpoint. None of them mutate the store.
class Api {
 public:
  explicit Api(const SnapshotStore& store) : store_(store) {}

  HttpResponse tools() const;                        // GET /api/tools
  HttpResponse tool(const std::string& slug) const;  // GET /api/tools/{slug}
  HttpResponse query(const std::string& body) const; // POST /api/query {"query": text}
  HttpResponse facets() const;                       // GET /api/facets
  HttpResponse graph(const std::optional<std::string>& root,
                     const std::optional<std::string>& depth) const;  // GET /api/graph
  HttpResponse metrics() const;                      // GET /api/metrics
  HttpResponse health() const;                       // GET /api/health
  HttpResponse sankey() const;                       // GET /api/sankey
  HttpResponse check() const;                        // GET /api/check

 private:
  const SnapshotStore& store_;
};

inline constexpr std::string_view kDefaultGraphRoot = "thing";
inline constexpr std::size_t kDefaultGraphDepth = 2;

void mount(httplib::Server& server, const Api& api);

struct BindAddress {
  std::string host;
  int port = 0;
};

// "host:port"; throws std::invalid_argument.
BindAddress parse_bind(std::string_view text);

// Blocks until SIGINT/SIGTERM. SIGHUP reloads `snapshot_path` into the store;
// a failed reload keeps the old snapshot. Returns 2 if the address cannot be bound.
int run_server(SnapshotStore& store, const std::string& snapshot_path, const BindAddress& bind, std::ostream& log);

}  // namespace vison
