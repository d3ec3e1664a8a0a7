// vison: build, query and serve the software-visualization tool ontology.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "vison/builder.hpp"
#include "vison/catalog.hpp"
#include "vison/consistency.hpp"
#include "vison/discovery.hpp"
#include "vison/metrics.hpp"
#include "vison/query.hpp"
#include "vison/schema.hpp"
#include "vison/service.hpp"
#include "vison/snapshot.hpp"

namespace {

using namespace vison;

constexpr int kExitData = 1;
constexpr int kExitIo = 2;

struct Options {
  std::string snapshot = "vison-snapshot.json";
  std::string format = "table";
  std::string catalog = std::string(VISON_DATA_DIR) + "/catalog.csv";
  std::string schema = std::string(VISON_DATA_DIR) + "/schema.csv";
  std::string query;
  std::string root = std::string(kDefaultGraphRoot);
  std::size_t depth = kDefaultGraphDepth;
  std::string bind = std::string(kDefaultBind);
};

bool json_output(const Options& o) { return o.format == "json"; }

void print_json(const nlohmann::json& document) { std::cout << document.dump(2) << "\n"; }

// Unreadable or malformed snapshots are I/O-class failures.
std::optional<Ontology> open_snapshot(const Options& o) {
  try {
    return load_snapshot_file(o.snapshot);
  } catch (const std::exception& e) {
    std::cerr << "error: cannot load snapshot '" << o.snapshot << "': " << e.what() << "\n";
    return std::nullopt;
  }
}

int cmd_ingest(const Options& o) {
  std::string catalog_text;
  std::string schema_text;
  try {
    catalog_text = read_text_file(o.catalog);
    schema_text = read_text_file(o.schema);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  CatalogLoad load;
  try {
    load = load_catalog(catalog_text);
  } catch (const CatalogError& e) {
    std::cerr << o.catalog << ":" << e.line() << ":" << e.column() << ": error: " << e.what() << "\n";
    return kExitData;
  }
  for (const auto& issue : load.issues) {
    std::cerr << o.catalog << ": row " << issue.row << ": " << to_string(issue.severity) << ": " << issue.message
              << "\n";
  }
  if (load.has_errors()) return kExitData;

  Ontology ontology;
  try {
    ontology = build_ontology(load.records, parse_schema(schema_text));
  } catch (const SchemaError& e) {
    std::cerr << o.schema << ": error: " << e.what() << "\n";
    return kExitData;
  } catch (const BuildError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& v : e.report().violations) std::cerr << "  " << to_string(v.kind) << ": " << v.message << "\n";
    return kExitData;
  }

  try {
    save_snapshot_file(ontology, o.snapshot);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  MetricsReport metrics = compute_metrics(ontology);
  if (json_output(o)) {
    print_json({{"snapshot", o.snapshot}, {"tools", tool_universe(ontology).size()}, {"metrics", to_json(metrics)}});
  } else {
    std::cout << "snapshot: " << o.snapshot << "\n"
              << "tools: " << tool_universe(ontology).size() << "\n"
              << "classes: " << metrics.class_count << "\n"
              << "properties: " << metrics.property_count << "\n"
              << "individuals: " << metrics.individual_count << "\n"
              << "axioms: " << metrics.axiom_count << "\n";
  }
  return 0;
}

int cmd_query(const Options& o) {
  auto ontology = open_snapshot(o);
  if (!ontology) return kExitIo;
  try {
    nlohmann::json result = query_json(*ontology, o.query);
    if (json_output(o)) {
      print_json(result);
    } else {
      QueryResult r = evaluate(parse_query(o.query), *ontology);
      std::vector<ToolSummary> tools;
      for (const auto& id : r.matches) tools.push_back(summarize_tool(*ontology, id));
      std::cout << "query: " << r.expression << "\n" << render_tools_table(tools);
    }
    return 0;
  } catch (const QueryError& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    if (e.code() == QueryErrorCode::SyntaxError) {
      std::cerr << "  " << o.query << "\n  " << std::string(e.position(), ' ') << "^\n";
    }
    return kExitData;
  }
}

int cmd_facets(const Options& o) {
  auto ontology = open_snapshot(o);
  if (!ontology) return kExitIo;
  auto facets = compute_facets(*ontology);
  if (json_output(o)) {
    print_json(to_json(facets));
  } else {
    std::cout << render_facets_table(facets);
  }
  return 0;
}

int cmd_metrics(const Options& o) {
  auto ontology = open_snapshot(o);
  if (!ontology) return kExitIo;
  MetricsReport metrics = compute_metrics(*ontology);
  if (json_output(o)) {
    print_json(to_json(metrics));
  } else {
    std::cout << render_metrics_table(metrics);
  }
  return 0;
}

int cmd_check(const Options& o) {
  auto ontology = open_snapshot(o);
  if (!ontology) return kExitIo;
  ConsistencyReport report = check_consistency(*ontology);
  if (json_output(o)) {
    print_json(to_json(report));
  } else {
    std::cout << render_report_table(report);
  }
  return report.consistent() ? 0 : kExitData;
}

int cmd_export_graph(const Options& o) {
  auto ontology = open_snapshot(o);
  if (!ontology) return kExitIo;
  try {
    print_json(to_json(export_graph(*ontology, o.root, o.depth)));
    return 0;
  } catch (const NotFoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}

int cmd_export_sankey(const Options& o) {
  auto ontology = open_snapshot(o);
  if (!ontology) return kExitIo;
  print_json(to_json(export_sankey(*ontology)));
  return 0;
}

int cmd_serve(const Options& o) {
  BindAddress bind;
  try {
    bind = parse_bind(o.bind);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  auto ontology = open_snapshot(o);
  if (!ontology) return kExitIo;
  SnapshotStore store(std::move(*ontology));
  return run_server(store, o.snapshot, bind, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discover software visualization tools through a queryable ontology"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--snapshot", o.snapshot, "Snapshot file")->envname("VISON_SNAPSHOT")->capture_default_str();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  auto* ingest = app.add_subcommand("ingest", "Build a snapshot from a catalog and a schema");
  ingest->add_option("--catalog", o.catalog, "Catalog CSV")->capture_default_str();
  ingest->add_option("--schema", o.schema, "Schema CSV")->capture_default_str();

  auto* query = app.add_subcommand("query", "Evaluate a class expression");
  query->add_option("expression", o.query, "Class expression, e.g. 'behavior-tool and lastupdate >= 2017'")
      ->required();

  auto* facets = app.add_subcommand("facets", "List facet values with tool counts");
  auto* metrics = app.add_subcommand("metrics", "Axiom and entity counts");
  auto* check = app.add_subcommand("check", "Consistency report; exits 1 on violations");

  auto* graph = app.add_subcommand("export-graph", "Concept graph around a class as JSON");
  graph->add_option("--root", o.root, "Root class")->capture_default_str();
  graph->add_option("--depth", o.depth, "Levels below the root")->capture_default_str();

  auto* sankey = app.add_subcommand("export-sankey", "Year, aspect, evaluation, tool flows as JSON");

  auto* serve = app.add_subcommand("serve", "Serve the JSON API");
  serve->add_option("--bind", o.bind, "host:port")->envname("VISON_BIND")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (*ingest) return cmd_ingest(o);
  if (*query) return cmd_query(o);
  if (*facets) return cmd_facets(o);
  if (*metrics) return cmd_metrics(o);
  if (*check) return cmd_check(o);
  if (*graph) return cmd_export_graph(o);
  if (*sankey) return cmd_export_sankey(o);
  if (*serve) return cmd_serve(o);
  return EXIT_FAILURE;
}
