#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vison/consistency.hpp"
#include "vison/metrics.hpp"
#include "vison/ontology.hpp"
#include "vison/query.hpp"

namespace vison {

// Raised for lookups of things that do not exist (unknown tool, unknown graph root).
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Display view of one tool individual, assembled from its assertions.
struct ToolSummary {
  std::string id;
  std::string name;
  std::optional<std::int64_t> year;
  std::string aspect;
  std::vector<std::string> media;
  std::vector<std::string> environments;
  std::vector<std::string> techniques;
  std::vector<std::string> evaluations;
  std::vector<std::string> data_sources;
  std::optional<std::string> license;
  std::string concern;
  std::string url;
};

ToolSummary summarize_tool(const Ontology& ontology, std::string_view id);
nlohmann::json to_json(const ToolSummary& tool);

// Every tool, newest first then by name.
std::vector<ToolSummary> list_tools(const Ontology& ontology);

// One facet dimension backed by a property; counts are tools per value.
struct FacetValue {
  std::string id;
  std::string label;
  std::size_t count = 0;
};

struct Facet {
  std::string dimension;
  std::string property;
  std::vector<FacetValue> values;  // count descending, then label
};

// Dimensions whose property is missing or unused are left out.
std::vector<Facet> compute_facets(const Ontology& ontology);

struct GraphNode {
  std::string id;  // "class:<slug>" or "individual:<slug>"
  std::string slug;
  std::string label;
  std::string kind;  // class | individual
};

struct GraphEdge {
  std::string from;
  std::string to;
  std::string kind;  // subclass (sub -> super) | instance (individual -> class) | property
  std::string property;
};

struct GraphExport {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
};

// Breadth-limited neighborhood below root: subclasses and direct instances
// within `depth` steps, plus property edges between included individuals.
// Throws NotFoundError for an unknown root.
GraphExport export_graph(const Ontology& ontology, std::string_view root, std::size_t depth);

struct SankeyNode {
  std::string id;  // "<stage>:<slug>"
  std::string label;
  std::string stage;
};

struct SankeyLink {
  std::string source;
  std::string target;
  std::size_t weight = 0;
};

struct SankeyExport {
  std::vector<std::string> stages;
  std::vector<SankeyNode> nodes;
  std::vector<SankeyLink> links;
};

// Year -> aspect -> evaluation -> tool, one unit of flow per tool. A tool with
// several evaluations flows through one combined evaluation node.
SankeyExport export_sankey(const Ontology& ontology);

nlohmann::json to_json(const std::vector<ToolSummary>& tools);
nlohmann::json to_json(const std::vector<Facet>& facets);
nlohmann::json to_json(const GraphExport& graph);
nlohmann::json to_json(const SankeyExport& sankey);
nlohmann::json to_json(const MetricsReport& metrics);
nlohmann::json to_json(const ConsistencyReport& report);

// Shared by the CLI and the HTTP service so both answer with the same document.
// Throws QueryError.
nlohmann::json query_json(const Ontology& ontology, std::string_view text);

std::string render_tools_table(const std::vector<ToolSummary>& tools);
std::string render_facets_table(const std::vector<Facet>& facets);
std::string render_metrics_table(const MetricsReport& metrics);
std::string render_report_table(const ConsistencyReport& report);

}  // namespace vison
