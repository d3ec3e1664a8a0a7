#include "vison/discovery.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "vison/builder.hpp"
#include "vison/slug.hpp"

namespace vison {

using nlohmann::json;

namespace {

struct Dimension {
  std::string_view name;
  std::string_view property;
};

constexpr Dimension kDimensions[] = {
    {"aspect", ids::kAspectIs},
    {"medium", ids::kHasMedium},
    {"technique", ids::kUsesTechnique},
    {"environment", ids::kRunsIn},
    {"evaluation", ids::kEvaluatedBy},
    {"concern_keyword", ids::kAddressesConcernKeyword},
    {"data_source", ids::kHasDataSource},
    {"license", ids::kHasLicense},
    {"year", ids::kLastUpdate},
};

std::string label_of(const Ontology& ontology, const std::string& id) {
  const Individual* individual = ontology.find_individual(id);
  return individual ? individual->label : id;
}

// Positive object targets of `property` that are not negated.
std::vector<std::string> object_values(const Individual& subject, std::string_view property) {
  std::vector<std::string> out;
  for (const auto& assertion : subject.property_assertions) {
    if (assertion.property != property || subject.negative_assertions.contains(assertion)) continue;
    if (const auto* id = std::get_if<std::string>(&assertion.target)) out.push_back(*id);
  }
  return out;
}

std::optional<std::int64_t> latest(const Individual& subject, std::string_view property) {
  std::optional<std::int64_t> out;
  for (const auto& assertion : subject.property_assertions) {
    if (assertion.property != property) continue;
    if (const auto* value = std::get_if<std::int64_t>(&assertion.target)) {
      out = out ? std::max(*out, *value) : *value;
    }
  }
  return out;
}

std::vector<std::string> labels(const Ontology& ontology, const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  for (const auto& id : ids) out.push_back(label_of(ontology, id));
  std::sort(out.begin(), out.end());
  return out;
}

std::string annotation(const Individual& subject, std::string_view key) {
  auto it = subject.annotations.find(std::string(key));
  return it == subject.annotations.end() ? std::string() : it->second;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out;
}

// Left-aligned, two-space gutter; the last column is not padded.
std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

}  // namespace

ToolSummary summarize_tool(const Ontology& ontology, std::string_view id) {
  const Individual* tool = ontology.find_individual(id);
  if (tool == nullptr || !tool_universe(ontology).contains(std::string(id))) {
    throw NotFoundError("unknown tool '" + std::string(id) + "'");
  }
  ToolSummary s;
  s.id = tool->id;
  s.name = tool->label;
  s.year = latest(*tool, ids::kLastUpdate);
  auto aspects = labels(ontology, object_values(*tool, ids::kAspectIs));
  if (!aspects.empty()) s.aspect = aspects.front();
  s.media = labels(ontology, object_values(*tool, ids::kHasMedium));
  s.environments = labels(ontology, object_values(*tool, ids::kRunsIn));
  s.techniques = labels(ontology, object_values(*tool, ids::kUsesTechnique));
  s.evaluations = labels(ontology, object_values(*tool, ids::kEvaluatedBy));
  s.data_sources = labels(ontology, object_values(*tool, ids::kHasDataSource));
  auto licenses = labels(ontology, object_values(*tool, ids::kHasLicense));
  if (!licenses.empty()) s.license = licenses.front();
  s.concern = annotation(*tool, ids::kConcernAnnotation);
  s.url = annotation(*tool, ids::kUrlAnnotation);
  return s;
}

json to_json(const ToolSummary& tool) {
  return {{"id", tool.id},
          {"name", tool.name},
          {"year", tool.year ? json(*tool.year) : json(nullptr)},
          {"aspect", tool.aspect},
          {"media", tool.media},
          {"environments", tool.environments},
          {"techniques", tool.techniques},
          {"evaluations", tool.evaluations},
          {"data_sources", tool.data_sources},
          {"license", tool.license ? json(*tool.license) : json(nullptr)},
          {"concern", tool.concern},
          {"url", tool.url}};
}

std::vector<ToolSummary> list_tools(const Ontology& ontology) {
  std::vector<ToolSummary> out;
  for (const auto& id : order_by_recency(tool_universe(ontology), ontology)) {
    out.push_back(summarize_tool(ontology, id));
  }
  return out;
}

std::vector<Facet> compute_facets(const Ontology& ontology) {
  std::vector<Facet> out;
  const auto tools = tool_universe(ontology);
  for (const auto& dimension : kDimensions) {
    if (ontology.find_property(dimension.property) == nullptr) continue;
    std::map<std::string, FacetValue> values;
    for (const auto& id : tools) {
      const Individual& tool = *ontology.find_individual(id);
      std::set<std::string> seen;
      for (const auto& assertion : tool.property_assertions) {
        if (assertion.property != dimension.property || tool.negative_assertions.contains(assertion)) continue;
        std::string key;
        std::string label;
        if (const auto* target = std::get_if<std::string>(&assertion.target)) {
          key = *target;
          label = label_of(ontology, *target);
        } else {
          key = label = std::to_string(std::get<std::int64_t>(assertion.target));
        }
        if (!seen.insert(key).second) continue;
        auto& value = values[key];
        value.id = key;
        value.label = label;
        ++value.count;
      }
    }
    if (values.empty()) continue;
    Facet facet{std::string(dimension.name), std::string(dimension.property), {}};
    for (auto& [key, value] : values) facet.values.push_back(std::move(value));
    std::sort(facet.values.begin(), facet.values.end(), [](const FacetValue& a, const FacetValue& b) {
      if (a.count != b.count) return a.count > b.count;
      if (a.label != b.label) return a.label < b.label;
      return a.id < b.id;
    });
    out.push_back(std::move(facet));
  }
  return out;
}

GraphExport export_graph(const Ontology& ontology, std::string_view root, std::size_t depth) {
  if (ontology.find_class(root) == nullptr) throw NotFoundError("unknown class '" + std::string(root) + "'");

  std::map<std::string_view, std::vector<std::string_view>> children;
  std::map<std::string_view, std::vector<std::string_view>> members;
  for (const auto& [id, def] : ontology.classes()) {
    for (const auto& parent : def.parents) children[parent].push_back(id);
  }
  for (const auto& [id, individual] : ontology.individuals()) {
    for (const auto& cls : individual.asserted_classes) members[cls].push_back(id);
  }

  GraphExport graph;
  std::set<std::string> classes;
  std::set<std::string> individuals;
  auto add_class = [&](std::string_view id) {
    if (!classes.emplace(id).second) return false;
    graph.nodes.push_back({"class:" + std::string(id), std::string(id), ontology.find_class(id)->label, "class"});
    return true;
  };
  auto add_individual = [&](std::string_view id) {
    if (!individuals.emplace(id).second) return;
    graph.nodes.push_back(
        {"individual:" + std::string(id), std::string(id), ontology.find_individual(id)->label, "individual"});
  };

  add_class(root);
  std::deque<std::pair<std::string_view, std::size_t>> frontier{{root, 0}};
  while (!frontier.empty()) {
    auto [cls, distance] = frontier.front();
    frontier.pop_front();
    if (distance >= depth) continue;
    if (auto it = children.find(cls); it != children.end()) {
      for (auto child : it->second) {
        if (add_class(child)) frontier.emplace_back(child, distance + 1);
      }
    }
    if (auto it = members.find(cls); it != members.end()) {
      for (auto individual : it->second) add_individual(individual);
    }
  }

  for (const auto& id : classes) {
    for (const auto& parent : ontology.find_class(id)->parents) {
      if (classes.contains(parent)) graph.edges.push_back({"class:" + id, "class:" + parent, "subclass", ""});
    }
  }
  for (const auto& id : individuals) {
    const Individual& individual = *ontology.find_individual(id);
    for (const auto& cls : individual.asserted_classes) {
      if (classes.contains(cls)) graph.edges.push_back({"individual:" + id, "class:" + cls, "instance", ""});
    }
    for (const auto& assertion : individual.property_assertions) {
      const auto* target = std::get_if<std::string>(&assertion.target);
      if (target != nullptr && individuals.contains(*target)) {
        graph.edges.push_back({"individual:" + id, "individual:" + *target, "property", assertion.property});
      }
    }
  }
  return graph;
}

SankeyExport export_sankey(const Ontology& ontology) {
  SankeyExport sankey;
  sankey.stages = {"year", "aspect", "evaluation", "tool"};
  std::map<std::string, SankeyNode> nodes;
  std::map<std::pair<std::string, std::string>, std::size_t> weights;

  auto node = [&](const std::string& stage, const std::string& key, const std::string& label) {
    std::string id = stage + ":" + key;
    nodes.try_emplace(id, SankeyNode{id, label, stage});
    return id;
  };

  for (const auto& id : tool_universe(ontology)) {
    const Individual& tool = *ontology.find_individual(id);
    auto year = latest(tool, ids::kLastUpdate);
    std::string year_key = year ? std::to_string(*year) : "unknown";
    std::string year_node = node("year", year_key, year ? year_key : "Unknown");

    auto aspect_ids = object_values(tool, ids::kAspectIs);
    std::sort(aspect_ids.begin(), aspect_ids.end());
    std::string aspect_key = aspect_ids.empty() ? "unknown" : join(aspect_ids, "+");
    std::string aspect_label = aspect_ids.empty() ? "Unknown" : join(labels(ontology, aspect_ids), " + ");
    std::string aspect_node = node("aspect", aspect_key, aspect_label);

    auto evaluation_ids = object_values(tool, ids::kEvaluatedBy);
    std::sort(evaluation_ids.begin(), evaluation_ids.end());
    std::string evaluation_key = evaluation_ids.empty() ? "unspecified" : join(evaluation_ids, "+");
    std::string evaluation_label =
        evaluation_ids.empty() ? "Unspecified" : join(labels(ontology, evaluation_ids), " + ");
    std::string evaluation_node = node("evaluation", evaluation_key, evaluation_label);

    std::string tool_node = node("tool", id, tool.label);

    ++weights[{year_node, aspect_node}];
    ++weights[{aspect_node, evaluation_node}];
    ++weights[{evaluation_node, tool_node}];
  }

  std::map<std::string, std::size_t> stage_rank;
  for (std::size_t i = 0; i < sankey.stages.size(); ++i) stage_rank[sankey.stages[i]] = i;
  for (auto& [id, n] : nodes) sankey.nodes.push_back(std::move(n));
  std::stable_sort(sankey.nodes.begin(), sankey.nodes.end(), [&](const SankeyNode& a, const SankeyNode& b) {
    return stage_rank[a.stage] < stage_rank[b.stage];
  });
  for (const auto& [key, weight] : weights) sankey.links.push_back({key.first, key.second, weight});
  std::stable_sort(sankey.links.begin(), sankey.links.end(), [&](const SankeyLink& a, const SankeyLink& b) {
    return stage_rank[a.source.substr(0, a.source.find(':'))] < stage_rank[b.source.substr(0, b.source.find(':'))];
  });
  return sankey;
}

json to_json(const std::vector<ToolSummary>& tools) {
  json list = json::array();
  for (const auto& tool : tools) list.push_back(to_json(tool));
  return {{"count", tools.size()}, {"tools", std::move(list)}};
}

json to_json(const std::vector<Facet>& facets) {
  json list = json::array();
  for (const auto& facet : facets) {
    json values = json::array();
    for (const auto& value : facet.values) {
      values.push_back({{"id", value.id}, {"label", value.label}, {"count", value.count}});
    }
    list.push_back({{"dimension", facet.dimension}, {"property", facet.property}, {"values", std::move(values)}});
  }
  return {{"facets", std::move(list)}};
}

json to_json(const GraphExport& graph) {
  json nodes = json::array();
  for (const auto& n : graph.nodes) {
    nodes.push_back({{"id", n.id}, {"slug", n.slug}, {"label", n.label}, {"kind", n.kind}});
  }
  json edges = json::array();
  for (const auto& e : graph.edges) {
    json edge{{"from", e.from}, {"to", e.to}, {"kind", e.kind}};
    if (!e.property.empty()) edge["property"] = e.property;
    edges.push_back(std::move(edge));
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

json to_json(const SankeyExport& sankey) {
  json nodes = json::array();
  for (const auto& n : sankey.nodes) nodes.push_back({{"id", n.id}, {"label", n.label}, {"stage", n.stage}});
  json links = json::array();
  for (const auto& l : sankey.links) {
    links.push_back({{"source", l.source}, {"target", l.target}, {"weight", l.weight}});
  }
  return {{"stages", sankey.stages}, {"nodes", std::move(nodes)}, {"links", std::move(links)}};
}

json to_json(const MetricsReport& m) {
  return {{"axiom_count", m.axiom_count},
          {"logical_axiom_count", m.logical_axiom_count},
          {"declaration_axiom_count", m.declaration_axiom_count},
          {"class_count", m.class_count},
          {"property_count", m.property_count},
          {"individual_count", m.individual_count},
          {"subclassof_count", m.subclassof_count},
          {"disjointclasses_count", m.disjointclasses_count},
          {"subobjectpropertyof_count", m.subobjectpropertyof_count},
          {"objectpropertydomain_count", m.objectpropertydomain_count},
          {"objectpropertyrange_count", m.objectpropertyrange_count},
          {"classassertion_count", m.classassertion_count},
          {"objectpropertyassertion_count", m.objectpropertyassertion_count},
          {"negativeobjectpropertyassertion_count", m.negativeobjectpropertyassertion_count}};
}

json to_json(const ConsistencyReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"kind", to_string(v.kind)}, {"subjects", v.subjects}, {"message", v.message}});
  }
  return {{"consistent", report.consistent()},
          {"violation_count", report.violations.size()},
          {"violations", std::move(violations)}};
}

json query_json(const Ontology& ontology, std::string_view text) {
  QueryResult result = evaluate(parse_query(text), ontology);
  json matches = json::array();
  for (const auto& id : result.matches) matches.push_back(to_json(summarize_tool(ontology, id)));
  return {{"query", result.expression},
          {"universe_size", result.universe_size},
          {"count", result.matches.size()},
          {"matches", std::move(matches)}};
}

std::string render_tools_table(const std::vector<ToolSummary>& tools) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& tool : tools) {
    rows.push_back({tool.name, tool.year ? std::to_string(*tool.year) : "-", tool.aspect, join(tool.media, ";"),
                    tool.url});
  }
  return render_table({"NAME", "YEAR", "ASPECT", "MEDIA", "URL"}, rows) + std::to_string(tools.size()) +
         " tool(s)\n";
}

std::string render_facets_table(const std::vector<Facet>& facets) {
  std::ostringstream out;
  for (const auto& facet : facets) {
    out << facet.dimension << '\n';
    for (const auto& value : facet.values) out << "  " << value.label << "  " << value.count << '\n';
  }
  return out.str();
}

std::string render_metrics_table(const MetricsReport& metrics) {
  // Keys in the same order as the report's fields, not json's sorted order.
  static const char* const order[] = {
      "axiom_count", "logical_axiom_count", "declaration_axiom_count", "class_count", "property_count",
      "individual_count", "subclassof_count", "disjointclasses_count", "subobjectpropertyof_count",
      "objectpropertydomain_count", "objectpropertyrange_count", "classassertion_count",
      "objectpropertyassertion_count", "negativeobjectpropertyassertion_count"};
  const json values = to_json(metrics);
  std::vector<std::vector<std::string>> rows;
  for (const char* key : order) rows.push_back({key, values.at(key).dump()});
  return render_table({"METRIC", "VALUE"}, rows);
}

std::string render_report_table(const ConsistencyReport& report) {
  if (report.consistent()) return "consistent: no violations\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& v : report.violations) rows.push_back({std::string(to_string(v.kind)), v.message});
  return render_table({"KIND", "MESSAGE"}, rows) + std::to_string(report.violations.size()) + " violation(s)\n";
}

}  // namespace vison
