#include "vison/snapshot.hpp"

#include <cstdio>
#include <fstream>

#include "vison/catalog.hpp"

namespace vison {

using nlohmann::json;

namespace {

json assertions_to_json(const std::set<PropertyAssertion>& assertions) {
  json out = json::array();
  for (const auto& assertion : assertions) {
    json entry{{"property", assertion.property}};
    if (const auto* id = std::get_if<std::string>(&assertion.target)) {
      entry["individual"] = *id;
    } else {
      entry["value"] = std::get<std::int64_t>(assertion.target);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::set<PropertyAssertion> assertions_from_json(const json& array) {
  std::set<PropertyAssertion> out;
  for (const auto& entry : array) {
    PropertyAssertion assertion;
    assertion.property = entry.at("property").get<std::string>();
    if (entry.contains("individual")) {
      assertion.target = entry.at("individual").get<std::string>();
    } else {
      assertion.target = entry.at("value").get<std::int64_t>();
    }
    out.insert(std::move(assertion));
  }
  return out;
}

template <typename T>
std::optional<T> optional_field(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

}  // namespace

json snapshot_to_json(const Ontology& ontology) {
  json classes = json::array();
  for (const auto& [id, def] : ontology.classes()) {
    if (id == kRootClass) continue;
    classes.push_back({{"id", def.id}, {"label", def.label}, {"parents", def.parents}});
  }
  json groups = json::array();
  for (const auto& group : ontology.disjoint_groups()) groups.push_back(group);

  json properties = json::array();
  for (const auto& [id, def] : ontology.properties()) {
    json entry{{"id", def.id}, {"label", def.label}, {"kind", to_string(def.kind)}};
    if (def.domain) entry["domain"] = *def.domain;
    if (def.range) entry["range"] = *def.range;
    if (def.super_property) entry["super_property"] = *def.super_property;
    properties.push_back(std::move(entry));
  }

  json individuals = json::array();
  for (const auto& [id, individual] : ontology.individuals()) {
    json entry{{"id", individual.id},
               {"label", individual.label},
               {"classes", individual.asserted_classes},
               {"assertions", assertions_to_json(individual.property_assertions)}};
    if (!individual.negative_assertions.empty()) {
      entry["negative_assertions"] = assertions_to_json(individual.negative_assertions);
    }
    if (!individual.annotations.empty()) entry["annotations"] = individual.annotations;
    individuals.push_back(std::move(entry));
  }

  return {{"format", kSnapshotFormat},
          {"classes", std::move(classes)},
          {"disjoint_groups", std::move(groups)},
          {"properties", std::move(properties)},
          {"individuals", std::move(individuals)}};
}

Ontology snapshot_from_json(const json& document) {
  try {
    if (!document.is_object() || document.value("format", "") != kSnapshotFormat) {
      throw SnapshotError("not a " + std::string(kSnapshotFormat) + " document");
    }
    OntologyParts parts;
    for (const auto& entry : document.at("classes")) {
      parts.classes.push_back({entry.at("id").get<std::string>(), entry.at("label").get<std::string>(),
                               entry.at("parents").get<std::set<std::string>>(), {}});
    }
    for (const auto& group : document.at("disjoint_groups")) {
      parts.disjoint_groups.push_back(group.get<std::set<std::string>>());
    }
    for (const auto& entry : document.at("properties")) {
      PropertyDef def;
      def.id = entry.at("id").get<std::string>();
      def.label = entry.at("label").get<std::string>();
      const auto kind = entry.at("kind").get<std::string>();
      if (kind == "object") {
        def.kind = PropertyKind::Object;
      } else if (kind == "integer") {
        def.kind = PropertyKind::Integer;
      } else {
        throw SnapshotError("property '" + def.id + "' has unknown kind '" + kind + "'");
      }
      def.domain = optional_field<std::string>(entry, "domain");
      def.range = optional_field<std::string>(entry, "range");
      def.super_property = optional_field<std::string>(entry, "super_property");
      parts.properties.push_back(std::move(def));
    }
    for (const auto& entry : document.at("individuals")) {
      Individual individual;
      individual.id = entry.at("id").get<std::string>();
      individual.label = entry.at("label").get<std::string>();
      individual.asserted_classes = entry.at("classes").get<std::set<std::string>>();
      individual.property_assertions = assertions_from_json(entry.at("assertions"));
      if (entry.contains("negative_assertions")) {
        individual.negative_assertions = assertions_from_json(entry.at("negative_assertions"));
      }
      if (entry.contains("annotations")) {
        individual.annotations = entry.at("annotations").get<std::map<std::string, std::string>>();
      }
      parts.individuals.push_back(std::move(individual));
    }
    return Ontology::assemble(std::move(parts));
  } catch (const json::exception& e) {
    throw SnapshotError(std::string("malformed snapshot: ") + e.what());
  }
}

std::string write_snapshot(const Ontology& ontology) { return snapshot_to_json(ontology).dump(2) + "\n"; }

Ontology read_snapshot(std::string_view text) {
  json document = json::parse(text, nullptr, false);
  if (document.is_discarded()) throw SnapshotError("snapshot is not valid JSON");
  return snapshot_from_json(document);
}

void save_snapshot_file(const Ontology& ontology, const std::string& path) {
  const std::string text = write_snapshot(ontology);
  const std::string temporary = path + ".tmp";
  {
    std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + temporary + "'");
    out << text;
    if (!out) throw IoError("cannot write '" + temporary + "'");
  }
  if (std::rename(temporary.c_str(), path.c_str()) != 0) {
    std::remove(temporary.c_str());
    throw IoError("cannot replace '" + path + "'");
  }
}

Ontology load_snapshot_file(const std::string& path) { return read_snapshot(read_text_file(path)); }

}  // namespace vison
