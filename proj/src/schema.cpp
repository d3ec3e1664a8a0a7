#include "vison/schema.hpp"

#include <charconv>

#include "vison/csv.hpp"
#include "vison/slug.hpp"

namespace vison {

namespace {

std::vector<std::string> split_list(std::string_view cell) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= cell.size()) {
    std::size_t end = cell.find(';', start);
    if (end == std::string_view::npos) end = cell.size();
    std::string item = trim(cell.substr(start, end - start));
    if (!item.empty()) out.push_back(std::move(item));
    start = end + 1;
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> split_attributes(std::string_view cell, std::size_t line) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : split_list(cell)) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw SchemaError(line, "attribute '" + item + "' is not key=value");
    out.emplace_back(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
  }
  return out;
}

PropertyDef parse_property(const std::vector<std::string>& fields, std::size_t line) {
  PropertyDef def;
  def.id = fields[1];
  def.label = fields[2].empty() ? fields[1] : fields[2];
  if (!fields[3].empty()) throw SchemaError(line, "property rows take attributes, not refs");
  for (auto& [key, value] : split_attributes(fields[4], line)) {
    if (key == "kind") {
      if (value == "object") {
        def.kind = PropertyKind::Object;
      } else if (value == "integer") {
        def.kind = PropertyKind::Integer;
      } else {
        throw SchemaError(line, "unknown property kind '" + value + "'");
      }
    } else if (key == "domain") {
      def.domain = value;
    } else if (key == "range") {
      def.range = value;
    } else if (key == "super") {
      def.super_property = value;
    } else {
      throw SchemaError(line, "unknown property attribute '" + key + "'");
    }
  }
  return def;
}

}  // namespace

Schema parse_schema(std::string_view bytes) {
  std::vector<CsvRecord> records;
  try {
    records = read_csv(bytes);
  } catch (const CsvError& e) {
    throw SchemaError(e.line(), e.what());
  }
  if (records.empty()) throw SchemaError(1, "missing header");
  std::string header;
  for (const auto& name : records.front().fields) header += (header.empty() ? "" : ",") + name;
  if (header != kSchemaHeader) {
    throw SchemaError(records.front().line, "bad header '" + header + "'; expected '" +
                                                std::string(kSchemaHeader) + "'");
  }
  Schema schema;
  for (std::size_t i = 1; i < records.size(); ++i) {
    auto fields = records[i].fields;
    const std::size_t line = records[i].line;
    if (fields.size() != 5) {
      throw SchemaError(line, "expected 5 fields, found " + std::to_string(fields.size()));
    }
    for (auto& field : fields) field = trim(field);
    const std::string& kind = fields[0];
    if (kind == "class") {
      schema.classes.push_back({line, fields[1], fields[2], split_list(fields[3])});
    } else if (kind == "disjoint") {
      schema.disjoint_groups.push_back({line, fields[1], split_list(fields[3])});
    } else if (kind == "property") {
      schema.properties.push_back({line, parse_property(fields, line)});
    } else if (kind == "individual") {
      Schema::IndividualRow row{line, fields[1], fields[2], split_list(fields[3]), {}};
      for (auto& [key, value] : split_attributes(fields[4], line)) row.facts.push_back({key, value});
      schema.individuals.push_back(std::move(row));
    } else {
      throw SchemaError(line, "unknown row kind '" + kind + "'");
    }
  }
  return schema;
}

Ontology schema_ontology(const Schema& schema) {
  Ontology ontology;
  std::size_t line = 0;
  try {
    for (const auto& cls : schema.classes) {
      line = cls.line;
      ontology.declare_class(cls.id, cls.label.empty() ? cls.id : cls.label,
                             {cls.parents.begin(), cls.parents.end()});
    }
    for (const auto& group : schema.disjoint_groups) {
      line = group.line;
      ontology.assert_disjoint_group({group.members.begin(), group.members.end()});
    }
    for (const auto& property : schema.properties) {
      line = property.line;
      ontology.declare_property(property.def);
    }
    for (const auto& individual : schema.individuals) {
      line = individual.line;
      ontology.declare_individual(individual.id, individual.label.empty() ? individual.id : individual.label);
      for (const auto& cls : individual.classes) ontology.assert_membership(individual.id, cls);
    }
    for (const auto& individual : schema.individuals) {
      line = individual.line;
      for (const auto& fact : individual.facts) {
        const PropertyDef* def = ontology.find_property(fact.property);
        if (def != nullptr && def->kind == PropertyKind::Integer) {
          std::int64_t value = 0;
          auto [ptr, ec] = std::from_chars(fact.value.data(), fact.value.data() + fact.value.size(), value);
          if (ec != std::errc() || ptr != fact.value.data() + fact.value.size()) {
            throw SchemaError(line, "'" + fact.value + "' is not an integer");
          }
          ontology.assert_property_value(individual.id, fact.property, value);
        } else {
          ontology.assert_property_value(individual.id, fact.property, fact.value);
        }
      }
    }
  } catch (const OntologyError& e) {
    throw SchemaError(line, e.what());
  }
  return ontology;
}

}  // namespace vison
