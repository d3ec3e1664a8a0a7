#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vison/ontology.hpp"

namespace vison {

class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::size_t line, const std::string& message)
      : std::runtime_error("schema line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline constexpr std::string_view kSchemaHeader = "kind,id,label,refs,attributes";

// Declarative schema file, CSV with header `kind,id,label,refs,attributes`:
//
//   class,medium,Medium,thing,                       refs = parents
//   disjoint,aspects,,behavior-tool;structure-tool,  refs = member classes
//   property,hasmedium,hasMedium,,kind=object;domain=tool;range=medium;super=x
//   individual,scs,SCS,medium,dimensionality=2d      refs = classes, attributes = facts
//
// Rows are applied in file order, except that individual facts run after every
// individual is declared.
struct Schema {
  struct Class {
    std::size_t line;
    std::string id;
    std::string label;
    std::vector<std::string> parents;
  };
  struct Disjoint {
    std::size_t line;
    std::string id;
    std::vector<std::string> members;
  };
  struct Property {
    std::size_t line;
    PropertyDef def;
  };
  struct Fact {
    std::string property;
    std::string value;
  };
  struct IndividualRow {
    std::size_t line;
    std::string id;
    std::string label;
    std::vector<std::string> classes;
    std::vector<Fact> facts;
  };

  std::vector<Class> classes;
  std::vector<Disjoint> disjoint_groups;
  std::vector<Property> properties;
  std::vector<IndividualRow> individuals;
};

// Throws SchemaError for structural problems in the file.
Schema parse_schema(std::string_view bytes);

// Applies the schema to an empty ontology. Rejections from the ontology
// (unknown ids, cycles, duplicates) surface as SchemaError with the line.
Ontology schema_ontology(const Schema& schema);

}  // namespace vison
