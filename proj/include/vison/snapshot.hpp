#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "vison/ontology.hpp"

namespace vison {

inline constexpr std::string_view kSnapshotFormat = "vison-snapshot/1";

class SnapshotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Single self-contained document: classes, disjoint groups, properties and
// individuals with their assertions, all in id order.
nlohmann::json snapshot_to_json(const Ontology& ontology);

// Loading does not validate; run check_consistency on the result.
Ontology snapshot_from_json(const nlohmann::json& document);

std::string write_snapshot(const Ontology& ontology);
Ontology read_snapshot(std::string_view text);

// Throws IoError on file problems, SnapshotError on bad content.
void save_snapshot_file(const Ontology& ontology, const std::string& path);
Ontology load_snapshot_file(const std::string& path);

}  // namespace vison
