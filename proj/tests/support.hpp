#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "vison/metrics.hpp"
#include "vison/ontology.hpp"

namespace support {

std::string data_path(const std::string& name);
std::string fixture_path(const std::string& name);

// Catalog at `path` compiled with the shipped schema; aborts the test on errors.
vison::Ontology build_catalog(const std::string& path);
// The shipped catalog, built once per process.
const vison::Ontology& seed();

// Plain CSV scan written separately from the library reader, used as an oracle.
struct Table {
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
};
Table scan_csv(const std::string& path);

// Cell split on ';' with surrounding blanks removed.
std::vector<std::string> cell_values(const std::string& cell);
// Lowercase runs of ASCII letters and digits.
std::set<std::string> word_tokens(const std::string& text);

std::set<std::string> labels(const vison::Ontology& ontology, const std::set<std::string>& ids);
std::set<std::string> labels(const vison::Ontology& ontology, const std::vector<std::string>& ids);

// Line items counted straight from the flat parts; totals by the published identities.
vison::MetricsReport oracle_metrics(const vison::OntologyParts& parts);

// Breadth-first walk over parent links.
std::set<std::string> bfs_ancestors(const vison::OntologyParts& parts, const std::string& cls);

std::string read_file(const std::string& path);
std::string temp_path(const std::string& stem);

}  // namespace support
