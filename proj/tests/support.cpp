#include "support.hpp"

#include <cctype>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include "vison/builder.hpp"
#include "vison/catalog.hpp"
#include "vison/schema.hpp"

namespace support {

std::string data_path(const std::string& name) { return std::string(VISON_DATA_DIR) + "/" + name; }

std::string fixture_path(const std::string& name) { return std::string(VISON_FIXTURES_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string temp_path(const std::string& stem) {
  static int counter = 0;
  auto dir = std::filesystem::temp_directory_path();
  return (dir / ("vison-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + "-" + stem))
      .string();
}

vison::Ontology build_catalog(const std::string& path) {
  vison::CatalogLoad load = vison::load_catalog(read_file(path));
  if (load.has_errors()) {
    for (const auto& issue : load.issues) std::cerr << path << ": row " << issue.row << ": " << issue.message << "\n";
    std::abort();
  }
  return vison::build_ontology(load.records, vison::parse_schema(read_file(data_path("schema.csv"))));
}

const vison::Ontology& seed() {
  static const vison::Ontology ontology = build_catalog(data_path("catalog.csv"));
  return ontology;
}

Table scan_csv(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(cell);
      cell.clear();
    } else if (c == '\n') {
      record.push_back(cell);
      cell.clear();
      if (!(record.size() == 1 && record[0].empty())) records.push_back(record);
      record.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  if (!cell.empty() || !record.empty()) {
    record.push_back(cell);
    records.push_back(record);
  }

  Table table;
  if (records.empty()) return table;
  table.header = records.front();
  for (std::size_t r = 1; r < records.size(); ++r) {
    std::map<std::string, std::string> row;
    for (std::size_t c = 0; c < table.header.size() && c < records[r].size(); ++c) {
      row[table.header[c]] = records[r][c];
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<std::string> cell_values(const std::string& cell) {
  std::vector<std::string> out;
  std::stringstream in(cell);
  std::string part;
  while (std::getline(in, part, ';')) {
    auto first = part.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    auto last = part.find_last_not_of(" \t");
    out.push_back(part.substr(first, last - first + 1));
  }
  return out;
}

std::set<std::string> word_tokens(const std::string& text) {
  std::set<std::string> out;
  std::string token;
  for (char c : text + " ") {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      token += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!token.empty()) {
      out.insert(token);
      token.clear();
    }
  }
  return out;
}

std::set<std::string> labels(const vison::Ontology& ontology, const std::set<std::string>& ids) {
  std::set<std::string> out;
  for (const auto& id : ids) out.insert(ontology.find_individual(id)->label);
  return out;
}

std::set<std::string> labels(const vison::Ontology& ontology, const std::vector<std::string>& ids) {
  return labels(ontology, std::set<std::string>(ids.begin(), ids.end()));
}

vison::MetricsReport oracle_metrics(const vison::OntologyParts& parts) {
  vison::MetricsReport m;
  for (const auto& c : parts.classes) {
    if (c.id == "thing") continue;
    m.class_count += 1;
    for (const auto& p : c.parents) m.subclassof_count += p == "thing" ? 0 : 1;
  }
  m.disjointclasses_count = parts.disjoint_groups.size();
  for (const auto& p : parts.properties) {
    m.property_count += 1;
    m.subobjectpropertyof_count += p.super_property.has_value();
    m.objectpropertydomain_count += p.domain.has_value();
    m.objectpropertyrange_count += p.range.has_value();
  }
  for (const auto& i : parts.individuals) {
    m.individual_count += 1;
    m.classassertion_count += i.asserted_classes.size();
    m.objectpropertyassertion_count += i.property_assertions.size();
    m.negativeobjectpropertyassertion_count += i.negative_assertions.size();
  }
  m.declaration_axiom_count = m.class_count + m.property_count + m.individual_count;
  m.logical_axiom_count = m.subclassof_count + m.disjointclasses_count + m.subobjectpropertyof_count +
                          m.objectpropertydomain_count + m.objectpropertyrange_count + m.classassertion_count +
                          m.objectpropertyassertion_count + m.negativeobjectpropertyassertion_count;
  m.axiom_count = m.logical_axiom_count + m.declaration_axiom_count;
  return m;
}

std::set<std::string> bfs_ancestors(const vison::OntologyParts& parts, const std::string& cls) {
  std::map<std::string, std::set<std::string>> parents;
  for (const auto& c : parts.classes) parents[c.id] = c.parents;
  std::set<std::string> seen;
  std::deque<std::string> queue{cls};
  while (!queue.empty()) {
    std::string current = queue.front();
    queue.pop_front();
    for (const auto& p : parents[current]) {
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  seen.erase(cls);
  return seen;
}

}  // namespace support
