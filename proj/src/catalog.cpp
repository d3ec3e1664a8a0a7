#include "vison/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "vison/csv.hpp"
#include "vison/slug.hpp"

namespace vison {

std::string_view to_string(Aspect value) {
  switch (value) {
    case Aspect::Behavior: return "Behavior";
    case Aspect::Structure: return "Structure";
    case Aspect::Evolution: return "Evolution";
    case Aspect::Combined: return "Combined";
  }
  return "?";
}

std::string_view to_string(Medium value) { return value == Medium::SCS ? "SCS" : "I3D"; }

std::string_view to_string(Evaluation value) {
  switch (value) {
    case Evaluation::Experiment: return "Experiment";
    case Evaluation::UsageScenario: return "UsageScenario";
    case Evaluation::CaseStudy: return "CaseStudy";
    case Evaluation::Survey: return "Survey";
    case Evaluation::Anecdotal: return "Anecdotal";
    case Evaluation::Theoretical: return "Theoretical";
    case Evaluation::None: return "None";
  }
  return "?";
}

std::string_view to_string(License value) {
  switch (value) {
    case License::Free: return "Free";
    case License::Commercial: return "Commercial";
    case License::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(Severity severity) {
  return severity == Severity::Warning ? "warning" : "error";
}

namespace {

enum Column { kName, kAspect, kYear, kConcern, kEnvironment, kTechnique, kMedium, kEvaluation, kUrl, kLicense };

// Keys are lowercased with whitespace collapsed.
const std::map<std::string, std::string>& environment_abbreviations() {
  static const std::map<std::string, std::string> table{
      {"ecli.", "Eclipse"},
      {"vs", "VisualStudio"},
      {"u.", "Unity"},
  };
  return table;
}

const std::map<std::string, std::string>& technique_abbreviations() {
  static const std::map<std::string, std::string> table{
      {"node-l", "Node-link"},
      {"node-l.", "Node-link"},
      {"aug. source code", "Augmented source code"},
      {"aug. src.", "Augmented source code"},
      {"aug.src.", "Augmented source code"},
      {"anim. node-link", "Animated node-link"},
  };
  return table;
}

const std::map<std::string, Evaluation>& evaluation_names() {
  static const std::map<std::string, Evaluation> table{
      {"exp.", Evaluation::Experiment},
      {"experiment", Evaluation::Experiment},
      {"usage scen.", Evaluation::UsageScenario},
      {"usagescenario", Evaluation::UsageScenario},
      {"usage scenario", Evaluation::UsageScenario},
      {"case study", Evaluation::CaseStudy},
      {"casestudy", Evaluation::CaseStudy},
      {"survey", Evaluation::Survey},
      {"anecdotal", Evaluation::Anecdotal},
      {"theoretical", Evaluation::Theoretical},
      {"n/a", Evaluation::None},
      {"none", Evaluation::None},
  };
  return table;
}

std::string key_of(std::string_view value) { return to_lower(collapse_whitespace(value)); }

std::vector<std::string> split_cell(std::string_view cell) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= cell.size()) {
    std::size_t end = cell.find(';', start);
    if (end == std::string_view::npos) end = cell.size();
    std::string part = collapse_whitespace(cell.substr(start, end - start));
    if (!part.empty()) parts.push_back(std::move(part));
    start = end + 1;
  }
  return parts;
}

std::string capitalize(std::string value) {
  if (!value.empty()) value.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(value.front())));
  return value;
}

class RowNormalizer {
 public:
  explicit RowNormalizer(const RawRow& row) : row_(row) {}

  NormalizedRow run() {
    ToolRecord& r = out_.record;
    r.name = collapse_whitespace(field(kName));
    r.aspect = aspect(field(kAspect));
    r.year = year(field(kYear));
    r.concern = collapse_whitespace(field(kConcern));
    r.concern_keywords = concern_keywords(r.concern);
    r.environments = free_values(field(kEnvironment), environment_abbreviations(), "environment");
    r.techniques = free_values(field(kTechnique), technique_abbreviations(), "technique");
    r.media = media(field(kMedium));
    r.evaluations = evaluations(field(kEvaluation));
    r.url = trim(field(kUrl));
    if (row_.fields.size() > kLicense) r.license = license(field(kLicense));
    return std::move(out_);
  }

 private:
  std::string_view field(Column column) const {
    return column < row_.fields.size() ? std::string_view(row_.fields[column]) : std::string_view();
  }

  void issue(Severity severity, std::string message) {
    out_.issues.push_back({row_.row, severity, std::move(message)});
  }

  Aspect aspect(std::string_view raw) {
    std::string key = key_of(raw);
    if (key == "behavior") return Aspect::Behavior;
    if (key == "structure") return Aspect::Structure;
    if (key == "evolution") return Aspect::Evolution;
    if (key == "combined" || key == "e.-s.-b.") return Aspect::Combined;
    issue(Severity::Error, "unknown aspect '" + std::string(raw) + "'");
    return Aspect::Behavior;
  }

  std::int64_t year(std::string_view raw) {
    std::string text = trim(raw);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
      issue(Severity::Error, "year '" + text + "' is not an integer");
      return 0;
    }
    return value;
  }

  std::set<std::string> free_values(std::string_view cell, const std::map<std::string, std::string>& dictionary,
                                    std::string_view column) {
    std::set<std::string> values;
    for (auto& part : split_cell(cell)) {
      auto it = dictionary.find(key_of(part));
      if (it != dictionary.end()) {
        values.insert(it->second);
        continue;
      }
      if (part.find('.') != std::string::npos) {
        issue(Severity::Warning, "unknown abbreviation '" + part + "' in " + std::string(column) +
                                     "; kept verbatim");
      }
      values.insert(capitalize(std::move(part)));
    }
    return values;
  }

  std::set<Medium> media(std::string_view cell) {
    std::set<Medium> values;
    for (const auto& part : split_cell(cell)) {
      std::string key = key_of(part);
      if (key == "scs") {
        values.insert(Medium::SCS);
      } else if (key == "i3d") {
        values.insert(Medium::I3D);
      } else if (key == "s/i") {
        values.insert({Medium::SCS, Medium::I3D});
      } else {
        issue(Severity::Error, "unknown medium '" + part + "'");
      }
    }
    return values;
  }

  std::set<Evaluation> evaluations(std::string_view cell) {
    std::set<Evaluation> values;
    for (const auto& part : split_cell(cell)) {
      auto it = evaluation_names().find(key_of(part));
      if (it == evaluation_names().end()) {
        issue(Severity::Error, "unknown evaluation '" + part + "'");
      } else {
        values.insert(it->second);
      }
    }
    return values;
  }

  std::optional<License> license(std::string_view raw) {
    std::string key = key_of(raw);
    if (key.empty()) return std::nullopt;
    if (key == "free") return License::Free;
    if (key == "commercial") return License::Commercial;
    if (key == "unknown") return License::Unknown;
    issue(Severity::Error, "unknown license '" + std::string(raw) + "'");
    return std::nullopt;
  }

  const RawRow& row_;
  NormalizedRow out_;
};

std::int64_t this_year() {
  using namespace std::chrono;
  return static_cast<int>(year_month_day(floor<days>(system_clock::now())).year());
}

}  // namespace

std::vector<RawRow> parse_catalog(std::string_view bytes) {
  std::vector<CsvRecord> records;
  try {
    records = read_csv(bytes);
  } catch (const CsvError& e) {
    throw CatalogError(CatalogErrorCode::MalformedCsv, e.line(), e.column(),
                       std::string("malformed CSV: ") + e.what());
  }
  if (records.empty()) {
    throw CatalogError(CatalogErrorCode::BadHeader, 1, 1, "missing header");
  }
  std::string header;
  for (const auto& name : records.front().fields) header += (header.empty() ? "" : ",") + name;
  std::string with_license = std::string(kCatalogHeader) + "," + std::string(kCatalogLicenseColumn);
  if (header != kCatalogHeader && header != with_license) {
    throw CatalogError(CatalogErrorCode::BadHeader, records.front().line, 1,
                       "bad header '" + header + "'; expected '" + std::string(kCatalogHeader) +
                           "[,license]'");
  }
  const std::size_t width = records.front().fields.size();
  std::vector<RawRow> rows;
  rows.reserve(records.size() - 1);
  for (std::size_t i = 1; i < records.size(); ++i) {
    auto& record = records[i];
    if (record.fields.size() != width) {
      throw CatalogError(CatalogErrorCode::MalformedCsv, record.line,
                         std::min(record.fields.size(), width) + 1,
                         "malformed CSV: line " + std::to_string(record.line) + " has " +
                             std::to_string(record.fields.size()) + " fields, expected " +
                             std::to_string(width));
    }
    rows.push_back({i, record.line, std::move(record.fields)});
  }
  return rows;
}

NormalizedRow normalize_record(const RawRow& row) { return RowNormalizer(row).run(); }

const std::set<std::string>& concern_stopwords() {
  // Articles, prepositions and the query keywords (which can never be names).
  static const std::set<std::string> words{
      "a",    "an",   "the",  "of",   "for",  "in",     "on",     "at",   "to",   "by",
      "with", "from", "into", "during", "within", "based", "and",  "or",   "not",  "value",
      "some", "s",
  };
  return words;
}

std::set<std::string> concern_keywords(std::string_view concern) {
  std::set<std::string> out;
  std::string token;
  auto flush = [&] {
    if (!token.empty() && !concern_stopwords().contains(token)) out.insert(token);
    token.clear();
  };
  for (char raw : concern) {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(raw)));
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      token.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  return out;
}

std::vector<std::string> assign_tool_slugs(const std::vector<ToolRecord>& records) {
  std::vector<std::string> slugs;
  std::map<std::string, std::size_t> uses;
  for (const auto& record : records) {
    slugs.push_back(slugify(record.name));
    ++uses[slugs.back()];
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (uses[slugs[i]] > 1) slugs[i] = slugify(slugs[i] + "-" + std::to_string(records[i].year));
  }
  // Same name and year is a validation error; keep the ids distinct regardless.
  std::map<std::string, std::size_t> seen;
  for (auto& slug : slugs) {
    std::size_t n = ++seen[slug];
    if (n > 1) slug += "-" + std::to_string(n);
  }
  return slugs;
}

std::vector<CatalogIssue> validate_catalog(const std::vector<ToolRecord>& records, std::int64_t current_year) {
  std::vector<CatalogIssue> issues;
  std::map<std::pair<std::string, std::int64_t>, std::size_t> first_row;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const ToolRecord& r = records[i];
    const std::size_t row = i + 1;
    auto error = [&](std::string message) { issues.push_back({row, Severity::Error, std::move(message)}); };
    auto warning = [&](std::string message) { issues.push_back({row, Severity::Warning, std::move(message)}); };

    if (r.name.empty()) {
      error("tool has no name (C1: identified with a name)");
    } else if (slugify(r.name).empty()) {
      error("tool name '" + r.name + "' yields no identifier characters (C1: identified with a name)");
    } else {
      auto [it, fresh] = first_row.emplace(std::make_pair(to_lower(r.name), r.year), row);
      if (!fresh) {
        error("duplicate tool '" + r.name + "' (" + std::to_string(r.year) + "), first seen in row " +
              std::to_string(it->second) + " (C1: identified with a name)");
      }
    }
    if (r.url.empty()) {
      error("tool '" + r.name + "' has no URL (C2: publicly available on the internet)");
    }
    if (r.year < 1990 || r.year > current_year) {
      error("year " + std::to_string(r.year) + " of '" + r.name + "' is outside [1990, " +
            std::to_string(current_year) + "]");
    }
    if (r.media.empty()) error("tool '" + r.name + "' has no medium");
    if (r.environments.empty()) warning("tool '" + r.name + "' has no environment");
    if (r.techniques.empty()) warning("tool '" + r.name + "' has no technique");
    if (r.evaluations.empty()) warning("tool '" + r.name + "' has no evaluation");
    if (r.concern.empty()) warning("tool '" + r.name + "' has no concern");
  }
  return issues;
}

std::vector<CatalogIssue> validate_catalog(const std::vector<ToolRecord>& records) {
  return validate_catalog(records, this_year());
}

bool CatalogLoad::has_errors() const {
  for (const auto& issue : issues) {
    if (issue.severity == Severity::Error) return true;
  }
  return false;
}

CatalogLoad load_catalog(std::string_view bytes) {
  CatalogLoad load;
  for (const auto& row : parse_catalog(bytes)) {
    auto normalized = normalize_record(row);
    load.records.push_back(std::move(normalized.record));
    for (auto& issue : normalized.issues) load.issues.push_back(std::move(issue));
  }
  for (auto& issue : validate_catalog(load.records)) load.issues.push_back(std::move(issue));
  std::stable_sort(load.issues.begin(), load.issues.end(),
                   [](const CatalogIssue& a, const CatalogIssue& b) { return a.row < b.row; });
  return load;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buffer.str();
}

}  // namespace vison
