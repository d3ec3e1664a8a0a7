#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vison {

enum class Aspect { Behavior, Structure, Evolution, Combined };
enum class Medium { SCS, I3D };
enum class Evaluation { Experiment, UsageScenario, CaseStudy, Survey, Anecdotal, Theoretical, None };
enum class License { Free, Commercial, Unknown };

std::string_view to_string(Aspect value);
std::string_view to_string(Medium value);
std::string_view to_string(Evaluation value);
std::string_view to_string(License value);

// One normalized catalog row.
struct ToolRecord {
  std::string name;
  Aspect aspect = Aspect::Behavior;
  std::int64_t year = 0;  // last update
  std::string concern;
  std::set<std::string> concern_keywords;
  std::set<std::string> environments;
  std::set<std::string> techniques;
  std::set<Medium> media;
  std::set<Evaluation> evaluations;
  std::string url;
  std::optional<License> license;

  bool operator==(const ToolRecord&) const = default;
};

enum class Severity { Warning, Error };

std::string_view to_string(Severity severity);

struct CatalogIssue {
  std::size_t row = 0;  // 1-based data row; 0 for whole-file issues
  Severity severity = Severity::Error;
  std::string message;

  bool operator==(const CatalogIssue&) const = default;
};

enum class CatalogErrorCode { MalformedCsv, BadHeader };

class CatalogError : public std::runtime_error {
 public:
  CatalogError(CatalogErrorCode code, std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(message), code_(code), line_(line), column_(column) {}

  CatalogErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  CatalogErrorCode code_;
  std::size_t line_;
  std::size_t column_;
};

inline constexpr std::string_view kCatalogHeader =
    "name,aspect,year,concern,environment,technique,medium,evaluation,url";
inline constexpr std::string_view kCatalogLicenseColumn = "license";

struct RawRow {
  std::size_t row = 0;   // 1-based data row
  std::size_t line = 0;  // source line
  // Nine columns in header order, plus license when the header has it.
  std::vector<std::string> fields;
};

// Validates the header exactly and splits data rows. Throws CatalogError.
std::vector<RawRow> parse_catalog(std::string_view bytes);

struct NormalizedRow {
  ToolRecord record;
  std::vector<CatalogIssue> issues;
};

// Splits multi-valued cells on ';', expands the fixed abbreviation dictionary
// and maps enum columns. Unknown abbreviations are kept with a warning;
// unknown enum values are errors.
NormalizedRow normalize_record(const RawRow& row);

// Lowercase alphanumeric tokens of a concern, minus the shipped stopwords.
std::set<std::string> concern_keywords(std::string_view concern);
const std::set<std::string>& concern_stopwords();

// Inclusion criteria and record invariants: names (C1), URLs (C2), year range,
// non-empty facets. Issues come out in row order.
std::vector<CatalogIssue> validate_catalog(const std::vector<ToolRecord>& records,
                                           std::int64_t current_year);
std::vector<CatalogIssue> validate_catalog(const std::vector<ToolRecord>& records);

// Stable identifiers: slug of the name, with "-<year>" appended to every member
// of a colliding group (two tools called Jive become jive-2016 and jive-2007).
std::vector<std::string> assign_tool_slugs(const std::vector<ToolRecord>& records);

struct CatalogLoad {
  std::vector<ToolRecord> records;
  std::vector<CatalogIssue> issues;

  bool has_errors() const;
};

// parse + normalize + validate.
CatalogLoad load_catalog(std::string_view bytes);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Whole-file read; throws IoError.
std::string read_text_file(const std::string& path);

}  // namespace vison
