#include "doctest.h"

#include <algorithm>

#include "support.hpp"
#include "vison/builder.hpp"
#include "vison/catalog.hpp"
#include "vison/csv.hpp"
#include "vison/query.hpp"
#include "vison/schema.hpp"
#include "vison/snapshot.hpp"

using namespace vison;

namespace {

const std::string kHeader = "name,aspect,year,concern,environment,technique,medium,evaluation,url\n";

RawRow raw(std::vector<std::string> fields) { return RawRow{1, 2, std::move(fields)}; }

std::vector<std::string> gzoltar_fields() {
  return {"Gzoltar", "Behavior", "2017", "Fault localization for debugging Java progs.", "Java;Ecli.",
          "Icicle; treemap", "SCS", "Experiment", "http://www.gzoltar.com"};
}

bool has_issue(const std::vector<CatalogIssue>& issues, Severity severity, const std::string& fragment) {
  return std::any_of(issues.begin(), issues.end(), [&](const CatalogIssue& i) {
    return i.severity == severity && i.message.find(fragment) != std::string::npos;
  });
}

ToolRecord record(const std::string& name, std::int64_t year, const std::string& url = "https://example.org") {
  ToolRecord r;
  r.name = name;
  r.year = year;
  r.url = url;
  r.media = {Medium::SCS};
  r.environments = {"Java"};
  r.techniques = {"Pixel"};
  r.evaluations = {Evaluation::Experiment};
  r.concern = "Testing";
  return r;
}

}  // namespace

TEST_CASE("csv reader handles quoting, CRLF and blank lines") {
  auto rows = read_csv("a,\"b,c\",\"say \"\"hi\"\"\"\r\n\r\nx,,z\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].fields == std::vector<std::string>{"a", "b,c", "say \"hi\""});
  CHECK(rows[1].fields == std::vector<std::string>{"x", "", "z"});
  CHECK(rows[1].line == 3);
  CHECK(read_csv("\xEF\xBB\xBFh\n")[0].fields == std::vector<std::string>{"h"});
  CHECK(read_csv("\"multi\nline\",b\nnext\n")[1].line == 3);
}

TEST_CASE("csv reader rejects malformed input") {
  CHECK_THROWS_AS(read_csv("a,b\"c\n"), CsvError);
  CHECK_THROWS_AS(read_csv("\"open\n"), CsvError);
  CHECK_THROWS_AS(read_csv("\"a\"b\n"), CsvError);
  CHECK_THROWS_AS(read_csv("bad \xFF byte\n"), CsvError);
  try {
    read_csv("ok\nx,\"a\"b\n");
  } catch (const CsvError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("csv writer round-trips") {
  std::vector<std::string> fields{"plain", "with,comma", "with \"quote\"", ""};
  CHECK(read_csv(write_csv_row(fields))[0].fields == fields);
}

TEST_CASE("parse_catalog on the seed yields 70 rows") {
  auto rows = parse_catalog(support::read_file(support::data_path("catalog.csv")));
  CHECK(rows.size() == 70);
  CHECK(rows.front().row == 1);
  CHECK(rows.front().fields.size() == 9);
}

TEST_CASE("header only means no rows") { CHECK(parse_catalog(kHeader).empty()); }

TEST_CASE("short rows and bad headers") {
  try {
    parse_catalog(kHeader + "A,Behavior,2017,c,Java,Pixel,SCS\n");
    FAIL("expected malformed-csv");
  } catch (const CatalogError& e) {
    CHECK(e.code() == CatalogErrorCode::MalformedCsv);
    CHECK(e.line() == 2);
  }
  try {
    parse_catalog("name,aspect,year\n");
    FAIL("expected bad-header");
  } catch (const CatalogError& e) {
    CHECK(e.code() == CatalogErrorCode::BadHeader);
  }
  CHECK_THROWS_AS(parse_catalog(""), CatalogError);
  CHECK(parse_catalog(kHeader.substr(0, kHeader.size() - 1) + ",license\n").empty());
}

TEST_CASE("normalize the Gzoltar row") {
  NormalizedRow n = normalize_record(raw(gzoltar_fields()));
  CHECK(n.issues.empty());
  CHECK(n.record.environments == std::set<std::string>{"Java", "Eclipse"});
  CHECK(n.record.techniques == std::set<std::string>{"Icicle", "Treemap"});
  CHECK(n.record.aspect == Aspect::Behavior);
  CHECK(n.record.year == 2017);
  CHECK(n.record.evaluations == std::set<Evaluation>{Evaluation::Experiment});
  CHECK(n.record.concern_keywords ==
        std::set<std::string>{"fault", "localization", "debugging", "java", "progs"});
}

TEST_CASE("abbreviation dictionary") {
  auto fields = gzoltar_fields();
  fields[1] = "E.-S.-B.";
  fields[4] = "Ecli.; VS";
  fields[5] = "Node-L; Aug. src.";
  fields[6] = "S/I";
  fields[7] = "Exp.; Survey";
  NormalizedRow n = normalize_record(raw(fields));
  CHECK(n.issues.empty());
  CHECK(n.record.aspect == Aspect::Combined);
  CHECK(n.record.environments == std::set<std::string>{"Eclipse", "VisualStudio"});
  CHECK(n.record.techniques == std::set<std::string>{"Node-link", "Augmented source code"});
  CHECK(n.record.media == std::set<Medium>{Medium::SCS, Medium::I3D});
  CHECK(n.record.evaluations == std::set<Evaluation>{Evaluation::Experiment, Evaluation::Survey});

  fields[7] = "Usage Scen.";
  CHECK(normalize_record(raw(fields)).record.evaluations == std::set<Evaluation>{Evaluation::UsageScenario});
  fields[7] = "N/A";
  CHECK(normalize_record(raw(fields)).record.evaluations == std::set<Evaluation>{Evaluation::None});
}

TEST_CASE("unknown abbreviations warn, unknown enum values are errors") {
  auto fields = gzoltar_fields();
  fields[4] = "Java; Xyz.";
  NormalizedRow n = normalize_record(raw(fields));
  CHECK(n.record.environments.contains("Xyz."));
  CHECK(has_issue(n.issues, Severity::Warning, "Xyz."));
  CHECK_FALSE(has_issue(n.issues, Severity::Error, ""));

  fields = gzoltar_fields();
  fields[6] = "Hologram";
  CHECK(has_issue(normalize_record(raw(fields)).issues, Severity::Error, "Hologram"));
  fields = gzoltar_fields();
  fields[1] = "Behaviour";
  CHECK(has_issue(normalize_record(raw(fields)).issues, Severity::Error, "Behaviour"));
  fields = gzoltar_fields();
  fields[7] = "Vibes";
  CHECK(has_issue(normalize_record(raw(fields)).issues, Severity::Error, "Vibes"));
  fields = gzoltar_fields();
  fields[2] = "20x7";
  CHECK(has_issue(normalize_record(raw(fields)).issues, Severity::Error, "20x7"));
}

TEST_CASE("license column") {
  auto fields = gzoltar_fields();
  fields.push_back("free");
  CHECK(normalize_record(raw(fields)).record.license == License::Free);
  fields.back() = "";
  CHECK_FALSE(normalize_record(raw(fields)).record.license.has_value());
  fields.back() = "shareware";
  CHECK(has_issue(normalize_record(raw(fields)).issues, Severity::Error, "shareware"));
}

TEST_CASE("concern keywords drop stopwords and punctuation") {
  CHECK(concern_keywords("Concepts for teaching networks in CS") ==
        std::set<std::string>{"concepts", "teaching", "networks", "cs"});
  CHECK(concern_keywords("Flask Python Web services performance") ==
        std::set<std::string>{"flask", "python", "web", "services", "performance"});
  CHECK(concern_keywords("").empty());
  for (const auto& word : {"and", "or", "not", "value", "some"}) CHECK(concern_stopwords().contains(word));
}

TEST_CASE("seed validates with zero issues") {
  CatalogLoad load = load_catalog(support::read_file(support::data_path("catalog.csv")));
  CHECK(load.records.size() == 70);
  CHECK(load.issues.empty());
  CHECK_FALSE(load.has_errors());
}

TEST_CASE("the two Jive tools are distinct and get year slugs") {
  CatalogLoad load = load_catalog(support::read_file(support::data_path("catalog.csv")));
  auto slugs = assign_tool_slugs(load.records);
  CHECK(std::count(slugs.begin(), slugs.end(), "jive-2016") == 1);
  CHECK(std::count(slugs.begin(), slugs.end(), "jive-2007") == 1);
  CHECK(std::set<std::string>(slugs.begin(), slugs.end()).size() == 70);
}

TEST_CASE("slug collisions beyond the year") {
  auto slugs = assign_tool_slugs({record("Tool A", 2010), record("tool-a", 2010), record("Tool A", 2012),
                                  record("Other", 2010)});
  CHECK(slugs == std::vector<std::string>{"tool-a-2010", "tool-a-2010-2", "tool-a-2012", "other"});
}

TEST_CASE("validation rules") {
  auto issues = validate_catalog({record("A", 2017, "")}, 2026);
  CHECK(has_issue(issues, Severity::Error, "C2"));

  issues = validate_catalog({record("", 2017)}, 2026);
  CHECK(has_issue(issues, Severity::Error, "C1"));

  issues = validate_catalog({record("A", 2017), record("A", 2017)}, 2026);
  CHECK(has_issue(issues, Severity::Error, "duplicate"));
  CHECK(issues.front().row == 2);

  CHECK(validate_catalog({record("Jive", 2016), record("Jive", 2007)}, 2026).empty());

  CHECK(has_issue(validate_catalog({record("A", 1989)}, 2026), Severity::Error, "outside"));
  CHECK(has_issue(validate_catalog({record("A", 2027)}, 2026), Severity::Error, "outside"));
  CHECK(validate_catalog({record("A", 1990), record("B", 2026)}, 2026).empty());

  ToolRecord bare = record("A", 2017);
  bare.media.clear();
  bare.environments.clear();
  bare.concern.clear();
  issues = validate_catalog({bare}, 2026);
  CHECK(has_issue(issues, Severity::Error, "medium"));
  CHECK(has_issue(issues, Severity::Warning, "environment"));
  CHECK(has_issue(issues, Severity::Warning, "concern"));
  CHECK(validate_catalog({bare}, 2026) == issues);
}

TEST_CASE("identical bytes give an identical ontology and snapshot") {
  Ontology a = support::build_catalog(support::data_path("catalog.csv"));
  Ontology b = support::build_catalog(support::data_path("catalog.csv"));
  CHECK(a == b);
  CHECK(write_snapshot(a) == write_snapshot(b));
}

TEST_CASE("records survive a trip through the ontology") {
  CatalogLoad load = load_catalog(support::read_file(support::data_path("catalog.csv")));
  std::vector<ToolRecord> exported = export_records(support::seed());
  auto by_name_year = [](const ToolRecord& x, const ToolRecord& y) {
    return std::tie(x.name, x.year) < std::tie(y.name, y.year);
  };
  std::vector<ToolRecord> original = load.records;
  std::sort(original.begin(), original.end(), by_name_year);
  std::sort(exported.begin(), exported.end(), by_name_year);
  REQUIRE(original.size() == exported.size());
  for (std::size_t i = 0; i < original.size(); ++i) {
    INFO(original[i].name);
    CHECK(original[i] == exported[i]);
  }
}

TEST_CASE("schema errors carry lines") {
  const std::string header = std::string(kSchemaHeader) + "\n";
  CHECK_THROWS_AS(parse_schema("kind,id\n"), SchemaError);
  try {
    schema_ontology(parse_schema(header + "class,a,A,thing,\nclass,b,B,missing,\n"));
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_schema(header + "widget,a,A,,\n"), SchemaError);
  CHECK_THROWS_AS(build_ontology({}, parse_schema(header + "class,a,A,thing,\n")), BuildError);
}

TEST_CASE("a tool named like a schema individual is refused") {
  Schema schema = parse_schema(support::read_file(support::data_path("schema.csv")));
  CHECK_THROWS_AS(build_ontology({record("Survey", 2017)}, schema), BuildError);
}

// Each value atom on the seed answers exactly the rows a direct scan of the
// CSV text selects.
TEST_CASE("value atoms agree with a scan of the catalog text") {
  const Ontology& o = support::seed();
  support::Table table = support::scan_csv(support::data_path("catalog.csv"));
  REQUIRE(table.rows.size() == 70);
  auto rows_where = [&](auto predicate) {
    std::set<std::string> out;
    for (const auto& row : table.rows) {
      if (predicate(row)) out.insert(row.at("name"));
    }
    return out;
  };
  auto answer = [&](const std::string& q) { return support::labels(o, evaluate(parse_query(q), o).matches); };
  auto cell_has = [](const std::string& cell, std::initializer_list<const char*> spellings) {
    for (const auto& v : support::cell_values(cell)) {
      for (const char* s : spellings) {
        if (v == s) return true;
      }
    }
    return false;
  };

  CHECK(answer("hasmedium value i3d") ==
        rows_where([&](const auto& r) { return cell_has(r.at("medium"), {"I3D", "S/I"}); }));
  CHECK(answer("hasmedium value scs") ==
        rows_where([&](const auto& r) { return cell_has(r.at("medium"), {"SCS", "S/I"}); }));
  CHECK(answer("runsin value eclipse") ==
        rows_where([&](const auto& r) { return cell_has(r.at("environment"), {"Eclipse", "Ecli."}); }));
  CHECK(answer("runsin value java") ==
        rows_where([&](const auto& r) { return cell_has(r.at("environment"), {"Java"}); }));
  CHECK(answer("usestechnique value node-link") ==
        rows_where([&](const auto& r) { return cell_has(r.at("technique"), {"Node-link", "Node-L", "Node-L."}); }));
  CHECK(answer("evaluatedby value experiment") ==
        rows_where([&](const auto& r) { return cell_has(r.at("evaluation"), {"Experiment", "Exp."}); }));
  CHECK(answer("evaluatedby value survey") ==
        rows_where([&](const auto& r) { return cell_has(r.at("evaluation"), {"Survey"}); }));
  CHECK(answer("aspectis value combined") ==
        rows_where([&](const auto& r) { return r.at("aspect") == "E.-S.-B."; }));
  CHECK(answer("hasdatasource value runtime") ==
        rows_where([&](const auto& r) { return r.at("aspect") == "Behavior" || r.at("aspect") == "E.-S.-B."; }));
  CHECK(answer("addressesconcernkeyword value debugging") ==
        rows_where([&](const auto& r) { return support::word_tokens(r.at("concern")).contains("debugging"); }));
  for (int year = 2000; year <= 2019; ++year) {
    std::string y = std::to_string(year);
    CHECK(answer("lastupdate = " + y) == rows_where([&](const auto& r) { return r.at("year") == y; }));
    CHECK(answer("lastupdate >= " + y) == rows_where([&](const auto& r) { return std::stoi(r.at("year")) >= year; }));
    CHECK(answer("lastupdate <= " + y) == rows_where([&](const auto& r) { return std::stoi(r.at("year")) <= year; }));
  }
}
