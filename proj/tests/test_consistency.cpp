#include "doctest.h"

#include "support.hpp"
#include "vison/consistency.hpp"

using namespace vison;

TEST_CASE("seed ontology is consistent") {
  ConsistencyReport report = check_consistency(support::seed());
  CHECK(report.consistent());
  CHECK(report.violations.empty());
}

TEST_CASE("a parent cycle injected at load time is named") {
  OntologyParts parts = support::seed().disassemble();
  for (auto& c : parts.classes) {
    if (c.id == "task") c.parents = {"question"};
    if (c.id == "question") c.parents = {"task"};
  }
  ConsistencyReport report = check_consistency(Ontology::assemble(parts));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::HierarchyCycle);
  CHECK(report.violations[0].subjects == std::vector<std::string>{"question", "task"});
}

TEST_CASE("a super-property cycle is a hierarchy cycle") {
  OntologyParts parts;
  parts.properties.push_back({"p", "p", PropertyKind::Object, {}, {}, "q"});
  parts.properties.push_back({"q", "q", PropertyKind::Object, {}, {}, "p"});
  ConsistencyReport report = check_consistency(Ontology::assemble(parts));
  CHECK(report.count(ViolationKind::HierarchyCycle) == 1);
  CHECK(report.violations.size() == 1);
}

TEST_CASE("dual membership in disjoint aspect classes") {
  Ontology o = support::seed();
  o.assert_membership("gzoltar", "structure-tool");
  ConsistencyReport report = check_consistency(o);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::DisjointnessConflict);
  CHECK(report.violations[0].subjects.front() == "gzoltar");
}

TEST_CASE("brute-force scan finds the same disjointness conflicts") {
  Ontology o;
  o.declare_class("aspect", "Aspect");
  for (const char* id : {"behavior", "structure", "evolution"}) o.declare_class(id, id, {"aspect"});
  o.assert_disjoint("behavior", "structure");
  o.assert_disjoint("structure", "evolution");
  const char* memberships[][2] = {{"a", "behavior"}, {"a", "structure"}, {"b", "behavior"}, {"b", "evolution"},
                                  {"c", "structure"}, {"c", "evolution"}, {"d", "aspect"}};
  for (auto [ind, cls] : memberships) {
    if (o.find_individual(ind) == nullptr) o.declare_individual(ind, ind);
    o.assert_membership(ind, cls);
  }
  std::size_t expected = 0;
  for (const auto& [id, ind] : o.individuals()) {
    auto types = o.types_of(id);
    for (const auto& [cls, def] : o.classes()) {
      for (const auto& other : def.disjoint_with) {
        if (cls < other && types.contains(cls) && types.contains(other)) ++expected;
      }
    }
  }
  CHECK(expected == 2);
  CHECK(check_consistency(o).count(ViolationKind::DisjointnessConflict) == expected);
}

TEST_CASE("positive and negative assertion of one triple") {
  Ontology o = support::seed();
  o.assert_property_value("gzoltar", "hasmedium", std::string("scs"), Polarity::Negative);
  ConsistencyReport report = check_consistency(o);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::AssertionContradiction);
}

TEST_CASE("domain and range are checked under closed-world membership") {
  Ontology o;
  o.declare_class("tool", "Tool");
  o.declare_class("medium", "Medium");
  o.declare_property({"hascharacteristic", "c", PropertyKind::Object, "tool", {}, {}});
  o.declare_property({"hasmedium", "m", PropertyKind::Object, {}, "medium", "hascharacteristic"});
  o.declare_individual("t", "T");
  o.declare_individual("scs", "SCS");
  o.declare_individual("stray", "Stray");
  o.assert_membership("t", "tool");
  o.assert_membership("scs", "medium");
  o.assert_property_value("t", "hasmedium", std::string("scs"));
  CHECK(check_consistency(o).consistent());

  o.assert_property_value("stray", "hasmedium", std::string("t"));
  ConsistencyReport report = check_consistency(o);
  CHECK(report.count(ViolationKind::DomainViolation) == 1);
  CHECK(report.count(ViolationKind::RangeViolation) == 1);
  CHECK(report.violations.size() == 2);
}

TEST_CASE("dangling references in assembled parts") {
  OntologyParts parts;
  parts.classes.push_back({"a", "A", {"ghost"}, {}});
  Individual i;
  i.id = "x";
  i.label = "X";
  i.asserted_classes = {"phantom"};
  i.property_assertions = {{"missing", std::string("nobody")}};
  parts.individuals.push_back(i);
  ConsistencyReport report = check_consistency(Ontology::assemble(parts));
  CHECK(report.count(ViolationKind::DanglingReference) >= 3);
  CHECK(report.count(ViolationKind::DanglingReference) == report.violations.size());
}

TEST_CASE("reports are deterministic") {
  Ontology o = support::seed();
  o.assert_membership("gzoltar", "structure-tool");
  o.assert_property_value("cityvr", "hasmedium", std::string("i3d"), Polarity::Negative);
  CHECK(check_consistency(o).violations == check_consistency(o).violations);
}
