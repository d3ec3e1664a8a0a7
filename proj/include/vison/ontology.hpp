#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vison {

// Implicit universal root. Present in every ontology, never counted as a declared class.
inline constexpr std::string_view kRootClass = "thing";

enum class PropertyKind { Object, Integer };
enum class Polarity { Positive, Negative };

std::string_view to_string(PropertyKind kind);

struct ClassDef {
  std::string id;
  std::string label;
  std::set<std::string> parents;
  std::set<std::string> disjoint_with;

  bool operator==(const ClassDef&) const = default;
};

struct PropertyDef {
  std::string id;
  std::string label;
  PropertyKind kind = PropertyKind::Object;
  std::optional<std::string> domain;
  std::optional<std::string> range;
  std::optional<std::string> super_property;

  bool operator==(const PropertyDef&) const = default;
};

// Individual id for object-valued properties, literal for integer-valued ones.
using AssertionTarget = std::variant<std::string, std::int64_t>;

struct PropertyAssertion {
  std::string property;
  AssertionTarget target;

  auto operator<=>(const PropertyAssertion&) const = default;
  bool operator==(const PropertyAssertion&) const = default;
};

struct Individual {
  std::string id;
  std::string label;
  std::set<std::string> asserted_classes;
  std::set<PropertyAssertion> property_assertions;
  std::set<PropertyAssertion> negative_assertions;
  // Non-logical metadata (url, concern text). Not counted as axioms.
  std::map<std::string, std::string> annotations;

  bool operator==(const Individual&) const = default;
};

// One DisjointClasses axiom; expands to every pair of its members.
using DisjointGroup = std::set<std::string>;

enum class OntologyErrorCode {
  DuplicateId,
  InvalidId,
  UnknownClass,
  UnknownParent,
  UnknownProperty,
  UnknownIndividual,
  WouldCreateCycle,
  SelfDisjointness,
  KindMismatch,
};

std::string_view to_string(OntologyErrorCode code);

class OntologyError : public std::runtime_error {
 public:
  OntologyError(OntologyErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  OntologyErrorCode code() const noexcept { return code_; }

 private:
  OntologyErrorCode code_;
};

// Flat, unchecked view of an ontology. Used by snapshot I/O and by tests that
// need to inject states the mutation API refuses to produce (e.g. cycles).
struct OntologyParts {
  std::vector<ClassDef> classes;
  std::vector<PropertyDef> properties;
  std::vector<Individual> individuals;
  std::vector<DisjointGroup> disjoint_groups;
};

class Ontology {
 public:
  template <typename T>
  using Table = std::map<std::string, T, std::less<>>;

  Ontology();

  // Parents default to the root. Rejects duplicates, unknown parents and
  // anything that would close a cycle.
  const ClassDef& declare_class(std::string_view id, std::string_view label,
                                const std::set<std::string>& parents = {});
  // Adds one SubClassOf edge to an existing class.
  void add_parent(std::string_view cls, std::string_view parent);
  void assert_disjoint(std::string_view a, std::string_view b);
  void assert_disjoint_group(const DisjointGroup& members);

  const PropertyDef& declare_property(PropertyDef def);

  const Individual& declare_individual(std::string_view id, std::string_view label);
  void assert_membership(std::string_view individual, std::string_view cls);
  void assert_property_value(std::string_view individual, std::string_view property,
                             const AssertionTarget& target,
                             Polarity polarity = Polarity::Positive);
  void annotate(std::string_view individual, std::string_view key, std::string value);

  const ClassDef* find_class(std::string_view id) const;
  const PropertyDef* find_property(std::string_view id) const;
  const Individual* find_individual(std::string_view id) const;

  const Table<ClassDef>& classes() const { return classes_; }
  const Table<PropertyDef>& properties() const { return properties_; }
  const Table<Individual>& individuals() const { return individuals_; }
  const std::vector<DisjointGroup>& disjoint_groups() const { return disjoint_groups_; }

  // Strict ancestors along parent links. Contains the root for every non-root class.
  std::set<std::string> ancestors(std::string_view cls) const;
  // Strict descendants.
  std::set<std::string> descendants(std::string_view cls) const;
  // Individuals asserted into cls or any of its descendants.
  std::set<std::string> instances_of(std::string_view cls) const;
  // Asserted classes of an individual plus all their ancestors (root included).
  std::set<std::string> types_of(std::string_view individual) const;

  // Reflexive closure over super_property links.
  std::set<std::string> sub_properties(std::string_view property) const;
  std::set<std::string> super_properties(std::string_view property) const;

  // Builds without validation; disjoint_with is rebuilt from the groups and the
  // root is always added.
  static Ontology assemble(OntologyParts parts);
  OntologyParts disassemble() const;

  bool operator==(const Ontology&) const = default;

 private:
  ClassDef& class_ref(std::string_view id, OntologyErrorCode missing);
  Individual& individual_ref(std::string_view id);
  const PropertyDef& property_ref(std::string_view id) const;
  void require_fresh_id(std::string_view id, std::string_view what) const;

  Table<ClassDef> classes_;
  Table<PropertyDef> properties_;
  Table<Individual> individuals_;
  std::vector<DisjointGroup> disjoint_groups_;
};

}  // namespace vison
