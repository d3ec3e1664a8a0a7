#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vison/ontology.hpp"

namespace vison {

enum class ViolationKind {
  HierarchyCycle,
  DisjointnessConflict,
  AssertionContradiction,
  DomainViolation,
  RangeViolation,
  DanglingReference,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::string> subjects;
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ConsistencyReport {
  std::vector<Violation> violations;

  bool consistent() const { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
};

// Deterministic and complete: violations come out grouped by kind, then in id order.
// Membership is closed-world: an individual belongs to a domain or range only
// through asserted classes and their ancestors.
ConsistencyReport check_consistency(const Ontology& ontology);

}  // namespace vison
