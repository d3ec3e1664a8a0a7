#pragma once

#include <cstddef>

#include "vison/ontology.hpp"

namespace vison {

// Axiom counts in the categories of an ontology-editor metrics view. Integer
// assertions and data-property domains are folded into the object-property
// rows since there are no separate data-property rows.
struct MetricsReport {
  std::size_t axiom_count = 0;
  std::size_t logical_axiom_count = 0;
  std::size_t declaration_axiom_count = 0;
  std::size_t class_count = 0;
  std::size_t property_count = 0;
  std::size_t individual_count = 0;
  std::size_t subclassof_count = 0;
  std::size_t disjointclasses_count = 0;
  std::size_t subobjectpropertyof_count = 0;
  std::size_t objectpropertydomain_count = 0;
  std::size_t objectpropertyrange_count = 0;
  std::size_t classassertion_count = 0;
  std::size_t objectpropertyassertion_count = 0;
  std::size_t negativeobjectpropertyassertion_count = 0;

  bool operator==(const MetricsReport&) const = default;

  // The three additive identities between the totals and the line items.
  bool identities_hold() const;
};

MetricsReport compute_metrics(const Ontology& ontology);

}  // namespace vison
