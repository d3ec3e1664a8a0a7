#include "vison/metrics.hpp"

namespace vison {

bool MetricsReport::identities_hold() const {
  const std::size_t logical = subclassof_count + disjointclasses_count + subobjectpropertyof_count +
                              objectpropertydomain_count + objectpropertyrange_count +
                              classassertion_count + objectpropertyassertion_count +
                              negativeobjectpropertyassertion_count;
  return axiom_count == logical_axiom_count + declaration_axiom_count &&
         logical_axiom_count == logical &&
         declaration_axiom_count == class_count + property_count + individual_count;
}

MetricsReport compute_metrics(const Ontology& ontology) {
  MetricsReport m;
  for (const auto& [id, def] : ontology.classes()) {
    if (id == kRootClass) continue;
    ++m.class_count;
    for (const auto& parent : def.parents) {
      if (parent != kRootClass) ++m.subclassof_count;
    }
  }
  m.disjointclasses_count = ontology.disjoint_groups().size();
  for (const auto& [id, def] : ontology.properties()) {
    ++m.property_count;
    if (def.super_property) ++m.subobjectpropertyof_count;
    if (def.domain) ++m.objectpropertydomain_count;
    if (def.range) ++m.objectpropertyrange_count;
  }
  for (const auto& [id, individual] : ontology.individuals()) {
    ++m.individual_count;
    m.classassertion_count += individual.asserted_classes.size();
    m.objectpropertyassertion_count += individual.property_assertions.size();
    m.negativeobjectpropertyassertion_count += individual.negative_assertions.size();
  }
  m.declaration_axiom_count = m.class_count + m.property_count + m.individual_count;
  m.logical_axiom_count = m.subclassof_count + m.disjointclasses_count +
                          m.subobjectpropertyof_count + m.objectpropertydomain_count +
                          m.objectpropertyrange_count + m.classassertion_count +
                          m.objectpropertyassertion_count + m.negativeobjectpropertyassertion_count;
  m.axiom_count = m.logical_axiom_count + m.declaration_axiom_count;
  return m;
}

}  // namespace vison
