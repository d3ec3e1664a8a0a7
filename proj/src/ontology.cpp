#include "vison/ontology.hpp"

#include <deque>

#include "vison/slug.hpp"

namespace vison {

std::string_view to_string(PropertyKind kind) {
  return kind == PropertyKind::Object ? "object" : "integer";
}

std::string_view to_string(OntologyErrorCode code) {
  switch (code) {
    case OntologyErrorCode::DuplicateId: return "duplicate-id";
    case OntologyErrorCode::InvalidId: return "invalid-id";
    case OntologyErrorCode::UnknownClass: return "unknown-class";
    case OntologyErrorCode::UnknownParent: return "unknown-parent";
    case OntologyErrorCode::UnknownProperty: return "unknown-property";
    case OntologyErrorCode::UnknownIndividual: return "unknown-individual";
    case OntologyErrorCode::WouldCreateCycle: return "would-create-cycle";
    case OntologyErrorCode::SelfDisjointness: return "self-disjointness";
    case OntologyErrorCode::KindMismatch: return "kind-mismatch";
  }
  return "unknown";
}

namespace {

std::string quoted(std::string_view id) { return "'" + std::string(id) + "'"; }

}  // namespace

Ontology::Ontology() {
  std::string root(kRootClass);
  classes_.emplace(root, ClassDef{root, "Thing", {}, {}});
}

void Ontology::require_fresh_id(std::string_view id, std::string_view what) const {
  if (!is_slug(id)) {
    throw OntologyError(OntologyErrorCode::InvalidId,
                        std::string(what) + " id " + quoted(id) + " is not a slug");
  }
}

ClassDef& Ontology::class_ref(std::string_view id, OntologyErrorCode missing) {
  auto it = classes_.find(id);
  if (it == classes_.end()) {
    throw OntologyError(missing, "unknown class " + quoted(id));
  }
  return it->second;
}

Individual& Ontology::individual_ref(std::string_view id) {
  auto it = individuals_.find(id);
  if (it == individuals_.end()) {
    throw OntologyError(OntologyErrorCode::UnknownIndividual, "unknown individual " + quoted(id));
  }
  return it->second;
}

const PropertyDef& Ontology::property_ref(std::string_view id) const {
  auto it = properties_.find(id);
  if (it == properties_.end()) {
    throw OntologyError(OntologyErrorCode::UnknownProperty, "unknown property " + quoted(id));
  }
  return it->second;
}

const ClassDef& Ontology::declare_class(std::string_view id, std::string_view label,
                                        const std::set<std::string>& parents) {
  require_fresh_id(id, "class");
  if (classes_.contains(id)) {
    throw OntologyError(OntologyErrorCode::DuplicateId, "class " + quoted(id) + " already declared");
  }
  for (const auto& parent : parents) {
    if (parent == id) {
      throw OntologyError(OntologyErrorCode::WouldCreateCycle,
                          "class " + quoted(id) + " cannot be its own parent");
    }
    if (!classes_.contains(parent)) {
      throw OntologyError(OntologyErrorCode::UnknownParent, "unknown parent class " + quoted(parent));
    }
  }
  ClassDef def{std::string(id), std::string(label), parents, {}};
  if (def.parents.empty()) def.parents.emplace(kRootClass);
  return classes_.emplace(def.id, std::move(def)).first->second;
}

void Ontology::add_parent(std::string_view cls, std::string_view parent) {
  class_ref(parent, OntologyErrorCode::UnknownParent);
  ClassDef& child = class_ref(cls, OntologyErrorCode::UnknownClass);
  if (cls == kRootClass) {
    throw OntologyError(OntologyErrorCode::WouldCreateCycle, "the root class cannot have parents");
  }
  if (cls == parent || ancestors(parent).contains(std::string(cls))) {
    throw OntologyError(OntologyErrorCode::WouldCreateCycle,
                        "making " + quoted(parent) + " a parent of " + quoted(cls) +
                            " would create a cycle");
  }
  // An explicit parent replaces the implicit root edge.
  if (parent != kRootClass) child.parents.erase(std::string(kRootClass));
  child.parents.emplace(parent);
}

void Ontology::assert_disjoint(std::string_view a, std::string_view b) {
  assert_disjoint_group({std::string(a), std::string(b)});
}

void Ontology::assert_disjoint_group(const DisjointGroup& members) {
  if (members.size() < 2) {
    throw OntologyError(OntologyErrorCode::SelfDisjointness,
                        "a class cannot be disjoint with itself");
  }
  for (const auto& member : members) class_ref(member, OntologyErrorCode::UnknownClass);
  for (const auto& group : disjoint_groups_) {
    if (group == members) return;
  }
  disjoint_groups_.push_back(members);
  for (const auto& a : members) {
    for (const auto& b : members) {
      if (a != b) classes_.find(a)->second.disjoint_with.insert(b);
    }
  }
}

const PropertyDef& Ontology::declare_property(PropertyDef def) {
  require_fresh_id(def.id, "property");
  if (properties_.contains(def.id)) {
    throw OntologyError(OntologyErrorCode::DuplicateId,
                        "property " + quoted(def.id) + " already declared");
  }
  if (def.super_property) {
    if (*def.super_property == def.id) {
      throw OntologyError(OntologyErrorCode::WouldCreateCycle,
                          "property " + quoted(def.id) + " cannot be its own super-property");
    }
    const PropertyDef& super = property_ref(*def.super_property);
    if (super.kind != def.kind) {
      throw OntologyError(OntologyErrorCode::KindMismatch,
                          "property " + quoted(def.id) + " and its super-property differ in kind");
    }
  }
  if (def.domain) class_ref(*def.domain, OntologyErrorCode::UnknownClass);
  if (def.range) {
    class_ref(*def.range, OntologyErrorCode::UnknownClass);
    if (def.kind == PropertyKind::Integer) {
      throw OntologyError(OntologyErrorCode::KindMismatch,
                          "integer-valued property " + quoted(def.id) + " cannot have a class range");
    }
  }
  std::string key = def.id;
  return properties_.emplace(std::move(key), std::move(def)).first->second;
}

const Individual& Ontology::declare_individual(std::string_view id, std::string_view label) {
  require_fresh_id(id, "individual");
  if (individuals_.contains(id)) {
    throw OntologyError(OntologyErrorCode::DuplicateId,
                        "individual " + quoted(id) + " already declared");
  }
  Individual individual;
  individual.id = std::string(id);
  individual.label = std::string(label);
  return individuals_.emplace(individual.id, std::move(individual)).first->second;
}

void Ontology::assert_membership(std::string_view individual, std::string_view cls) {
  class_ref(cls, OntologyErrorCode::UnknownClass);
  individual_ref(individual).asserted_classes.emplace(cls);
}

void Ontology::assert_property_value(std::string_view individual, std::string_view property,
                                     const AssertionTarget& target, Polarity polarity) {
  Individual& subject = individual_ref(individual);
  const PropertyDef& def = property_ref(property);
  if (def.kind == PropertyKind::Object) {
    const auto* object = std::get_if<std::string>(&target);
    if (object == nullptr) {
      throw OntologyError(OntologyErrorCode::KindMismatch,
                          "object-valued property " + quoted(property) + " needs an individual target");
    }
    individual_ref(*object);
  } else {
    if (!std::holds_alternative<std::int64_t>(target)) {
      throw OntologyError(OntologyErrorCode::KindMismatch,
                          "integer-valued property " + quoted(property) + " needs an integer target");
    }
    if (polarity == Polarity::Negative) {
      throw OntologyError(OntologyErrorCode::KindMismatch,
                          "negative assertions are only allowed on object-valued properties");
    }
  }
  PropertyAssertion assertion{std::string(property), target};
  if (polarity == Polarity::Positive) {
    subject.property_assertions.insert(std::move(assertion));
  } else {
    subject.negative_assertions.insert(std::move(assertion));
  }
}

void Ontology::annotate(std::string_view individual, std::string_view key, std::string value) {
  individual_ref(individual).annotations[std::string(key)] = std::move(value);
}

const ClassDef* Ontology::find_class(std::string_view id) const {
  auto it = classes_.find(id);
  return it == classes_.end() ? nullptr : &it->second;
}

const PropertyDef* Ontology::find_property(std::string_view id) const {
  auto it = properties_.find(id);
  return it == properties_.end() ? nullptr : &it->second;
}

const Individual* Ontology::find_individual(std::string_view id) const {
  auto it = individuals_.find(id);
  return it == individuals_.end() ? nullptr : &it->second;
}

std::set<std::string> Ontology::ancestors(std::string_view cls) const {
  const ClassDef* start = find_class(cls);
  if (start == nullptr) {
    throw OntologyError(OntologyErrorCode::UnknownClass, "unknown class " + quoted(cls));
  }
  std::set<std::string> seen;
  std::deque<const ClassDef*> frontier{start};
  while (!frontier.empty()) {
    const ClassDef* current = frontier.front();
    frontier.pop_front();
    for (const auto& parent : current->parents) {
      if (!seen.insert(parent).second) continue;
      if (const ClassDef* next = find_class(parent)) frontier.push_back(next);
    }
  }
  // Only reachable through a cycle.
  seen.erase(std::string(cls));
  if (cls != kRootClass) seen.emplace(kRootClass);
  return seen;
}

std::set<std::string> Ontology::descendants(std::string_view cls) const {
  if (find_class(cls) == nullptr) {
    throw OntologyError(OntologyErrorCode::UnknownClass, "unknown class " + quoted(cls));
  }
  if (cls == kRootClass) {
    std::set<std::string> all;
    for (const auto& [id, def] : classes_) {
      if (id != kRootClass) all.insert(id);
    }
    return all;
  }
  std::map<std::string_view, std::vector<std::string_view>> children;
  for (const auto& [id, def] : classes_) {
    for (const auto& parent : def.parents) children[parent].push_back(id);
  }
  std::set<std::string> seen;
  std::deque<std::string_view> frontier{cls};
  while (!frontier.empty()) {
    auto current = frontier.front();
    frontier.pop_front();
    auto it = children.find(current);
    if (it == children.end()) continue;
    for (auto child : it->second) {
      if (seen.emplace(child).second) frontier.push_back(child);
    }
  }
  seen.erase(std::string(cls));
  return seen;
}

std::set<std::string> Ontology::instances_of(std::string_view cls) const {
  if (cls == kRootClass) {
    if (find_class(cls) == nullptr) {
      throw OntologyError(OntologyErrorCode::UnknownClass, "unknown class " + quoted(cls));
    }
    std::set<std::string> all;
    for (const auto& [id, individual] : individuals_) all.insert(id);
    return all;
  }
  std::set<std::string> targets = descendants(cls);
  targets.emplace(cls);
  std::set<std::string> out;
  for (const auto& [id, individual] : individuals_) {
    for (const auto& asserted : individual.asserted_classes) {
      if (targets.contains(asserted)) {
        out.insert(id);
        break;
      }
    }
  }
  return out;
}

std::set<std::string> Ontology::types_of(std::string_view individual) const {
  const Individual* subject = find_individual(individual);
  if (subject == nullptr) {
    throw OntologyError(OntologyErrorCode::UnknownIndividual, "unknown individual " + quoted(individual));
  }
  std::set<std::string> types{std::string(kRootClass)};
  for (const auto& cls : subject->asserted_classes) {
    types.insert(cls);
    if (find_class(cls) == nullptr) continue;
    auto up = ancestors(cls);
    types.insert(up.begin(), up.end());
  }
  return types;
}

std::set<std::string> Ontology::sub_properties(std::string_view property) const {
  std::set<std::string> out{std::string(property)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [id, def] : properties_) {
      if (def.super_property && out.contains(*def.super_property) && out.insert(id).second) {
        grew = true;
      }
    }
  }
  return out;
}

std::set<std::string> Ontology::super_properties(std::string_view property) const {
  std::set<std::string> out{std::string(property)};
  const PropertyDef* current = find_property(property);
  while (current != nullptr && current->super_property &&
         out.insert(*current->super_property).second) {
    current = find_property(*current->super_property);
  }
  return out;
}

Ontology Ontology::assemble(OntologyParts parts) {
  Ontology out;
  for (auto& def : parts.classes) {
    def.disjoint_with.clear();
    std::string key = def.id;
    out.classes_.insert_or_assign(std::move(key), std::move(def));
  }
  if (!out.classes_.contains(kRootClass)) {
    std::string root(kRootClass);
    out.classes_.emplace(root, ClassDef{root, "Thing", {}, {}});
  }
  for (auto& def : parts.properties) {
    std::string key = def.id;
    out.properties_.insert_or_assign(std::move(key), std::move(def));
  }
  for (auto& individual : parts.individuals) {
    std::string key = individual.id;
    out.individuals_.insert_or_assign(std::move(key), std::move(individual));
  }
  for (auto& group : parts.disjoint_groups) {
    for (const auto& a : group) {
      auto it = out.classes_.find(a);
      if (it == out.classes_.end()) continue;
      for (const auto& b : group) {
        if (a != b) it->second.disjoint_with.insert(b);
      }
    }
    out.disjoint_groups_.push_back(std::move(group));
  }
  return out;
}

OntologyParts Ontology::disassemble() const {
  OntologyParts parts;
  for (const auto& [id, def] : classes_) parts.classes.push_back(def);
  for (const auto& [id, def] : properties_) parts.properties.push_back(def);
  for (const auto& [id, individual] : individuals_) parts.individuals.push_back(individual);
  parts.disjoint_groups = disjoint_groups_;
  return parts;
}

}  // namespace vison
