#include "vison/consistency.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace vison {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::HierarchyCycle: return "hierarchy-cycle";
    case ViolationKind::DisjointnessConflict: return "disjointness-conflict";
    case ViolationKind::AssertionContradiction: return "assertion-contradiction";
    case ViolationKind::DomainViolation: return "domain-violation";
    case ViolationKind::RangeViolation: return "range-violation";
    case ViolationKind::DanglingReference: return "dangling-reference";
  }
  return "unknown";
}

std::size_t ConsistencyReport::count(ViolationKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; }));
}

namespace {

using Graph = std::map<std::string, std::vector<std::string>>;

std::string join(const std::vector<std::string>& ids, std::string_view sep) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += sep;
    out += id;
  }
  return out;
}

std::string describe(const AssertionTarget& target) {
  if (const auto* id = std::get_if<std::string>(&target)) return *id;
  return std::to_string(std::get<std::int64_t>(target));
}

// Tarjan; returns every strongly connected component that contains a cycle.
std::vector<std::vector<std::string>> cyclic_components(const Graph& graph) {
  std::map<std::string, int> index;
  std::map<std::string, int> lowlink;
  std::set<std::string> on_stack;
  std::vector<std::string> stack;
  std::vector<std::vector<std::string>> out;
  int counter = 0;

  std::function<void(const std::string&)> visit = [&](const std::string& node) {
    index[node] = lowlink[node] = counter++;
    stack.push_back(node);
    on_stack.insert(node);
    auto it = graph.find(node);
    if (it != graph.end()) {
      for (const auto& next : it->second) {
        if (!graph.contains(next)) continue;
        if (!index.contains(next)) {
          visit(next);
          lowlink[node] = std::min(lowlink[node], lowlink[next]);
        } else if (on_stack.contains(next)) {
          lowlink[node] = std::min(lowlink[node], index[next]);
        }
      }
    }
    if (lowlink[node] != index[node]) return;
    std::vector<std::string> component;
    std::string member;
    do {
      member = stack.back();
      stack.pop_back();
      on_stack.erase(member);
      component.push_back(member);
    } while (member != node);
    const auto& edges = graph.at(node);
    bool self_loop = std::find(edges.begin(), edges.end(), node) != edges.end();
    if (component.size() > 1 || self_loop) {
      std::sort(component.begin(), component.end());
      out.push_back(std::move(component));
    }
  };

  for (const auto& [node, edges] : graph) {
    if (!index.contains(node)) visit(node);
  }
  std::sort(out.begin(), out.end());
  return out;
}

class Checker {
 public:
  explicit Checker(const Ontology& ontology) : ontology_(ontology) {}

  ConsistencyReport run() {
    collect_types();
    check_cycles();
    check_disjointness();
    check_contradictions();
    check_domains_and_ranges();
    check_dangling();
    return std::move(report_);
  }

 private:
  void add(ViolationKind kind, std::vector<std::string> subjects, std::string message) {
    report_.violations.push_back({kind, std::move(subjects), std::move(message)});
  }

  void collect_types() {
    for (const auto& [id, individual] : ontology_.individuals()) {
      types_[id] = ontology_.types_of(id);
    }
  }

  bool is_member(const std::string& individual, const std::string& cls) const {
    auto it = types_.find(individual);
    return it != types_.end() && it->second.contains(cls);
  }

  void check_cycles() {
    Graph classes;
    for (const auto& [id, def] : ontology_.classes()) {
      classes[id].assign(def.parents.begin(), def.parents.end());
    }
    for (auto& component : cyclic_components(classes)) {
      std::string message = "subclass cycle through " + join(component, " -> ");
      add(ViolationKind::HierarchyCycle, std::move(component), std::move(message));
    }
    Graph properties;
    for (const auto& [id, def] : ontology_.properties()) {
      auto& edges = properties[id];
      if (def.super_property) edges.push_back(*def.super_property);
    }
    for (auto& component : cyclic_components(properties)) {
      std::string message = "super-property cycle through " + join(component, " -> ");
      add(ViolationKind::HierarchyCycle, std::move(component), std::move(message));
    }
  }

  void check_disjointness() {
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& group : ontology_.disjoint_groups()) {
      for (auto a = group.begin(); a != group.end(); ++a) {
        for (auto b = std::next(a); b != group.end(); ++b) pairs.emplace(*a, *b);
      }
    }
    for (const auto& [id, def] : ontology_.classes()) {
      auto up = ontology_.ancestors(id);
      up.insert(id);
      for (const auto& [a, b] : pairs) {
        if (up.contains(a) && up.contains(b)) {
          add(ViolationKind::DisjointnessConflict, {id, a, b},
              "class '" + id + "' specializes disjoint classes '" + a + "' and '" + b + "'");
        }
      }
    }
    for (const auto& [id, types] : types_) {
      for (const auto& [a, b] : pairs) {
        if (types.contains(a) && types.contains(b)) {
          add(ViolationKind::DisjointnessConflict, {id, a, b},
              "individual '" + id + "' is a member of disjoint classes '" + a + "' and '" + b + "'");
        }
      }
    }
  }

  void check_contradictions() {
    for (const auto& [id, individual] : ontology_.individuals()) {
      for (const auto& negative : individual.negative_assertions) {
        if (!individual.property_assertions.contains(negative)) continue;
        std::string target = describe(negative.target);
        add(ViolationKind::AssertionContradiction, {id, negative.property, target},
            "'" + id + " " + negative.property + " " + target +
                "' is asserted both positively and negatively");
      }
    }
  }

  void check_domains_and_ranges() {
    for (const auto& [id, individual] : ontology_.individuals()) {
      std::set<std::pair<std::string, std::string>> seen_domain;
      std::set<std::tuple<std::string, std::string, std::string>> seen_range;
      for (const auto& assertion : individual.property_assertions) {
        const PropertyDef* def = ontology_.find_property(assertion.property);
        if (def == nullptr) continue;
        const auto* object = std::get_if<std::string>(&assertion.target);
        if ((def->kind == PropertyKind::Object) != (object != nullptr)) {
          add(ViolationKind::RangeViolation, {id, assertion.property, describe(assertion.target)},
              "value of '" + assertion.property + "' on '" + id + "' does not match its " +
                  std::string(to_string(def->kind)) + " kind");
          continue;
        }
        for (const auto& property : ontology_.super_properties(assertion.property)) {
          const PropertyDef* level = ontology_.find_property(property);
          if (level == nullptr) continue;
          if (level->domain && !is_member(id, *level->domain) &&
              seen_domain.emplace(assertion.property, *level->domain).second) {
            add(ViolationKind::DomainViolation, {id, assertion.property, *level->domain},
                "'" + id + "' uses '" + assertion.property + "' but is not a member of domain '" +
                    *level->domain + "'");
          }
          if (object != nullptr && level->range && ontology_.find_individual(*object) != nullptr &&
              !is_member(*object, *level->range) &&
              seen_range.emplace(assertion.property, *object, *level->range).second) {
            add(ViolationKind::RangeViolation, {id, assertion.property, *object},
                "target '" + *object + "' of '" + assertion.property +
                    "' is not a member of range '" + *level->range + "'");
          }
        }
      }
    }
  }

  void dangling(std::vector<std::string> subjects, const std::string& what,
                const std::string& missing) {
    add(ViolationKind::DanglingReference, std::move(subjects),
        what + " refers to missing '" + missing + "'");
  }

  void check_dangling() {
    for (const auto& [id, def] : ontology_.classes()) {
      for (const auto& parent : def.parents) {
        if (ontology_.find_class(parent) == nullptr) dangling({id, parent}, "class '" + id + "'", parent);
      }
    }
    for (const auto& group : ontology_.disjoint_groups()) {
      for (const auto& member : group) {
        if (ontology_.find_class(member) == nullptr) {
          dangling({member}, "disjointness axiom", member);
        }
      }
    }
    for (const auto& [id, def] : ontology_.properties()) {
      for (const auto* ref : {&def.domain, &def.range}) {
        if (*ref && ontology_.find_class(**ref) == nullptr) {
          dangling({id, **ref}, "property '" + id + "'", **ref);
        }
      }
      if (def.super_property && ontology_.find_property(*def.super_property) == nullptr) {
        dangling({id, *def.super_property}, "property '" + id + "'", *def.super_property);
      }
    }
    for (const auto& [id, individual] : ontology_.individuals()) {
      for (const auto& cls : individual.asserted_classes) {
        if (ontology_.find_class(cls) == nullptr) dangling({id, cls}, "individual '" + id + "'", cls);
      }
      for (const auto* assertions : {&individual.property_assertions, &individual.negative_assertions}) {
        for (const auto& assertion : *assertions) {
          if (ontology_.find_property(assertion.property) == nullptr) {
            dangling({id, assertion.property}, "individual '" + id + "'", assertion.property);
          }
          const auto* object = std::get_if<std::string>(&assertion.target);
          if (object != nullptr && ontology_.find_individual(*object) == nullptr) {
            dangling({id, *object}, "individual '" + id + "'", *object);
          }
        }
      }
    }
  }

  const Ontology& ontology_;
  std::map<std::string, std::set<std::string>> types_;
  ConsistencyReport report_;
};

}  // namespace

ConsistencyReport check_consistency(const Ontology& ontology) { return Checker(ontology).run(); }

}  // namespace vison
