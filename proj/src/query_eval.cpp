#include <algorithm>
#include <iterator>
#include <optional>

#include "vison/query.hpp"
#include "vison/slug.hpp"

namespace vison {

namespace {

using IdSet = std::set<std::string>;

IdSet intersect(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

IdSet subtract(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

class Evaluator {
 public:
  explicit Evaluator(const Ontology& ontology) : ontology_(ontology) {
    for (const auto& [id, individual] : ontology.individuals()) everyone_.insert(id);
  }

  IdSet run(const ClassExpression& expr, const IdSet& universe) const {
    return std::visit([&](const auto& node) { return eval(node, universe); }, expr.node);
  }

 private:
  const PropertyDef& property(const std::string& name, PropertyKind wanted) const {
    std::string key = to_lower(name);
    const PropertyDef* def = ontology_.find_property(key);
    if (def == nullptr) {
      throw QueryError(QueryErrorCode::UnknownName, "unknown property '" + key + "'", 0, key);
    }
    if (def->kind != wanted) {
      throw QueryError(QueryErrorCode::TypeMismatch,
                       "property '" + key + "' is " + std::string(to_string(def->kind)) +
                           "-valued; this form needs an " + std::string(to_string(wanted)) +
                           "-valued property");
    }
    return *def;
  }

  // True when subject holds a usable positive assertion from `subs` to target,
  // and no negative assertion at that property or above contradicts it.
  bool holds(const Individual& subject, const IdSet& subs, const IdSet& supers,
             const std::string& target) const {
    for (const auto& negative : subject.negative_assertions) {
      const auto* id = std::get_if<std::string>(&negative.target);
      if (id != nullptr && *id == target && supers.contains(negative.property)) return false;
    }
    for (const auto& assertion : subject.property_assertions) {
      const auto* id = std::get_if<std::string>(&assertion.target);
      if (id == nullptr || *id != target || !subs.contains(assertion.property)) continue;
      if (!subject.negative_assertions.contains(assertion)) return true;
    }
    return false;
  }

  IdSet eval(const NamedClass& node, const IdSet&) const {
    std::string key = to_lower(node.name);
    if (ontology_.find_class(key) == nullptr) {
      throw QueryError(QueryErrorCode::UnknownName, "unknown class '" + key + "'", 0, key);
    }
    return ontology_.instances_of(key);
  }

  IdSet eval(const And& node, const IdSet& universe) const {
    IdSet out = run(node.operands.front(), universe);
    for (std::size_t i = 1; i < node.operands.size(); ++i) {
      out = intersect(out, run(node.operands[i], universe));
    }
    return out;
  }

  IdSet eval(const Or& node, const IdSet& universe) const {
    IdSet out;
    for (const auto& operand : node.operands) {
      IdSet part = run(operand, universe);
      out.insert(part.begin(), part.end());
    }
    return out;
  }

  IdSet eval(const Not& node, const IdSet& universe) const {
    return subtract(universe, run(*node.operand, universe));
  }

  IdSet eval(const HasValue& node, const IdSet&) const {
    const PropertyDef& def = property(node.property, PropertyKind::Object);
    std::string target = to_lower(node.individual);
    if (ontology_.find_individual(target) == nullptr) {
      throw QueryError(QueryErrorCode::UnknownName, "unknown individual '" + target + "'", 0, target);
    }
    IdSet subs = ontology_.sub_properties(def.id);
    IdSet supers = ontology_.super_properties(def.id);
    IdSet out;
    for (const auto& [id, individual] : ontology_.individuals()) {
      if (holds(individual, subs, supers, target)) out.insert(id);
    }
    return out;
  }

  IdSet eval(const Some& node, const IdSet&) const {
    const PropertyDef& def = property(node.property, PropertyKind::Object);
    // Fillers range over every individual, not only tools.
    IdSet fillers = run(*node.filler, everyone_);
    IdSet subs = ontology_.sub_properties(def.id);
    IdSet supers = ontology_.super_properties(def.id);
    IdSet out;
    for (const auto& [id, individual] : ontology_.individuals()) {
      for (const auto& assertion : individual.property_assertions) {
        const auto* target = std::get_if<std::string>(&assertion.target);
        if (target != nullptr && subs.contains(assertion.property) && fillers.contains(*target) &&
            holds(individual, subs, supers, *target)) {
          out.insert(id);
          break;
        }
      }
    }
    return out;
  }

  IdSet eval(const Compare& node, const IdSet&) const {
    const PropertyDef& def = property(node.property, PropertyKind::Integer);
    IdSet subs = ontology_.sub_properties(def.id);
    IdSet out;
    for (const auto& [id, individual] : ontology_.individuals()) {
      for (const auto& assertion : individual.property_assertions) {
        const auto* value = std::get_if<std::int64_t>(&assertion.target);
        if (value == nullptr || !subs.contains(assertion.property)) continue;
        bool match = node.op == CompareOp::Equal          ? *value == node.value
                     : node.op == CompareOp::GreaterEqual ? *value >= node.value
                                                          : *value <= node.value;
        if (match) {
          out.insert(id);
          break;
        }
      }
    }
    return out;
  }

  const Ontology& ontology_;
  IdSet everyone_;
};

std::optional<std::int64_t> last_update(const Individual& individual) {
  std::optional<std::int64_t> year;
  for (const auto& assertion : individual.property_assertions) {
    if (assertion.property != kLastUpdateProperty) continue;
    if (const auto* value = std::get_if<std::int64_t>(&assertion.target)) {
      year = year ? std::max(*year, *value) : *value;
    }
  }
  return year;
}

}  // namespace

std::set<std::string> tool_universe(const Ontology& ontology) {
  if (ontology.find_class(kToolClass) != nullptr) return ontology.instances_of(kToolClass);
  return ontology.instances_of(kRootClass);
}

std::set<std::string> evaluate_set(const ClassExpression& expr, const Ontology& ontology) {
  IdSet universe = tool_universe(ontology);
  return intersect(Evaluator(ontology).run(expr, universe), universe);
}

std::vector<std::string> order_by_recency(const std::set<std::string>& ids, const Ontology& ontology) {
  struct Key {
    std::optional<std::int64_t> year;
    std::string label;
    std::string id;
  };
  std::vector<Key> keys;
  keys.reserve(ids.size());
  for (const auto& id : ids) {
    const Individual* individual = ontology.find_individual(id);
    keys.push_back({individual ? last_update(*individual) : std::nullopt,
                    individual ? to_lower(individual->label) : id, id});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.year != b.year) {
      if (!a.year) return false;
      if (!b.year) return true;
      return *a.year > *b.year;
    }
    if (a.label != b.label) return a.label < b.label;
    return a.id < b.id;
  });
  std::vector<std::string> out;
  out.reserve(keys.size());
  for (auto& key : keys) out.push_back(std::move(key.id));
  return out;
}

QueryResult evaluate(const ClassExpression& expr, const Ontology& ontology) {
  QueryResult result;
  result.universe_size = tool_universe(ontology).size();
  result.matches = order_by_recency(evaluate_set(expr, ontology), ontology);
  result.expression = print_expression(expr);
  return result;
}

}  // namespace vison
