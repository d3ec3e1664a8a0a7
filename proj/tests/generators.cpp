#include "generators.hpp"

#include <algorithm>
#include <set>

namespace support {

using namespace vison;

namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

int between(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

template <typename Map>
std::vector<std::string> keys(const Map& table) {
  std::vector<std::string> out;
  for (const auto& [id, value] : table) out.push_back(id);
  return out;
}

ClassExpression random_atom(Rng& rng, const Vocabulary& v, int depth) {
  int roll = between(rng, 0, 9);
  if (roll < 3 || (v.values.empty() && v.integer_properties.empty())) return NamedClass{pick(rng, v.classes)};
  if (roll < 7 && !v.values.empty()) {
    const auto& [property, individual] = pick(rng, v.values);
    return HasValue{property, individual};
  }
  if (roll < 9 && !v.integer_properties.empty()) {
    static const CompareOp ops[] = {CompareOp::Equal, CompareOp::GreaterEqual, CompareOp::LessEqual};
    return Compare{pick(rng, v.integer_properties), ops[between(rng, 0, 2)],
                   std::uniform_int_distribution<std::int64_t>(v.low, v.high)(rng)};
  }
  if (!v.object_properties.empty()) {
    return Some{pick(rng, v.object_properties), random_expression(rng, v, std::max(0, depth - 1))};
  }
  return NamedClass{pick(rng, v.classes)};
}

}  // namespace

Vocabulary vocabulary_of(const Ontology& ontology) {
  Vocabulary v;
  v.classes = keys(ontology.classes());
  std::set<std::pair<std::string, std::string>> values;
  std::set<std::int64_t> numbers;
  for (const auto& [id, individual] : ontology.individuals()) {
    for (const auto& a : individual.property_assertions) {
      if (const auto* target = std::get_if<std::string>(&a.target)) {
        values.emplace(a.property, *target);
      } else {
        numbers.insert(std::get<std::int64_t>(a.target));
      }
    }
  }
  v.values.assign(values.begin(), values.end());
  for (const auto& [id, def] : ontology.properties()) {
    (def.kind == PropertyKind::Integer ? v.integer_properties : v.object_properties).push_back(id);
  }
  if (!numbers.empty()) {
    v.low = *numbers.begin() - 1;
    v.high = *numbers.rbegin() + 1;
  }
  return v;
}

std::string random_slug(Rng& rng) {
  static const std::set<std::string> keywords{"and", "or", "not", "value", "some"};
  static const std::string letters = "abcdefghijklmnopqrstuvwxyz";
  static const std::string tail = "abcdefghijklmnopqrstuvwxyz0123456789-_";
  for (;;) {
    std::string out;
    if (chance(rng, 0.15)) out += std::to_string(between(rng, 1, 9));
    out += letters[between(rng, 0, 25)];
    int length = between(rng, 0, 8);
    for (int i = 0; i < length; ++i) out += tail[between(rng, 0, static_cast<int>(tail.size()) - 1)];
    if (!keywords.contains(out)) return out;
  }
}

Vocabulary random_vocabulary(Rng& rng) {
  Vocabulary v;
  for (int i = 0; i < 6; ++i) v.classes.push_back(random_slug(rng));
  for (int i = 0; i < 6; ++i) v.values.emplace_back(random_slug(rng), random_slug(rng));
  for (int i = 0; i < 3; ++i) v.object_properties.push_back(random_slug(rng));
  for (int i = 0; i < 2; ++i) v.integer_properties.push_back(random_slug(rng));
  v.low = -50;
  v.high = 3000;
  return v;
}

ClassExpression random_expression(Rng& rng, const Vocabulary& v, int depth) {
  if (depth <= 0 || chance(rng, 0.3)) return random_atom(rng, v, depth);
  int roll = between(rng, 0, 4);
  if (roll == 0) return Not{random_expression(rng, v, depth - 1)};
  std::vector<ClassExpression> operands;
  int count = between(rng, 2, 3);
  for (int i = 0; i < count; ++i) operands.push_back(random_expression(rng, v, depth - 1));
  if (roll <= 2) return And{std::move(operands)};
  return Or{std::move(operands)};
}

Ontology random_dag(Rng& rng, std::size_t classes) {
  Ontology ontology;
  for (std::size_t i = 0; i < classes; ++i) {
    std::set<std::string> parents;
    if (i > 0) {
      int count = between(rng, 0, 3);
      for (int k = 0; k < count; ++k) parents.insert("c" + std::to_string(between(rng, 0, static_cast<int>(i) - 1)));
    }
    ontology.declare_class("c" + std::to_string(i), "C" + std::to_string(i), parents);
  }
  return ontology;
}

bool random_mutation(Rng& rng, Ontology& ontology) {
  const auto classes = keys(ontology.classes());
  const auto properties = keys(ontology.properties());
  const auto individuals = keys(ontology.individuals());
  try {
    switch (between(rng, 0, 7)) {
      case 0: {
        std::set<std::string> parents;
        for (int k = between(rng, 0, 2); k > 0; --k) parents.insert(pick(rng, classes));
        ontology.declare_class(random_slug(rng), "Generated", parents);
        break;
      }
      case 1:
        ontology.add_parent(pick(rng, classes), pick(rng, classes));
        break;
      case 2:
        ontology.assert_disjoint(pick(rng, classes), pick(rng, classes));
        break;
      case 3: {
        PropertyDef def;
        def.id = random_slug(rng);
        def.label = def.id;
        def.kind = chance(rng, 0.8) ? PropertyKind::Object : PropertyKind::Integer;
        if (chance(rng, 0.6)) def.domain = pick(rng, classes);
        if (def.kind == PropertyKind::Object && chance(rng, 0.6)) def.range = pick(rng, classes);
        if (!properties.empty() && chance(rng, 0.3)) def.super_property = pick(rng, properties);
        ontology.declare_property(std::move(def));
        break;
      }
      case 4:
        ontology.declare_individual(random_slug(rng), "Generated");
        break;
      case 5:
        if (individuals.empty()) return false;
        ontology.assert_membership(pick(rng, individuals), pick(rng, classes));
        break;
      default: {
        if (individuals.empty() || properties.empty()) return false;
        const std::string& property = pick(rng, properties);
        const PropertyDef* def = ontology.find_property(property);
        if (def->kind == PropertyKind::Integer) {
          ontology.assert_property_value(pick(rng, individuals), property, std::int64_t{between(rng, 1990, 2024)});
        } else {
          ontology.assert_property_value(pick(rng, individuals), property, pick(rng, individuals),
                                         chance(rng, 0.3) ? Polarity::Negative : Polarity::Positive);
        }
        break;
      }
    }
    return true;
  } catch (const OntologyError&) {
    return false;
  }
}

}  // namespace support
