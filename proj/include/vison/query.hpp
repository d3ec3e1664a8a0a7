#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "vison/ontology.hpp"

namespace vison {

template <typename U, typename Variant>
struct is_alternative : std::false_type {};
template <typename U, typename... Ts>
struct is_alternative<U, std::variant<Ts...>> : std::disjunction<std::is_same<std::remove_cvref_t<U>, Ts>...> {};

// Heap slot with value semantics, for the recursive arms of ClassExpression.
// Also accepts any node alternative directly, so Not{And{...}} reads naturally.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT(google-explicit-constructor)
  template <typename U>
    requires is_alternative<U, typename T::Node>::value
  Box(U&& value) : ptr_(std::make_unique<T>(std::forward<U>(value))) {}  // NOLINT(google-explicit-constructor)
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  bool operator==(const Box& other) const { return *ptr_ == *other.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

struct ClassExpression;

struct NamedClass {
  std::string name;
  bool operator==(const NamedClass&) const = default;
};

struct And {
  std::vector<ClassExpression> operands;  // at least two
  bool operator==(const And&) const;
};

struct Or {
  std::vector<ClassExpression> operands;  // at least two
  bool operator==(const Or&) const;
};

// Not{n} where n is already a Not copies n; nest through ClassExpression(n).
struct Not {
  Box<ClassExpression> operand;
  bool operator==(const Not&) const;
};

struct HasValue {
  std::string property;
  std::string individual;
  bool operator==(const HasValue&) const = default;
};

struct Some {
  std::string property;
  Box<ClassExpression> filler;
  bool operator==(const Some&) const;
};

enum class CompareOp { Equal, GreaterEqual, LessEqual };

std::string_view to_string(CompareOp op);

struct Compare {
  std::string property;
  CompareOp op = CompareOp::Equal;
  std::int64_t value = 0;
  bool operator==(const Compare&) const = default;
};

struct ClassExpression {
  using Node = std::variant<NamedClass, And, Or, Not, HasValue, Some, Compare>;
  Node node;

  // NOLINTBEGIN(google-explicit-constructor)
  ClassExpression(Node n) : node(std::move(n)) {}
  ClassExpression(NamedClass n) : node(std::move(n)) {}
  ClassExpression(And n) : node(std::move(n)) {}
  ClassExpression(Or n) : node(std::move(n)) {}
  ClassExpression(Not n) : node(std::move(n)) {}
  ClassExpression(HasValue n) : node(std::move(n)) {}
  ClassExpression(Some n) : node(std::move(n)) {}
  ClassExpression(Compare n) : node(std::move(n)) {}
  // NOLINTEND(google-explicit-constructor)
  bool operator==(const ClassExpression& other) const { return node == other.node; }
};

enum class QueryErrorCode { EmptyInput, SyntaxError, UnknownName, TypeMismatch };

std::string_view to_string(QueryErrorCode code);

class QueryError : public std::runtime_error {
 public:
  QueryError(QueryErrorCode code, const std::string& message, std::size_t position = 0,
             std::string name = {})
      : std::runtime_error(message), code_(code), position_(position), name_(std::move(name)) {}

  QueryErrorCode code() const noexcept { return code_; }
  // Byte offset into the query text (syntax errors only).
  std::size_t position() const noexcept { return position_; }
  // The unresolved slug (unknown-name only).
  const std::string& name() const noexcept { return name_; }

 private:
  QueryErrorCode code_;
  std::size_t position_;
  std::string name_;
};

// Grammar:
//   expr   := term ("or" term)*
//   term   := factor ("and" factor)*
//   factor := "not" factor | atom
//   atom   := "(" expr ")" | NAME | NAME "value" NAME | NAME "some" atom
//           | NAME ("=" | ">=" | "<=") INTEGER
// Keywords and names are case-insensitive; names are stored lowercased.
// A NAME may also start with digits when a letter follows ("3d", "3d-uml"),
// which the INTEGER positions never accept.
ClassExpression parse_query(std::string_view text);

// Canonical text with minimal parentheses; parse_query(print_expression(e)) == e.
std::string print_expression(const ClassExpression& expr);

struct QueryResult {
  std::vector<std::string> matches;
  std::string expression;
  std::size_t universe_size = 0;
};

// Tool universe used by top-level answers and by `not`: instances of "tool"
// when the ontology declares it, otherwise every individual.
std::set<std::string> tool_universe(const Ontology& ontology);

// Closed-world evaluation; matches are restricted to the tool universe and
// ordered by last update (newest first), then label.
QueryResult evaluate(const ClassExpression& expr, const Ontology& ontology);

// The raw answer set before ordering, mostly useful to tests.
std::set<std::string> evaluate_set(const ClassExpression& expr, const Ontology& ontology);

// Sorts individual ids by lastupdate descending, then label, then id.
std::vector<std::string> order_by_recency(const std::set<std::string>& ids, const Ontology& ontology);

inline constexpr std::string_view kToolClass = "tool";
inline constexpr std::string_view kLastUpdateProperty = "lastupdate";

}  // namespace vison
