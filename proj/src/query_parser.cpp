#include <cctype>
#include <charconv>
#include <optional>

#include "vison/query.hpp"
#include "vison/slug.hpp"

namespace vison {

bool And::operator==(const And& other) const { return operands == other.operands; }
bool Or::operator==(const Or& other) const { return operands == other.operands; }
bool Not::operator==(const Not& other) const { return operand == other.operand; }
bool Some::operator==(const Some& other) const {
  return property == other.property && filler == other.filler;
}

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::Equal: return "=";
    case CompareOp::GreaterEqual: return ">=";
    case CompareOp::LessEqual: return "<=";
  }
  return "?";
}

std::string_view to_string(QueryErrorCode code) {
  switch (code) {
    case QueryErrorCode::EmptyInput: return "empty-input";
    case QueryErrorCode::SyntaxError: return "syntax-error";
    case QueryErrorCode::UnknownName: return "unknown-name";
    case QueryErrorCode::TypeMismatch: return "type-mismatch";
  }
  return "unknown";
}

namespace {

enum class TokenKind { Name, Integer, LParen, RParen, Compare, And, Or, Not, Value, Some, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
  std::int64_t integer = 0;
  CompareOp op = CompareOp::Equal;
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
}

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

[[noreturn]] void syntax_error(const std::string& message, std::size_t position) {
  throw QueryError(QueryErrorCode::SyntaxError,
                   message + " at position " + std::to_string(position), position);
}

TokenKind keyword_kind(const std::string& lowered) {
  if (lowered == "and") return TokenKind::And;
  if (lowered == "or") return TokenKind::Or;
  if (lowered == "not") return TokenKind::Not;
  if (lowered == "value") return TokenKind::Value;
  if (lowered == "some") return TokenKind::Some;
  return TokenKind::Name;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '(' || c == ')') {
      tokens.push_back({c == '(' ? TokenKind::LParen : TokenKind::RParen, std::string(1, c), start});
      ++i;
    } else if (c == '=') {
      tokens.push_back({TokenKind::Compare, "=", start, 0, CompareOp::Equal});
      ++i;
    } else if ((c == '>' || c == '<') && i + 1 < text.size() && text[i + 1] == '=') {
      tokens.push_back({TokenKind::Compare, std::string(text.substr(i, 2)), start, 0,
                        c == '>' ? CompareOp::GreaterEqual : CompareOp::LessEqual});
      i += 2;
    } else if (is_digit(c) || (c == '-' && i + 1 < text.size() && is_digit(text[i + 1]))) {
      std::size_t end = i + 1;
      while (end < text.size() && is_digit(text[end])) ++end;
      if (c != '-' && end < text.size() && (is_alpha(text[end]) || text[end] == '_' || text[end] == '-')) {
        // Digit-led name such as "3d" or "3d-node-link".
        while (end < text.size() && is_name_char(text[end])) ++end;
        tokens.push_back({TokenKind::Name, to_lower(text.substr(start, end - start)), start});
      } else {
        Token token{TokenKind::Integer, std::string(text.substr(start, end - start)), start};
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + end, token.integer);
        if (ec != std::errc() || ptr != text.data() + end) syntax_error("integer out of range", start);
        tokens.push_back(std::move(token));
      }
      i = end;
    } else if (is_alpha(c)) {
      std::size_t end = i + 1;
      while (end < text.size() && is_name_char(text[end])) ++end;
      std::string lowered = to_lower(text.substr(start, end - start));
      TokenKind kind = keyword_kind(lowered);
      tokens.push_back({kind, std::move(lowered), start});
      i = end;
    } else {
      syntax_error(std::string("unexpected character '") + c + "'", start);
    }
  }
  tokens.push_back({TokenKind::End, "", text.size()});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ClassExpression parse() {
    ClassExpression expr = parse_expr();
    if (peek().kind != TokenKind::End) unexpected(peek());
    return expr;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(cursor_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() { return tokens_[cursor_++]; }

  [[noreturn]] static void unexpected(const Token& token) {
    if (token.kind == TokenKind::End) syntax_error("unexpected end of query", token.position);
    syntax_error("unexpected '" + token.text + "'", token.position);
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (peek().kind != kind) {
      const Token& token = peek();
      std::string found = token.kind == TokenKind::End ? "end of query" : "'" + token.text + "'";
      syntax_error("expected " + std::string(what) + " but found " + found, token.position);
    }
    return advance();
  }

  ClassExpression parse_expr() {
    std::vector<ClassExpression> operands;
    operands.push_back(parse_term());
    while (peek().kind == TokenKind::Or) {
      advance();
      operands.push_back(parse_term());
    }
    if (operands.size() == 1) return std::move(operands.front());
    return Or{std::move(operands)};
  }

  ClassExpression parse_term() {
    std::vector<ClassExpression> operands;
    operands.push_back(parse_factor());
    while (peek().kind == TokenKind::And) {
      advance();
      operands.push_back(parse_factor());
    }
    if (operands.size() == 1) return std::move(operands.front());
    return And{std::move(operands)};
  }

  ClassExpression parse_factor() {
    if (peek().kind == TokenKind::Not) {
      advance();
      return Not{parse_factor()};
    }
    return parse_atom();
  }

  ClassExpression parse_atom() {
    const Token& token = peek();
    if (token.kind == TokenKind::LParen) {
      advance();
      ClassExpression inner = parse_expr();
      expect(TokenKind::RParen, "')'");
      return inner;
    }
    if (token.kind != TokenKind::Name) unexpected(token);
    std::string name = advance().text;
    switch (peek().kind) {
      case TokenKind::Value: {
        advance();
        std::string individual = expect(TokenKind::Name, "an individual name").text;
        return HasValue{std::move(name), std::move(individual)};
      }
      case TokenKind::Some: {
        advance();
        return Some{std::move(name), parse_atom()};
      }
      case TokenKind::Compare: {
        CompareOp op = advance().op;
        std::int64_t value = expect(TokenKind::Integer, "an integer").integer;
        return Compare{std::move(name), op, value};
      }
      default:
        return NamedClass{std::move(name)};
    }
  }

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
};

// Or binds loosest; atoms tightest.
enum Level { kOrLevel = 0, kAndLevel = 1, kFactorLevel = 2, kAtomLevel = 3 };

int level_of(const ClassExpression& expr) {
  if (std::holds_alternative<Or>(expr.node)) return kOrLevel;
  if (std::holds_alternative<And>(expr.node)) return kAndLevel;
  if (std::holds_alternative<Not>(expr.node)) return kFactorLevel;
  return kAtomLevel;
}

void print_into(const ClassExpression& expr, std::string& out);

// Parenthesize when the child would otherwise re-associate or flatten.
void print_at(const ClassExpression& expr, int minimum, std::string& out) {
  if (level_of(expr) >= minimum) {
    print_into(expr, out);
    return;
  }
  out.push_back('(');
  print_into(expr, out);
  out.push_back(')');
}

void print_into(const ClassExpression& expr, std::string& out) {
  std::visit(
      [&out](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, NamedClass>) {
          out += node.name;
        } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          constexpr bool is_and = std::is_same_v<T, And>;
          bool first = true;
          for (const auto& operand : node.operands) {
            if (!first) out += is_and ? " and " : " or ";
            first = false;
            print_at(operand, is_and ? kFactorLevel : kAndLevel, out);
          }
        } else if constexpr (std::is_same_v<T, Not>) {
          out += "not ";
          print_at(*node.operand, kFactorLevel, out);
        } else if constexpr (std::is_same_v<T, HasValue>) {
          out += node.property + " value " + node.individual;
        } else if constexpr (std::is_same_v<T, Some>) {
          out += node.property + " some ";
          print_at(*node.filler, kAtomLevel, out);
        } else {
          out += node.property + " " + std::string(to_string(node.op)) + " " + std::to_string(node.value);
        }
      },
      expr.node);
}

}  // namespace

ClassExpression parse_query(std::string_view text) {
  if (trim(text).empty()) throw QueryError(QueryErrorCode::EmptyInput, "query is empty");
  return Parser(tokenize(text)).parse();
}

std::string print_expression(const ClassExpression& expr) {
  std::string out;
  print_into(expr, out);
  return out;
}

}  // namespace vison
