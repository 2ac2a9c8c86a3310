#include "adqsim/diophantine.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace adqsim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string at_offset(std::size_t offset, const std::string& message) {
  return "syntax error at offset " + std::to_string(offset) + ": " + message;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, const std::string& message)
    : std::runtime_error(at_offset(offset, message)), offset(offset) {}

ExprPtr make_int(BigInt value) {
  return std::make_shared<const Expr>(Expr{IntConst{std::move(value)}});
}
ExprPtr make_var(std::string name) {
  return std::make_shared<const Expr>(Expr{Var{std::move(name)}});
}
ExprPtr make_add(ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{Add{std::move(lhs), std::move(rhs)}});
}
ExprPtr make_sub(ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{Sub{std::move(lhs), std::move(rhs)}});
}
ExprPtr make_mul(ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{Mul{std::move(lhs), std::move(rhs)}});
}
ExprPtr make_neg(ExprPtr operand) {
  return std::make_shared<const Expr>(Expr{Neg{std::move(operand)}});
}
ExprPtr make_pow(ExprPtr base, ExprPtr exponent) {
  return std::make_shared<const Expr>(Expr{Pow{std::move(base), std::move(exponent)}});
}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, Equals, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    Tok kind;
    switch (s[i]) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '=': kind = Tok::Equals; break;
      default:
        throw SyntaxError(i, std::string("unexpected character '") + s[i] + "'");
    }
    out.push_back({kind, i, std::string(1, s[i])});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::vector<std::string>& variables)
      : tokens_(tokens), variables_(variables) {}

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = advance().kind == Tok::Plus;
      ExprPtr rhs = term();
      e = plus ? make_add(std::move(e), std::move(rhs))
               : make_sub(std::move(e), std::move(rhs));
    }
    return e;
  }

  const Token& peek() const { return tokens_[pos_]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind)
      throw SyntaxError(peek().offset, std::string("expected ") + what);
    ++pos_;
  }

 private:
  ExprPtr term() {
    ExprPtr e = factor();
    while (peek().kind == Tok::Star) {
      ++pos_;
      e = make_mul(std::move(e), factor());
    }
    return e;
  }

  ExprPtr factor() {
    if (peek().kind == Tok::Minus) {
      ++pos_;
      return make_neg(power());
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (peek().kind == Tok::Caret) {
      ++pos_;
      return make_pow(std::move(base), factor());  // right-associative
    }
    return base;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int:
        ++pos_;
        return make_int(BigInt(t.text));
      case Tok::Ident:
        ++pos_;
        if (std::find(variables_.begin(), variables_.end(), t.text) ==
            variables_.end())
          variables_.push_back(t.text);
        return make_var(t.text);
      case Tok::LParen: {
        ++pos_;
        ExprPtr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        throw SyntaxError(t.offset, "expected a number, a variable, or '('");
    }
  }

  const Token& advance() { return tokens_[pos_++]; }

  const std::vector<Token>& tokens_;
  std::vector<std::string>& variables_;
  std::size_t pos_ = 0;
};

}  // namespace

DiophantineEquation parse(std::string_view source) {
  const std::vector<Token> tokens = lex(source);
  DiophantineEquation eq;
  Parser parser(tokens, eq.variables);
  ExprPtr lhs = parser.expr();
  parser.expect(Tok::Equals, "'='");
  ExprPtr rhs = parser.expr();
  if (parser.peek().kind != Tok::End)
    throw SyntaxError(parser.peek().offset, "unexpected trailing input");
  const auto* c = std::get_if<IntConst>(&rhs->node);
  eq.d = (c != nullptr && c->value == 0) ? std::move(lhs)
                                         : make_sub(std::move(lhs), std::move(rhs));
  return eq;
}

namespace {

BigInt eval_node(const Expr& e, const DiophantineEquation& eq,
                 std::span<const std::uint64_t> a) {
  return std::visit(
      overloaded{
          [](const IntConst& n) { return n.value; },
          [&](const Var& n) {
            const auto it =
                std::find(eq.variables.begin(), eq.variables.end(), n.name);
            return BigInt(a[static_cast<std::size_t>(it - eq.variables.begin())]);
          },
          [&](const Add& n) { return BigInt(eval_node(*n.lhs, eq, a) + eval_node(*n.rhs, eq, a)); },
          [&](const Sub& n) { return BigInt(eval_node(*n.lhs, eq, a) - eval_node(*n.rhs, eq, a)); },
          [&](const Mul& n) { return BigInt(eval_node(*n.lhs, eq, a) * eval_node(*n.rhs, eq, a)); },
          [&](const Neg& n) { return BigInt(-eval_node(*n.operand, eq, a)); },
          [&](const Pow& n) {
            const BigInt base = eval_node(*n.base, eq, a);
            const BigInt exp = eval_node(*n.exponent, eq, a);
            if (exp < 0) throw NegativeExponent();
            if (base == 0) return exp == 0 ? BigInt(1) : BigInt(0);
            if (base == 1) return BigInt(1);
            if (base == -1) return exp % 2 == 0 ? BigInt(1) : BigInt(-1);
            // |base| >= 2: cap the exponent so a pathological input cannot
            // demand a billion-bit integer.
            if (exp > (1 << 20))
              throw std::overflow_error("exponent too large for exact evaluation");
            return BigInt(boost::multiprecision::pow(base, exp.convert_to<unsigned>()));
          },
      },
      e.node);
}

}  // namespace

BigInt evaluate(const DiophantineEquation& eq,
                std::span<const std::uint64_t> assignment) {
  if (assignment.size() != eq.variables.size())
    throw std::invalid_argument("assignment length does not match variable count");
  return eval_node(*eq.d, eq, assignment);
}

std::vector<std::vector<std::uint64_t>> brute_force_search(
    const DiophantineEquation& eq, std::uint64_t bound) {
  const std::size_t k = eq.variables.size();
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> tuple(k, 0);
  while (true) {
    if (evaluate(eq, tuple) == 0) out.push_back(tuple);
    // Odometer with the last position fastest: emits tuples in ascending
    // lexicographic order.
    std::size_t i = k;
    while (i > 0) {
      if (tuple[i - 1] < bound) {
        ++tuple[i - 1];
        break;
      }
      tuple[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const IntConst& x) { return x.value == std::get<IntConst>(b.node).value; },
          [&](const Var& x) { return x.name == std::get<Var>(b.node).name; },
          [&](const Add& x) {
            const auto& y = std::get<Add>(b.node);
            return equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
          },
          [&](const Sub& x) {
            const auto& y = std::get<Sub>(b.node);
            return equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
          },
          [&](const Mul& x) {
            const auto& y = std::get<Mul>(b.node);
            return equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
          },
          [&](const Neg& x) { return equal(*x.operand, *std::get<Neg>(b.node).operand); },
          [&](const Pow& x) {
            const auto& y = std::get<Pow>(b.node);
            return equal(*x.base, *y.base) && equal(*x.exponent, *y.exponent);
          },
      },
      a.node);
}

namespace {

// Precedence levels used by the printer; parentheses are emitted whenever a
// child's level is below what its grammar slot requires, so printing then
// re-parsing reproduces the tree exactly.
constexpr int kAddLevel = 1;
constexpr int kMulLevel = 2;
constexpr int kNegLevel = 3;
constexpr int kPowLevel = 4;
constexpr int kAtomLevel = 5;

int level_of(const Expr& e) {
  return std::visit(overloaded{
                        [](const IntConst&) { return kAtomLevel; },
                        [](const Var&) { return kAtomLevel; },
                        [](const Add&) { return kAddLevel; },
                        [](const Sub&) { return kAddLevel; },
                        [](const Mul&) { return kMulLevel; },
                        [](const Neg&) { return kNegLevel; },
                        [](const Pow&) { return kPowLevel; },
                    },
                    e.node);
}

void print_node(std::string& out, const Expr& e, int min_level) {
  const bool parens = level_of(e) < min_level;
  if (parens) out += '(';
  std::visit(overloaded{
                 [&](const IntConst& n) { out += n.value.str(); },
                 [&](const Var& n) { out += n.name; },
                 [&](const Add& n) {
                   print_node(out, *n.lhs, kAddLevel);
                   out += " + ";
                   print_node(out, *n.rhs, kAddLevel + 1);
                 },
                 [&](const Sub& n) {
                   print_node(out, *n.lhs, kAddLevel);
                   out += " - ";
                   print_node(out, *n.rhs, kAddLevel + 1);
                 },
                 [&](const Mul& n) {
                   print_node(out, *n.lhs, kMulLevel);
                   out += "*";
                   print_node(out, *n.rhs, kMulLevel + 1);
                 },
                 [&](const Neg& n) {
                   out += '-';
                   print_node(out, *n.operand, kPowLevel);
                 },
                 [&](const Pow& n) {
                   print_node(out, *n.base, kAtomLevel);
                   out += '^';
                   print_node(out, *n.exponent, kNegLevel);
                 },
             },
             e.node);
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print_node(out, e, 0);
  return out;
}

std::string to_string(const DiophantineEquation& eq) {
  return to_string(*eq.d) + " = 0";
}

}  // namespace adqsim
