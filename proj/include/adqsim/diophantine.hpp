#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace adqsim {

using BigInt = boost::multiprecision::cpp_int;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Parser-produced constants are always non-negative; signs live in Neg/Sub
// nodes, which keeps the printer's round-trip property simple.
struct IntConst {
  BigInt value;
};
struct Var {
  std::string name;
};
struct Add {
  ExprPtr lhs, rhs;
};
struct Sub {
  ExprPtr lhs, rhs;
};
struct Mul {
  ExprPtr lhs, rhs;
};
struct Neg {
  ExprPtr operand;
};
struct Pow {
  ExprPtr base, exponent;
};

struct Expr {
  std::variant<IntConst, Var, Add, Sub, Mul, Neg, Pow> node;
};

ExprPtr make_int(BigInt value);
ExprPtr make_var(std::string name);
ExprPtr make_add(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_sub(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_mul(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_neg(ExprPtr operand);
ExprPtr make_pow(ExprPtr base, ExprPtr exponent);

// Equation in the normalized form d = 0. `variables` lists the distinct
// variable names in order of first appearance in the source text; that order
// fixes the meaning of assignment tuples everywhere else.
struct DiophantineEquation {
  ExprPtr d;
  std::vector<std::string> variables;
};

struct SyntaxError : std::runtime_error {
  std::size_t offset;
  SyntaxError(std::size_t offset, const std::string& message);
};

struct NegativeExponent : std::runtime_error {
  NegativeExponent() : std::runtime_error("exponent evaluated below zero") {}
};

// Grammar (whitespace insignificant, integers decimal and unsigned):
//   equation := expr "=" expr ;
//   expr     := term (("+"|"-") term)* ;
//   term     := factor ("*" factor)* ;
//   factor   := ("-")? power ;
//   power    := atom ("^" factor)? ;
//   atom     := integer | identifier | "(" expr ")" ;
// "^" is right-associative and binds tighter than unary minus. Implicit
// multiplication ("2x") is rejected. When the right-hand side is the literal
// constant 0, d is the left-hand side as written; otherwise d = lhs - rhs.
DiophantineEquation parse(std::string_view source);

// Exact integer value of d at the assignment (aligned with eq.variables).
BigInt evaluate(const DiophantineEquation& eq,
                std::span<const std::uint64_t> assignment);

// All tuples in {0..bound}^k with evaluate == 0, in lexicographic order.
// k = 0 is legal: a constant equation yields [()] when d == 0, else [].
std::vector<std::vector<std::uint64_t>> brute_force_search(
    const DiophantineEquation& eq, std::uint64_t bound);

bool equal(const Expr& a, const Expr& b);

std::string to_string(const Expr& e);
std::string to_string(const DiophantineEquation& eq);  // "<d> = 0"

}  // namespace adqsim
