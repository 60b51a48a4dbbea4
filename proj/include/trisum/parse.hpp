#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trisum/ratfunc.hpp"

namespace trisum {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Syntax tree of the expression grammar: integers, identifiers, + - * / ^,
/// parentheses. The caret takes a nonnegative integer literal.
struct Expr {
  enum class Kind { Number, Ident, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  std::string text;  // number digits or identifier
  unsigned exponent = 0;
  std::size_t pos = 0;
  std::vector<std::unique_ptr<Expr>> args;
};

std::unique_ptr<Expr> parse_tree(std::string_view text);

/// Evaluates a tree in any ring-like value type. `leaf` maps identifiers.
template <class Value, class Leaf>
Value evaluate(const Expr& e, const Leaf& leaf) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return Value(Rational(Integer(e.text)));
    case Expr::Kind::Ident:
      return leaf(e);
    case Expr::Kind::Add:
      return evaluate<Value>(*e.args[0], leaf) + evaluate<Value>(*e.args[1], leaf);
    case Expr::Kind::Sub:
      return evaluate<Value>(*e.args[0], leaf) - evaluate<Value>(*e.args[1], leaf);
    case Expr::Kind::Mul:
      return evaluate<Value>(*e.args[0], leaf) * evaluate<Value>(*e.args[1], leaf);
    case Expr::Kind::Div:
      return divide_for_parse(evaluate<Value>(*e.args[0], leaf),
                              evaluate<Value>(*e.args[1], leaf), e.pos);
    case Expr::Kind::Neg:
      return -evaluate<Value>(*e.args[0], leaf);
    case Expr::Kind::Pow: {
      Value base = evaluate<Value>(*e.args[0], leaf);
      Value r(Rational(1));
      for (unsigned i = 0; i < e.exponent; ++i) r = r * base;
      return r;
    }
  }
  throw ParseError(e.pos, "bad node");
}

RatFunc divide_for_parse(const RatFunc& a, const RatFunc& b, std::size_t pos);

/// Parses an expression in x, y, z into its canonical rational function.
RatFunc parse_expr(std::string_view text);

/// Expression with an explicitly factored denominator: text of the form
/// N / (F1^e1 * F2^e2 * ...) keeps the factors Fi as given.
struct PreFactored {
  RatFunc value;
  std::vector<std::pair<MultiPoly, int>> den_factors;
};
PreFactored parse_prefactored(std::string_view text);

}  // namespace trisum
