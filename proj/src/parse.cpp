#include "trisum/parse.hpp"

#include <cctype>

namespace trisum {

namespace {

struct Token {
  enum class Type { Number, Ident, Op, End } type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::Number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+-*/^()").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Type::Op, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::Type::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::unique_ptr<Expr> parse() {
    auto e = expr();
    if (peek().type != Token::Type::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool is_op(const char* op) const {
    return peek().type == Token::Type::Op && peek().text == op;
  }

  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t pos, std::unique_ptr<Expr> a,
                                    std::unique_ptr<Expr> b = nullptr) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->pos = pos;
    e->args.push_back(std::move(a));
    if (b) e->args.push_back(std::move(b));
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    while (is_op("+") || is_op("-")) {
      auto k = peek().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
      std::size_t pos = toks_[i_++].pos;
      lhs = node(k, pos, std::move(lhs), term());
    }
    return lhs;
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    while (is_op("*") || is_op("/")) {
      auto k = peek().text == "*" ? Expr::Kind::Mul : Expr::Kind::Div;
      std::size_t pos = toks_[i_++].pos;
      lhs = node(k, pos, std::move(lhs), unary());
    }
    return lhs;
  }

  std::unique_ptr<Expr> unary() {
    if (is_op("-")) {
      std::size_t pos = toks_[i_++].pos;
      return node(Expr::Kind::Neg, pos, unary());
    }
    if (is_op("+")) {
      ++i_;
      return unary();
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = primary();
    if (is_op("^")) {
      std::size_t pos = toks_[i_++].pos;
      if (peek().type != Token::Type::Number)
        throw ParseError(peek().pos, "exponent must be a nonnegative integer literal");
      const std::string& digits = peek().text;
      if (digits.size() > 6) throw ParseError(peek().pos, "exponent too large");
      auto e = node(Expr::Kind::Pow, pos, std::move(base));
      e->exponent = static_cast<unsigned>(std::stoul(digits));
      ++i_;
      if (is_op("^")) throw ParseError(peek().pos, "chained '^' needs parentheses");
      return e;
    }
    return base;
  }

  std::unique_ptr<Expr> primary() {
    const Token& t = peek();
    if (t.type == Token::Type::Number || t.type == Token::Type::Ident) {
      auto e = std::make_unique<Expr>();
      e->kind = t.type == Token::Type::Number ? Expr::Kind::Number : Expr::Kind::Ident;
      e->text = t.text;
      e->pos = t.pos;
      ++i_;
      return e;
    }
    if (is_op("(")) {
      ++i_;
      auto e = expr();
      if (!is_op(")")) throw ParseError(peek().pos, "expected ')'");
      ++i_;
      return e;
    }
    if (t.type == Token::Type::End) throw ParseError(t.pos, "unexpected end of input");
    throw ParseError(t.pos, "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

RatFunc xyz_leaf(const Expr& e) {
  if (e.text == "x") return RatFunc::var(X);
  if (e.text == "y") return RatFunc::var(Y);
  if (e.text == "z") return RatFunc::var(Z);
  throw ParseError(e.pos, "unknown variable '" + e.text + "'");
}

void collect_factors(const Expr& e, std::vector<std::pair<MultiPoly, int>>& out) {
  if (e.kind == Expr::Kind::Mul) {
    collect_factors(*e.args[0], out);
    collect_factors(*e.args[1], out);
    return;
  }
  const Expr* base = &e;
  int mult = 1;
  if (e.kind == Expr::Kind::Pow) {
    base = e.args[0].get();
    mult = static_cast<int>(e.exponent);
  }
  RatFunc v = evaluate<RatFunc>(*base, xyz_leaf);
  if (!v.is_polynomial()) throw ParseError(base->pos, "pre-factored denominator factor is not a polynomial");
  if (mult == 0 || v.is_constant()) {
    out.emplace_back(v.num().pow(static_cast<unsigned>(mult)), 1);
    return;
  }
  out.emplace_back(v.num(), mult);
}

}  // namespace

std::unique_ptr<Expr> parse_tree(std::string_view text) { return Parser(tokenize(text)).parse(); }

RatFunc divide_for_parse(const RatFunc& a, const RatFunc& b, std::size_t pos) {
  if (b.is_zero()) throw ParseError(pos, "division by the zero polynomial");
  return a / b;
}

RatFunc parse_expr(std::string_view text) {
  auto tree = parse_tree(text);
  return evaluate<RatFunc>(*tree, xyz_leaf);
}

PreFactored parse_prefactored(std::string_view text) {
  auto tree = parse_tree(text);
  PreFactored out;
  out.value = evaluate<RatFunc>(*tree, xyz_leaf);
  if (tree->kind == Expr::Kind::Div) collect_factors(*tree->args[1], out.den_factors);
  return out;
}

}  // namespace trisum
