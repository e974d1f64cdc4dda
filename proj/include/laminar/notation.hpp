#pragma once

#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "laminar/family.hpp"
#include "laminar/planar_diagram.hpp"
#include "laminar/rational_tangle.hpp"

namespace laminar {

// Tangle notation:
//   expr := term ('+' term)*
//   term := '-'? atom
//   atom := INT | INT '/' INT | 'rot(' expr ')' | 'N(' expr ')' | 'D(' expr ')'
//         | '@' NAME
// '-' is the mirror operator; '1/0' is the designated infinity literal.

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg),
        position(pos) {}
};

struct TangleExpression {
  enum class Kind { rational, fixture, sum, mirror, rotate, nclose, dclose };
  Kind kind = Kind::rational;
  RationalTangle rational;
  std::string fixture_name;
  std::vector<TangleExpression> children;

  static TangleExpression make_rational(long long p, long long q) {
    TangleExpression e;
    e.kind = Kind::rational;
    e.rational = RationalTangle(p, q);
    return e;
  }
};

namespace detail {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  TangleExpression parse() {
    TangleExpression e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("expected '+' or end of input");
    return e;
  }

 private:
  TangleExpression expr() {
    TangleExpression first = term();
    skip_ws();
    if (peek() != '+') return first;
    TangleExpression sum;
    sum.kind = TangleExpression::Kind::sum;
    sum.children.push_back(std::move(first));
    while (true) {
      skip_ws();
      if (peek() != '+') break;
      ++pos_;
      sum.children.push_back(term());
    }
    return sum;
  }

  TangleExpression term() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      TangleExpression m;
      m.kind = TangleExpression::Kind::mirror;
      m.children.push_back(atom());
      return m;
    }
    return atom();
  }

  TangleExpression atom() {
    skip_ws();
    char c = peek();
    if (c == '@') {
      ++pos_;
      std::string name = ident();
      if (name.empty()) fail("expected a fixture name after '@'");
      TangleExpression e;
      e.kind = TangleExpression::Kind::fixture;
      e.fixture_name = name;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    std::string word = ident();
    if (word == "rot" || word == "N" || word == "D") {
      skip_ws();
      if (peek() != '(') fail("expected '(' after '" + word + "'");
      ++pos_;
      TangleExpression inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      TangleExpression e;
      e.kind = word == "rot"  ? TangleExpression::Kind::rotate
               : word == "N" ? TangleExpression::Kind::nclose
                             : TangleExpression::Kind::dclose;
      e.children.push_back(std::move(inner));
      return e;
    }
    fail("expected an integer, fraction, rot(...), N(...), D(...), or @fixture");
    return {};
  }

  TangleExpression number() {
    long long p = integer();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      size_t at = pos_;
      long long q = integer();
      if (q == 0 && p != 1)
        throw ParseError(at, "zero denominator (only the literal 1/0 encodes infinity)");
      if (q != 0 && std::gcd(p, q) != 1) {
        long long g = std::gcd(p, q);
        p /= g;
        q /= g;
      }
      return TangleExpression::make_rational(p, q);
    }
    return TangleExpression::make_rational(p, 1);
  }

  long long integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  std::string ident() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline TangleExpression parse_tangle(const std::string& text) {
  return detail::Parser(text).parse();
}

// Fixture registry: names usable as '@name' leaves.
using FixtureRegistry = std::map<std::string, std::function<PlanarDiagram()>>;

inline FixtureRegistry default_fixture_registry() {
  FixtureRegistry reg;
  for (const auto& name : fixture_names()) {
    reg[name] = [name]() {
      Fixture f = fixture(name);
      if (f.diagram) return *f.diagram;
      if (f.tangle_template) return f.tangle_template->diagram;
      throw std::invalid_argument("fixture " + name + " has no diagram form");
    };
  }
  reg["found6_1"] = []() { return rational_to_diagram(found_6_1_completion()); };
  return reg;
}

// Number of open strings an expression evaluates to; throws on arity errors.
inline int expression_strings(const TangleExpression& e, const FixtureRegistry& reg) {
  switch (e.kind) {
    case TangleExpression::Kind::rational:
      return 2;
    case TangleExpression::Kind::fixture: {
      auto it = reg.find(e.fixture_name);
      if (it == reg.end())
        throw std::invalid_argument("unknown fixture: @" + e.fixture_name);
      return it->second().n_strings;
    }
    case TangleExpression::Kind::sum: {
      for (const auto& c : e.children)
        if (expression_strings(c, reg) != 2)
          throw std::invalid_argument("tangle sum requires 2-string operands");
      return 2;
    }
    case TangleExpression::Kind::mirror:
    case TangleExpression::Kind::rotate:
      return expression_strings(e.children.front(), reg);
    case TangleExpression::Kind::nclose:
    case TangleExpression::Kind::dclose:
      if (expression_strings(e.children.front(), reg) != 2)
        throw std::invalid_argument("closure requires a 2-string tangle");
      return 0;
  }
  return 0;
}

inline PlanarDiagram evaluate(const TangleExpression& e, const FixtureRegistry& reg) {
  switch (e.kind) {
    case TangleExpression::Kind::rational:
      return rational_to_diagram(e.rational);
    case TangleExpression::Kind::fixture: {
      auto it = reg.find(e.fixture_name);
      if (it == reg.end())
        throw std::invalid_argument("unknown fixture: @" + e.fixture_name);
      return canonicalize(it->second());
    }
    case TangleExpression::Kind::sum: {
      expression_strings(e, reg);
      PlanarDiagram acc = evaluate(e.children.front(), reg);
      for (size_t i = 1; i < e.children.size(); ++i)
        acc = tangle_sum(acc, evaluate(e.children[i], reg));
      return acc;
    }
    case TangleExpression::Kind::mirror:
      return mirror(evaluate(e.children.front(), reg));
    case TangleExpression::Kind::rotate:
      return canonicalize(rotate90(evaluate(e.children.front(), reg)));
    case TangleExpression::Kind::nclose:
      return numerator_closure(evaluate(e.children.front(), reg));
    case TangleExpression::Kind::dclose:
      return denominator_closure(evaluate(e.children.front(), reg));
  }
  throw std::logic_error("unreachable");
}

inline PlanarDiagram evaluate(const std::string& text) {
  auto reg = default_fixture_registry();
  return evaluate(parse_tangle(text), reg);
}

inline void print_expression(const TangleExpression& e, std::ostream& os, int indent = 0) {
  std::string pad(indent * 2, ' ');
  switch (e.kind) {
    case TangleExpression::Kind::rational:
      os << pad << "rational " << e.rational.p << "/" << e.rational.q << "\n";
      return;
    case TangleExpression::Kind::fixture:
      os << pad << "fixture @" << e.fixture_name << "\n";
      return;
    case TangleExpression::Kind::sum:
      os << pad << "sum\n";
      break;
    case TangleExpression::Kind::mirror:
      os << pad << "mirror\n";
      break;
    case TangleExpression::Kind::rotate:
      os << pad << "rotate\n";
      break;
    case TangleExpression::Kind::nclose:
      os << pad << "numerator-closure\n";
      break;
    case TangleExpression::Kind::dclose:
      os << pad << "denominator-closure\n";
      break;
  }
  for (const auto& c : e.children) print_expression(c, os, indent + 1);
}

}  // namespace laminar
