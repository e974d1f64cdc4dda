#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <vector>

#include "laminar/planar_diagram.hpp"
#include "laminar/rational_tangle.hpp"

using namespace laminar;

namespace {

long long cf_weight(const std::vector<long long>& cf) {
  long long n = 0;
  for (auto a : cf) n += a < 0 ? -a : a;
  return n;
}

// every reduced fraction with small numerator and denominator
std::vector<std::pair<long long, long long>> small_fractions(long long bound) {
  std::vector<std::pair<long long, long long>> out;
  for (long long q = 1; q <= bound; ++q)
    for (long long p = -bound; p <= bound; ++p)
      if (std::gcd(p < 0 ? -p : p, q) == 1) out.push_back({p, q});
  return out;
}

}  // namespace

TEST_CASE("integer tangles have single-entry expansions") {
  CHECK(continued_fraction(3, 1) == std::vector<long long>{3});
  CHECK(continued_fraction(0, 1) == std::vector<long long>{0});
  CHECK(continued_fraction(-5, 1) == std::vector<long long>{-5});
}

TEST_CASE("expansion of 1/3 under the fixed convention") {
  auto cf = continued_fraction(1, 3);
  auto [p, q] = evaluate_cf(cf);
  CHECK(p == 1);
  CHECK(q == 3);
  CHECK(cf.size() % 2 == 1);
}

TEST_CASE("expansion of 8/3 re-evaluates exactly") {
  auto cf = continued_fraction(8, 3);
  CHECK(cf == std::vector<long long>{2, 1, 2});
  auto [p, q] = evaluate_cf(cf);
  CHECK(p == 8);
  CHECK(q == 3);
}

TEST_CASE("round trip: cf evaluation is the identity on reduced fractions") {
  for (auto [p, q] : small_fractions(13)) {
    auto cf = continued_fraction(p, q);
    auto [rp, rq] = evaluate_cf(cf);
    CHECK(rp == p);
    CHECK(rq == q);
    CHECK(cf.size() % 2 == 1);
    // all entries share the sign of p/q (zeros allowed where forced)
    for (auto a : cf) {
      if (p > 0) CHECK(a >= 0);
      if (p < 0) CHECK(a <= 0);
      if (p == 0) CHECK(a == 0);
    }
  }
}

TEST_CASE("diagram of 0/1 is two parallel strands") {
  auto d = rational_to_diagram(0, 1);
  CHECK(d.crossings.empty());
  CHECK(d.n_strings == 2);
  CHECK(diagram_issues(d).empty());
}

TEST_CASE("diagram of 1/3 has three crossings") {
  auto d = rational_to_diagram(1, 3);
  CHECK(d.crossings.size() == 3);
  CHECK(d.n_strings == 2);
  CHECK(diagram_issues(d).empty());
  CHECK(is_alternating(d));
}

TEST_CASE("diagram crossing count equals the expansion weight") {
  for (auto [p, q] : small_fractions(9)) {
    RationalTangle t(p, q);
    auto d = rational_to_diagram(t);
    CHECK(static_cast<long long>(d.crossings.size()) == cf_weight(t.cf));
    CHECK(diagram_issues(d).empty());
  }
}

TEST_CASE("same-sign expansions give alternating diagrams") {
  for (auto [p, q] : small_fractions(9)) {
    auto d = rational_to_diagram(p, q);
    CHECK(is_alternating(d));
  }
}

TEST_CASE("negating the fraction mirrors the diagram") {
  for (auto [p, q] : small_fractions(9)) {
    if (p == 0) continue;
    auto pos = rational_to_diagram(p, q);
    auto neg = rational_to_diagram(-p, q);
    CHECK(neg == mirror(pos));
  }
}

TEST_CASE("infinity tangle") {
  RationalTangle inf(1, 0);
  CHECK(inf.is_infinity());
  auto d = rational_to_diagram(inf);
  CHECK(d.crossings.empty());
  CHECK(d.n_strings == 2);
  // vertical strands: numerator closure gives one circle
  CHECK(component_count(numerator_closure(d)) == 1);
}

TEST_CASE("rejects unreduced and invalid fractions") {
  CHECK_THROWS_AS(continued_fraction(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(continued_fraction(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(RationalTangle(2, 0), std::invalid_argument);
}
