#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "laminar/invariants.hpp"
#include "laminar/planar_diagram.hpp"
#include "laminar/rational_tangle.hpp"

using namespace laminar;

namespace {

// independent component count: union-find over strand passes
int component_count_oracle(const PlanarDiagram& d) {
  auto occ = detail::edge_occurrences(d);
  // nodes: (crossing, pass) with pass 0 = slots {0,2}, pass 1 = slots {1,3};
  // plus free loops
  int n = static_cast<int>(d.crossings.size());
  std::vector<int> parent(2 * n);
  for (int i = 0; i < 2 * n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto node = [](const Slot& s) { return 2 * s.crossing + (s.pos % 2); };
  for (const auto& [e, slots] : occ) {
    (void)e;
    if (slots.size() == 2 && !slots[0].on_boundary && !slots[1].on_boundary)
      parent[find(node(slots[0]))] = find(node(slots[1]));
  }
  int c = 0;
  for (int i = 0; i < 2 * n; ++i)
    if (find(i) == i) ++c;
  return c + d.free_loops;
}

}  // namespace

TEST_CASE("numerator closure of the zero tangle is a two-component unlink") {
  auto d = numerator_closure(zero_tangle());
  CHECK(d.closed());
  CHECK(d.crossings.empty());
  CHECK(d.free_loops == 2);
  CHECK(component_count(d) == 2);
  CHECK_FALSE(is_knot(d));
}

TEST_CASE("numerator closure of a single twist is a one-crossing unknot") {
  auto d = numerator_closure(rational_to_diagram(1, 1));
  CHECK(d.crossings.size() == 1);
  CHECK(component_count(d) == 1);
  CHECK(is_knot(d));
}

TEST_CASE("numerator closure of 3/1 is a knot") {
  auto d = numerator_closure(rational_to_diagram(3, 1));
  CHECK(d.crossings.size() == 3);
  CHECK(component_count(d) == 1);
}

TEST_CASE("numerator closure of 2/1 has two components") {
  auto d = numerator_closure(rational_to_diagram(2, 1));
  CHECK(component_count(d) == 2);
}

TEST_CASE("component parity of rational closures: knot iff odd numerator") {
  for (long long p = 1; p <= 13; ++p)
    for (long long q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto d = numerator_closure(rational_to_diagram(p, q));
      int traced = component_count(d);
      CHECK(traced == component_count_oracle(d));
      CHECK((traced == 1) == (p % 2 == 1));
      auto m = numerator_closure(rational_to_diagram(-p, q));
      CHECK(component_count(m) == traced);
    }
}

TEST_CASE("tangle sum with the zero tangle preserves the crossing set") {
  auto t = rational_to_diagram(1, 3);
  auto s = tangle_sum(zero_tangle(), t);
  CHECK(s.crossings.size() == t.crossings.size());
  CHECK(s.n_strings == 2);
  CHECK(diagram_issues(s).empty());
  auto s2 = tangle_sum(t, zero_tangle());
  CHECK(canonicalize(s2) == canonicalize(t));
}

TEST_CASE("crossing counts add under tangle sum") {
  auto a = rational_to_diagram(1, 3);
  auto b = rational_to_diagram(-1, 3);
  auto s = tangle_sum(a, b);
  CHECK(s.crossings.size() == 6);
  CHECK(diagram_issues(s).empty());
  for (long long p = 1; p <= 5; p += 2) {
    auto x = rational_to_diagram(p, 2);
    auto y = rational_to_diagram(3, p + 1);
    auto z = tangle_sum(x, y);
    CHECK(z.crossings.size() == x.crossings.size() + y.crossings.size());
  }
}

TEST_CASE("sum of the 1/3 and 8/3 tangles: derived values") {
  // crossing counts add (3 + 5); the closure is a determinant-27 knot, which
  // distinguishes it from the trefoil closure
  auto s = tangle_sum(rational_to_diagram(1, 3), rational_to_diagram(8, 3));
  CHECK(s.crossings.size() == 8);
  auto ns = numerator_closure(s);
  CHECK(component_count(ns) == 1);
  CHECK(determinant(ns) == 27);
  CHECK(jones(ns) != jones(numerator_closure(rational_to_diagram(3, 1))));
}

TEST_CASE("the 8/3 closure agrees with an independently frozen two-bridge fixture") {
  PlanarDiagram frozen;
  frozen.crossings = {Crossing(0, 4, 1, 5), Crossing(5, 1, 6, 2), Crossing(4, 7, 9, 6),
                      Crossing(2, 9, 3, 8), Crossing(7, 0, 8, 3)};
  validate_diagram(frozen);
  auto live = numerator_closure(rational_to_diagram(8, 3));
  CHECK(determinant(frozen) == 8);
  CHECK(determinant(live) == 8);
  CHECK(canonicalize(frozen) == live);
}

TEST_CASE("mirror is an involution on the crossing set") {
  auto d = rational_to_diagram(8, 3);
  CHECK(mirror(mirror(d)) == d);
  auto c = numerator_closure(tangle_sum(rational_to_diagram(1, 3), rational_to_diagram(-1, 3)));
  CHECK(mirror(mirror(c)) == c);
}

TEST_CASE("mirror of the 1/3 diagram is the -1/3 diagram") {
  CHECK(mirror(rational_to_diagram(1, 3)) == rational_to_diagram(-1, 3));
}

TEST_CASE("four quarter turns restore the boundary labeling") {
  auto d = rational_to_diagram(5, 2);
  auto r = rotate90(rotate90(rotate90(rotate90(d))));
  CHECK(r == d);
  CHECK(rotate90(d) != d);
}

TEST_CASE("standard trefoil diagram is alternating") {
  auto t = numerator_closure(rational_to_diagram(3, 1));
  CHECK(is_alternating(t));
}

TEST_CASE("validator reports a malformed diagram") {
  PlanarDiagram bad;
  bad.crossings.push_back(Crossing(0, 1, 2, 3));
  bad.boundary_ends = {0, 1, 2, 2};
  bad.n_strings = 2;
  auto issues = diagram_issues(bad);
  CHECK(!issues.empty());
  CHECK_THROWS_AS(validate_diagram(bad), std::invalid_argument);
}

TEST_CASE("canonical renumbering is a fixpoint") {
  auto d = tangle_sum(rational_to_diagram(1, 3), rational_to_diagram(-1, 3));
  CHECK(canonicalize(d) == d);  // constructors canonicalize
  auto c = numerator_closure(d);
  CHECK(canonicalize(c) == c);
  // a scrambled copy canonicalizes back to the same diagram
  PlanarDiagram scrambled = d;
  for (auto& cr : scrambled.crossings)
    for (auto& e : cr.e) e = e * 7 + 100;
  for (auto& e : scrambled.boundary_ends) e = e * 7 + 100;
  for (auto& cr : scrambled.crossings) cr.canonical_root();
  CHECK(canonicalize(scrambled) == d);
}

TEST_CASE("denominator closure differs from numerator closure") {
  auto t = rational_to_diagram(1, 3);
  auto n = numerator_closure(t);
  auto d = denominator_closure(t);
  CHECK(n.closed());
  CHECK(d.closed());
  CHECK(component_count(n) == 1);
  CHECK(component_count(d) == 1);
}

TEST_CASE("closure validity for every small rational tangle") {
  for (long long q = 1; q <= 7; ++q)
    for (long long p = -7; p <= 7; ++p) {
      if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
      auto t = rational_to_diagram(p, q);
      CHECK(diagram_issues(numerator_closure(t)).empty());
      CHECK(diagram_issues(denominator_closure(t)).empty());
    }
}
