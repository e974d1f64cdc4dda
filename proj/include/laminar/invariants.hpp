#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "laminar/goeritz.hpp"
#include "laminar/laurent.hpp"
#include "laminar/planar_diagram.hpp"
#include "laminar/rational_tangle.hpp"

namespace laminar {

// Exhaustive state sums stay comfortable on a desk up to 2^18 states; larger
// inputs are rejected rather than quietly slow.
inline constexpr int kBracketCrossingBudget = 18;

inline LaurentPolynomial bracket_delta() {
  LaurentPolynomial d;
  d.add_term(4, -1);   // -A^2
  d.add_term(-4, -1);  // -A^-2
  return d;
}

namespace detail {

using CrossingList = std::vector<std::array<int, 4>>;

// Replace one smoothed crossing by its two arc joins; returns the number of
// closed loops produced.
inline int apply_joins(CrossingList& rest, std::array<std::pair<int, int>, 2> joins) {
  int loops = 0;
  for (int k = 0; k < 2; ++k) {
    auto [x, y] = joins[k];
    if (x == y) {
      ++loops;
      continue;
    }
    for (auto& c : rest)
      for (auto& e : c) e = (e == y) ? x : e;
    if (k == 0) {
      auto& [u, v] = joins[1];
      if (u == y) u = x;
      if (v == y) v = x;
    }
  }
  return loops;
}

// Memo key: relabel edges by first occurrence, then sort tuples. The key is
// reached from the input by an edge bijection plus reordering, both of which
// leave the state sum unchanged.
inline CrossingList memo_key(const CrossingList& cs) {
  std::map<int, int> rename;
  int next = 0;
  CrossingList out = cs;
  for (auto& c : out)
    for (auto& e : c) {
      auto it = rename.find(e);
      if (it == rename.end()) it = rename.emplace(e, next++).first;
      e = it->second;
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Sum over smoothing states of A^(a-b) * delta^(loops closed inside cs).
inline LaurentPolynomial bracket_raw(const CrossingList& cs,
                                     std::map<CrossingList, LaurentPolynomial>& memo) {
  if (cs.empty()) return LaurentPolynomial::one();
  CrossingList key = memo_key(cs);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const auto t = cs.front();
  LaurentPolynomial total;
  const LaurentPolynomial delta = bracket_delta();
  for (int state = 0; state < 2; ++state) {
    CrossingList rest(cs.begin() + 1, cs.end());
    std::array<std::pair<int, int>, 2> joins =
        state == 0 ? std::array<std::pair<int, int>, 2>{{{t[0], t[1]}, {t[2], t[3]}}}
                   : std::array<std::pair<int, int>, 2>{{{t[1], t[2]}, {t[3], t[0]}}};
    int loops = apply_joins(rest, joins);
    LaurentPolynomial branch = LaurentPolynomial::term(1, state == 0 ? 2 : -2);
    for (int i = 0; i < loops; ++i) branch = branch * delta;
    total = total + branch * bracket_raw(rest, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

// Exact division; throws if q does not divide p.
inline LaurentPolynomial divide_exact(LaurentPolynomial p, const LaurentPolynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  LaurentPolynomial quot;
  auto lead = [](const LaurentPolynomial& f) { return *f.coeffs().rbegin(); };
  auto [qe, qc] = lead(q);
  while (!p.is_zero()) {
    auto [pe, pc] = lead(p);
    if (pc % qc != 0) throw std::logic_error("divide_exact: non-exact division");
    LaurentPolynomial t = LaurentPolynomial::term(pc / qc, pe - qe);
    quot = quot + t;
    p = p - t * q;
  }
  return quot;
}

}  // namespace detail

// Kauffman bracket of a closed diagram, normalized so the unknot gives 1.
// Stored in the doubled-exponent encoding of the variable A.
inline LaurentPolynomial kauffman_bracket(const PlanarDiagram& d) {
  if (!d.closed()) throw std::invalid_argument("kauffman_bracket: need a closed diagram");
  if (static_cast<int>(d.crossings.size()) > kBracketCrossingBudget)
    throw std::invalid_argument("kauffman_bracket: crossing budget exceeded");
  const LaurentPolynomial delta = bracket_delta();
  if (d.crossings.empty()) {
    if (d.free_loops < 1)
      throw std::invalid_argument("kauffman_bracket: empty diagram");
    return delta.pow(d.free_loops - 1);
  }
  detail::CrossingList cs;
  for (const auto& c : d.crossings) cs.push_back(c.e);
  std::map<detail::CrossingList, LaurentPolynomial> memo;
  LaurentPolynomial raw = detail::bracket_raw(cs, memo);
  // every full smoothing of a nonempty closed diagram ends in at least one
  // loop, so raw is divisible by delta
  LaurentPolynomial b = detail::divide_exact(raw, delta);
  return b * delta.pow(d.free_loops);
}

namespace detail {

struct OrientedPasses {
  // for each crossing: which under slot (0 or 2) and over slot (1 or 3) the
  // strands enter through
  std::vector<int> under_in;
  std::vector<int> over_in;
};

inline OrientedPasses orient_components(const PlanarDiagram& d) {
  StrandWalker w(d);
  int n = static_cast<int>(d.crossings.size());
  OrientedPasses o;
  o.under_in.assign(n, -1);
  o.over_in.assign(n, -1);
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      if (seen[c][p]) continue;
      int cc = c, pp = p;
      for (;;) {
        seen[cc][pp] = true;
        seen[cc][(pp + 2) % 4] = true;
        if (pp % 2 == 0)
          o.under_in[cc] = pp;
        else
          o.over_in[cc] = pp;
        Slot here;
        here.crossing = cc;
        here.pos = (pp + 2) % 4;
        Slot nxt = w.other_end(d.crossings[cc].e[here.pos], here);
        cc = nxt.crossing;
        pp = nxt.pos;
        if (cc == c && pp == p) break;
      }
    }
  return o;
}

}  // namespace detail

// Writhe under the deterministic first-traced orientation of each component.
inline int writhe(const PlanarDiagram& d) {
  if (!d.closed()) throw std::invalid_argument("writhe: need a closed diagram");
  auto o = detail::orient_components(d);
  int w = 0;
  for (size_t c = 0; c < d.crossings.size(); ++c) {
    int u = o.under_in[c], v = o.over_in[c];
    if (u < 0 || v < 0) throw std::logic_error("writhe: unoriented crossing");
    w += (v == (u + 3) % 4) ? 1 : -1;
  }
  return w;
}

// Jones polynomial in the variable t (doubled-exponent encoding), via
// (-A^3)^(-writhe) * bracket with A = t^(-1/4).
inline LaurentPolynomial jones(const PlanarDiagram& d) {
  LaurentPolynomial b = kauffman_bracket(d);
  int w = writhe(d);
  // multiply by (-1)^w A^(-3w)
  LaurentPolynomial norm = LaurentPolynomial::term(w % 2 == 0 ? 1 : -1, -6 * w);
  LaurentPolynomial in_a = norm * b;
  LaurentPolynomial out;
  for (const auto& [e, v] : in_a.coeffs()) {
    if (e % 4 != 0) throw std::logic_error("jones: normalized bracket has odd A-power");
    out.add_term(-e / 4, v);
  }
  return out;
}

// |V(-1)| computed with t^(1/2) = i in exact Gaussian integers, checked
// against the Goeritz determinant; disagreement is a bug and throws.
inline long long determinant(const PlanarDiagram& d) {
  LaurentPolynomial j = jones(d);
  GaussInt g = evaluate_at_half_power_i(j);
  if (g.re != 0 && g.im != 0)
    throw std::logic_error("determinant: V(-1) is not real or purely imaginary");
  long long jdet = g.re != 0 ? (g.re < 0 ? -g.re : g.re) : (g.im < 0 ? -g.im : g.im);
  long long gdet = goeritz_determinant(d);
  if (jdet != gdet)
    throw std::logic_error("determinant oracles disagree: Jones gives " +
                           std::to_string(jdet) + ", Goeritz gives " + std::to_string(gdet));
  return jdet;
}

// Jones of the standard closed 2-braid with k crossings, |k| >= 2.
inline LaurentPolynomial torus2k_reference(long long k) {
  if (k > -2 && k < 2) throw std::invalid_argument("torus2k_reference: need |k| >= 2");
  return jones(numerator_closure(rational_to_diagram(k, 1)));
}

// Swap over and under at a single crossing.
inline PlanarDiagram flip_crossing(const PlanarDiagram& d, int i) {
  PlanarDiagram out = d;
  auto& c = out.crossings.at(i);
  c = Crossing(c.e[1], c.e[2], c.e[3], c.e[0]);
  c.canonical_root();
  return out;
}

// Replace crossing i by one of its two smoothings (state 0 = A, 1 = B).
inline PlanarDiagram smooth_crossing(const PlanarDiagram& d, int i, int state) {
  PlanarDiagram tmp = d;
  Crossing c = tmp.crossings.at(i);
  tmp.crossings.erase(tmp.crossings.begin() + i);
  detail::EdgeFuser f(tmp);
  if (state == 0) {
    f.fuse(c.e[0], c.e[1]);
    f.fuse(c.e[2], c.e[3]);
  } else {
    f.fuse(c.e[1], c.e[2]);
    f.fuse(c.e[3], c.e[0]);
  }
  return canonicalize(f.apply(tmp.boundary_ends, 0));
}

}  // namespace laminar
