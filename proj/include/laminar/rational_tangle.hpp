#pragma once

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "laminar/planar_diagram.hpp"
#include "laminar/rational.hpp"

namespace laminar {

// Continued-fraction convention used throughout: a list [a1, ..., ak]
// evaluates to F = a_k + 1/(a_{k-1} + 1/(... + 1/a_1)). Twist blocks
// alternate, starting with a1 twists on the east ends (a vertical column of
// crossings at the right of the box), then a2 on the south ends (a horizontal
// row at the bottom), and so on; the list is kept at odd length so the final
// block is an east block.
inline std::vector<long long> continued_fraction(long long p, long long q) {
  if (q < 1) throw std::invalid_argument("continued_fraction: need q >= 1");
  if (std::gcd(p < 0 ? -p : p, q) != 1)
    throw std::invalid_argument("continued_fraction: fraction not reduced");
  long long P = p < 0 ? -p : p, Q = q;
  std::vector<long long> euclid;  // [b0; b1, ...] with b0 = floor(P/Q)
  for (;;) {
    euclid.push_back(P / Q);
    long long r = P % Q;
    if (r == 0) break;
    P = Q;
    Q = r;
  }
  std::vector<long long> cf(euclid.rbegin(), euclid.rend());
  if (cf.size() % 2 == 0) {
    // toggle parity with [..., b] = [..., b-1, 1] (or the merge when b = 1)
    if (cf.front() >= 2) {
      cf.front() -= 1;
      cf.insert(cf.begin(), 1);
    } else {
      cf.erase(cf.begin());
      cf.front() += 1;
    }
  }
  if (p < 0)
    for (auto& a : cf) a = -a;
  return cf;
}

// Evaluate a continued-fraction list exactly; (num, den) with den = 0 means
// the infinity tangle.
inline std::pair<long long, long long> evaluate_cf(const std::vector<long long>& cf) {
  if (cf.empty()) return {1, 0};
  long long p = cf.front(), q = 1;
  for (size_t i = 1; i < cf.size(); ++i) {
    long long np = cf[i] * p + q;
    q = p;
    p = np;
  }
  long long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

struct RationalTangle {
  long long p = 0;
  long long q = 1;
  std::vector<long long> cf;  // empty only for the infinity tangle

  RationalTangle() : cf{0} {}
  RationalTangle(long long num, long long den) {
    if (den == 0) {
      if (num != 1 && num != -1)
        throw std::invalid_argument("RationalTangle: only 1/0 encodes infinity");
      p = 1;
      q = 0;
      return;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    p = num / g;
    q = den / g;
    cf = continued_fraction(p, q);
  }

  bool is_infinity() const { return q == 0; }
  long long twist_count() const {
    long long n = 0;
    for (auto a : cf) n += a < 0 ? -a : a;
    return n;
  }

  friend bool operator==(const RationalTangle& a, const RationalTangle& b) {
    return a.p == b.p && a.q == b.q;
  }
};

namespace detail {

// East twist: one crossing between the NE and SE ends. Positive sign puts the
// NE-to-SE strand under.
inline void twist_east(PlanarDiagram& d, int sign, int& next_edge) {
  int e_ne = d.boundary_ends[1], e_se = d.boundary_ends[2];
  int f_se = next_edge++, f_ne = next_edge++;
  Crossing c = sign > 0 ? Crossing(e_ne, e_se, f_se, f_ne)
                        : Crossing(e_se, f_se, f_ne, e_ne);
  c.canonical_root();
  d.crossings.push_back(c);
  d.boundary_ends[1] = f_ne;
  d.boundary_ends[2] = f_se;
}

// South twist: one crossing between the SW and SE ends. Positive sign puts
// the SW-to-SE strand under.
inline void twist_south(PlanarDiagram& d, int sign, int& next_edge) {
  int e_sw = d.boundary_ends[3], e_se = d.boundary_ends[2];
  int f_sw = next_edge++, f_se = next_edge++;
  Crossing c = sign > 0 ? Crossing(e_sw, f_sw, f_se, e_se)
                        : Crossing(e_se, e_sw, f_sw, f_se);
  c.canonical_root();
  d.crossings.push_back(c);
  d.boundary_ends[2] = f_se;
  d.boundary_ends[3] = f_sw;
}

}  // namespace detail

inline PlanarDiagram zero_tangle() {
  PlanarDiagram d;
  d.boundary_ends = {0, 0, 1, 1};  // NW, NE, SE, SW
  d.n_strings = 2;
  return d;
}

inline PlanarDiagram infinity_tangle() {
  PlanarDiagram d;
  d.boundary_ends = {0, 1, 1, 0};
  d.n_strings = 2;
  return d;
}

inline PlanarDiagram rational_to_diagram(const RationalTangle& t) {
  if (t.is_infinity()) return infinity_tangle();
  PlanarDiagram d = zero_tangle();
  int next_edge = 2;
  for (size_t i = 0; i < t.cf.size(); ++i) {
    long long a = t.cf[i];
    int sign = a >= 0 ? 1 : -1;
    for (long long j = 0; j < (a < 0 ? -a : a); ++j) {
      if (i % 2 == 0)
        detail::twist_east(d, sign, next_edge);
      else
        detail::twist_south(d, sign, next_edge);
    }
  }
  return canonicalize(d);
}

inline PlanarDiagram rational_to_diagram(long long p, long long q) {
  return rational_to_diagram(RationalTangle(p, q));
}

}  // namespace laminar
