#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "laminar/rational.hpp"

namespace laminar {

// Abstract combinatorial branched surface: sectors with Euler characteristic
// data, and branch curves along which two sheets merge into one. Only the
// generic 3-sheet branching is supported; anything else fails validation.

struct Sector {
  std::string name;
  int euler_char = 0;
  std::vector<std::string> boundaries;  // boundary-circle ids, unique per sector
  // declared topological type (genus, boundary count); checked when present
  std::optional<std::pair<int, int>> declared_type;
};

struct Attachment {
  std::string sector;
  std::string circle;
  bool flip = false;  // orientation-reversing gluing
};

struct BranchCurve {
  std::string name;
  std::vector<Attachment> two_sheet_side;  // the cusp side: exactly 2 sheets
  std::vector<Attachment> one_sheet_side;  // the smooth side: exactly 1 sheet
};

struct BranchedSurface {
  std::vector<Sector> sectors;
  std::vector<BranchCurve> branch_curves;

  const Sector* find_sector(const std::string& n) const {
    for (const auto& s : sectors)
      if (s.name == n) return &s;
    return nullptr;
  }
  const BranchCurve* find_curve(const std::string& n) const {
    for (const auto& c : branch_curves)
      if (c.name == n) return &c;
    return nullptr;
  }
};

struct SurfaceReport {
  bool valid = true;
  int branch_curve_count = 0;
  bool single_branch_curve = false;
  bool no_triple_points = false;  // every curve has exactly 3 local sheets
  bool connected = false;         // sector adjacency graph is connected
  bool types_consistent = false;  // declared sector types match their euler chars
  std::vector<std::string> issues;

  void flag(const std::string& msg) {
    valid = false;
    issues.push_back(msg);
  }
};

inline SurfaceReport validate(const BranchedSurface& b) {
  SurfaceReport r;
  // dangling references are malformed input, not a reportable violation
  for (const auto& c : b.branch_curves) {
    auto all = c.two_sheet_side;
    all.insert(all.end(), c.one_sheet_side.begin(), c.one_sheet_side.end());
    for (const auto& a : all) {
      const Sector* s = b.find_sector(a.sector);
      if (!s) throw std::invalid_argument("dangling attachment: no sector " + a.sector);
      if (std::find(s->boundaries.begin(), s->boundaries.end(), a.circle) ==
          s->boundaries.end())
        throw std::invalid_argument("dangling attachment: sector " + a.sector +
                                    " has no boundary circle " + a.circle);
    }
  }

  r.branch_curve_count = static_cast<int>(b.branch_curves.size());
  r.single_branch_curve = r.branch_curve_count == 1;

  r.no_triple_points = true;
  for (const auto& c : b.branch_curves) {
    if (c.two_sheet_side.size() != 2 || c.one_sheet_side.size() != 1) {
      r.no_triple_points = false;
      r.flag("branch curve " + c.name + " has " +
             std::to_string(c.two_sheet_side.size() + c.one_sheet_side.size()) +
             " local sheets (want 3: two merging into one)");
    }
  }

  // each (sector, circle) attached to at most one branch curve
  std::map<std::pair<std::string, std::string>, int> uses;
  for (const auto& c : b.branch_curves) {
    for (const auto& a : c.two_sheet_side) uses[{a.sector, a.circle}]++;
    for (const auto& a : c.one_sheet_side) uses[{a.sector, a.circle}]++;
  }
  for (const auto& [key, n] : uses)
    if (n > 1)
      r.flag("boundary circle " + key.second + " of sector " + key.first +
             " attached " + std::to_string(n) + " times");

  r.types_consistent = true;
  for (const auto& s : b.sectors) {
    std::set<std::string> uniq(s.boundaries.begin(), s.boundaries.end());
    if (uniq.size() != s.boundaries.size())
      r.flag("sector " + s.name + " repeats a boundary circle id");
    if (s.declared_type) {
      auto [g, nb] = *s.declared_type;
      if (s.euler_char != 2 - 2 * g - nb || static_cast<int>(s.boundaries.size()) != nb) {
        r.types_consistent = false;
        r.flag("sector " + s.name + " euler characteristic inconsistent with declared type");
      }
    }
  }

  // sector adjacency graph: sectors sharing a branch curve are adjacent
  std::map<std::string, int> idx;
  for (const auto& s : b.sectors) idx[s.name] = static_cast<int>(idx.size());
  std::vector<int> parent(idx.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : b.branch_curves) {
    std::vector<std::string> names;
    for (const auto& a : c.two_sheet_side) names.push_back(a.sector);
    for (const auto& a : c.one_sheet_side) names.push_back(a.sector);
    for (size_t i = 1; i < names.size(); ++i)
      parent[find(idx[names[i]])] = find(idx[names[0]]);
  }
  r.connected = true;
  for (size_t i = 1; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) != find(0)) r.connected = false;
  if (b.sectors.empty()) r.connected = false;

  return r;
}

// One equation per branch curve: sum of the two-sheet-side weights (+1 when
// this is the contact curve, since the free boundary of a surface of contact
// rides in the cusp) equals the one-sheet-side weight.
struct BranchEquation {
  std::string curve;
  std::map<std::string, int> two_coeffs;
  std::map<std::string, int> one_coeffs;
  int constant_term = 0;  // added to the two-sheet side

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, k] : two_coeffs)
      for (int i = 0; i < k; ++i) {
        if (!first) os << " + ";
        os << s;
        first = false;
      }
    if (constant_term != 0) {
      if (!first) os << " + ";
      os << constant_term;
      first = false;
    }
    if (first) os << "0";
    os << " = ";
    first = true;
    for (const auto& [s, k] : one_coeffs)
      for (int i = 0; i < k; ++i) {
        if (!first) os << " + ";
        os << s;
        first = false;
      }
    if (first) os << "0";
    return os.str();
  }
};

struct BranchEquationSystem {
  std::vector<std::string> variables;  // one per sector
  std::vector<BranchEquation> equations;

  bool homogeneous() const {
    for (const auto& e : equations)
      if (e.constant_term != 0) return false;
    return true;
  }
};

inline BranchEquationSystem branch_equations(
    const BranchedSurface& b, const std::optional<std::string>& contact_curve = {}) {
  if (contact_curve && !b.find_curve(*contact_curve))
    throw std::invalid_argument("branch_equations: unknown curve " + *contact_curve);
  BranchEquationSystem sys;
  for (const auto& s : b.sectors) sys.variables.push_back(s.name);
  for (const auto& c : b.branch_curves) {
    BranchEquation eq;
    eq.curve = c.name;
    for (const auto& a : c.two_sheet_side) eq.two_coeffs[a.sector]++;
    for (const auto& a : c.one_sheet_side) eq.one_coeffs[a.sector]++;
    if (contact_curve && *contact_curve == c.name) eq.constant_term = 1;
    sys.equations.push_back(eq);
  }
  return sys;
}

struct WeightVector {
  std::map<std::string, Rat> weights;
};

enum class Feasibility { infeasible, only_zero, nontrivial };

struct FeasibilityResult {
  Feasibility kind = Feasibility::infeasible;
  std::optional<WeightVector> witness;
};

namespace detail {

// Fourier-Motzkin elimination over exact rationals with witness recovery.
// Rows encode sum(c_i x_i) + d >= 0.
class FourierMotzkin {
 public:
  explicit FourierMotzkin(int nvars) : n_(nvars) {}

  void add_row(std::vector<Rat> coeffs, Rat d) {
    coeffs.push_back(d);
    rows_.push_back(std::move(coeffs));
  }

  std::optional<std::vector<Rat>> solve() {
    steps_.clear();
    std::vector<std::vector<Rat>> rows = rows_;
    for (int k = n_ - 1; k >= 0; --k) {
      Step step;
      step.var = k;
      std::vector<std::vector<Rat>> keep;
      std::vector<std::vector<Rat>> lowers, uppers;
      for (auto& row : rows) {
        if (row[k].is_zero())
          keep.push_back(row);
        else if (row[k] > Rat(0))
          lowers.push_back(row);
        else
          uppers.push_back(row);
      }
      step.lowers = lowers;
      step.uppers = uppers;
      for (const auto& lo : lowers)
        for (const auto& up : uppers) {
          // lo: c x_k >= -(rest_lo), up: -c' x_k >= -(rest_up)
          std::vector<Rat> combined(n_ + 1);
          Rat c = lo[k], cp = -up[k];
          for (int i = 0; i <= n_; ++i) combined[i] = lo[i] * cp + up[i] * c;
          combined[k] = Rat(0);
          keep.push_back(normalize(combined));
        }
      dedupe(keep);
      rows = std::move(keep);
      steps_.push_back(std::move(step));
    }
    for (const auto& row : rows)
      if (row[n_] < Rat(0)) return std::nullopt;
    // back-substitute x_0, x_1, ..., x_{n-1}
    std::vector<Rat> x(n_, Rat(0));
    for (int k = 0; k < n_; ++k) {
      const Step& step = steps_[n_ - 1 - k];
      Rat lo_best(0);
      bool has_lo = false;
      for (const auto& row : step.lowers) {
        Rat rest = row[n_];
        for (int i = 0; i < k; ++i) rest = rest + row[i] * x[i];
        Rat bound = -rest / row[k];
        if (!has_lo || bound > lo_best) {
          lo_best = bound;
          has_lo = true;
        }
      }
      x[k] = has_lo ? lo_best : Rat(0);
    }
    return x;
  }

 private:
  struct Step {
    int var;
    std::vector<std::vector<Rat>> lowers, uppers;
  };

  // positive rescale to coprime integer entries so dedupe catches
  // proportional rows
  static std::vector<Rat> normalize(std::vector<Rat> row) {
    long long scale = 1;
    for (const auto& r : row) scale = std::lcm(scale, r.den);
    long long g = 0;
    for (const auto& r : row) {
      long long v = r.num * (scale / r.den);
      g = std::gcd(g, v < 0 ? -v : v);
    }
    if (g == 0) return row;
    Rat factor(scale, g);
    for (auto& r : row) r = r * factor;
    return row;
  }

  static void dedupe(std::vector<std::vector<Rat>>& rows) {
    std::sort(rows.begin(), rows.end(),
              [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
                for (size_t i = 0; i < a.size(); ++i) {
                  if (a[i] < b[i]) return true;
                  if (b[i] < a[i]) return false;
                }
                return false;
              });
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  }

  int n_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Step> steps_;
};

}  // namespace detail

// Exact feasibility over nonnegative rationals. Homogeneous systems
// distinguish the zero-only case from a nontrivial nonnegative solution (the
// two coincide with integer solvability by scaling); inhomogeneous systems
// report feasibility with a witness.
inline FeasibilityResult solve_nonnegative(const BranchEquationSystem& sys) {
  int n = static_cast<int>(sys.variables.size());
  std::map<std::string, int> vidx;
  for (int i = 0; i < n; ++i) vidx[sys.variables[i]] = i;

  bool homog = sys.homogeneous();
  auto build = [&](bool add_sum_one) {
    detail::FourierMotzkin fm(n);
    for (const auto& eq : sys.equations) {
      std::vector<Rat> c(n, Rat(0));
      for (const auto& [s, k] : eq.two_coeffs) c[vidx.at(s)] = c[vidx.at(s)] + Rat(k);
      for (const auto& [s, k] : eq.one_coeffs) c[vidx.at(s)] = c[vidx.at(s)] - Rat(k);
      // two_side + const = one_side  =>  c . x + const = 0
      fm.add_row(c, Rat(eq.constant_term));
      std::vector<Rat> neg(n);
      for (int i = 0; i < n; ++i) neg[i] = -c[i];
      fm.add_row(neg, Rat(-eq.constant_term));
    }
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> c(n, Rat(0));
      c[i] = Rat(1);
      fm.add_row(c, Rat(0));
    }
    if (add_sum_one) {
      std::vector<Rat> ones(n, Rat(1)), negones(n, Rat(-1));
      fm.add_row(ones, Rat(-1));
      fm.add_row(negones, Rat(1));
    }
    return fm;
  };

  FeasibilityResult res;
  auto fm = build(homog);
  auto x = fm.solve();
  if (!x) {
    res.kind = homog ? Feasibility::only_zero : Feasibility::infeasible;
    return res;
  }
  res.kind = Feasibility::nontrivial;
  WeightVector w;
  for (int i = 0; i < n; ++i) w.weights[sys.variables[i]] = (*x)[i];
  res.witness = w;
  return res;
}

// Substitute a weight vector into the homogeneous equations.
inline bool satisfies_branch_equations(const BranchEquationSystem& sys, const WeightVector& w) {
  for (const auto& eq : sys.equations) {
    Rat lhs(eq.constant_term), rhs(0);
    for (const auto& [s, k] : eq.two_coeffs) lhs = lhs + w.weights.at(s) * Rat(k);
    for (const auto& [s, k] : eq.one_coeffs) rhs = rhs + w.weights.at(s) * Rat(k);
    if (lhs != rhs) return false;
  }
  return true;
}

inline bool carries_closed_surface(const BranchedSurface& b) {
  auto sys = branch_equations(b);
  return solve_nonnegative(sys).kind == Feasibility::nontrivial;
}

inline bool admits_contact_surface(const BranchedSurface& b) {
  for (const auto& c : b.branch_curves) {
    auto sys = branch_equations(b, c.name);
    if (solve_nonnegative(sys).kind != Feasibility::infeasible) return true;
  }
  return false;
}

// Propagate a co-orientation through every branch-curve attachment; true iff
// no cycle of gluings reverses it.
inline bool is_transversely_orientable(const BranchedSurface& b) {
  // parity union-find over sectors and curves
  std::map<std::string, int> idx;
  for (const auto& s : b.sectors) idx["s:" + s.name] = static_cast<int>(idx.size());
  for (const auto& c : b.branch_curves) idx["c:" + c.name] = static_cast<int>(idx.size());
  std::vector<int> parent(idx.size()), parity(idx.size(), 0);
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<std::pair<int, int>(int)> find = [&](int x) -> std::pair<int, int> {
    if (parent[x] == x) return {x, 0};
    auto [root, p] = find(parent[x]);
    parent[x] = root;
    parity[x] = (parity[x] + p) % 2;
    return {root, parity[x]};
  };
  auto unite = [&](int a, int bnode, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(bnode);
    if (ra == rb) return (pa + pb) % 2 == rel % 2;
    parent[ra] = rb;
    parity[ra] = (rel + pa + pb) % 2;
    return true;
  };
  for (const auto& c : b.branch_curves) {
    auto all = c.two_sheet_side;
    all.insert(all.end(), c.one_sheet_side.begin(), c.one_sheet_side.end());
    for (const auto& a : all)
      if (!unite(idx.at("s:" + a.sector), idx.at("c:" + c.name), a.flip ? 1 : 0))
        return false;
  }
  return true;
}

// Euler characteristic of the surface carried with the given weights.
inline Rat carried_euler_characteristic(const BranchedSurface& b, const WeightVector& w) {
  auto sys = branch_equations(b);
  if (!satisfies_branch_equations(sys, w))
    throw std::domain_error("carried_euler_characteristic: weights violate branch equations");
  Rat total(0);
  for (const auto& s : b.sectors) {
    auto it = w.weights.find(s.name);
    if (it == w.weights.end())
      throw std::domain_error("carried_euler_characteristic: missing weight for " + s.name);
    if (it->second < Rat(0))
      throw std::domain_error("carried_euler_characteristic: negative weight");
    total = total + it->second * Rat(s.euler_char);
  }
  return total;
}

}  // namespace laminar
