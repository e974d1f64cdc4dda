#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace laminar {

// A crossing is a 4-tuple of edge ids listed counterclockwise starting from
// an edge of the under-strand. Slots 0,2 carry the under-strand, 1,3 the
// over-strand; a strand entering at slot i leaves at slot (i+2)%4.
struct Crossing {
  std::array<int, 4> e{-1, -1, -1, -1};

  Crossing() = default;
  Crossing(int a, int b, int c, int d) : e{a, b, c, d} {}

  // The two rotations by 2 describe the same crossing; store the lex-min one
  // so that equal diagrams compare bit-equal.
  void canonical_root() {
    std::array<int, 4> alt{e[2], e[3], e[0], e[1]};
    if (alt < e) e = alt;
  }

  friend bool operator==(const Crossing& a, const Crossing& b) { return a.e == b.e; }
};

// Combinatorial diagram of a knot, link, or tangle. boundary_ends lists the
// edge ids on the boundary circle in cyclic order (empty for closed
// diagrams); free_loops counts crossing-free circle components, which have
// no edge ids of their own.
struct PlanarDiagram {
  std::vector<Crossing> crossings;
  std::vector<int> boundary_ends;
  int n_strings = 0;
  int free_loops = 0;

  bool closed() const { return boundary_ends.empty(); }

  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
    return a.crossings == b.crossings && a.boundary_ends == b.boundary_ends &&
           a.n_strings == b.n_strings && a.free_loops == b.free_loops;
  }
};

// One occurrence of an edge: a crossing corner or a boundary position.
struct Slot {
  bool on_boundary = false;
  int crossing = -1;
  int pos = -1;       // 0..3 when on a crossing
  int boundary = -1;  // index into boundary_ends when on the boundary

  friend bool operator==(const Slot& a, const Slot& b) {
    return a.on_boundary == b.on_boundary && a.crossing == b.crossing &&
           a.pos == b.pos && a.boundary == b.boundary;
  }
};

namespace detail {

inline std::map<int, std::vector<Slot>> edge_occurrences(const PlanarDiagram& d) {
  std::map<int, std::vector<Slot>> occ;
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
    for (int p = 0; p < 4; ++p) {
      Slot s;
      s.crossing = c;
      s.pos = p;
      occ[d.crossings[c].e[p]].push_back(s);
    }
  for (int b = 0; b < static_cast<int>(d.boundary_ends.size()); ++b) {
    Slot s;
    s.on_boundary = true;
    s.boundary = b;
    occ[d.boundary_ends[b]].push_back(s);
  }
  return occ;
}

}  // namespace detail

inline std::vector<std::string> diagram_issues(const PlanarDiagram& d) {
  std::vector<std::string> issues;
  if (d.boundary_ends.size() % 2 != 0)
    issues.push_back("boundary_ends has odd length");
  if (d.n_strings * 2 != static_cast<int>(d.boundary_ends.size()))
    issues.push_back("n_strings does not match boundary_ends length");
  if (d.free_loops < 0) issues.push_back("negative free_loops");
  auto occ = detail::edge_occurrences(d);
  for (const auto& [edge, slots] : occ)
    if (slots.size() != 2)
      issues.push_back("edge " + std::to_string(edge) + " appears " +
                       std::to_string(slots.size()) + " times (want 2)");
  return issues;
}

inline void validate_diagram(const PlanarDiagram& d) {
  auto issues = diagram_issues(d);
  if (!issues.empty()) throw std::invalid_argument("invalid diagram: " + issues.front());
}

// Strand walker. Steps from one end of an edge to the other, passing straight
// through crossings.
class StrandWalker {
 public:
  explicit StrandWalker(const PlanarDiagram& d) : d_(d), occ_(detail::edge_occurrences(d)) {}

  Slot other_end(int edge, const Slot& here) const {
    const auto& slots = occ_.at(edge);
    if (slots.size() != 2) throw std::logic_error("edge without two ends");
    return slots[0] == here ? slots[1] : slots[0];
  }

  // Follow the strand starting at boundary position b; returns the sequence
  // of crossing slots entered, then the terminal boundary position.
  struct OpenTrace {
    std::vector<Slot> passes;
    int end_boundary = -1;
  };

  OpenTrace trace_from_boundary(int b) const {
    OpenTrace t;
    Slot here;
    here.on_boundary = true;
    here.boundary = b;
    int edge = d_.boundary_ends[b];
    size_t guard = 0;
    for (;;) {
      if (++guard > 8 * (d_.crossings.size() + d_.boundary_ends.size()) + 8)
        throw std::logic_error("strand trace does not terminate");
      Slot next = other_end(edge, here);
      if (next.on_boundary) {
        t.end_boundary = next.boundary;
        return t;
      }
      t.passes.push_back(next);
      int out = (next.pos + 2) % 4;
      here = next;
      here.pos = out;
      edge = d_.crossings[next.crossing].e[out];
    }
  }

  const std::map<int, std::vector<Slot>>& occurrences() const { return occ_; }

 private:
  const PlanarDiagram& d_;
  std::map<int, std::vector<Slot>> occ_;
};

// Number of circle components of a closed diagram, free loops included.
inline int component_count(const PlanarDiagram& d) {
  if (!d.closed()) throw std::invalid_argument("component_count: diagram has open strands");
  StrandWalker w(d);
  // Visit half-strand passes: each crossing contributes the under pass (0<->2)
  // and the over pass (1<->3).
  std::vector<std::array<bool, 4>> seen(d.crossings.size(), {false, false, false, false});
  int count = d.free_loops;
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
    for (int p = 0; p < 4; ++p) {
      if (seen[c][p]) continue;
      ++count;
      // walk the cycle starting by entering crossing c at slot p
      int cc = c, pp = p;
      size_t guard = 0;
      for (;;) {
        if (++guard > 8 * d.crossings.size() + 8)
          throw std::logic_error("component trace does not terminate");
        seen[cc][pp] = true;
        int out = (pp + 2) % 4;
        seen[cc][out] = true;
        Slot here;
        here.crossing = cc;
        here.pos = out;
        Slot next = w.other_end(d.crossings[cc].e[out], here);
        if (next.on_boundary) throw std::logic_error("closed diagram reached boundary");
        cc = next.crossing;
        pp = next.pos;
        if (cc == c && pp == p) break;
      }
    }
  return count;
}

inline bool is_knot(const PlanarDiagram& d) { return component_count(d) == 1; }

// True when every strand meets its crossings alternately over and under.
inline bool is_alternating(const PlanarDiagram& d) {
  StrandWalker w(d);
  auto pass_is_under = [](int pos) { return pos % 2 == 0; };
  // open strands
  std::vector<bool> boundary_done(d.boundary_ends.size(), false);
  for (int b = 0; b < static_cast<int>(d.boundary_ends.size()); ++b) {
    if (boundary_done[b]) continue;
    auto t = w.trace_from_boundary(b);
    boundary_done[b] = true;
    boundary_done[t.end_boundary] = true;
    for (size_t i = 1; i < t.passes.size(); ++i)
      if (pass_is_under(t.passes[i].pos) == pass_is_under(t.passes[i - 1].pos)) return false;
  }
  // closed strands
  std::vector<std::array<bool, 4>> seen(d.crossings.size(), {false, false, false, false});
  // mark passes already owned by open strands
  for (int b = 0; b < static_cast<int>(d.boundary_ends.size()); ++b) {
    auto t = w.trace_from_boundary(b);
    for (const auto& s : t.passes) {
      seen[s.crossing][s.pos] = true;
      seen[s.crossing][(s.pos + 2) % 4] = true;
    }
  }
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
    for (int p = 0; p < 4; ++p) {
      if (seen[c][p]) continue;
      std::vector<int> parities;
      int cc = c, pp = p;
      for (;;) {
        seen[cc][pp] = true;
        seen[cc][(pp + 2) % 4] = true;
        parities.push_back(pp % 2);
        Slot here;
        here.crossing = cc;
        here.pos = (pp + 2) % 4;
        Slot next = w.other_end(d.crossings[cc].e[here.pos], here);
        cc = next.crossing;
        pp = next.pos;
        if (cc == c && pp == p) break;
      }
      for (size_t i = 0; i < parities.size(); ++i)
        if (parities[i] == parities[(i + 1) % parities.size()] && parities.size() > 1)
          return false;
      if (parities.size() == 1) continue;  // single self-pass strand: nothing to alternate
    }
  return true;
}

// Swap over and under at every crossing. Boundary and edge ids are untouched,
// so mirror(mirror(d)) == d bit-exactly.
inline PlanarDiagram mirror(const PlanarDiagram& d) {
  PlanarDiagram m = d;
  for (auto& c : m.crossings) {
    c = Crossing(c.e[1], c.e[2], c.e[3], c.e[0]);
    c.canonical_root();
  }
  return m;
}

// Rotate the tangle a quarter turn: boundary positions shift by one.
inline PlanarDiagram rotate90(const PlanarDiagram& d) {
  PlanarDiagram r = d;
  if (!r.boundary_ends.empty())
    std::rotate(r.boundary_ends.begin(), r.boundary_ends.begin() + 1, r.boundary_ends.end());
  return r;
}

namespace detail {

// Union-find over edge ids used when gluing boundary ends. Fusing the two
// ends of one class closes it into a crossing-free loop.
class EdgeFuser {
 public:
  explicit EdgeFuser(const PlanarDiagram& d) : d_(d) {}

  int find(int e) {
    auto it = parent_.find(e);
    if (it == parent_.end()) return e;
    int r = find(it->second);
    parent_[e] = r;
    return r;
  }

  void fuse(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) {
      ++loops_;
      return;
    }
    parent_[std::max(ra, rb)] = std::min(ra, rb);
  }

  PlanarDiagram apply(std::vector<int> new_boundary, int extra_free_loops) {
    PlanarDiagram out;
    out.crossings = d_.crossings;
    for (auto& c : out.crossings) {
      for (auto& e : c.e) e = find(e);
      c.canonical_root();
    }
    for (auto& e : new_boundary) e = find(e);
    out.boundary_ends = std::move(new_boundary);
    out.n_strings = static_cast<int>(out.boundary_ends.size()) / 2;
    out.free_loops = d_.free_loops + extra_free_loops + loops_;
    return out;
  }

 private:
  const PlanarDiagram& d_;
  std::map<int, int> parent_;
  int loops_ = 0;
};

inline int max_edge_id(const PlanarDiagram& d) {
  int m = -1;
  for (const auto& c : d.crossings)
    for (int e : c.e) m = std::max(m, e);
  for (int e : d.boundary_ends) m = std::max(m, e);
  return m;
}

inline PlanarDiagram shift_edge_ids(const PlanarDiagram& d, int offset) {
  PlanarDiagram s = d;
  for (auto& c : s.crossings)
    for (auto& e : c.e) e += offset;
  for (auto& e : s.boundary_ends) e += offset;
  return s;
}

}  // namespace detail

// Renumber edges canonically: boundary edges first in boundary order, then
// edges in strand-discovery order from each boundary end, then the remaining
// closed strands in crossing-scan order. Crossing order is preserved.
inline PlanarDiagram canonicalize(const PlanarDiagram& d) {
  StrandWalker w(d);
  std::map<int, int> rename;
  int next = 0;
  auto visit = [&](int e) {
    if (rename.find(e) == rename.end()) rename[e] = next++;
  };
  for (int e : d.boundary_ends) visit(e);
  for (int b = 0; b < static_cast<int>(d.boundary_ends.size()); ++b) {
    Slot here;
    here.on_boundary = true;
    here.boundary = b;
    int edge = d.boundary_ends[b];
    size_t guard = 0;
    for (;;) {
      if (++guard > 8 * d.crossings.size() + 8) throw std::logic_error("canonicalize trace");
      visit(edge);
      Slot nxt = w.other_end(edge, here);
      if (nxt.on_boundary) break;
      here = nxt;
      here.pos = (nxt.pos + 2) % 4;
      edge = d.crossings[nxt.crossing].e[here.pos];
    }
  }
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
    for (int p = 0; p < 4; ++p) {
      int e0 = d.crossings[c].e[p];
      if (rename.find(e0) != rename.end()) continue;
      int cc = c, pp = p;
      for (;;) {
        visit(d.crossings[cc].e[pp]);
        Slot here;
        here.crossing = cc;
        here.pos = (pp + 2) % 4;
        visit(d.crossings[cc].e[here.pos]);
        Slot nxt = w.other_end(d.crossings[cc].e[here.pos], here);
        cc = nxt.crossing;
        pp = nxt.pos;
        if (cc == c && pp == p) break;
      }
    }
  PlanarDiagram out = d;
  for (auto& c : out.crossings) {
    for (auto& e : c.e) e = rename.at(e);
    c.canonical_root();
  }
  for (auto& e : out.boundary_ends) e = rename.at(e);
  return out;
}

// Horizontal sum of two 2-string tangles: a's east ends glue to b's west
// ends. Boundary convention for 2-string tangles: [NW, NE, SE, SW].
inline PlanarDiagram tangle_sum(const PlanarDiagram& a, const PlanarDiagram& b) {
  if (a.n_strings != 2 || b.n_strings != 2)
    throw std::invalid_argument("tangle_sum: both operands must be 2-string tangles");
  int offset = detail::max_edge_id(a) + 1;
  PlanarDiagram bs = detail::shift_edge_ids(b, offset);
  PlanarDiagram joined;
  joined.crossings = a.crossings;
  joined.crossings.insert(joined.crossings.end(), bs.crossings.begin(), bs.crossings.end());
  joined.boundary_ends = {a.boundary_ends[0], a.boundary_ends[1], a.boundary_ends[2],
                          a.boundary_ends[3], bs.boundary_ends[0], bs.boundary_ends[1],
                          bs.boundary_ends[2], bs.boundary_ends[3]};
  joined.n_strings = 4;
  joined.free_loops = a.free_loops + bs.free_loops;
  detail::EdgeFuser f(joined);
  f.fuse(a.boundary_ends[1], bs.boundary_ends[0]);  // a.NE ~ b.NW
  f.fuse(a.boundary_ends[2], bs.boundary_ends[3]);  // a.SE ~ b.SW
  PlanarDiagram out = f.apply(
      {a.boundary_ends[0], bs.boundary_ends[1], bs.boundary_ends[2], a.boundary_ends[3]}, 0);
  return canonicalize(out);
}

inline PlanarDiagram numerator_closure(const PlanarDiagram& t) {
  if (t.n_strings != 2)
    throw std::invalid_argument("numerator_closure: need a 2-string tangle");
  detail::EdgeFuser f(t);
  f.fuse(t.boundary_ends[0], t.boundary_ends[1]);  // NW ~ NE
  f.fuse(t.boundary_ends[3], t.boundary_ends[2]);  // SW ~ SE
  return canonicalize(f.apply({}, 0));
}

inline PlanarDiagram denominator_closure(const PlanarDiagram& t) {
  if (t.n_strings != 2)
    throw std::invalid_argument("denominator_closure: need a 2-string tangle");
  detail::EdgeFuser f(t);
  f.fuse(t.boundary_ends[0], t.boundary_ends[3]);  // NW ~ SW
  f.fuse(t.boundary_ends[1], t.boundary_ends[2]);  // NE ~ SE
  return canonicalize(f.apply({}, 0));
}

}  // namespace laminar
