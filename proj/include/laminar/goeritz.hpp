#pragma once

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

#include "laminar/planar_diagram.hpp"

namespace laminar {

// Face structure of a closed connected diagram, from the rotation system the
// crossing tuples define. Corner k of a crossing is the region between slots
// k and k+1; faces are orbits of the corner-walk, and for a connected closed
// diagram Euler's formula forces #faces == #crossings + 2.
struct FaceSystem {
  std::vector<std::vector<std::pair<int, int>>> faces;  // face -> (crossing, corner)
  std::vector<std::array<int, 4>> face_of_corner;       // crossing -> corner -> face
};

inline FaceSystem trace_faces(const PlanarDiagram& d) {
  if (!d.closed()) throw std::invalid_argument("trace_faces: need a closed diagram");
  StrandWalker w(d);
  int n = static_cast<int>(d.crossings.size());
  FaceSystem fs;
  fs.face_of_corner.assign(n, {-1, -1, -1, -1});
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      if (fs.face_of_corner[c][p] != -1) continue;
      int f = static_cast<int>(fs.faces.size());
      fs.faces.emplace_back();
      int cc = c, pp = p;
      for (;;) {
        fs.face_of_corner[cc][pp] = f;
        fs.faces[f].push_back({cc, pp});
        int q = (pp + 1) % 4;
        Slot here;
        here.crossing = cc;
        here.pos = q;
        Slot nxt = w.other_end(d.crossings[cc].e[q], here);
        cc = nxt.crossing;
        pp = nxt.pos;
        if (cc == c && pp == p) break;
      }
    }
  return fs;
}

inline bool crossing_graph_connected(const PlanarDiagram& d) {
  int n = static_cast<int>(d.crossings.size());
  if (n == 0) return true;
  std::map<int, std::vector<int>> by_edge;
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) by_edge[d.crossings[c].e[p]].push_back(c);
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int p = 0; p < 4; ++p)
      for (int c2 : by_edge[d.crossings[c].e[p]])
        if (!seen[c2]) {
          seen[c2] = true;
          stack.push_back(c2);
        }
  }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

namespace detail {

// |det| of an integer matrix by fraction-free (Bareiss) elimination.
inline long long abs_det(std::vector<std::vector<long long>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long long prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == -1) return 0;
      std::swap(m[k], m[swap_row]);
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  long long det = m[n - 1][n - 1];
  return det < 0 ? -det : det;
}

inline long long goeritz_det_for_coloring(const PlanarDiagram& d, const FaceSystem& fs,
                                          const std::vector<int>& color, int white) {
  std::vector<int> white_index(fs.faces.size(), -1);
  int m = 0;
  for (size_t f = 0; f < fs.faces.size(); ++f)
    if (color[f] == white) white_index[f] = m++;
  // Goeritz form on white regions; crossings whose white corners coincide
  // contribute nothing.
  std::vector<std::vector<long long>> g(m, std::vector<long long>(m, 0));
  for (size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& fo = fs.face_of_corner[c];
    int wa, wb, eta;
    if (color[fo[0]] == white) {
      wa = white_index[fo[0]];
      wb = white_index[fo[2]];
      eta = 1;  // white corners merged by the B-smoothing
    } else {
      wa = white_index[fo[1]];
      wb = white_index[fo[3]];
      eta = -1;  // white corners merged by the A-smoothing
    }
    if (wa == wb) continue;
    g[wa][wb] -= eta;
    g[wb][wa] -= eta;
    g[wa][wa] += eta;
    g[wb][wb] += eta;
  }
  // principal minor: drop the last white region
  std::vector<std::vector<long long>> minor(m - 1, std::vector<long long>(m - 1));
  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j + 1 < m; ++j) minor[i][j] = g[i][j];
  return abs_det(minor);
}

}  // namespace detail

// Knot/link determinant from a checkerboard coloring. Both colorings are
// computed and must agree. Split diagrams have determinant 0.
inline long long goeritz_determinant(const PlanarDiagram& d) {
  if (!d.closed()) throw std::invalid_argument("goeritz_determinant: need a closed diagram");
  if (d.crossings.empty()) {
    if (d.free_loops == 0)
      throw std::invalid_argument("goeritz_determinant: empty diagram");
    return d.free_loops == 1 ? 1 : 0;
  }
  if (d.free_loops > 0) return 0;
  if (!crossing_graph_connected(d)) return 0;

  FaceSystem fs = trace_faces(d);
  int n = static_cast<int>(d.crossings.size());
  if (static_cast<int>(fs.faces.size()) != n + 2)
    throw std::logic_error("face count violates Euler formula; non-planar diagram data");

  // checkerboard coloring: faces across an edge get opposite colors
  std::vector<int> color(fs.faces.size(), -1);
  std::vector<int> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    // corners k-1 and k+1 of the same crossing sit across the edges at slots
    // k and k+1 from corner k
    for (auto [c, corner] : fs.faces[f]) {
      int left = fs.face_of_corner[c][(corner + 3) % 4];
      int right = fs.face_of_corner[c][(corner + 1) % 4];
      for (int g : {left, right}) {
        if (color[g] == -1) {
          color[g] = 1 - color[f];
          stack.push_back(g);
        } else if (color[g] == color[f]) {
          throw std::logic_error("diagram is not checkerboard colorable");
        }
      }
    }
  }
  for (int c : color)
    if (c == -1) throw std::logic_error("face coloring did not reach every face");

  long long det0 = detail::goeritz_det_for_coloring(d, fs, color, 0);
  long long det1 = detail::goeritz_det_for_coloring(d, fs, color, 1);
  if (det0 != det1)
    throw std::logic_error("Goeritz determinants of the two colorings disagree");
  return det0;
}

}  // namespace laminar
