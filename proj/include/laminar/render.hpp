#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "laminar/family.hpp"
#include "laminar/notation.hpp"

namespace laminar {

// Deterministic schematic layout: twist regions on a unit grid, crossings
// drawn as two diagonal strokes with the under-strand broken. Only
// expression-shaped inputs (rational tangles composed by sum, mirror,
// rotation, closures) and family templates have layouts; everything else is
// reported, with the structured-text form as the fallback.

struct LayoutError : std::runtime_error {
  explicit LayoutError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace render_detail {

using Pt = std::pair<double, double>;

struct CrossGlyph {
  Pt over_a, over_b;
  Pt under_a, under_b;
};

struct Layout {
  double w = 1, h = 1;
  std::array<Pt, 4> ports;  // NW, NE, SE, SW
  std::vector<std::vector<Pt>> lines;
  std::vector<CrossGlyph> crossings;
};

inline Layout zero_layout() {
  Layout l;
  l.w = 1;
  l.h = 1;
  l.ports = {Pt{0, 0}, Pt{1, 0}, Pt{1, 1}, Pt{0, 1}};
  l.lines.push_back({{0, 0}, {1, 0}});
  l.lines.push_back({{0, 1}, {1, 1}});
  return l;
}

inline Layout infinity_layout() {
  Layout l;
  l.w = 1;
  l.h = 1;
  l.ports = {Pt{0, 0}, Pt{1, 0}, Pt{1, 1}, Pt{0, 1}};
  l.lines.push_back({{0, 0}, {0, 1}});
  l.lines.push_back({{1, 0}, {1, 1}});
  return l;
}

inline void twist_east_layout(Layout& l, int sign) {
  Pt ne = l.ports[1], se = l.ports[2];
  double x1 = std::max(ne.first, se.first) + 1;
  Pt new_ne{x1, ne.second}, new_se{x1, se.second};
  CrossGlyph g;
  // descending strand (old NE to new SE) is under for positive sign
  if (sign > 0) {
    g.under_a = ne;
    g.under_b = new_se;
    g.over_a = se;
    g.over_b = new_ne;
  } else {
    g.over_a = ne;
    g.over_b = new_se;
    g.under_a = se;
    g.under_b = new_ne;
  }
  l.crossings.push_back(g);
  l.ports[1] = new_ne;
  l.ports[2] = new_se;
  l.w = x1;
}

inline void twist_south_layout(Layout& l, int sign) {
  Pt sw = l.ports[3], se = l.ports[2];
  double y1 = std::max(sw.second, se.second) + 1;
  Pt new_sw{sw.first, y1}, new_se{se.first, y1};
  CrossGlyph g;
  // strand from old SW to new SE is under for positive sign
  if (sign > 0) {
    g.under_a = sw;
    g.under_b = new_se;
    g.over_a = se;
    g.over_b = new_sw;
  } else {
    g.over_a = sw;
    g.over_b = new_se;
    g.under_a = se;
    g.under_b = new_sw;
  }
  l.crossings.push_back(g);
  l.ports[2] = new_se;
  l.ports[3] = new_sw;
  l.h = y1;
}

inline Layout rational_layout(const RationalTangle& t) {
  if (t.is_infinity()) return infinity_layout();
  Layout l = zero_layout();
  for (size_t i = 0; i < t.cf.size(); ++i) {
    long long a = t.cf[i];
    int sign = a >= 0 ? 1 : -1;
    for (long long j = 0; j < (a < 0 ? -a : a); ++j) {
      if (i % 2 == 0)
        twist_east_layout(l, sign);
      else
        twist_south_layout(l, sign);
    }
  }
  return l;
}

inline void shift(Layout& l, double dx, double dy) {
  auto mv = [&](Pt& p) {
    p.first += dx;
    p.second += dy;
  };
  for (auto& p : l.ports) mv(p);
  for (auto& line : l.lines)
    for (auto& p : line) mv(p);
  for (auto& g : l.crossings) {
    mv(g.over_a);
    mv(g.over_b);
    mv(g.under_a);
    mv(g.under_b);
  }
  l.w += dx;
  l.h += dy;
}

inline Layout sum_layout(Layout a, Layout b) {
  shift(b, a.w + 0.6, 0);
  Layout out = a;
  out.lines.insert(out.lines.end(), b.lines.begin(), b.lines.end());
  out.crossings.insert(out.crossings.end(), b.crossings.begin(), b.crossings.end());
  out.lines.push_back({a.ports[1], b.ports[0]});  // a.NE -> b.NW
  out.lines.push_back({a.ports[2], b.ports[3]});  // a.SE -> b.SW
  out.ports = {a.ports[0], b.ports[1], b.ports[2], a.ports[3]};
  out.w = b.w;
  out.h = std::max(a.h, b.h);
  return out;
}

inline Layout mirror_layout(Layout l) {
  for (auto& g : l.crossings) {
    std::swap(g.over_a, g.under_a);
    std::swap(g.over_b, g.under_b);
  }
  return l;
}

inline Layout rotate_layout(const Layout& l) {
  Layout out;
  out.w = l.h;
  out.h = l.w;
  auto rot = [&](Pt p) { return Pt{p.second, l.w - p.first}; };
  out.ports = {rot(l.ports[1]), rot(l.ports[2]), rot(l.ports[3]), rot(l.ports[0])};
  for (const auto& line : l.lines) {
    std::vector<Pt> nl;
    for (const auto& p : line) nl.push_back(rot(p));
    out.lines.push_back(nl);
  }
  for (const auto& g : l.crossings)
    out.crossings.push_back(
        {rot(g.over_a), rot(g.over_b), rot(g.under_a), rot(g.under_b)});
  return out;
}

inline Layout close_layout(Layout l, bool numerator) {
  if (numerator) {
    double top = -0.7, bottom = l.h + 0.7;
    l.lines.push_back({l.ports[0],
                       {l.ports[0].first, top},
                       {l.ports[1].first, top},
                       l.ports[1]});
    l.lines.push_back({l.ports[3],
                       {l.ports[3].first, bottom},
                       {l.ports[2].first, bottom},
                       l.ports[2]});
  } else {
    double west = -0.7, east = l.w + 0.7;
    l.lines.push_back({l.ports[0],
                       {west, l.ports[0].second},
                       {west, l.ports[3].second},
                       l.ports[3]});
    l.lines.push_back({l.ports[1],
                       {east, l.ports[1].second},
                       {east, l.ports[2].second},
                       l.ports[2]});
  }
  return l;
}

inline Layout expression_layout(const TangleExpression& e) {
  switch (e.kind) {
    case TangleExpression::Kind::rational:
      return rational_layout(e.rational);
    case TangleExpression::Kind::fixture:
      throw LayoutError("no deterministic layout for fixture @" + e.fixture_name +
                        "; use the structured-text form instead");
    case TangleExpression::Kind::sum: {
      Layout acc = expression_layout(e.children.front());
      for (size_t i = 1; i < e.children.size(); ++i)
        acc = sum_layout(acc, expression_layout(e.children[i]));
      return acc;
    }
    case TangleExpression::Kind::mirror:
      return mirror_layout(expression_layout(e.children.front()));
    case TangleExpression::Kind::rotate:
      return rotate_layout(expression_layout(e.children.front()));
    case TangleExpression::Kind::nclose:
      return close_layout(expression_layout(e.children.front()), true);
    case TangleExpression::Kind::dclose:
      return close_layout(expression_layout(e.children.front()), false);
  }
  throw std::logic_error("unreachable");
}

inline Layout template_layout(const FamilySpec& spec) {
  check_family_spec(spec);
  TangleExpression piece;
  piece.kind = TangleExpression::Kind::sum;
  long long d = spec.variant == FamilyVariant::recipe_fixture ? 5 : 3;
  long long first = spec.variant == FamilyVariant::alternate_disks ? -1 : 1;
  piece.children.push_back(TangleExpression::make_rational(first, d));
  TangleExpression m;
  m.kind = TangleExpression::Kind::mirror;
  m.children.push_back(TangleExpression::make_rational(first, d));
  piece.children.push_back(m);
  Layout acc = expression_layout(piece);
  Layout one = acc;
  for (int i = 1; i < spec.n; ++i) {
    Layout next = one;
    shift(next, (acc.w + 1.0) * i, 0);
    acc.lines.insert(acc.lines.end(), next.lines.begin(), next.lines.end());
    acc.crossings.insert(acc.crossings.end(), next.crossings.begin(), next.crossings.end());
    acc.w = next.w;
  }
  return acc;
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v * 40.0);
  return buf;
}

inline void emit_polyline(std::ostringstream& os, const std::vector<Pt>& pts) {
  os << "<path d=\"M " << fmt(pts[0].first) << " " << fmt(pts[0].second);
  for (size_t i = 1; i < pts.size(); ++i)
    os << " L " << fmt(pts[i].first) << " " << fmt(pts[i].second);
  os << "\"/>\n";
}

inline std::string to_svg(const Layout& l) {
  double minx = 1e9, miny = 1e9, maxx = -1e9, maxy = -1e9;
  auto see = [&](const Pt& p) {
    minx = std::min(minx, p.first);
    miny = std::min(miny, p.second);
    maxx = std::max(maxx, p.first);
    maxy = std::max(maxy, p.second);
  };
  for (const auto& p : l.ports) see(p);
  for (const auto& line : l.lines)
    for (const auto& p : line) see(p);
  for (const auto& g : l.crossings) {
    see(g.over_a);
    see(g.over_b);
    see(g.under_a);
    see(g.under_b);
  }
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx - 0.5) << " "
     << fmt(miny - 0.5) << " " << fmt(maxx - minx + 1.0) << " " << fmt(maxy - miny + 1.0)
     << "\">\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\">\n";
  for (const auto& line : l.lines) emit_polyline(os, line);
  for (const auto& g : l.crossings) {
    // under strand broken around the midpoint of its segment
    double mx = (g.under_a.first + g.under_b.first) / 2;
    double my = (g.under_a.second + g.under_b.second) / 2;
    auto lerp = [&](const Pt& from, double t) {
      return Pt{from.first + (mx - from.first) * t, from.second + (my - from.second) * t};
    };
    emit_polyline(os, {g.under_a, lerp(g.under_a, 0.6)});
    emit_polyline(os, {g.under_b, lerp(g.under_b, 0.6)});
    emit_polyline(os, {g.over_a, g.over_b});
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace render_detail

inline std::string render_expression_svg(const TangleExpression& e) {
  return render_detail::to_svg(render_detail::expression_layout(e));
}

inline std::string render_template_svg(const FamilySpec& spec) {
  return render_detail::to_svg(render_detail::template_layout(spec));
}

}  // namespace laminar
