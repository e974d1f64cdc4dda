#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "laminar/branched_surface.hpp"
#include "laminar/family.hpp"
#include "laminar/laurent.hpp"
#include "laminar/notation.hpp"
#include "laminar/planar_diagram.hpp"

namespace laminar {

// Structured-text documents, one record per line, versioned header, stable
// field order. All writers emit canonical data so identical inputs give
// byte-identical documents.

struct DocError : std::runtime_error {
  explicit DocError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

namespace detail {

struct LineReader {
  std::istringstream in;
  int line_no = 0;
  explicit LineReader(const std::string& text) : in(text) {}
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw DocError(line_no, msg); }
};

}  // namespace detail

// ---- diagrams ----

inline std::string diagram_to_text(const PlanarDiagram& d0) {
  PlanarDiagram d = canonicalize(d0);
  std::ostringstream os;
  os << "tangle-diagram v1\n";
  os << "n_strings " << d.n_strings << "\n";
  os << "free_loops " << d.free_loops << "\n";
  os << "boundary";
  for (int e : d.boundary_ends) os << " " << e;
  os << "\n";
  for (const auto& c : d.crossings)
    os << "crossing " << c.e[0] << " " << c.e[1] << " " << c.e[2] << " " << c.e[3] << "\n";
  os << "end\n";
  return os.str();
}

inline bool looks_like_diagram_doc(const std::string& text) {
  return text.rfind("tangle-diagram", 0) == 0;
}

inline PlanarDiagram diagram_from_text(const std::string& text) {
  detail::LineReader r(text);
  std::string line;
  if (!r.next(line) || line != "tangle-diagram v1")
    r.fail("expected header 'tangle-diagram v1'");
  PlanarDiagram d;
  bool saw_end = false;
  while (r.next(line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "n_strings") {
      if (!(ls >> d.n_strings)) r.fail("bad n_strings");
    } else if (tag == "free_loops") {
      if (!(ls >> d.free_loops)) r.fail("bad free_loops");
    } else if (tag == "boundary") {
      int e;
      while (ls >> e) d.boundary_ends.push_back(e);
    } else if (tag == "crossing") {
      Crossing c;
      if (!(ls >> c.e[0] >> c.e[1] >> c.e[2] >> c.e[3])) r.fail("bad crossing tuple");
      c.canonical_root();
      d.crossings.push_back(c);
    } else if (tag == "end") {
      saw_end = true;
      break;
    } else {
      r.fail("unknown record '" + tag + "'");
    }
  }
  if (!saw_end) r.fail("missing 'end'");
  validate_diagram(d);
  return canonicalize(d);
}

// ---- polynomials ----

inline std::string polynomial_to_text(const LaurentPolynomial& p) {
  std::ostringstream os;
  os << "laurent v1\n";
  for (const auto& [e, v] : p.coeffs()) os << "term " << e << " " << v << "\n";
  os << "end\n";
  return os.str();
}

inline LaurentPolynomial polynomial_from_text(const std::string& text) {
  detail::LineReader r(text);
  std::string line;
  if (!r.next(line) || line != "laurent v1") r.fail("expected header 'laurent v1'");
  LaurentPolynomial p;
  while (r.next(line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "end") return p;
    if (tag != "term") r.fail("unknown record '" + tag + "'");
    int e;
    long long v;
    if (!(ls >> e >> v)) r.fail("bad term");
    p.add_term(e, v);
  }
  r.fail("missing 'end'");
}

// ---- branched surfaces ----

inline std::string surface_to_text(const BranchedSurface& b) {
  std::ostringstream os;
  os << "branched-surface v1\n";
  for (const auto& s : b.sectors) {
    os << "sector " << s.name << " " << s.euler_char;
    for (const auto& c : s.boundaries) os << " " << c;
    os << "\n";
    if (s.declared_type)
      os << "sector-type " << s.name << " " << s.declared_type->first << " "
         << s.declared_type->second << "\n";
  }
  for (const auto& c : b.branch_curves) {
    os << "curve " << c.name << "\n";
    for (const auto& a : c.two_sheet_side)
      os << "two " << a.sector << " " << a.circle << " " << (a.flip ? "-" : "+") << "\n";
    for (const auto& a : c.one_sheet_side)
      os << "one " << a.sector << " " << a.circle << " " << (a.flip ? "-" : "+") << "\n";
  }
  os << "end\n";
  return os.str();
}

inline BranchedSurface surface_from_text(const std::string& text) {
  detail::LineReader r(text);
  std::string line;
  if (!r.next(line) || line != "branched-surface v1")
    r.fail("expected header 'branched-surface v1'");
  BranchedSurface b;
  BranchCurve* cur = nullptr;
  while (r.next(line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "sector") {
      Sector s;
      if (!(ls >> s.name >> s.euler_char)) r.fail("bad sector record");
      std::string c;
      while (ls >> c) s.boundaries.push_back(c);
      b.sectors.push_back(s);
    } else if (tag == "sector-type") {
      std::string name;
      int g, nb;
      if (!(ls >> name >> g >> nb)) r.fail("bad sector-type record");
      for (auto& s : b.sectors)
        if (s.name == name) s.declared_type = {{g, nb}};
    } else if (tag == "curve") {
      BranchCurve c;
      if (!(ls >> c.name)) r.fail("bad curve record");
      b.branch_curves.push_back(c);
      cur = &b.branch_curves.back();
    } else if (tag == "two" || tag == "one") {
      if (!cur) r.fail("attachment before any curve");
      Attachment a;
      std::string flip;
      if (!(ls >> a.sector >> a.circle >> flip)) r.fail("bad attachment record");
      a.flip = flip == "-";
      if (tag == "two")
        cur->two_sheet_side.push_back(a);
      else
        cur->one_sheet_side.push_back(a);
    } else if (tag == "end") {
      return b;
    } else {
      r.fail("unknown record '" + tag + "'");
    }
  }
  r.fail("missing 'end'");
}

// ---- certificates ----

inline std::string certificate_to_text(const Certificate& c) {
  std::ostringstream os;
  os << "certificate v1\n";
  os << "subject " << c.subject << "\n";
  for (const auto& a : c.pattern_arcs) os << "arc " << a[0] << " " << a[1] << "\n";
  for (const auto& ch : c.checks)
    os << "check " << ch.name << " " << status_name(ch.status) << " " << ch.detail << "\n";
  os << "verdict " << verdict_name(c.verdict) << "\n";
  os << "end\n";
  return os.str();
}

// ---- connection patterns ----

inline std::string pattern_to_text(const ConnectionPattern& p) {
  std::ostringstream os;
  os << "pattern v1\n";
  for (const auto& a : p.arcs) os << "arc " << a[0] << " " << a[1] << "\n";
  for (const auto& ins : p.insertions)
    os << "insert " << ins.arcs[0] << " " << ins.arcs[1] << "\n"
       << diagram_to_text(ins.tangle);
  os << "end\n";
  return os.str();
}

// Inline pattern syntax for the CLI: "opposite" or
// "arcs:0-3,1-2[;insert:0,1=EXPR]".
inline ConnectionPattern pattern_from_spec(const std::string& spec, int n,
                                           const FixtureRegistry& reg) {
  if (spec == "opposite") return ConnectionPattern::opposite(n);
  ConnectionPattern p;
  std::istringstream parts(spec);
  std::string part;
  while (std::getline(parts, part, ';')) {
    if (part.rfind("arcs:", 0) == 0) {
      std::istringstream as(part.substr(5));
      std::string pair;
      while (std::getline(as, pair, ',')) {
        auto dash = pair.find('-');
        if (dash == std::string::npos)
          throw std::invalid_argument("pattern arcs must look like 0-3");
        p.arcs.push_back({std::stoi(pair.substr(0, dash)), std::stoi(pair.substr(dash + 1))});
      }
    } else if (part.rfind("insert:", 0) == 0) {
      std::string body = part.substr(7);
      auto eq = body.find('=');
      auto comma = body.find(',');
      if (eq == std::string::npos || comma == std::string::npos || comma > eq)
        throw std::invalid_argument("insertions must look like insert:0,1=EXPR");
      TangleInsertion ins;
      ins.arcs = {std::stoi(body.substr(0, comma)),
                  std::stoi(body.substr(comma + 1, eq - comma - 1))};
      ins.tangle = evaluate(parse_tangle(body.substr(eq + 1)), reg);
      p.insertions.push_back(ins);
    } else {
      throw std::invalid_argument("unknown pattern clause: " + part);
    }
  }
  if (p.arcs.empty() && spec.rfind("arcs:", 0) != 0)
    throw std::invalid_argument("pattern spec must be 'opposite' or 'arcs:...'");
  return p;
}

}  // namespace laminar
