#pragma once

// The built-in constructions: one minimal double blocking set of size 3q-1
// with two (q-1)-secants for each (q, index) in
// {(13,1),(16,1),(19,1),(19,2),(25,1),(27,1),(31,1),(31,2),(31,3),(37,1),(43,1)},
// stored verbatim as printed coordinates (omega-power tokens resolve through
// the field's discrete-log table at load), plus the verification harness.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pgblock/detail/catalog_data.hpp"
#include "pgblock/hunt.hpp"
#include "pgblock/structure.hpp"

namespace pgblock {

struct CatalogKey {
  int q, index;
};

inline std::vector<CatalogKey> catalog_keys() {
  std::vector<CatalogKey> out;
  for (const auto& e : detail::kCatalog) out.push_back({e.q, e.index});
  return out;
}

inline const detail::CatalogEntryData& catalog_data(int q, int index) {
  for (const auto& e : detail::kCatalog)
    if (e.q == q && e.index == index) return e;
  throw std::invalid_argument("catalog: unknown entry (" + std::to_string(q) + "," +
                              std::to_string(index) + ")");
}

// Field with the entry's pinned polynomial (the Field defaults).  Catalog
// coordinates are omega-power tokens, so omega must generate the units.
inline Field catalog_field(int q) {
  Field f(q);
  if (f.e() > 1 && !f.is_primitive(f.omega()))
    throw std::logic_error("catalog: omega is not primitive for q=" + std::to_string(q));
  return f;
}

// "wK" resolves to omega^K, a plain integer to its encoding.
inline Fe parse_token(const Field& f, const std::string& tok) {
  if (!tok.empty() && tok[0] == 'w') return f.pow(f.omega(), std::stoi(tok.substr(1)));
  int v = std::stoi(tok);
  if (v < 0 || v >= f.q()) throw std::invalid_argument("catalog: token out of range: " + tok);
  return Fe(v);
}

inline std::vector<Fe> parse_tokens(const Field& f, const std::string& s) {
  std::vector<Fe> out;
  std::istringstream ss(s);
  std::string tok;
  while (ss >> tok) out.push_back(parse_token(f, tok));
  return out;
}

namespace detail {
inline std::vector<Point> entry_points(const Field& f, const CatalogEntryData& e) {
  std::vector<Point> pts;
  std::istringstream ss(e.points);
  std::string tok;
  std::vector<Fe> tri;
  while (ss >> tok) {
    if (tok == ";") continue;
    tri.push_back(parse_token(f, tok));
    if (tri.size() == 3) {
      pts.push_back(normalize(f, tri[0], tri[1], tri[2]));
      tri.clear();
    }
  }
  if (!tri.empty()) throw std::logic_error("catalog: trailing coordinates");
  return pts;
}
}  // namespace detail

// The full 3q-1 set: both axes minus the four holes, plus the printed points.
inline PointSet builtin(const PlaneIndex& plane, int q, int index) {
  if (plane.q() != q) throw std::invalid_argument("builtin: plane/entry q mismatch");
  const Field& f = plane.field();
  const auto& data = catalog_data(q, index);
  PointSet s(plane.size());
  for (int v = 0; v < q; ++v) {
    if (v != 1) {
      s.insert(plane.index_of(Point{Fe(v), 0, 1}));
      s.insert(plane.index_of(Point{0, Fe(v), 1}));
    }
  }
  for (const Point& p : detail::entry_points(f, data)) {
    int pi = plane.index_of(p);
    if (s.contains(pi)) throw std::logic_error("builtin: duplicate point in table");
    s.insert(pi);
  }
  if (s.size() != 3 * q - 1) throw std::logic_error("builtin: cardinality != 3q-1");
  return s;
}

inline std::map<int, std::int64_t> expected_distribution(const detail::CatalogEntryData& e) {
  std::map<int, std::int64_t> out;
  std::istringstream ss(e.distribution);
  std::string tok;
  while (ss >> tok) {
    auto colon = tok.find(':');
    out[std::stoi(tok.substr(0, colon))] = std::stoll(tok.substr(colon + 1));
  }
  return out;
}

struct CheckLine {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass;
};

struct VerifyReport {
  int q = 0, index = 0;
  std::vector<CheckLine> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline std::string fmt_map(const std::map<int, std::int64_t>& m) {
  std::ostringstream out;
  for (auto it = m.rbegin(); it != m.rend(); ++it)
    out << (it == m.rbegin() ? "" : " ") << it->first << ":" << it->second;
  return out.str();
}

inline std::string fmt_fes(const std::vector<Fe>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << int(v[i]);
  return out.str();
}

inline void push(VerifyReport& r, std::string name, std::string want, std::string got) {
  bool ok = want == got;
  r.checks.push_back({std::move(name), std::move(want), std::move(got), ok});
}

// Checks shared between builtin entries and loaded files that sit in frame.
inline void structure_checks(VerifyReport& rep, const PlaneIndex& plane, const PointSet& s) {
  const Field& f = plane.field();
  try {
    OriginProfile prof = origin_profile(plane, s);
    push(rep, "origin_profile.pattern",
         plane.q() % 3 == 1 ? "three trisecants" : "one 5-secant",
         prof.pattern == OriginPattern::kThreeTrisecants ? "three trisecants" : "one 5-secant");
    RelationReport rel = relation_check(plane, s);
    push(rep, "relation.mm", fmt_fes({f.neg(rel.parameter)}), fmt_fes({rel.mm}));
    push(rep, "relation.xx", fmt_fes({f.inv(rel.parameter)}), fmt_fes({rel.xx}));
    push(rep, "relation.yy", fmt_fes({rel.parameter}), fmt_fes({rel.yy}));
    push(rep, "relation.ab", fmt_fes({f.neg(rel.parameter)}), fmt_fes({rel.ab}));
  } catch (const std::exception& e) {
    rep.checks.push_back({"origin_profile", "valid census", e.what(), false});
  }
  MultisetReport ms = multiset_identities(plane, s);
  push(rep, "multiset_identities", "ok", ms.ok ? "ok" : "violated: " + ms.first_violation);
  push(rep, "hill_modulus", "ok", hill_modulus_check(plane, s) ? "ok" : "violated");
}

}  // namespace detail

// Full verification of one built-in entry against its published data.
inline VerifyReport verify_entry(int q, int index) {
  const auto& data = catalog_data(q, index);
  Field f = catalog_field(q);
  PlaneIndex plane(f);
  PointSet s = builtin(plane, q, index);
  FrameGroup g(plane.field());

  VerifyReport rep;
  rep.q = q;
  rep.index = index;
  using detail::push;

  push(rep, "cardinality", std::to_string(3 * q - 1), std::to_string(s.size()));
  push(rep, "double_blocking", "true", is_t_fold_blocking(plane, s, 2) ? "true" : "false");
  push(rep, "minimal", "true", is_minimal(plane, s, 2) ? "true" : "false");

  auto longs = long_secants(plane, s, q - 1);
  bool axes_ok = longs.size() == 2 && longs[0] == axis_y() && longs[1] == axis_x();
  push(rep, "long_secants", "[1:0:0] [0:1:0]", axes_ok ? "[1:0:0] [0:1:0]" : "unexpected");
  push(rep, "no_q_secant", "0", std::to_string(long_secants(plane, s, q).size()));

  SecantDistribution dist = secant_distribution(plane, s);
  push(rep, "distribution(t>=3)", detail::fmt_map(expected_distribution(data)),
       detail::fmt_map(dist.tail(3)));
  push(rep, "counting_identities", "hold", dist.identities_hold(q, s.size()) ? "hold" : "violated");
  push(rep, "n1_n0", "0 0", std::to_string(dist.at(1)) + " " + std::to_string(dist.at(0)));

  try {
    OriginProfile prof = origin_profile(plane, s);
    push(rep, "origin_slopes", detail::fmt_fes(parse_tokens(f, data.long_slopes)),
         detail::fmt_fes(prof.slopes));
    push(rep, "parameter", detail::fmt_fes({parse_token(f, data.parameter)}),
         detail::fmt_fes({prof.parameter}));
  } catch (const std::exception& e) {
    rep.checks.push_back({"origin_profile", "valid census", e.what(), false});
  }
  {
    auto roots = f.cube_roots_of_unity();
    push(rep, "cube_roots", detail::fmt_fes(parse_tokens(f, data.cube_roots)),
         detail::fmt_fes(roots.roots));
  }
  {
    RelationReport rel = relation_check(plane, s);
    push(rep, "relations", "all hold", rel.all_ok() ? "all hold" : "violated");
  }
  {
    MultisetReport ms = multiset_identities(plane, s);
    push(rep, "multiset_identities", "ok", ms.ok ? "ok" : "violated: " + ms.first_violation);
  }
  {
    auto stab = stabilizer_indices(plane, g, s);
    std::string want = data.symmetric ? "identity+T" : "identity";
    std::string got = stab == std::vector<int>{0}      ? "identity"
                      : stab == std::vector<int>{0, 4} ? "identity+T"
                                                       : "order " + std::to_string(stab.size());
    push(rep, "stabilizer", want, got);
  }
  push(rep, "hill_modulus", "ok", hill_modulus_check(plane, s) ? "ok" : "violated");
  return rep;
}

// Generic verification of a loaded pointset (no published table to compare).
inline VerifyReport verify_set(const PlaneIndex& plane, const PointSet& s) {
  VerifyReport rep;
  rep.q = plane.q();
  using detail::push;
  push(rep, "double_blocking", "true", is_t_fold_blocking(plane, s, 2) ? "true" : "false");
  if (is_t_fold_blocking(plane, s, 2))
    push(rep, "minimal", "true", is_minimal(plane, s, 2) ? "true" : "false");
  SecantDistribution dist = secant_distribution(plane, s);
  push(rep, "counting_identities", "hold",
       dist.identities_hold(plane.q(), s.size()) ? "hold" : "violated");
  if (in_frame(plane, s)) detail::structure_checks(rep, plane, s);
  return rep;
}

}  // namespace pgblock
