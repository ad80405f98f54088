#pragma once

// Structural theory of frame double blocking sets of size 3q-1: the census of
// origin lines, the parameter s^3, the four product relations on the hole
// lines, and the multiset identities satisfied by the q+2 off-axis points.

#include <map>
#include <string>
#include <vector>

#include "pgblock/transform.hpp"

namespace pgblock {

enum class OriginPattern {
  kThreeTrisecants,  // q = 1 mod 3: slopes s, s*mu, s*mu^2
  kOneFiveSecant,    // q = 0 mod 3
};

struct OriginProfile {
  OriginPattern pattern;
  std::vector<Fe> slopes;  // ascending encodings of the long origin lines
  Fe parameter;            // s^3, identical for every slope in the set
};

// Counts over all q+1 lines through the origin: count -> multiplicity.
inline std::map<int, int> origin_line_census(const PlaneIndex& plane, const PointSet& s) {
  std::map<int, int> census;
  int origin = plane.index_of(Point{0, 0, 1});
  for (int li : plane.lines_through(origin)) {
    int c = 0;
    for (int pi : plane.points_on(li)) c += s.contains(pi);
    ++census[c];
  }
  return census;
}

namespace detail {
inline void require_frame(const PlaneIndex& plane, const PointSet& s, const char* who) {
  if (!in_frame(plane, s))
    throw std::invalid_argument(std::string(who) + ": set not in the two-axis frame");
}
}  // namespace detail

// Classifies the q-1 origin lines off the axes and returns the parameter.
// Throws when the census cannot belong to a frame double blocking set: this
// is the hard validity oracle the search relies on.
inline OriginProfile origin_profile(const PlaneIndex& plane, const PointSet& s) {
  detail::require_frame(plane, s, "origin_profile");
  const Field& f = plane.field();
  const int q = plane.q();
  if (q % 3 == 2)
    throw std::invalid_argument("origin_profile: q = 2 mod 3 admits no valid profile");

  std::vector<Fe> slopes;
  int bisecants = 0;
  std::vector<int> longs;
  for (int m = 1; m < q; ++m) {
    Line l = normalize_line(f, Fe(m), f.neg(1), 0);  // slope-m line through the origin
    int li = plane.index_of(l);
    int c = 0;
    for (int pi : plane.points_on(li)) c += s.contains(pi);
    if (c == 2) {
      ++bisecants;
    } else {
      slopes.push_back(Fe(m));
      longs.push_back(c);
    }
  }

  OriginProfile out;
  if (q % 3 == 1) {
    if (slopes.size() != 3 || longs != std::vector<int>{3, 3, 3} || bisecants != q - 4)
      throw std::invalid_argument("origin_profile: census violates the trisecant pattern");
    // the three slopes must be s, s*mu, s*mu^2 with mu^2 + mu + 1 = 0
    Fe mu = f.div(slopes[1], slopes[0]);
    Fe muu = f.add(f.add(f.mul(mu, mu), mu), 1);
    if (muu != 0 || f.div(slopes[2], slopes[0]) != f.mul(mu, mu))
      throw std::invalid_argument("origin_profile: slopes are not a cube-root coset");
    out.pattern = OriginPattern::kThreeTrisecants;
  } else {
    if (slopes.size() != 1 || longs != std::vector<int>{5} || bisecants != q - 2)
      throw std::invalid_argument("origin_profile: census violates the 5-secant pattern");
    out.pattern = OriginPattern::kOneFiveSecant;
  }
  out.parameter = f.pow(slopes[0], 3);
  for (Fe sl : slopes)
    if (f.pow(sl, 3) != out.parameter)
      throw std::invalid_argument("origin_profile: parameter depends on the slope choice");
  out.slopes = std::move(slopes);
  return out;
}

struct RelationReport {
  Fe parameter;              // s^3 from origin_profile
  Fe mm, xx, yy, ab;         // products on l_inf, Xinf.Y1, Yinf.X1, X1.Y1
  bool mm_ok, xx_ok, yy_ok, ab_ok;
  bool all_ok() const { return mm_ok && xx_ok && yy_ok && ab_ok; }
};

// Verifies mm' = -s^3, xx' = 1/s^3, yy' = s^3, ab = -s^3 for the pairs of
// S-points on the four lines spanned by the holes.
inline RelationReport relation_check(const PlaneIndex& plane, const PointSet& s) {
  OriginProfile prof = origin_profile(plane, s);
  const Field& f = plane.field();

  auto two_on = [&](const Line& l, auto&& extract) {
    std::vector<Fe> vals;
    int li = plane.index_of(l);
    for (int pi : plane.points_on(li)) {
      if (!s.contains(pi)) continue;
      Point p = plane.point_at(pi);
      if (p == frame_x1() || p == frame_xinf() || p == frame_y1() || p == frame_yinf()) continue;
      vals.push_back(extract(p));
    }
    if (vals.size() != 2)
      throw std::invalid_argument("relation_check: hole line does not carry exactly two points");
    return f.mul(vals[0], vals[1]);
  };

  RelationReport r{};
  r.parameter = prof.parameter;
  // l_inf = [0:0:1], points (1:m:0)
  r.mm = two_on(normalize_line(f, 0, 0, 1), [&](const Point& p) { return p.y; });
  // Xinf.Y1 = [0:1:-1], points (x:1:1)
  r.xx = two_on(normalize_line(f, 0, 1, f.neg(1)), [&](const Point& p) { return p.x; });
  // Yinf.X1 = [1:0:-1], points (1:y:1)
  r.yy = two_on(normalize_line(f, 1, 0, f.neg(1)), [&](const Point& p) { return p.y; });
  // X1.Y1 = [1:1:-1], points (1:a:a+1); normalized form divides through by z
  r.ab = two_on(normalize_line(f, 1, 1, f.neg(1)), [&](const Point& p) {
    // (1:a:a+1) ~ (x:y:1) with a = y/x, or (1:-1:0) when a = -1
    return p.z == 0 ? f.neg(1) : f.div(p.y, p.x);
  });
  Fe s3 = prof.parameter;
  r.mm_ok = r.mm == f.neg(s3);
  r.xx_ok = r.xx == f.inv(s3);
  r.yy_ok = r.yy == s3;
  r.ab_ok = r.ab == f.neg(s3);
  return r;
}

struct MultisetReport {
  bool ok = true;
  std::string first_violation;  // empty when ok
  explicit operator bool() const { return ok; }
};

// The five multiset statements on the q+2 off-axis points (x_i : y_i : z_i),
// plus the two sum identities  sum y_i/x_i = 0  and  sum x_i/y_i = 0.
inline MultisetReport multiset_identities(const PlaneIndex& plane, const PointSet& s) {
  detail::require_frame(plane, s, "multiset_identities");
  const Field& f = plane.field();
  const int q = plane.q();

  std::vector<Point> off;
  for (int pi : s.indices()) {
    Point p = plane.point_at(pi);
    if (p.x != 0 && p.y != 0) off.push_back(p);
  }
  if (int(off.size()) != q + 2) return {false, "off-axis point count != q+2"};

  auto once_except_0_1_twice = [&](auto&& val, const char* name,
                                   MultisetReport& rep) {
    std::vector<int> cnt(q, 0);
    for (const Point& p : off) ++cnt[val(p)];
    for (int v = 0; v < q; ++v) {
      int want = (v == 0 || v == 1) ? 2 : 1;
      if (cnt[v] != want) {
        if (rep.ok) rep = {false, name};
        return;
      }
    }
  };

  MultisetReport rep;
  once_except_0_1_twice([&](const Point& p) { return f.div(p.z, p.x); }, "A", rep);
  if (!rep.ok) return rep;
  once_except_0_1_twice([&](const Point& p) { return f.div(f.sub(p.z, p.y), p.x); }, "B", rep);
  if (!rep.ok) return rep;
  {  // (C): slopes y/x cover all of F_q^*
    std::vector<int> cnt(q, 0);
    for (const Point& p : off) ++cnt[f.div(p.y, p.x)];
    if (cnt[0] != 0) return {false, "C"};
    for (int v = 1; v < q; ++v)
      if (cnt[v] < 1) return {false, "C"};
  }
  once_except_0_1_twice([&](const Point& p) { return f.div(p.z, p.y); }, "D", rep);
  if (!rep.ok) return rep;
  once_except_0_1_twice([&](const Point& p) { return f.div(f.sub(p.z, p.x), p.y); }, "E", rep);
  if (!rep.ok) return rep;

  Fe s1 = 0, s2 = 0;
  for (const Point& p : off) {
    s1 = f.add(s1, f.div(p.y, p.x));
    s2 = f.add(s2, f.div(p.x, p.y));
  }
  if (s1 != 0) return {false, "sum y/x"};
  if (s2 != 0) return {false, "sum x/y"};
  return rep;
}

// q = 2 mod 3 forbids two (q-1)-secants; three of them force q = 1 mod 3.
// Vacuously true below two (q-1)-secants.
inline bool hill_modulus_check(const PlaneIndex& plane, const PointSet& s) {
  const int q = plane.q();
  std::size_t longs = long_secants(plane, s, q - 1).size();
  if (longs >= 2 && q % 3 == 2) return false;
  if (longs >= 3 && q % 3 != 1) return false;
  return true;
}

}  // namespace pgblock
