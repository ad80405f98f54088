#pragma once

// Projectivities of PG(2,q) and the dihedral frame group G of order 8 that
// preserves the two-axis frame {axes minus the holes X1, Xinf, Y1, Yinf}.
// Points map by M*v, lines by w*M^-1.  Matrices are stored with the first
// nonzero entry (row major) scaled to 1 so group elements hash canonically.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pgblock/pointset.hpp"

namespace pgblock {

class Projectivity {
 public:
  using Mat = std::array<Fe, 9>;

  Projectivity(const Field& f, Mat m) : m_(scale(f, m)) {
    Mat adj;
    Fe det = 0;
    adjugate(f, m_, adj, det);
    if (det == 0) throw std::invalid_argument("Projectivity: singular matrix");
    inv_ = scale(f, adj);
  }

  const Mat& matrix() const { return m_; }
  const Mat& inverse_matrix() const { return inv_; }

  Point apply(const Field& f, const Point& p) const {
    std::array<Fe, 3> v{};
    for (int i = 0; i < 3; ++i)
      v[i] = f.add(f.add(f.mul(m_[3 * i], p.x), f.mul(m_[3 * i + 1], p.y)),
                   f.mul(m_[3 * i + 2], p.z));
    return normalize(f, v[0], v[1], v[2]);
  }

  Line apply_line(const Field& f, const Line& l) const {
    std::array<Fe, 3> w{};
    for (int j = 0; j < 3; ++j)
      w[j] = f.add(f.add(f.mul(l.a, inv_[j]), f.mul(l.b, inv_[3 + j])),
                   f.mul(l.c, inv_[6 + j]));
    return normalize_line(f, w[0], w[1], w[2]);
  }

  // this ∘ other (matrix product)
  Projectivity compose(const Field& f, const Projectivity& other) const {
    Mat c{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Fe s = 0;
        for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(m_[3 * i + k], other.m_[3 * k + j]));
        c[3 * i + j] = s;
      }
    return Projectivity(f, c);
  }

  friend bool operator==(const Projectivity& a, const Projectivity& b) {
    return a.m_ == b.m_;
  }

  static Projectivity identity(const Field& f) {
    return Projectivity(f, Mat{1, 0, 0, 0, 1, 0, 0, 0, 1});
  }

 private:
  static Mat scale(const Field& f, Mat m) {
    for (Fe v : m)
      if (v != 0) {
        Fe s = f.inv(v);
        for (Fe& x : m) x = f.mul(x, s);
        return m;
      }
    throw std::invalid_argument("Projectivity: zero matrix");
  }

  static void adjugate(const Field& f, const Mat& m, Mat& adj, Fe& det) {
    auto co = [&](int r0, int r1, int c0, int c1) {
      return f.sub(f.mul(m[3 * r0 + c0], m[3 * r1 + c1]), f.mul(m[3 * r0 + c1], m[3 * r1 + c0]));
    };
    // adj[j][i] = cofactor(i, j)
    adj[0] = co(1, 2, 1, 2);
    adj[3] = f.neg(co(1, 2, 0, 2));
    adj[6] = co(1, 2, 0, 1);
    adj[1] = f.neg(co(0, 2, 1, 2));
    adj[4] = co(0, 2, 0, 2);
    adj[7] = f.neg(co(0, 2, 0, 1));
    adj[2] = co(0, 1, 1, 2);
    adj[5] = f.neg(co(0, 1, 0, 2));
    adj[8] = co(0, 1, 0, 1);
    det = f.add(f.add(f.mul(m[0], adj[0]), f.mul(m[1], adj[3])), f.mul(m[2], adj[6]));
  }

  Mat m_;
  Mat inv_;
};

// The unique projectivity taking one ordered quadruple in general position to
// another.  Columns of the frame matrix are the first three points scaled so
// the unit point maps to the fourth.
inline Projectivity from_frame(const Field& f, const std::array<Point, 4>& src,
                               const std::array<Point, 4>& dst) {
  auto frame_matrix = [&](const std::array<Point, 4>& pts) {
    std::array<std::array<Fe, 3>, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = {pts[i].x, pts[i].y, pts[i].z};
    // solve [v0 v1 v2] * lambda = v3 by Cramer
    auto det3 = [&](const std::array<Fe, 3>& a, const std::array<Fe, 3>& b,
                    const std::array<Fe, 3>& c) {
      Fe d = f.mul(a[0], f.sub(f.mul(b[1], c[2]), f.mul(b[2], c[1])));
      d = f.sub(d, f.mul(b[0], f.sub(f.mul(a[1], c[2]), f.mul(a[2], c[1]))));
      d = f.add(d, f.mul(c[0], f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1]))));
      return d;
    };
    Fe d = det3(v[0], v[1], v[2]);
    if (d == 0) throw std::invalid_argument("from_frame: three points collinear");
    std::array<Fe, 3> lambda{f.div(det3(v[3], v[1], v[2]), d),
                             f.div(det3(v[0], v[3], v[2]), d),
                             f.div(det3(v[0], v[1], v[3]), d)};
    for (Fe l : lambda)
      if (l == 0) throw std::invalid_argument("from_frame: unit point collinear with two others");
    Projectivity::Mat m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[3 * i + j] = f.mul(lambda[j], v[j][i]);
    return Projectivity(f, m);
  };
  Projectivity ms = frame_matrix(src), md = frame_matrix(dst);
  return Projectivity(f, md.matrix()).compose(f, Projectivity(f, ms.inverse_matrix()));
}

// Frame landmarks.
inline Point frame_x1() { return {1, 0, 1}; }
inline Point frame_xinf() { return {1, 0, 0}; }
inline Point frame_y1() { return {0, 1, 1}; }
inline Point frame_yinf() { return {0, 1, 0}; }
inline Line axis_x() { return {0, 1, 0}; }
inline Line axis_y() { return {1, 0, 0}; }

class FrameGroup {
 public:
  static constexpr int kOrder = 8;

  explicit FrameGroup(const Field& f) {
    Fe m1 = f.neg(1);
    Projectivity F(f, {0, 1, 0, m1, 0, 0, 0, 1, m1});  // Yinf -> X1 -> Y1 -> Xinf
    Projectivity T(f, {0, 1, 0, 1, 0, 0, 0, 0, 1});    // reflection across [1:-1:0]
    els_.reserve(kOrder);
    els_.push_back(Projectivity::identity(f));
    for (int i = 1; i < 4; ++i) els_.push_back(F.compose(f, els_.back()));
    for (int i = 0; i < 4; ++i) els_.push_back(T.compose(f, els_[i]));
    for (int i = 0; i < kOrder; ++i)
      for (int j = i + 1; j < kOrder; ++j)
        if (els_[i] == els_[j]) throw std::logic_error("FrameGroup: collapsed elements");
  }

  // order: e, F, F^2, F^3, T, TF, TF^2, TF^3
  const Projectivity& element(int i) const { return els_[i]; }
  const Projectivity& rotation() const { return els_[1]; }
  const Projectivity& reflection() const { return els_[4]; }
  std::span<const Projectivity> all() const { return els_; }
  static bool is_reflection(int i) { return i >= 4; }

  int index_of(const Projectivity& g) const {
    for (int i = 0; i < kOrder; ++i)
      if (els_[i] == g) return i;
    return -1;
  }

 private:
  std::vector<Projectivity> els_;
};

inline PointSet apply(const PlaneIndex& plane, const Projectivity& g, const PointSet& s) {
  PointSet out(plane.size());
  const Field& f = plane.field();
  for (int pi : s.indices()) out.insert(plane.index_of(g.apply(f, plane.point_at(pi))));
  return out;
}

// Frame membership: S holds every axis point except exactly the four holes.
inline bool in_frame(const PlaneIndex& plane, const PointSet& s) {
  const int q = plane.q();
  auto hole = [&](const Point& p) {
    return p == frame_x1() || p == frame_xinf() || p == frame_y1() || p == frame_yinf();
  };
  for (int v = 0; v < q; ++v) {
    Point px{Fe(v), 0, 1}, py{0, Fe(v), 1};
    if (s.contains(plane.index_of(px)) == hole(px)) return false;
    if (s.contains(plane.index_of(py)) == hole(py)) return false;
  }
  for (Point p : {frame_xinf(), frame_yinf()})
    if (s.contains(plane.index_of(p))) return false;
  return true;
}

inline PointSet canonical_in_frame(const PlaneIndex& plane, const FrameGroup& g,
                                   const PointSet& s) {
  if (!in_frame(plane, s)) throw std::invalid_argument("canonical_in_frame: set not in frame");
  PointSet best = apply(plane, g.element(0), s);
  for (int i = 1; i < FrameGroup::kOrder; ++i) {
    PointSet img = apply(plane, g.element(i), s);
    if (PointSet::lex_less(img, best)) best = img;
  }
  return best;
}

// G-indices of the stabilizer; index 0 (the identity) is always present.
inline std::vector<int> stabilizer_indices(const PlaneIndex& plane, const FrameGroup& g,
                                           const PointSet& s) {
  if (!in_frame(plane, s)) throw std::invalid_argument("stabilizer: set not in frame");
  std::vector<int> out;
  for (int i = 0; i < FrameGroup::kOrder; ++i)
    if (apply(plane, g.element(i), s) == s) out.push_back(i);
  return out;
}

inline std::vector<Projectivity> stabilizer_in_G(const PlaneIndex& plane, const FrameGroup& g,
                                                 const PointSet& s) {
  std::vector<Projectivity> out;
  for (int i : stabilizer_indices(plane, g, s)) out.push_back(g.element(i));
  return out;
}

// Equivalence inside the frame.  Precondition: both sets are in frame and
// their only (q-1)-secants are the two axes; any projectivity between two
// such sets must then permute the four holes, i.e. lie in G.
inline bool equivalent_in_frame(const PlaneIndex& plane, const FrameGroup& g,
                                const PointSet& s1, const PointSet& s2) {
  auto check = [&](const PointSet& s) {
    if (!in_frame(plane, s))
      throw std::invalid_argument("equivalent_in_frame: set not in frame");
    auto ls = long_secants(plane, s, plane.q() - 1);
    if (ls.size() != 2 || ls[0] != axis_y() || ls[1] != axis_x())
      throw std::invalid_argument("equivalent_in_frame: (q-1)-secants are not exactly the axes");
  };
  check(s1);
  check(s2);
  return canonical_in_frame(plane, g, s1) == canonical_in_frame(plane, g, s2);
}

}  // namespace pgblock
