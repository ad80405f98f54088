#pragma once

// PG(2,q): homogeneous point/line triples with a canonical representative,
// plus dense integer indexing and precomputed incidence lists.
//
// Normalization rule (points and lines alike): scale the last coordinate to 1
// if nonzero, else the first to 1 if nonzero, else the triple is (0:1:0).
// Dense index: (x:y:1) -> x*q + y, (1:m:0) -> q^2 + m, (0:1:0) -> q^2 + q;
// lines get the same map applied to [a:b:c].

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pgblock/galois.hpp"

namespace pgblock {

struct Point {
  Fe x{}, y{}, z{};
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct Line {
  Fe a{}, b{}, c{};
  friend bool operator==(const Line&, const Line&) = default;
  friend auto operator<=>(const Line&, const Line&) = default;
};

inline Point normalize(const Field& f, Fe x, Fe y, Fe z) {
  if (z != 0) {
    Fe iz = f.inv(z);
    return {f.mul(x, iz), f.mul(y, iz), 1};
  }
  if (x != 0) return {1, f.div(y, x), 0};
  if (y == 0) throw std::invalid_argument("normalize: zero triple");
  return {0, 1, 0};
}

inline Line normalize_line(const Field& f, Fe a, Fe b, Fe c) {
  Point p = normalize(f, a, b, c);
  return {p.x, p.y, p.z};
}

inline bool incident(const Field& f, const Point& p, const Line& l) {
  Fe s = f.add(f.add(f.mul(l.a, p.x), f.mul(l.b, p.y)), f.mul(l.c, p.z));
  return s == 0;
}

namespace detail {
inline std::array<Fe, 3> cross(const Field& f, Fe u0, Fe u1, Fe u2, Fe v0, Fe v1, Fe v2) {
  return {f.sub(f.mul(u1, v2), f.mul(u2, v1)),
          f.sub(f.mul(u2, v0), f.mul(u0, v2)),
          f.sub(f.mul(u0, v1), f.mul(u1, v0))};
}
}  // namespace detail

inline Line line_through(const Field& f, const Point& p, const Point& q) {
  auto w = detail::cross(f, p.x, p.y, p.z, q.x, q.y, q.z);
  if (w[0] == 0 && w[1] == 0 && w[2] == 0)
    throw std::invalid_argument("line_through: coincident points");
  return normalize_line(f, w[0], w[1], w[2]);
}

inline Point meet(const Field& f, const Line& l, const Line& m) {
  auto v = detail::cross(f, l.a, l.b, l.c, m.a, m.b, m.c);
  if (v[0] == 0 && v[1] == 0 && v[2] == 0)
    throw std::invalid_argument("meet: coincident lines");
  return normalize(f, v[0], v[1], v[2]);
}

class PlaneIndex {
 public:
  explicit PlaneIndex(Field f) : field_(std::move(f)), q_(field_.q()), n_(q_ * q_ + q_ + 1) {
    const int per = q_ + 1;
    points_on_.assign(std::size_t(n_) * per, 0);
    lines_through_.assign(std::size_t(n_) * per, 0);
    std::vector<int> pfill(n_, 0), lfill(n_, 0);
    for (int li = 0; li < n_; ++li) {
      Line l = line_at(li);
      for (int pi = 0; pi < n_; ++pi) {
        if (incident(field_, point_at(pi), l)) {
          points_on_[std::size_t(li) * per + pfill[li]++] = pi;
          lines_through_[std::size_t(pi) * per + lfill[pi]++] = li;
        }
      }
      if (pfill[li] != per) throw std::logic_error("PlaneIndex: line degree != q+1");
    }
  }

  const Field& field() const { return field_; }
  int q() const { return q_; }
  int size() const { return n_; }  // q^2 + q + 1 points, equally many lines

  int index_of(const Point& p) const {
    if (p.z == 1) return int(p.x) * q_ + p.y;
    if (p.x == 1) return q_ * q_ + p.y;
    return q_ * q_ + q_;
  }
  int index_of(const Line& l) const { return index_of(Point{l.a, l.b, l.c}); }

  Point point_at(int i) const {
    if (i < q_ * q_) return {Fe(i / q_), Fe(i % q_), 1};
    if (i < q_ * q_ + q_) return {1, Fe(i - q_ * q_), 0};
    return {0, 1, 0};
  }
  Line line_at(int i) const {
    Point p = point_at(i);
    return {p.x, p.y, p.z};
  }

  std::span<const std::int32_t> points_on(int li) const {
    return {&points_on_[std::size_t(li) * (q_ + 1)], std::size_t(q_ + 1)};
  }
  std::span<const std::int32_t> lines_through(int pi) const {
    return {&lines_through_[std::size_t(pi) * (q_ + 1)], std::size_t(q_ + 1)};
  }

 private:
  Field field_;
  int q_, n_;
  std::vector<std::int32_t> points_on_;      // stride q+1, by line index
  std::vector<std::int32_t> lines_through_;  // stride q+1, by point index
};

}  // namespace pgblock
