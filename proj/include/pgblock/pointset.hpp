#pragma once

// Analytics on point subsets of PG(2,q): secant census, t-fold blocking,
// minimality, long-secant extraction.

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "pgblock/plane.hpp"

namespace pgblock {

class PointSet {
 public:
  explicit PointSet(int universe) : member_(universe, 0) {}

  static PointSet of(const PlaneIndex& plane, std::span<const Point> pts) {
    PointSet s(plane.size());
    for (const Point& p : pts) s.insert(plane.index_of(p));
    return s;
  }

  void insert(int i) {
    if (i < 0 || i >= universe()) throw std::out_of_range("PointSet: index outside the plane");
    if (!member_[i]) { member_[i] = 1; ++size_; }
  }
  void erase(int i) {
    if (i < 0 || i >= universe()) throw std::out_of_range("PointSet: index outside the plane");
    if (member_[i]) { member_[i] = 0; --size_; }
  }
  bool contains(int i) const { return member_[i] != 0; }
  int size() const { return size_; }
  int universe() const { return int(member_.size()); }

  std::vector<std::int32_t> indices() const {
    std::vector<std::int32_t> out;
    out.reserve(size_);
    for (int i = 0; i < int(member_.size()); ++i)
      if (member_[i]) out.push_back(i);
    return out;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.member_ == b.member_;
  }

  // Lexicographic order of the sorted index sequences; defined for equal
  // cardinality (the only case canonical forms compare).
  static bool lex_less(const PointSet& a, const PointSet& b) {
    for (std::size_t i = 0; i < a.member_.size() && i < b.member_.size(); ++i)
      if (a.member_[i] != b.member_[i]) return a.member_[i] > b.member_[i];
    return false;
  }

 private:
  std::vector<std::uint8_t> member_;
  int size_ = 0;
};

// |line ∩ S| for every line, by dense line index.
inline std::vector<std::int32_t> line_counts(const PlaneIndex& plane, const PointSet& s) {
  std::vector<std::int32_t> cnt(plane.size(), 0);
  for (int li = 0; li < plane.size(); ++li) {
    int c = 0;
    for (int pi : plane.points_on(li)) c += s.contains(pi);
    cnt[li] = c;
  }
  return cnt;
}

class SecantDistribution {
 public:
  explicit SecantDistribution(std::vector<std::int64_t> counts) : n_(std::move(counts)) {}

  std::int64_t at(int t) const {
    return (t >= 0 && t < int(n_.size())) ? n_[t] : 0;
  }
  int max_t() const { return int(n_.size()) - 1; }

  std::map<int, std::int64_t> nonzero() const {
    std::map<int, std::int64_t> m;
    for (int t = 0; t < int(n_.size()); ++t)
      if (n_[t]) m[t] = n_[t];
    return m;
  }
  // published tables list only t >= min_t
  std::map<int, std::int64_t> tail(int min_t) const {
    std::map<int, std::int64_t> m;
    for (int t = min_t; t < int(n_.size()); ++t)
      if (n_[t]) m[t] = n_[t];
    return m;
  }

  // sum n_t = q^2+q+1 and sum t*n_t = |S|*(q+1)
  bool identities_hold(int q, int set_size) const {
    std::int64_t lines = 0, weighted = 0;
    for (int t = 0; t < int(n_.size()); ++t) {
      lines += n_[t];
      weighted += std::int64_t(t) * n_[t];
    }
    return lines == std::int64_t(q) * q + q + 1 && weighted == std::int64_t(set_size) * (q + 1);
  }

 private:
  std::vector<std::int64_t> n_;  // n_[t] = number of t-secants
};

inline SecantDistribution secant_distribution(const PlaneIndex& plane, const PointSet& s) {
  std::vector<std::int64_t> n(plane.q() + 2, 0);
  for (std::int32_t c : line_counts(plane, s)) ++n[c];
  return SecantDistribution(std::move(n));
}

inline bool is_t_fold_blocking(const PlaneIndex& plane, const PointSet& s, int t) {
  if (t < 0) throw std::invalid_argument("is_t_fold_blocking: t < 0");
  for (int li = 0; li < plane.size(); ++li) {
    int c = 0;
    for (int pi : plane.points_on(li)) {
      c += s.contains(pi);
      if (c >= t) break;
    }
    if (c < t) return false;
  }
  return true;
}

// S is minimal iff every point of S lies on some line meeting S in exactly t
// points (removing it would leave that line underfilled).
inline bool is_minimal(const PlaneIndex& plane, const PointSet& s, int t) {
  if (!is_t_fold_blocking(plane, s, t))
    throw std::invalid_argument("is_minimal: set is not t-fold blocking");
  auto cnt = line_counts(plane, s);
  for (int pi : s.indices()) {
    bool essential = false;
    for (int li : plane.lines_through(pi))
      if (cnt[li] == t) { essential = true; break; }
    if (!essential) return false;
  }
  return true;
}

// All k-secants, ascending by dense line index.
inline std::vector<Line> long_secants(const PlaneIndex& plane, const PointSet& s, int k) {
  std::vector<Line> out;
  if (k > plane.q() + 1) return out;
  auto cnt = line_counts(plane, s);
  for (int li = 0; li < plane.size(); ++li)
    if (cnt[li] == k) out.push_back(plane.line_at(li));
  return out;
}

}  // namespace pgblock
