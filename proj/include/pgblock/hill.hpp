#pragma once

// Desk-scale verification that no double blocking set of size 3q-1 arises
// from a triangle by removing six points and adding five new ones.
//
// Fixed triangle: sides lA = [0:0:1], lB = [1:0:0], lC = [0:1:0] with
// vertices A = (0:0:1), B = (1:0:0), C = (0:1:0).  Removals leave two holes
// on each side and never touch a vertex (a removed vertex or a side with
// fewer than two holes forces a q-secant or a full line, both of which push
// the set to 3q points; the affine bound behind the full-line case is
// checked independently by full_line_bound_check).  Hole configurations are
// enumerated up to the monomial stabilizer of the triangle, order 6(q-1)^2,
// with an orbit-size audit against the raw count C(q-1,2)^3.
//
// The five added points ("midpoints") live off all three sides.  Feasibility
// per configuration is a covering search: branch on a line of maximal
// residual deficiency, prune when any single deficiency exceeds the
// midpoints left or when the total exceeds 4x the midpoints left (one point
// can sit on at most 3 deficient vertex lines plus one further deficient
// line, since deficient lines consume the 6-hole budget at >= 1, >= 2 per
// line).  Any completion is re-validated by is_t_fold_blocking.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pgblock/transform.hpp"

namespace pgblock {

struct HoleConfig {
  // holes[side] = ascending parameters t of the two holes;
  // side 0: (1:t:0) on lA, side 1: (0:t:1) on lB, side 2: (t:0:1) on lC
  std::array<std::array<Fe, 2>, 3> holes;
};

enum class HoleClass {
  kGeneralPosition = 0,  // no three holes collinear
  kOneTriplet = 1,
  kDisjointTriplets = 2,
  kSharingTriplets = 3,  // two collinear triplets sharing a hole
};

inline Point hill_side_point(int side, Fe t) {
  if (side == 0) return {1, t, 0};
  if (side == 1) return {0, t, 1};
  return {t, 0, 1};
}

// Collinear triplets necessarily take one hole from each side (two same-side
// holes span the side itself).
inline HoleClass collinear_hole_census(const PlaneIndex& plane, const HoleConfig& cfg) {
  const Field& f = plane.field();
  std::vector<std::array<Fe, 3>> triplets;
  for (Fe ta : cfg.holes[0])
    for (Fe tb : cfg.holes[1])
      for (Fe tc : cfg.holes[2]) {
        Line l = line_through(f, hill_side_point(0, ta), hill_side_point(1, tb));
        if (incident(f, hill_side_point(2, tc), l)) triplets.push_back({ta, tb, tc});
      }
  if (triplets.empty()) return HoleClass::kGeneralPosition;
  if (triplets.size() == 1) return HoleClass::kOneTriplet;
  for (std::size_t i = 0; i < triplets.size(); ++i)
    for (std::size_t j = i + 1; j < triplets.size(); ++j)
      for (int s = 0; s < 3; ++s)
        if (triplets[i][s] == triplets[j][s]) return HoleClass::kSharingTriplets;
  return HoleClass::kDisjointTriplets;
}

struct HillClassStats {
  std::uint64_t configs = 0;
  std::uint64_t completions = 0;
};

struct HillCounterexample {
  HoleConfig holes;
  std::vector<std::int32_t> midpoints;  // point indices
};

struct HillResult {
  std::optional<HillCounterexample> counterexample;
  std::array<HillClassStats, 4> by_class;
  std::uint64_t raw_configs = 0;
  std::uint64_t canonical_configs = 0;
  std::uint64_t orbit_size_sum = 0;  // == raw_configs when the orbit audit holds
  std::uint64_t nodes = 0;
  bool hole_free() const { return !counterexample.has_value(); }
};

namespace detail {

// Action of one monomial projectivity on side parameters.
struct MonomialAction {
  std::array<int, 3> side;                  // image side of each side
  std::array<std::vector<Fe>, 3> param;     // image parameter per side
};

inline std::vector<MonomialAction> monomial_actions(const PlaneIndex& plane) {
  const Field& f = plane.field();
  const int q = plane.q();
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<MonomialAction> out;
  out.reserve(6 * (q - 1) * (q - 1));
  for (auto& perm : kPerms) {
    Projectivity::Mat pm{};
    for (int i = 0; i < 3; ++i) pm[3 * i + perm[i]] = 1;
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b) {
        Projectivity::Mat m = pm;
        for (int i = 0; i < 3; ++i) {
          m[3 * i + 0] = f.mul(m[3 * i + 0], Fe(a));
          m[3 * i + 1] = f.mul(m[3 * i + 1], Fe(b));
        }
        Projectivity g(f, m);
        MonomialAction act;
        for (int side = 0; side < 3; ++side) {
          act.param[side].assign(q, 0);
          Point img = g.apply(f, hill_side_point(side, 1));
          int s2;
          if (img.z == 0 && img.x == 1)
            s2 = 0;
          else if (img.x == 0 && img.z == 1)
            s2 = 1;
          else
            s2 = 2;
          act.side[side] = s2;
          for (int t = 1; t < q; ++t) {
            Point it = g.apply(f, hill_side_point(side, Fe(t)));
            act.param[side][t] = (s2 == 0 || s2 == 1) ? it.y : it.x;
          }
        }
        out.push_back(std::move(act));
      }
  }
  return out;
}

inline std::uint64_t encode_holes(const std::array<std::array<Fe, 2>, 3>& h) {
  std::uint64_t v = 0;
  for (auto& pair : h)
    for (Fe t : pair) v = (v << 8) | t;
  return v;
}

inline std::array<std::array<Fe, 2>, 3> act_on_holes(const MonomialAction& act,
                                                     const std::array<std::array<Fe, 2>, 3>& h) {
  std::array<std::array<Fe, 2>, 3> out{};
  for (int side = 0; side < 3; ++side) {
    Fe u = act.param[side][h[side][0]], v = act.param[side][h[side][1]];
    if (u > v) std::swap(u, v);
    out[act.side[side]] = {u, v};
  }
  return out;
}

// Covering solver: place `left` midpoints among the unit-square candidates so
// every line reaches 2 points.  cnt holds current |line ∩ (punctured ∪ chosen)|.
// The validator runs an independent blocking recheck before a completion is
// accepted; the search stops at the first one (none is expected).
class MidpointSolver {
 public:
  using Validator = std::function<bool(const std::vector<std::int32_t>&)>;

  MidpointSolver(const PlaneIndex& plane, std::vector<std::int16_t>& cnt, std::uint64_t& nodes,
                 Validator validate)
      : plane_(plane), cnt_(cnt), nodes_(nodes), q_(plane.q()), validate_(std::move(validate)) {
    for (int x = 1; x < q_; ++x)
      for (int y = 1; y < q_; ++y) candidates_.push_back(x * q_ + y);
    chosen_mask_.assign(plane.size(), 0);
  }

  // first validated completion, or empty
  std::vector<std::int32_t> solve(int left, std::uint64_t* completions = nullptr) {
    completions_ = completions;
    found_.clear();
    dfs(left);
    return found_;
  }

 private:
  bool dfs(int left) {
    ++nodes_;
    int total = 0, best_line = -1, best_d = 0;
    for (int li = 0; li < plane_.size(); ++li) {
      int d = 2 - cnt_[li];
      if (d > 0) {
        total += d;
        if (d > best_d) { best_d = d; best_line = li; }
      }
    }
    if (total == 0) {
      // every fill of the remaining midpoints works; report the least one
      std::vector<std::int32_t> fill = chosen_;
      for (int p : candidates_) {
        if (int(fill.size()) == int(chosen_.size()) + left) break;
        if (!chosen_mask_[p]) fill.push_back(p);
      }
      std::sort(fill.begin(), fill.end());
      if (!validate_(fill)) return false;
      found_ = fill;
      if (completions_) ++*completions_;
      return true;
    }
    if (left == 0 || best_d > left || total > 4 * left) return false;
    for (int p : plane_.points_on(best_line)) {
      if (p >= q_ * q_ || p % q_ == 0 || p / q_ == 0) continue;  // off-side candidates only
      if (chosen_mask_[p]) continue;
      chosen_.push_back(p);
      chosen_mask_[p] = 1;
      for (int li : plane_.lines_through(p)) ++cnt_[li];
      bool hit = dfs(left - 1);
      for (int li : plane_.lines_through(p)) --cnt_[li];
      chosen_mask_[p] = 0;
      chosen_.pop_back();
      if (hit) return true;
    }
    return false;
  }

  const PlaneIndex& plane_;
  std::vector<std::int16_t>& cnt_;
  std::uint64_t& nodes_;
  int q_;
  Validator validate_;
  std::vector<std::int32_t> candidates_;
  std::vector<std::int32_t> chosen_;
  std::vector<std::uint8_t> chosen_mask_;
  std::vector<std::int32_t> found_;
  std::uint64_t* completions_ = nullptr;
};

}  // namespace detail

// Exhaustive run over canonical hole configurations; returns the first
// counterexample (none is expected) plus per-class statistics and the
// orbit audit numbers.
inline HillResult hill_search(const PlaneIndex& plane) {
  const int q = plane.q();
  if (q < 3 || q > 16) throw std::invalid_argument("hill_search: supported range is 3 <= q <= 16");

  HillResult res;
  auto actions = detail::monomial_actions(plane);

  // triangle membership and base line counts
  std::vector<std::int32_t> tri;
  for (int side = 0; side < 3; ++side)
    for (int t = 1; t < q; ++t) tri.push_back(plane.index_of(hill_side_point(side, Fe(t))));
  tri.push_back(plane.index_of(Point{0, 0, 1}));
  tri.push_back(plane.index_of(Point{1, 0, 0}));
  tri.push_back(plane.index_of(Point{0, 1, 0}));
  std::vector<std::int16_t> base_cnt(plane.size(), 0);
  for (int pi : tri)
    for (int li : plane.lines_through(pi)) ++base_cnt[li];

  std::vector<std::array<Fe, 2>> pairs;
  for (int u = 1; u < q; ++u)
    for (int v = u + 1; v < q; ++v) pairs.push_back({Fe(u), Fe(v)});

  std::vector<std::int16_t> cnt;
  for (auto& pa : pairs)
    for (auto& pb : pairs)
      for (auto& pc : pairs) {
        ++res.raw_configs;
        std::array<std::array<Fe, 2>, 3> h{pa, pb, pc};
        std::uint64_t enc = detail::encode_holes(h);
        bool canonical = true;
        int stab = 0;
        for (const auto& act : actions) {
          std::uint64_t e2 = detail::encode_holes(detail::act_on_holes(act, h));
          if (e2 < enc) {
            canonical = false;
            break;
          }
          if (e2 == enc) ++stab;
        }
        if (!canonical) continue;
        ++res.canonical_configs;
        res.orbit_size_sum += actions.size() / stab;

        HoleConfig cfg{h};
        int cls = int(collinear_hole_census(plane, cfg));
        ++res.by_class[cls].configs;

        cnt = base_cnt;
        for (int side = 0; side < 3; ++side)
          for (Fe t : h[side]) {
            int pi = plane.index_of(hill_side_point(side, t));
            for (int li : plane.lines_through(pi)) --cnt[li];
          }
        auto validate = [&](const std::vector<std::int32_t>& mids) {
          PointSet s(plane.size());
          for (int pi : tri) s.insert(pi);
          for (int side = 0; side < 3; ++side)
            for (Fe t : h[side]) s.erase(plane.index_of(hill_side_point(side, t)));
          for (int pi : mids) s.insert(pi);
          return s.size() == 3 * q - 1 && is_t_fold_blocking(plane, s, 2);
        };
        detail::MidpointSolver solver(plane, cnt, res.nodes, validate);
        auto mids = solver.solve(5, &res.by_class[cls].completions);
        if (!mids.empty() && !res.counterexample)
          res.counterexample = HillCounterexample{cfg, mids};
      }
  return res;
}

// Minimum size of a blocking set of AG(2,q) by iterative-deepening search;
// the known answer is 2q-1.
inline int full_line_bound_check(int q) {
  if (q < 2 || q > 5) throw std::invalid_argument("full_line_bound_check: 2 <= q <= 5");
  Field f(q);
  PlaneIndex plane{f};
  int linf = plane.index_of(Line{0, 0, 1});
  std::vector<std::vector<std::int32_t>> affine_on;  // per affine line
  for (int li = 0; li < plane.size(); ++li) {
    if (li == linf) continue;
    std::vector<std::int32_t> pts;
    for (int pi : plane.points_on(li))
      if (pi < q * q) pts.push_back(pi);
    affine_on.push_back(std::move(pts));
  }
  std::vector<std::uint8_t> chosen(q * q, 0);
  std::vector<std::int16_t> cover(affine_on.size(), 0);
  std::vector<std::vector<std::int32_t>> lines_of_point(q * q);
  for (std::size_t i = 0; i < affine_on.size(); ++i)
    for (int pi : affine_on[i]) lines_of_point[pi].push_back(int(i));

  std::function<bool(int)> exists = [&](int k) -> bool {
    int uncovered = -1;
    for (std::size_t i = 0; i < cover.size(); ++i)
      if (cover[i] == 0) { uncovered = int(i); break; }
    if (uncovered < 0) return true;
    if (k == 0) return false;
    for (int pi : affine_on[uncovered]) {
      if (chosen[pi]) continue;
      chosen[pi] = 1;
      for (int li : lines_of_point[pi]) ++cover[li];
      bool ok = exists(k - 1);
      for (int li : lines_of_point[pi]) --cover[li];
      chosen[pi] = 0;
      if (ok) return true;
    }
    return false;
  };
  for (int k = 1; k <= q * q; ++k)
    if (exists(k)) return k;
  return q * q;
}

// Reduced variant: remove x <= 5 triangle points (vertices allowed) leaving
// every side with at least two holes, add x-1 midpoints.  Configurations
// with a side keeping q or q+1 points are excluded: a q-secant or a full
// line already forces 3q points.  Expected infeasible for every x.
inline std::uint64_t reduced_surgery_completions(const PlaneIndex& plane, int x) {
  if (x < 1 || x > 5) throw std::invalid_argument("reduced_surgery_completions: 1 <= x <= 5");
  const int q = plane.q();

  std::vector<std::int32_t> tri;
  for (int side = 0; side < 3; ++side)
    for (int t = 1; t < q; ++t) tri.push_back(plane.index_of(hill_side_point(side, Fe(t))));
  tri.push_back(plane.index_of(Point{0, 0, 1}));
  tri.push_back(plane.index_of(Point{1, 0, 0}));
  tri.push_back(plane.index_of(Point{0, 1, 0}));
  std::sort(tri.begin(), tri.end());

  std::vector<std::int16_t> base_cnt(plane.size(), 0);
  for (int pi : tri)
    for (int li : plane.lines_through(pi)) ++base_cnt[li];

  // per-point side membership for the hole-count filter
  int la = plane.index_of(Line{0, 0, 1}), lb = plane.index_of(Line{1, 0, 0}),
      lc = plane.index_of(Line{0, 1, 0});
  auto sides_of = [&](int pi) {
    std::array<bool, 3> s{};
    for (int li : plane.lines_through(pi)) {
      if (li == la) s[0] = true;
      if (li == lb) s[1] = true;
      if (li == lc) s[2] = true;
    }
    return s;
  };

  std::uint64_t completions = 0, nodes = 0;
  std::vector<std::int16_t> cnt = base_cnt;
  std::array<int, 3> holes_per_side{};
  std::vector<int> removed;

  std::function<void(std::size_t, int)> choose = [&](std::size_t from, int left) {
    if (left == 0) {
      if (holes_per_side[0] < 2 || holes_per_side[1] < 2 || holes_per_side[2] < 2) return;
      auto validate = [&](const std::vector<std::int32_t>& mids) {
        PointSet s(plane.size());
        for (int pi : tri) s.insert(pi);
        for (int pi : removed) s.erase(pi);
        for (int pi : mids) s.insert(pi);
        return s.size() == 3 * q - 1 && is_t_fold_blocking(plane, s, 2);
      };
      detail::MidpointSolver solver(plane, cnt, nodes, validate);
      solver.solve(x - 1, &completions);
      return;
    }
    for (std::size_t i = from; i < tri.size(); ++i) {
      int pi = tri[i];
      auto s = sides_of(pi);
      for (int k = 0; k < 3; ++k) holes_per_side[k] += s[k];
      for (int li : plane.lines_through(pi)) --cnt[li];
      removed.push_back(pi);
      choose(i + 1, left - 1);
      removed.pop_back();
      for (int li : plane.lines_through(pi)) ++cnt[li];
      for (int k = 0; k < 3; ++k) holes_per_side[k] -= s[k];
    }
  };
  choose(0, x);
  return completions;
}

}  // namespace pgblock
