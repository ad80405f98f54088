#pragma once

// Exhaustive canonical-frame search for double blocking sets of size 3q-1
// whose two (q-1)-secants are the coordinate axes.
//
// Structure baked into the tree, all of it theorem-backed:
//   * q = 2 mod 3 admits no such set at all (residue short-circuit);
//   * the >2-point origin lines have slopes s, s*mu, s*mu^2 (or a single
//     5-secant slope in characteristic 3), so the search branches on the
//     parameter s^3 up to the action {P, -P, 1/P, -1/P} induced by the
//     frame group;
//   * the two points on l_inf satisfy m*m' = -s^3;
//   * column multiset: each x in F_q^* hosts one affine point, x = 1 two;
//     rows dually; per-slope point budgets from the origin census;
//   * a partial assignment dies when some line still needs more points
//     than its undecided cells can supply.
// Every full assignment is re-validated by is_t_fold_blocking, which shares
// no state with the propagation above, and solutions are reduced to
// canonical orbit representatives under the frame group.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "pgblock/structure.hpp"

namespace pgblock {

struct SearchConfig {
  int q = 0;
  bool symmetric_only = false;          // only sets fixed by the coordinate swap T
  std::optional<Fe> parameter;          // restrict to one exact s^3
  int threads = 1;                      // 0 = hardware concurrency
  std::optional<std::uint64_t> node_limit;  // budget per independent subtree task
  std::ostream* progress = nullptr;     // per-task diagnostics, usually stderr
};

struct SolutionSet {
  std::vector<PointSet> orbits;  // canonical representatives, lexicographically sorted
  bool exhaustive = true;
  std::uint64_t nodes = 0;
  std::string status;
};

inline std::vector<PointSet> orbit_reduce(const PlaneIndex& plane, const FrameGroup& g,
                                          std::span<const PointSet> raw) {
  std::vector<PointSet> canon;
  canon.reserve(raw.size());
  for (const PointSet& s : raw) canon.push_back(canonical_in_frame(plane, g, s));
  std::sort(canon.begin(), canon.end(), PointSet::lex_less);
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return canon;
}

namespace detail {

struct HuntTables {
  const PlaneIndex* plane;
  int q, n;
  std::vector<int> axes_part;                       // point indices of both axes minus holes
  std::vector<std::vector<std::pair<Fe, Fe>>> cells;  // per line: unit-coordinate affine cells
  std::vector<Fe> slope_of_cell;                    // [x*q+y] = y/x

  explicit HuntTables(const PlaneIndex& pl) : plane(&pl), q(pl.q()), n(pl.size()) {
    const Field& f = pl.field();
    for (int v = 0; v < q; ++v) {
      if (v != 1) {
        axes_part.push_back(pl.index_of(Point{Fe(v), 0, 1}));
        if (v != 0) axes_part.push_back(pl.index_of(Point{0, Fe(v), 1}));
      }
    }
    cells.resize(n);
    slope_of_cell.assign(std::size_t(q) * q, 0);
    for (int x = 1; x < q; ++x)
      for (int y = 1; y < q; ++y) {
        int pi = x * q + y;
        slope_of_cell[pi] = f.div(Fe(y), Fe(x));
        for (int li : pl.lines_through(pi)) cells[li].emplace_back(Fe(x), Fe(y));
      }
  }
};

struct HuntTask {
  Fe param;
  Fe m, mp;
  Fe first_y = 0;  // restrict the first column-1 slot; 0 = unrestricted
};

// One task's depth-first search below a fixed (parameter, infinity pair).
class HuntWorker {
 public:
  HuntWorker(const HuntTables& tab, const SearchConfig& cfg, std::vector<Fe> slope_target)
      : tab_(tab), cfg_(cfg), target_(std::move(slope_target)) {
    const int q = tab_.q;
    cols_.push_back(1);
    cols_.push_back(1);
    for (int x = 2; x < q; ++x) cols_.push_back(Fe(x));
    scratch_.resize(q + 1);
  }

  // returns false when the node budget ran out
  bool run(const HuntTask& task, std::vector<PointSet>& out) {
    const PlaneIndex& plane = *tab_.plane;
    const int q = tab_.q;
    out_ = &out;
    aborted_ = false;
    nodes_ = 0;

    row_left_.assign(q, 1);
    row_left_[0] = 0;
    row_left_[1] = 2;
    col_left_.assign(q, 1);
    col_left_[0] = 0;
    col_left_[1] = 2;
    slope_left_.assign(target_.begin(), target_.end());
    slope_left_[task.m]--;
    slope_left_[task.mp]--;
    if (slope_left_[task.m] < 0 || slope_left_[task.mp] < 0) return true;

    cnt_.assign(tab_.n, 0);
    base_.clear();
    base_ = tab_.axes_part;
    base_.push_back(plane.index_of(Point{1, task.m, 0}));
    base_.push_back(plane.index_of(Point{1, task.mp, 0}));
    for (int pi : base_)
      for (int li : plane.lines_through(pi)) ++cnt_[li];

    forced_.assign(q, 0);
    assigned_.clear();
    col1_.fill(0);
    first_y_ = task.first_y;

    std::vector<std::int32_t>& def0 = scratch_[0];
    def0.clear();
    for (int li = 0; li < tab_.n; ++li)
      if (cnt_[li] < 2) def0.push_back(li);

    dfs(0, 0);
    return !aborted_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool cell_live(Fe x, Fe y) const {
    return col_left_[x] > 0 && row_left_[y] > 0 &&
           slope_left_[tab_.slope_of_cell[std::size_t(x) * tab_.q + y]] > 0;
  }

  // can the undecided cells on li still raise it to 2?
  bool satisfiable(int li) const {
    int need = 2 - cnt_[li];
    if (need <= 0) return true;
    int avail = 0;
    for (auto [x, y] : tab_.cells[li]) {
      if (cell_live(x, y)) {
        if (++avail >= need) return true;
      }
    }
    return false;
  }

  struct MirrorForce {
    Fe col = 0, val = 0;
  };

  void dfs(int slot, Fe min_y_col1) {
    if (aborted_) return;
    ++nodes_;
    if (cfg_.node_limit && nodes_ > *cfg_.node_limit) {
      aborted_ = true;
      return;
    }
    const PlaneIndex& plane = *tab_.plane;
    const int q = tab_.q;
    if (slot == q) {
      emit();
      return;
    }
    Fe x = cols_[slot];
    const std::vector<std::int32_t>& parent_def = scratch_[slot];
    std::vector<std::int32_t>& child_def = scratch_[slot + 1];

    for (int yi = 1; yi < q; ++yi) {
      Fe y = Fe(yi);
      if (slot == 0 && first_y_ != 0 && y != first_y_) continue;
      if (slot == 1 && y <= min_y_col1) continue;
      if (row_left_[y] == 0) continue;
      Fe sl = tab_.slope_of_cell[std::size_t(x) * q + y];
      if (slope_left_[sl] == 0) continue;

      MirrorForce mf;
      if (cfg_.symmetric_only && !mirror_admissible(slot, x, y, mf)) continue;

      --row_left_[y];
      --slope_left_[sl];
      --col_left_[x];
      int pi = int(x) * q + y;
      for (int li : plane.lines_through(pi)) ++cnt_[li];
      assigned_.push_back(pi);
      if (slot < 2) col1_[slot] = y;
      if (mf.col) forced_[mf.col] = mf.val;

      bool ok = true;
      child_def.clear();
      for (int li : parent_def) {
        if (cnt_[li] >= 2) continue;
        if (!satisfiable(li)) {
          ok = false;
          break;
        }
        child_def.push_back(li);
      }
      if (ok) dfs(slot + 1, slot == 0 ? y : min_y_col1);

      if (mf.col) forced_[mf.col] = 0;
      if (slot < 2) col1_[slot] = 0;
      assigned_.pop_back();
      for (int li : plane.lines_through(pi)) --cnt_[li];
      ++col_left_[x];
      ++slope_left_[sl];
      ++row_left_[y];
      if (aborted_) return;
    }
  }

  // Mirror discipline for T-fixed sets: a chosen (x:y:1) forces (y:x:1).
  // Columns run in order 1,1,2,3,..., so a mirror landing in a later column
  // is recorded in forced_ and a mirror in an earlier column must already
  // have been placed.
  bool mirror_admissible(int slot, Fe x, Fe y, MirrorForce& mf) const {
    mf = {};
    if (slot < 2) {
      if (y == 1) return true;  // (1:1:1) is its own mirror
      if (forced_[y] != 0) return forced_[y] == 1;
      mf = {y, 1};
      return true;
    }
    if (forced_[x] != 0) return y == forced_[x];
    if (y == x) return true;
    if (y == 1) return col1_[0] == x || col1_[1] == x;
    if (y > x) {
      if (forced_[y] != 0) return forced_[y] == x;
      mf = {y, x};
      return true;
    }
    return false;  // y < x and column y did not pick x
  }

  void emit() {
    const PlaneIndex& plane = *tab_.plane;
    PointSet s(plane.size());
    for (int pi : base_) s.insert(pi);
    for (int pi : assigned_) s.insert(pi);
    if (!is_t_fold_blocking(plane, s, 2)) return;  // independent of the propagation
    if (cfg_.symmetric_only) {
      const FrameGroup g(plane.field());
      if (!(apply(plane, g.element(4), s) == s)) return;
    }
    out_->push_back(s);
  }

  const HuntTables& tab_;
  const SearchConfig& cfg_;
  std::vector<Fe> target_;

  std::vector<Fe> cols_;
  std::vector<int> row_left_, col_left_, slope_left_;
  std::vector<std::int16_t> cnt_;
  std::vector<int> base_;
  std::vector<int> assigned_;
  std::vector<Fe> forced_;
  Fe first_y_ = 0;
  std::array<Fe, 2> col1_{};
  std::vector<std::vector<std::int32_t>> scratch_;
  std::vector<PointSet>* out_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

inline SolutionSet search(const PlaneIndex& plane, const SearchConfig& cfg) {
  if (cfg.q != plane.q()) throw std::invalid_argument("search: config/plane q mismatch");
  if (cfg.q < 3) throw std::invalid_argument("search: q >= 3 required");
  const Field& f = plane.field();
  const int q = cfg.q;

  SolutionSet result;
  if (q % 3 == 2) {
    result.status = "exhaustive (residue short-circuit: q = 2 mod 3, no tree search)";
    return result;
  }
  if (q > 31 && !cfg.node_limit)
    throw std::invalid_argument("search: q > 31 requires an explicit node limit");
  if (cfg.parameter && (*cfg.parameter < 1 || *cfg.parameter >= q))
    throw std::invalid_argument("search: parameter must lie in [1, q)");

  // Parameter class representatives.  The frame group moves the parameter
  // through {P, -P, 1/P, -1/P}; only the centralizer of T (which acts as
  // {P, 1/P}) preserves T-fixedness, so symmetric mode reduces less.
  std::vector<Fe> params;
  if (cfg.parameter) {
    params.push_back(*cfg.parameter);
  } else {
    std::vector<bool> is_cube(q, false);
    for (int x = 1; x < q; ++x) is_cube[f.pow(Fe(x), 3)] = true;
    std::vector<bool> seen(q, false);
    for (int v = 1; v < q; ++v) {
      Fe pv = Fe(v);
      if (q % 3 == 1 && !is_cube[pv]) continue;  // parameters are cubes of slopes
      if (seen[pv]) continue;
      if (cfg.symmetric_only) {
        for (Fe o : {pv, f.inv(pv)}) seen[o] = true;
      } else {
        for (Fe o : {pv, f.neg(pv), f.inv(pv), f.neg(f.inv(pv))}) seen[o] = true;
      }
      params.push_back(pv);
    }
  }

  detail::HuntTables tables(plane);

  // task list: (parameter, infinity pair)
  struct TaskGroup {
    detail::HuntTask task;
    std::vector<Fe> slope_target;
  };
  std::vector<TaskGroup> tasks;
  for (Fe P : params) {
    std::vector<Fe> slope_set;
    for (int y = 1; y < q; ++y)
      if (f.pow(Fe(y), 3) == P) slope_set.push_back(Fe(y));
    if (slope_set.empty()) continue;  // filter value is not a cube
    std::vector<Fe> target(q, 1);
    target[0] = 0;
    if (q % 3 == 1)
      for (Fe s : slope_set) target[s] = 2;
    else
      target[slope_set[0]] = 4;
    Fe negP = f.neg(P);
    for (int m = 1; m < q; ++m) {
      Fe mp = f.div(negP, Fe(m));
      if (mp <= Fe(m)) continue;
      if (cfg.symmetric_only) {
        bool swap_pair = mp == f.inv(Fe(m));
        bool self_pair = Fe(m) == f.inv(Fe(m)) && mp == f.inv(mp);
        if (!swap_pair && !self_pair) continue;
      }
      // the first column-1 value splits each pair into independent subtrees
      for (int y1 = 1; y1 < q; ++y1)
        tasks.push_back({{P, Fe(m), mp, Fe(y1)}, target});
    }
  }

  int nthreads = cfg.threads > 0 ? cfg.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  if (std::size_t(nthreads) > tasks.size()) nthreads = int(std::max<std::size_t>(tasks.size(), 1));

  std::vector<std::vector<PointSet>> found(tasks.size());
  std::vector<std::uint8_t> complete(tasks.size(), 1);
  std::vector<std::uint64_t> node_counts(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;

  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      detail::HuntWorker w(tables, cfg, tasks[i].slope_target);
      complete[i] = w.run(tasks[i].task, found[i]) ? 1 : 0;
      node_counts[i] = w.nodes();
      if (cfg.progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        *cfg.progress << "task " << i + 1 << "/" << tasks.size() << ": s^3="
                      << int(tasks[i].task.param) << " m={" << int(tasks[i].task.m) << ","
                      << int(tasks[i].task.mp) << "} y1=" << int(tasks[i].task.first_y)
                      << " nodes=" << node_counts[i] << " found=" << found[i].size()
                      << (complete[i] ? "" : " (limit hit)") << "\n";
      }
    }
  };
  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<PointSet> raw;
  int incomplete = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    result.nodes += node_counts[i];
    if (!complete[i]) ++incomplete;
    for (auto& s : found[i]) raw.push_back(std::move(s));
  }
  FrameGroup g(f);
  if (cfg.symmetric_only) {
    // group by orbit, keep the least T-fixed member of each (the full
    // canonical form of a symmetric orbit need not itself be T-fixed)
    std::vector<std::pair<PointSet, PointSet>> keyed;  // (canonical, witness)
    for (const PointSet& s : raw) {
      PointSet c = canonical_in_frame(plane, g, s);
      bool merged = false;
      for (auto& [key, best] : keyed)
        if (key == c) {
          if (PointSet::lex_less(s, best)) best = s;
          merged = true;
          break;
        }
      if (!merged) keyed.emplace_back(std::move(c), s);
    }
    for (auto& [key, best] : keyed) result.orbits.push_back(std::move(best));
    std::sort(result.orbits.begin(), result.orbits.end(), PointSet::lex_less);
  } else {
    result.orbits = orbit_reduce(plane, g, raw);
  }
  result.exhaustive = incomplete == 0;
  result.status = result.exhaustive
                      ? "exhaustive"
                      : "incomplete: node limit reached in " + std::to_string(incomplete) +
                            " subtree task(s)";
  return result;
}

// Binary set-cover model in LP text format: one variable per point, every
// line covered at least twice, total cardinality 3q-1.  fix_frame pins the
// frame: axis points minus holes at 1, the four holes at 0, and both axis
// sums at q-1.
inline void export_ilp(const PlaneIndex& plane, bool fix_frame, std::ostream& out) {
  const int q = plane.q(), n = plane.size();
  out << "\\ double blocking set of size " << 3 * q - 1 << " in PG(2," << q << ")";
  if (fix_frame) out << ", two-axis frame fixed";
  out << "\n";
  out << "Minimize\n obj: 0\nSubject To\n";
  for (int li = 0; li < n; ++li) {
    out << " line_" << li << ":";
    bool first = true;
    for (int pi : plane.points_on(li)) {
      out << (first ? " P_" : " + P_") << pi;
      first = false;
    }
    out << " >= 2\n";
  }
  out << " cardinality:";
  for (int pi = 0; pi < n; ++pi) out << (pi ? " + P_" : " P_") << pi;
  out << " = " << 3 * q - 1 << "\n";
  if (fix_frame) {
    for (const char* name : {"axis_x", "axis_y"}) {
      bool is_x = name[5] == 'x';
      int li = is_x ? plane.index_of(axis_x()) : plane.index_of(axis_y());
      out << " " << name << ":";
      bool first = true;
      for (int pi : plane.points_on(li)) {
        out << (first ? " P_" : " + P_") << pi;
        first = false;
      }
      out << " = " << q - 1 << "\n";
    }
    out << "Bounds\n";
    std::vector<int> holes = {plane.index_of(frame_x1()), plane.index_of(frame_xinf()),
                              plane.index_of(frame_y1()), plane.index_of(frame_yinf())};
    std::vector<std::uint8_t> fixed(n, 0);
    for (int pi : holes) {
      out << " P_" << pi << " = 0\n";
      fixed[pi] = 1;
    }
    for (int li : {plane.index_of(axis_x()), plane.index_of(axis_y())})
      for (int pi : plane.points_on(li))
        if (!fixed[pi]) {
          out << " P_" << pi << " = 1\n";
          fixed[pi] = 1;
        }
  }
  out << "Binary\n";
  for (int pi = 0; pi < n; ++pi) out << " P_" << pi << "\n";
  out << "End\n";
}

}  // namespace pgblock
