#include "tds/ptas.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tds/bitmask.hpp"
#include "tds/errors.hpp"

namespace tds::ptas {

namespace {

// Candidate ring slack. Band membership and rect distances are computed in
// offset space while adjacency uses raw coordinates, so a dominator exactly
// 1 away from a target on the rect edge could round to just past 1. A hair
// of slack keeps every legitimate dominator in the candidate set; extra
// candidates never change the optimum, only the search space.
constexpr double kRingSlack = 1e-9;
const double kRingSq = (1.0 + kRingSlack) * (1.0 + kRingSlack);

}  // namespace

int cardinality_cap(int k) {
  const int side = static_cast<int>(std::ceil(2.0 * std::sqrt(2.0) * k));
  return 2 * side * side;
}

std::vector<Band> make_bands(double extent, int first, int period) {
  std::vector<Band> bands;
  double lo = 0.0;
  double boundary = first;
  while (boundary < extent) {
    bands.push_back({lo, boundary});
    lo = boundary;
    boundary += period;
  }
  bands.push_back({lo, extent});
  return bands;
}

int band_index(const std::vector<Band>& bands, double v) {
  auto it = std::lower_bound(
      bands.begin(), bands.end(), v,
      [](const Band& b, double x) { return b.hi < x; });
  if (it == bands.end()) {
    throw internal_error("offset " + std::to_string(v) + " outside tiling");
  }
  return static_cast<int>(it - bands.begin());
}

std::vector<Band> strips_for_iteration(int i, const BBox& bbox, int k) {
  if (k < 1 || i < 1 || i > k) {
    throw input_error("strip shift must satisfy 1 <= i <= k");
  }
  return make_bands(bbox.height(), 2 * i, 2 * k);
}

std::vector<Rect> cells_for_strip(const Band& strip, int j, const BBox& bbox,
                                  int k) {
  if (k < 1 || j < 1 || j > k) {
    throw input_error("cell shift must satisfy 1 <= j <= k");
  }
  std::vector<Rect> rects;
  for (const Band& xb : make_bands(bbox.width(), 2 * j, 2 * k)) {
    rects.push_back({xb, strip});
  }
  return rects;
}

namespace {

// All point ids within distance 1 (+slack) of the rect, ascending. Rect and
// point positions are compared in offset space; the grid scan uses absolute
// coordinates with a one-cell margin, a strict superset of the ring.
std::vector<int> gather_candidates(const PointSet& ps, const GridIndex& idx,
                                   const Rect& rect) {
  const double ax = ps.bbox.min_x, ay = ps.bbox.min_y;
  const CellCoord lo = cell_of(ax + rect.x.lo - 1.0, ay + rect.y.lo - 1.0);
  const CellCoord hi = cell_of(ax + rect.x.hi + 1.0, ay + rect.y.hi + 1.0);
  std::vector<int> out;
  for (long long a = lo.first - 1; a <= hi.first + 1; ++a) {
    auto it = idx.cells.lower_bound({a, lo.second - 1});
    for (; it != idx.cells.end() && it->first.first == a &&
           it->first.second <= hi.second + 1;
         ++it) {
      for (int q : it->second) {
        const Point& p = ps[q];
        const double u = p.x - ax, v = p.y - ay;
        const double dx = std::max({rect.x.lo - u, 0.0, u - rect.x.hi});
        const double dy = std::max({rect.y.lo - v, 0.0, v - rect.y.hi});
        if (dx * dx + dy * dy <= kRingSq) out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Depth-limited set-cover search over candidates pre-sorted by descending
// coverage. suffix_best[c] = best coverage count from c on, so a branch dies
// as soon as remaining picks times best remaining coverage cannot finish.
struct CellSearch {
  std::vector<int> ids;           // candidate point ids, search order
  std::vector<Bitmask> cover;     // targets each candidate dominates
  std::vector<int> suffix_best;
  std::vector<int> chosen;        // indices into ids

  bool dfs(int start, int remaining, const Bitmask& uncovered, int ucnt) {
    if (ucnt == 0) return true;
    if (remaining == 0 || start >= static_cast<int>(ids.size())) return false;
    for (int c = start;
         c + remaining <= static_cast<int>(ids.size()); ++c) {
      if (static_cast<long long>(remaining) * suffix_best[c] < ucnt) break;
      const int gain = cover[c].count_and(uncovered);
      if (gain == 0) continue;  // redundant here, never part of a minimum
      chosen.push_back(c);
      if (dfs(c + 1, remaining - 1, uncovered.and_not(cover[c]), ucnt - gain))
        return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

Solution solve_cell(const CellProblem& cp, const PointSet& ps,
                    const GridIndex& idx) {
  Solution out;
  out.algo = "ptas";
  const int nt = static_cast<int>(cp.targets.size());
  if (nt == 0) return out;

  // Coverage masks over local target indices, built from the 9-cell scan
  // around each target so cost tracks actual neighborhoods.
  const int nc = static_cast<int>(cp.candidates.size());
  std::vector<Bitmask> cover(nc, Bitmask(nt));
  std::vector<int> lonely;
  for (int ti = 0; ti < nt; ++ti) {
    const Point& tp = ps[cp.targets[ti]];
    bool any = false;
    scan_neighbor_cells(idx, cell_of(tp.x, tp.y), [&](int q) {
      if (q == tp.id || dist_sq(tp, ps[q]) > 1.0) return;
      auto it =
          std::lower_bound(cp.candidates.begin(), cp.candidates.end(), q);
      if (it == cp.candidates.end() || *it != q) return;
      cover[it - cp.candidates.begin()].set(ti);
      any = true;
    });
    if (!any) lonely.push_back(tp.id);
  }
  if (!lonely.empty()) {
    throw infeasible_error("cell has targets with no candidate neighbor",
                           std::move(lonely));
  }

  CellSearch s;
  for (int ci = 0; ci < nc; ++ci) {
    if (cover[ci].count() > 0) s.ids.push_back(ci);
  }
  std::sort(s.ids.begin(), s.ids.end(), [&](int a, int b) {
    const int ca = cover[a].count(), cb = cover[b].count();
    if (ca != cb) return ca > cb;
    return cp.candidates[a] < cp.candidates[b];
  });
  s.cover.reserve(s.ids.size());
  for (int& ci : s.ids) {
    s.cover.push_back(cover[ci]);
    ci = cp.candidates[ci];
  }
  s.suffix_best.assign(s.ids.size(), 0);
  for (int c = static_cast<int>(s.ids.size()) - 1; c >= 0; --c) {
    s.suffix_best[c] = s.cover[c].count();
    if (c + 1 < static_cast<int>(s.ids.size())) {
      s.suffix_best[c] = std::max(s.suffix_best[c], s.suffix_best[c + 1]);
    }
  }

  // Greedy cover seeds the upper bound (and is returned if already optimal).
  std::vector<int> greedy;
  {
    Bitmask uncovered = Bitmask::all(nt);
    int ucnt = nt;
    while (ucnt > 0) {
      int best = -1, best_gain = 0;
      for (int c = 0; c < static_cast<int>(s.ids.size()); ++c) {
        const int g = s.cover[c].count_and(uncovered);
        if (g > best_gain) {
          best_gain = g;
          best = c;
        }
      }
      uncovered = uncovered.and_not(s.cover[best]);
      ucnt -= best_gain;
      greedy.push_back(best);
    }
  }
  const int ub = static_cast<int>(greedy.size());

  const Bitmask all_targets = Bitmask::all(nt);
  for (int t = 0; t < ub; ++t) {
    if (t > cp.cap) {
      throw internal_error("cell optimum exceeds cardinality cap " +
                           std::to_string(cp.cap));
    }
    s.chosen.clear();
    if (s.dfs(0, t, all_targets, nt)) {
      for (int c : s.chosen) out.ids.push_back(s.ids[c]);
      std::sort(out.ids.begin(), out.ids.end());
      return out;
    }
  }
  if (ub > cp.cap) {
    throw internal_error("cell optimum exceeds cardinality cap " +
                         std::to_string(cp.cap));
  }
  for (int c : greedy) out.ids.push_back(s.ids[c]);
  std::sort(out.ids.begin(), out.ids.end());
  return out;
}

namespace {

PtasResult solve_impl(const PointSet& ps, const GridIndex& idx,
                      const PtasConfig& cfg, bool parallel) {
  if (cfg.k < 1) throw input_error("ptas parameter k must be >= 1");
  const int k = cfg.k;

  PtasResult res;
  res.best.algo = "ptas";
  res.best.params["k"] = std::to_string(k);

  if (ps.empty()) {
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        IterationOutcome oc;
        oc.i = i;
        oc.j = j;
        oc.sol.algo = "ptas";
        res.iterations.push_back(std::move(oc));
      }
    }
    res.best_i = res.best_j = 1;
    res.best.params["i"] = "1";
    res.best.params["j"] = "1";
    return res;
  }

  auto iso = isolated_points(ps, idx);
  if (!iso.empty()) {
    throw infeasible_error(
        "instance has isolated points; no total dominating set exists",
        std::move(iso));
  }

  const int cap = cardinality_cap(k);
  const double ax = ps.bbox.min_x, ay = ps.bbox.min_y;

  // Materialize every cell of every shift up front; the subproblems are
  // independent and fan out below.
  struct Task {
    int iter;
    CellProblem cp;
  };
  std::vector<Task> tasks;
  std::vector<std::pair<int, int>> shifts;
  for (int i = 1; i <= k; ++i) {
    const auto ybands = strips_for_iteration(i, ps.bbox, k);
    for (int j = 1; j <= k; ++j) {
      const auto xbands = make_bands(ps.bbox.width(), 2 * j, 2 * k);
      const int iter = static_cast<int>(shifts.size());
      shifts.emplace_back(i, j);
      std::map<std::pair<int, int>, std::vector<int>> groups;
      for (const Point& p : ps.points) {
        const int yi = band_index(ybands, p.y - ay);
        const int xi = band_index(xbands, p.x - ax);
        groups[{yi, xi}].push_back(p.id);
      }
      for (auto& [key, targets] : groups) {
        Task t;
        t.iter = iter;
        t.cp.rect = {xbands[key.second], ybands[key.first]};
        t.cp.targets = std::move(targets);
        t.cp.candidates = gather_candidates(ps, idx, t.cp.rect);
        t.cp.cap = cap;
        tasks.push_back(std::move(t));
      }
    }
  }

  const int ntasks = static_cast<int>(tasks.size());
  std::vector<Solution> cell_sols(tasks.size());
  std::vector<std::exception_ptr> errs(tasks.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int t = 0; t < ntasks; ++t) {
    try {
      cell_sols[t] = solve_cell(tasks[t].cp, ps, idx);
    } catch (...) {
      errs[t] = std::current_exception();
    }
  }
  for (int t = 0; t < ntasks; ++t) {
    if (errs[t]) std::rethrow_exception(errs[t]);
  }

  const int niter = k * k;
  std::vector<std::vector<int>> unions(niter);
  for (int t = 0; t < ntasks; ++t) {
    auto& u = unions[tasks[t].iter];
    u.insert(u.end(), cell_sols[t].ids.begin(), cell_sols[t].ids.end());
  }

  int best = -1;
  for (int it = 0; it < niter; ++it) {
    auto& u = unions[it];
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    IterationOutcome oc;
    oc.i = shifts[it].first;
    oc.j = shifts[it].second;
    oc.sol.algo = "ptas";
    oc.sol.params["k"] = std::to_string(k);
    oc.sol.params["i"] = std::to_string(oc.i);
    oc.sol.params["j"] = std::to_string(oc.j);
    oc.sol.ids = std::move(u);
    res.iterations.push_back(std::move(oc));
    if (best < 0 ||
        res.iterations[it].sol.size() < res.iterations[best].sol.size()) {
      best = it;
    }
  }
  res.best = res.iterations[best].sol;
  res.best_i = res.iterations[best].i;
  res.best_j = res.iterations[best].j;
  return res;
}

}  // namespace

PtasResult solve(const PointSet& ps, const GridIndex& idx,
                 const PtasConfig& cfg) {
  return solve_impl(ps, idx, cfg, true);
}

PtasResult solve_serial(const PointSet& ps, const GridIndex& idx,
                        const PtasConfig& cfg) {
  return solve_impl(ps, idx, cfg, false);
}

}  // namespace tds::ptas
