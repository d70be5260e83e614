#include "tds/approx8.hpp"

#include <algorithm>
#include <string>

#include "tds/errors.hpp"

namespace tds::approx8 {

namespace {

// Grid over a growing member set; the map holds only cells that contain
// members, so a lookup costs O(log #member-cells).
struct MemberGrid {
  std::map<CellCoord, std::vector<int>> cells;

  void insert(const Point& p) { cells[cell_of(p.x, p.y)].push_back(p.id); }

  bool any_within_unit(const PointSet& ps, const Point& p, int exclude) const {
    const CellCoord c = cell_of(p.x, p.y);
    for (long long a = c.first - 1; a <= c.first + 1; ++a) {
      auto it = cells.lower_bound({a, c.second - 1});
      for (; it != cells.end() && it->first.first == a &&
             it->first.second <= c.second + 1;
           ++it) {
        for (int q : it->second) {
          if (q != exclude && dist_sq(p, ps[q]) <= 1.0) return true;
        }
      }
    }
    return false;
  }
};

}  // namespace

Solution independent_ds(const PointSet& ps, const GridIndex& idx) {
  (void)idx;  // selection uses its own member grid
  Solution D;
  D.algo = "approx8";
  MemberGrid dgrid;
  for (const Point& p : ps.points) {
    if (!dgrid.any_within_unit(ps, p, -1)) {
      D.ids.push_back(p.id);
      dgrid.insert(p);
    }
  }
  return D;
}

ApproxResult totalize(const PointSet& ps, const GridIndex& idx,
                      const Solution& D, const Options& opt) {
  check_solution_ids(ps, D);
  ApproxResult res;
  res.D = D;
  const size_t n = static_cast<size_t>(ps.size());

  std::vector<char> in_d(n, 0);
  for (int id : D.ids) in_d[static_cast<size_t>(id)] = 1;

  // One close-pair sweep gathers everything the witness loop needs: the
  // lowest-id open neighbor of each member (the default witness), the
  // lowest-id D-neighbor (the preferred witness), and the point/D-member
  // adjacency pairs, kept flat to stay allocation-light.
  std::vector<int> min_nbr(n, -1), min_d_nbr(n, -1);
  std::vector<std::pair<int, int>> d_adj;
  for_each_close_pair(ps, idx, [&](int p, int q) {
    const size_t sp = static_cast<size_t>(p), sq = static_cast<size_t>(q);
    if (min_nbr[sp] < 0 || q < min_nbr[sp]) min_nbr[sp] = q;
    if (min_nbr[sq] < 0 || p < min_nbr[sq]) min_nbr[sq] = p;
    if (in_d[sq]) {
      d_adj.emplace_back(p, q);
      if (min_d_nbr[sp] < 0 || q < min_d_nbr[sp]) min_d_nbr[sp] = q;
    }
    if (in_d[sp]) {
      d_adj.emplace_back(q, p);
      if (min_d_nbr[sq] < 0 || p < min_d_nbr[sq]) min_d_nbr[sq] = p;
    }
  });

  // CSR view of d_adj keyed by point: adj[off[p]..off[p+1]) lists the
  // D-members adjacent to p, i.e. the members inserting p would totalize.
  std::vector<int> off(n + 1, 0), adj(d_adj.size());
  for (const auto& [p, d] : d_adj) ++off[static_cast<size_t>(p) + 1];
  for (size_t i = 1; i <= n; ++i) off[i] += off[i - 1];
  {
    std::vector<int> cur(off.begin(), off.end() - 1);
    for (const auto& [p, d] : d_adj)
      adj[static_cast<size_t>(cur[static_cast<size_t>(p)]++)] = d;
  }

  // covered[p]: p already has an open neighbor among the points counted as
  // part of T so far. Hoisted order counts D itself from the start, so any
  // D-D adjacency pre-covers both ends (vacuous when D is independent).
  std::vector<char> covered(n, 0);
  if (opt.union_order == UnionOrder::hoisted) {
    for (int d : D.ids) {
      if (min_d_nbr[static_cast<size_t>(d)] >= 0)
        covered[static_cast<size_t>(d)] = 1;
    }
  }

  std::vector<int> t_ids = D.ids;
  for (int p : D.ids) {
    const size_t sp = static_cast<size_t>(p);
    if (covered[sp]) continue;
    if (min_nbr[sp] < 0) {
      throw infeasible_error("point " + std::to_string(p) +
                                 " has no neighbor to totalize with",
                             {p});
    }
    const int q = (opt.prefer_d_witness && min_d_nbr[sp] >= 0) ? min_d_nbr[sp]
                                                               : min_nbr[sp];
    res.witnesses.emplace_hint(res.witnesses.end(), p, q);
    t_ids.push_back(q);
    // q totalizes every member of D in its own unit disk.
    for (int i = off[static_cast<size_t>(q)]; i < off[static_cast<size_t>(q) + 1];
         ++i) {
      covered[static_cast<size_t>(adj[static_cast<size_t>(i)])] = 1;
    }
  }

  std::sort(t_ids.begin(), t_ids.end());
  t_ids.erase(std::unique(t_ids.begin(), t_ids.end()), t_ids.end());

  res.T.ids = std::move(t_ids);
  res.T.algo = "approx8";
  return res;
}

ApproxResult solve(const PointSet& ps, const GridIndex& idx, const Options& opt) {
  std::vector<int> isolated = isolated_points(ps, idx);
  if (!isolated.empty()) {
    throw infeasible_error("instance has isolated points", std::move(isolated));
  }
  return totalize(ps, idx, independent_ds(ps, idx), opt);
}

}  // namespace tds::approx8
