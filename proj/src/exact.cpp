#include "tds/exact.hpp"

#include <algorithm>
#include <string>

#include "tds/bitmask.hpp"
#include "tds/errors.hpp"

namespace tds::exact {

namespace {

struct TdsSearch {
  const PointSet& ps;
  int n;
  std::vector<std::vector<int>> adj;   // open neighborhoods, ascending
  std::vector<Bitmask> cover;          // cover[q] = points dominated by q
  Bitmask all;
  int max_degree = 0;
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes = 0;
  std::vector<int> chosen;
  Bitmask chosen_mask;

  TdsSearch(const PointSet& ps_, const GridIndex& idx, std::uint64_t budget)
      : ps(ps_), n(ps_.size()), all(Bitmask::all(ps_.size())),
        chosen_mask(ps_.size()) {
    adj.resize(static_cast<size_t>(n));
    cover.assign(static_cast<size_t>(n), Bitmask(n));
    max_nodes = budget;
    for (int i = 0; i < n; ++i) {
      adj[static_cast<size_t>(i)] = neighbors(idx, ps, i, NeighborMode::open);
      for (int q : adj[static_cast<size_t>(i)]) cover[static_cast<size_t>(q)].set(i);
      max_degree = std::max(max_degree,
                            static_cast<int>(adj[static_cast<size_t>(i)].size()));
    }
  }

  void tick() {
    ++nodes;
    if (max_nodes && nodes > max_nodes) {
      throw budget_error("exact_tds: node budget exceeded after " +
                         std::to_string(nodes - 1) + " nodes");
    }
  }

  // Depth-limited search for a set of size <= depth dominating `uncovered`.
  bool dfs(int depth, const Bitmask& uncovered) {
    if (uncovered.none()) return true;
    if (depth == 0) return false;
    tick();
    const int need = uncovered.count();
    if (need > depth * max_degree) return false;

    // Fail-first: the uncovered point with the fewest usable dominators.
    int pick = -1;
    size_t fewest = static_cast<size_t>(n) + 1;
    for (int p = 0; p < n; ++p) {
      if (!uncovered.test(p)) continue;
      size_t options = 0;
      for (int q : adj[static_cast<size_t>(p)])
        if (!chosen_mask.test(q)) ++options;
      if (options < fewest) {
        fewest = options;
        pick = p;
      }
      if (fewest == 0) break;
    }
    if (fewest == 0) return false;  // no remaining dominator for pick

    // Try its dominators, most new coverage first.
    std::vector<std::pair<int, int>> order;
    order.reserve(adj[static_cast<size_t>(pick)].size());
    for (int q : adj[static_cast<size_t>(pick)]) {
      if (chosen_mask.test(q)) continue;
      order.emplace_back(-cover[static_cast<size_t>(q)].count_and(uncovered), q);
    }
    std::sort(order.begin(), order.end());
    for (auto [neg_gain, q] : order) {
      if (neg_gain == 0) continue;  // covers nothing uncovered
      chosen.push_back(q);
      chosen_mask.set(q);
      const bool ok = dfs(depth - 1, uncovered.and_not(cover[static_cast<size_t>(q)]));
      chosen_mask.clear(q);
      if (ok) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

ExactResult exact_tds(const PointSet& ps, const GridIndex& idx,
                      std::optional<int> ub_hint, const SearchBudget& budget) {
  ExactResult res;
  res.opt.algo = "exact";
  if (ps.empty()) return res;

  std::vector<int> isolated = isolated_points(ps, idx);
  if (!isolated.empty()) {
    throw infeasible_error("instance has isolated points", std::move(isolated));
  }

  TdsSearch search(ps, idx, budget.max_nodes);
  const int ub = ub_hint ? std::min(*ub_hint, ps.size()) : ps.size();
  for (int t = 2; t <= ub; ++t) {
    if (search.dfs(t, search.all)) {
      res.opt.ids = search.chosen;
      std::sort(res.opt.ids.begin(), res.opt.ids.end());
      res.size = t;
      res.nodes_explored = search.nodes;
      return res;
    }
  }
  throw internal_error("exact_tds: no TDS up to the upper bound; bound or search is wrong");
}

ExactResult naive_tds(const PointSet& ps, const GridIndex& idx) {
  const int n = ps.size();
  if (n > 16) {
    throw input_error("naive_tds: refused, n = " + std::to_string(n) + " > 16");
  }
  ExactResult res;
  res.opt.algo = "exact";
  if (n == 0) return res;

  std::vector<int> isolated = isolated_points(ps, idx);
  if (!isolated.empty()) {
    throw infeasible_error("instance has isolated points", std::move(isolated));
  }

  std::vector<std::uint32_t> cover(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int q : neighbors(idx, ps, i, NeighborMode::open)) {
      cover[static_cast<size_t>(q)] |= 1u << i;
    }
  }
  const std::uint32_t want = (n == 32) ? ~0u : ((1u << n) - 1);

  for (int t = 2; t <= n; ++t) {
    std::vector<int> combo(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) combo[static_cast<size_t>(i)] = i;
    while (true) {
      ++res.nodes_explored;
      std::uint32_t mask = 0;
      for (int id : combo) mask |= cover[static_cast<size_t>(id)];
      if (mask == want) {
        res.opt.ids = combo;
        res.size = t;
        return res;
      }
      // next combination in lexicographic order
      int i = t - 1;
      while (i >= 0 && combo[static_cast<size_t>(i)] == n - t + i) --i;
      if (i < 0) break;
      ++combo[static_cast<size_t>(i)];
      for (int j = i + 1; j < t; ++j)
        combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
    }
  }
  throw internal_error("naive_tds: exhausted subsets without finding a TDS");
}

std::vector<int> exact_vc(int n_vertices,
                          const std::vector<std::pair<int, int>>& edges) {
  if (n_vertices < 0 || n_vertices > 20) {
    throw input_error("exact_vc: refused, needs 0 <= n <= 20 vertices");
  }
  for (auto [u, w] : edges) {
    if (u < 0 || u >= n_vertices || w < 0 || w >= n_vertices || u == w) {
      throw input_error("exact_vc: bad edge (" + std::to_string(u) + "," +
                        std::to_string(w) + ")");
    }
  }
  const int n = n_vertices;
  for (int t = 0; t <= n; ++t) {
    std::vector<int> combo(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) combo[static_cast<size_t>(i)] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (int v : combo) mask |= 1u << v;
      bool covers = true;
      for (auto [u, w] : edges) {
        if (!((mask >> u) & 1u) && !((mask >> w) & 1u)) {
          covers = false;
          break;
        }
      }
      if (covers) return combo;
      if (t == 0) break;
      int i = t - 1;
      while (i >= 0 && combo[static_cast<size_t>(i)] == n - t + i) --i;
      if (i < 0) break;
      ++combo[static_cast<size_t>(i)];
      for (int j = i + 1; j < t; ++j)
        combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
    }
  }
  throw internal_error("exact_vc: no cover found; unreachable for valid input");
}

}  // namespace tds::exact
