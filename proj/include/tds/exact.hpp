#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tds/core.hpp"
#include "tds/geometry.hpp"

namespace tds::exact {

struct ExactResult {
  Solution opt;
  int size = 0;  // the total domination number of the instance
  std::uint64_t nodes_explored = 0;
};

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
};

// Minimum-cardinality TDS by iterative deepening on cardinality starting
// at 2, branching on the hardest-to-dominate point, with coverage-bound
// pruning. ub_hint (e.g. approx8's |T|) caps the deepening loop.
// Throws infeasible_error on isolated points and budget_error when the
// node budget is exceeded (never a wrong answer).
ExactResult exact_tds(const PointSet& ps, const GridIndex& idx,
                      std::optional<int> ub_hint = std::nullopt,
                      const SearchBudget& budget = {});

// Reference oracle: enumerate all subsets in increasing cardinality and
// return the lexicographically smallest TDS. Refuses n > 16.
ExactResult naive_tds(const PointSet& ps, const GridIndex& idx);

// Minimum vertex cover of a simple undirected graph by
// increasing-cardinality enumeration. Refuses more than 20 vertices.
std::vector<int> exact_vc(int n_vertices,
                          const std::vector<std::pair<int, int>>& edges);

}  // namespace tds::exact
