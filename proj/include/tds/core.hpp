#pragma once
#include <map>
#include <string>
#include <vector>

#include "tds/geometry.hpp"

namespace tds {

// A subset of point indices claimed to be a (total) dominating set.
struct Solution {
  std::vector<int> ids;  // strictly ascending, duplicate-free
  std::string algo;      // approx8 | ptas | exact | external
  std::map<std::string, std::string> params;

  int size() const { return static_cast<int>(ids.size()); }
  bool contains(int id) const;
};

// Throws input_error unless ids are valid indices, strictly increasing.
void check_solution_ids(const PointSet& ps, const Solution& sol);

// Ids p with no q in sol, q != p, d(p,q) <= 1. Empty iff sol is a TDS.
// OpenMP-parallel scan; `undominated_total_serial` is the reference
// implementation kept for testing and benchmarking.
std::vector<int> undominated_total(const PointSet& ps, const GridIndex& idx,
                                   const Solution& sol);
std::vector<int> undominated_total_serial(const PointSet& ps,
                                          const GridIndex& idx,
                                          const Solution& sol);

// Total domination: every vertex has a dominator other than itself.
// Nonempty instances additionally require |sol| >= 2.
bool is_tds(const PointSet& ps, const GridIndex& idx, const Solution& sol);

// Closed-neighborhood domination (self-domination allowed).
bool is_ds(const PointSet& ps, const GridIndex& idx, const Solution& sol);

// Ids with empty open neighborhood. Nonempty result means the instance
// can never have a TDS; reported rather than treated as a parse error.
std::vector<int> isolated_points(const PointSet& ps, const GridIndex& idx);

// Solution file: one 0-based index per line, ascending; '#' comments.
Solution parse_solution(std::istream& in, const std::string& name);
Solution load_solution(const std::string& path);
void save_solution(const Solution& sol, const std::string& path);

}  // namespace tds
