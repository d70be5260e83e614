#include "tds/core.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>

#include "tds/errors.hpp"

namespace tds {

bool Solution::contains(int id) const {
  return std::binary_search(ids.begin(), ids.end(), id);
}

void check_solution_ids(const PointSet& ps, const Solution& sol) {
  int prev = -1;
  for (int id : sol.ids) {
    if (id < 0 || id >= ps.size()) {
      throw input_error("solution id out of range: " + std::to_string(id));
    }
    if (id <= prev) {
      throw input_error("solution ids must be strictly ascending (saw " +
                        std::to_string(id) + " after " + std::to_string(prev) + ")");
    }
    prev = id;
  }
}

namespace {

// covered[p] = some q in sol with q != p and d(p,q) <= 1.
void mark_dominated(const PointSet& ps, const GridIndex& idx,
                    const std::vector<char>& in_sol, std::vector<char>& covered,
                    bool parallel) {
  const int n = ps.size();
#pragma omp parallel for schedule(static) if (parallel)
  for (int p = 0; p < n; ++p) {
    const Point& pp = ps[p];
    char hit = 0;
    scan_neighbor_cells(idx, cell_of(pp.x, pp.y), [&](int q) {
      if (!hit && q != p && in_sol[q] && dist_sq(pp, ps[q]) <= 1.0) hit = 1;
    });
    covered[p] = hit;
  }
}

std::vector<int> undominated_impl(const PointSet& ps, const GridIndex& idx,
                                  const Solution& sol, bool parallel) {
  check_solution_ids(ps, sol);
  const int n = ps.size();
  std::vector<char> in_sol(n, 0);
  for (int id : sol.ids) in_sol[id] = 1;
  std::vector<char> covered(n, 0);
  mark_dominated(ps, idx, in_sol, covered, parallel);
  std::vector<int> out;
  for (int p = 0; p < n; ++p)
    if (!covered[p]) out.push_back(p);
  return out;
}

}  // namespace

std::vector<int> undominated_total(const PointSet& ps, const GridIndex& idx,
                                   const Solution& sol) {
  return undominated_impl(ps, idx, sol, true);
}

std::vector<int> undominated_total_serial(const PointSet& ps,
                                          const GridIndex& idx,
                                          const Solution& sol) {
  return undominated_impl(ps, idx, sol, false);
}

bool is_tds(const PointSet& ps, const GridIndex& idx, const Solution& sol) {
  if (!ps.empty() && sol.size() < 2) return false;
  return undominated_total(ps, idx, sol).empty();
}

bool is_ds(const PointSet& ps, const GridIndex& idx, const Solution& sol) {
  check_solution_ids(ps, sol);
  std::vector<char> in_sol(ps.size(), 0);
  for (int id : sol.ids) in_sol[id] = 1;
  for (const Point& p : ps.points) {
    if (in_sol[p.id]) continue;  // self-domination
    bool hit = false;
    scan_neighbor_cells(idx, cell_of(p.x, p.y), [&](int q) {
      if (!hit && in_sol[q] && dist_sq(p, ps[q]) <= 1.0) hit = true;
    });
    if (!hit) return false;
  }
  return true;
}

std::vector<int> isolated_points(const PointSet& ps, const GridIndex& idx) {
  std::vector<char> has_nbr(static_cast<size_t>(ps.size()), 0);
  for_each_close_pair(ps, idx, [&](int p, int q) {
    has_nbr[static_cast<size_t>(p)] = 1;
    has_nbr[static_cast<size_t>(q)] = 1;
  });
  std::vector<int> out;
  for (int id = 0; id < ps.size(); ++id) {
    if (!has_nbr[static_cast<size_t>(id)]) out.push_back(id);
  }
  return out;
}

Solution parse_solution(std::istream& in, const std::string& name) {
  Solution sol;
  sol.algo = "external";
  std::string line;
  size_t lineno = 0;
  int prev = -1;
  while (std::getline(in, line)) {
    ++lineno;
    // trim whitespace and CR
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    std::string_view s(line.data() + b, e - b + 1);
    if (s.front() == '#') continue;
    int id = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), id);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || id < 0) {
      throw input_error(name + ":" + std::to_string(lineno) +
                        ": expected a 0-based index");
    }
    if (id <= prev) {
      throw input_error(name + ":" + std::to_string(lineno) +
                        ": indices must be strictly ascending");
    }
    prev = id;
    sol.ids.push_back(id);
  }
  return sol;
}

Solution load_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open solution file: " + path);
  return parse_solution(in, path);
}

void save_solution(const Solution& sol, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write solution file: " + path);
  for (int id : sol.ids) out << id << "\n";
  if (!out) throw input_error("write failed: " + path);
}

}  // namespace tds
