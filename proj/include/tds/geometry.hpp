#pragma once
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tds {

// A disk center. Coordinates are in units of the disk diameter, so two
// points are adjacent in the unit disk graph iff their distance is <= 1.
struct Point {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
};

struct BBox {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

// Ordered point set; ids are contiguous 0..n-1 matching sequence order.
struct PointSet {
  std::vector<Point> points;
  BBox bbox;

  int size() const { return static_cast<int>(points.size()); }
  bool empty() const { return points.empty(); }
  const Point& operator[](int id) const { return points[static_cast<size_t>(id)]; }
};

// Builds a PointSet from raw coordinates, assigning ids in input order.
// Throws input_error naming the offending id on non-finite coordinates.
PointSet make_point_set(const std::vector<std::pair<double, double>>& coords);

using CellCoord = std::pair<long long, long long>;

// Grid cell of a coordinate pair: floor on both axes.
CellCoord cell_of(double x, double y);

// 1x1 bucketing of a point set. Only nonempty cells are stored; the
// ordered map gives O(log #nonempty-cells) lookup.
struct GridIndex {
  std::map<CellCoord, std::vector<int>> cells;
};

GridIndex build_index(const PointSet& ps);

inline double dist_sq(const Point& p, const Point& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

// Open adjacency: distinct ids at squared distance <= 1, no epsilon.
inline bool is_adjacent(const Point& p, const Point& q) {
  return p.id != q.id && dist_sq(p, q) <= 1.0;
}

enum class NeighborMode { open, closed };

// All ids within distance 1 of point `id`, found by scanning the <= 9
// cells around its grid cell; ascending id order. Open mode excludes the
// point itself, closed mode includes it.
std::vector<int> neighbors(const GridIndex& idx, const PointSet& ps, int id,
                           NeighborMode mode);

// Visits every indexed point in the 9 cells around `center`.
template <typename F>
void scan_neighbor_cells(const GridIndex& idx, const CellCoord& center, F&& fn) {
  for (long long a = center.first - 1; a <= center.first + 1; ++a) {
    auto it = idx.cells.lower_bound({a, center.second - 1});
    for (; it != idx.cells.end() && it->first.first == a &&
           it->first.second <= center.second + 1;
         ++it) {
      for (int id : it->second) fn(id);
    }
  }
}

// Calls fn(p, q) exactly once for every unordered pair at distance <= 1.
// One linear walk of the cell map plus a monotone cursor per column pair
// replaces the per-point 9-cell descents, which dominate full-instance
// scans on large sparse instances.
template <typename F>
void for_each_close_pair(const PointSet& ps, const GridIndex& idx, F&& fn) {
  struct Cell {
    long long a, b;
    const std::vector<int>* ids;
  };
  std::vector<Cell> flat;
  flat.reserve(idx.cells.size());
  for (const auto& [cc, ids] : idx.cells)
    flat.push_back({cc.first, cc.second, &ids});
  std::vector<size_t> run;  // start of each column, with end sentinel
  for (size_t i = 0; i < flat.size(); ++i) {
    if (i == 0 || flat[i].a != flat[i - 1].a) run.push_back(i);
  }
  run.push_back(flat.size());

  auto cross = [&](const std::vector<int>& u, const std::vector<int>& v) {
    for (int p : u) {
      for (int q : v) {
        if (dist_sq(ps[p], ps[q]) <= 1.0) fn(p, q);
      }
    }
  };

  for (size_t r = 0; r + 1 < run.size(); ++r) {
    const size_t lo = run[r], hi = run[r + 1];
    const bool paired =
        r + 2 < run.size() && flat[run[r + 1]].a == flat[lo].a + 1;
    const size_t phi = paired ? run[r + 2] : 0;
    size_t p = paired ? run[r + 1] : 0;
    for (size_t i = lo; i < hi; ++i) {
      const std::vector<int>& v = *flat[i].ids;
      for (size_t x = 0; x < v.size(); ++x) {
        for (size_t y = x + 1; y < v.size(); ++y) {
          if (dist_sq(ps[v[x]], ps[v[y]]) <= 1.0) fn(v[x], v[y]);
        }
      }
      if (i + 1 < hi && flat[i + 1].b == flat[i].b + 1)
        cross(v, *flat[i + 1].ids);
      if (paired) {
        while (p < phi && flat[p].b < flat[i].b - 1) ++p;
        for (size_t q = p; q < phi && flat[q].b <= flat[i].b + 1; ++q)
          cross(v, *flat[q].ids);
      }
    }
  }
}

// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

// Points file: one point per line as two decimal literals separated by
// whitespace; '#' lines ignored; id = 0-based order of non-comment lines.
PointSet parse_points(std::istream& in, const std::string& name);
PointSet load_points(const std::string& path);
void save_points(const PointSet& ps, const std::string& path,
                 const std::string& header_comment = "");

// Scans the '#' header lines of a points file for a "seed=<u64>" token.
std::optional<std::uint64_t> points_file_seed(const std::string& path);

}  // namespace tds
