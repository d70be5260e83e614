#include "tds/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "tds/errors.hpp"

namespace tds {

PointSet make_point_set(const std::vector<std::pair<double, double>>& coords) {
  PointSet ps;
  ps.points.reserve(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) {
    const auto [x, y] = coords[i];
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw input_error("non-finite coordinate at point id " + std::to_string(i));
    }
    ps.points.push_back(Point{static_cast<int>(i), x, y});
  }
  if (!ps.points.empty()) {
    ps.bbox.min_x = ps.bbox.max_x = ps.points[0].x;
    ps.bbox.min_y = ps.bbox.max_y = ps.points[0].y;
    for (const Point& p : ps.points) {
      ps.bbox.min_x = std::min(ps.bbox.min_x, p.x);
      ps.bbox.max_x = std::max(ps.bbox.max_x, p.x);
      ps.bbox.min_y = std::min(ps.bbox.min_y, p.y);
      ps.bbox.max_y = std::max(ps.bbox.max_y, p.y);
    }
  }
  return ps;
}

CellCoord cell_of(double x, double y) {
  return {static_cast<long long>(std::floor(x)),
          static_cast<long long>(std::floor(y))};
}

GridIndex build_index(const PointSet& ps) {
  GridIndex idx;
  for (const Point& p : ps.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw input_error("non-finite coordinate at point id " + std::to_string(p.id));
    }
    idx.cells[cell_of(p.x, p.y)].push_back(p.id);
  }
  return idx;
}

std::vector<int> neighbors(const GridIndex& idx, const PointSet& ps, int id,
                           NeighborMode mode) {
  if (id < 0 || id >= ps.size()) {
    throw input_error("invalid point id " + std::to_string(id));
  }
  const Point& p = ps[id];
  std::vector<int> out;
  scan_neighbor_cells(idx, cell_of(p.x, p.y), [&](int q) {
    if (q == id) {
      if (mode == NeighborMode::closed) out.push_back(q);
      return;
    }
    if (dist_sq(p, ps[q]) <= 1.0) out.push_back(q);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

double parse_literal(std::string_view tok, const std::string& where) {
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    throw input_error(where + ": bad decimal literal '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

PointSet parse_points(std::istream& in, const std::string& name) {
  std::vector<std::pair<double, double>> coords;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    const size_t ws = s.find_first_of(" \t");
    if (ws == std::string_view::npos) {
      throw input_error(name + ":" + std::to_string(lineno) +
                        ": expected two coordinates");
    }
    std::string_view xs = trim(s.substr(0, ws));
    std::string_view ys = trim(s.substr(ws));
    if (ys.find_first_of(" \t") != std::string_view::npos) {
      throw input_error(name + ":" + std::to_string(lineno) +
                        ": expected exactly two coordinates");
    }
    const std::string where = name + ":" + std::to_string(lineno);
    coords.emplace_back(parse_literal(xs, where), parse_literal(ys, where));
  }
  return make_point_set(coords);
}

PointSet load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open points file: " + path);
  return parse_points(in, path);
}

void save_points(const PointSet& ps, const std::string& path,
                 const std::string& header_comment) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write points file: " + path);
  if (!header_comment.empty()) out << "# " << header_comment << "\n";
  for (const Point& p : ps.points) {
    out << format_double(p.x) << " " << format_double(p.y) << "\n";
  }
  if (!out) throw input_error("write failed: " + path);
}

std::optional<std::uint64_t> points_file_seed(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view s = trim(line);
    if (s.empty()) continue;
    if (s.front() != '#') break;  // header comments only
    const size_t pos = s.find("seed=");
    if (pos == std::string_view::npos) continue;
    std::string_view tok = s.substr(pos + 5);
    const size_t end = tok.find_first_of(" \t");
    if (end != std::string_view::npos) tok = tok.substr(0, end);
    std::uint64_t seed = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), seed);
    if (res.ec == std::errc{} && res.ptr == tok.data() + tok.size()) return seed;
  }
  return std::nullopt;
}

}  // namespace tds
