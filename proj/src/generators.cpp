#include "tds/generators.hpp"

#include <string>

#include "tds/core.hpp"
#include "tds/errors.hpp"

namespace tds {

namespace {
constexpr int kResampleRounds = 1000;
}

PointSet gen_uniform(const GenSpec& spec) {
  if (spec.n < 0) throw input_error("gen_uniform: n must be >= 0");
  if (!(spec.width > 0.0) || !(spec.height > 0.0)) {
    throw input_error("gen_uniform: box dimensions must be positive");
  }
  SplitMix64 rng(spec.seed);
  std::vector<std::pair<double, double>> coords(static_cast<size_t>(spec.n));
  for (auto& [x, y] : coords) {
    x = rng.next_unit() * spec.width;
    y = rng.next_unit() * spec.height;
  }
  PointSet ps = make_point_set(coords);
  if (spec.policy == MinDegreePolicy::allow || spec.n == 0) return ps;

  for (int round = 0; round < kResampleRounds; ++round) {
    GridIndex idx = build_index(ps);
    std::vector<int> isolated = isolated_points(ps, idx);
    if (isolated.empty()) return ps;
    for (int id : isolated) {
      coords[static_cast<size_t>(id)].first = rng.next_unit() * spec.width;
      coords[static_cast<size_t>(id)].second = rng.next_unit() * spec.height;
    }
    ps = make_point_set(coords);
  }
  throw input_error(
      "gen_uniform: could not eliminate isolated points after " +
      std::to_string(kResampleRounds) +
      " resampling rounds; the box is too sparse, increase density "
      "(more points or a smaller box) or pass --allow-isolated");
}

PointSet gen_path(int n, double spacing) {
  if (n < 0) throw input_error("gen_path: n must be >= 0");
  if (!(spacing > 0.0) || spacing > 1.0) {
    throw input_error("gen_path: spacing must be in (0, 1]");
  }
  std::vector<std::pair<double, double>> coords(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) coords[static_cast<size_t>(i)] = {i * spacing, 0.0};
  return make_point_set(coords);
}

}  // namespace tds
