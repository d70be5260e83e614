#include <doctest.h>

#include <set>

#include "tds/approx8.hpp"
#include "tds/errors.hpp"
#include "tds/exact.hpp"
#include "tds/generators.hpp"
#include "test_util.hpp"

using namespace tds;

namespace {
// Structural guarantees of the two-phase construction.
void check_invariants(const PointSet& ps, const GridIndex& idx,
                      const approx8::ApproxResult& res) {
  // phase 1: independent dominating set
  for (size_t a = 0; a < res.D.ids.size(); ++a) {
    for (size_t b = a + 1; b < res.D.ids.size(); ++b) {
      CHECK_FALSE(is_adjacent(ps[res.D.ids[a]], ps[res.D.ids[b]]));
    }
  }
  CHECK(is_ds(ps, idx, res.D));

  // phase 2: T contains D, adds at most one witness per member
  std::set<int> t_ids(res.T.ids.begin(), res.T.ids.end());
  for (int d : res.D.ids) CHECK(t_ids.count(d));
  CHECK(res.T.size() <= 2 * res.D.size());
  CHECK(is_tds(ps, idx, res.T));

  // recorded witnesses are real dominators drawn from T
  for (const auto& [p, q] : res.witnesses) {
    CHECK(t_ids.count(q));
    CHECK(p != q);
    CHECK(is_adjacent(ps[p], ps[q]));
  }
}
}  // namespace

TEST_CASE("approx8 on the four-point path picks the documented prefix") {
  auto ps = gen_path(4, 0.9);
  auto idx = build_index(ps);
  auto res = approx8::solve(ps, idx);
  CHECK(res.D.ids == std::vector<int>{0, 2});
  CHECK(res.T.ids == std::vector<int>{0, 1, 2});
  check_invariants(ps, idx, res);
}

TEST_CASE("approx8 invariants hold across random instances") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    GenSpec spec{.n = 60, .width = 8, .height = 8, .seed = 4000 + seed,
                 .policy = MinDegreePolicy::reject_isolated};
    auto ps = gen_uniform(spec);
    auto idx = build_index(ps);
    auto res = approx8::solve(ps, idx);
    check_invariants(ps, idx, res);
  }
}

TEST_CASE("approx8 stays within factor 8 of the exact optimum") {
  double max_ratio = 0.0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 6 + static_cast<int>(seed % 9);  // 6..14
    GenSpec spec{.n = n, .width = 3.5, .height = 3.5, .seed = 7000 + seed,
                 .policy = MinDegreePolicy::reject_isolated};
    auto ps = gen_uniform(spec);
    auto idx = build_index(ps);
    auto res = approx8::solve(ps, idx);
    auto ex = exact::exact_tds(ps, idx, res.T.size());
    CHECK(is_tds(ps, idx, ex.opt));
    const double ratio = static_cast<double>(res.T.size()) / ex.size;
    if (ratio > max_ratio) max_ratio = ratio;
    CHECK(ratio <= 8.0);
  }
  MESSAGE("max approx8/exact ratio over 300 instances: ", max_ratio);
}

TEST_CASE("union order variants both produce valid output") {
  GenSpec spec{.n = 70, .width = 7, .height = 7, .seed = 88,
               .policy = MinDegreePolicy::reject_isolated};
  auto ps = gen_uniform(spec);
  auto idx = build_index(ps);
  approx8::Options hoisted{.union_order = approx8::UnionOrder::hoisted,
                           .prefer_d_witness = false};
  approx8::Options literal{.union_order = approx8::UnionOrder::literal,
                           .prefer_d_witness = true};
  auto a = approx8::solve(ps, idx, hoisted);
  auto b = approx8::solve(ps, idx, literal);
  CHECK(a.D.ids == b.D.ids);  // phase 1 unaffected by phase-2 options
  check_invariants(ps, idx, a);
  check_invariants(ps, idx, b);
}

TEST_CASE("approx8 rejects instances with isolated points") {
  auto ps = testutil::ps_from({{0, 0}, {0.5, 0}, {30, 30}});
  auto idx = build_index(ps);
  try {
    approx8::solve(ps, idx);
    FAIL("expected infeasible_error");
  } catch (const infeasible_error& e) {
    CHECK(e.ids == std::vector<int>{2});
  }
}

TEST_CASE("approx8 on the empty instance returns empty sets") {
  PointSet ps;
  auto idx = build_index(ps);
  auto res = approx8::solve(ps, idx);
  CHECK(res.D.ids.empty());
  CHECK(res.T.ids.empty());
}

TEST_CASE("independent_ds greedy admits by ascending id") {
  // Chain where point 1 would dominate everything; greedy still starts at 0.
  auto ps = testutil::ps_from({{0, 0}, {0.9, 0}, {1.5, 0}});
  auto idx = build_index(ps);
  auto d = approx8::independent_ds(ps, idx);
  CHECK(d.ids == std::vector<int>{0, 2});
}
