#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "tds/core.hpp"
#include "tds/errors.hpp"
#include "tds/generators.hpp"
#include "test_util.hpp"

using namespace tds;
namespace fs = std::filesystem;

namespace {
Solution sol_of(std::vector<int> ids) {
  Solution s;
  s.ids = std::move(ids);
  s.algo = "external";
  return s;
}
}  // namespace

TEST_CASE("total domination differs from plain domination") {
  auto ps = testutil::ps_from({{0, 0}, {0.9, 0}, {1.8, 0}});
  auto idx = build_index(ps);

  // {1} dominates every closed neighborhood but leaves itself without a
  // distinct dominator.
  auto mid = sol_of({1});
  CHECK(is_ds(ps, idx, mid));
  CHECK(undominated_total(ps, idx, mid) == std::vector<int>{1});
  CHECK_FALSE(is_tds(ps, idx, mid));

  auto pair = sol_of({0, 1});
  CHECK(undominated_total(ps, idx, pair).empty());
  CHECK(is_tds(ps, idx, pair));
}

TEST_CASE("a nonempty instance needs at least two solution points") {
  auto ps = testutil::ps_from({{0, 0}, {0.5, 0}});
  auto idx = build_index(ps);
  CHECK_FALSE(is_tds(ps, idx, sol_of({0})));
  CHECK(is_tds(ps, idx, sol_of({0, 1})));
}

TEST_CASE("empty instance accepts the empty solution") {
  PointSet ps;
  auto idx = build_index(ps);
  CHECK(is_tds(ps, idx, sol_of({})));
  CHECK(is_ds(ps, idx, sol_of({})));
}

TEST_CASE("undominated_total matches brute force on random subsets") {
  SplitMix64 pick(2024);
  for (int t = 0; t < 40; ++t) {
    GenSpec spec{.n = 150, .width = 8, .height = 8, .seed = 3000ull + t,
                 .policy = MinDegreePolicy::allow};
    auto ps = gen_uniform(spec);
    auto idx = build_index(ps);
    Solution sol;
    sol.algo = "external";
    for (int id = 0; id < ps.size(); ++id) {
      if (pick.next_unit() < 0.25) sol.ids.push_back(id);
    }
    auto expect = testutil::brute_undominated(ps, sol);
    CHECK(undominated_total(ps, idx, sol) == expect);
    CHECK(undominated_total_serial(ps, idx, sol) == expect);
  }
}

TEST_CASE("parallel and serial validators agree") {
  for (int t = 0; t < 10; ++t) {
    GenSpec spec{.n = 400, .width = 10, .height = 10, .seed = 500ull + t,
                 .policy = MinDegreePolicy::allow};
    auto ps = gen_uniform(spec);
    auto idx = build_index(ps);
    Solution sol;
    sol.algo = "external";
    SplitMix64 pick(900ull + t);
    for (int id = 0; id < ps.size(); ++id) {
      if (pick.next_unit() < 0.3) sol.ids.push_back(id);
    }
    CHECK(undominated_total(ps, idx, sol) ==
          undominated_total_serial(ps, idx, sol));
  }
}

TEST_CASE("isolated_points finds exactly the degree-zero ids") {
  auto ps = testutil::ps_from({{0, 0}, {0.5, 0}, {10, 10}, {20, 0}});
  auto idx = build_index(ps);
  CHECK(isolated_points(ps, idx) == std::vector<int>{2, 3});

  auto dense = testutil::ps_from({{0, 0}, {0.5, 0}, {1.0, 0}});
  auto didx = build_index(dense);
  CHECK(isolated_points(dense, didx).empty());
}

TEST_CASE("check_solution_ids enforces range and strict order") {
  auto ps = testutil::ps_from({{0, 0}, {0.5, 0}, {1.0, 0}});
  CHECK_NOTHROW(check_solution_ids(ps, sol_of({0, 2})));
  CHECK_THROWS_AS(check_solution_ids(ps, sol_of({-1})), input_error);
  CHECK_THROWS_AS(check_solution_ids(ps, sol_of({3})), input_error);
  CHECK_THROWS_AS(check_solution_ids(ps, sol_of({1, 1})), input_error);
  CHECK_THROWS_AS(check_solution_ids(ps, sol_of({2, 0})), input_error);
}

TEST_CASE("solution file round-trip") {
  auto dir = fs::temp_directory_path() / "tds_test_core";
  fs::create_directories(dir);
  auto path = (dir / "sol.txt").string();
  auto sol = sol_of({0, 3, 7});
  save_solution(sol, path);
  auto back = load_solution(path);
  CHECK(back.ids == sol.ids);

  std::istringstream commented("# produced by hand\n0\n# middle\n2\n");
  CHECK(parse_solution(commented, "c").ids == std::vector<int>{0, 2});
  std::istringstream unsorted("2\n0\n");
  CHECK_THROWS_AS(parse_solution(unsorted, "u"), input_error);
  std::istringstream junk("0\nx\n");
  CHECK_THROWS_AS(parse_solution(junk, "j"), input_error);
}
