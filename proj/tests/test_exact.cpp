#include <doctest.h>

#include "tds/errors.hpp"
#include "tds/exact.hpp"
#include "tds/generators.hpp"
#include "test_util.hpp"

using namespace tds;

TEST_CASE("total domination numbers of short paths") {
  // lambda_t(P_n): 2, 2, 3, 4 for n = 3, 4, 5, 8 (floor(n/2) + extra when
  // n % 4 != 0).
  struct Row {
    int n;
    int expect;
  };
  for (Row r : {Row{2, 2}, Row{3, 2}, Row{4, 2}, Row{5, 3}, Row{8, 4}}) {
    auto ps = gen_path(r.n, 0.9);
    auto idx = build_index(ps);
    auto res = exact::exact_tds(ps, idx);
    CHECK(res.size == r.expect);
    CHECK(res.opt.size() == r.expect);
    CHECK(is_tds(ps, idx, res.opt));
    CHECK(res.nodes_explored > 0);
  }
}

TEST_CASE("exact_tds agrees with subset enumeration") {
  int done = 0;
  std::uint64_t seed = 0;
  while (done < 120) {
    const int n = 2 + static_cast<int>(seed % 11);  // 2..12
    GenSpec spec{.n = n, .width = 3, .height = 3, .seed = 11000 + seed,
                 .policy = MinDegreePolicy::allow};
    ++seed;
    auto ps = gen_uniform(spec);
    auto idx = build_index(ps);
    if (!isolated_points(ps, idx).empty()) continue;  // both would refuse
    ++done;
    auto fast = exact::exact_tds(ps, idx);
    auto slow = exact::naive_tds(ps, idx);
    CHECK(fast.size == slow.size);
    CHECK(is_tds(ps, idx, fast.opt));
    CHECK(is_tds(ps, idx, slow.opt));
  }
}

TEST_CASE("connected instances respect the two-thirds bound") {
  // lambda_t <= 2n/3 for connected graphs on n >= 3 vertices.
  int done = 0;
  std::uint64_t seed = 0;
  while (done < 80) {
    const int n = 3 + static_cast<int>(seed % 10);  // 3..12
    GenSpec spec{.n = n, .width = 2.5, .height = 2.5, .seed = 21000 + seed,
                 .policy = MinDegreePolicy::allow};
    ++seed;
    auto ps = gen_uniform(spec);
    if (!testutil::brute_connected(ps)) continue;
    ++done;
    auto idx = build_index(ps);
    auto res = exact::exact_tds(ps, idx);
    CHECK(res.size <= 2 * n / 3);
  }
}

TEST_CASE("ub_hint does not change the answer") {
  GenSpec spec{.n = 12, .width = 3, .height = 3, .seed = 314,
               .policy = MinDegreePolicy::reject_isolated};
  auto ps = gen_uniform(spec);
  auto idx = build_index(ps);
  auto plain = exact::exact_tds(ps, idx);
  auto hinted = exact::exact_tds(ps, idx, plain.size);
  CHECK(hinted.size == plain.size);
  CHECK(hinted.opt.ids == plain.opt.ids);
}

TEST_CASE("node budget interrupts the search") {
  GenSpec spec{.n = 14, .width = 3.5, .height = 3.5, .seed = 2718,
               .policy = MinDegreePolicy::reject_isolated};
  auto ps = gen_uniform(spec);
  auto idx = build_index(ps);
  CHECK_THROWS_AS(
      exact::exact_tds(ps, idx, std::nullopt, exact::SearchBudget{1}),
      budget_error);
}

TEST_CASE("exact solvers reject isolated points and report them") {
  auto ps = testutil::ps_from({{0, 0}, {0.5, 0}, {40, 40}});
  auto idx = build_index(ps);
  try {
    exact::exact_tds(ps, idx);
    FAIL("expected infeasible_error");
  } catch (const infeasible_error& e) {
    CHECK(e.ids == std::vector<int>{2});
  }
  CHECK_THROWS_AS(exact::naive_tds(ps, idx), infeasible_error);

  auto lone = testutil::ps_from({{0, 0}});
  auto lidx = build_index(lone);
  CHECK_THROWS_AS(exact::exact_tds(lone, lidx), infeasible_error);
}

TEST_CASE("empty instance has an empty optimum") {
  PointSet ps;
  auto idx = build_index(ps);
  auto res = exact::exact_tds(ps, idx);
  CHECK(res.size == 0);
  CHECK(res.opt.ids.empty());
}

TEST_CASE("oracle size guards") {
  GenSpec spec{.n = 17, .width = 3, .height = 3, .seed = 1,
               .policy = MinDegreePolicy::reject_isolated};
  auto ps = gen_uniform(spec);
  auto idx = build_index(ps);
  CHECK_THROWS_AS(exact::naive_tds(ps, idx), input_error);
  CHECK_THROWS_AS(exact::exact_vc(21, {}), input_error);
}

TEST_CASE("exact_vc on small named graphs") {
  using E = std::vector<std::pair<int, int>>;
  CHECK(exact::exact_vc(2, E{{0, 1}}) == std::vector<int>{0});
  CHECK(exact::exact_vc(3, E{{0, 1}, {1, 2}}) == std::vector<int>{1});
  CHECK(exact::exact_vc(3, E{{0, 1}, {1, 2}, {0, 2}}).size() == 2);
  CHECK(exact::exact_vc(4, E{{0, 1}, {0, 2}, {0, 3}}) == std::vector<int>{0});
  CHECK(exact::exact_vc(5, E{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}).size() ==
        3);
  CHECK(exact::exact_vc(4, E{}).empty());
  CHECK_THROWS_AS(exact::exact_vc(2, E{{0, 2}}), input_error);
}
