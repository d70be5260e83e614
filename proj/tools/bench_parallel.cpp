// Compares the OpenMP kernels against their serial reference
// implementations: the validator's domination scan and the ptas cell
// fan-out. Prints one CSV table to stdout; `match` confirms both variants
// returned identical results.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "tds/approx8.hpp"
#include "tds/core.hpp"
#include "tds/generators.hpp"
#include "tds/geometry.hpp"
#include "tds/ptas.hpp"

namespace {

double steady_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename F>
double best_of(int reps, F&& fn) {
  double best = 0.0;
  for (int r = 0; r < reps; ++r) {
    const double t0 = steady_ms();
    fn();
    const double ms = steady_ms() - t0;
    if (r == 0 || ms < best) best = ms;
  }
  return best;
}

void row(const char* kernel, int n, double serial_ms, double parallel_ms,
         bool match) {
  std::printf("%s,%d,%.3f,%.3f,%.2f,%s\n", kernel, n, serial_ms, parallel_ms,
              serial_ms / (parallel_ms > 0 ? parallel_ms : 1e-9),
              match ? "yes" : "no");
}

}  // namespace

int main() {
  std::printf("kernel,n,serial_ms,parallel_ms,speedup,match\n");

  // validator scan at density 1 (box side sqrt(n))
  for (int n : {20000, 50000, 100000}) {
    tds::GenSpec spec;
    spec.n = n;
    spec.width = spec.height = std::sqrt(static_cast<double>(n));
    spec.seed = 7;
    const tds::PointSet ps = tds::gen_uniform(spec);
    const tds::GridIndex idx = tds::build_index(ps);
    const tds::Solution sol = tds::approx8::solve(ps, idx).T;
    std::vector<int> us, up;
    const double s =
        best_of(3, [&] { us = tds::undominated_total_serial(ps, idx, sol); });
    const double p =
        best_of(3, [&] { up = tds::undominated_total(ps, idx, sol); });
    row("validate", n, s, p, us == up);
  }

  // ptas cell fan-out on sparse boxes small enough for per-cell search
  for (int n : {40, 80}) {
    tds::GenSpec spec;
    spec.n = n;
    spec.width = spec.height = 10.0;
    spec.seed = 11;
    const tds::PointSet ps = tds::gen_uniform(spec);
    const tds::GridIndex idx = tds::build_index(ps);
    tds::ptas::PtasConfig cfg;
    cfg.k = 2;
    tds::ptas::PtasResult rs, rp;
    const double s = best_of(3, [&] { rs = tds::ptas::solve_serial(ps, idx, cfg); });
    const double p = best_of(3, [&] { rp = tds::ptas::solve(ps, idx, cfg); });
    row("ptas-k2", n, s, p,
        rs.best.ids == rp.best.ids && rs.best_i == rp.best_i &&
            rs.best_j == rp.best_j);
  }
  return 0;
}
