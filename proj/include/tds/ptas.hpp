#pragma once
#include <vector>

#include "tds/core.hpp"
#include "tds/geometry.hpp"

namespace tds::ptas {

struct PtasConfig {
  int k = 1;  // shifting parameter, must be >= 1
};

// Half-open interval in offset space (coordinates measured from the bbox
// min corner, the anchor). A band owns (lo, hi]; the first band of a tiling
// additionally owns its lo (= 0), so offsets partition exactly.
struct Band {
  double lo = 0.0;
  double hi = 0.0;
};

// A cell rectangle: the cartesian product of an x band and a y band.
struct Rect {
  Band x;
  Band y;
};

// A single shifted-partition subproblem: dominate `targets` (the points the
// rect governs) using points drawn from `candidates` (everything within
// distance 1 of the rect; a superset of targets). `cap` bounds the optimum.
struct CellProblem {
  Rect rect;
  std::vector<int> targets;     // ascending ids
  std::vector<int> candidates;  // ascending ids, targets included
  int cap = 0;
};

// 2 * ceil(2*sqrt(2)*k)^2: no feasible cell ever needs more points (two per
// occupied 1/sqrt(2) sub-square suffice). k=1 -> 18, k=2 -> 72.
int cardinality_cap(int k);

// Tile an extent (>= 0) into bands of widths [first, period, period, ...,
// remainder]. extent == 0 yields the single degenerate band [0, 0].
std::vector<Band> make_bands(double extent, int first, int period);

// Index of the band owning offset v; bands must tile [0, extent] and v must
// lie within. Lower boundaries belong to the band below, v = 0 to band 0.
int band_index(const std::vector<Band>& bands, double v);

// Horizontal strips for shift i in 1..k: y-extent widths [2i, 2k, ...].
std::vector<Band> strips_for_iteration(int i, const BBox& bbox, int k);

// Cells of one strip for shift j in 1..k: x widths [2j, 2k, ...] crossed
// with the strip's y band. Cells that govern no point are kept here and
// dropped by the solver.
std::vector<Rect> cells_for_strip(const Band& strip, int j, const BBox& bbox,
                                  int k);

// Minimum-cardinality S within cp.candidates giving every target an open
// neighbor in S. Iterative deepening over |S| = 0,1,2,...; candidates are
// tried in order of descending target coverage (ties by id), branches are cut
// when depth * best-remaining-coverage cannot finish, and a greedy cover
// seeds the upper bound. Throws infeasible_error if a target has no candidate
// neighbor, internal_error if the optimum would exceed cp.cap.
Solution solve_cell(const CellProblem& cp, const PointSet& ps,
                    const GridIndex& idx);

struct IterationOutcome {
  int i = 0;
  int j = 0;
  Solution sol;  // union of the per-cell optima for shift (i, j)
};

struct PtasResult {
  Solution best;  // smallest iteration union, ties to lexicographic (i, j)
  int best_i = 0;
  int best_j = 0;
  std::vector<IterationOutcome> iterations;  // all k^2 shifts, (i, j) ascending
};

// Run all k^2 shifted partitions and keep the best union. The result is a
// TDS of size <= (1+1/k)^2 * OPT. Throws infeasible_error when the instance
// has isolated points. Cell subproblems fan out with OpenMP; `solve_serial`
// is the reference implementation kept for testing and benchmarking.
PtasResult solve(const PointSet& ps, const GridIndex& idx,
                 const PtasConfig& cfg);
PtasResult solve_serial(const PointSet& ps, const GridIndex& idx,
                        const PtasConfig& cfg);

}  // namespace tds::ptas
