#pragma once
#include <map>

#include "tds/core.hpp"
#include "tds/geometry.hpp"

namespace tds::approx8 {

// Phase-2 witness insertion order. `hoisted` counts the phase-1 set as
// part of T from the start (can only shrink T); `literal` adds the
// phase-1 set only after the witness loop. Both produce a valid TDS.
enum class UnionOrder { hoisted, literal };

struct Options {
  UnionOrder union_order = UnionOrder::hoisted;
  // Prefer a witness already in the phase-1 set. Off by default.
  bool prefer_d_witness = false;
};

struct ApproxResult {
  Solution D;  // independent dominating set from phase 1
  Solution T;  // final total dominating set
  // p in D that lacked a neighbor in T at its turn -> the q added for it.
  std::map<int, int> witnesses;
};

// Greedy independent dominating set: scan ids ascending, admit a point
// iff no already-admitted point is within distance 1. Queries touch only
// the 9 grid cells around the point, against an ordered map keyed by the
// cells that currently hold members.
Solution independent_ds(const PointSet& ps, const GridIndex& idx);

// Adds, for each member of D lacking an open neighbor in T, its
// lowest-id open neighbor. Throws infeasible_error when a member of D
// has no open neighbor at all.
ApproxResult totalize(const PointSet& ps, const GridIndex& idx,
                      const Solution& D, const Options& opt = {});

// Both phases. Throws infeasible_error listing isolated points.
ApproxResult solve(const PointSet& ps, const GridIndex& idx,
                   const Options& opt = {});

}  // namespace tds::approx8
