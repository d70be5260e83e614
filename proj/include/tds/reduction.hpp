#pragma once
#include <string>
#include <string_view>
#include <vector>

#include "tds/core.hpp"
#include "tds/geometry.hpp"

namespace tds::reduction {

// A planar max-degree-3 graph embedded on the 4-unit grid: every edge is a
// rectilinear path of grid points, consecutive points 4 apart on one axis.
struct GridCoord {
  long long x = 0;
  long long y = 0;
  bool operator==(const GridCoord&) const = default;
  bool operator<(const GridCoord& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
};

struct EmbeddedEdge {
  int u = 0;
  int w = 0;
  std::vector<GridCoord> path;  // from u's coordinate to w's, endpoints included

  int segments() const { return static_cast<int>(path.size()) - 1; }
};

struct EmbeddedPlanarGraph {
  std::vector<GridCoord> vertices;  // index = vertex id
  std::vector<EmbeddedEdge> edges;

  int n() const { return static_cast<int>(vertices.size()); }
  int m() const { return static_cast<int>(edges.size()); }
  int segments() const;  // total over all edges
};

// Structural validation: coordinates on the 4-grid, degree <= 3, paths made
// of axis-aligned length-4 steps matching their endpoints, segments unique,
// path interiors disjoint from each other and from vertex locations.
// Throws input_error describing the first violation.
void validate(const EmbeddedPlanarGraph& epg);

// Embedding file: '#' comments; `v <id> <gx> <gy>` lines (ids 0..n-1, each
// once, coordinates multiples of 4); `e <u> <w> <x1> <y1> ... <xt> <yt>`
// lines giving the full grid path including both endpoints. Validates.
EmbeddedPlanarGraph parse_embedding(std::istream& in, const std::string& name);
EmbeddedPlanarGraph load_embedding(const std::string& path);

enum class Role { vertex, extra, gridpt, support_x, support_y, support_z };

std::string_view role_name(Role r);
Role role_from_name(std::string_view s);  // input_error on unknown names

struct SupportIds {
  int x = -1;
  int y = -1;
  int z = -1;
};

// The unit disk instance produced from an embedding, with enough structure
// retained to map solutions back and forth.
struct ReducedInstance {
  PointSet points;
  std::vector<Role> roles;                    // per point id
  std::vector<int> vertex_map;                // source vertex -> point id
  std::vector<std::vector<int>> edge_points;  // per edge: ids along the path,
                                              // endpoint vertex points included
  std::vector<SupportIds> support_map;        // per source vertex
  int n = 0;    // source vertices
  int m = 0;    // source edges
  int ell = 0;  // total segments
};

// Point placement: vertex points at the embedded coordinates; along every
// edge, extras at arclengths {0.98, 1.49, 2, 2.51, 3.02} on a single-segment
// edge, {1, 1.75, 2.5, 3.25} along first and (mirrored) last segments of
// longer edges, {1, 2, 3} on fully interior segments, plus the interior grid
// points; per vertex a support ray of length 1.4 in the first grid direction
// (+y, -y, +x, -x) unused by its edges, carrying points at {0.3, 1.1, 1.4}.
// Counts: n vertex points, 4*ell + m edge points, 3n support points.
ReducedInstance build(const EmbeddedPlanarGraph& epg);

// Turn a vertex cover of the source graph into a TDS of the instance:
// covered vertex points, both x_i and y_i per vertex, and per edge two of
// every four consecutive path points (skip two, take two) walking from a
// covered endpoint (ties: lower vertex id). Size |C| + 2*ell + 2n.
// Throws input_error if `cover` is not a vertex cover.
Solution vc_to_tds(const ReducedInstance& ri, const std::vector<int>& cover);

// Extract a vertex cover from any TDS of the instance: start with vertices
// whose points are in T; while an edge is uncovered, find one of its
// segments holding >= 3 members, drop the member nearest the edge's first
// endpoint and cover that endpoint instead. |C| <= |T| - 2*ell - 2n.
// Throws input_error if T is not a TDS of ri.
std::vector<int> tds_to_vc(const ReducedInstance& ri, const Solution& T);

// Structural facts any TDS of a reduced instance must satisfy.
struct ClaimsReport {
  bool support_pairs = false;    // |S ∩ T| >= 2n
  bool segment_pairs = false;    // every segment holds >= 2 members of T
  bool uncovered_edges = false;  // edges with both endpoints outside T hold
                                 // >= 2*ell'+1 members
  bool all_pass() const {
    return support_pairs && segment_pairs && uncovered_edges;
  }
};

// Checks the three claims; throws input_error unless T is a TDS of ri.
ClaimsReport verify_claims(const ReducedInstance& ri, const Solution& T);

// Instance = points file plus a sidecar describing roles and index maps:
//   params <n> <m> <ell>
//   role <pid> <vertex|extra|gridpt|support-x|support-y|support-z>
//   vmap <v> <pid>
//   support <v> <xid> <yid> <zid>
//   edge <pid> <pid> ...   (path order; first/last are the endpoint vertex points)
void save_instance(const ReducedInstance& ri, const std::string& points_path,
                   const std::string& meta_path);
ReducedInstance load_instance(const std::string& points_path,
                              const std::string& meta_path);

}  // namespace tds::reduction
