#include "tds/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tds/errors.hpp"

namespace tds::reduction {

namespace {

// All construction offsets in hundredths of a unit, so coordinates stay
// exact two-decimal values (grid coordinates contribute whole hundreds).
constexpr long long kSingleSeg[] = {98, 149, 200, 251, 302};
constexpr long long kFirstSeg[] = {100, 175, 250, 325};
constexpr long long kLastSeg[] = {75, 150, 225, 300};  // mirror of kFirstSeg
constexpr long long kInteriorSeg[] = {100, 200, 300};
constexpr long long kSupportSeg[] = {30, 110, 140};

struct HPoint {
  long long x = 0;
  long long y = 0;
};

std::string coord_str(const GridCoord& g) {
  return "(" + std::to_string(g.x) + "," + std::to_string(g.y) + ")";
}

std::string edge_str(int u, int w) {
  return "(" + std::to_string(u) + "," + std::to_string(w) + ")";
}

// Unit grid direction of one length-4 segment.
GridCoord step_dir(const GridCoord& from, const GridCoord& to) {
  return {(to.x - from.x) / 4, (to.y - from.y) / 4};
}

}  // namespace

int EmbeddedPlanarGraph::segments() const {
  int total = 0;
  for (const auto& e : edges) total += e.segments();
  return total;
}

void validate(const EmbeddedPlanarGraph& epg) {
  const int n = epg.n();
  if (n < 1) throw input_error("embedding has no vertices");
  std::set<GridCoord> vertex_coords;
  for (int v = 0; v < n; ++v) {
    const GridCoord& g = epg.vertices[v];
    if (g.x % 4 != 0 || g.y % 4 != 0) {
      throw input_error("vertex " + std::to_string(v) + " at " + coord_str(g) +
                        " is off the 4-grid");
    }
    if (!vertex_coords.insert(g).second) {
      throw input_error("two vertices share coordinate " + coord_str(g));
    }
  }

  std::vector<int> degree(n, 0);
  std::set<std::pair<int, int>> seen_edges;
  std::set<std::pair<GridCoord, GridCoord>> seen_segments;
  std::set<GridCoord> interior_coords;
  for (const EmbeddedEdge& e : epg.edges) {
    const std::string label = "edge " + edge_str(e.u, e.w);
    if (e.u < 0 || e.u >= n || e.w < 0 || e.w >= n) {
      throw input_error(label + ": endpoint out of range");
    }
    if (e.u == e.w) throw input_error(label + ": self-loop");
    if (!seen_edges.insert(std::minmax(e.u, e.w)).second) {
      throw input_error(label + ": duplicate edge");
    }
    ++degree[e.u];
    ++degree[e.w];
    if (e.path.size() < 2) {
      throw input_error(label + ": path needs at least two grid points");
    }
    if (!(e.path.front() == epg.vertices[e.u])) {
      throw input_error(label + ": path does not start at vertex " +
                        std::to_string(e.u));
    }
    if (!(e.path.back() == epg.vertices[e.w])) {
      throw input_error(label + ": path does not end at vertex " +
                        std::to_string(e.w));
    }
    for (size_t s = 1; s < e.path.size(); ++s) {
      const GridCoord &a = e.path[s - 1], &b = e.path[s];
      const long long dx = b.x - a.x, dy = b.y - a.y;
      if (!((dx == 0 && (dy == 4 || dy == -4)) ||
            (dy == 0 && (dx == 4 || dx == -4)))) {
        throw input_error(label + ": step " + coord_str(a) + " -> " +
                          coord_str(b) + " is not a length-4 grid move");
      }
      if (!seen_segments.insert(std::minmax(a, b)).second) {
        throw input_error(label + ": segment " + coord_str(a) + "-" +
                          coord_str(b) + " reused");
      }
    }
    for (size_t s = 1; s + 1 < e.path.size(); ++s) {
      const GridCoord& g = e.path[s];
      if (vertex_coords.count(g)) {
        throw input_error(label + ": interior point " + coord_str(g) +
                          " sits on a vertex");
      }
      if (!interior_coords.insert(g).second) {
        throw input_error(label + ": interior point " + coord_str(g) +
                          " reused by another path");
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (degree[v] > 3) {
      throw input_error("vertex " + std::to_string(v) + " has degree " +
                        std::to_string(degree[v]) + " > 3");
    }
  }
}

EmbeddedPlanarGraph parse_embedding(std::istream& in,
                                    const std::string& name) {
  std::map<int, GridCoord> verts;
  std::vector<EmbeddedEdge> edges;
  std::string line;
  size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw input_error(name + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind[0] == '#') continue;
    if (kind == "v") {
      int id = 0;
      GridCoord g;
      if (!(ls >> id >> g.x >> g.y)) fail("expected: v <id> <gx> <gy>");
      if (id < 0) fail("vertex id must be >= 0");
      if (!verts.emplace(id, g).second) {
        fail("vertex " + std::to_string(id) + " defined twice");
      }
    } else if (kind == "e") {
      EmbeddedEdge e;
      if (!(ls >> e.u >> e.w)) fail("expected: e <u> <w> <x> <y> ...");
      GridCoord g;
      while (ls >> g.x) {
        if (!(ls >> g.y)) fail("path has an odd number of coordinates");
        e.path.push_back(g);
      }
      if (!ls.eof()) fail("trailing junk on edge line");
      if (e.path.size() < 2) fail("edge path needs at least two grid points");
      edges.push_back(std::move(e));
    } else {
      fail("unknown line kind '" + kind + "'");
    }
  }
  EmbeddedPlanarGraph epg;
  epg.vertices.resize(verts.size());
  int expect = 0;
  for (const auto& [id, g] : verts) {
    if (id != expect) {
      throw input_error(name + ": vertex ids must be contiguous 0..n-1 (" +
                        std::to_string(expect) + " missing)");
    }
    epg.vertices[id] = g;
    ++expect;
  }
  epg.edges = std::move(edges);
  validate(epg);
  return epg;
}

EmbeddedPlanarGraph load_embedding(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open embedding file: " + path);
  return parse_embedding(in, path);
}

std::string_view role_name(Role r) {
  switch (r) {
    case Role::vertex: return "vertex";
    case Role::extra: return "extra";
    case Role::gridpt: return "gridpt";
    case Role::support_x: return "support-x";
    case Role::support_y: return "support-y";
    case Role::support_z: return "support-z";
  }
  throw internal_error("unhandled role");
}

Role role_from_name(std::string_view s) {
  if (s == "vertex") return Role::vertex;
  if (s == "extra") return Role::extra;
  if (s == "gridpt") return Role::gridpt;
  if (s == "support-x") return Role::support_x;
  if (s == "support-y") return Role::support_y;
  if (s == "support-z") return Role::support_z;
  throw input_error("unknown role name: " + std::string(s));
}

ReducedInstance build(const EmbeddedPlanarGraph& epg) {
  validate(epg);
  if (epg.m() < 1) throw input_error("reduction needs at least one edge");

  ReducedInstance ri;
  ri.n = epg.n();
  ri.m = epg.m();
  ri.ell = epg.segments();

  std::vector<HPoint> coords;
  auto add_point = [&](HPoint h, Role r) -> int {
    const int id = static_cast<int>(coords.size());
    coords.push_back(h);
    ri.roles.push_back(r);
    return id;
  };

  for (int v = 0; v < ri.n; ++v) {
    const GridCoord& g = epg.vertices[v];
    ri.vertex_map.push_back(add_point({g.x * 100, g.y * 100}, Role::vertex));
  }

  for (const EmbeddedEdge& e : epg.edges) {
    std::vector<int> seq;
    seq.push_back(ri.vertex_map[e.u]);
    const int t = e.segments();
    for (int s = 1; s <= t; ++s) {
      const GridCoord& a = e.path[s - 1];
      const GridCoord dir = step_dir(a, e.path[s]);
      const HPoint base{a.x * 100, a.y * 100};
      auto add_extras = [&](const long long* offs, int cnt) {
        for (int i = 0; i < cnt; ++i) {
          seq.push_back(add_point(
              {base.x + dir.x * offs[i], base.y + dir.y * offs[i]},
              Role::extra));
        }
      };
      if (t == 1) {
        add_extras(kSingleSeg, 5);
      } else if (s == 1) {
        add_extras(kFirstSeg, 4);
      } else {
        seq.push_back(add_point(base, Role::gridpt));
        if (s < t) {
          add_extras(kInteriorSeg, 3);
        } else {
          add_extras(kLastSeg, 4);
        }
      }
    }
    seq.push_back(ri.vertex_map[e.w]);
    ri.edge_points.push_back(std::move(seq));
  }

  // One support ray per vertex in the first axis direction no incident edge
  // leaves by; degree <= 3 guarantees one is free.
  std::vector<std::set<std::pair<long long, long long>>> used(ri.n);
  for (const EmbeddedEdge& e : epg.edges) {
    const GridCoord du = step_dir(e.path.front(), e.path[1]);
    const GridCoord dw =
        step_dir(e.path.back(), e.path[e.path.size() - 2]);
    used[e.u].insert({du.x, du.y});
    used[e.w].insert({dw.x, dw.y});
  }
  constexpr std::pair<long long, long long> kDirs[] = {
      {0, 1}, {0, -1}, {1, 0}, {-1, 0}};
  for (int v = 0; v < ri.n; ++v) {
    const std::pair<long long, long long>* free_dir = nullptr;
    for (const auto& d : kDirs) {
      if (!used[v].count(d)) {
        free_dir = &d;
        break;
      }
    }
    if (!free_dir) {
      throw internal_error("no free support direction at vertex " +
                           std::to_string(v));
    }
    const GridCoord& g = epg.vertices[v];
    SupportIds sup;
    int* slot[3] = {&sup.x, &sup.y, &sup.z};
    const Role role[3] = {Role::support_x, Role::support_y, Role::support_z};
    for (int i = 0; i < 3; ++i) {
      *slot[i] = add_point({g.x * 100 + free_dir->first * kSupportSeg[i],
                            g.y * 100 + free_dir->second * kSupportSeg[i]},
                           role[i]);
    }
    ri.support_map.push_back(sup);
  }

  std::vector<std::pair<double, double>> raw;
  raw.reserve(coords.size());
  for (const HPoint& h : coords) {
    raw.emplace_back(static_cast<double>(h.x) / 100.0,
                     static_cast<double>(h.y) / 100.0);
  }
  ri.points = make_point_set(raw);
  return ri;
}

namespace {

// Segment bin of an interior path position (1-indexed, 4*ell'+1 of them):
// the first bin spans positions 1..5 (four extras plus the first grid
// point), later bins 4s-2..4s+1. Bins partition the edge's interior points
// with >= 2 members in any TDS.
int bin_of_position(int pos) { return std::max(1, (pos + 2) / 4); }

void require_tds(const ReducedInstance& ri, const Solution& T) {
  const GridIndex idx = build_index(ri.points);
  if (!is_tds(ri.points, idx, T)) {
    throw input_error("solution is not a total dominating set of the instance");
  }
}

}  // namespace

Solution vc_to_tds(const ReducedInstance& ri, const std::vector<int>& cover) {
  std::vector<char> in_cover(ri.n, 0);
  for (int v : cover) {
    if (v < 0 || v >= ri.n) {
      throw input_error("cover vertex out of range: " + std::to_string(v));
    }
    in_cover[v] = 1;
  }

  std::vector<int> point_vertex(ri.points.size(), -1);
  for (int v = 0; v < ri.n; ++v) point_vertex[ri.vertex_map[v]] = v;

  std::set<int> ids;
  for (int v = 0; v < ri.n; ++v) {
    if (in_cover[v]) ids.insert(ri.vertex_map[v]);
    ids.insert(ri.support_map[v].x);
    ids.insert(ri.support_map[v].y);
  }
  for (int e = 0; e < ri.m; ++e) {
    // walk from a covered endpoint (lower vertex id when both are covered)
    // and take interior positions 3,4 of every 4: skip two, take two.
    const auto& seq = ri.edge_points[e];
    const int vu = point_vertex[seq.front()], vw = point_vertex[seq.back()];
    if (vu < 0 || vw < 0) throw internal_error("edge endpoints unmapped");
    int from_u = -1;
    if (in_cover[vu] && in_cover[vw]) {
      from_u = vu <= vw ? 1 : 0;
    } else if (in_cover[vu]) {
      from_u = 1;
    } else if (in_cover[vw]) {
      from_u = 0;
    } else {
      throw input_error("not a vertex cover: edge " + edge_str(vu, vw) +
                        " has no covered endpoint");
    }
    const int interior = static_cast<int>(seq.size()) - 2;
    for (int pos = 1; pos <= interior; ++pos) {
      if (pos % 4 == 3 || pos % 4 == 0) {
        const int at = from_u ? pos : static_cast<int>(seq.size()) - 1 - pos;
        ids.insert(seq[at]);
      }
    }
  }

  Solution sol;
  sol.algo = "external";
  sol.params["origin"] = "vc_to_tds";
  sol.ids.assign(ids.begin(), ids.end());
  return sol;
}

std::vector<int> tds_to_vc(const ReducedInstance& ri, const Solution& T) {
  require_tds(ri, T);
  std::vector<char> in_t(ri.points.size(), 0);
  for (int id : T.ids) in_t[id] = 1;

  std::vector<int> point_vertex(ri.points.size(), -1);
  for (int v = 0; v < ri.n; ++v) point_vertex[ri.vertex_map[v]] = v;

  std::vector<char> in_c(ri.n, 0);
  for (int v = 0; v < ri.n; ++v) in_c[v] = in_t[ri.vertex_map[v]];

  auto uncovered_edge = [&]() -> int {
    for (int e = 0; e < ri.m; ++e) {
      const auto& seq = ri.edge_points[e];
      const int vu = point_vertex[seq.front()], vw = point_vertex[seq.back()];
      if (!in_c[vu] && !in_c[vw]) return e;
    }
    return -1;
  };

  for (int e = uncovered_edge(); e >= 0; e = uncovered_edge()) {
    const auto& seq = ri.edge_points[e];
    const int vu = point_vertex[seq.front()];
    const int interior = static_cast<int>(seq.size()) - 2;
    // first segment (from the edge's first endpoint) holding >= 3 members;
    // drop its member nearest that endpoint and cover the endpoint instead
    int witness_bin = -1;
    {
      std::map<int, int> bin_members;
      for (int pos = 1; pos <= interior; ++pos) {
        if (in_t[seq[pos]]) ++bin_members[bin_of_position(pos)];
      }
      for (const auto& [bin, cnt] : bin_members) {
        if (cnt >= 3) {
          witness_bin = bin;
          break;
        }
      }
    }
    if (witness_bin < 0) {
      throw internal_error("uncovered edge lacks a 3-member segment");
    }
    for (int pos = 1; pos <= interior; ++pos) {
      if (bin_of_position(pos) == witness_bin && in_t[seq[pos]]) {
        in_t[seq[pos]] = 0;
        break;
      }
    }
    in_t[seq.front()] = 1;
    in_c[vu] = 1;
  }

  std::vector<int> cover;
  for (int v = 0; v < ri.n; ++v) {
    if (in_c[v]) cover.push_back(v);
  }
  return cover;
}

ClaimsReport verify_claims(const ReducedInstance& ri, const Solution& T) {
  require_tds(ri, T);
  std::vector<char> in_t(ri.points.size(), 0);
  for (int id : T.ids) in_t[id] = 1;

  ClaimsReport rep;

  int support_members = 0;
  for (const SupportIds& s : ri.support_map) {
    support_members += in_t[s.x] + in_t[s.y] + in_t[s.z];
  }
  rep.support_pairs = support_members >= 2 * ri.n;

  rep.segment_pairs = true;
  rep.uncovered_edges = true;
  for (const auto& seq : ri.edge_points) {
    const int interior = static_cast<int>(seq.size()) - 2;
    const int nbins = (interior - 1) / 4;  // = segments of this edge
    std::vector<int> bin_members(nbins + 1, 0);
    int total = 0;
    for (int pos = 1; pos <= interior; ++pos) {
      if (in_t[seq[pos]]) {
        ++bin_members[bin_of_position(pos)];
        ++total;
      }
    }
    for (int b = 1; b <= nbins; ++b) {
      if (bin_members[b] < 2) rep.segment_pairs = false;
    }
    if (!in_t[seq.front()] && !in_t[seq.back()] && total < 2 * nbins + 1) {
      rep.uncovered_edges = false;
    }
  }
  return rep;
}

void save_instance(const ReducedInstance& ri, const std::string& points_path,
                   const std::string& meta_path) {
  save_points(ri.points, points_path,
              "reduced instance: n=" + std::to_string(ri.n) +
                  " m=" + std::to_string(ri.m) +
                  " ell=" + std::to_string(ri.ell));
  std::ofstream out(meta_path);
  if (!out) throw input_error("cannot write metadata file: " + meta_path);
  out << "# reduction metadata\n";
  out << "params " << ri.n << " " << ri.m << " " << ri.ell << "\n";
  for (size_t id = 0; id < ri.roles.size(); ++id) {
    out << "role " << id << " " << role_name(ri.roles[id]) << "\n";
  }
  for (int v = 0; v < ri.n; ++v) {
    out << "vmap " << v << " " << ri.vertex_map[v] << "\n";
  }
  for (int v = 0; v < ri.n; ++v) {
    const SupportIds& s = ri.support_map[v];
    out << "support " << v << " " << s.x << " " << s.y << " " << s.z << "\n";
  }
  for (const auto& seq : ri.edge_points) {
    out << "edge";
    for (int id : seq) out << " " << id;
    out << "\n";
  }
  if (!out) throw input_error("write failed: " + meta_path);
}

ReducedInstance load_instance(const std::string& points_path,
                              const std::string& meta_path) {
  ReducedInstance ri;
  ri.points = load_points(points_path);

  std::ifstream in(meta_path);
  if (!in) throw input_error("cannot open metadata file: " + meta_path);
  ri.roles.assign(ri.points.size(), Role::extra);
  std::vector<char> role_seen(ri.points.size(), 0);
  bool have_params = false;
  std::string line;
  size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw input_error(meta_path + ":" + std::to_string(lineno) + ": " + msg);
  };
  auto check_id = [&](long long id) -> int {
    if (id < 0 || id >= ri.points.size()) {
      fail("point id out of range: " + std::to_string(id));
    }
    return static_cast<int>(id);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind[0] == '#') continue;
    if (kind == "params") {
      if (!(ls >> ri.n >> ri.m >> ri.ell) || ri.n < 1 || ri.m < 0 ||
          ri.ell < ri.m) {
        fail("bad params line");
      }
      have_params = true;
    } else if (kind == "role") {
      long long id = 0;
      std::string name;
      if (!(ls >> id >> name)) fail("expected: role <id> <name>");
      const int pid = check_id(id);
      if (role_seen[pid]) fail("role repeated for id " + std::to_string(id));
      role_seen[pid] = 1;
      ri.roles[pid] = role_from_name(name);
    } else if (kind == "vmap") {
      long long v = 0, id = 0;
      if (!(ls >> v >> id)) fail("expected: vmap <v> <pid>");
      if (v != static_cast<long long>(ri.vertex_map.size())) {
        fail("vmap lines must come in vertex order");
      }
      ri.vertex_map.push_back(check_id(id));
    } else if (kind == "support") {
      long long v = 0, x = 0, y = 0, z = 0;
      if (!(ls >> v >> x >> y >> z)) fail("expected: support <v> <x> <y> <z>");
      if (v != static_cast<long long>(ri.support_map.size())) {
        fail("support lines must come in vertex order");
      }
      ri.support_map.push_back({check_id(x), check_id(y), check_id(z)});
    } else if (kind == "edge") {
      std::vector<int> seq;
      long long id = 0;
      while (ls >> id) seq.push_back(check_id(id));
      if (seq.size() < 7) fail("edge sequence too short");
      ri.edge_points.push_back(std::move(seq));
    } else {
      fail("unknown line kind '" + kind + "'");
    }
  }
  if (!have_params) throw input_error(meta_path + ": missing params line");
  if (static_cast<int>(ri.vertex_map.size()) != ri.n ||
      static_cast<int>(ri.support_map.size()) != ri.n ||
      static_cast<int>(ri.edge_points.size()) != ri.m) {
    throw input_error(meta_path + ": metadata does not match params counts");
  }
  for (size_t id = 0; id < role_seen.size(); ++id) {
    if (!role_seen[id]) {
      throw input_error(meta_path + ": missing role for point " +
                        std::to_string(id));
    }
  }
  int expect = ri.n;
  for (const auto& seq : ri.edge_points) expect += static_cast<int>(seq.size()) - 2;
  expect += 3 * ri.n;
  if (expect != ri.points.size()) {
    throw input_error(meta_path + ": point count does not match structure");
  }
  return ri;
}

}  // namespace tds::reduction
