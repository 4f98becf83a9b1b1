#include "hotspots/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hotspots/error.hpp"

namespace hotspots {

namespace {

constexpr double kPi = std::numbers::pi;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

double signed_area(std::span<const Point> pts) {
  double s = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[i];
    const Point& q = pts[(i + 1) % pts.size()];
    s += cross(p, q);
  }
  return 0.5 * s;
}

// Rotates a loop so that it starts at its lowest, then leftmost, vertex.
std::vector<Point> canonical_start(std::vector<Point> loop) {
  auto it = std::min_element(loop.begin(), loop.end(), [](Point a, Point b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  std::rotate(loop.begin(), it, loop.end());
  return loop;
}

void relabel(DomainSpec& spec) {
  int label = 1;
  for (int loop = 0; loop < static_cast<int>(spec.loops.size()); ++loop) {
    for (auto& e : spec.edges) {
      if (e.loop == loop) e.label = label++;
    }
  }
}

void build_edges_from_loops(DomainSpec& spec) {
  spec.edges.clear();
  for (int l = 0; l < static_cast<int>(spec.loops.size()); ++l) {
    const auto& loop = spec.loops[l];
    for (std::size_t k = 0; k < loop.size(); ++k) {
      Edge e;
      e.start = loop[k];
      e.end = loop[(k + 1) % loop.size()];
      e.loop = l;
      spec.edges.push_back(e);
    }
  }
  relabel(spec);
  for (auto& e : spec.edges) e.parent_label = e.label;
}

void classify_vertices(DomainSpec& spec) {
  spec.reflex_vertices.clear();
  spec.flat_vertices.clear();
  for (int v = 0; v < static_cast<int>(spec.vertices.size()); ++v) {
    const double angle = spec.interior_angle(v);
    if (std::abs(angle - 1.5 * kPi) < 1e-9) {
      spec.reflex_vertices.push_back(v);
    } else if (std::abs(angle - kPi) < 1e-9) {
      const auto& in = spec.edges[spec.incoming_edge(v)];
      const auto& out = spec.edges[spec.outgoing_edge(v)];
      if (in.bc.kind != out.bc.kind) spec.flat_vertices.push_back(v);
    }
  }
}

DomainSpec make_domain(DomainKind kind, std::vector<double> params,
                       const std::vector<std::vector<Point>>& loops) {
  DomainSpec spec;
  spec.kind = kind;
  spec.params = std::move(params);
  for (std::size_t l = 0; l < loops.size(); ++l) {
    std::vector<Point> pts = l == 0 ? canonical_start(loops[l]) : loops[l];
    std::vector<int> idx;
    for (const auto& p : pts) {
      idx.push_back(static_cast<int>(spec.vertices.size()));
      spec.vertices.push_back(p);
    }
    spec.loops.push_back(std::move(idx));
  }
  build_edges_from_loops(spec);
  classify_vertices(spec);
  return spec;
}

// Folds a point of a tiled domain back into its tiling L.
Point fold_into_tile(const DomainSpec& spec, Point p) {
  const LParams& t = *spec.tile;
  const Point centroid{0.5 * t.a1, 0.5 * t.a3};
  for (const auto& r : spec.reflections) {
    const bool tile_side_low =
        r.normal == Axis::x ? centroid.x < r.offset : centroid.y < r.offset;
    const double coord = r.normal == Axis::x ? p.x : p.y;
    if ((tile_side_low && coord > r.offset) || (!tile_side_low && coord < r.offset)) {
      p = r.apply(p);
    }
  }
  return p;
}

void assign_tile_labels(DomainSpec& spec) {
  if (!spec.tile) return;
  const DomainSpec tile = build_L(*spec.tile);
  const double tol = 1e-9 * spec.diameter();
  for (auto& e : spec.edges) {
    const Point a = spec.start_point(e);
    const Point b = spec.end_point(e);
    const Point probe = a + 0.3 * (b - a);
    const Point folded = fold_into_tile(spec, probe);
    const int idx = tile.edge_at(folded, tol);
    e.tile_label = idx >= 0 ? tile.edges[idx].label : 0;
  }
}

}  // namespace

double segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  double t = len2 > 0.0 ? dot(p - a, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + t * d);
}

// ---------------------------------------------------------------------------
// LParams

void LParams::validate() const {
  for (double a : as_array()) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      std::ostringstream msg;
      msg << "L-shaped domain parameters must be positive and finite, got (" << a1 << ", " << a2
          << ", " << a3 << ", " << a4 << ")";
      throw InvalidParameter(msg.str());
    }
  }
}

std::array<Point, 6> LParams::vertices() const {
  return {Point{0.0, 0.0},     Point{a1 + a2, 0.0}, Point{a1 + a2, a3},
          Point{a1, a3}, Point{a1, a3 + a4}, Point{0.0, a3 + a4}};
}

double LParams::min_length() const { return std::min({a1, a2, a3, a4}); }

LParams LParams::lerp(const LParams& o, double t) const {
  return {(1 - t) * a1 + t * o.a1, (1 - t) * a2 + t * o.a2, (1 - t) * a3 + t * o.a3,
          (1 - t) * a4 + t * o.a4};
}

LParams LParams::from_vertices(std::span<const Point> input) {
  if (input.size() != 6) throw InvalidParameter("an L-shaped domain has exactly 6 vertices");
  std::vector<Point> v(input.begin(), input.end());
  if (signed_area(v) < 0.0) std::reverse(v.begin(), v.end());

  double scale = 0.0;
  for (const auto& p : v) scale = std::max(scale, norm(p - v[0]));
  const double tol = 1e-12 * std::max(scale, 1.0);

  int reflex = -1;
  for (int k = 0; k < 6; ++k) {
    const Point din = v[k] - v[(k + 5) % 6];
    const Point dout = v[(k + 1) % 6] - v[k];
    if (std::abs(din.x) > tol && std::abs(din.y) > tol) {
      throw InvalidParameter("L-shaped domain edges must be axis-parallel");
    }
    if (cross(din, dout) < 0.0) {
      if (reflex >= 0) throw InvalidParameter("L-shaped domain must have one reflex vertex");
      reflex = k;
    }
  }
  if (reflex < 0) throw InvalidParameter("L-shaped domain must have one reflex vertex");

  const int start = (reflex + 3) % 6;
  std::array<double, 6> len{};
  for (int k = 0; k < 6; ++k) len[k] = distance(v[(start + k) % 6], v[(start + k + 1) % 6]);
  LParams p{len[4], len[2], len[1], len[3]};
  p.validate();
  if (std::abs(len[0] - (p.a1 + p.a2)) > 1e-9 * scale ||
      std::abs(len[5] - (p.a3 + p.a4)) > 1e-9 * scale) {
    throw InvalidParameter("vertex list is not an L-shaped hexagon");
  }
  return p;
}

// ---------------------------------------------------------------------------
// DomainSpec queries

double DomainSpec::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      d = std::max(d, distance(vertices[i], vertices[j]));
  return d;
}

double DomainSpec::area() const {
  double a = 0.0;
  for (const auto& loop : loops) {
    std::vector<Point> pts;
    for (int i : loop) pts.push_back(vertices[i]);
    a += signed_area(pts);
  }
  return a;
}

std::array<double, 4> DomainSpec::bounding_box() const {
  std::array<double, 4> bb{vertices[0].x, vertices[0].y, vertices[0].x, vertices[0].y};
  for (const auto& p : vertices) {
    bb[0] = std::min(bb[0], p.x);
    bb[1] = std::min(bb[1], p.y);
    bb[2] = std::max(bb[2], p.x);
    bb[3] = std::max(bb[3], p.y);
  }
  return bb;
}

int DomainSpec::edge_index(int label) const {
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].label == label) return i;
  throw InvalidParameter("no edge with label e" + std::to_string(label));
}

int DomainSpec::incoming_edge(int vertex) const {
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].end == vertex) return i;
  throw InvalidParameter("vertex has no incoming edge");
}

int DomainSpec::outgoing_edge(int vertex) const {
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].start == vertex) return i;
  throw InvalidParameter("vertex has no outgoing edge");
}

double DomainSpec::interior_angle(int vertex) const {
  const Edge& in = edges[incoming_edge(vertex)];
  const Edge& out = edges[outgoing_edge(vertex)];
  const Point din = end_point(in) - start_point(in);
  const Point dout = end_point(out) - start_point(out);
  const double turn = std::atan2(cross(din, dout), dot(din, dout));
  return kPi - turn;
}

bool DomainSpec::has_dirichlet() const {
  return std::any_of(edges.begin(), edges.end(),
                     [](const Edge& e) { return e.bc.kind == BcKind::dirichlet; });
}

bool DomainSpec::contains(Point p) const {
  bool inside = false;
  for (const auto& e : edges) {
    const Point a = start_point(e);
    const Point b = end_point(e);
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xc = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xc) inside = !inside;
    }
  }
  return inside;
}

int DomainSpec::edge_at(Point p, double tol) const {
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (segment_distance(p, start_point(edges[i]), end_point(edges[i])) <= tol) return i;
  }
  return -1;
}

int DomainSpec::vertex_at(Point p, double tol) const {
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    if (distance(p, vertices[i]) <= tol) return i;
  return -1;
}

std::vector<int> DomainSpec::singular_vertices() const {
  std::vector<int> out = reflex_vertices;
  out.insert(out.end(), flat_vertices.begin(), flat_vertices.end());
  return out;
}

// ---------------------------------------------------------------------------
// Builders

DomainSpec build_L(const LParams& p) {
  p.validate();
  const auto v = p.vertices();
  DomainSpec spec = make_domain(DomainKind::L, {p.a1, p.a2, p.a3, p.a4},
                                {std::vector<Point>(v.begin(), v.end())});
  const std::array<EdgeTag, 6> tags{EdgeTag::long_outer, EdgeTag::short_outer, EdgeTag::inner,
                                    EdgeTag::inner,      EdgeTag::short_outer, EdgeTag::long_outer};
  for (int k = 0; k < 6; ++k) {
    spec.edges[k].tag = tags[k];
    spec.edges[k].tile_label = k + 1;
  }
  spec.diametric_vertices = std::array<int, 2>{1, 5};
  spec.tile = p;
  return spec;
}

DomainSpec build_rectangle(double width, double height) {
  if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) || !std::isfinite(height)) {
    throw InvalidParameter("rectangle side lengths must be positive");
  }
  return make_domain(DomainKind::rectangle, {width, height},
                     {{{0, 0}, {width, 0}, {width, height}, {0, height}}});
}

DomainSpec build_tiled(const LParams& p, DomainKind kind) {
  p.validate();
  const double A = p.a1, B = p.a1 + p.a2, C = p.a3, E = p.a3 + p.a4;
  const double W = 2.0 * B, H2 = 2.0 * E;
  DomainSpec spec;
  switch (kind) {
    case DomainKind::L:
      return build_L(p);
    case DomainKind::T:
      spec = make_domain(kind, {A, p.a2, C, p.a4},
                         {{{0, -E}, {A, -E}, {A, -C}, {B, -C}, {B, C}, {A, C}, {A, E}, {0, E}}});
      spec.reflections = {{Axis::y, 0.0}};
      break;
    case DomainKind::U:
      spec = make_domain(kind, {A, p.a2, C, p.a4},
                         {{{0, 0}, {W, 0}, {W, E}, {W - A, E}, {W - A, C}, {A, C}, {A, E}, {0, E}}});
      spec.reflections = {{Axis::x, B}};
      break;
    case DomainKind::cross:
    case DomainKind::cross_surface:
      spec = make_domain(kind, {A, p.a2, C, p.a4},
                         {{{-A, -E}, {A, -E}, {A, -C}, {B, -C}, {B, C}, {A, C}, {A, E}, {-A, E},
                           {-A, C}, {-B, C}, {-B, -C}, {-A, -C}}});
      spec.reflections = {{Axis::y, 0.0}, {Axis::x, 0.0}};
      break;
    case DomainKind::H:
      spec = make_domain(kind, {A, p.a2, C, p.a4},
                         {{{0, -E}, {A, -E}, {A, -C}, {W - A, -C}, {W - A, -E}, {W, -E}, {W, E},
                           {W - A, E}, {W - A, C}, {A, C}, {A, E}, {0, E}}});
      spec.reflections = {{Axis::x, B}, {Axis::y, 0.0}};
      break;
    case DomainKind::O:
      spec = make_domain(kind, {A, p.a2, C, p.a4},
                         {{{0, 0}, {W, 0}, {W, H2}, {0, H2}},
                          {{A, C}, {A, H2 - C}, {W - A, H2 - C}, {W - A, C}}});
      spec.reflections = {{Axis::x, B}, {Axis::y, E}};
      break;
    case DomainKind::rectangle:
      throw InvalidParameter("a rectangle is not an L-tiled domain");
  }
  spec.central_symmetry = spec.reflections.size() == 2;
  spec.tile = p;
  for (auto& e : spec.edges) e.tag = EdgeTag::derived;
  assign_tile_labels(spec);
  return spec;
}

DomainSpec build_swiss_cross_surface(const LParams& p) {
  DomainSpec spec = build_tiled(p, DomainKind::cross_surface);
  const double tol = 1e-9 * spec.diameter();
  const int n = static_cast<int>(spec.edges.size());
  std::vector<bool> paired(n, false);
  for (int i = 0; i < n; ++i) {
    if (paired[i]) continue;
    const Edge& ei = spec.edges[i];
    const Point pa = spec.start_point(ei), pb = spec.end_point(ei);
    for (int j = i + 1; j < n; ++j) {
      if (paired[j]) continue;
      const Edge& ej = spec.edges[j];
      const Point qa = spec.start_point(ej), qb = spec.end_point(ej);
      const Point shift = qa - pb;
      if (distance(pa + shift, qb) > tol) continue;
      // opposite orientation with a pure translation; also require the shift
      // to be normal to the edges (opposite sides of the polygon).
      if (std::abs(dot(shift, pb - pa)) > tol * norm(pb - pa)) continue;
      paired[i] = paired[j] = true;
      spec.periodic_pairs.push_back({i, j, shift});
      spec.edges[i].bc = {BcKind::periodic, j};
      spec.edges[j].bc = {BcKind::periodic, i};
      break;
    }
  }
  if (std::find(paired.begin(), paired.end(), false) != paired.end()) {
    throw InvalidParameter("Swiss cross surface: unpaired edge");
  }
  spec.cone_orbit = spec.reflex_vertices;
  return spec;
}

// ---------------------------------------------------------------------------
// Boundary conditions

DomainSpec assign_bc(const DomainSpec& spec, const BcAssignment& assignment) {
  DomainSpec out = spec;
  for (const auto& [label, kind] : assignment.edges) {
    Edge& e = out.edges[out.edge_index(label)];
    if (e.bc.kind == BcKind::periodic || kind == BcKind::periodic) {
      throw ConflictError("edge e" + std::to_string(label) +
                          " is periodic; its boundary condition cannot be reassigned");
    }
    e.bc.kind = kind;
  }
  if (assignment.others) {
    if (*assignment.others == BcKind::periodic)
      throw ConflictError("periodic is not an assignable boundary condition");
    for (auto& e : out.edges) {
      if (e.bc.kind != BcKind::periodic && !assignment.edges.count(e.label))
        e.bc.kind = *assignment.others;
    }
  }

  if (assignment.dirichlet_segments.empty()) {
    classify_vertices(out);
    return out;
  }

  const double tol = out.tolerance() * 1e3;
  const DomainSpec before = out;
  for (const auto& [p, q] : assignment.dirichlet_segments) {
    int host = -1;
    for (int i = 0; i < static_cast<int>(out.edges.size()); ++i) {
      const Point a = out.start_point(out.edges[i]), b = out.end_point(out.edges[i]);
      if (segment_distance(p, a, b) <= tol && segment_distance(q, a, b) <= tol) {
        host = i;
        break;
      }
    }
    if (host < 0) throw InvalidParameter("Dirichlet segment does not lie on a single edge");
    const Edge e = out.edges[host];
    if (e.bc.kind == BcKind::periodic)
      throw ConflictError("Dirichlet segment on periodic edge e" + std::to_string(e.label));

    const Point a = out.start_point(e), b = out.end_point(e);
    const Point d = b - a;
    double t0 = dot(p - a, d) / dot(d, d), t1 = dot(q - a, d) / dot(d, d);
    if (t0 > t1) std::swap(t0, t1);
    if (t1 - t0 < 1e-12) throw InvalidParameter("degenerate Dirichlet segment");

    std::vector<int> inserted;
    for (double t : {t0, t1}) {
      if (t > 1e-12 && t < 1.0 - 1e-12) {
        inserted.push_back(static_cast<int>(out.vertices.size()));
        out.vertices.push_back(a + t * d);
      }
    }
    auto& loop = out.loops[e.loop];
    auto pos = std::find(loop.begin(), loop.end(), e.start);
    loop.insert(pos + 1, inserted.begin(), inserted.end());

    // Rebuild edges, copying attributes from the edge that contains each new edge.
    const std::vector<Edge> old_edges = out.edges;
    const DomainSpec old_geom = out;
    build_edges_from_loops(out);
    for (auto& ne : out.edges) {
      const Point mid = 0.5 * (out.start_point(ne) + out.end_point(ne));
      int src = -1;
      for (int i = 0; i < static_cast<int>(old_edges.size()); ++i) {
        if (segment_distance(mid, old_geom.vertices[old_edges[i].start],
                             old_geom.vertices[old_edges[i].end]) <= tol) {
          src = i;
          break;
        }
      }
      const Edge& o = old_edges[src];
      ne.tag = o.tag;
      ne.tile_label = o.tile_label;
      ne.parent_label = o.parent_label;
      ne.bc = o.bc;
      if (src == host) {
        const double tm = dot(mid - a, d) / dot(d, d);
        if (tm > t0 && tm < t1) ne.bc.kind = BcKind::dirichlet;
      }
    }
  }
  // Periodic partners are never split, so remap them by geometry.
  for (auto& pp : out.periodic_pairs) {
    auto remap = [&](int old_index) {
      const Edge& o = before.edges[old_index];
      for (int i = 0; i < static_cast<int>(out.edges.size()); ++i) {
        if (distance(out.start_point(out.edges[i]), before.vertices[o.start]) <= tol &&
            distance(out.end_point(out.edges[i]), before.vertices[o.end]) <= tol)
          return i;
      }
      throw ConflictError("periodic edge lost during split");
    };
    pp.edge_a = remap(pp.edge_a);
    pp.edge_b = remap(pp.edge_b);
    out.edges[pp.edge_a].bc.partner = pp.edge_b;
    out.edges[pp.edge_b].bc.partner = pp.edge_a;
  }
  classify_vertices(out);
  return out;
}

DomainSpec with_dirichlet(const DomainSpec& spec, const std::vector<int>& labels) {
  BcAssignment a;
  for (int l : labels) a.edges[l] = BcKind::dirichlet;
  a.others = BcKind::neumann;
  return assign_bc(spec, a);
}

// ---------------------------------------------------------------------------
// Validation and topology

void validate(const DomainSpec& spec) {
  const double tol = spec.tolerance();
  for (const auto& e : spec.edges) {
    const Point d = spec.end_point(e) - spec.start_point(e);
    if (norm(d) <= tol) throw InvalidParameter("zero-length edge");
    if (std::abs(d.x) > tol && std::abs(d.y) > tol)
      throw InvalidParameter("edge e" + std::to_string(e.label) + " is not axis-parallel");
  }
  for (int v = 0; v < static_cast<int>(spec.vertices.size()); ++v) {
    const double a = spec.interior_angle(v);
    const bool ok = std::abs(a - 0.5 * kPi) < 1e-9 || std::abs(a - kPi) < 1e-9 ||
                    std::abs(a - 1.5 * kPi) < 1e-9;
    if (!ok) throw InvalidParameter("interior angle not in {pi/2, pi, 3pi/2}");
  }
  // Non-adjacent edges must not touch.
  const int n = static_cast<int>(spec.edges.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Edge& a = spec.edges[i];
      const Edge& b = spec.edges[j];
      if (a.start == b.end || a.end == b.start || a.start == b.start || a.end == b.end) continue;
      const Point a0 = spec.start_point(a), a1 = spec.end_point(a);
      const Point b0 = spec.start_point(b), b1 = spec.end_point(b);
      const bool overlap_x = std::max(a0.x, a1.x) + tol >= std::min(b0.x, b1.x) &&
                             std::max(b0.x, b1.x) + tol >= std::min(a0.x, a1.x);
      const bool overlap_y = std::max(a0.y, a1.y) + tol >= std::min(b0.y, b1.y) &&
                             std::max(b0.y, b1.y) + tol >= std::min(a0.y, a1.y);
      if (overlap_x && overlap_y) throw InvalidParameter("polygon is not simple");
    }
  }
  for (const auto& pp : spec.periodic_pairs) {
    const Edge& a = spec.edges[pp.edge_a];
    const Edge& b = spec.edges[pp.edge_b];
    if (distance(spec.start_point(a) + pp.shift, spec.end_point(b)) > 1e3 * tol ||
        distance(spec.end_point(a) + pp.shift, spec.start_point(b)) > 1e3 * tol) {
      throw InvalidParameter("periodic pair is not related by its translation");
    }
    if (a.bc.kind != BcKind::periodic || b.bc.kind != BcKind::periodic ||
        a.bc.partner != pp.edge_b || b.bc.partner != pp.edge_a) {
      throw InvalidParameter("periodic references are not symmetric");
    }
  }
  for (int i = 0; i < n; ++i) {
    const auto& bc = spec.edges[i].bc;
    if (bc.kind == BcKind::periodic &&
        (bc.partner < 0 || bc.partner >= n || spec.edges[bc.partner].bc.partner != i)) {
      throw InvalidParameter("periodic references are not symmetric");
    }
  }
}

std::vector<int> vertex_classes(const DomainSpec& spec) {
  const int n = static_cast<int>(spec.vertices.size());
  UnionFind uf(n);
  for (const auto& pp : spec.periodic_pairs) {
    const Edge& a = spec.edges[pp.edge_a];
    const Edge& b = spec.edges[pp.edge_b];
    uf.unite(a.start, b.end);
    uf.unite(a.end, b.start);
  }
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = uf.find(i);
  return cls;
}

int euler_characteristic(const DomainSpec& spec) {
  const auto cls = vertex_classes(spec);
  std::vector<int> roots(cls);
  std::sort(roots.begin(), roots.end());
  const int vertices = static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
  const int paired = 2 * static_cast<int>(spec.periodic_pairs.size());
  const int edges = static_cast<int>(spec.edges.size()) - paired / 2;
  const int holes = static_cast<int>(spec.loops.size()) - 1;
  return vertices - edges + 1 - holes;
}

std::string kind_name(DomainKind kind) {
  switch (kind) {
    case DomainKind::rectangle: return "rect";
    case DomainKind::L: return "L";
    case DomainKind::T: return "T";
    case DomainKind::U: return "U";
    case DomainKind::O: return "O";
    case DomainKind::H: return "H";
    case DomainKind::cross: return "cross";
    case DomainKind::cross_surface: return "cross_surface";
  }
  return "?";
}

DomainKind kind_from_name(const std::string& name) {
  for (auto k : {DomainKind::rectangle, DomainKind::L, DomainKind::T, DomainKind::U, DomainKind::O,
                 DomainKind::H, DomainKind::cross, DomainKind::cross_surface}) {
    if (kind_name(k) == name) return k;
  }
  if (name == "SwissCross") return DomainKind::cross;
  throw InvalidParameter("unknown domain type '" + name + "'");
}

std::string tag_name(EdgeTag tag) {
  switch (tag) {
    case EdgeTag::long_outer: return "long-outer";
    case EdgeTag::short_outer: return "short-outer";
    case EdgeTag::inner: return "inner";
    case EdgeTag::derived: return "derived";
  }
  return "?";
}

}  // namespace hotspots
