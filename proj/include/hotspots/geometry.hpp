#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hotspots {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Distance from p to the closed segment [a, b].
double segment_distance(Point p, Point a, Point b);

/// The four lengths defining an L-shaped domain. The canonical embedding
/// has vertices (0,0), (a1+a2,0), (a1+a2,a3), (a1,a3), (a1,a3+a4), (0,a3+a4).
struct LParams {
  double a1 = 1.0;
  double a2 = 1.0;
  double a3 = 1.0;
  double a4 = 1.0;

  void validate() const;
  std::array<Point, 6> vertices() const;
  double area() const { return (a1 + a2) * a3 + a1 * a4; }
  double diameter() const { return std::hypot(a1 + a2, a3 + a4); }
  double min_length() const;
  std::array<double, 4> as_array() const { return {a1, a2, a3, a4}; }

  /// Recovers the parameters of any L-shaped hexagon (rotated, reflected,
  /// listed in either orientation, starting at any vertex).
  static LParams from_vertices(std::span<const Point> vertices);

  /// Componentwise linear interpolation (1-t)*this + t*other.
  LParams lerp(const LParams& other, double t) const;
};

enum class DomainKind { rectangle, L, T, U, O, H, cross, cross_surface };

enum class EdgeTag { long_outer, short_outer, inner, derived };

enum class BcKind { dirichlet, neumann, periodic };

struct BoundaryCondition {
  BcKind kind = BcKind::neumann;
  int partner = -1;  // edge index of the periodic partner
};

enum class Axis { x, y };

struct Edge {
  int start = 0;
  int end = 0;
  int label = 0;  // 1-based, counterclockwise along the outer loop, then holes
  EdgeTag tag = EdgeTag::derived;
  BoundaryCondition bc;
  int loop = 0;
  int tile_label = 0;    // e_k of the tiling L that this edge is the image of; 0 if none
  int parent_label = 0;  // label before any Dirichlet sub-segment split
};

/// Edge `edge_a` translated by `shift` coincides with `edge_b` (opposite orientation).
struct PeriodicPair {
  int edge_a = 0;
  int edge_b = 0;
  Point shift;
};

/// Mirror in the line {x = offset} (normal == Axis::x) or {y = offset}.
struct Reflection {
  Axis normal = Axis::x;
  double offset = 0.0;

  Point apply(Point p) const {
    return normal == Axis::x ? Point{2.0 * offset - p.x, p.y} : Point{p.x, 2.0 * offset - p.y};
  }
};

struct DomainSpec {
  DomainKind kind = DomainKind::L;
  std::vector<double> params;

  std::vector<Point> vertices;
  std::vector<std::vector<int>> loops;  // outer loop counterclockwise, holes clockwise
  std::vector<Edge> edges;

  std::vector<int> reflex_vertices;
  std::vector<int> flat_vertices;
  std::vector<PeriodicPair> periodic_pairs;
  std::vector<Reflection> reflections;
  bool central_symmetry = false;
  std::optional<std::array<int, 2>> diametric_vertices;
  std::optional<LParams> tile;  // tiling L, canonically embedded inside this domain
  std::vector<int> cone_orbit;

  double diameter() const;
  double area() const;
  double tolerance() const { return 1e-12 * diameter(); }
  std::array<double, 4> bounding_box() const;  // xmin, ymin, xmax, ymax

  Point start_point(const Edge& e) const { return vertices[e.start]; }
  Point end_point(const Edge& e) const { return vertices[e.end]; }
  double edge_length(const Edge& e) const { return distance(start_point(e), end_point(e)); }

  int edge_index(int label) const;
  const Edge& edge(int label) const { return edges[edge_index(label)]; }
  int incoming_edge(int vertex) const;
  int outgoing_edge(int vertex) const;
  double interior_angle(int vertex) const;

  bool has_dirichlet() const;
  bool is_surface() const { return !periodic_pairs.empty(); }

  /// Strict interior test (even-odd rule over all loops).
  bool contains(Point p) const;
  /// Index of the edge whose closure is within `tol` of p, or -1.
  int edge_at(Point p, double tol) const;
  /// Vertex index within `tol` of p, or -1.
  int vertex_at(Point p, double tol) const;

  /// Reflex and flat (Dirichlet/Neumann junction) vertices.
  std::vector<int> singular_vertices() const;
};

DomainSpec build_L(const LParams& params);
DomainSpec build_rectangle(double width, double height);
DomainSpec build_tiled(const LParams& params, DomainKind kind);
DomainSpec build_swiss_cross_surface(const LParams& params);

struct BcAssignment {
  std::map<int, BcKind> edges;          // by label
  std::optional<BcKind> others;         // applied to non-periodic edges not listed
  std::vector<std::pair<Point, Point>> dirichlet_segments;  // partial-edge Dirichlet pieces
};

DomainSpec assign_bc(const DomainSpec& spec, const BcAssignment& assignment);

/// Shorthand for whole-edge Dirichlet sets: every listed label becomes
/// Dirichlet, every other non-periodic edge Neumann.
DomainSpec with_dirichlet(const DomainSpec& spec, const std::vector<int>& labels);

/// Throws InvalidParameter if any structural invariant is violated.
void validate(const DomainSpec& spec);

/// Union-find classes of polygon vertices under the periodic identifications.
std::vector<int> vertex_classes(const DomainSpec& spec);

/// V - E + F of the identified cell complex (a surface when every edge is paired).
int euler_characteristic(const DomainSpec& spec);

std::string kind_name(DomainKind kind);
DomainKind kind_from_name(const std::string& name);
std::string tag_name(EdgeTag tag);

}  // namespace hotspots
