#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hotspots/assembly.hpp"
#include "hotspots/geometry.hpp"
#include "hotspots/mesh.hpp"

namespace hotspots {

// ---------------------------------------------------------------------------
// Fields

/// Piecewise bilinear function on a tensor mesh, one value per DOF class.
class FieldSample {
 public:
  FieldSample() = default;
  FieldSample(std::shared_ptr<const TensorMesh> mesh, std::vector<double> class_values);

  /// Free-DOF vector expanded to classes; eliminated Dirichlet classes get 0.
  static FieldSample from_dofs(std::shared_ptr<const TensorMesh> mesh, const DofMap& dofs,
                               const Eigen::VectorXd& v);
  /// Nodal interpolant of f (the first raw node of each class supplies the value).
  static FieldSample from_function(std::shared_ptr<const TensorMesh> mesh,
                                   const std::function<double(Point)>& f);

  const TensorMesh& mesh() const { return *mesh_; }
  std::shared_ptr<const TensorMesh> mesh_ptr() const { return mesh_; }
  const std::vector<double>& values() const { return values_; }
  double node_value(int raw) const { return values_[mesh_->node_class[raw]]; }

  /// Bilinear value/gradient inside cell (i, j) at local coordinates (s, t) in [0,1]^2.
  double cell_value(int i, int j, double s, double t) const;
  Point cell_gradient(int i, int j, double s, double t) const;

  /// NaN / {NaN, NaN} when p is in no active cell.
  double value(Point p) const;
  Point gradient(Point p) const;

  double max_abs() const;
  FieldSample scaled(double factor) const;

  /// Area-weighted nodal average of cell gradients, one vector per class,
  /// with the normal component removed on Neumann edges and the tangential
  /// component removed on Dirichlet edges.
  std::vector<Point> recovered_gradient(const DomainSpec& spec) const;

 private:
  std::pair<int, int> cell_of(Point p, double& s, double& t) const;

  std::shared_ptr<const TensorMesh> mesh_;
  std::vector<double> values_;
};

/// Rows "x,y,u,ux,uy" at every used mesh node (recovered gradient).
void write_field_dump(std::ostream& os, const FieldSample& u, const DomainSpec& spec);

enum class SignMode { second_neumann, first_mixed };

struct SignNormalization {
  FieldSample field;
  bool ambiguous = false;
  double anchor_value = 0.0;  // after normalization
};

/// second_neumann: positive at the diametric vertex (a1+a2, 0) of an L (at the
/// largest-magnitude node on other domains); first_mixed: nonnegative.
SignNormalization normalize_sign(const FieldSample& u, const DomainSpec& spec, SignMode mode);

// ---------------------------------------------------------------------------
// Monotonicity

/// Length scale used by default radii: min(a_i) for L-tiled domains, else the shortest edge.
double characteristic_length(const DomainSpec& spec);

/// max(0.05 * characteristic length, 4 * local cell size at the vertex).
double default_exclusion_radius(const DomainSpec& spec, const TensorMesh& mesh, int vertex);

enum class MonotoneSign { strictly_positive, strictly_negative, mixed };

struct MonotonicityOptions {
  std::optional<double> rho;   // one radius for every singular vertex
  double noise_rel = 1e-6;     // |du| below noise_rel * |u|_inf / diam is unresolved
};

struct MonotonicityResult {
  MonotoneSign sign = MonotoneSign::mixed;
  double margin = 0.0;  // min |du| over samples, in units of |u|_inf / diam
  double min_value = 0.0;
  double max_value = 0.0;
  int samples = 0;
  int unresolved = 0;
  int violations = 0;  // resolved samples of the minority sign
};

MonotonicityResult monotonicity(const FieldSample& u, const DomainSpec& spec, Axis direction,
                                const MonotonicityOptions& opts = {});

// ---------------------------------------------------------------------------
// Critical points

enum class Locus { interior, edge, vertex };
enum class CriticalType { maximum, minimum, saddle, degenerate };

struct CriticalRecord {
  Point location;
  Locus locus = Locus::interior;
  CriticalType type = CriticalType::degenerate;
  int arc_count = 0;    // sign changes of u - u(p) on the classification ring
  int edge_label = 0;   // edge locus: label of the containing edge
  int vertex = -1;      // vertex locus: polygon vertex (class representative on surfaces)
  bool glued = false;   // on an identified edge of a surface
  bool degenerate = false;
  int cells = 1;        // cells (or edge samples) merged into this record
};

struct CriticalOptions {
  std::optional<double> rho;
  double grad_tol_rel = 1e-4;
  double noise_rel = 1e-6;
  int ring_samples = 96;  // per 2*pi of ring angle
};

struct CriticalPointReport {
  std::vector<CriticalRecord> records;
  int discarded_regular = 0;
  double rho = 0.0;

  std::vector<CriticalRecord> non_vertex() const;
  std::vector<CriticalRecord> vertex_records() const;
  std::vector<CriticalRecord> interior() const;
  bool any_degenerate() const;
};

CriticalPointReport critical_points(const FieldSample& u, const DomainSpec& spec,
                                    const CriticalOptions& opts = {});

struct RingCensus {
  int sign_changes = 0;
  bool closed = true;
  int positive = 0;
  int negative = 0;
  int near_zero = 0;
  double total_angle = 0.0;
};

/// Samples u - u(p) on a ring of radius r around p. Interior points get a
/// full circle, edge points a half circle, vertices their wedge; on surfaces
/// the ring continues through the identifications (a 6*pi circle at the cone).
RingCensus ring_census(const FieldSample& u, const DomainSpec& spec, Point p, double r,
                       int samples_per_2pi = 96, double zero_tol = 0.0);

std::string locus_name(Locus l);
std::string critical_type_name(CriticalType t);

// ---------------------------------------------------------------------------
// Nodal set

struct NodalEndpoint {
  Point location;
  int edge_label = 0;              // containing edge, 0 if interior
  int vertex = -1;                 // vertex within about one cell, else -1
  std::vector<int> closure_edges;  // labels of edges whose closure is within about one cell
};

struct NodalPolyline {
  std::vector<Point> points;
  bool closed = false;
  NodalEndpoint front;
  NodalEndpoint back;
};

struct NodalSet {
  std::vector<NodalPolyline> polylines;
  int nodal_domains = 0;
  bool degenerate = false;
};

NodalSet nodal_set(const FieldSample& u, const DomainSpec& spec);

/// Rows "polyline,x,y".
void write_nodal_dump(std::ostream& os, const NodalSet& set);

// ---------------------------------------------------------------------------
// Corner expansions

enum class CornerFamily { neumann, dirichlet, mixed, flat };

struct CornerFit {
  int vertex = -1;
  CornerFamily family = CornerFamily::neumann;
  std::vector<double> radii;
  std::vector<double> coefficients;  // extrapolated to r = 0; index n of the family basis
  std::vector<std::vector<double>> per_radius;  // coefficients before extrapolation
  double residual = 0.0;   // max over radii of ||fit - u|| / ||u|| on the arc
  double condition = 0.0;  // worst design-matrix condition number
  bool bias_order_r2 = true;
};

struct CornerFitOptions {
  std::vector<double> radii;  // empty: 4 radii geometric in [4 h_loc, 12 h_loc]
  int terms = 4;
  int samples = 64;
};

CornerFit corner_fit(const FieldSample& u, const DomainSpec& spec, int vertex, CornerFamily family,
                     const CornerFitOptions& opts = {});

/// Radial exponent of basis term n for an interior angle omega.
double corner_exponent(CornerFamily family, int n, double omega);
std::string family_name(CornerFamily f);

// ---------------------------------------------------------------------------
// Cone point

struct ConeCensus {
  int arc_count = 0;
  bool is_critical = false;
  bool degenerate = false;
  double total_angle = 0.0;
  int samples = 0;
};

ConeCensus cone_census(const FieldSample& u, const DomainSpec& surface, double radius,
                       int samples_per_2pi = 96);

/// Point at intrinsic angle phi (from the outgoing edge of the first orbit
/// vertex) and distance r from the cone point, in polygon coordinates.
Point cone_chart_point(const DomainSpec& surface, double phi, double r);

}  // namespace hotspots
