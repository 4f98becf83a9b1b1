#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "hotspots/analysis.hpp"
#include "hotspots/error.hpp"

namespace hotspots {

FieldSample::FieldSample(std::shared_ptr<const TensorMesh> mesh, std::vector<double> class_values)
    : mesh_(std::move(mesh)), values_(std::move(class_values)) {
  if (static_cast<int>(values_.size()) != mesh_->ndof)
    throw InvalidParameter("field value count does not match the mesh DOF classes");
}

FieldSample FieldSample::from_dofs(std::shared_ptr<const TensorMesh> mesh, const DofMap& dofs,
                                   const Eigen::VectorXd& v) {
  std::vector<double> vals(mesh->ndof, 0.0);
  for (int d = 0; d < dofs.free_count(); ++d) vals[dofs.dof_to_class[d]] = v[d];
  return FieldSample(std::move(mesh), std::move(vals));
}

FieldSample FieldSample::from_function(std::shared_ptr<const TensorMesh> mesh,
                                       const std::function<double(Point)>& f) {
  std::vector<double> vals(mesh->ndof, 0.0);
  std::vector<bool> set(mesh->ndof, false);
  for (int raw = 0; raw < mesh->raw_nodes(); ++raw) {
    const int c = mesh->node_class[raw];
    if (c < 0 || set[c]) continue;
    vals[c] = f(mesh->node(raw));
    set[c] = true;
  }
  return FieldSample(std::move(mesh), std::move(vals));
}

double FieldSample::cell_value(int i, int j, double s, double t) const {
  const auto& m = *mesh_;
  const double v00 = node_value(m.node_index(i, j)), v10 = node_value(m.node_index(i + 1, j));
  const double v01 = node_value(m.node_index(i, j + 1)), v11 = node_value(m.node_index(i + 1, j + 1));
  return v00 * (1 - s) * (1 - t) + v10 * s * (1 - t) + v01 * (1 - s) * t + v11 * s * t;
}

Point FieldSample::cell_gradient(int i, int j, double s, double t) const {
  const auto& m = *mesh_;
  const double hx = m.x_lines[i + 1] - m.x_lines[i], hy = m.y_lines[j + 1] - m.y_lines[j];
  const double v00 = node_value(m.node_index(i, j)), v10 = node_value(m.node_index(i + 1, j));
  const double v01 = node_value(m.node_index(i, j + 1)), v11 = node_value(m.node_index(i + 1, j + 1));
  return {((v10 - v00) * (1 - t) + (v11 - v01) * t) / hx,
          ((v01 - v00) * (1 - s) + (v11 - v10) * s) / hy};
}

std::pair<int, int> FieldSample::cell_of(Point p, double& s, double& t) const {
  const auto [i, j] = mesh_->locate(p);
  if (i < 0) return {-1, -1};
  const auto& m = *mesh_;
  s = std::clamp((p.x - m.x_lines[i]) / (m.x_lines[i + 1] - m.x_lines[i]), 0.0, 1.0);
  t = std::clamp((p.y - m.y_lines[j]) / (m.y_lines[j + 1] - m.y_lines[j]), 0.0, 1.0);
  return {i, j};
}

double FieldSample::value(Point p) const {
  double s = 0, t = 0;
  const auto [i, j] = cell_of(p, s, t);
  if (i < 0) return std::numeric_limits<double>::quiet_NaN();
  return cell_value(i, j, s, t);
}

Point FieldSample::gradient(Point p) const {
  double s = 0, t = 0;
  const auto [i, j] = cell_of(p, s, t);
  if (i < 0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan};
  }
  return cell_gradient(i, j, s, t);
}

double FieldSample::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

FieldSample FieldSample::scaled(double factor) const {
  std::vector<double> v = values_;
  for (double& x : v) x *= factor;
  return FieldSample(mesh_, std::move(v));
}

std::vector<Point> FieldSample::recovered_gradient(const DomainSpec& spec) const {
  const auto& m = *mesh_;
  std::vector<Point> g(m.ndof, Point{0, 0});
  std::vector<double> w(m.ndof, 0.0);
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i) {
      if (!m.active(i, j)) continue;
      const double area = (m.x_lines[i + 1] - m.x_lines[i]) * (m.y_lines[j + 1] - m.y_lines[j]);
      for (int c = 0; c < 4; ++c) {
        const int di = c & 1, dj = c >> 1;
        const int cls = m.node_class[m.node_index(i + di, j + dj)];
        g[cls] = g[cls] + area * cell_gradient(i, j, di, dj);
        w[cls] += area;
      }
    }
  for (int c = 0; c < m.ndof; ++c)
    if (w[c] > 0) g[c] = (1.0 / w[c]) * g[c];

  const double tol = 1e-9 * spec.diameter();
  for (const auto& e : spec.edges) {
    if (e.bc.kind == BcKind::periodic) continue;
    const Point a = spec.start_point(e), b = spec.end_point(e);
    const Point tau = (1.0 / distance(a, b)) * (b - a);
    const double x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
    const double y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
    for (int jj = 0; jj <= m.ny(); ++jj) {
      if (m.y_lines[jj] < y0 - tol || m.y_lines[jj] > y1 + tol) continue;
      for (int ii = 0; ii <= m.nx(); ++ii) {
        if (m.x_lines[ii] < x0 - tol || m.x_lines[ii] > x1 + tol) continue;
        const int cls = m.node_class[m.node_index(ii, jj)];
        if (cls < 0) continue;
        const double gt = dot(g[cls], tau);
        g[cls] = e.bc.kind == BcKind::neumann ? gt * tau : g[cls] - gt * tau;
      }
    }
  }
  return g;
}

void write_field_dump(std::ostream& os, const FieldSample& u, const DomainSpec& spec) {
  const auto g = u.recovered_gradient(spec);
  const auto& m = u.mesh();
  os.precision(12);
  os << "x,y,u,ux,uy\n";
  for (int raw = 0; raw < m.raw_nodes(); ++raw) {
    const int c = m.node_class[raw];
    if (c < 0) continue;
    const Point p = m.node(raw);
    os << p.x << "," << p.y << "," << u.values()[c] << "," << g[c].x << "," << g[c].y << "\n";
  }
}

SignNormalization normalize_sign(const FieldSample& u, const DomainSpec& spec, SignMode mode) {
  const double umax = u.max_abs();
  if (!(umax > 0.0)) throw InvalidParameter("cannot normalize the sign of a zero field");
  double anchor = 0.0;
  if (mode == SignMode::second_neumann && spec.diametric_vertices) {
    anchor = u.value(spec.vertices[(*spec.diametric_vertices)[0]]);
  } else {
    const auto& v = u.values();
    for (double x : v) {
      if (std::abs(x) >= umax * (1.0 - 1e-12)) {
        anchor = x;
        break;
      }
    }
  }
  SignNormalization out;
  out.ambiguous = !(std::abs(anchor) >= 1e-9 * umax);
  const double s = anchor < 0.0 ? -1.0 : 1.0;
  out.field = u.scaled(s);
  out.anchor_value = s * anchor;
  return out;
}

double characteristic_length(const DomainSpec& spec) {
  if (spec.tile) return spec.tile->min_length();
  double m = std::numeric_limits<double>::infinity();
  for (const auto& e : spec.edges) m = std::min(m, spec.edge_length(e));
  return m;
}

double default_exclusion_radius(const DomainSpec& spec, const TensorMesh& mesh, int vertex) {
  return std::max(0.05 * characteristic_length(spec),
                  4.0 * mesh.local_cell_size(spec.vertices[vertex]));
}

MonotonicityResult monotonicity(const FieldSample& u, const DomainSpec& spec, Axis direction,
                                const MonotonicityOptions& opts) {
  const auto& m = u.mesh();
  std::vector<std::pair<Point, double>> balls;
  for (int v : spec.singular_vertices())
    balls.push_back({spec.vertices[v], opts.rho ? *opts.rho : default_exclusion_radius(spec, m, v)});
  const double scale = u.max_abs() / spec.diameter();
  const double noise = opts.noise_rel * scale;

  MonotonicityResult r;
  int pos = 0, neg = 0;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int j = 0; j < m.ny(); ++j)
    for (int i = 0; i < m.nx(); ++i) {
      if (!m.active(i, j)) continue;
      const Point c{0.5 * (m.x_lines[i] + m.x_lines[i + 1]), 0.5 * (m.y_lines[j] + m.y_lines[j + 1])};
      bool excluded = false;
      for (const auto& [p, rho] : balls) excluded = excluded || distance(c, p) < rho;
      if (excluded) continue;
      const Point g = u.cell_gradient(i, j, 0.5, 0.5);
      const double d = direction == Axis::x ? g.x : g.y;
      ++r.samples;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
      if (d > noise) ++pos;
      else if (d < -noise) ++neg;
      else ++r.unresolved;
    }
  r.min_value = lo / scale;
  r.max_value = hi / scale;
  if (neg == 0 && pos > 0) {
    r.sign = MonotoneSign::strictly_positive;
    r.margin = lo / scale;
  } else if (pos == 0 && neg > 0) {
    r.sign = MonotoneSign::strictly_negative;
    r.margin = -hi / scale;
  } else {
    r.sign = MonotoneSign::mixed;
    r.margin = 0.0;
  }
  r.violations = std::min(pos, neg);
  return r;
}

}  // namespace hotspots
