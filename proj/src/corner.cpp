#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "hotspots/analysis.hpp"
#include "hotspots/error.hpp"

namespace hotspots {

namespace {

constexpr double kPi = std::numbers::pi;

int first_index(CornerFamily f) { return f == CornerFamily::dirichlet ? 1 : 0; }

double basis(CornerFamily f, double nu, double theta) {
  return f == CornerFamily::neumann ? std::cos(nu * theta) : std::sin(nu * theta);
}

}  // namespace

std::string family_name(CornerFamily f) {
  switch (f) {
    case CornerFamily::neumann: return "neumann";
    case CornerFamily::dirichlet: return "dirichlet";
    case CornerFamily::mixed: return "mixed";
    case CornerFamily::flat: return "flat";
  }
  return "?";
}

double corner_exponent(CornerFamily family, int n, double omega) {
  switch (family) {
    case CornerFamily::neumann:
    case CornerFamily::dirichlet: return n * kPi / omega;
    case CornerFamily::mixed: return (n + 0.5) * kPi / omega;
    case CornerFamily::flat: return n + 0.5;
  }
  return 0.0;
}

CornerFit corner_fit(const FieldSample& u, const DomainSpec& spec, int vertex, CornerFamily family,
                     const CornerFitOptions& opts) {
  if (vertex < 0 || vertex >= static_cast<int>(spec.vertices.size()))
    throw InvalidParameter("corner vertex out of range");
  if (opts.terms < 1 || opts.samples < opts.terms) throw InvalidParameter("corner fit needs samples >= terms >= 1");
  const Point v = spec.vertices[vertex];
  const Edge& ein = spec.edges[spec.incoming_edge(vertex)];
  const Edge& eout = spec.edges[spec.outgoing_edge(vertex)];
  const double omega = family == CornerFamily::flat ? kPi : spec.interior_angle(vertex);
  const Point dout = spec.end_point(eout) - v;
  const double a0 = std::atan2(dout.y, dout.x);
  // Mixed and flat bases vanish on the Dirichlet side: measure theta from it.
  const bool flip = (family == CornerFamily::mixed || family == CornerFamily::flat) &&
                    ein.bc.kind == BcKind::dirichlet && eout.bc.kind != BcKind::dirichlet;

  CornerFit fit;
  fit.vertex = vertex;
  fit.family = family;
  fit.radii = opts.radii;
  if (fit.radii.empty()) {
    const double h = u.mesh().local_cell_size(v);
    double reach = std::numeric_limits<double>::infinity();
    for (const auto& e : spec.edges) {
      if (e.start == vertex || e.end == vertex) {
        reach = std::min(reach, 0.5 * spec.edge_length(e));
        continue;
      }
      reach = std::min(reach, segment_distance(v, spec.start_point(e), spec.end_point(e)));
    }
    double lo = 4.0 * h, hi = 12.0 * h;
    if (hi > 0.9 * reach) {
      lo *= 0.9 * reach / hi;
      hi = 0.9 * reach;
    }
    for (int k = 0; k < 4; ++k) fit.radii.push_back(lo * std::pow(hi / lo, k / 3.0));
  }

  const int n0 = first_index(family);
  const int T = opts.terms;
  const int S = opts.samples;
  Eigen::MatrixXd A(S, T);
  std::vector<double> thetas(S);
  for (int k = 0; k < S; ++k) {
    thetas[k] = omega * (k + 0.5) / S;
    const double th = flip ? omega - thetas[k] : thetas[k];
    for (int t = 0; t < T; ++t) A(k, t) = basis(family, corner_exponent(family, n0 + t, omega), th);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  fit.condition = sv[sv.size() - 1] > 0 ? sv[0] / sv[sv.size() - 1] : std::numeric_limits<double>::infinity();
  if (!(fit.condition <= 1e8)) throw FitError("corner fit design matrix is ill-conditioned");

  for (double r : fit.radii) {
    Eigen::VectorXd b(S);
    for (int k = 0; k < S; ++k) {
      const double a = a0 + thetas[k];
      b[k] = u.value(v + r * Point{std::cos(a), std::sin(a)});
      if (std::isnan(b[k])) throw FitError("corner fit radius leaves the domain");
    }
    const Eigen::VectorXd x = svd.solve(b);
    const double bn = b.norm();
    fit.residual = std::max(fit.residual, bn > 0 ? (A * x - b).norm() / bn : 0.0);
    std::vector<double> c(n0 + T, 0.0);
    for (int t = 0; t < T; ++t) c[n0 + t] = x[t] / std::pow(r, corner_exponent(family, n0 + t, omega));
    fit.per_radius.push_back(std::move(c));
  }

  // Linear fit in r^2, evaluated at r = 0.
  const int R = static_cast<int>(fit.radii.size());
  fit.coefficients.assign(n0 + T, 0.0);
  fit.bias_order_r2 = R >= 2;
  for (int n = n0; n < n0 + T; ++n) {
    if (R < 2) {
      fit.coefficients[n] = fit.per_radius[0][n];
      continue;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int k = 0; k < R; ++k) {
      const double x = fit.radii[k] * fit.radii[k], y = fit.per_radius[k][n];
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double den = R * sxx - sx * sx;
    const double slope = den != 0.0 ? (R * sxy - sx * sy) / den : 0.0;
    fit.coefficients[n] = (sy - slope * sx) / R;
  }
  return fit;
}

}  // namespace hotspots
