#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "hotspots/analysis.hpp"
#include "hotspots/eigensolve.hpp"

using namespace hotspots;

namespace {

constexpr double pi = std::numbers::pi;

std::shared_ptr<const TensorMesh> mesh_ptr(const DomainSpec& d, double h, int layers = 6) {
  GradingOptions g;
  g.layers = layers;
  return std::make_shared<const TensorMesh>(build_mesh(d, h, g));
}

FieldSample eigenfunction(const DomainSpec& d, std::shared_ptr<const TensorMesh> m, int index,
                          SignMode mode = SignMode::second_neumann) {
  const Assembled a = assemble(*m, d);
  const Spectrum s = smallest_eigenpairs(a.K, a.M, index + 1);
  return normalize_sign(FieldSample::from_dofs(m, a.dofs, s.pairs[index].vector), d, mode).field;
}

// angle at the reflex vertex (1,1) of the unit L, measured from the edge towards (1,2)
double reflex_theta(Point p) {
  double t = std::atan2(p.y - 1.0, p.x - 1.0) - pi / 2;
  while (t < 0) t += 2 * pi;
  return t;
}

int count_type(const CriticalPointReport& r, Locus l, CriticalType t) {
  int n = 0;
  for (const auto& c : r.records) n += c.locus == l && c.type == t;
  return n;
}

struct UnitL {
  DomainSpec L = build_L({1, 1, 1, 1});
  std::shared_ptr<const TensorMesh> mesh = std::make_shared<const TensorMesh>(refine(build_mesh(L, 0.05)));
  FieldSample u = eigenfunction(L, mesh, 1);
};

const UnitL& unit_l() {
  static const UnitL data;
  return data;
}

}  // namespace

TEST_CASE("bilinear fields reproduce bilinear functions") {
  const DomainSpec r = build_rectangle(2, 1);
  const auto m = mesh_ptr(r, 0.25, 0);
  const FieldSample f = FieldSample::from_function(m, [](Point p) { return 1 + 2 * p.x + 3 * p.y + 4 * p.x * p.y; });
  const Point q{0.33, 0.77};
  CHECK(f.value(q) == doctest::Approx(1 + 2 * q.x + 3 * q.y + 4 * q.x * q.y));
  CHECK(f.gradient(q).x == doctest::Approx(2 + 4 * q.y));
  CHECK(f.gradient(q).y == doctest::Approx(3 + 4 * q.x));
  CHECK(std::isnan(f.value({3, 3})));
  CHECK(f.scaled(-2).value(q) == doctest::Approx(-2 * f.value(q)));
}

TEST_CASE("recovered gradient matches finite differences of a smooth field") {
  const DomainSpec r = build_rectangle(2, 1);
  const auto m = mesh_ptr(r, 0.02, 0);
  const FieldSample f = FieldSample::from_function(m, [](Point p) { return std::sin(p.x) * std::cosh(p.y); });
  const auto g = f.recovered_gradient(r);
  const int raw = m->node_index(m->nx() / 3, m->ny() / 2);
  const Point p = m->node(raw);
  const double e = 1e-6;
  const double fx = (std::sin(p.x + e) - std::sin(p.x - e)) / (2 * e) * std::cosh(p.y);
  const Point gr = g[m->node_class[raw]];
  CHECK(gr.x == doctest::Approx(fx).epsilon(1e-3));
  CHECK(gr.y == doctest::Approx(std::sin(p.x) * std::sinh(p.y)).epsilon(1e-2));
}

TEST_CASE("sign normalization") {
  const auto& d = unit_l();
  const SignNormalization flipped = normalize_sign(d.u.scaled(-1), d.L, SignMode::second_neumann);
  CHECK_FALSE(flipped.ambiguous);
  CHECK(flipped.field.value({2, 0}) > 0);
  CHECK(flipped.anchor_value > 0);
  const DomainSpec D = with_dirichlet(d.L, {1});
  const FieldSample first = eigenfunction(D, d.mesh, 0, SignMode::first_mixed);
  double lo = INFINITY;
  for (double v : first.values()) lo = std::min(lo, v);
  CHECK(lo >= -1e-12);
}

TEST_CASE("critical records of cos(pi x / 2) on a 2x1 rectangle") {
  const DomainSpec r = build_rectangle(2, 1);
  const auto m = mesh_ptr(r, 0.05);
  const FieldSample f = FieldSample::from_function(m, [](Point p) { return std::cos(pi * p.x / 2); });
  const CriticalPointReport rep = critical_points(f, r);
  CHECK(count_type(rep, Locus::vertex, CriticalType::maximum) == 2);
  CHECK(count_type(rep, Locus::vertex, CriticalType::minimum) == 2);
  CHECK(rep.interior().empty());
  CHECK(rep.any_degenerate());
  for (const auto& c : rep.non_vertex()) {
    CHECK(c.locus == Locus::edge);
    CHECK(c.degenerate);
    CHECK((c.edge_label == 2 || c.edge_label == 4));
  }
  const NodalSet ns = nodal_set(f, r);
  REQUIRE(ns.polylines.size() == 1);
  CHECK(ns.nodal_domains == 2);
  const auto& pl = ns.polylines[0];
  for (const Point& q : pl.points) CHECK(q.x == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(pl.front.edge_label + pl.back.edge_label == 4);
}

TEST_CASE("interior saddle of cos(pi x / 2) cos(pi y)") {
  const DomainSpec r = build_rectangle(2, 1);
  const auto m = mesh_ptr(r, 0.05);
  const FieldSample f =
      FieldSample::from_function(m, [](Point p) { return std::cos(pi * p.x / 2) * std::cos(pi * p.y); });
  const CriticalPointReport rep = critical_points(f, r);
  const auto in = rep.interior();
  REQUIRE(in.size() == 1);
  CHECK(in[0].type == CriticalType::saddle);
  CHECK(in[0].arc_count == 4);
  CHECK(in[0].location.x == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(in[0].location.y == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(rep.vertex_records().size() == 4);
}

TEST_CASE("second Neumann eigenfunction of the unit L") {
  const auto& d = unit_l();
  const CriticalPointReport rep = critical_points(d.u, d.L);
  CHECK(rep.non_vertex().empty());
  CHECK_FALSE(rep.any_degenerate());
  CHECK(count_type(rep, Locus::vertex, CriticalType::maximum) == 1);
  CHECK(count_type(rep, Locus::vertex, CriticalType::minimum) == 1);
  for (const auto& c : rep.records) {
    if (c.type == CriticalType::maximum) CHECK(c.vertex == 1);
    if (c.type == CriticalType::minimum) CHECK(c.vertex == 5);
  }
  const MonotonicityResult mx = monotonicity(d.u, d.L, Axis::x);
  const MonotonicityResult my = monotonicity(d.u, d.L, Axis::y);
  CHECK(mx.sign == MonotoneSign::strictly_positive);
  CHECK(my.sign == MonotoneSign::strictly_negative);
  CHECK(mx.violations == 0);
  CHECK(mx.unresolved == 0);

  // odd under the diagonal reflection
  const TensorMesh& m = *d.mesh;
  double dev = 0.0;
  for (int j = 0; j <= m.ny(); ++j)
    for (int i = 0; i <= m.nx(); ++i) {
      const int a = m.node_index(i, j), b = m.node_index(j, i);
      if (m.node_class[a] < 0) continue;
      dev = std::max(dev, std::abs(d.u.node_value(a) + d.u.node_value(b)));
    }
  CHECK(dev < 1e-8 * d.u.max_abs());

  const NodalSet ns = nodal_set(d.u, d.L);
  REQUIRE(ns.polylines.size() == 1);
  CHECK(ns.nodal_domains == 2);
  const auto& pl = ns.polylines[0];
  CHECK(((pl.front.vertex == 0 && pl.back.vertex == 3) || (pl.front.vertex == 3 && pl.back.vertex == 0)));
  for (const Point& q : pl.points) CHECK(std::abs(q.x - q.y) < 1e-6);
}

TEST_CASE("corner expansion at the reflex vertex of the unit L") {
  const auto& d = unit_l();
  const int rv = d.L.reflex_vertices.at(0);
  const CornerFit cf = corner_fit(d.u, d.L, rv, CornerFamily::neumann);
  REQUIRE(cf.coefficients.size() == 4);
  CHECK(std::abs(cf.coefficients[0]) < 1e-6);
  CHECK(std::abs(cf.coefficients[1]) > 10 * cf.residual);
  CHECK(cf.coefficients[1] == doctest::Approx(-1.1345).epsilon(1e-3));
  CHECK(corner_exponent(CornerFamily::neumann, 1, 1.5 * pi) == doctest::Approx(2.0 / 3.0));
  CHECK(corner_exponent(CornerFamily::mixed, 0, 1.5 * pi) == doctest::Approx(1.0 / 3.0));
  CHECK(corner_exponent(CornerFamily::flat, 0, pi) == doctest::Approx(0.5));
}

TEST_CASE("corner fits recover synthetic singular terms") {
  const DomainSpec L = build_L({1, 1, 1, 1});
  const int rv = L.reflex_vertices.at(0);
  const auto m = mesh_ptr(L, 0.025, 0);
  const Point v = L.vertices[rv];
  const auto radial = [v](Point p) { return distance(p, v); };

  const FieldSample s1 = FieldSample::from_function(
      m, [&](Point p) { return std::pow(radial(p), 2.0 / 3.0) * std::cos(2 * reflex_theta(p) / 3); });
  const CornerFit f1 = corner_fit(s1, L, rv, CornerFamily::neumann);
  CHECK(f1.coefficients[1] == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(std::abs(f1.coefficients[0]) < 1e-4);
  CHECK(std::abs(f1.coefficients[2]) < 1e-3);

  const FieldSample s2 = FieldSample::from_function(
      m, [&](Point p) { return std::pow(radial(p), 4.0 / 3.0) * std::cos(4 * reflex_theta(p) / 3); });
  const CornerFit f2 = corner_fit(s2, L, rv, CornerFamily::neumann);
  CHECK(f2.coefficients[2] == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(std::abs(f2.coefficients[1]) < 1e-3);

  const DomainSpec D = with_dirichlet(L, {4});
  const FieldSample s3 = FieldSample::from_function(
      m, [&](Point p) { return std::pow(radial(p), 1.0 / 3.0) * std::sin(reflex_theta(p) / 3); });
  const CornerFit f3 = corner_fit(s3, D, rv, CornerFamily::mixed);
  CHECK(f3.coefficients[0] == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("constant term of the corner expansion equals the vertex value") {
  const DomainSpec L = build_L({1, 2, 3, 4});
  const auto m = std::make_shared<const TensorMesh>(refine(build_mesh(L, 0.1)));
  const FieldSample u = eigenfunction(L, m, 1);
  const int rv = L.reflex_vertices.at(0);
  const CornerFit cf = corner_fit(u, L, rv, CornerFamily::neumann);
  const double uv = u.value(L.vertices[rv]);
  CHECK(std::abs(cf.coefficients[0] - uv) <= 5e-3 * std::abs(uv));

  const NodalSet ns = nodal_set(u, L);
  REQUIRE_FALSE(ns.polylines.empty());
  bool long_outer = false;
  for (const auto& pl : ns.polylines)
    for (const NodalEndpoint& e : {pl.front, pl.back})
      if (e.edge_label > 0 && L.edge(e.edge_label).tag == EdgeTag::long_outer) long_outer = true;
  CHECK(long_outer);
}

TEST_CASE("first mixed eigenfunction has no interior nodal line") {
  const auto& d = unit_l();
  const DomainSpec D = with_dirichlet(d.L, {1});
  const FieldSample u = eigenfunction(D, d.mesh, 0, SignMode::first_mixed);
  const NodalSet ns = nodal_set(u, D);
  CHECK(ns.polylines.empty());
  CHECK(ns.nodal_domains == 1);
}

TEST_CASE("cone census on the Swiss-cross surface") {
  const DomainSpec S = build_swiss_cross_surface({1, 1, 1, 1});
  const auto m = std::make_shared<const TensorMesh>(refine(build_mesh(S, 0.05)));
  const FieldSample flat = FieldSample::from_function(m, [](Point) { return 1.0; });
  CHECK(cone_census(flat, S, 0.1).degenerate);
  const FieldSample u = eigenfunction(S, m, 1);
  const ConeCensus cc = cone_census(u, S, 0.1);
  CHECK(cc.total_angle == doctest::Approx(6 * pi));
  CHECK(cc.arc_count != 2);
  CHECK_FALSE(cc.degenerate);
  const Point p = cone_chart_point(S, 0.0, 0.1);
  CHECK(distance(p, S.vertices[S.cone_orbit[0]]) == doctest::Approx(0.1));
}

TEST_CASE("monotonicity and critical points are consistent on a tilted field") {
  const DomainSpec r = build_rectangle(1, 1);
  const auto m = mesh_ptr(r, 0.05, 0);
  const FieldSample f = FieldSample::from_function(m, [](Point p) { return p.x + 0.3 * p.y * p.y; });
  const MonotonicityResult mx = monotonicity(f, r, Axis::x);
  CHECK(mx.sign == MonotoneSign::strictly_positive);
  const CriticalPointReport rep = critical_points(f, r);
  CHECK(rep.interior().empty());
}

TEST_CASE("dumps") {
  const DomainSpec r = build_rectangle(1, 1);
  const auto m = mesh_ptr(r, 0.5, 0);
  const FieldSample f = FieldSample::from_function(m, [](Point p) { return p.x - 0.5; });
  std::ostringstream a, b;
  write_field_dump(a, f, r);
  write_nodal_dump(b, nodal_set(f, r));
  CHECK(a.str().find("x,y,u,ux,uy") != std::string::npos);
  CHECK(b.str().find("polyline,x,y") != std::string::npos);
}
