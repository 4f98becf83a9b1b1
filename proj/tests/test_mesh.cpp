#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "hotspots/error.hpp"
#include "hotspots/mesh.hpp"

using namespace hotspots;

namespace {

GradingOptions no_grading() {
  GradingOptions g;
  g.layers = 0;
  return g;
}

bool has_line(const std::vector<double>& lines, double v) {
  return std::any_of(lines.begin(), lines.end(), [&](double x) { return std::abs(x - v) < 1e-12; });
}

}  // namespace

TEST_CASE("unit L at h = 0.5 without grading") {
  const TensorMesh m = build_mesh(build_L({1, 1, 1, 1}), 0.5, no_grading());
  for (double v : {0.0, 1.0, 2.0}) {
    CHECK(has_line(m.x_lines, v));
    CHECK(has_line(m.y_lines, v));
  }
  CHECK(m.active_count() == 12);
  CHECK(m.max_cell_size() == doctest::Approx(0.5));
  CHECK(m.active_area() == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("2x1 rectangle at h = 0.25") {
  const TensorMesh m = build_mesh(build_rectangle(2, 1), 0.25, no_grading());
  CHECK(m.nx() == 8);
  CHECK(m.ny() == 4);
  CHECK(m.active_count() == 32);
  CHECK(m.raw_nodes() == 45);
  CHECK(m.ndof == 45);
  const TensorMesh r = refine(m);
  CHECK(r.nx() == 16);
  CHECK(r.ny() == 8);
  CHECK(r.active_area() == m.active_area());
}

TEST_CASE("grading adds geometric layers at the reflex vertex") {
  GradingOptions g;  // ratio 0.5, 6 layers
  const TensorMesh m = build_mesh(build_L({1, 1, 1, 1}), 0.25, g);
  for (int l = 1; l <= 6; ++l) {
    const double off = 0.25 * std::pow(0.5, l);
    CHECK(has_line(m.x_lines, 1.0 - off));
    CHECK(has_line(m.x_lines, 1.0 + off));
    CHECK(has_line(m.y_lines, 1.0 - off));
  }
  CHECK(m.max_cell_size() <= 0.25 + 1e-12);
  CHECK(m.active_area() == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("active area matches every catalog domain") {
  const LParams p{1, 2, 0.5, 1.5};
  for (auto kind : {DomainKind::T, DomainKind::U, DomainKind::O, DomainKind::H, DomainKind::cross}) {
    const DomainSpec d = build_tiled(p, kind);
    const TensorMesh m = build_mesh(d, 0.2);
    CAPTURE(kind_name(kind));
    CHECK(m.active_area() == doctest::Approx(d.area()).epsilon(1e-12));
    for (Point v : d.vertices) {
      CHECK(has_line(m.x_lines, v.x));
      CHECK(has_line(m.y_lines, v.y));
    }
  }
}

TEST_CASE("node classes are surjective and consistent") {
  const DomainSpec S = build_swiss_cross_surface({1, 1, 1, 1});
  const TensorMesh m = build_mesh(S, 0.25);
  std::set<int> used;
  int nodes = 0;
  for (int raw = 0; raw < m.raw_nodes(); ++raw)
    if (m.node_class[raw] >= 0) {
      used.insert(m.node_class[raw]);
      ++nodes;
    }
  CHECK(static_cast<int>(used.size()) == m.ndof);
  CHECK(*used.begin() == 0);
  CHECK(*used.rbegin() == m.ndof - 1);
  CHECK(m.ndof < nodes);

  // the four reflex nodes form one class
  std::set<int> cone;
  for (int v : S.cone_orbit) cone.insert(m.node_class[m.node_at(S.vertices[v], 1e-12)]);
  CHECK(cone.size() == 1);
  // every periodic node shares its class with its translate
  for (const auto& pp : S.periodic_pairs) {
    const Edge& a = S.edges[pp.edge_a];
    const Point p0 = S.start_point(a), p1 = S.end_point(a);
    for (int raw = 0; raw < m.raw_nodes(); ++raw) {
      if (m.node_class[raw] < 0) continue;
      const Point q = m.node(raw);
      if (segment_distance(q, p0, p1) > 1e-12) continue;
      const int other = m.node_at(q + pp.shift, 1e-12);
      REQUIRE(other >= 0);
      CHECK(m.node_class[other] == m.node_class[raw]);
    }
  }
  // still one class after refinement
  const TensorMesh r = refine(m);
  std::set<int> cone2;
  for (int v : S.cone_orbit) cone2.insert(r.node_class[r.node_at(S.vertices[v], 1e-12)]);
  CHECK(cone2.size() == 1);
  CHECK(r.active_area() == doctest::Approx(S.area()).epsilon(1e-13));
}

TEST_CASE("periodic identification removes exactly the duplicate nodes") {
  const DomainSpec S = build_swiss_cross_surface({1, 1, 1, 1});
  const DomainSpec X = build_tiled({1, 1, 1, 1}, DomainKind::cross);
  const TensorMesh ms = build_mesh(S, 0.5, no_grading());
  const TensorMesh mx = build_mesh(X, 0.5, no_grading());
  int nodes = 0;
  for (int raw = 0; raw < ms.raw_nodes(); ++raw) nodes += ms.node_class[raw] >= 0;
  CHECK(nodes == mx.ndof);
  // closed quad complex of Euler characteristic -2: V = E - F - 2 with E = 2F
  CHECK(ms.active_count() == 48);
  CHECK(ms.ndof == 2 * 48 - 48 - 2);
}

TEST_CASE("symmetric mesh lines for reflection checks") {
  const DomainSpec T = build_tiled({1, 1, 1, 1}, DomainKind::H);
  const TensorMesh m = build_mesh(T, 0.25);
  for (const auto& r : T.reflections) {
    const auto& lines = r.normal == Axis::x ? m.x_lines : m.y_lines;
    for (double v : lines) CHECK(has_line(lines, 2 * r.offset - v));
  }
}

TEST_CASE("degenerate breakpoint intervals are rejected") {
  CHECK_THROWS_AS(build_mesh(build_L({1, 1e-14, 1, 1}), 0.1), MeshError);
}

TEST_CASE("restrict_mesh reproduces the sub-domain grid") {
  const LParams p{1, 1, 1, 1};
  const DomainSpec T = build_tiled(p, DomainKind::T);
  const TensorMesh mt = build_mesh(T, 0.25);
  const TensorMesh ml = restrict_mesh(mt, build_L(p));
  CHECK(ml.active_area() == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(ml.x_lines.front() == 0.0);
  CHECK(ml.y_lines.front() == 0.0);
}

TEST_CASE("mesh dump format") {
  std::ostringstream os;
  write_mesh_dump(os, build_mesh(build_rectangle(1, 1), 1.0));
  const std::string s = os.str();
  CHECK(s.find("x,y,class") != std::string::npos);
  CHECK(std::count(s.begin(), s.end(), '\n') >= 5);
}
