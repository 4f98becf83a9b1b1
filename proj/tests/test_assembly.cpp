#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "hotspots/assembly.hpp"
#include "hotspots/error.hpp"

using namespace hotspots;

namespace {

GradingOptions no_grading() {
  GradingOptions g;
  g.layers = 0;
  return g;
}

int dof_of(const TensorMesh& m, const Assembled& a, int i, int j) {
  return a.dofs.class_to_dof[m.node_class[m.node_index(i, j)]];
}

}  // namespace

TEST_CASE("single bilinear element matrices") {
  const DomainSpec sq = build_rectangle(1, 1);
  const TensorMesh m = build_mesh(sq, 1.0, no_grading());
  const Assembled a = assemble(m, sq);
  REQUIRE(a.dofs.free_count() == 4);
  const Eigen::MatrixXd K = a.K.dense();
  const Eigen::MatrixXd M = a.M.dense();
  const int n00 = dof_of(m, a, 0, 0), n10 = dof_of(m, a, 1, 0), n11 = dof_of(m, a, 1, 1);
  CHECK(K(n00, n00) == doctest::Approx(2.0 / 3.0));
  CHECK(K(n00, n10) == doctest::Approx(-1.0 / 6.0));
  CHECK(K(n00, n11) == doctest::Approx(-1.0 / 3.0));
  CHECK(M(n00, n00) == doctest::Approx(1.0 / 9.0));
  CHECK(M(n00, n10) == doctest::Approx(1.0 / 18.0));
  CHECK(M(n00, n11) == doctest::Approx(1.0 / 36.0));
  for (int r = 0; r < 4; ++r) CHECK(std::abs(K.row(r).sum()) < 1e-15);
  CHECK(a.M.sum_entries() == doctest::Approx(1.0));
  CHECK(a.K.positive_semidefinite());
}

TEST_CASE("constants lie in the stiffness kernel and mass sums to the area") {
  for (const DomainSpec& d : {build_L({1, 2, 0.5, 1.5}), build_swiss_cross_surface({1, 1, 1, 1}),
                              build_tiled({1, 1, 1, 1}, DomainKind::O)}) {
    CAPTURE(kind_name(d.kind));
    const TensorMesh m = build_mesh(d, 0.2);
    const Assembled a = assemble(m, d);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(a.dofs.free_count());
    CHECK(a.K.multiply(ones).lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK(a.M.sum_entries() == doctest::Approx(d.area()).epsilon(1e-12));
    const Eigen::SparseMatrix<double> Kf = a.K.full();
    CHECK((Eigen::SparseMatrix<double>(Kf.transpose()) - Kf).norm() == 0.0);
  }
}

TEST_CASE("Dirichlet elimination on the bottom edge") {
  const DomainSpec L = build_L({1, 1, 1, 1});
  const DomainSpec D = with_dirichlet(L, {1});
  const TensorMesh m = build_mesh(D, 0.25);
  const Assembled a = assemble(m, D);
  int bottom = 0;
  for (int i = 0; i <= m.nx(); ++i) bottom += m.node_class[m.node_index(i, 0)] >= 0;
  CHECK(a.dofs.free_count() == m.ndof - bottom);
  for (int i = 0; i <= m.nx(); ++i) {
    const int c = m.node_class[m.node_index(i, 0)];
    if (c >= 0) CHECK(a.dofs.class_to_dof[c] == -1);
  }
  // no other node is eliminated
  for (int raw = 0; raw < m.raw_nodes(); ++raw) {
    const int c = m.node_class[raw];
    if (c >= 0 && m.node(raw).y > 0.0) CHECK(a.dofs.class_to_dof[c] >= 0);
  }
  for (int f = 0; f < a.dofs.free_count(); ++f)
    CHECK(a.dofs.class_to_dof[a.dofs.dof_to_class[f]] == f);
}

TEST_CASE("an element with every node constrained is over-constrained") {
  const DomainSpec sq = with_dirichlet(build_rectangle(1, 1), {1, 2, 3, 4});
  const TensorMesh m = build_mesh(sq, 1.0, no_grading());
  CHECK_THROWS_AS(assemble(m, sq), OverConstrained);
}

TEST_CASE("coordinate export lists every stored entry") {
  const DomainSpec sq = build_rectangle(2, 1);
  const TensorMesh m = build_mesh(sq, 0.5, no_grading());
  const Assembled a = assemble(m, sq);
  std::ostringstream os;
  a.K.write_coo(os);
  const std::string s = os.str();
  CHECK(std::count(s.begin(), s.end(), '\n') == a.K.full().nonZeros());
  std::istringstream is(s);
  int r = -1, c = -1;
  double v = 0.0;
  is >> r >> c >> v;
  CHECK(r >= 0);
  CHECK(c >= 0);
  CHECK(std::isfinite(v));
}

TEST_CASE("diagonal reflection of the unit L permutes the matrices") {
  const DomainSpec L = build_L({1, 1, 1, 1});
  const TensorMesh m = build_mesh(L, 0.2);
  REQUIRE(m.x_lines == m.y_lines);
  const Assembled a = assemble(m, L);
  std::vector<int> perm(a.dofs.free_count());
  for (int j = 0; j <= m.ny(); ++j)
    for (int i = 0; i <= m.nx(); ++i) {
      const int c = m.node_class[m.node_index(i, j)];
      if (c < 0) continue;
      perm[a.dofs.class_to_dof[c]] = dof_of(m, a, j, i);
    }
  const Eigen::SparseMatrix<double> K = a.K.full(), M = a.M.full();
  double dk = 0.0, dm = 0.0;
  for (int col = 0; col < K.outerSize(); ++col)
    for (Eigen::SparseMatrix<double>::InnerIterator it(K, col); it; ++it)
      dk = std::max(dk, std::abs(it.value() - K.coeff(perm[it.row()], perm[it.col()])));
  for (int col = 0; col < M.outerSize(); ++col)
    for (Eigen::SparseMatrix<double>::InnerIterator it(M, col); it; ++it)
      dm = std::max(dm, std::abs(it.value() - M.coeff(perm[it.row()], perm[it.col()])));
  CHECK(dk < 1e-12);
  CHECK(dm < 1e-14);
}

TEST_CASE("Dirichlet classes include edge endpoints") {
  const DomainSpec D = with_dirichlet(build_rectangle(1, 1), {4});
  const TensorMesh m = build_mesh(D, 0.5, no_grading());
  const std::vector<bool> dc = dirichlet_classes(m, D);
  CHECK(dc[m.node_class[m.node_index(0, 0)]]);
  CHECK(dc[m.node_class[m.node_index(0, m.ny())]]);
  CHECK_FALSE(dc[m.node_class[m.node_index(1, 0)]]);
}
