#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "hotspots/eigensolve.hpp"
#include "hotspots/error.hpp"

using namespace hotspots;

namespace {

constexpr double pi2 = std::numbers::pi * std::numbers::pi;

Assembled system_for(const DomainSpec& d, double h, int layers = 6) {
  GradingOptions g;
  g.layers = layers;
  return assemble(build_mesh(d, h, g), d);
}

}  // namespace

TEST_CASE("Neumann rectangle eigenvalues") {
  const Assembled a = system_for(build_rectangle(2, 1), 0.05);
  const Spectrum s = smallest_eigenpairs(a.K, a.M, 4);
  CHECK(std::abs(s.lambda(0)) < 1e-9);
  CHECK(s.lambda(1) == doctest::Approx(pi2 / 4).epsilon(1e-3));
  CHECK(s.lambda(2) == doctest::Approx(pi2).epsilon(5e-3));
  CHECK(s.lambda(3) == doctest::Approx(pi2).epsilon(5e-3));
  CHECK(s.cluster_of(2) == s.cluster_of(3));
  CHECK(s.cluster_of(1) != s.cluster_of(2));
}

TEST_CASE("mixed rectangle: Dirichlet on the left side") {
  const DomainSpec d = with_dirichlet(build_rectangle(2, 1), {4});
  REQUIRE(d.start_point(d.edge(4)).x == 0.0);
  const Assembled a = system_for(d, 0.05);
  const Spectrum s = smallest_eigenpairs(a.K, a.M, 2);
  CHECK(s.lambda(0) == doctest::Approx(pi2 / 16).epsilon(1e-3));
}

TEST_CASE("square has a double second eigenvalue") {
  const Assembled a = system_for(build_rectangle(1, 1), 0.05);
  const Spectrum s = smallest_eigenpairs(a.K, a.M, 3);
  CHECK(s.clusters.size() == 2);
  CHECK(s.cluster_of(1) == s.cluster_of(2));
}

TEST_CASE("Galerkin eigenvalues are upper bounds and decrease under refinement") {
  const DomainSpec r = build_rectangle(2, 1);
  GradingOptions g;
  g.layers = 0;
  TensorMesh m = build_mesh(r, 0.25, g);
  double prev = INFINITY;
  for (int level = 0; level < 3; ++level) {
    const Assembled a = assemble(m, r);
    const Spectrum s = smallest_eigenpairs(a.K, a.M, 2);
    CHECK(s.lambda(1) >= pi2 / 4);
    CHECK(s.lambda(1) < prev);
    prev = s.lambda(1);
    m = refine(m);
  }
}

TEST_CASE("dense oracle agrees with the iterative solver") {
  const DomainSpec L = build_L({1, 2, 0.5, 1.5});
  const Assembled a = system_for(L, 0.15);
  REQUIRE(a.dofs.free_count() <= 3000);
  const Spectrum dense = dense_oracle(a.K, a.M);
  const Spectrum it = smallest_eigenpairs(a.K, a.M, 6);
  CHECK(std::abs(dense.lambda(0)) < 1e-10);
  for (int i = 0; i < 6; ++i)
    CHECK(std::abs(dense.lambda(i) - it.lambda(i)) <= 1e-8 * std::max(1.0, dense.lambda(i)));
  CHECK(dense.size() == static_cast<std::size_t>(a.dofs.free_count()));
}

TEST_CASE("dense oracle refuses large systems") {
  const Assembled a = system_for(build_rectangle(1, 1), 0.015, 0);
  REQUIRE(a.dofs.free_count() > 3000);
  CHECK_THROWS_AS(dense_oracle(a.K, a.M), DimensionError);
}

TEST_CASE("eigenpairs are M-orthonormal Rayleigh pairs and reproducible") {
  const DomainSpec L = build_L({1, 1, 1, 1});
  const Assembled a = system_for(L, 0.1);
  const Spectrum s = smallest_eigenpairs(a.K, a.M, 4);
  const Eigen::SparseMatrix<double> K = a.K.full(), M = a.M.full();
  for (int i = 0; i < 4; ++i) {
    const Eigen::VectorXd& v = s.pairs[i].vector;
    CHECK(v.dot(K * v) / v.dot(M * v) == doctest::Approx(s.lambda(i)).epsilon(1e-10));
    CHECK(s.pairs[i].residual <= 1e-8 * std::max(1.0, s.lambda(i)));
    for (int j = 0; j < 4; ++j) CHECK(std::abs(v.dot(M * s.pairs[j].vector) - (i == j)) < 1e-9);
  }
  const Spectrum again = smallest_eigenpairs(a.K, a.M, 4);
  for (int i = 0; i < 4; ++i) CHECK(again.lambda(i) == s.lambda(i));
}

TEST_CASE("solver reports non-convergence") {
  const Assembled a = system_for(build_L({1, 1, 1, 1}), 0.1);
  SolverOptions o;
  o.tol = 1e-20;
  o.max_restarts = 0;
  CHECK_THROWS_AS(smallest_eigenpairs(a.K, a.M, 3, o), SolverError);
  CHECK_THROWS_AS(smallest_eigenpairs(a.K, a.M, 0), InvalidParameter);
}

TEST_CASE("Richardson extrapolation") {
  std::vector<std::pair<double, double>> quad, frac, bad;
  for (double h : {0.1, 0.05, 0.025}) {
    quad.push_back({h, 2.0 + 3.0 * h * h});
    frac.push_back({h, 1.0 + std::pow(h, 4.0 / 3.0)});
  }
  const Extrapolation q = extrapolate(quad);
  CHECK(q.order == doctest::Approx(2.0));
  CHECK(q.lambda_star == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_FALSE(q.declined);
  const Extrapolation f = extrapolate(frac);
  CHECK(f.order == doctest::Approx(4.0 / 3.0));
  CHECK(f.lambda_star == doctest::Approx(1.0).epsilon(1e-12));
  bad = {{0.1, 1.0}, {0.05, 0.9}, {0.025, 0.95}};
  const Extrapolation b = extrapolate(bad);
  CHECK(b.declined);
  CHECK(b.lambda_star == 0.95);
  CHECK(b.error == doctest::Approx(0.05));
  CHECK_THROWS_AS(extrapolate(std::span(quad).first(2)), InvalidParameter);
}

TEST_CASE("unit L ladder matches published reference eigenvalues") {
  // reference Neumann eigenvalues of the L of three unit squares: 1.4756218241, 3.5340313
  const DomainSpec L = build_L({1, 1, 1, 1});
  TensorMesh m = build_mesh(L, std::sqrt(3.0 / 600.0));
  std::vector<std::pair<double, double>> mu2, mu3;
  std::vector<int> dofs;
  double h = std::sqrt(3.0 / 600.0);
  for (int level = 0; level < 3; ++level) {
    const Assembled a = assemble(m, L);
    const Spectrum s = smallest_eigenpairs(a.K, a.M, 3);
    mu2.push_back({h, s.lambda(1)});
    mu3.push_back({h, s.lambda(2)});
    dofs.push_back(a.dofs.free_count());
    m = refine(m);
    h /= 2;
  }
  CHECK(dofs == std::vector<int>{1281, 4961, 19521});
  CHECK(mu2[2].second == doctest::Approx(1.475770396).epsilon(1e-8));
  const Extrapolation e2 = extrapolate(mu2);
  CHECK(e2.order >= 1.8);
  CHECK(e2.order == doctest::Approx(1.972).epsilon(2e-3));
  CHECK(e2.lambda_star == doctest::Approx(1.475620236).epsilon(1e-8));
  CHECK(std::abs(e2.lambda_star - 1.4756218241) <= e2.error);
  const Extrapolation e3 = extrapolate(mu3);
  CHECK(e3.lambda_star == doctest::Approx(3.534031277).epsilon(1e-8));
  CHECK(std::abs(e3.lambda_star - 3.5340313) <= std::max(e3.error, 1e-6));
  CHECK(mu3[2].second - mu2[2].second > 2.0);
}

TEST_CASE("clustering by relative gap") {
  const auto c = cluster_indices({0.0, 1.0, 1.0 + 1e-9, 2.0}, 1e-6);
  REQUIRE(c.size() == 3);
  CHECK(c[1] == std::vector<int>{1, 2});
}
