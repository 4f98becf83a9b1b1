#include "hotspots/assembly.hpp"

#include <array>
#include <ostream>

#include <Eigen/Dense>

#include "hotspots/error.hpp"

namespace hotspots {

SparseSymmetric::SparseSymmetric(Eigen::SparseMatrix<double> lower, bool psd)
    : lower_(std::move(lower)), psd_(psd) {
  lower_.makeCompressed();
}

Eigen::SparseMatrix<double> SparseSymmetric::full() const {
  Eigen::SparseMatrix<double> f = lower_.selfadjointView<Eigen::Lower>();
  return f;
}

Eigen::MatrixXd SparseSymmetric::dense() const { return Eigen::MatrixXd(full()); }

Eigen::VectorXd SparseSymmetric::multiply(const Eigen::VectorXd& x) const {
  return lower_.selfadjointView<Eigen::Lower>() * x;
}

double SparseSymmetric::sum_entries() const {
  double s = 0.0;
  for (int c = 0; c < lower_.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(lower_, c); it; ++it)
      s += it.row() == it.col() ? it.value() : 2.0 * it.value();
  return s;
}

double SparseSymmetric::trace() const { return lower_.diagonal().sum(); }

void SparseSymmetric::write_coo(std::ostream& os) const {
  const auto f = full();
  os.precision(17);
  for (int c = 0; c < f.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(f, c); it; ++it)
      os << it.row() << " " << it.col() << " " << it.value() << "\n";
}

std::vector<bool> dirichlet_classes(const TensorMesh& mesh, const DomainSpec& spec) {
  std::vector<bool> out(mesh.ndof, false);
  const double tol = 1e-9 * spec.diameter();
  for (const auto& e : spec.edges) {
    if (e.bc.kind != BcKind::dirichlet) continue;
    const Point a = spec.start_point(e), b = spec.end_point(e);
    const double x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
    const double y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
    for (int j = 0; j <= mesh.ny(); ++j) {
      const double y = mesh.y_lines[j];
      if (y < y0 - tol || y > y1 + tol) continue;
      for (int i = 0; i <= mesh.nx(); ++i) {
        const double x = mesh.x_lines[i];
        if (x < x0 - tol || x > x1 + tol) continue;
        const int c = mesh.node_class[mesh.node_index(i, j)];
        if (c >= 0) out[c] = true;
      }
    }
  }
  return out;
}

Assembled assemble(const TensorMesh& mesh, const DomainSpec& spec) {
  const auto dir = dirichlet_classes(mesh, spec);
  Assembled out;
  out.dofs.class_to_dof.assign(mesh.ndof, -1);
  for (int c = 0; c < mesh.ndof; ++c) {
    if (dir[c]) continue;
    out.dofs.class_to_dof[c] = out.dofs.free_count();
    out.dofs.dof_to_class.push_back(c);
  }
  const int n = out.dofs.free_count();
  if (n == 0) throw OverConstrained("every degree of freedom is constrained by Dirichlet data");

  using Triplet = Eigen::Triplet<double>;
  std::vector<Triplet> kt, mt;
  kt.reserve(static_cast<std::size_t>(mesh.active_count()) * 10);
  mt.reserve(static_cast<std::size_t>(mesh.active_count()) * 10);

  // Local node order: (0,0), (1,0), (0,1), (1,1); shape functions are
  // products of 1D hats, so element matrices are Kronecker products.
  for (int j = 0; j < mesh.ny(); ++j) {
    const double hy = mesh.y_lines[j + 1] - mesh.y_lines[j];
    for (int i = 0; i < mesh.nx(); ++i) {
      if (!mesh.active(i, j)) continue;
      const double hx = mesh.x_lines[i + 1] - mesh.x_lines[i];
      const double kx[2][2] = {{1 / hx, -1 / hx}, {-1 / hx, 1 / hx}};
      const double ky[2][2] = {{1 / hy, -1 / hy}, {-1 / hy, 1 / hy}};
      const double mx[2][2] = {{hx / 3, hx / 6}, {hx / 6, hx / 3}};
      const double my[2][2] = {{hy / 3, hy / 6}, {hy / 6, hy / 3}};
      const std::array<int, 4> raw{mesh.node_index(i, j), mesh.node_index(i + 1, j),
                                   mesh.node_index(i, j + 1), mesh.node_index(i + 1, j + 1)};
      std::array<int, 4> dof{};
      for (int a = 0; a < 4; ++a) dof[a] = out.dofs.class_to_dof[mesh.node_class[raw[a]]];
      for (int a = 0; a < 4; ++a) {
        if (dof[a] < 0) continue;
        const int ax = a & 1, ay = a >> 1;
        for (int b = 0; b < 4; ++b) {
          if (dof[b] < 0 || dof[b] > dof[a]) continue;
          const int bx = b & 1, by = b >> 1;
          const double k = kx[ax][bx] * my[ay][by] + mx[ax][bx] * ky[ay][by];
          const double m = mx[ax][bx] * my[ay][by];
          // Identified pairs a != b within one element both land on the diagonal.
          kt.emplace_back(dof[a], dof[b], k);
          mt.emplace_back(dof[a], dof[b], m);
        }
      }
    }
  }
  Eigen::SparseMatrix<double> K(n, n), M(n, n);
  K.setFromTriplets(kt.begin(), kt.end());
  M.setFromTriplets(mt.begin(), mt.end());
  out.K = SparseSymmetric(std::move(K), true);
  out.M = SparseSymmetric(std::move(M), true);
  return out;
}

}  // namespace hotspots
