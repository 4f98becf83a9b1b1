#pragma once

#include <iosfwd>
#include <vector>

#include <Eigen/SparseCore>

#include "hotspots/geometry.hpp"
#include "hotspots/mesh.hpp"

namespace hotspots {

/// Symmetric sparse matrix stored as its lower triangle.
class SparseSymmetric {
 public:
  SparseSymmetric() = default;
  SparseSymmetric(Eigen::SparseMatrix<double> lower, bool psd);

  int dimension() const { return static_cast<int>(lower_.rows()); }
  const Eigen::SparseMatrix<double>& lower() const { return lower_; }
  bool positive_semidefinite() const { return psd_; }

  Eigen::SparseMatrix<double> full() const;
  Eigen::MatrixXd dense() const;
  Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;
  double sum_entries() const;
  double trace() const;

  /// Coordinate text export of the full matrix: "row col value" per line, 0-based.
  void write_coo(std::ostream& os) const;

 private:
  Eigen::SparseMatrix<double> lower_;
  bool psd_ = true;
};

/// DOF class numbering after Dirichlet elimination.
struct DofMap {
  std::vector<int> class_to_dof;  // -1 for eliminated classes
  std::vector<int> dof_to_class;
  int free_count() const { return static_cast<int>(dof_to_class.size()); }
};

struct Assembled {
  SparseSymmetric K;
  SparseSymmetric M;
  DofMap dofs;
};

/// Bilinear Galerkin stiffness and mass matrices with Dirichlet classes eliminated.
Assembled assemble(const TensorMesh& mesh, const DomainSpec& spec);

/// Classes of nodes lying on the closure of a Dirichlet edge.
std::vector<bool> dirichlet_classes(const TensorMesh& mesh, const DomainSpec& spec);

}  // namespace hotspots
