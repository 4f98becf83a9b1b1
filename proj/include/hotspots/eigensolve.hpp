#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hotspots/assembly.hpp"

namespace hotspots {

struct EigenPair {
  double lambda = 0.0;
  Eigen::VectorXd vector;  // over free DOFs, M-normalized
  double residual = 0.0;   // ||K v - lambda M v|| / ||M v||
};

struct Spectrum {
  std::vector<EigenPair> pairs;
  std::vector<std::vector<int>> clusters;  // consecutive index groups

  std::size_t size() const { return pairs.size(); }
  double lambda(std::size_t i) const { return pairs[i].lambda; }
  std::vector<double> lambdas() const;
  /// Index of the cluster containing pair i.
  int cluster_of(int i) const;
};

struct SolverOptions {
  double tol = 1e-8;
  std::uint64_t seed = 0x5EED;
  double cluster_tol = 1e-6;
  int max_restarts = 60;
  int block_size = 0;     // 0: chosen from k
  int basis_blocks = 0;   // 0: chosen from k
};

/// The k smallest eigenpairs of K v = lambda M v by block shift-invert Lanczos.
Spectrum smallest_eigenpairs(const SparseSymmetric& K, const SparseSymmetric& M, int k,
                             const SolverOptions& opts = {});

/// Full spectrum by dense symmetric-definite reduction (ndof <= 3000).
Spectrum dense_oracle(const SparseSymmetric& K, const SparseSymmetric& M,
                      double cluster_tol = 1e-6);

std::vector<std::vector<int>> cluster_indices(const std::vector<double>& lambdas, double rel_tol);

struct Extrapolation {
  double lambda_star = 0.0;
  double order = 0.0;
  double error = 0.0;     // |finest - lambda_star|, or |finest - previous| when declined
  bool declined = false;  // non-monotone or stagnant sequence: lambda_star is the finest value
};

/// Richardson limit from the last three (h, lambda) levels (ratio-2 refinements, coarse first).
Extrapolation extrapolate(std::span<const std::pair<double, double>> lambdas_at_h);

}  // namespace hotspots
