#include "hotspots/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <limits>

#include <Eigen/SparseCholesky>

#include "hotspots/error.hpp"

namespace hotspots {

namespace {

using Lcg = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                            1442695040888963407ULL, 0ULL>;

double uniform_pm(Lcg& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
}

void fix_sign(Eigen::VectorXd& v) {
  Eigen::Index idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  if (v[idx] < 0.0) v = -v;
}

double relative_residual(const Eigen::SparseMatrix<double>& K, const Eigen::SparseMatrix<double>& M,
                         const Eigen::VectorXd& v, double lambda) {
  const Eigen::VectorXd mv = M * v;
  return (K * v - lambda * mv).norm() / mv.norm();
}

void finish(Spectrum& s, double cluster_tol) {
  for (auto& p : s.pairs) fix_sign(p.vector);
  s.clusters = cluster_indices(s.lambdas(), cluster_tol);
}

// M-orthonormalizes the columns of W against Q[:, 0:q) and against each other.
// Columns that collapse are replaced by fresh random directions.
void orthonormalize(Eigen::MatrixXd& W, const Eigen::MatrixXd& Q, int q,
                    const Eigen::SparseMatrix<double>& M, Lcg& rng) {
  const int n = static_cast<int>(W.rows());
  for (int c = 0; c < W.cols(); ++c) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      const double before = std::sqrt(std::max(0.0, W.col(c).dot(M * W.col(c))));
      for (int pass = 0; pass < 2; ++pass) {
        Eigen::VectorXd mw = M * W.col(c);
        if (q > 0) W.col(c) -= Q.leftCols(q) * (Q.leftCols(q).transpose() * mw);
        for (int d = 0; d < c; ++d) {
          mw = M * W.col(c);
          W.col(c) -= W.col(d) * W.col(d).dot(mw);
        }
      }
      const double nrm = std::sqrt(std::max(0.0, W.col(c).dot(M * W.col(c))));
      if (nrm > 1e-8 * before && nrm > 0.0) {
        W.col(c) /= nrm;
        break;
      }
      for (int r = 0; r < n; ++r) W(r, c) = uniform_pm(rng);
      if (attempt == 3) throw SolverError("Krylov basis could not be extended", 0.0);
    }
  }
}

}  // namespace

std::vector<double> Spectrum::lambdas() const {
  std::vector<double> out;
  for (const auto& p : pairs) out.push_back(p.lambda);
  return out;
}

int Spectrum::cluster_of(int i) const {
  for (int c = 0; c < static_cast<int>(clusters.size()); ++c)
    if (std::find(clusters[c].begin(), clusters[c].end(), i) != clusters[c].end()) return c;
  return -1;
}

std::vector<std::vector<int>> cluster_indices(const std::vector<double>& lambdas, double rel_tol) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(lambdas.size()); ++i) {
    if (!out.empty()) {
      const double prev = lambdas[out.back().back()];
      const double scale = std::max(std::abs(prev), std::abs(lambdas[i]));
      const double gap = std::abs(lambdas[i] - prev);
      if (gap <= rel_tol * scale || (scale < 1e-10 && gap < 1e-10)) {
        out.back().push_back(i);
        continue;
      }
    }
    out.push_back({i});
  }
  return out;
}

Spectrum dense_oracle(const SparseSymmetric& K, const SparseSymmetric& M, double cluster_tol) {
  const int n = K.dimension();
  if (n > 3000) throw DimensionError("dense oracle is limited to 3000 DOFs, got " + std::to_string(n));
  const Eigen::MatrixXd Kd = K.dense();
  const Eigen::MatrixXd Md = M.dense();
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(Kd, Md);
  if (es.info() != Eigen::Success) throw SolverError("dense generalized eigensolve failed", 0.0);
  const auto Kf = K.full();
  const auto Mf = M.full();
  Spectrum s;
  for (int i = 0; i < n; ++i) {
    EigenPair p;
    p.lambda = es.eigenvalues()[i];
    p.vector = es.eigenvectors().col(i);
    p.vector /= std::sqrt(p.vector.dot(Mf * p.vector));
    p.residual = relative_residual(Kf, Mf, p.vector, p.lambda);
    s.pairs.push_back(std::move(p));
  }
  finish(s, cluster_tol);
  return s;
}

Spectrum smallest_eigenpairs(const SparseSymmetric& K, const SparseSymmetric& M, int k,
                             const SolverOptions& opts) {
  const int n = K.dimension();
  if (k < 1 || k > n) throw InvalidParameter("requested eigenpair count out of range");
  if (n <= 64) {
    Spectrum s = dense_oracle(K, M, opts.cluster_tol);
    s.pairs.resize(k);
    s.clusters = cluster_indices(s.lambdas(), opts.cluster_tol);
    return s;
  }

  const Eigen::SparseMatrix<double> Kf = K.full();
  const Eigen::SparseMatrix<double> Mf = M.full();
  const double sigma = 1e-6 * K.trace() / M.trace();
  const Eigen::SparseMatrix<double> shifted = Kf + sigma * Mf;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> factor(shifted);
  if (factor.info() != Eigen::Success) throw SolverError("factorization of K + sigma M failed", 0.0);

  const int b = opts.block_size > 0 ? std::min(opts.block_size, n) : std::min(n, std::max(3, k + 2));
  int blocks = opts.basis_blocks > 0 ? opts.basis_blocks : std::max(4, (std::max(96, 6 * k) + b - 1) / b);
  blocks = std::max(2, std::min(blocks, (n / 2) / b));

  Lcg rng(opts.seed);
  Eigen::MatrixXd X(n, b);
  for (int c = 0; c < b; ++c)
    for (int r = 0; r < n; ++r) X(r, c) = uniform_pm(rng);

  double best = std::numeric_limits<double>::infinity();
  for (int restart = 0; restart <= opts.max_restarts; ++restart) {
    // A restart continues from the Ritz block with a longer Krylov sequence;
    // converged directions make short restarted sequences stagnate.
    if (restart > 0) blocks = std::min((n / 2) / b, blocks + std::max(1, blocks / 2));
    Eigen::MatrixXd Q(n, b * blocks);
    Eigen::MatrixXd V = X;
    orthonormalize(V, Q, 0, Mf, rng);
    int q = 0;
    for (int blk = 0; blk < blocks; ++blk) {
      Q.middleCols(q, b) = V;
      q += b;
      if (blk + 1 == blocks) break;
      Eigen::MatrixXd W = factor.solve(Mf * V);
      orthonormalize(W, Q, q, Mf, rng);
      V = W;
    }

    Eigen::MatrixXd T = Q.transpose() * (Kf * Q);
    Eigen::MatrixXd G = Q.transpose() * (Mf * Q);
    T = 0.5 * (T + T.transpose());
    G = 0.5 * (G + G.transpose());
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(T, G);
    const Eigen::MatrixXd Y = Q * es.eigenvectors().leftCols(std::max(k, b));

    double worst = 0.0;
    Spectrum s;
    for (int i = 0; i < k; ++i) {
      EigenPair p;
      p.lambda = es.eigenvalues()[i];
      p.vector = Y.col(i);
      p.vector /= std::sqrt(p.vector.dot(Mf * p.vector));
      p.residual = relative_residual(Kf, Mf, p.vector, p.lambda);
      worst = std::max(worst, p.residual / std::max(1.0, std::abs(p.lambda)));
      s.pairs.push_back(std::move(p));
    }
    best = std::min(best, worst);
    if (worst <= opts.tol) {
      finish(s, opts.cluster_tol);
      return s;
    }
    X = Y.leftCols(b);
  }
  throw SolverError("shift-invert Lanczos did not converge", best);
}

Extrapolation extrapolate(std::span<const std::pair<double, double>> seq) {
  if (seq.size() < 3) throw InvalidParameter("extrapolation needs at least three mesh levels");
  const double l0 = seq[seq.size() - 3].second;
  const double l1 = seq[seq.size() - 2].second;
  const double l2 = seq[seq.size() - 1].second;
  const double d0 = l0 - l1, d1 = l1 - l2;
  Extrapolation e;
  if (d0 == 0.0 || d1 == 0.0 || (d0 > 0) != (d1 > 0) || std::abs(d1) >= std::abs(d0)) {
    e.lambda_star = l2;
    e.declined = true;
    e.error = std::abs(d1);
    e.order = 0.0;
    return e;
  }
  e.order = std::log2(d0 / d1);
  e.lambda_star = l2 - d1 / (std::pow(2.0, e.order) - 1.0);
  e.error = std::abs(l2 - e.lambda_star);
  return e;
}

}  // namespace hotspots
