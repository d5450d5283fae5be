#include "cyclicity/resistance.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace cyclicity {

namespace {

Eigen::MatrixXd laplacian(const Graph& g) {
  int n = g.vertex_count();
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    lap(e.u, e.u) += e.weight;
    lap(e.v, e.v) += e.weight;
    lap(e.u, e.v) -= e.weight;
    lap(e.v, e.u) -= e.weight;
  }
  return lap;
}

Eigen::MatrixXd grounded_inverse(const Eigen::MatrixXd& lap) {
  int n = static_cast<int>(lap.rows());
  Eigen::MatrixXd reduced = lap.bottomRightCorner(n - 1, n - 1);
  Eigen::LLT<Eigen::MatrixXd> llt(reduced);
  if (llt.info() != Eigen::Success)
    throw Error(ErrorCode::SingularSystem, "reduced Laplacian is not positive definite");
  Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(n - 1, n - 1));
  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(n, n);
  full.bottomRightCorner(n - 1, n - 1) = inv;
  return full;
}

Eigen::MatrixXd pseudoinverse(const Eigen::MatrixXd& lap, double tolerance) {
  int n = static_cast<int>(lap.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(lap);
  if (eig.info() != Eigen::Success)
    throw Error(ErrorCode::SingularSystem, "eigendecomposition failed");
  const Eigen::VectorXd& vals = eig.eigenvalues();
  double cutoff = tolerance * std::max(1.0, vals(n - 1));
  int null_dim = 0;
  Eigen::VectorXd inv_vals(n);
  for (int k = 0; k < n; ++k) {
    if (std::abs(vals(k)) <= cutoff) {
      inv_vals(k) = 0.0;
      ++null_dim;
    } else {
      inv_vals(k) = 1.0 / vals(k);
    }
  }
  if (null_dim != 1)
    throw Error(ErrorCode::SingularSystem,
                "Laplacian nullity " + std::to_string(null_dim) + ", expected 1");
  return eig.eigenvectors() * inv_vals.asDiagonal() * eig.eigenvectors().transpose();
}

}  // namespace

ResistanceMatrix resistance_matrix(const Graph& g, const SolverConfig& config) {
  if (!is_connected(g))
    throw Error(ErrorCode::Disconnected, "resistance is infinite across components");
  int n = g.vertex_count();
  if (n <= 1) return ResistanceMatrix(Eigen::MatrixXd::Zero(n, n));

  Eigen::MatrixXd lap = laplacian(g);
  Eigen::MatrixXd inv = config.method == SolverConfig::Method::GroundedSolve
                            ? grounded_inverse(lap)
                            : pseudoinverse(lap, config.tolerance);
  Eigen::MatrixXd omega(n, n);
  for (int i = 0; i < n; ++i) {
    omega(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      double r = inv(i, i) + inv(j, j) - 2.0 * inv(i, j);
      if (!std::isfinite(r))
        throw Error(ErrorCode::SingularSystem, "non-finite resistance entry");
      omega(i, j) = r;
      omega(j, i) = r;
    }
  }
  return ResistanceMatrix(std::move(omega));
}

double resistance(const Graph& g, int i, int j, const SolverConfig& config) {
  int n = g.vertex_count();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw Error(ErrorCode::VertexOutOfRange, "resistance endpoint out of range");
  return resistance_matrix(g, config)(i, j);
}

ResistanceMatrix perturb_edge(const ResistanceMatrix& omega, int i, int j, double delta,
                              double tolerance) {
  int n = omega.size();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw Error(ErrorCode::VertexOutOfRange, "perturbed pair out of range");
  if (i == j) throw Error(ErrorCode::SameVertex, "cannot perturb a vertex against itself");
  double denom = 1.0 + delta * omega(i, j);
  if (denom <= tolerance)
    throw Error(ErrorCode::DegeneratePerturbation,
                "update denominator " + std::to_string(denom) + " not positive");
  Eigen::MatrixXd next(n, n);
  for (int p = 0; p < n; ++p) {
    next(p, p) = 0.0;
    for (int q = p + 1; q < n; ++q) {
      double bracket = omega(p, i) + omega(q, j) - omega(p, j) - omega(q, i);
      double r = omega(p, q) - delta * bracket * bracket / (4.0 * denom);
      next(p, q) = r;
      next(q, p) = r;
    }
  }
  return ResistanceMatrix(std::move(next));
}

double foster_sum(const Graph& g, const ResistanceMatrix& omega) {
  double total = 0.0;
  for (const Edge& e : g.edges()) total += omega(e.u, e.v);
  return total;
}

void write_matrix(std::ostream& out, const ResistanceMatrix& omega) {
  char buf[64];
  for (int i = 0; i < omega.size(); ++i)
    for (int j = 0; j <= i; ++j) {
      std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", i, j, omega(i, j));
      out << buf;
    }
}

}  // namespace cyclicity
