#pragma once

#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "cyclicity/graph.hpp"

namespace cyclicity {

struct SolverConfig {
  enum class Method { GroundedSolve, FullPseudoinverse };
  Method method = Method::GroundedSolve;
  double tolerance = 1e-9;
};

// Symmetric matrix of pairwise effective resistances; zero diagonal.
class ResistanceMatrix {
 public:
  ResistanceMatrix() = default;
  explicit ResistanceMatrix(Eigen::MatrixXd omega) : omega_(std::move(omega)) {}

  int size() const noexcept { return static_cast<int>(omega_.rows()); }
  double operator()(int i, int j) const { return omega_(i, j); }
  const Eigen::MatrixXd& values() const noexcept { return omega_; }

 private:
  Eigen::MatrixXd omega_;
};

// Effective resistance between all pairs, treating edge weights as
// conductances. Grounds vertex 0 and solves the reduced Laplacian with a
// dense Cholesky factorization (or diagonalizes the full Laplacian when
// configured for the pseudoinverse route).
ResistanceMatrix resistance_matrix(const Graph& g, const SolverConfig& config = {});

double resistance(const Graph& g, int i, int j, const SolverConfig& config = {});

// Resistances after changing the conductance of pair (i, j) by delta
// (delta = new - old; a new unit edge is delta = 1 on a non-adjacent pair).
// Works from resistances alone. Throws DegeneratePerturbation when the
// update denominator 1 + delta * omega(i, j) falls below tolerance.
ResistanceMatrix perturb_edge(const ResistanceMatrix& omega, int i, int j, double delta,
                              double tolerance = 1e-9);

// Sum of resistances over the edges of g; equals n - 1 for connected
// unit-weight graphs.
double foster_sum(const Graph& g, const ResistanceMatrix& omega);

// Lower triangle as "i j omega" lines, 17 significant digits.
void write_matrix(std::ostream& out, const ResistanceMatrix& omega);

}  // namespace cyclicity
