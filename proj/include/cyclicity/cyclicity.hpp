#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyclicity/graph.hpp"
#include "cyclicity/resistance.hpp"

namespace cyclicity {

struct Tolerances {
  double equality = 1e-9;   // numeric identities and strict-inequality margins
  double tightness = 1e-7;  // bound-equality detection
};

// Sum of reciprocal resistances over the edges minus the edge count.
// Zero exactly when g is a tree; grows as the graph gets denser.
double global_cyclicity(const Graph& g, const ResistanceMatrix& omega);

enum class Family { Tree, Cycle, Complete, CompleteBipartite };

// Exact values for the families with closed-form cyclicity: trees (0),
// cycle n/(n-1), complete n(n-1)(n-2)/4, complete bipartite
// n1 n2 (n1 n2 - n1 - n2 + 1)/(n1 + n2 - 1).
double closed_form(Family family, int n1, int n2 = 0);

// Effect of adding the unit edge {i, j}: exact increase of the global
// cyclicity, decomposed per the rational update of each existing edge,
// plus the strict lower bound 1/omega(i,j) and upper bound (m+1)/omega(i,j).
struct DeltaReport {
  int i = 0;
  int j = 0;
  double omega_ij = 0;
  double delta = 0;
  double lower = 0;
  double upper = 0;
  double term_new_edge = 0;
  std::vector<double> term_existing_edges;  // canonical edge order
};

DeltaReport edge_addition_delta(const Graph& g, const ResistanceMatrix& omega, int i, int j);

// Strict monotonicity under proper connected spanning subgraphs:
// returns whether C(h) < C(g) by more than tol.equality.
bool smi_check(const Graph& g, const Graph& h, const Tolerances& tol = {});

enum class BoundKind { Lower, Upper };

struct BoundCheck {
  std::string name;
  BoundKind kind = BoundKind::Upper;
  double bound = 0;
  double actual = 0;
  double slack = 0;   // bound - actual for upper, actual - bound for lower
  bool holds = true;  // slack >= -tightness
  bool tight = false;
  bool equality_expected = false;  // the characterization's prediction
};

// Sum over edges of (d_u - 1)(d_v - 1)/(d_u + d_v - 2); pendant-pendant
// edges contribute zero. Equality characterized by complete graphs
// (stars also land on 0 = 0 numerically).
BoundCheck degree_bound(const Graph& g, const ResistanceMatrix& omega, double tight_tol = 1e-7);
// n r (r - 1)/4 for r-regular graphs; throws NotRegular otherwise.
BoundCheck regular_bound(const Graph& g, const ResistanceMatrix& omega, double tight_tol = 1e-7);
// m (max_degree - 1)/2.
BoundCheck max_degree_bound(const Graph& g, const ResistanceMatrix& omega,
                            double tight_tol = 1e-7);
// Lower m(m-n+1)/(n-1), tight exactly on electrically edge-equivalent
// graphs; upper n/((n-2)e+2) + (mn - n^2 + (n-2)e)/2 with e the fractional
// part of (n^2-n-2m)/(n-2), tight exactly on trees and complete graphs.
// Requires n >= 3.
std::pair<BoundCheck, BoundCheck> majorization_bounds(const Graph& g,
                                                      const ResistanceMatrix& omega,
                                                      double tight_tol = 1e-7);
// n(m-n+1)/2.
BoundCheck simple_upper_bound(const Graph& g, const ResistanceMatrix& omega,
                              double tight_tol = 1e-7);
// mu m/(n-1) <= C <= n mu/2; numerically identical to majorization_lower
// and simple_upper.
std::pair<BoundCheck, BoundCheck> mu_sandwich(const Graph& g, const ResistanceMatrix& omega,
                                              double tight_tol = 1e-7);

// All adjacent pairs share one resistance value (within tol).
bool is_electrically_edge_equivalent(const Graph& g, const ResistanceMatrix& omega,
                                     double tol = 1e-9);

struct ReportFlags {
  bool is_tree = false;
  bool is_complete = false;
  bool is_electrically_edge_equivalent = false;
};

struct CyclicityReport {
  int n = 0;
  int m = 0;
  int mu = 0;
  double cyclicity = 0;
  double foster_residual = 0;
  ReportFlags flags;
  std::vector<BoundCheck> bounds;
};

// Full report: cyclicity, flags, and every applicable bound row.
CyclicityReport analyze(const Graph& g, const Tolerances& tol = {},
                        const SolverConfig& solver = {});

nlohmann::ordered_json to_json(const CyclicityReport& report);
nlohmann::ordered_json to_json(const DeltaReport& report, double tight_tol);

}  // namespace cyclicity
