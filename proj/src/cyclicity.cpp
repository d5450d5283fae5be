#include "cyclicity/cyclicity.hpp"

#include <algorithm>
#include <cmath>

namespace cyclicity {

namespace {

void require_unit(const Graph& g, const char* op) {
  if (!g.unit_weighted())
    throw Error(ErrorCode::WeightedInput, std::string(op) + " is defined for unit weights");
}

BoundCheck make_check(std::string name, BoundKind kind, double bound, double actual,
                      bool expected, double tight_tol) {
  BoundCheck c;
  c.name = std::move(name);
  c.kind = kind;
  c.bound = bound;
  c.actual = actual;
  c.slack = kind == BoundKind::Upper ? bound - actual : actual - bound;
  c.holds = c.slack >= -tight_tol;
  c.tight = std::abs(bound - actual) <= tight_tol;
  c.equality_expected = expected;
  return c;
}

}  // namespace

double global_cyclicity(const Graph& g, const ResistanceMatrix& omega) {
  require_unit(g, "global cyclicity");
  double sum = 0.0;
  for (const Edge& e : g.edges()) sum += 1.0 / omega(e.u, e.v);
  return sum - g.edge_count();
}

double closed_form(Family family, int n1, int n2) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::InvalidParams, what);
  };
  double n = n1, k = n2;
  switch (family) {
    case Family::Tree:
      need(n1 >= 1 && n2 == 0, "tree takes one size >= 1");
      return 0.0;
    case Family::Cycle:
      need(n1 >= 3 && n2 == 0, "cycle takes one size >= 3");
      return n / (n - 1.0);
    case Family::Complete:
      need(n1 >= 1 && n2 == 0, "complete takes one size >= 1");
      return n * (n - 1.0) * (n - 2.0) / 4.0;
    case Family::CompleteBipartite:
      need(n1 >= 1 && n2 >= 1, "complete bipartite takes two sizes >= 1");
      return n * k * (n * k - n - k + 1.0) / (n + k - 1.0);
  }
  throw Error(ErrorCode::InvalidParams, "unknown family");
}

DeltaReport edge_addition_delta(const Graph& g, const ResistanceMatrix& omega, int i, int j) {
  require_unit(g, "edge addition delta");
  int n = g.vertex_count();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw Error(ErrorCode::VertexOutOfRange, "delta endpoint out of range");
  if (i == j) throw Error(ErrorCode::SameVertex, "delta needs two distinct vertices");
  if (g.has_edge(i, j))
    throw Error(ErrorCode::AlreadyAdjacent,
                "pair (" + std::to_string(i) + ", " + std::to_string(j) + ") is already an edge");

  DeltaReport rep;
  rep.i = i;
  rep.j = j;
  rep.omega_ij = omega(i, j);
  rep.lower = 1.0 / rep.omega_ij;
  rep.upper = (g.edge_count() + 1.0) / rep.omega_ij;
  rep.term_new_edge = rep.lower;

  ResistanceMatrix after = perturb_edge(omega, i, j, 1.0);
  double shift = 1.0 + rep.omega_ij;
  rep.delta = rep.term_new_edge;
  rep.term_existing_edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    double before = omega(e.u, e.v);
    double term = (before - after(e.u, e.v)) / (before * after(e.u, e.v));
    // Same summand written directly on the unperturbed resistances; the two
    // must agree or the update lost too much precision.
    double bracket =
        omega(e.u, i) + omega(e.v, j) - omega(e.u, j) - omega(e.v, i);
    double num = bracket * bracket;
    double direct = num / (4.0 * before * before * shift - before * num);
    if (std::abs(term - direct) > 1e-8)
      throw Error(ErrorCode::SingularSystem, "inconsistent per-edge delta summands");
    rep.term_existing_edges.push_back(term);
    rep.delta += term;
  }
  return rep;
}

bool smi_check(const Graph& g, const Graph& h, const Tolerances& tol) {
  require_unit(g, "strict monotonicity");
  require_unit(h, "strict monotonicity");
  if (h.vertex_count() != g.vertex_count())
    throw Error(ErrorCode::NotSpanningSubgraph, "vertex sets differ");
  for (const Edge& e : h.edges())
    if (!g.has_edge(e.u, e.v))
      throw Error(ErrorCode::NotSpanningSubgraph,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") is not in the supergraph");
  if (h.edge_count() == g.edge_count())
    throw Error(ErrorCode::NotSpanningSubgraph, "subgraph must be proper");
  if (!is_connected(h)) throw Error(ErrorCode::Disconnected, "subgraph is disconnected");
  double cg = global_cyclicity(g, resistance_matrix(g));
  double ch = global_cyclicity(h, resistance_matrix(h));
  return ch < cg - tol.equality;
}

BoundCheck degree_bound(const Graph& g, const ResistanceMatrix& omega, double tight_tol) {
  double bound = 0.0;
  for (const Edge& e : g.edges()) {
    double du = g.degree(e.u), dv = g.degree(e.v);
    if (du + dv > 2.0) bound += (du - 1.0) * (dv - 1.0) / (du + dv - 2.0);
  }
  return make_check("degree_bound", BoundKind::Upper, bound, global_cyclicity(g, omega),
                    is_complete(g), tight_tol);
}

BoundCheck regular_bound(const Graph& g, const ResistanceMatrix& omega, double tight_tol) {
  if (!is_regular(g)) throw Error(ErrorCode::NotRegular, "degree sequence is not constant");
  double n = g.vertex_count();
  double r = g.vertex_count() > 0 ? g.degree(0) : 0;
  double bound = n * r * (r - 1.0) / 4.0;
  return make_check("regular_bound", BoundKind::Upper, bound, global_cyclicity(g, omega),
                    is_complete(g), tight_tol);
}

BoundCheck max_degree_bound(const Graph& g, const ResistanceMatrix& omega, double tight_tol) {
  double bound = g.edge_count() * (max_degree(g) - 1.0) / 2.0;
  return make_check("max_degree_bound", BoundKind::Upper, bound, global_cyclicity(g, omega),
                    is_complete(g), tight_tol);
}

std::pair<BoundCheck, BoundCheck> majorization_bounds(const Graph& g,
                                                      const ResistanceMatrix& omega,
                                                      double tight_tol) {
  long long n = g.vertex_count();
  long long m = g.edge_count();
  if (n < 3) throw Error(ErrorCode::SizeTooSmall, "majorization bounds need n >= 3");
  double actual = global_cyclicity(g, omega);
  double lower = static_cast<double>(m) * (m - n + 1.0) / (n - 1.0);

  // eps is the fractional part of (n^2 - n - 2m)/(n - 2), taken exactly.
  long long num = n * n - n - 2 * m;
  long long den = n - 2;
  long long rem = num % den;
  double eps = static_cast<double>(rem) / static_cast<double>(den);
  double upper = n / ((n - 2.0) * eps + 2.0) +
                 (static_cast<double>(m) * n - static_cast<double>(n) * n + (n - 2.0) * eps) / 2.0;

  BoundCheck lo = make_check("majorization_lower", BoundKind::Lower, lower, actual,
                             is_electrically_edge_equivalent(g, omega), tight_tol);
  BoundCheck hi = make_check("majorization_upper", BoundKind::Upper, upper, actual,
                             is_tree(g) || is_complete(g), tight_tol);
  return {lo, hi};
}

BoundCheck simple_upper_bound(const Graph& g, const ResistanceMatrix& omega, double tight_tol) {
  double n = g.vertex_count();
  double mu = g.edge_count() - n + 1.0;
  return make_check("simple_upper", BoundKind::Upper, n * mu / 2.0,
                    global_cyclicity(g, omega), is_tree(g) || is_complete(g), tight_tol);
}

std::pair<BoundCheck, BoundCheck> mu_sandwich(const Graph& g, const ResistanceMatrix& omega,
                                              double tight_tol) {
  double n = g.vertex_count();
  double m = g.edge_count();
  double mu = m - n + 1.0;
  double actual = global_cyclicity(g, omega);
  BoundCheck lo = make_check("mu_sandwich_lower", BoundKind::Lower, mu * m / (n - 1.0), actual,
                             is_electrically_edge_equivalent(g, omega), tight_tol);
  BoundCheck hi = make_check("mu_sandwich_upper", BoundKind::Upper, n * mu / 2.0, actual,
                             is_tree(g) || is_complete(g), tight_tol);
  return {lo, hi};
}

bool is_electrically_edge_equivalent(const Graph& g, const ResistanceMatrix& omega,
                                     double tol) {
  if (g.edge_count() <= 1) return true;
  double first = omega(g.edges()[0].u, g.edges()[0].v);
  for (const Edge& e : g.edges())
    if (std::abs(omega(e.u, e.v) - first) > tol) return false;
  return true;
}

CyclicityReport analyze(const Graph& g, const Tolerances& tol, const SolverConfig& solver) {
  ResistanceMatrix omega = resistance_matrix(g, solver);
  CyclicityReport rep;
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  rep.mu = cyclomatic_number(g);
  rep.cyclicity = global_cyclicity(g, omega);
  rep.foster_residual = foster_sum(g, omega) - (g.vertex_count() - 1);
  rep.flags.is_tree = is_tree(g);
  rep.flags.is_complete = is_complete(g);
  rep.flags.is_electrically_edge_equivalent =
      is_electrically_edge_equivalent(g, omega, tol.equality);

  rep.bounds.push_back(degree_bound(g, omega, tol.tightness));
  if (is_regular(g)) rep.bounds.push_back(regular_bound(g, omega, tol.tightness));
  rep.bounds.push_back(max_degree_bound(g, omega, tol.tightness));
  if (rep.n >= 3) {
    auto [mlo, mhi] = majorization_bounds(g, omega, tol.tightness);
    rep.bounds.push_back(mlo);
    rep.bounds.push_back(mhi);
    rep.bounds.push_back(simple_upper_bound(g, omega, tol.tightness));
    auto [slo, shi] = mu_sandwich(g, omega, tol.tightness);
    rep.bounds.push_back(slo);
    rep.bounds.push_back(shi);
  }
  return rep;
}

nlohmann::ordered_json to_json(const CyclicityReport& report) {
  nlohmann::ordered_json out;
  out["n"] = report.n;
  out["m"] = report.m;
  out["mu"] = report.mu;
  out["cyclicity"] = report.cyclicity;
  out["foster_residual"] = report.foster_residual;
  out["flags"] = {{"is_tree", report.flags.is_tree},
                  {"is_complete", report.flags.is_complete},
                  {"is_electrically_edge_equivalent",
                   report.flags.is_electrically_edge_equivalent}};
  out["bounds"] = nlohmann::ordered_json::array();
  for (const BoundCheck& b : report.bounds) {
    nlohmann::ordered_json row;
    row["name"] = b.name;
    row["kind"] = b.kind == BoundKind::Upper ? "upper" : "lower";
    row["bound"] = b.bound;
    row["actual"] = b.actual;
    row["slack"] = b.slack;
    row["tight"] = b.tight;
    out["bounds"].push_back(std::move(row));
  }
  return out;
}

nlohmann::ordered_json to_json(const DeltaReport& report, double tight_tol) {
  nlohmann::ordered_json out;
  out["i"] = report.i;
  out["j"] = report.j;
  out["omega"] = report.omega_ij;
  out["delta"] = report.delta;
  out["lower"] = report.lower;
  out["upper"] = report.upper;
  out["upper_tight"] = std::abs(report.upper - report.delta) <= tight_tol;
  out["term_new_edge"] = report.term_new_edge;
  out["term_existing_edges"] = report.term_existing_edges;
  return out;
}

}  // namespace cyclicity
