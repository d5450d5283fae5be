#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cyclicity/cyclicity.hpp"

using namespace cyclicity;

namespace {

constexpr double kTol = 1e-9;

double cyclicity_of(const Graph& g) { return global_cyclicity(g, resistance_matrix(g)); }

const BoundCheck& row(const CyclicityReport& rep, const std::string& name) {
  for (const BoundCheck& b : rep.bounds)
    if (b.name == name) return b;
  REQUIRE_MESSAGE(false, "missing bound row " << name);
  static BoundCheck dummy;
  return dummy;
}

}  // namespace

TEST_CASE("closed forms match direct computation") {
  CHECK(closed_form(Family::Tree, 9) == 0.0);
  CHECK(closed_form(Family::Cycle, 5) == doctest::Approx(1.25).epsilon(kTol));
  CHECK(closed_form(Family::Complete, 4) == 6.0);
  CHECK(closed_form(Family::CompleteBipartite, 3, 3) == doctest::Approx(7.2).epsilon(kTol));
  CHECK(closed_form(Family::CompleteBipartite, 1, 7) == 0.0);  // stars are trees
  CHECK(closed_form(Family::CompleteBipartite, 2, 2) ==
        doctest::Approx(closed_form(Family::Cycle, 4)).epsilon(kTol));

  for (int n = 2; n <= 9; ++n)
    CHECK(cyclicity_of(path(n)) == doctest::Approx(closed_form(Family::Tree, n)).epsilon(kTol));
  for (int n = 3; n <= 9; ++n)
    CHECK(cyclicity_of(cycle(n)) == doctest::Approx(closed_form(Family::Cycle, n)).epsilon(kTol));
  for (int n = 2; n <= 8; ++n)
    CHECK(cyclicity_of(complete(n)) ==
          doctest::Approx(closed_form(Family::Complete, n)).epsilon(kTol));
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      CHECK(cyclicity_of(complete_bipartite(a, b)) ==
            doctest::Approx(closed_form(Family::CompleteBipartite, a, b)).epsilon(kTol));

  CHECK_THROWS_WITH_AS(closed_form(Family::Cycle, 2), doctest::Contains("InvalidParams"),
                       Error);
  CHECK_THROWS_WITH_AS(closed_form(Family::Tree, 3, 2), doctest::Contains("InvalidParams"),
                       Error);
  CHECK_THROWS_WITH_AS(closed_form(Family::CompleteBipartite, 3),
                       doctest::Contains("InvalidParams"), Error);
}

TEST_CASE("edge-transitive values") {
  CHECK(cyclicity_of(petersen()) == doctest::Approx(10.0).epsilon(kTol));
  // 39 edges on 13 vertices, every edge at the same resistance:
  // C = m^2/(n-1) - m.
  CHECK(cyclicity_of(paley(13)) == doctest::Approx(87.75).epsilon(kTol));
}

TEST_CASE("weighted input is rejected") {
  Graph w(3, {{0, 1}, {1, 2}, {0, 2}}, {1.0, 2.0, 1.0});
  CHECK_THROWS_WITH_AS(global_cyclicity(w, resistance_matrix(w)),
                       doctest::Contains("WeightedInput"), Error);
  CHECK_THROWS_WITH_AS(analyze(w), doctest::Contains("WeightedInput"), Error);
  CHECK_THROWS_WITH_AS(analyze(Graph(4, {{0, 1}, {2, 3}})), doctest::Contains("Disconnected"),
                       Error);
}

TEST_CASE("delta on path endpoints hits the upper bound") {
  Graph p3 = path(3);
  DeltaReport rep = edge_addition_delta(p3, resistance_matrix(p3), 0, 2);
  CHECK(rep.omega_ij == doctest::Approx(2.0).epsilon(kTol));
  CHECK(rep.lower == doctest::Approx(0.5).epsilon(kTol));
  CHECK(rep.upper == doctest::Approx(1.5).epsilon(kTol));
  CHECK(rep.delta == doctest::Approx(1.5).epsilon(kTol));  // C(C_3) - C(P_3)
  CHECK(rep.term_new_edge == doctest::Approx(0.5).epsilon(kTol));
  REQUIRE(rep.term_existing_edges.size() == 2);
  CHECK(rep.term_existing_edges[0] == doctest::Approx(0.5).epsilon(kTol));
  CHECK(rep.term_existing_edges[1] == doctest::Approx(0.5).epsilon(kTol));

  Graph p4 = path(4);
  DeltaReport rep4 = edge_addition_delta(p4, resistance_matrix(p4), 0, 3);
  CHECK(rep4.delta == doctest::Approx(4.0 / 3).epsilon(kTol));  // C(C_4)
  CHECK(rep4.upper == doctest::Approx(4.0 / 3).epsilon(kTol));
}

TEST_CASE("delta validation") {
  Graph c5 = cycle(5);
  ResistanceMatrix om = resistance_matrix(c5);
  CHECK_THROWS_WITH_AS(edge_addition_delta(c5, om, 0, 1), doctest::Contains("AlreadyAdjacent"),
                       Error);
  CHECK_THROWS_WITH_AS(edge_addition_delta(c5, om, 2, 2), doctest::Contains("SameVertex"),
                       Error);
  CHECK_THROWS_WITH_AS(edge_addition_delta(c5, om, 0, 9),
                       doctest::Contains("VertexOutOfRange"), Error);
}

TEST_CASE("delta equals the recomputed difference on every small non-edge") {
  for (int n = 3; n <= 5; ++n)
    for_each_connected(n, [&](const Graph& g) {
      ResistanceMatrix om = resistance_matrix(g);
      double c = global_cyclicity(g, om);
      bool path_graph = is_tree(g) && max_degree(g) <= 2;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (g.has_edge(i, j)) continue;
          DeltaReport rep = edge_addition_delta(g, om, i, j);
          std::vector<std::pair<int, int>> plus;
          for (const Edge& e : g.edges()) plus.emplace_back(e.u, e.v);
          plus.emplace_back(i, j);
          double c2 = cyclicity_of(Graph(n, plus));
          CHECK(std::abs((c2 - c) - rep.delta) <= 1e-9);
          CHECK(rep.delta > rep.lower + kTol);  // strict lower
          CHECK(rep.delta <= rep.upper + kTol);
          bool endpoints = path_graph && g.degree(i) == 1 && g.degree(j) == 1;
          CHECK((std::abs(rep.upper - rep.delta) <= 1e-7) == endpoints);
        }
    });
}

TEST_CASE("strict monotonicity checks and errors") {
  CHECK(smi_check(cycle(5), path(5)));
  CHECK(smi_check(complete(5), cycle(5)));
  CHECK(smi_check(complete(6), complete_bipartite(3, 3)));
  CHECK_THROWS_WITH_AS(smi_check(cycle(5), path(4)),
                       doctest::Contains("NotSpanningSubgraph"), Error);
  CHECK_THROWS_WITH_AS(smi_check(cycle(5), cycle(5)),
                       doctest::Contains("NotSpanningSubgraph"), Error);
  CHECK_THROWS_WITH_AS(smi_check(path(5), cycle(5)),
                       doctest::Contains("NotSpanningSubgraph"), Error);
  CHECK_THROWS_WITH_AS(smi_check(complete(4), Graph(4, {{0, 1}, {2, 3}})),
                       doctest::Contains("Disconnected"), Error);
}

TEST_CASE("complete graph report: every bound tight") {
  CyclicityReport rep = analyze(complete(4));
  CHECK(rep.n == 4);
  CHECK(rep.m == 6);
  CHECK(rep.mu == 3);
  CHECK(rep.cyclicity == doctest::Approx(6.0).epsilon(kTol));
  CHECK(std::abs(rep.foster_residual) <= 1e-8);
  CHECK(rep.flags.is_complete);
  CHECK(rep.flags.is_electrically_edge_equivalent);
  CHECK_FALSE(rep.flags.is_tree);
  REQUIRE(rep.bounds.size() == 8);
  for (const BoundCheck& b : rep.bounds) {
    CAPTURE(b.name);
    CHECK(b.bound == doctest::Approx(6.0).epsilon(kTol));
    CHECK(b.tight);
    CHECK(b.holds);
    CHECK(b.equality_expected);
  }
}

TEST_CASE("four-cycle report values") {
  CyclicityReport rep = analyze(cycle(4));
  CHECK(rep.cyclicity == doctest::Approx(4.0 / 3).epsilon(kTol));
  CHECK(row(rep, "degree_bound").bound == doctest::Approx(2.0).epsilon(kTol));
  CHECK_FALSE(row(rep, "degree_bound").tight);
  CHECK(row(rep, "regular_bound").bound == doctest::Approx(2.0).epsilon(kTol));
  CHECK(row(rep, "max_degree_bound").bound == doctest::Approx(2.0).epsilon(kTol));
  CHECK(row(rep, "majorization_lower").bound == doctest::Approx(4.0 / 3).epsilon(kTol));
  CHECK(row(rep, "majorization_lower").tight);
  CHECK(row(rep, "majorization_lower").equality_expected);
  CHECK(row(rep, "majorization_upper").bound == doctest::Approx(2.0).epsilon(kTol));
  CHECK(row(rep, "simple_upper").bound == doctest::Approx(2.0).epsilon(kTol));
  CHECK(row(rep, "mu_sandwich_lower").bound == doctest::Approx(4.0 / 3).epsilon(kTol));
  CHECK(row(rep, "mu_sandwich_lower").tight);
  CHECK(row(rep, "mu_sandwich_upper").bound == doctest::Approx(2.0).epsilon(kTol));
  CHECK(row(rep, "mu_sandwich_upper").kind == BoundKind::Upper);
  CHECK(row(rep, "majorization_lower").kind == BoundKind::Lower);
}

TEST_CASE("asymmetric fractional-part case in the majorization upper bound") {
  // cycle(6): (36 - 6 - 12)/4 leaves remainder 2, so eps = 0.5.
  CyclicityReport rep = analyze(cycle(6));
  CHECK(row(rep, "majorization_upper").bound == doctest::Approx(2.5).epsilon(kTol));
  CHECK(rep.cyclicity == doctest::Approx(1.2).epsilon(kTol));
  CHECK_FALSE(row(rep, "majorization_upper").tight);
}

TEST_CASE("tree reports: zero cyclicity, upper bounds collapse") {
  CyclicityReport rep = analyze(path(5));
  CHECK(rep.cyclicity == doctest::Approx(0.0).epsilon(kTol));
  CHECK(rep.mu == 0);
  CHECK(rep.flags.is_tree);
  CHECK(rep.flags.is_electrically_edge_equivalent);  // every tree edge sits at 1
  CHECK(row(rep, "majorization_upper").bound == doctest::Approx(0.0).epsilon(kTol));
  CHECK(row(rep, "majorization_upper").tight);
  CHECK(row(rep, "majorization_upper").equality_expected);
  CHECK(row(rep, "simple_upper").bound == 0.0);
  CHECK(row(rep, "simple_upper").tight);
  CHECK(row(rep, "degree_bound").bound == doctest::Approx(1.0).epsilon(kTol));
  CHECK_FALSE(row(rep, "degree_bound").tight);
  CHECK_FALSE(row(rep, "degree_bound").equality_expected);

  // Stars land exactly on 0 = 0 for the degree bound without being complete.
  CyclicityReport star = analyze(complete_bipartite(1, 4));
  CHECK(row(star, "degree_bound").bound == 0.0);
  CHECK(row(star, "degree_bound").tight);
  CHECK_FALSE(row(star, "degree_bound").equality_expected);
}

TEST_CASE("complete bipartite report") {
  CyclicityReport rep = analyze(complete_bipartite(2, 3));
  CHECK(rep.cyclicity == doctest::Approx(3.0).epsilon(kTol));
  CHECK(rep.flags.is_electrically_edge_equivalent);
  CHECK(row(rep, "majorization_lower").tight);
  CHECK(row(rep, "majorization_upper").bound == doctest::Approx(4.75).epsilon(kTol));
  CHECK(row(rep, "max_degree_bound").bound == doctest::Approx(6.0).epsilon(kTol));
  CHECK(row(rep, "degree_bound").bound == doctest::Approx(4.0).epsilon(kTol));
  // No regular row for an irregular graph.
  for (const BoundCheck& b : rep.bounds) CHECK(b.name != "regular_bound");
  CHECK_THROWS_WITH_AS(regular_bound(complete_bipartite(2, 3),
                                     resistance_matrix(complete_bipartite(2, 3))),
                       doctest::Contains("NotRegular"), Error);
}

TEST_CASE("petersen report") {
  CyclicityReport rep = analyze(petersen());
  CHECK(rep.cyclicity == doctest::Approx(10.0).epsilon(kTol));
  CHECK(row(rep, "majorization_lower").bound == doctest::Approx(10.0).epsilon(kTol));
  CHECK(row(rep, "majorization_lower").tight);
  CHECK(row(rep, "degree_bound").bound == doctest::Approx(15.0).epsilon(kTol));
  CHECK_FALSE(row(rep, "degree_bound").tight);
  CHECK(row(rep, "regular_bound").bound == doctest::Approx(15.0).epsilon(kTol));
  CHECK(row(rep, "simple_upper").bound == doctest::Approx(30.0).epsilon(kTol));
  CHECK(rep.flags.is_electrically_edge_equivalent);
}

TEST_CASE("electrical edge equivalence") {
  auto eee = [](const Graph& g) {
    return is_electrically_edge_equivalent(g, resistance_matrix(g), 1e-9);
  };
  CHECK(eee(cycle(7)));
  CHECK(eee(complete(6)));
  CHECK(eee(path(6)));
  CHECK(eee(petersen()));
  CHECK(eee(paley(13)));
  CHECK(eee(complete_bipartite(2, 4)));
  Graph lollipop(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK_FALSE(eee(lollipop));
}

TEST_CASE("small-n guards") {
  Graph k2 = complete(2);
  ResistanceMatrix om = resistance_matrix(k2);
  CHECK_THROWS_WITH_AS(majorization_bounds(k2, om), doctest::Contains("SizeTooSmall"), Error);
  CyclicityReport rep = analyze(k2);
  CHECK(rep.bounds.size() == 3);  // degree, regular, max-degree rows only
  CHECK(rep.cyclicity == doctest::Approx(0.0).epsilon(kTol));
  CHECK(row(rep, "degree_bound").bound == 0.0);
  CHECK(row(rep, "degree_bound").tight);
}

TEST_CASE("report serialization schema") {
  nlohmann::ordered_json j = to_json(analyze(cycle(4)));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "m", "mu", "cyclicity", "foster_residual",
                                         "flags", "bounds"});
  CHECK(j["flags"].size() == 3);
  CHECK(j["bounds"].size() == 8);
  std::vector<std::string> row_keys;
  for (auto it = j["bounds"][0].begin(); it != j["bounds"][0].end(); ++it)
    row_keys.push_back(it.key());
  CHECK(row_keys ==
        std::vector<std::string>{"name", "kind", "bound", "actual", "slack", "tight"});
  CHECK(j["bounds"][0]["name"] == "degree_bound");
  CHECK(j["n"] == 4);
  CHECK(j["flags"]["is_electrically_edge_equivalent"] == true);

  nlohmann::ordered_json d =
      to_json(edge_addition_delta(path(3), resistance_matrix(path(3)), 0, 2), 1e-7);
  CHECK(d["upper_tight"] == true);
  CHECK(d["term_existing_edges"].size() == 2);
}
