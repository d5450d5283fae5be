#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "cyclicity/graph.hpp"

using namespace cyclicity;

namespace {

// Number of connected labeled graphs via the complement counting recurrence:
// c(n) = 2^C(n,2) - sum_{k=1}^{n-1} C(n-1, k-1) c(k) 2^C(n-k,2).
// Independent of the enumerator under test.
std::int64_t connected_count(int n) {
  auto choose2 = [](std::int64_t k) { return k * (k - 1) / 2; };
  std::vector<std::int64_t> binom(n + 1), c(n + 1, 0);
  c[1] = 1;
  for (int i = 2; i <= n; ++i) {
    std::int64_t total = std::int64_t(1) << choose2(i);
    std::int64_t sub = 0;
    std::int64_t b = 1;  // C(i-1, k-1) built incrementally
    for (int k = 1; k < i; ++k) {
      sub += b * c[k] * (std::int64_t(1) << choose2(i - k));
      b = b * (i - 1 - (k - 1)) / k;
    }
    c[i] = total - sub;
  }
  return c[n];
}

int checked_degree_sum(const Graph& g) {
  int sum = 0;
  for (int v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
  return sum;
}

}  // namespace

TEST_CASE("construction canonicalizes and validates") {
  Graph g(4, {{2, 0}, {3, 1}, {0, 1}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 1);
  CHECK(g.edges()[1].u == 0);
  CHECK(g.edges()[1].v == 2);
  CHECK(g.edges()[2].u == 1);
  CHECK(g.edges()[2].v == 3);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.unit_weighted());

  CHECK_THROWS_WITH_AS(Graph(3, {{0, 0}}), doctest::Contains("SelfLoop"), Error);
  CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}, {1, 0}}), doctest::Contains("DuplicateEdge"), Error);
  CHECK_THROWS_WITH_AS(Graph(3, {{0, 3}}), doctest::Contains("VertexOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}}, {0.0}), doctest::Contains("NonpositiveWeight"), Error);
  CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}}, {-2.0}), doctest::Contains("NonpositiveWeight"), Error);
  CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}}, {1.0, 1.0}), doctest::Contains("InvalidParams"), Error);
}

TEST_CASE("weighted flag and weight lookup") {
  Graph g(3, {{0, 1}, {1, 2}}, {1.0, 2.5});
  CHECK_FALSE(g.unit_weighted());
  CHECK(g.weight(1, 2) == 2.5);
  CHECK(g.weight(2, 1) == 2.5);
  CHECK_THROWS_AS(g.weight(0, 2), Error);
  Graph unit(3, {{0, 1}, {1, 2}}, {1.0, 1.0});
  CHECK(unit.unit_weighted());
}

TEST_CASE("generator shapes") {
  CHECK(path(1).edge_count() == 0);
  CHECK(path(5).edge_count() == 4);
  CHECK(cycle(5).edge_count() == 5);
  CHECK(complete(6).edge_count() == 15);
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(petersen().vertex_count() == 10);
  CHECK(petersen().edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(petersen().degree(v) == 3);

  CHECK_THROWS_WITH_AS(path(0), doctest::Contains("SizeTooSmall"), Error);
  CHECK_THROWS_WITH_AS(cycle(2), doctest::Contains("SizeTooSmall"), Error);
  CHECK_THROWS_WITH_AS(complete_bipartite(0, 3), doctest::Contains("SizeTooSmall"), Error);
}

TEST_CASE("circulant jumps") {
  Graph g = circulant(8, {1, 4});
  CHECK(g.edge_count() == 12);  // 8 from jump 1, 4 from the antipodal jump
  CHECK(is_regular(g));
  CHECK(g.degree(0) == 3);
  Graph c5 = circulant(5, {1});
  CHECK(c5 == cycle(5));
  CHECK(circulant(7, {1, 2, 3}) == complete(7));
  CHECK_THROWS_WITH_AS(circulant(8, {0}), doctest::Contains("InvalidJump"), Error);
  CHECK_THROWS_WITH_AS(circulant(8, {5}), doctest::Contains("InvalidJump"), Error);
  CHECK_THROWS_WITH_AS(circulant(8, {2, 2}), doctest::Contains("InvalidJump"), Error);
}

TEST_CASE("paley graphs") {
  Graph p5 = paley(5);
  CHECK(p5 == cycle(5));  // squares mod 5 are {1, 4}
  Graph p13 = paley(13);
  CHECK(p13.vertex_count() == 13);
  CHECK(p13.edge_count() == 39);
  CHECK(is_regular(p13));
  CHECK(p13.degree(0) == 6);
  // Self-complementary up to relabeling: same size as the complement.
  CHECK(complement(p13).edge_count() == 39);
  Graph p17 = paley(17);
  CHECK(p17.edge_count() == 17 * 8 / 2);
  CHECK(is_regular(p17));

  CHECK_THROWS_WITH_AS(paley(9), doctest::Contains("NotPrime"), Error);
  CHECK_THROWS_WITH_AS(paley(15), doctest::Contains("NotPrime"), Error);
  CHECK_THROWS_WITH_AS(paley(7), doctest::Contains("NotCongruentOneModFour"), Error);
  CHECK_THROWS_WITH_AS(paley(11), doctest::Contains("NotCongruentOneModFour"), Error);
}

TEST_CASE("complement pairs off with itself") {
  for (int n : {1, 2, 5, 8}) {
    Graph g = random_connected(n, 0.6, 99 + n);
    Graph gb = complement(g);
    CHECK(g.edge_count() + gb.edge_count() == n * (n - 1) / 2);
    CHECK(complement(gb) == g);
  }
  CHECK(complement(complete(5)).edge_count() == 0);
  CHECK_THROWS_WITH_AS(complement(Graph(2, {{0, 1}}, {2.0})),
                       doctest::Contains("WeightedInput"), Error);
}

TEST_CASE("connectivity, trees, bridges") {
  CHECK(is_connected(Graph(0, {})));
  CHECK(is_connected(Graph(1, {})));
  CHECK_FALSE(is_connected(Graph(2, {})));
  CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(path(6)));
  CHECK(is_tree(path(6)));
  CHECK_FALSE(is_tree(cycle(6)));
  CHECK(is_complete(complete(4)));
  CHECK_FALSE(is_complete(cycle(4)));
  CHECK(max_degree(complete_bipartite(2, 5)) == 5);
  CHECK(cyclomatic_number(cycle(7)) == 1);
  CHECK(cyclomatic_number(complete(5)) == 6);
  CHECK(cyclomatic_number(path(4)) == 0);
  CHECK_THROWS_WITH_AS(cyclomatic_number(Graph(2, {})), doctest::Contains("Disconnected"),
                       Error);

  CHECK(cut_edges(cycle(5)).empty());
  auto tree_bridges = cut_edges(path(4));
  REQUIRE(tree_bridges.size() == 3);
  CHECK(tree_bridges[0] == std::make_pair(0, 1));
  // Triangle with a pendant: only the pendant edge is a bridge.
  Graph flag(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  auto bridges = cut_edges(flag);
  REQUIRE(bridges.size() == 1);
  CHECK(bridges[0] == std::make_pair(2, 3));
}

TEST_CASE("bipartition sizes") {
  auto parts = bipartition_sizes(complete_bipartite(3, 4));
  REQUIRE(parts.has_value());
  CHECK(*parts == std::make_pair(3, 4));
  CHECK(bipartition_sizes(path(5)).has_value());
  CHECK_FALSE(bipartition_sizes(cycle(5)).has_value());
  CHECK(bipartition_sizes(cycle(6)).has_value());
  CHECK_FALSE(bipartition_sizes(Graph(4, {{0, 1}, {2, 3}})).has_value());
}

TEST_CASE("exhaustive enumeration matches the counting recurrence") {
  std::map<int, std::int64_t> seen;
  for (int n = 3; n <= 6; ++n) {
    std::int64_t count = 0;
    std::int64_t degree_total = 0;
    for_each_connected(n, [&](const Graph& g) {
      ++count;
      CHECK(g.vertex_count() == n);
      degree_total += checked_degree_sum(g) - 2 * g.edge_count();
    });
    CHECK(degree_total == 0);  // handshake identity on every visit
    seen[n] = count;
  }
  CHECK(seen[3] == 4);
  CHECK(seen[4] == 38);
  CHECK(seen[5] == 728);
  CHECK(seen[6] == 26704);
  for (int n = 3; n <= 6; ++n) CHECK(seen[n] == connected_count(n));
  CHECK(connected_count(7) == 1866256);  // enumerated in the certification suite

  CHECK_THROWS_WITH_AS(for_each_connected(2, [](const Graph&) {}),
                       doctest::Contains("SizeTooSmall"), Error);
  CHECK_THROWS_WITH_AS(for_each_connected(8, [](const Graph&) {}),
                       doctest::Contains("SizeTooLarge"), Error);
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
  std::vector<std::string> first, second;
  for_each_connected(4, [&](const Graph& g) { first.push_back(to_edge_list(g)); });
  for_each_connected(4, [&](const Graph& g) { second.push_back(to_edge_list(g)); });
  CHECK(first == second);
  std::set<std::string> unique(first.begin(), first.end());
  CHECK(unique.size() == first.size());
}

TEST_CASE("random connected sampling") {
  Graph a = random_connected(12, 0.3, 7);
  Graph b = random_connected(12, 0.3, 7);
  CHECK(a == b);  // same seed, same graph
  CHECK(is_connected(a));
  Graph c = random_connected(12, 0.3, 8);
  CHECK_FALSE(a == c);
  CHECK(random_connected(1, 0.0, 1).vertex_count() == 1);
  CHECK_THROWS_WITH_AS(random_connected(0, 0.5, 1), doctest::Contains("SizeTooSmall"), Error);
  CHECK_THROWS_WITH_AS(random_connected(5, 1.5, 1), doctest::Contains("InvalidParams"), Error);
  CHECK_THROWS_WITH_AS(random_connected(20, 0.0, 1), doctest::Contains("GiveUp"), Error);
}

TEST_CASE("edge list round trip") {
  Graph g = petersen();
  std::string text = to_edge_list(g);
  CHECK(parse_edge_list(text) == g);

  Graph w(3, {{0, 1}, {1, 2}}, {0.5, 1.75});
  std::string wt = to_edge_list(w);
  CHECK(parse_edge_list(wt) == w);
  CHECK(wt.find("0.5") != std::string::npos);

  std::string commented = "# sample\n3 2\n# middle\n1 0\n1 2\n";
  Graph parsed = parse_edge_list(commented);
  CHECK(parsed == path(3));
  CHECK(to_edge_list(parsed) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("edge list parse failures") {
  auto code_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidParams;
  };
  CHECK(code_of("") == ErrorCode::ParseError);
  CHECK(code_of("2\n") == ErrorCode::ParseError);
  CHECK(code_of("2 1\n") == ErrorCode::ParseError);              // missing edge line
  CHECK(code_of("2 1\n0 1\n0 1\n") == ErrorCode::ParseError);    // extra edge line
  CHECK(code_of("2 1\n0 0\n") == ErrorCode::ParseError);         // self loop
  CHECK(code_of("2 1\n0 1\n# ok\n 0 1\n") == ErrorCode::ParseError);
  CHECK(code_of("2 1\n0 2\n") == ErrorCode::ParseError);         // out of range
  CHECK(code_of("2 1\n0 1 x\n") == ErrorCode::ParseError);
  CHECK(code_of("2 1\n0 1 1.0 9\n") == ErrorCode::ParseError);
  CHECK(code_of("a b\n") == ErrorCode::ParseError);
  // Valid inputs for contrast.
  CHECK(parse_edge_list("1 0\n").vertex_count() == 1);
  CHECK(parse_edge_list("2 1\n0 1 2.0\n").weight(0, 1) == 2.0);
}
