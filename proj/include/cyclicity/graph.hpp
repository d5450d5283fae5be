#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclicity/error.hpp"

namespace cyclicity {

// Canonical form: u < v.
struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

// Simple undirected graph with positive edge weights (conductances).
// Immutable after construction. Edges are stored with u < v, sorted
// lexicographically, so equal graphs serialize identically.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        const std::vector<double>& weights = {});

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(int u, int v) const;
  // Weight of an existing edge; throws VertexOutOfRange / InvalidParams.
  double weight(int u, int v) const;
  // True when every edge weight is exactly 1.
  bool unit_weighted() const noexcept { return unit_; }

  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  bool unit_ = true;
};

// Generators. All vertices are labeled 0..n-1.
Graph path(int n);               // n >= 1
Graph cycle(int n);              // n >= 3
Graph complete(int n);           // n >= 1
Graph complete_bipartite(int n1, int n2);  // n1, n2 >= 1
// Connects i to i +- j (mod n) for each jump j; jumps must satisfy
// 1 <= j <= n/2 and be distinct.
Graph circulant(int n, const std::vector<int>& jumps);
// Quadratic-residue graph on GF(q); q must be prime and = 1 (mod 4).
Graph paley(int q);
Graph petersen();
// Random G(n, p) conditioned on connectivity via rejection sampling;
// throws GiveUp after a fixed attempt budget.
Graph random_connected(int n, double edge_probability, std::uint64_t seed);

Graph complement(const Graph& g);  // unit weights only

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);
bool is_regular(const Graph& g);
int max_degree(const Graph& g);
// m - n + 1 (number of independent cycles); requires a connected graph.
int cyclomatic_number(const Graph& g);
// Bridge edges in canonical order.
std::vector<std::pair<int, int>> cut_edges(const Graph& g);
// Part sizes when g is connected and bipartite.
std::optional<std::pair<int, int>> bipartition_sizes(const Graph& g);

// Visits every connected labeled graph on n vertices (3..7) exactly once,
// in ascending edge-mask order with pairs ranked lexicographically.
void for_each_connected(int n, const std::function<void(const Graph&)>& visit);
inline constexpr int kMaxExhaustiveVertices = 7;

// Text edge-list format: header "n m", one "u v [w]" line per edge,
// '#' starts a comment line. Output is canonical (u < v, sorted,
// weights printed only when some weight differs from 1).
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace cyclicity
