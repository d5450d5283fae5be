#include "cyclicity/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace cyclicity {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n) + ")");
}

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution.
double next_u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string format_weight(double w) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             const std::vector<double>& weights) {
  if (n < 0) throw Error(ErrorCode::InvalidParams, "negative vertex count");
  if (!weights.empty() && weights.size() != edges.size())
    throw Error(ErrorCode::InvalidParams, "weights length does not match edge count");
  n_ = n;
  edges_.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) throw Error(ErrorCode::SelfLoop, "edge " + pair_str(u, v));
    double w = weights.empty() ? 1.0 : weights[k];
    if (!(w > 0.0) || !std::isfinite(w))
      throw Error(ErrorCode::NonpositiveWeight,
                  "edge " + pair_str(u, v) + " has weight " + format_weight(w));
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v, w});
    if (w != 1.0) unit_ = false;
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t k = 1; k < edges_.size(); ++k)
    if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v)
      throw Error(ErrorCode::DuplicateEdge, "edge " + pair_str(edges_[k].u, edges_[k].v));
  adj_.assign(n_, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

double Graph::weight(int u, int v) const {
  check_vertex(u, n_);
  check_vertex(v, n_);
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v),
                             [](const Edge& e, const std::pair<int, int>& p) {
                               return e.u != p.first ? e.u < p.first : e.v < p.second;
                             });
  if (it == edges_.end() || it->u != u || it->v != v)
    throw Error(ErrorCode::InvalidParams, "no edge " + pair_str(u, v));
  return it->weight;
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v, n_);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v, n_);
  return static_cast<int>(adj_[v].size());
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& a = edges_[k];
    const Edge& b = other.edges_[k];
    if (a.u != b.u || a.v != b.v || a.weight != b.weight) return false;
  }
  return true;
}

Graph path(int n) {
  if (n < 1) throw Error(ErrorCode::SizeTooSmall, "path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw Error(ErrorCode::SizeTooSmall, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph complete(int n) {
  if (n < 1) throw Error(ErrorCode::SizeTooSmall, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complete_bipartite(int n1, int n2) {
  if (n1 < 1 || n2 < 1)
    throw Error(ErrorCode::SizeTooSmall, "complete bipartite graph needs both parts >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
  return Graph(n1 + n2, edges);
}

Graph circulant(int n, const std::vector<int>& jumps) {
  if (n < 3) throw Error(ErrorCode::SizeTooSmall, "circulant needs n >= 3");
  std::vector<bool> seen(n / 2 + 1, false);
  for (int j : jumps) {
    if (j < 1 || j > n / 2)
      throw Error(ErrorCode::InvalidJump,
                  "jump " + std::to_string(j) + " not in [1, " + std::to_string(n / 2) + "]");
    if (seen[j]) throw Error(ErrorCode::InvalidJump, "jump " + std::to_string(j) + " repeated");
    seen[j] = true;
  }
  std::vector<std::pair<int, int>> edges;
  for (int j : jumps) {
    int limit = (2 * j == n) ? n / 2 : n;  // antipodal jump yields each edge twice
    for (int i = 0; i < limit; ++i) {
      int u = i, v = (i + j) % n;
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return Graph(n, edges);
}

Graph paley(int q) {
  if (q < 5) throw Error(ErrorCode::SizeTooSmall, "paley graph needs q >= 5");
  for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
    if (q % d == 0) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not prime");
  if (q % 4 != 1)
    throw Error(ErrorCode::NotCongruentOneModFour,
                std::to_string(q) + " is not 1 mod 4");
  std::vector<bool> square(q, false);
  for (long long x = 1; x < q; ++x) square[static_cast<int>(x * x % q)] = true;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (square[v - u]) edges.emplace_back(u, v);
  return Graph(q, edges);
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);       // outer pentagon
    edges.emplace_back(i, i + 5);             // spoke
    edges.emplace_back(i + 5, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, edges);
}

Graph random_connected(int n, double edge_probability, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::SizeTooSmall, "random graph needs n >= 1");
  if (!(edge_probability >= 0.0) || !(edge_probability <= 1.0))
    throw Error(ErrorCode::InvalidParams, "edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (next_u01(rng) < edge_probability) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::GiveUp,
              "no connected sample after " + std::to_string(kAttempts) + " attempts");
}

Graph complement(const Graph& g) {
  if (!g.unit_weighted())
    throw Error(ErrorCode::WeightedInput, "complement is defined for unit weights");
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

bool is_tree(const Graph& g) {
  return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_complete(const Graph& g) {
  long long n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_regular(const Graph& g) {
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != g.degree(0)) return false;
  return true;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int cyclomatic_number(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "cyclomatic number needs a connected graph");
  return g.edge_count() - g.vertex_count() + 1;
}

namespace {

struct BridgeState {
  const Graph* g;
  std::vector<int> disc, low;
  int timer = 0;
  std::vector<std::pair<int, int>> bridges;

  void dfs(int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int w : g->neighbors(v)) {
      if (w == parent) {
        parent = -1;  // skip the tree edge once; simple graphs have no parallels
        continue;
      }
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
      } else {
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridges.emplace_back(std::min(v, w), std::max(v, w));
      }
    }
  }
};

}  // namespace

std::vector<std::pair<int, int>> cut_edges(const Graph& g) {
  int n = g.vertex_count();
  BridgeState st{&g, std::vector<int>(n, -1), std::vector<int>(n, -1), 0, {}};
  for (int v = 0; v < n; ++v)
    if (st.disc[v] < 0) st.dfs(v, -1);
  std::sort(st.bridges.begin(), st.bridges.end());
  return st.bridges;
}

std::optional<std::pair<int, int>> bipartition_sizes(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0 || !is_connected(g)) return std::nullopt;
  std::vector<int> color(n, -1);
  std::vector<int> stack{0};
  color[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        stack.push_back(w);
      } else if (color[w] == color[v]) {
        return std::nullopt;
      }
    }
  }
  int zeros = static_cast<int>(std::count(color.begin(), color.end(), 0));
  return std::make_pair(zeros, n - zeros);
}

void for_each_connected(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 3) throw Error(ErrorCode::SizeTooSmall, "exhaustive enumeration starts at n = 3");
  if (n > kMaxExhaustiveVertices)
    throw Error(ErrorCode::SizeTooLarge,
                "exhaustive enumeration is capped at n = " +
                    std::to_string(kMaxExhaustiveVertices));
  const int pairs = n * (n - 1) / 2;
  std::array<std::pair<int, int>, 21> pair_of{};
  int k = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pair_of[k++] = {u, v};

  std::vector<std::pair<int, int>> edges;
  edges.reserve(pairs);
  const std::uint32_t full = (n >= 1) ? ((1u << n) - 1) : 0;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    std::array<std::uint32_t, 8> adj{};
    for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
      int b = std::countr_zero(bits);
      auto [u, v] = pair_of[b];
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
    }
    std::uint32_t reach = 1;
    for (int round = 0; round < n; ++round)
      for (int v = 0; v < n; ++v)
        if (reach & (1u << v)) reach |= adj[v];
    if (reach != full) continue;
    edges.clear();
    for (std::uint32_t bits = mask; bits; bits &= bits - 1)
      edges.push_back(pair_of[std::countr_zero(bits)]);
    visit(Graph(n, edges));
  }
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<double> weights;
  bool any_weight = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    auto bad = [&](const std::string& why) {
      return Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + why);
    };
    if (n < 0) {
      std::string extra;
      if (!(fields >> n >> m) || (fields >> extra))
        throw bad("expected header 'n m'");
      if (n < 0 || m < 0) throw bad("negative count in header");
      continue;
    }
    long long u, v;
    if (!(fields >> u >> v)) throw bad("expected 'u v [w]'");
    double w = 1.0;
    std::string tail;
    if (fields >> tail) {
      std::size_t used = 0;
      try {
        w = std::stod(tail, &used);
      } catch (const std::exception&) {
        throw bad("bad weight '" + tail + "'");
      }
      if (used != tail.size()) throw bad("bad weight '" + tail + "'");
      any_weight = true;
      std::string extra;
      if (fields >> extra) throw bad("trailing token '" + extra + "'");
    }
    if (static_cast<long long>(edges.size()) == m) throw bad("more edges than the header declares");
    if (u < 0 || u > 1000000000LL || v < 0 || v > 1000000000LL) throw bad("vertex out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    weights.push_back(w);
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "missing header 'n m'");
  if (static_cast<long long>(edges.size()) != m)
    throw Error(ErrorCode::ParseError,
                "header declares " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()));
  try {
    if (any_weight) return Graph(static_cast<int>(n), edges, weights);
    return Graph(static_cast<int>(n), edges);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  const bool weighted = !g.unit_weighted();
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v);
    if (weighted) {
      out += " ";
      out += format_weight(e.weight);
    }
    out += "\n";
  }
  return out;
}

}  // namespace cyclicity
