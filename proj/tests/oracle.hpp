#pragma once

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond the Graph container.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "hwiener/graph.hpp"
#include "hwiener/numeric.hpp"

namespace oracle {

using hwiener::Edge;
using hwiener::Graph;
using hwiener::Int;

constexpr int kInf = 1 << 20;

// Floyd-Warshall over the adjacency matrix.
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// sum over unordered pairs of h(d(u, v)), pair by pair.
inline double pair_sum(const Graph& g, const std::function<double(int)>& h) {
  const auto d = all_pairs(g);
  double total = 0.0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) total += h(d[i][j]);
  return total;
}

inline Int pair_sum_exact(const Graph& g, int power) {
  const auto d = all_pairs(g);
  Int total = 0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) {
      Int t = 1;
      for (int p = 0; p < power; ++p) t *= d[i][j];
      total += t;
    }
  return total;
}

inline std::map<int, int> distance_histogram(const Graph& g) {
  const auto d = all_pairs(g);
  std::map<int, int> out;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) ++out[d[i][j]];
  return out;
}

inline bool connected(const Graph& g) {
  const auto d = all_pairs(g);
  for (int j = 0; j < g.order(); ++j)
    if (d[0][j] >= kInf) return false;
  return true;
}

// Every connected graph with n vertices and n edges, by subset enumeration.
inline std::vector<Graph> all_unicyclic(int n) {
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  std::vector<int> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  const int m = static_cast<int>(slots.size());
  for (;;) {
    std::vector<Edge> edges;
    for (int i : pick) edges.push_back(slots[i]);
    Graph g(n, edges);
    if (connected(g)) out.push_back(g);
    int i = n - 1;
    while (i >= 0 && pick[i] == m - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Isomorphism by trying every permutation.
inline bool isomorphic_brute(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) {
      if (!b.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Cycle length of a unicyclic graph: number of edges lying on some cycle,
// i.e. edges whose removal keeps the graph connected.
inline int cycle_length_brute(const Graph& g) {
  int count = 0;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<Edge> rest;
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (j != i) rest.push_back(edges[j]);
    Graph h(g.order(), rest);
    if (connected(h)) ++count;
  }
  return count;
}

// Random tree: attach vertex i to a uniformly random earlier vertex, then
// shuffle labels. Adding a random non-edge gives a random unicyclic graph.
inline Graph random_unicyclic(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  for (;;) {
    const int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (a == b) continue;
    if (std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
          return (e.first == a && e.second == b) || (e.first == b && e.second == a);
        }) != edges.end())
      continue;
    edges.emplace_back(a, b);
    break;
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return Graph(n, edges);
}

inline Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

}  // namespace oracle
