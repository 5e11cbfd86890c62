#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hwiener {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on the dense vertex set 0..n-1.
//
// Adjacency lists are kept sorted. The only edgeless graph that can be
// constructed is the single vertex (P_1); everything else must carry at
// least one edge.
class Graph {
 public:
  Graph() : adjacency_(1) {}  // single vertex
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // non-increasing

  // Relabels vertex v as perm[v]; perm must be a permutation of 0..n-1.
  Graph relabeled(std::span<const Vertex> perm) const;

  // Returns a copy with edge `remove` replaced by edge `add`.
  Graph rewired(Edge remove, Edge add) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Result of parsing the edge-list text format.
struct ParsedGraph {
  Graph graph;
  // original label of each dense vertex (identity for integer labels)
  std::vector<long long> labels;
};

// Line-oriented edge list: "u v" per line, '#' comment lines, optional
// "n <count>" header. Throws ParseError / ValidationError.
ParsedGraph parse_edge_list(std::string_view text);
ParsedGraph read_edge_list_file(const std::string& path);

// Inverse of parse_edge_list: header line followed by sorted edges.
std::string to_edge_list(const Graph& g);

bool is_connected(const Graph& g);

// Shortest-path distances from v; unreachable vertices are -1.
std::vector<int> reachable_distances(const Graph& g, Vertex v);

// Shortest-path distances from v. Throws DisconnectedError naming an
// unreachable vertex.
std::vector<int> bfs_distances(const Graph& g, Vertex v);

// Number of unordered vertex pairs at each distance.
struct DistanceDistribution {
  int n = 0;
  // counts[k] = pairs at distance k; counts[0] is always 0.
  std::vector<std::uint64_t> counts;

  int diameter() const noexcept { return counts.empty() ? 0 : static_cast<int>(counts.size()) - 1; }
  std::uint64_t at(int k) const noexcept {
    return k >= 0 && k < static_cast<int>(counts.size()) ? counts[k] : 0;
  }
  std::uint64_t total_pairs() const noexcept;

  friend bool operator==(const DistanceDistribution&, const DistanceDistribution&) = default;
};

DistanceDistribution distance_distribution(const Graph& g);

int diameter(const Graph& g);

// Unicyclic <=> connected with exactly n edges.
bool is_unicyclic(const Graph& g);

struct CycleInfo {
  std::vector<Vertex> vertices;  // in cyclic order, starting at the smallest label

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  bool contains(Vertex v) const;
};

// Unique cycle of a unicyclic graph, found by repeatedly stripping leaves.
CycleInfo find_cycle(const Graph& g);

struct MajorVertexReport {
  std::vector<Vertex> major;                     // degree >= 3, ascending
  std::map<Vertex, std::vector<Vertex>> terminal;  // major -> its terminal vertices
  std::vector<Vertex> exterior_major_deg_gt1;    // M(G), ascending

  int terminal_degree(Vertex v) const;
  bool is_exterior(Vertex v) const { return terminal_degree(v) > 0; }
};

MajorVertexReport major_vertex_report(const Graph& g);

// Split of a unicyclic graph at v: T_v is the tree hanging at v (v included),
// G_v everything else (the side that meets the cycle).
struct TailDecomposition {
  std::vector<Vertex> rest;  // G_v, ascending
  std::vector<Vertex> tail;  // T_v, ascending
};

TailDecomposition tail_decomposition(const Graph& g, Vertex v);

}  // namespace hwiener
