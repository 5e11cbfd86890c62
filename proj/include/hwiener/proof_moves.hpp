#pragma once

#include <array>
#include <vector>

#include "hwiener/graph.hpp"
#include "hwiener/index_value.hpp"
#include "hwiener/weights.hpp"

namespace hwiener {

enum class MoveKind { TerminalMerge, TailRebalance };

// One branch relocation. For TerminalMerge the vertices are (w, u1, u2); for
// TailRebalance (v1, v2) with v1 the vertex whose tail is cut.
struct ProofMove {
  MoveKind kind;
  std::vector<Vertex> vertices;
  Edge removed;
  Edge added;
};

// Detach the branch from w to its terminal vertex u1 and hang it beyond the
// terminal vertex u2 of the same major vertex w. Vertex labels of the branch
// are kept. Throws DomainError when w is not major or u1, u2 are not two
// distinct terminal vertices of w.
Graph apply_terminal_merge(const Graph& g, Vertex w, Vertex u1, Vertex u2);

// All valid (w, u1, u2) triples, lexicographically ordered.
std::vector<std::array<Vertex, 3>> terminal_merge_candidates(const Graph& g);

// Cycle-tail measurements for a degree-3 cycle vertex: tail length l and
// D = sum of distances from v to the vertices outside both tails.
struct TailMeasure {
  Vertex v;
  int length;
  long long outside_distance;
};

// Rebalances the tails at cycle vertices a and b (both of degree 3, all
// off-cycle vertices of degree <= 2). If one vertex is more central (smaller
// D) but carries the longer tail, the surplus is moved to the other tail;
// otherwise the tail at the vertex with (D, l, label) smallest is moved
// entirely to the end of the other tail.
ProofMove plan_tail_rebalance(const Graph& g, Vertex a, Vertex b);
Graph apply_move(const Graph& g, const ProofMove& move);

struct SearchStep {
  ProofMove move;
  IndexValue before;
  IndexValue after;
};

struct SearchResult {
  Graph graph;
  std::vector<SearchStep> steps;
};

// Applies TerminalMerge (smallest candidate first) until none applies, then
// TailRebalance on the two smallest degree-3 cycle vertices until at most
// one remains. The result is some G_{r,n}. h must be strictly increasing.
SearchResult local_search_max(const Graph& g0, const WeightFunction& h);

}  // namespace hwiener
