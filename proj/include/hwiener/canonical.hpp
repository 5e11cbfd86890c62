#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hwiener/graph.hpp"

namespace hwiener {

// Isomorphism-invariant encoding of a graph: its edge list under the
// relabeling that minimises the lower-triangular adjacency bit string.
// Equal forms <=> isomorphic graphs.
struct CanonicalForm {
  int n = 0;
  std::vector<Edge> edges;  // sorted, u < v

  Graph to_graph() const { return Graph(n, edges); }
  // "n:<n>;u-v,u-v,..."
  std::string to_string() const;
  static CanonicalForm parse(const std::string& text);

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

// Vertex order realising the canonical form: order[p] is the original vertex
// placed at canonical position p.
std::vector<Vertex> canonical_order(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace hwiener
