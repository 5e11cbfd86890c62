#include "hwiener/constructors.hpp"

#include <string>

#include "hwiener/errors.hpp"

namespace hwiener {

namespace {
void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}
}  // namespace

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 0);
  return Graph(n, edges);
}

Graph star(int n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph j_graph(int n) {
  require(n >= 4, "J_n needs n >= 4");
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  for (Vertex v = 3; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph g_rn(int r, int n) {
  require(r >= 3 && r <= n, "G_{r,n} needs 3 <= r <= n (got r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < r; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(r - 1, 0);
  Vertex prev = 0;
  for (Vertex v = r; v < n; ++v) {
    edges.emplace_back(prev, v);
    prev = v;
  }
  return Graph(n, edges);
}

}  // namespace hwiener
