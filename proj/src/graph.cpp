#include "hwiener/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

#include "hwiener/errors.hpp"

namespace hwiener {

namespace {

constexpr long long kMaxVertices = 1 << 20;

std::string edge_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_label(std::string_view tok, std::size_t line) {
  long long value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  if (value < 0) throw ParseError(line, "negative vertex label " + std::string(tok));
  if (value >= kMaxVertices) throw ParseError(line, "vertex label too large: " + std::string(tok));
  return value;
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 1) throw ValidationError("graph needs at least one vertex");
  adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ValidationError("edge " + edge_str(u, v) + " has an endpoint outside 0.." +
                            std::to_string(n - 1));
    }
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    if (auto dup = std::adjacent_find(adj.begin(), adj.end()); dup != adj.end()) {
      const Vertex owner = static_cast<Vertex>(&adj - adjacency_.data());
      throw ValidationError("duplicate edge " + edge_str(std::min(owner, *dup), std::max(owner, *dup)));
    }
  }
  edge_count_ = edges.size();
  if (edge_count_ == 0 && n > 1) throw ValidationError("graph has no edges");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> deg;
  deg.reserve(adjacency_.size());
  for (const auto& adj : adjacency_) deg.push_back(static_cast<int>(adj.size()));
  std::sort(deg.rbegin(), deg.rend());
  return deg;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order()) throw DomainError("permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (Vertex p : perm) {
    if (p < 0 || p >= order() || seen[p]) throw DomainError("not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> mapped;
  mapped.reserve(edge_count_);
  for (auto [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
  return Graph(order(), mapped);
}

Graph Graph::rewired(Edge remove, Edge add) const {
  if (!has_edge(remove.first, remove.second)) {
    throw DomainError("edge " + edge_str(remove.first, remove.second) + " not present");
  }
  auto es = edges();
  const Edge key{std::min(remove.first, remove.second), std::max(remove.first, remove.second)};
  es.erase(std::find(es.begin(), es.end(), key));
  es.push_back(add);
  return Graph(order(), es);
}

ParsedGraph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  long long header_n = -1;
  long long max_label = -1;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto toks = split_ws(line);
    if (toks.size() != 2) throw ParseError(line_no, "expected two fields, got " + std::to_string(toks.size()));
    if (toks[0] == "n") {
      if (header_n >= 0) throw ParseError(line_no, "duplicate 'n' header");
      header_n = parse_label(toks[1], line_no);
      if (header_n < 1) throw ParseError(line_no, "vertex count must be positive");
      continue;
    }
    const long long u = parse_label(toks[0], line_no);
    const long long v = parse_label(toks[1], line_no);
    max_label = std::max({max_label, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (edges.empty()) throw ValidationError("edge list contains no edges");
  long long n = max_label + 1;
  if (header_n >= 0) {
    if (header_n < n) {
      throw ValidationError("header declares " + std::to_string(header_n) + " vertices but label " +
                            std::to_string(max_label) + " appears");
    }
    n = header_n;
  }
  ParsedGraph out{Graph(static_cast<int>(n), edges), {}};
  out.labels.resize(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) out.labels[i] = i;
  return out;
}

ParsedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::vector<int> reachable_distances(const Graph& g, Vertex v) {
  std::vector<int> dist(g.order(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist.at(v) = 0;
  queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex v) {
  auto dist = reachable_distances(g, v);
  if (auto it = std::find(dist.begin(), dist.end(), -1); it != dist.end()) {
    const int u = static_cast<int>(it - dist.begin());
    throw DisconnectedError(u, "graph is disconnected: vertex " + std::to_string(u) +
                                   " is unreachable from vertex " + std::to_string(v));
  }
  return dist;
}

bool is_connected(const Graph& g) {
  const auto dist = reachable_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::uint64_t DistanceDistribution::total_pairs() const noexcept {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

DistanceDistribution distance_distribution(const Graph& g) {
  const int n = g.order();
  DistanceDistribution out;
  out.n = n;
  out.counts.assign(1, 0);
  std::vector<int> dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue[0] = s;
    std::size_t tail = 1;
    for (std::size_t head = 0; head < tail; ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (static_cast<int>(tail) != n) {
      const auto it = std::find(dist.begin(), dist.end(), -1);
      const int u = static_cast<int>(it - dist.begin());
      throw DisconnectedError(u, "graph is disconnected: vertex " + std::to_string(u) +
                                     " is unreachable from vertex " + std::to_string(s));
    }
    // each unordered pair once: only count partners with a larger label
    for (Vertex t = s + 1; t < n; ++t) {
      const auto d = static_cast<std::size_t>(dist[t]);
      if (d >= out.counts.size()) out.counts.resize(d + 1, 0);
      ++out.counts[d];
    }
  }
  return out;
}

int diameter(const Graph& g) { return distance_distribution(g).diameter(); }

bool is_unicyclic(const Graph& g) {
  return static_cast<int>(g.edge_count()) == g.order() && is_connected(g);
}

bool CycleInfo::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

CycleInfo find_cycle(const Graph& g) {
  if (!is_unicyclic(g)) throw DomainError("find_cycle: graph is not unicyclic");
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    removed[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
    }
  }
  CycleInfo info;
  Vertex start = 0;
  while (removed[start]) ++start;
  // walk the survivors, stepping first toward the smaller neighbour
  Vertex prev = -1;
  Vertex cur = start;
  do {
    info.vertices.push_back(cur);
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (!removed[w] && w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start);
  return info;
}

int MajorVertexReport::terminal_degree(Vertex v) const {
  const auto it = terminal.find(v);
  return it == terminal.end() ? 0 : static_cast<int>(it->second.size());
}

MajorVertexReport major_vertex_report(const Graph& g) {
  MajorVertexReport report;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3) report.major.push_back(v);
  }
  if (report.major.empty()) return report;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 1) continue;
    const auto dist = reachable_distances(g, u);
    Vertex best = -1;
    int best_d = -1;
    bool tie = false;
    for (Vertex m : report.major) {
      const int d = dist[m];
      if (d < 0) continue;
      if (best < 0 || d < best_d) {
        best = m;
        best_d = d;
        tie = false;
      } else if (d == best_d) {
        tie = true;
      }
    }
    if (best >= 0 && !tie) report.terminal[best].push_back(u);
  }
  for (const auto& [m, ends] : report.terminal) {
    if (ends.size() > 1) report.exterior_major_deg_gt1.push_back(m);
  }
  return report;
}

TailDecomposition tail_decomposition(const Graph& g, Vertex v) {
  const auto cycle = find_cycle(g);
  const int n = g.order();
  if (v < 0 || v >= n) throw DomainError("vertex " + std::to_string(v) + " out of range");
  // parent pointers toward the cycle
  std::vector<Vertex> parent(n, -1);
  std::vector<bool> on_cycle(n, false);
  std::queue<Vertex> q;
  for (Vertex c : cycle.vertices) {
    on_cycle[c] = true;
    parent[c] = c;
    q.push(c);
  }
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] < 0) {
        parent[w] = u;
        q.push(w);
      }
    }
  }
  TailDecomposition out;
  for (Vertex u = 0; u < n; ++u) {
    Vertex x = u;
    bool through_v = (x == v);
    while (!on_cycle[x] && !through_v) {
      x = parent[x];
      through_v = (x == v);
    }
    (through_v ? out.tail : out.rest).push_back(u);
  }
  return out;
}

}  // namespace hwiener
