#include "hwiener/enumeration.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <string>
#include <unordered_set>

#include "hwiener/errors.hpp"

namespace hwiener {

namespace {

// Standard decoding: repeatedly join the smallest current leaf to the next
// sequence label.
void decode_into(int n, std::span<const Vertex> seq, std::vector<Edge>& edges) {
  edges.clear();
  std::vector<int> degree(n, 1);
  for (Vertex x : seq) ++degree[x];
  for (Vertex x : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    --degree[leaf];
    --degree[x];
  }
  Vertex a = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
        break;
      }
    }
  }
}

void check_cap(int n, int cap) {
  if (cap > kHardCap) {
    throw CapExceeded("enumeration cap " + std::to_string(cap) + " exceeds the hard ceiling " +
                      std::to_string(kHardCap));
  }
  if (n > cap) {
    throw CapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  }
}

void check_shard(const Shard& s) {
  if (s.count < 1 || s.index < 0 || s.index >= s.count) {
    throw DomainError("shard " + std::to_string(s.index) + "/" + std::to_string(s.count) + " is invalid");
  }
}

}  // namespace

Graph prufer_to_tree(const PruferSequence& p) {
  if (p.n < 2) throw DomainError("a labeled tree needs n >= 2");
  if (static_cast<int>(p.seq.size()) != p.n - 2) {
    throw DomainError("Prüfer sequence for n = " + std::to_string(p.n) + " must have length " +
                      std::to_string(p.n - 2));
  }
  for (Vertex x : p.seq) {
    if (x < 0 || x >= p.n) throw DomainError("Prüfer label " + std::to_string(x) + " out of range");
  }
  std::vector<Edge> edges;
  decode_into(p.n, p.seq, edges);
  return Graph(p.n, edges);
}

std::uint64_t labeled_tree_count(int n) {
  if (n < 2) throw DomainError("labeled_tree_count needs n >= 2");
  std::uint64_t total = 1;
  for (int i = 0; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);
  return total;
}

PruferSequence prufer_from_index(int n, std::uint64_t index) {
  if (index >= labeled_tree_count(n)) throw DomainError("Prüfer index out of range");
  PruferSequence p{n, std::vector<Vertex>(n - 2)};
  for (int i = n - 3; i >= 0; --i) {
    p.seq[i] = static_cast<Vertex>(index % n);
    index /= n;
  }
  return p;
}

Shard Shard::parse(std::string_view text) {
  const auto slash = text.find('/');
  Shard s;
  auto read = [&](std::string_view tok, int& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size() && !tok.empty();
  };
  if (slash == std::string_view::npos || !read(text.substr(0, slash), s.index) ||
      !read(text.substr(slash + 1), s.count)) {
    throw DomainError("shard must look like i/k, got '" + std::string(text) + "'");
  }
  check_shard(s);
  return s;
}

void for_each_labeled_tree(int n, const Shard& shard, const std::function<void(const Graph&)>& visit) {
  check_shard(shard);
  const std::uint64_t total = labeled_tree_count(n);
  std::vector<Edge> edges;
  for (std::uint64_t idx = shard.index; idx < total; idx += shard.count) {
    const auto p = prufer_from_index(n, idx);
    decode_into(n, p.seq, edges);
    visit(Graph(n, edges));
  }
}

void for_each_unicyclic_labeled(int n, const EnumerationOptions& options,
                                const std::function<void(const Graph&)>& visit) {
  if (n < 3) throw DomainError("unicyclic graphs need n >= 3");
  check_cap(n, options.cap);
  check_shard(options.shard);

  const std::uint64_t total = labeled_tree_count(n);
  std::vector<Edge> tree;
  std::vector<Edge> with_chord;
  std::array<std::array<bool, kHardCap>, kHardCap> adjacent{};
  std::array<std::array<Vertex, kHardCap>, kHardCap> nbrs{};
  std::array<int, kHardCap> deg{};
  std::array<Vertex, kHardCap> parent{};
  std::array<int, kHardCap> depth{};
  std::array<Vertex, kHardCap> queue{};
  auto key = [n](Vertex a, Vertex b) { return std::min(a, b) * n + std::max(a, b); };

  for (std::uint64_t idx = options.shard.index; idx < total; idx += options.shard.count) {
    const auto p = prufer_from_index(n, idx);
    decode_into(n, p.seq, tree);
    for (int i = 0; i < n; ++i) {
      deg[i] = 0;
      adjacent[i].fill(false);
    }
    for (auto [u, v] : tree) {
      adjacent[u][v] = adjacent[v][u] = true;
      nbrs[u][deg[u]++] = v;
      nbrs[v][deg[v]++] = u;
    }
    // root at 0
    parent[0] = -1;
    depth[0] = 0;
    queue[0] = 0;
    for (int head = 0, tail = 1; head < tail; ++head) {
      const Vertex u = queue[head];
      for (int i = 0; i < deg[u]; ++i) {
        const Vertex w = nbrs[u][i];
        if (w != parent[u]) {
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (adjacent[a][b]) continue;
        // the chord closes the tree path a..b; keep it only if it is the
        // largest edge on that cycle
        const int chord = a * n + b;
        bool largest = true;
        Vertex x = a;
        Vertex y = b;
        while (x != y && largest) {
          if (depth[x] >= depth[y]) {
            largest = key(x, parent[x]) < chord;
            x = parent[x];
          } else {
            largest = key(y, parent[y]) < chord;
            y = parent[y];
          }
        }
        if (!largest) continue;
        with_chord = tree;
        with_chord.emplace_back(a, b);
        visit(Graph(n, with_chord));
      }
    }
  }
}

std::vector<Graph> enumerate_unicyclic_labeled(int n, const EnumerationOptions& options) {
  std::vector<Graph> out;
  for_each_unicyclic_labeled(n, options, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::uint64_t count_unicyclic_labeled(int n, const EnumerationOptions& options) {
  std::uint64_t count = 0;
  for_each_unicyclic_labeled(n, options, [&](const Graph&) { ++count; });
  return count;
}

std::vector<Graph> enumerate_unicyclic_unlabeled(int n, const EnumerationOptions& options) {
  std::vector<Graph> out;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  for_each_unicyclic_labeled(n, options, [&](const Graph& g) {
    if (seen.insert(canonical_form(g)).second) out.push_back(g);
  });
  return out;
}

}  // namespace hwiener
