#include "hwiener/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace hwiener {

namespace {

// Colour refinement seeded with (degree, distance profile). The resulting
// colour indices are ordered by isomorphism-invariant signatures, so they can
// be compared across graphs.
std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> seed(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto dist = reachable_distances(g, v);
    std::vector<int> profile(n + 1, 0);
    for (int d : dist) ++profile[d < 0 ? n : d];
    seed[v].push_back(g.degree(v));
    seed[v].insert(seed[v].end(), profile.begin(), profile.end());
  }
  auto rank = [n](const std::vector<std::vector<int>>& sigs) {
    std::vector<std::vector<int>> sorted(sigs);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) {
      colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) - sorted.begin());
    }
    return std::pair{colors, static_cast<int>(sorted.size())};
  };
  auto [colors, classes] = rank(seed);
  while (classes < n) {
    std::vector<std::vector<int>> sigs(n);
    for (Vertex v = 0; v < n; ++v) {
      sigs[v].push_back(colors[v]);
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(colors[w]);
      std::sort(nb.begin(), nb.end());
      sigs[v].insert(sigs[v].end(), nb.begin(), nb.end());
    }
    auto [next, next_classes] = rank(sigs);
    if (next_classes == classes) break;
    colors = std::move(next);
    classes = next_classes;
  }
  return colors;
}

class Search {
 public:
  Search(const Graph& g, const std::vector<int>& colors) : g_(g), n_(g.order()) {
    std::vector<Vertex> order(n_);
    for (Vertex v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return colors[a] < colors[b]; });
    cell_of_position_.resize(n_);
    for (int p = 0; p < n_; ++p) cell_of_position_[p] = colors[order[p]];
    by_color_.resize(n_);
    for (Vertex v : order) by_color_[colors[v]].push_back(v);
    current_.resize(n_);
    rows_.resize(n_);
    used_.assign(n_, false);
    below_.assign(n_ + 1, false);
  }

  std::vector<Vertex> run() {
    descend(0);
    return best_order_;
  }

 private:
  // Row p of the lower-triangular adjacency string; column 0 is the most
  // significant bit so integer order matches bit-string order.
  std::uint64_t row(int p) const {
    std::uint64_t bits = 0;
    for (int q = 0; q < p; ++q) bits = (bits << 1) | (g_.has_edge(current_[p], current_[q]) ? 1u : 0u);
    return bits;
  }

  // below_[p]: the prefix of rows 0..p-1 is strictly smaller than the best
  // order found so far. A new best is a completion of the current prefix, so
  // recording it resets every level to "equal".
  void descend(int p) {
    if (p == n_) {
      if (best_order_.empty() || below_[p]) {
        best_order_ = current_;
        best_rows_ = rows_;
        std::fill(below_.begin(), below_.end(), false);
      }
      return;
    }
    for (Vertex v : by_color_[cell_of_position_[p]]) {
      if (used_[v]) continue;
      current_[p] = v;
      rows_[p] = row(p);
      below_[p + 1] = below_[p];
      if (!below_[p] && !best_order_.empty()) {
        if (rows_[p] > best_rows_[p]) continue;
        below_[p + 1] = rows_[p] < best_rows_[p];
      }
      used_[v] = true;
      descend(p + 1);
      used_[v] = false;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> cell_of_position_;
  std::vector<std::vector<Vertex>> by_color_;
  std::vector<Vertex> current_;
  std::vector<std::uint64_t> rows_;
  std::vector<bool> used_;
  std::vector<bool> below_;
  std::vector<Vertex> best_order_;
  std::vector<std::uint64_t> best_rows_;
};

}  // namespace

std::vector<Vertex> canonical_order(const Graph& g) {
  if (g.order() > 64) throw std::invalid_argument("canonical form supports at most 64 vertices");
  return Search(g, refined_colors(g)).run();
}

CanonicalForm canonical_form(const Graph& g) {
  const auto order = canonical_order(g);
  std::vector<Vertex> position(g.order());
  for (int p = 0; p < g.order(); ++p) position[order[p]] = p;
  CanonicalForm form;
  form.n = g.order();
  for (auto [u, v] : g.edges()) {
    const Vertex a = position[u];
    const Vertex b = position[v];
    form.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(form.edges.begin(), form.edges.end());
  return form;
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

std::string CanonicalForm::to_string() const {
  std::string out = "n:" + std::to_string(n) + ";";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  return out;
}

CanonicalForm CanonicalForm::parse(const std::string& text) {
  const auto semi = text.find(';');
  if (text.rfind("n:", 0) != 0 || semi == std::string::npos) {
    throw std::invalid_argument("bad canonical form '" + text + "'");
  }
  CanonicalForm f;
  f.n = std::stoi(text.substr(2, semi - 2));
  std::size_t pos = semi + 1;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const auto item = text.substr(pos, comma - pos);
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("bad edge '" + item + "' in canonical form");
    f.edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    pos = comma + 1;
  }
  return f;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::size_t h = static_cast<std::size_t>(f.n) * 0x9e3779b97f4a7c15ULL;
  for (auto [u, v] : f.edges) {
    h ^= static_cast<std::size_t>(u * 131 + v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace hwiener
