#include "hwiener/proof_moves.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hwiener/errors.hpp"
#include "hwiener/extremal.hpp"
#include "hwiener/indices.hpp"

namespace hwiener {

namespace {

std::string vstr(Vertex v) { return std::to_string(v); }

// Vertices of the off-cycle tail at cycle vertex v, ordered from v outward.
std::vector<Vertex> tail_path(const Graph& g, const CycleInfo& cycle, Vertex v) {
  std::vector<Vertex> out{v};
  Vertex prev = -1;
  Vertex cur = v;
  for (;;) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (w == prev || (cur == v && cycle.contains(w))) continue;
      if (next >= 0) throw DomainError("tail at vertex " + vstr(v) + " is not a path");
      next = w;
    }
    if (next < 0) break;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace

Graph apply_terminal_merge(const Graph& g, Vertex w, Vertex u1, Vertex u2) {
  const int n = g.order();
  for (Vertex v : {w, u1, u2}) {
    if (v < 0 || v >= n) throw DomainError("vertex " + vstr(v) + " out of range");
  }
  if (!is_connected(g)) throw DomainError("terminal merge needs a connected graph");
  if (u1 == u2) throw DomainError("terminal merge needs two distinct terminal vertices");
  const auto report = major_vertex_report(g);
  if (g.degree(w) < 3) throw DomainError("vertex " + vstr(w) + " is not a major vertex");
  const auto it = report.terminal.find(w);
  auto is_terminal = [&](Vertex u) {
    return it != report.terminal.end() && std::find(it->second.begin(), it->second.end(), u) != it->second.end();
  };
  if (!is_terminal(u1) || !is_terminal(u2)) {
    throw DomainError("vertices " + vstr(u1) + " and " + vstr(u2) + " must both be terminal vertices of " + vstr(w));
  }
  // walk from u1 towards w along the branch
  Vertex prev = -1;
  Vertex cur = u1;
  while (true) {
    Vertex next = -1;
    for (Vertex x : g.neighbors(cur)) {
      if (x != prev) next = x;
    }
    if (next == w) break;
    if (next < 0 || g.degree(next) != 2) throw DomainError("branch from " + vstr(w) + " to " + vstr(u1) + " is not a path");
    prev = cur;
    cur = next;
  }
  return g.rewired({w, cur}, {u2, cur});
}

std::vector<std::array<Vertex, 3>> terminal_merge_candidates(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  const auto report = major_vertex_report(g);
  for (Vertex w : report.exterior_major_deg_gt1) {
    const auto& ends = report.terminal.at(w);
    for (Vertex a : ends) {
      for (Vertex b : ends) {
        if (a != b) out.push_back({w, a, b});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProofMove plan_tail_rebalance(const Graph& g, Vertex a, Vertex b) {
  const auto cycle = find_cycle(g);
  if (a == b) throw DomainError("tail rebalance needs two distinct cycle vertices");
  for (Vertex v : {a, b}) {
    if (v < 0 || v >= g.order() || !cycle.contains(v) || g.degree(v) != 3) {
      throw DomainError("vertex " + vstr(v) + " is not a degree-3 cycle vertex");
    }
  }
  const auto path_a = tail_path(g, cycle, a);
  const auto path_b = tail_path(g, cycle, b);
  std::vector<bool> in_tails(g.order(), false);
  for (Vertex v : path_a) in_tails[v] = true;
  for (Vertex v : path_b) in_tails[v] = true;
  auto measure = [&](Vertex v, const std::vector<Vertex>& path) {
    const auto dist = bfs_distances(g, v);
    long long total = 0;
    for (Vertex x = 0; x < g.order(); ++x) {
      if (!in_tails[x]) total += dist[x];
    }
    return TailMeasure{v, static_cast<int>(path.size()) - 1, total};
  };
  const auto ma = measure(a, path_a);
  const auto mb = measure(b, path_b);

  auto surplus = [&](const TailMeasure& i, const std::vector<Vertex>& pi, const TailMeasure& j,
                     const std::vector<Vertex>& pj) {
    const Vertex cut = pi[j.length];
    const Vertex moved = pi[j.length + 1];
    return ProofMove{MoveKind::TailRebalance, {i.v, j.v}, {cut, moved}, {pj.back(), moved}};
  };
  if (ma.outside_distance < mb.outside_distance && ma.length > mb.length) return surplus(ma, path_a, mb, path_b);
  if (mb.outside_distance < ma.outside_distance && mb.length > ma.length) return surplus(mb, path_b, ma, path_a);

  auto key = [](const TailMeasure& m) { return std::tuple{m.outside_distance, m.length, m.v}; };
  const bool a_first = key(ma) < key(mb);
  const auto& p1 = a_first ? path_a : path_b;
  const auto& p2 = a_first ? path_b : path_a;
  return ProofMove{MoveKind::TailRebalance, {p1.front(), p2.front()}, {p1[0], p1[1]}, {p2.back(), p1[1]}};
}

Graph apply_move(const Graph& g, const ProofMove& move) { return g.rewired(move.removed, move.added); }

SearchResult local_search_max(const Graph& g0, const WeightFunction& h) {
  if (!is_unicyclic(g0)) throw DomainError("local search needs a unicyclic graph");
  if (h.needs_diameter()) throw DomainError("weight " + h.description() + " depends on the graph's diameter");
  const int domain = verification_domain(g0.order());
  if (classify_monotonicity(h, domain) != Monotonicity::StrictlyIncreasing) {
    throw DomainError("local search needs h strictly increasing on 1.." + std::to_string(domain));
  }
  SearchResult result{g0, {}};
  IndexValue current = w_h(g0, h);
  // every move removes a leaf or a degree-3 cycle vertex, or (surplus
  // transfer) makes the next move at the same pair a whole-tail move
  const std::size_t guard = 4 * static_cast<std::size_t>(g0.order()) + 4;
  while (result.steps.size() < guard) {
    std::optional<ProofMove> move;
    if (const auto cands = terminal_merge_candidates(result.graph); !cands.empty()) {
      const auto [w, u1, u2] = cands.front();
      const Graph next = apply_terminal_merge(result.graph, w, u1, u2);
      const auto before = result.graph.edges();
      const auto after = next.edges();
      Edge removed{}, added{};
      std::set_difference(before.begin(), before.end(), after.begin(), after.end(), &removed);
      std::set_difference(after.begin(), after.end(), before.begin(), before.end(), &added);
      move = ProofMove{MoveKind::TerminalMerge, {w, u1, u2}, removed, added};
    } else {
      const auto cycle = find_cycle(result.graph);
      std::vector<Vertex> branching;
      for (Vertex v : cycle.vertices) {
        if (result.graph.degree(v) == 3) branching.push_back(v);
      }
      std::sort(branching.begin(), branching.end());
      if (branching.size() >= 2) move = plan_tail_rebalance(result.graph, branching[0], branching[1]);
    }
    if (!move) return result;
    Graph next = apply_move(result.graph, *move);
    IndexValue after = w_h(next, h);
    result.steps.push_back({*move, current, after});
    result.graph = std::move(next);
    current = std::move(after);
  }
  throw std::logic_error("local search did not terminate");
}

}  // namespace hwiener
