#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "hwiener/canonical.hpp"
#include "hwiener/graph.hpp"

namespace hwiener {

inline constexpr int kLabeledCap = 9;
inline constexpr int kUnlabeledCap = 8;
inline constexpr int kHardCap = 10;

// Prüfer code of a labeled tree on n vertices: n-2 labels in 0..n-1.
struct PruferSequence {
  int n = 2;
  std::vector<Vertex> seq;
};

Graph prufer_to_tree(const PruferSequence& p);

// Number of labeled trees on n vertices, n^(n-2).
std::uint64_t labeled_tree_count(int n);

// index in [0, n^(n-2)) read as n-2 base-n digits, most significant first.
PruferSequence prufer_from_index(int n, std::uint64_t index);

// Shard `index` of `count` visits the Prüfer indices congruent to index mod count.
struct Shard {
  int index = 0;
  int count = 1;

  static Shard parse(std::string_view text);  // "i/k"
};

struct EnumerationOptions {
  int cap = kLabeledCap;
  Shard shard;
};

// Calls visit(tree) for every labeled tree on n vertices in the shard.
void for_each_labeled_tree(int n, const Shard& shard, const std::function<void(const Graph&)>& visit);

// Visits every labeled unicyclic graph on n vertices exactly once (per full
// shard set). Each graph is produced from the (tree, chord) pair whose chord
// is the largest edge of the resulting cycle. Throws CapExceeded.
void for_each_unicyclic_labeled(int n, const EnumerationOptions& options,
                                const std::function<void(const Graph&)>& visit);

std::vector<Graph> enumerate_unicyclic_labeled(int n, const EnumerationOptions& options = {});
std::uint64_t count_unicyclic_labeled(int n, const EnumerationOptions& options = {});

// One representative per isomorphism class (first seen in labeled order).
// Uses options.cap, which defaults to kLabeledCap; callers wanting the
// isomorphism-pass default should pass kUnlabeledCap.
std::vector<Graph> enumerate_unicyclic_unlabeled(int n, const EnumerationOptions& options = {kUnlabeledCap, {}});

}  // namespace hwiener
