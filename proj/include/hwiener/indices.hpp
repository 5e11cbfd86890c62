#pragma once

#include <string>
#include <vector>

#include "hwiener/graph.hpp"
#include "hwiener/index_value.hpp"
#include "hwiener/weights.hpp"

namespace hwiener {

// W_h = sum_k counts[k] * h(k). A q2 weight without a diameter gets the
// diameter of the distribution. Exact when h is integer-valued.
IndexValue w_h(const DistanceDistribution& dist, const WeightFunction& h);
IndexValue w_h(const Graph& g, const WeightFunction& h);

IndexValue wiener(const Graph& g);
IndexValue hyper_wiener(const Graph& g);  // (W^1 + W^2) / 2, exact
IndexValue harary(const Graph& g);        // W^-2
IndexValue reciprocal_wiener(const Graph& g);  // W^-1
// variant 1: [d]_q, 2: [d]_q q^(L-d), 3: [d]_q q^d
IndexValue q_wiener(const Graph& g, double q, int variant);
IndexValue tsz_index(const Graph& g);  // (2W^1 + 3W^2 + W^3) / 6, exact

// Every named index above from a single distance distribution; q-variants
// use the supplied q.
std::vector<IndexValue> all_named_indices(const Graph& g, double q = 0.5);

}  // namespace hwiener
