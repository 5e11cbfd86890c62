#pragma once

#include "hwiener/graph.hpp"

namespace hwiener {

// Canonical labelings:
//   path(n)   0-1-...-(n-1)
//   cycle(n)  path plus (n-1, 0)
//   star(n)   centre 0, edges (0, i)
//   j_graph   triangle 0-1-2 with pendants 3..n-1 on vertex 0
//   g_rn      cycle 0..r-1 with the pendant path 0-r-(r+1)-...-(n-1)
Graph path(int n);      // n >= 1
Graph cycle(int n);     // n >= 3
Graph star(int n);      // n >= 2
Graph j_graph(int n);   // n >= 4
Graph g_rn(int r, int n);  // 3 <= r <= n

}  // namespace hwiener
