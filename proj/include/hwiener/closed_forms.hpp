#pragma once

#include "hwiener/index_value.hpp"
#include "hwiener/weights.hpp"

namespace hwiener {

// Closed-form values of W_h on the extremal families. Each result is exact
// when h is integer-valued and floating otherwise. Sums with an upper limit
// below the lower limit are empty.

// W_h(P_n) = sum_{k=1}^{n-1} (n-k) h(k); n >= 1.
IndexValue wh_path(int n, const WeightFunction& h);

// W_h(C_n), split by the parity of n; n >= 3.
IndexValue wh_cycle(int n, const WeightFunction& h);

// W_h(J_n) = n h(1) + n(n-3)/2 h(2); n >= 4.
IndexValue wh_jn(int n, const WeightFunction& h);

// F_h(r, n) for 3 <= r <= n, evaluated term by term: three summands when r
// is odd, five when r is even.
IndexValue f_closed(int r, int n, const WeightFunction& h);

// n h(1) + sum_{j=2}^{n-2} (n-j) h(j), the collapsed form of F_h(3, n).
IndexValue f3_collapsed(int n, const WeightFunction& h);

}  // namespace hwiener
