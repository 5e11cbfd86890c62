#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hwiener/canonical.hpp"
#include "hwiener/enumeration.hpp"
#include "hwiener/index_value.hpp"
#include "hwiener/weights.hpp"

namespace hwiener {

enum class ClaimStatus { Pass, Fail, NotApplicable };

std::string_view to_string(ClaimStatus s);
ClaimStatus parse_claim_status(std::string_view s);

// The four statements of the bound theorem for one (n, h).
struct TheoremClaims {
  ClaimStatus lower_value = ClaimStatus::NotApplicable;
  ClaimStatus lower_unique = ClaimStatus::NotApplicable;
  ClaimStatus upper_value = ClaimStatus::NotApplicable;
  ClaimStatus upper_unique = ClaimStatus::NotApplicable;

  bool any_failed() const noexcept;
  friend bool operator==(const TheoremClaims&, const TheoremClaims&) = default;
};

// Min/max of W_h over a scan of labeled unicyclic graphs.
//
// A report covering a proper subset of shards is `partial`: its value claims
// then only assert that the bounds are respected, and its uniqueness claims
// that every graph reaching a bound is the expected extremal graph.
struct VerificationReport {
  int n = 0;
  std::string weight;
  Monotonicity monotonicity = Monotonicity::Neither;
  std::uint64_t graphs_scanned = 0;
  std::vector<int> shards;  // shard indices covered
  int shard_count = 1;

  std::optional<IndexValue> min_value;
  std::optional<IndexValue> max_value;
  std::set<CanonicalForm> argmin_forms;
  std::set<CanonicalForm> argmax_forms;

  // Theorem prediction (n >= 6 only): bound values and the graphs attaining them.
  std::optional<IndexValue> expected_min;
  std::optional<IndexValue> expected_max;
  std::optional<CanonicalForm> expected_argmin;
  std::optional<CanonicalForm> expected_argmax;

  TheoremClaims claims;
  std::optional<std::string> counterexample;  // edge list of a violating graph

  bool partial() const noexcept { return static_cast<int>(shards.size()) < shard_count; }
  bool passed() const noexcept { return !claims.any_failed(); }
};

struct VerifyOptions {
  EnumerationOptions enumeration;
  double rel_tol = 1e-9;
  bool require_theorem_hypothesis = true;  // refuse non-monotone h
};

// Exhaustive scan of one shard of the labeled unicyclic graphs on n vertices.
VerificationReport verify_theorem(int n, const WeightFunction& h, const VerifyOptions& options = {});

// Scans every shard of a `shard_count`-way split on up to `threads` workers
// and merges the partial reports.
VerificationReport verify_theorem_sharded(int n, const WeightFunction& h, int shard_count, int threads,
                                          VerifyOptions options = {});

// Associative, order-independent merge of reports for the same (n, h) and
// shard layout. Claims are re-evaluated on the merged data.
VerificationReport merge_reports(const VerificationReport& a, const VerificationReport& b, double rel_tol = 1e-9);

// Domain on which verification classifies monotonicity: every distance a
// unicyclic graph on n vertices can realise.
int verification_domain(int n);

struct DominanceCheck {
  int r = 0;
  int n = 0;
  IndexValue f3;
  IndexValue fr;
  bool pass = false;
};

// F_h(3, n) > F_h(r, n) for all 4 <= r <= n <= n_max when h increases on
// 1..n_max-1 ('<' when it decreases). Throws DomainError otherwise.
std::vector<DominanceCheck> check_f3_dominance(int n_max, const WeightFunction& h, double rel_tol = 1e-9);

}  // namespace hwiener
