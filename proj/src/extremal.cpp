#include "hwiener/extremal.hpp"

#include <algorithm>
#include <mutex>
#include <thread>
#include <type_traits>

#include "hwiener/closed_forms.hpp"
#include "hwiener/constructors.hpp"
#include "hwiener/errors.hpp"
#include "hwiener/indices.hpp"

namespace hwiener {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass:
      return "pass";
    case ClaimStatus::Fail:
      return "fail";
    case ClaimStatus::NotApplicable:
      break;
  }
  return "n/a";
}

ClaimStatus parse_claim_status(std::string_view s) {
  if (s == "pass") return ClaimStatus::Pass;
  if (s == "fail") return ClaimStatus::Fail;
  if (s == "n/a") return ClaimStatus::NotApplicable;
  throw DomainError("unknown claim status '" + std::string(s) + "'");
}

bool TheoremClaims::any_failed() const noexcept {
  return lower_value == ClaimStatus::Fail || lower_unique == ClaimStatus::Fail ||
         upper_value == ClaimStatus::Fail || upper_unique == ClaimStatus::Fail;
}

int verification_domain(int n) { return std::max(2, n - 2); }

namespace {

// Running extreme with every labeled graph attaining it.
template <typename T>
struct Extreme {
  bool seen = false;
  T value{};
  std::vector<Graph> graphs;
};

template <typename T>
int cmp(T a, T b, double rel_tol) {
  if constexpr (std::is_same_v<T, Int>) {
    return a < b ? -1 : (a > b ? 1 : 0);
  } else {
    if (approx_equal(a, b, rel_tol)) return 0;
    return a < b ? -1 : 1;
  }
}

template <typename T>
void offer(Extreme<T>& ex, T v, const Graph& g, int sign, double rel_tol) {
  if (!ex.seen) {
    ex.seen = true;
    ex.value = v;
    ex.graphs.assign(1, g);
    return;
  }
  const int c = sign * cmp(v, ex.value, rel_tol);
  if (c > 0) {
    ex.value = v;
    ex.graphs.assign(1, g);
  } else if (c == 0) {
    if (sign * cmp(v, ex.value, 0.0) > 0) ex.value = v;
    ex.graphs.push_back(g);
  }
}

std::set<CanonicalForm> forms_of(const std::vector<Graph>& graphs) {
  std::set<CanonicalForm> out;
  for (const auto& g : graphs) out.insert(canonical_form(g));
  return out;
}

template <typename T>
IndexValue to_index_value(T v, const std::string& name) {
  if constexpr (std::is_same_v<T, Int>) {
    return IndexValue::exact(name, Rational(v));
  } else {
    return IndexValue::floating(name, v);
  }
}

template <typename T>
void scan(int n, const WeightFunction& h, const VerifyOptions& options, VerificationReport& report) {
  Extreme<T> lo;
  Extreme<T> hi;
  for_each_unicyclic_labeled(n, options.enumeration, [&](const Graph& g) {
    const auto dist = distance_distribution(g);
    T value{};
    for (int k = 1; k <= dist.diameter(); ++k) {
      if constexpr (std::is_same_v<T, Int>) {
        value = checked_add(value, checked_mul(static_cast<Int>(dist.counts[k]), eval_exact(h, k)));
      } else {
        value += static_cast<double>(dist.counts[k]) * eval_float(h, k);
      }
    }
    ++report.graphs_scanned;
    offer(lo, value, g, -1, options.rel_tol);
    offer(hi, value, g, +1, options.rel_tol);
  });
  const std::string name = "W_h[" + h.description() + "]";
  if (lo.seen) {
    report.min_value = to_index_value(lo.value, name);
    report.argmin_forms = forms_of(lo.graphs);
  }
  if (hi.seen) {
    report.max_value = to_index_value(hi.value, name);
    report.argmax_forms = forms_of(hi.graphs);
  }
}

// Pass/fail of one side (min or max) of the theorem.
struct SideCheck {
  ClaimStatus value = ClaimStatus::NotApplicable;
  ClaimStatus unique = ClaimStatus::NotApplicable;
  std::optional<CanonicalForm> witness;
};

SideCheck check_side(bool partial, const std::optional<IndexValue>& actual, const std::set<CanonicalForm>& forms,
                     const IndexValue& expected, const CanonicalForm& expected_form, int sign, double rel_tol) {
  SideCheck out;
  if (!actual) {
    // empty shard: nothing can violate the bound
    out.value = partial ? ClaimStatus::Pass : ClaimStatus::Fail;
    out.unique = out.value;
    return out;
  }
  const int c = sign * compare_values(*actual, expected, rel_tol);  // > 0: beyond the bound
  if (c > 0 || (!partial && c != 0)) {
    out.value = ClaimStatus::Fail;
    out.witness = *forms.begin();
  } else {
    out.value = ClaimStatus::Pass;
  }
  if (c == 0) {
    const bool only_expected = forms.size() == 1 && *forms.begin() == expected_form;
    out.unique = only_expected ? ClaimStatus::Pass : ClaimStatus::Fail;
    if (!only_expected && !out.witness) {
      for (const auto& f : forms) {
        if (f != expected_form) {
          out.witness = f;
          break;
        }
      }
    }
  } else {
    // the bound is not reached in this scan
    out.unique = partial && c < 0 ? ClaimStatus::Pass : ClaimStatus::Fail;
  }
  return out;
}

void evaluate_claims(VerificationReport& report, const WeightFunction& h, double rel_tol) {
  report.claims = {};
  report.counterexample.reset();
  report.expected_min.reset();
  report.expected_max.reset();
  report.expected_argmin.reset();
  report.expected_argmax.reset();
  if (report.n < 6 || report.monotonicity == Monotonicity::Neither) return;

  const bool increasing = report.monotonicity == Monotonicity::StrictlyIncreasing;
  const auto jn_value = wh_jn(report.n, h);
  const auto g3_value = f_closed(3, report.n, h);
  const auto jn_form = canonical_form(j_graph(report.n));
  const auto g3_form = canonical_form(g_rn(3, report.n));
  report.expected_min = increasing ? jn_value : g3_value;
  report.expected_max = increasing ? g3_value : jn_value;
  report.expected_argmin = increasing ? jn_form : g3_form;
  report.expected_argmax = increasing ? g3_form : jn_form;

  const bool partial = report.partial();
  const auto lo = check_side(partial, report.min_value, report.argmin_forms, *report.expected_min,
                             *report.expected_argmin, -1, rel_tol);
  const auto hi = check_side(partial, report.max_value, report.argmax_forms, *report.expected_max,
                             *report.expected_argmax, +1, rel_tol);
  report.claims = {lo.value, lo.unique, hi.value, hi.unique};
  if (lo.witness) {
    report.counterexample = to_edge_list(lo.witness->to_graph());
  } else if (hi.witness) {
    report.counterexample = to_edge_list(hi.witness->to_graph());
  }
}

Monotonicity hypothesis(int n, const WeightFunction& h, bool require) {
  if (h.needs_diameter()) {
    throw DomainError("weight " + h.description() +
                      " depends on each graph's diameter and is not a single function h");
  }
  const auto m = classify_monotonicity(h, verification_domain(n));
  if (require && m == Monotonicity::Neither) {
    throw DomainError("weight " + h.description() + " is neither strictly increasing nor strictly decreasing on 1.." +
                      std::to_string(verification_domain(n)) + "; the bounds only hold for strictly monotone h");
  }
  return m;
}

}  // namespace

VerificationReport verify_theorem(int n, const WeightFunction& h, const VerifyOptions& options) {
  VerificationReport report;
  report.n = n;
  report.weight = h.description();
  report.monotonicity = hypothesis(n, h, options.require_theorem_hypothesis);
  report.shards = {options.enumeration.shard.index};
  report.shard_count = options.enumeration.shard.count;
  if (h.is_integer_valued()) {
    scan<Int>(n, h, options, report);
  } else {
    scan<double>(n, h, options, report);
  }
  evaluate_claims(report, h, options.rel_tol);
  return report;
}

VerificationReport merge_reports(const VerificationReport& a, const VerificationReport& b, double rel_tol) {
  if (a.n != b.n || a.weight != b.weight || a.shard_count != b.shard_count) {
    throw DomainError("cannot merge reports for different n, weight or shard layout");
  }
  VerificationReport out = a;
  for (int s : b.shards) {
    if (std::find(out.shards.begin(), out.shards.end(), s) != out.shards.end()) {
      throw DomainError("shard " + std::to_string(s) + " appears in both reports");
    }
    out.shards.push_back(s);
  }
  std::sort(out.shards.begin(), out.shards.end());
  out.graphs_scanned = a.graphs_scanned + b.graphs_scanned;

  auto combine = [rel_tol](std::optional<IndexValue>& value, std::set<CanonicalForm>& forms,
                           const std::optional<IndexValue>& other_value, const std::set<CanonicalForm>& other_forms,
                           int sign) {
    if (!other_value) return;
    if (!value) {
      value = other_value;
      forms = other_forms;
      return;
    }
    const int c = sign * compare_values(*other_value, *value, rel_tol);
    if (c > 0) {
      value = other_value;
      forms = other_forms;
    } else if (c == 0) {
      if (sign * compare_values(*other_value, *value, 0.0) > 0) value = other_value;
      forms.insert(other_forms.begin(), other_forms.end());
    }
  };
  combine(out.min_value, out.argmin_forms, b.min_value, b.argmin_forms, -1);
  combine(out.max_value, out.argmax_forms, b.max_value, b.argmax_forms, +1);
  evaluate_claims(out, parse_weight_spec(out.weight), rel_tol);
  return out;
}

VerificationReport verify_theorem_sharded(int n, const WeightFunction& h, int shard_count, int threads,
                                          VerifyOptions options) {
  if (shard_count < 1) throw DomainError("shard count must be positive");
  threads = std::clamp(threads, 1, shard_count);
  std::vector<VerificationReport> parts(shard_count);
  std::vector<std::exception_ptr> errors(shard_count);
  std::mutex next_mutex;
  int next = 0;
  auto worker = [&] {
    for (;;) {
      int s = 0;
      {
        std::lock_guard lock(next_mutex);
        if (next == shard_count) return;
        s = next++;
      }
      try {
        VerifyOptions local = options;
        local.enumeration.shard = {s, shard_count};
        parts[s] = verify_theorem(n, h, local);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  VerificationReport merged = parts[0];
  for (int s = 1; s < shard_count; ++s) merged = merge_reports(merged, parts[s], options.rel_tol);
  return merged;
}

std::vector<DominanceCheck> check_f3_dominance(int n_max, const WeightFunction& h, double rel_tol) {
  if (n_max < 4) throw DomainError("dominance check needs n_max >= 4");
  if (h.needs_diameter()) throw DomainError("weight " + h.description() + " depends on the graph's diameter");
  const auto m = classify_monotonicity(h, std::max(2, n_max - 1));
  if (m == Monotonicity::Neither) {
    throw DomainError("weight " + h.description() + " is not strictly monotone on 1.." +
                      std::to_string(std::max(2, n_max - 1)));
  }
  const int want = m == Monotonicity::StrictlyIncreasing ? 1 : -1;
  std::vector<DominanceCheck> out;
  for (int n = 4; n <= n_max; ++n) {
    const auto f3 = f_closed(3, n, h);
    for (int r = 4; r <= n; ++r) {
      auto fr = f_closed(r, n, h);
      const bool pass = compare_values(f3, fr, rel_tol) == want;
      out.push_back({r, n, f3, std::move(fr), pass});
    }
  }
  return out;
}

}  // namespace hwiener
