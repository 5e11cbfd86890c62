#include "hwiener/indices.hpp"

#include "hwiener/errors.hpp"

namespace hwiener {

namespace {

Int exact_sum(const DistanceDistribution& dist, const WeightFunction& h) {
  Int total = 0;
  for (int k = 1; k <= dist.diameter(); ++k) {
    if (dist.counts[k] == 0) continue;
    total = checked_add(total, checked_mul(static_cast<Int>(dist.counts[k]), eval_exact(h, k)));
  }
  return total;
}

double float_sum(const DistanceDistribution& dist, const WeightFunction& h) {
  double total = 0.0;
  for (int k = 1; k <= dist.diameter(); ++k) {
    if (dist.counts[k] == 0) continue;
    total += static_cast<double>(dist.counts[k]) * eval_float(h, k);
  }
  return total;
}

std::string weight_label(const WeightFunction& h) { return "W_h[" + h.description() + "]"; }

IndexValue named(IndexValue v, std::string name) {
  v.index_name = std::move(name);
  return v;
}

WeightFunction q_kernel(double q, int variant, int diameter) {
  switch (variant) {
    case 1:
      return WeightFunction::q_bracket(q);
    case 2:
      return WeightFunction::q_bracket_times_q_pow_l_minus_d(q, diameter);
    case 3:
      return WeightFunction::q_bracket_times_q_pow_d(q);
    default:
      throw DomainError("q-Wiener variant must be 1, 2 or 3 (got " + std::to_string(variant) + ")");
  }
}

IndexValue hyper_wiener_from(const DistanceDistribution& d) {
  const Int w1 = exact_sum(d, WeightFunction::power(1));
  const Int w2 = exact_sum(d, WeightFunction::power(2));
  return IndexValue::exact("hyper_wiener", Rational(checked_add(w1, w2), 2));
}

IndexValue tsz_from(const DistanceDistribution& d) {
  const Int w1 = exact_sum(d, WeightFunction::power(1));
  const Int w2 = exact_sum(d, WeightFunction::power(2));
  const Int w3 = exact_sum(d, WeightFunction::power(3));
  const Int num = checked_add(checked_add(checked_mul(2, w1), checked_mul(3, w2)), w3);
  return IndexValue::exact("tsz", Rational(num, 6));
}

}  // namespace

IndexValue w_h(const DistanceDistribution& dist, const WeightFunction& h) {
  if (h.needs_diameter()) return w_h(dist, h.with_diameter(dist.diameter()));
  if (h.is_integer_valued()) return IndexValue::exact(weight_label(h), Rational(exact_sum(dist, h)));
  return IndexValue::floating(weight_label(h), float_sum(dist, h));
}

IndexValue w_h(const Graph& g, const WeightFunction& h) { return w_h(distance_distribution(g), h); }

IndexValue wiener(const Graph& g) { return named(w_h(g, WeightFunction::power(1)), "wiener"); }

IndexValue hyper_wiener(const Graph& g) { return hyper_wiener_from(distance_distribution(g)); }

IndexValue harary(const Graph& g) { return named(w_h(g, WeightFunction::power(-2)), "harary"); }

IndexValue reciprocal_wiener(const Graph& g) {
  return named(w_h(g, WeightFunction::power(-1)), "reciprocal_wiener");
}

IndexValue q_wiener(const Graph& g, double q, int variant) {
  const auto d = distance_distribution(g);
  return named(w_h(d, q_kernel(q, variant, d.diameter())), "q_wiener_" + std::to_string(variant));
}

IndexValue tsz_index(const Graph& g) { return tsz_from(distance_distribution(g)); }

std::vector<IndexValue> all_named_indices(const Graph& g, double q) {
  const auto d = distance_distribution(g);
  std::vector<IndexValue> out;
  out.push_back(named(w_h(d, WeightFunction::power(1)), "wiener"));
  out.push_back(hyper_wiener_from(d));
  out.push_back(named(w_h(d, WeightFunction::power(-2)), "harary"));
  out.push_back(named(w_h(d, WeightFunction::power(-1)), "reciprocal_wiener"));
  for (int v = 1; v <= 3; ++v) {
    out.push_back(named(w_h(d, q_kernel(q, v, d.diameter())), "q_wiener_" + std::to_string(v)));
  }
  out.push_back(tsz_from(d));
  return out;
}

}  // namespace hwiener
