#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hwiener/numeric.hpp"

namespace hwiener {

// h(k) = k^lambda
struct Power {
  double lambda;
};
// h(k) = [k]_q = 1 + q + ... + q^(k-1)
struct QBracket {
  double q;
};
// h(k) = [k]_q * q^(L-k), L the diameter of the graph being indexed
struct QBracketTimesQPowLMinusD {
  double q;
  std::optional<int> diameter;
};
// h(k) = [k]_q * q^k
struct QBracketTimesQPowD {
  double q;
};
// h(k) = values[k-1]
struct Table {
  std::vector<double> values;
};

// Weight function h: Z+ -> R applied to pairwise distances.
class WeightFunction {
 public:
  using Variant = std::variant<Power, QBracket, QBracketTimesQPowLMinusD, QBracketTimesQPowD, Table>;

  static WeightFunction power(double lambda);
  static WeightFunction q_bracket(double q);
  static WeightFunction q_bracket_times_q_pow_l_minus_d(double q, std::optional<int> diameter = std::nullopt);
  static WeightFunction q_bracket_times_q_pow_d(double q);
  static WeightFunction table(std::vector<double> values);

  const Variant& variant() const noexcept { return variant_; }
  const std::string& description() const noexcept { return description_; }

  // Power(lambda) with lambda a non-negative integer.
  bool is_integer_valued() const noexcept;
  bool needs_diameter() const noexcept;
  // Copy with the diameter filled in (no-op for variants that ignore it).
  WeightFunction with_diameter(int diameter) const;
  // Largest k the weight can be evaluated at, if bounded.
  std::optional<int> max_argument() const noexcept;

 private:
  WeightFunction(Variant v, std::string description);

  Variant variant_;
  std::string description_;
};

enum class EvalMode { Auto, Exact, Float };

using Scalar = std::variant<Int, double>;

// Auto picks Exact for integer-valued weights and Float otherwise. Exact on a
// non-integer-valued weight throws ModeError.
Scalar eval(const WeightFunction& h, int k, EvalMode mode = EvalMode::Auto);
Int eval_exact(const WeightFunction& h, int k);
double eval_float(const WeightFunction& h, int k);

// [k]_q as the geometric sum 1 + q + ... + q^(k-1).
double q_bracket(double q, int k);

// Parses "power:L", "q1:Q", "q2:Q", "q3:Q" or "table:v1,v2,...".
WeightFunction parse_weight_spec(std::string_view spec);

enum class Monotonicity { StrictlyIncreasing, StrictlyDecreasing, Neither };

std::string_view to_string(Monotonicity m);

// Classification of h on the finite domain 1..max_distance (max_distance >= 2).
Monotonicity classify_monotonicity(const WeightFunction& h, int max_distance);

}  // namespace hwiener
