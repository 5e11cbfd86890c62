#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "hwiener/numeric.hpp"

namespace hwiener {

enum class Mode { Exact, Float };

std::string_view to_string(Mode m);

// Value of an index on a graph, either exact (a rational whose denominator
// divides 6) or a double.
struct IndexValue {
  std::string index_name;
  std::variant<Rational, double> value;

  static IndexValue exact(std::string name, Rational v);
  static IndexValue floating(std::string name, double v);

  Mode mode() const noexcept { return std::holds_alternative<Rational>(value) ? Mode::Exact : Mode::Float; }
  double as_double() const;
  const Rational& as_exact() const;
  // Exact values as decimal strings ("31", "7/2"); floats with 17 significant digits.
  std::string value_string() const;
};

bool approx_equal(double a, double b, double rel_tol);

// Exact comparison when both sides are exact, relative tolerance otherwise.
bool same_value(const IndexValue& a, const IndexValue& b, double rel_tol = 1e-9);
int compare_values(const IndexValue& a, const IndexValue& b, double rel_tol = 1e-9);

}  // namespace hwiener
