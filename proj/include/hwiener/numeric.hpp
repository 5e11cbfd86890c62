#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace hwiener {

// Signed 127-bit exact integer used for every integer-valued index.
using Int = __int128;

// Overflow-checked arithmetic; throws std::overflow_error.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, unsigned exp);

std::string to_string(Int v);
Int parse_int(std::string_view s);  // throws std::invalid_argument

// Exact rational with positive denominator, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(Int num) : num_(num) {}  // NOLINT: implicit by design of integers-as-rationals
  Rational(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept;

  // "31" for integers, "7/2" otherwise.
  std::string to_string() const;
  static Rational parse(std::string_view s);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace hwiener
