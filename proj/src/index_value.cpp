#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hwiener/index_value.hpp"
#include "hwiener/numeric.hpp"

namespace hwiener {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exact integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exact integer overflow in multiplication");
  return r;
}

Int checked_pow(Int base, unsigned exp) {
  Int r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::string to_string(Int v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  std::string digits;
  // work with negative remainders so the minimum value does not overflow
  while (v != 0) {
    const int d = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
    v /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Int parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("bad integer literal '" + std::string(s) + "'");
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal '" + std::string(s) + "'");
    v = checked_mul(v, 10);
    v = neg ? checked_add(v, -(s[i] - '0')) : checked_add(v, s[i] - '0');
  }
  return v;
}

namespace {
Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

Rational::Rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

double Rational::to_double() const noexcept {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  return is_integer() ? hwiener::to_string(num_) : hwiener::to_string(num_) + "/" + hwiener::to_string(den_);
}

Rational Rational::parse(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Int lhs = checked_mul(a.num_, b.den_);
  const Int rhs = checked_mul(b.num_, a.den_);
  return lhs <=> rhs;
}

IndexValue IndexValue::exact(std::string name, Rational v) {
  IndexValue out;
  out.index_name = std::move(name);
  out.value = v;
  return out;
}

IndexValue IndexValue::floating(std::string name, double v) {
  IndexValue out;
  out.index_name = std::move(name);
  out.value = v;
  return out;
}

double IndexValue::as_double() const {
  return mode() == Mode::Exact ? std::get<Rational>(value).to_double() : std::get<double>(value);
}

const Rational& IndexValue::as_exact() const {
  if (mode() != Mode::Exact) throw std::logic_error(index_name + " is not an exact value");
  return std::get<Rational>(value);
}

std::string IndexValue::value_string() const {
  if (mode() == Mode::Exact) return std::get<Rational>(value).to_string();
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(value);
  return os.str();
}

std::string_view to_string(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

bool approx_equal(double a, double b, double rel_tol) {
  if (a == b) return true;
  return std::fabs(a - b) <= rel_tol * std::max({std::fabs(a), std::fabs(b), 1e-300});
}

bool same_value(const IndexValue& a, const IndexValue& b, double rel_tol) {
  if (a.mode() == Mode::Exact && b.mode() == Mode::Exact) return a.as_exact() == b.as_exact();
  return approx_equal(a.as_double(), b.as_double(), rel_tol);
}

int compare_values(const IndexValue& a, const IndexValue& b, double rel_tol) {
  if (a.mode() == Mode::Exact && b.mode() == Mode::Exact) {
    const auto c = a.as_exact() <=> b.as_exact();
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  const double x = a.as_double();
  const double y = b.as_double();
  if (approx_equal(x, y, rel_tol)) return 0;
  return x < y ? -1 : 1;
}

}  // namespace hwiener
