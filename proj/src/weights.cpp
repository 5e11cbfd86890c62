#include "hwiener/weights.hpp"

#include <charconv>
#include <cmath>

#include "hwiener/errors.hpp"

namespace hwiener {

namespace {

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return ec == std::errc{} ? std::string(buf, ptr) : std::to_string(x);
}

void check_q(double q) {
  if (!(q > 0.0) || q == 1.0 || !std::isfinite(q)) {
    throw DomainError("q must be positive, finite and different from 1 (got " + format_real(q) + ")");
  }
}

double parse_real(std::string_view tok, std::string_view spec) {
  double v = 0.0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (tok.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw DomainError("bad number '" + std::string(tok) + "' in weight spec '" + std::string(spec) + "'");
  }
  return v;
}

}  // namespace

WeightFunction::WeightFunction(Variant v, std::string description)
    : variant_(std::move(v)), description_(std::move(description)) {}

WeightFunction WeightFunction::power(double lambda) {
  if (!std::isfinite(lambda)) throw DomainError("power exponent must be finite");
  return {Power{lambda}, "power:" + format_real(lambda)};
}

WeightFunction WeightFunction::q_bracket(double q) {
  check_q(q);
  return {QBracket{q}, "q1:" + format_real(q)};
}

WeightFunction WeightFunction::q_bracket_times_q_pow_l_minus_d(double q, std::optional<int> diameter) {
  check_q(q);
  if (diameter && *diameter < 1) throw DomainError("diameter must be positive");
  return {QBracketTimesQPowLMinusD{q, diameter}, "q2:" + format_real(q)};
}

WeightFunction WeightFunction::q_bracket_times_q_pow_d(double q) {
  check_q(q);
  return {QBracketTimesQPowD{q}, "q3:" + format_real(q)};
}

WeightFunction WeightFunction::table(std::vector<double> values) {
  if (values.empty()) throw DomainError("table weight needs at least one value");
  std::string desc = "table:";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw DomainError("table values must be finite");
    if (i) desc += ',';
    desc += format_real(values[i]);
  }
  return {Table{std::move(values)}, std::move(desc)};
}

bool WeightFunction::is_integer_valued() const noexcept {
  const auto* p = std::get_if<Power>(&variant_);
  return p && p->lambda >= 0.0 && p->lambda <= 127.0 && std::floor(p->lambda) == p->lambda;
}

bool WeightFunction::needs_diameter() const noexcept {
  const auto* w2 = std::get_if<QBracketTimesQPowLMinusD>(&variant_);
  return w2 && !w2->diameter;
}

WeightFunction WeightFunction::with_diameter(int diameter) const {
  if (const auto* w2 = std::get_if<QBracketTimesQPowLMinusD>(&variant_)) {
    return q_bracket_times_q_pow_l_minus_d(w2->q, diameter);
  }
  return *this;
}

std::optional<int> WeightFunction::max_argument() const noexcept {
  if (const auto* t = std::get_if<Table>(&variant_)) return static_cast<int>(t->values.size());
  return std::nullopt;
}

double q_bracket(double q, int k) {
  double sum = 0.0;
  double term = 1.0;
  for (int i = 0; i < k; ++i) {
    sum += term;
    term *= q;
  }
  return sum;
}

Int eval_exact(const WeightFunction& h, int k) {
  if (k < 1) throw DomainError("weight argument must be positive (got " + std::to_string(k) + ")");
  if (!h.is_integer_valued()) {
    throw ModeError("weight " + h.description() + " is not integer-valued; exact mode unavailable");
  }
  const auto lambda = static_cast<unsigned>(std::get<Power>(h.variant()).lambda);
  return checked_pow(k, lambda);
}

double eval_float(const WeightFunction& h, int k) {
  if (k < 1) throw DomainError("weight argument must be positive (got " + std::to_string(k) + ")");
  struct Visitor {
    int k;
    double operator()(const Power& p) const { return std::pow(static_cast<double>(k), p.lambda); }
    double operator()(const QBracket& b) const { return q_bracket(b.q, k); }
    double operator()(const QBracketTimesQPowLMinusD& b) const {
      if (!b.diameter) throw DomainError("q2 weight evaluated without a diameter");
      return q_bracket(b.q, k) * std::pow(b.q, *b.diameter - k);
    }
    double operator()(const QBracketTimesQPowD& b) const { return q_bracket(b.q, k) * std::pow(b.q, k); }
    double operator()(const Table& t) const {
      if (k > static_cast<int>(t.values.size())) {
        throw DomainError("table weight has " + std::to_string(t.values.size()) + " entries; h(" +
                          std::to_string(k) + ") requested");
      }
      return t.values[k - 1];
    }
  };
  return std::visit(Visitor{k}, h.variant());
}

Scalar eval(const WeightFunction& h, int k, EvalMode mode) {
  switch (mode) {
    case EvalMode::Exact:
      return eval_exact(h, k);
    case EvalMode::Float:
      return eval_float(h, k);
    case EvalMode::Auto:
      break;
  }
  if (h.is_integer_valued()) return eval_exact(h, k);
  return eval_float(h, k);
}

WeightFunction parse_weight_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("weight spec '" + std::string(spec) + "' must look like kind:value");
  }
  const auto kind = spec.substr(0, colon);
  const auto arg = spec.substr(colon + 1);
  if (kind == "power") return WeightFunction::power(parse_real(arg, spec));
  if (kind == "q1") return WeightFunction::q_bracket(parse_real(arg, spec));
  if (kind == "q2") return WeightFunction::q_bracket_times_q_pow_l_minus_d(parse_real(arg, spec));
  if (kind == "q3") return WeightFunction::q_bracket_times_q_pow_d(parse_real(arg, spec));
  if (kind == "table") {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
      const auto comma = arg.find(',', pos);
      const auto tok = arg.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      values.push_back(parse_real(tok, spec));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return WeightFunction::table(std::move(values));
  }
  throw DomainError("unknown weight kind '" + std::string(kind) + "' (expected power, q1, q2, q3 or table)");
}

std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::StrictlyIncreasing:
      return "strictly-increasing";
    case Monotonicity::StrictlyDecreasing:
      return "strictly-decreasing";
    case Monotonicity::Neither:
      break;
  }
  return "neither";
}

Monotonicity classify_monotonicity(const WeightFunction& h, int max_distance) {
  if (max_distance < 2) throw DomainError("monotonicity needs a domain of at least 1..2");
  bool increasing = true;
  bool decreasing = true;
  for (int k = 1; k < max_distance; ++k) {
    int cmp = 0;
    if (h.is_integer_valued()) {
      const Int a = eval_exact(h, k);
      const Int b = eval_exact(h, k + 1);
      cmp = a < b ? -1 : (a > b ? 1 : 0);
    } else {
      const double a = eval_float(h, k);
      const double b = eval_float(h, k + 1);
      cmp = a < b ? -1 : (a > b ? 1 : 0);
    }
    if (cmp >= 0) increasing = false;
    if (cmp <= 0) decreasing = false;
  }
  if (increasing) return Monotonicity::StrictlyIncreasing;
  if (decreasing) return Monotonicity::StrictlyDecreasing;
  return Monotonicity::Neither;
}

}  // namespace hwiener
