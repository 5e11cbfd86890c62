#include "hwiener/closed_forms.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

#include "hwiener/errors.hpp"

namespace hwiener {

namespace {

template <typename T>
T scaled(Int coef, T v) {
  if constexpr (std::is_same_v<T, Int>) {
    return checked_mul(coef, v);
  } else {
    return static_cast<double>(coef) * v;
  }
}

template <typename T>
T plus(T a, T b) {
  if constexpr (std::is_same_v<T, Int>) {
    return checked_add(a, b);
  } else {
    return a + b;
  }
}

// sum_{j=lo}^{hi} term(j); zero when hi < lo.
template <typename T, typename F>
T sum_over(int lo, int hi, F term) {
  T total{};
  for (int j = lo; j <= hi; ++j) total = plus(total, term(j));
  return total;
}

template <typename T>
T h_at(const WeightFunction& h, int k) {
  if constexpr (std::is_same_v<T, Int>) {
    return eval_exact(h, k);
  } else {
    return eval_float(h, k);
  }
}

template <typename T>
T path_sum(int n, const WeightFunction& h) {
  return sum_over<T>(1, n - 1, [&](int k) { return scaled<T>(n - k, h_at<T>(h, k)); });
}

template <typename T>
T cycle_sum(int n, const WeightFunction& h) {
  if (n % 2 == 1) {
    return sum_over<T>(1, (n - 1) / 2, [&](int j) { return scaled<T>(n, h_at<T>(h, j)); });
  }
  const T head = sum_over<T>(1, n / 2 - 1, [&](int j) { return scaled<T>(n, h_at<T>(h, j)); });
  return plus(head, scaled<T>(n / 2, h_at<T>(h, n / 2)));
}

template <typename T>
T jn_sum(int n, const WeightFunction& h) {
  const Int pairs_at_two = static_cast<Int>(n) * (n - 3) / 2;
  return plus(scaled<T>(n, h_at<T>(h, 1)), scaled<T>(pairs_at_two, h_at<T>(h, 2)));
}

template <typename T>
T f_sum(int r, int n, const WeightFunction& h) {
  const int tail = n - r;
  auto hk = [&](int k) { return h_at<T>(h, k); };
  if (r % 2 == 1) {
    const int half = (r - 1) / 2;
    const T cycle_part = sum_over<T>(1, half, [&](int j) { return scaled<T>(r, hk(j)); });
    const T path_part = sum_over<T>(1, tail, [&](int j) { return scaled<T>(n - r + 1 - j, hk(j)); });
    const T cross = sum_over<T>(1, tail, [&](int k) {
      return sum_over<T>(1, half, [&](int j) { return hk(k + j); });
    });
    return plus(plus(cycle_part, path_part), scaled<T>(2, cross));
  }
  const int half = r / 2;
  const T cycle_part = sum_over<T>(1, half - 1, [&](int j) { return scaled<T>(r, hk(j)); });
  const T antipodal = scaled<T>(half, hk(half));
  const T path_part = sum_over<T>(1, tail, [&](int j) { return scaled<T>(n - r + 1 - j, hk(j)); });
  const T cross = sum_over<T>(1, tail, [&](int k) {
    return sum_over<T>(1, half - 1, [&](int j) { return hk(k + j); });
  });
  const T cross_antipodal = sum_over<T>(1, tail, [&](int k) { return hk(half + k); });
  return plus(plus(plus(plus(cycle_part, antipodal), path_part), scaled<T>(2, cross)), cross_antipodal);
}

template <typename Fn>
IndexValue dispatch(std::string name, const WeightFunction& h, Fn&& fn) {
  if (h.is_integer_valued()) return IndexValue::exact(std::move(name), Rational(fn(Int{})));
  return IndexValue::floating(std::move(name), fn(double{}));
}

}  // namespace

IndexValue wh_path(int n, const WeightFunction& h) {
  if (n < 1) throw DomainError("path needs n >= 1");
  if (h.needs_diameter()) return wh_path(n, h.with_diameter(std::max(n - 1, 1)));
  return dispatch("W_h(P_" + std::to_string(n) + ")", h,
                  [&](auto tag) { return path_sum<decltype(tag)>(n, h); });
}

IndexValue wh_cycle(int n, const WeightFunction& h) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  if (h.needs_diameter()) return wh_cycle(n, h.with_diameter(n / 2));
  return dispatch("W_h(C_" + std::to_string(n) + ")", h,
                  [&](auto tag) { return cycle_sum<decltype(tag)>(n, h); });
}

IndexValue wh_jn(int n, const WeightFunction& h) {
  if (n < 4) throw DomainError("J_n needs n >= 4");
  if (h.needs_diameter()) return wh_jn(n, h.with_diameter(2));
  return dispatch("W_h(J_" + std::to_string(n) + ")", h,
                  [&](auto tag) { return jn_sum<decltype(tag)>(n, h); });
}

IndexValue f_closed(int r, int n, const WeightFunction& h) {
  if (r < 3 || r > n) {
    throw DomainError("F_h(r, n) needs 3 <= r <= n (got r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")");
  }
  if (h.needs_diameter()) return f_closed(r, n, h.with_diameter(n - r + r / 2));
  return dispatch("F_h(" + std::to_string(r) + "," + std::to_string(n) + ")", h,
                  [&](auto tag) { return f_sum<decltype(tag)>(r, n, h); });
}

IndexValue f3_collapsed(int n, const WeightFunction& h) {
  if (n < 3) throw DomainError("F_h(3, n) needs n >= 3");
  if (h.needs_diameter()) return f3_collapsed(n, h.with_diameter(n - 2));
  return dispatch("F_h(3," + std::to_string(n) + ")", h, [&](auto tag) {
    using T = decltype(tag);
    const T tail = sum_over<T>(2, n - 2, [&](int j) { return scaled<T>(n - j, h_at<T>(h, j)); });
    return plus(scaled<T>(n, h_at<T>(h, 1)), tail);
  });
}

}  // namespace hwiener
