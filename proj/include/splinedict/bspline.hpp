#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace splinedict {

/// Binomial coefficient C(n, k) as a double; exact while the intermediate
/// products stay below 2^53 (amply true for the orders used here).
[[nodiscard]] constexpr double binomial(int n, int k) noexcept {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

[[nodiscard]] constexpr double factorial(int n) noexcept {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= static_cast<double>(i);
  return r;
}

namespace detail {

/// Alternating truncated-power form of the cardinal B-spline. Fine for small
/// orders; the alternating sum cancels catastrophically as the order grows.
template <typename Scalar>
[[nodiscard]] Scalar truncated_power_sum(int order, Scalar x) {
  const int m = order;
  Scalar acc = 0;
  for (int i = 0; i <= m; ++i) {
    const Scalar t = x - static_cast<Scalar>(i);
    if (!(t > Scalar(0))) break;  // remaining terms vanish as well
    Scalar p = 1;
    for (int j = 0; j < m - 1; ++j) p *= t;
    const Scalar term = static_cast<Scalar>(binomial(m, i)) * p;
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc / static_cast<Scalar>(factorial(m - 1));
}

/// Cox-de Boor triangle over a non-decreasing knot window y[0..m]; returns the
/// partition-of-unity normalized value. Zero-length spans contribute nothing
/// (the 0/0 branches resolve to 0). With `left_limit` set, evaluation at a
/// knot takes the polynomial piece ending there instead of the one starting
/// there, i.e. the value of the left limit at jump points.
template <typename Scalar>
[[nodiscard]] Scalar cox_de_boor(std::span<const Scalar> y, Scalar x, bool left_limit) {
  const int m = static_cast<int>(y.size()) - 1;
  std::vector<Scalar> v(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const bool inside = left_limit ? (y[j] < x && x <= y[j + 1])
                                   : (x >= y[j] && x < y[j + 1]);
    v[static_cast<std::size_t>(j)] = inside ? Scalar(1) : Scalar(0);
  }
  for (int p = 2; p <= m; ++p) {
    for (int j = 0; j + p <= m; ++j) {
      Scalar acc = 0;
      const Scalar dl = y[j + p - 1] - y[j];
      if (dl > Scalar(0)) acc += (x - y[j]) / dl * v[static_cast<std::size_t>(j)];
      const Scalar dr = y[j + p] - y[j + 1];
      if (dr > Scalar(0)) acc += (y[j + p] - x) / dr * v[static_cast<std::size_t>(j) + 1];
      v[static_cast<std::size_t>(j)] = acc;
    }
  }
  return v[0];
}

}  // namespace detail

/// Cardinal B-spline of the given order on the knots {0, 1, ..., order}:
/// unit integral, strictly positive on (0, order), zero outside. Order 1 is
/// the right-open indicator of [0, 1). The closed form is used up to order 8;
/// beyond that it loses digits to cancellation and the knot recursion takes
/// over.
template <typename Scalar>
[[nodiscard]] Scalar cardinal_bspline(int order, Scalar x) {
  if (order < 1) throw std::invalid_argument("invalid-order: B-spline order must be >= 1");
  if (order == 1) return (x >= Scalar(0) && x < Scalar(1)) ? Scalar(1) : Scalar(0);
  if (!(x > Scalar(0)) || !(x < Scalar(order))) return Scalar(0);
  if (order <= 8) return detail::truncated_power_sum(order, x);
  std::vector<Scalar> y(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) y[static_cast<std::size_t>(i)] = Scalar(i);
  return detail::cox_de_boor<Scalar>(y, x, false);
}

/// B-spline of order knots.size()-1 over an arbitrary non-decreasing knot
/// window, scaled to unit integral: order/(y_m - y_0) times the
/// partition-of-unity B-spline. On an equally spaced window with gap b this
/// equals (1/b)*cardinal_bspline(order, (x - y_0)/b). `left_limit` selects
/// the value of the piece ending at x when x is a knot; it matters where a
/// full-multiplicity end knot makes the function jump.
template <typename Scalar>
[[nodiscard]] Scalar bspline_from_knots(std::span<const Scalar> knots, Scalar x,
                                        bool left_limit = false) {
  if (knots.size() < 2) throw std::invalid_argument("invalid-order: a knot window needs at least 2 entries");
  const int m = static_cast<int>(knots.size()) - 1;
  for (int i = 0; i < m; ++i) {
    if (knots[static_cast<std::size_t>(i) + 1] < knots[static_cast<std::size_t>(i)])
      throw std::invalid_argument("degenerate-knot: knot window must be non-decreasing");
  }
  if (!(knots[static_cast<std::size_t>(m)] > knots[0]))
    throw std::invalid_argument("degenerate-knot: all knots in the window coincide");
  return detail::cox_de_boor(knots, x, left_limit) * static_cast<Scalar>(m) /
         (knots[static_cast<std::size_t>(m)] - knots[0]);
}

template <typename Scalar>
[[nodiscard]] Scalar bspline_from_knots(const std::vector<Scalar>& knots, Scalar x,
                                        bool left_limit = false) {
  return bspline_from_knots(std::span<const Scalar>(knots), x, left_limit);
}

}  // namespace splinedict
