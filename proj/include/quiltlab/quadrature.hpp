#pragma once

// Globally adaptive Gauss-Kronrod (G10/K21) integration for real-, complex-
// and small-array-valued integrands, plus the tan-compactified line integral.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace quiltlab {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  std::size_t max_evaluations = 200000;
};

template <class V>
struct QuadratureResult {
  V value{};
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

class QuadratureBudgetError : public std::runtime_error {
 public:
  QuadratureBudgetError(const std::string& what, std::complex<double> best, double error)
      : std::runtime_error(what), best_estimate(best), error_estimate(error) {}
  std::complex<double> best_estimate;
  double error_estimate;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }
template <class T, std::size_t N>
double magnitude(const std::array<T, N>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, magnitude(x));
  return m;
}

inline double scaled(double v, double s) { return v * s; }
inline std::complex<double> scaled(std::complex<double> v, double s) { return v * s; }
template <class T, std::size_t N>
std::array<T, N> scaled(std::array<T, N> v, double s) {
  for (auto& x : v) x = scaled(x, s);
  return v;
}

inline void accumulate(double& a, double b) { a += b; }
inline void accumulate(std::complex<double>& a, std::complex<double> b) { a += b; }
template <class T, std::size_t N>
void accumulate(std::array<T, N>& a, const std::array<T, N>& b) {
  for (std::size_t i = 0; i < N; ++i) accumulate(a[i], b[i]);
}

inline double difference(double a, double b) { return std::abs(a - b); }
inline double difference(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }
template <class T, std::size_t N>
double difference(const std::array<T, N>& a, const std::array<T, N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i) m = std::max(m, difference(a[i], b[i]));
  return m;
}

template <class V>
struct Panel {
  double a, b;
  V value;
  double error;
  bool roundoff_limited = false;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// One G10/K21 panel with the QUADPACK error heuristic.
template <class F, class V = std::invoke_result_t<F&, double>>
Panel<V> kronrod_panel(F& f, double a, double b) {
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  const auto& xk = gauss_kronrod<double, 21>::abscissa();
  const auto& wk = gauss_kronrod<double, 21>::weights();
  const auto& wg = gauss<double, 10>::weights();

  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  std::array<V, 21> fx;
  fx[0] = f(c);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    fx[2 * i - 1] = f(c - r * xk[i]);
    fx[2 * i] = f(c + r * xk[i]);
  }
  V kron = scaled(fx[0], wk[0]);
  V gaus{};
  double abs_sum = magnitude(fx[0]) * wk[0];
  for (std::size_t i = 1; i < xk.size(); ++i) {
    V pair = fx[2 * i - 1];
    accumulate(pair, fx[2 * i]);
    accumulate(kron, scaled(pair, wk[i]));
    if (i % 2 == 1) accumulate(gaus, scaled(pair, wg[i / 2]));
    abs_sum += wk[i] * (magnitude(fx[2 * i - 1]) + magnitude(fx[2 * i]));
  }
  // resasc: spread of f about its mean
  const V mean = scaled(kron, 0.5);
  double asc = wk[0] * difference(fx[0], mean);
  for (std::size_t i = 1; i < xk.size(); ++i)
    asc += wk[i] * (difference(fx[2 * i - 1], mean) + difference(fx[2 * i], mean));

  double err = difference(kron, gaus) * std::abs(r);
  asc *= std::abs(r);
  abs_sum *= std::abs(r);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  bool floor = false;
  if (abs_sum > std::numeric_limits<double>::min() / (50 * eps) && 50 * eps * abs_sum >= err) {
    err = 50 * eps * abs_sum;
    floor = true;
  }
  return {a, b, scaled(kron, r), err, floor};
}

}  // namespace detail

/// Adaptive integration of f over [a, b], refining the panel with the
/// largest error first. Breakpoints (inside (a,b)) seed the initial panels.
/// Never throws for lack of convergence; check QuadratureResult::converged.
template <class F, class V = std::invoke_result_t<F&, double>>
QuadratureResult<V> integrate_interval(F&& f, double a, double b, const QuadratureOptions& opts = {},
                                       std::span<const double> breakpoints = {}) {
  std::vector<double> cuts{a};
  for (double p : breakpoints)
    if (p > a && p < b) cuts.push_back(p);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<detail::Panel<V>> heap;
  QuadratureResult<V> res;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    auto p = detail::kronrod_panel(f, cuts[i], cuts[i + 1]);
    res.evaluations += 21;
    total_err += p.error;
    heap.push(p);
  }
  auto total = [&] {
    V s{};
    auto copy = heap;
    while (!copy.empty()) {
      detail::accumulate(s, copy.top().value);
      copy.pop();
    }
    return s;
  };
  V value = total();
  // Bookkeeping by increments; the full sum is recomputed at the end to shed
  // accumulated rounding.
  while (total_err > std::max(opts.abs_tol, opts.rel_tol * detail::magnitude(value))) {
    if (res.evaluations + 42 > opts.max_evaluations) {
      res.converged = false;
      break;
    }
    auto worst = heap.top();
    // The largest remaining error is already at the rounding floor; splitting
    // cannot reduce it.
    if (worst.roundoff_limited) break;
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {  // cannot split further
      res.converged = false;
      break;
    }
    heap.pop();
    auto left = detail::kronrod_panel(f, worst.a, mid);
    auto right = detail::kronrod_panel(f, mid, worst.b);
    res.evaluations += 42;
    total_err += left.error + right.error - worst.error;
    detail::accumulate(value, detail::scaled(worst.value, -1.0));
    detail::accumulate(value, left.value);
    detail::accumulate(value, right.value);
    heap.push(left);
    heap.push(right);
  }
  res.value = total();
  res.error_estimate = 0.0;
  for (auto copy = heap; !copy.empty(); copy.pop()) res.error_estimate += copy.top().error;
  return res;
}

/// Where the mass of a line integrand sits: t = center + scale * tan(theta).
struct LineDecay {
  double center = 0.0;
  double scale = 1.0;
};

/// Integral over the real line of an integrand decaying at least like
/// log|t|/t^2, by compactifying theta in (-pi/2, pi/2). Throws
/// QuadratureBudgetError (carrying the best estimate) when the budget runs out.
QuadratureResult<std::complex<double>> integrate_line(
    const std::function<std::complex<double>(double)>& integrand, LineDecay decay = {},
    const QuadratureOptions& opts = {});

}  // namespace quiltlab
