#include "quiltlab/quadrature.hpp"

#include <string>

namespace quiltlab {

QuadratureResult<std::complex<double>> integrate_line(
    const std::function<std::complex<double>(double)>& integrand, LineDecay decay,
    const QuadratureOptions& opts) {
  if (!(decay.scale > 0.0)) throw std::invalid_argument("integrate_line: scale must be positive");
  auto mapped = [&](double theta) -> std::complex<double> {
    const double c = std::cos(theta);
    return integrand(decay.center + decay.scale * std::tan(theta)) * (decay.scale / (c * c));
  };
  constexpr double half = std::numbers::pi / 2;
  const double cuts[] = {0.0};
  auto r = integrate_interval(mapped, -half, half, opts, cuts);
  if (!r.converged)
    throw QuadratureBudgetError("integrate_line: budget of " + std::to_string(opts.max_evaluations) +
                                    " evaluations exceeded",
                                r.value, r.error_estimate);
  return r;
}

}  // namespace quiltlab
