#include "quiltlab/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace quiltlab {

using std::numbers::pi;

namespace {

constexpr Complex kI{0.0, 1.0};

void require_height(double h) {
  if (!(h > 0.0 && h <= pi / 2))
    throw AnalysisError("strip height must lie in (0, pi/2], got " + std::to_string(h));
}

// log(1 + e^{2s}) without overflow.
double boundary_log_data(double s) {
  return s > 0.0 ? 2.0 * s + std::log1p(std::exp(-2.0 * s)) : std::log1p(std::exp(2.0 * s));
}

// sech(u) and tanh(u) for |Im u| < pi/2, stable for large |Re u|.
struct SechTanh {
  Complex sech, tanh;
};
SechTanh sech_tanh(Complex u) {
  const bool flip = u.real() < 0.0;
  const Complex v = flip ? -u : u;
  const Complex e = std::exp(-v);
  const Complex e2 = e * e;
  const Complex denom = 1.0 + e2;
  SechTanh r{2.0 * e / denom, (1.0 - e2) / denom};
  if (flip) r.tanh = -r.tanh;
  return r;
}

// log|e^{2z} + 1|
double log_abs_exp2_plus_one(Complex z) {
  if (z.real() > 0.0) return 2.0 * z.real() + std::log(std::abs(1.0 + std::exp(-2.0 * z)));
  return std::log(std::abs(1.0 + std::exp(2.0 * z)));
}

}  // namespace

Complex strip_to_halfplane(Complex z, double h) {
  require_height(h);
  return kI * std::exp(pi * z / (2.0 * h));
}

Complex halfplane_to_strip(Complex w, double h) {
  require_height(h);
  if (w == Complex(0.0)) throw AnalysisError("halfplane_to_strip: w = 0 has no image");
  return (2.0 * h / pi) * std::log(-kI * w);
}

PoissonSolution::PoissonSolution(double h, Sign sign, QuadratureOptions opts)
    : h_(h), sign_(sign), opts_(opts) {
  require_height(h);
}

// After the substitution |t| = exp(k s), k = pi/2h, the two half-lines of the
// half-plane integral combine into
//   log f_+(z) = (k / 2 pi) * int log(1 + e^{2s}) sech(k (z - s)) ds,
// a strip Poisson integral whose kernel has its poles on Im z = +/- h.
template <bool WithDerivative>
auto PoissonSolution::integrate(Complex z) const {
  const double k = pi / (2.0 * h_);
  const double x = z.real();
  const double span = (45.0 + std::log(2.0 + std::abs(x))) / k;
  const double lo = std::min(x, 0.0) - span;
  const double hi = std::max(x, 0.0) + span;
  const std::array<double, 2> cuts{std::min(x, 0.0), std::max(x, 0.0)};
  if constexpr (WithDerivative) {
    auto integrand = [&](double s) {
      const auto st = sech_tanh(k * (z - s));
      const double phi = boundary_log_data(s);
      return std::array<Complex, 2>{phi * st.sech, -k * phi * st.sech * st.tanh};
    };
    return integrate_interval(integrand, lo, hi, opts_, cuts);
  } else {
    auto integrand = [&](double s) { return boundary_log_data(s) * sech_tanh(k * (z - s)).sech; };
    return integrate_interval(integrand, lo, hi, opts_, cuts);
  }
}

namespace {
void check_doubled_strip(Complex z, double h) {
  if (!(std::abs(z.imag()) < h))
    throw BoundaryEvaluationError("Poisson solution evaluated at Im z = " + std::to_string(z.imag()) +
                                  ", outside the open doubled strip |Im z| < " + std::to_string(h));
}

void check_budget(bool converged, Complex best, double err) {
  if (!converged)
    throw QuadratureBudgetError("Poisson integral did not converge within the evaluation budget",
                                best, err);
}
}  // namespace

PoissonSolution::LogJet PoissonSolution::log_jet(Complex z) const {
  check_doubled_strip(z, h_);
  const double k = pi / (2.0 * h_);
  const auto r = integrate<true>(z);
  const double scale = k / (2.0 * pi);
  LogJet jet;
  jet.log_value = scale * r.value[0];
  jet.log_derivative = scale * r.value[1];
  jet.error_estimate = scale * r.error_estimate;
  jet.evaluations = r.evaluations;
  check_budget(r.converged, jet.log_value, jet.error_estimate);
  if (sign_ == Sign::Minus) jet.log_value += Complex(0.0, pi);
  return jet;
}

Complex PoissonSolution::log_value(Complex z) const {
  check_doubled_strip(z, h_);
  const double k = pi / (2.0 * h_);
  const auto r = integrate<false>(z);
  const Complex v = (k / (2.0 * pi)) * r.value;
  check_budget(r.converged, v, r.error_estimate);
  return sign_ == Sign::Minus ? v + Complex(0.0, pi) : v;
}

Complex PoissonSolution::operator()(Complex z) const { return f_eval(*this, z); }

Complex f_eval(const PoissonSolution& sol, Complex z) {
  const double h = sol.height();
  if (z.imag() == h) throw BoundaryEvaluationError("f_eval on the top edge Im z = h; use boundary_modulus");
  if (z.imag() < 0.0 || z.imag() > h)
    throw AnalysisError("f_eval: Im z = " + std::to_string(z.imag()) + " outside [0, h)");
  // The sign is an exact prefactor, so evaluate f_+ and negate.
  const Complex plus = std::exp(PoissonSolution(h, Sign::Plus, sol.options()).log_value(z));
  return sol.sign() == Sign::Plus ? plus : -plus;
}

Complex g_eval(Complex w, double h, Sign sign, QuadratureOptions opts) {
  require_height(h);
  if (w == Complex(0.0)) throw AnalysisError("g_eval: w = 0 is excluded from the domain");
  if (w.imag() < 0.0) throw AnalysisError("g_eval: Im w < 0 lies outside the upper half-plane");
  if (w.imag() == 0.0)
    throw BoundaryEvaluationError("g_eval on the real axis; use boundary_modulus on the strip side");
  const Complex z = halfplane_to_strip(w, h);
  const Complex plus = std::exp(PoissonSolution(h, Sign::Plus, opts).log_value(z));
  return sign == Sign::Plus ? plus : -plus;
}

BoundaryModulus boundary_modulus(const PoissonSolution& sol, double x) {
  if (!std::isfinite(x)) throw AnalysisError("boundary_modulus: non-finite x");
  const double h = sol.height();
  const std::array<double, 3> eps{1e-2 * h, 1e-3 * h, 1e-4 * h};
  std::array<double, 3> val{};
  for (std::size_t i = 0; i < 3; ++i)
    val[i] = std::exp(2.0 * sol.log_value(Complex(x, h - eps[i])).real());

  // Neville's scheme evaluated at eps = 0.
  auto lin = [&](std::size_t i, std::size_t j, double a, double b) {
    return (eps[j] * a - eps[i] * b) / (eps[j] - eps[i]);
  };
  const double p01 = lin(0, 1, val[0], val[1]);
  const double p12 = lin(1, 2, val[1], val[2]);
  const double p012 = lin(0, 2, p01, p12);

  BoundaryModulus out;
  out.value = p012;
  out.spread = std::abs(p012 - p12) / std::max(std::abs(p012), 1e-300);
  out.converged = std::isfinite(p012) && out.spread < 1e-5;
  return out;
}

double asymptotic_ratio(const PoissonSolution& sol, double re_z, double im_z) {
  const double h = sol.height();
  if (im_z < 0.0 || im_z >= h) throw AnalysisError("asymptotic_ratio: Im z outside [0, h)");
  const Complex z(re_z, im_z);
  return std::exp(2.0 * sol.log_value(z).real() - log_abs_exp2_plus_one(z));
}

void BlaschkeData::validate() const {
  require_height(h);
  std::vector<bool> used(alphas.size(), false);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const Complex a = alphas[i];
    if (!(a.real() > 0.0))
      throw AnalysisError("Blaschke parameter with Re alpha <= 0");
    if (used[i]) continue;
    const double tol = 1e-12 * std::max(1.0, std::abs(a));
    used[i] = true;
    if (std::abs(a.imag()) <= tol) continue;
    bool paired = false;
    for (std::size_t j = i + 1; j < alphas.size() && !paired; ++j) {
      if (!used[j] && std::abs(alphas[j] - std::conj(a)) <= tol) {
        used[j] = true;
        paired = true;
      }
    }
    if (!paired) throw AnalysisError("Blaschke parameters are not closed under conjugation");
  }
}

BlaschkeJet blaschke_jet(const BlaschkeData& data, Complex z) {
  data.validate();
  const double h = data.h;
  if (std::abs(z.imag()) > h * (1.0 + 1e-12))
    throw AnalysisError("blaschke_eval: z outside the closed strip");
  const double k = pi / (2.0 * h);
  const Complex w = k * z;
  // Each factor and its derivative, written in E or 1/E so that neither overflows.
  const bool large = w.real() > 0.0;
  const Complex e = large ? std::exp(-w) : std::exp(w);
  BlaschkeJet out{1.0, 0.0};
  for (const Complex a : data.alphas) {
    const Complex ab = std::conj(a);
    Complex factor, dfactor;
    if (large) {
      const Complex den = 1.0 + ab * e;
      factor = (1.0 - a * e) / den;
      dfactor = k * (a + ab) * e / (den * den);
    } else {
      const Complex den = e + ab;
      factor = (e - a) / den;
      dfactor = k * (a + ab) * e / (den * den);
    }
    out.derivative = out.derivative * factor + out.value * dfactor;
    out.value *= factor;
  }
  return out;
}

Complex blaschke_eval(const BlaschkeData& data, Complex z) { return blaschke_jet(data, z).value; }

namespace {

struct ArgWalker {
  const std::function<Complex(Complex)>& map;
  double total = 0.0;
  int depth_limit = 30;

  Complex sample(Complex z) const {
    const Complex v = map(z);
    if (!(std::abs(v) >= 1e-6))
      throw UnreliableContourError("winding_number: |map| < 1e-6 on the contour near " +
                                   std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i");
    return v;
  }

  void segment(Complex za, Complex fa, Complex zb, Complex fb, int depth) {
    const double turn = std::arg(fb / fa);
    if (std::abs(turn) < pi / 4) {
      total += turn;
      return;
    }
    if (depth >= depth_limit)
      throw UnreliableContourError("winding_number: argument not resolved along the contour");
    const Complex zm = 0.5 * (za + zb);
    const Complex fm = sample(zm);
    segment(za, fa, zm, fm, depth + 1);
    segment(zm, fm, zb, fb, depth + 1);
  }
};

}  // namespace

int winding_number(const std::function<Complex(Complex)>& map, const Rectangle& r) {
  if (!(r.x1 > r.x0 && r.y1 > r.y0)) throw AnalysisError("winding_number: degenerate rectangle");
  const std::array<Complex, 5> corners{Complex(r.x0, r.y0), Complex(r.x1, r.y0), Complex(r.x1, r.y1),
                                       Complex(r.x0, r.y1), Complex(r.x0, r.y0)};
  ArgWalker walker{map};
  constexpr int kBaseSteps = 32;
  for (std::size_t e = 0; e < 4; ++e) {
    Complex za = corners[e];
    Complex fa = walker.sample(za);
    for (int i = 1; i <= kBaseSteps; ++i) {
      const Complex zb = corners[e] + (corners[e + 1] - corners[e]) * (double(i) / kBaseSteps);
      const Complex fb = walker.sample(zb);
      walker.segment(za, fa, zb, fb, 0);
      za = zb;
      fa = fb;
    }
  }
  const double turns = walker.total / (2.0 * pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-6)
    throw UnreliableContourError("winding_number: total turning is not an integer");
  return static_cast<int>(rounded);
}

}  // namespace quiltlab
