#pragma once

// Strip <-> half-plane conformal maps, the zero-free Poisson-integral
// solutions f_{+/-} on the strip 0 <= Im z <= h with |f|^2 = e^{2x} + 1 on the
// top edge, Blaschke factors, and argument-principle zero counting.

#include <functional>
#include <stdexcept>
#include <vector>

#include "quiltlab/geometry.hpp"
#include "quiltlab/quadrature.hpp"

namespace quiltlab {

class AnalysisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a value on the top edge Im z = h (or the real axis of the
/// half-plane) is requested from an interior formula; use boundary_modulus.
class BoundaryEvaluationError : public AnalysisError {
 public:
  using AnalysisError::AnalysisError;
};

enum class Sign : int { Plus = 1, Minus = -1 };

constexpr int value(Sign s) { return static_cast<int>(s); }
constexpr Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char sign_char(Sign s) { return s == Sign::Plus ? 'p' : 'm'; }

/// z -> i exp(pi z / 2h).
Complex strip_to_halfplane(Complex z, double h);
/// w -> (2h/pi) Log(-i w), principal branch; throws AnalysisError at w = 0.
Complex halfplane_to_strip(Complex w, double h);

inline QuadratureOptions default_poisson_quadrature() { return {1e-12, 1e-13, 200000}; }

/// The solution f_sign of the strip problem at height h, realised as exp of a
/// Herglotz-type integral. Immutable; evaluation is thread-safe.
///
/// Internally the integral over t in R is rewritten in the variable s with
/// |t| = exp(pi s / 2h): both half-lines become the two edges of the doubled
/// strip, the boundary data becomes log(1 + e^{2s}) and the kernel decays
/// exponentially away from s = 0 and s = Re z.
class PoissonSolution {
 public:
  PoissonSolution(double h, Sign sign, QuadratureOptions opts = default_poisson_quadrature());

  double height() const { return h_; }
  Sign sign() const { return sign_; }
  const QuadratureOptions& options() const { return opts_; }

  /// log f and f'/f on the doubled strip |Im z| < h. log f is continuous in z;
  /// f_minus adds i*pi.
  struct LogJet {
    Complex log_value;
    Complex log_derivative;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
  };
  LogJet log_jet(Complex z) const;
  Complex log_value(Complex z) const;

  /// f(z) for 0 <= Im z < h.
  Complex operator()(Complex z) const;

  /// Same sign flipped: f_- = -f_+.
  PoissonSolution negated() const { return PoissonSolution(h_, flip(sign_), opts_); }

 private:
  template <bool WithDerivative>
  auto integrate(Complex z) const;

  double h_;
  Sign sign_;
  QuadratureOptions opts_;
};

/// g_sign(w) on the closed upper half-plane minus the real axis.
Complex g_eval(Complex w, double h, Sign sign,
               QuadratureOptions opts = default_poisson_quadrature());

/// f_sign(z) for 0 <= Im z < h; BoundaryEvaluationError at Im z = h.
Complex f_eval(const PoissonSolution& sol, Complex z);

struct BoundaryModulus {
  double value = 0.0;    // extrapolated |f(x + ih)|^2
  double spread = 0.0;   // relative gap between the 2- and 3-point extrapolants
  bool converged = true;
};

/// lim_{eps -> 0} |f(x + i(h - eps))|^2 by Richardson extrapolation over
/// eps in {1e-2, 1e-3, 1e-4} h.
BoundaryModulus boundary_modulus(const PoissonSolution& sol, double x);

/// |f(z)^2 / (e^{2z} + 1)| at z = re_z + i im_z.
double asymptotic_ratio(const PoissonSolution& sol, double re_z, double im_z);

/// Conjugation-closed multiset of alpha with Re alpha > 0 for the Blaschke
/// factors prod (E - alpha) / (E + conj alpha), E = exp(pi z / 2h).
struct BlaschkeData {
  std::vector<Complex> alphas;
  double h = 0.0;

  /// Throws AnalysisError when an alpha has Re <= 0 or the multiset is not
  /// closed under conjugation.
  void validate() const;
};

Complex blaschke_eval(const BlaschkeData& data, Complex z);

struct BlaschkeJet {
  Complex value;
  Complex derivative;
};
BlaschkeJet blaschke_jet(const BlaschkeData& data, Complex z);

struct Rectangle {
  double x0, x1, y0, y1;
};

class UnreliableContourError : public AnalysisError {
 public:
  using AnalysisError::AnalysisError;
};

/// Number of zeros of map inside rect, from the total change of arg along the
/// positively oriented boundary (adaptively refined until every step turns
/// the argument by less than pi/4).
int winding_number(const std::function<Complex(Complex)>& map, const Rectangle& rect);

}  // namespace quiltlab
