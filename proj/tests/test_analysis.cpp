#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "quiltlab/analysis.hpp"

using namespace quiltlab;
using std::numbers::pi;
constexpr Complex I{0.0, 1.0};

// High-precision reference values come from tests/oracles/poisson_oracle.py
// (mpmath, 50 digits, quadrature of the half-plane formula in t).

TEST_CASE("integrate_line self-tests") {
  auto r = integrate_line([](double t) -> Complex { return 1.0 / (1.0 + t * t); });
  CHECK(std::abs(r.value - pi) < 1e-10);
  CHECK(r.error_estimate >= 0.0);

  r = integrate_line([](double t) -> Complex { return std::exp(-t * t); });
  CHECK(std::abs(r.value - std::sqrt(pi)) < 1e-10);

  r = integrate_line([](double t) -> Complex { return std::log1p(t * t) / (1.0 + t * t); }, {0.0, 1.0},
                     {1e-12, 1e-13, 200000});
  CHECK(std::abs(r.value - 4.3551721806072042610) < 1e-8);

  r = integrate_line([](double t) -> Complex { return std::exp(-(t - 40.0) * (t - 40.0)); }, {40.0, 1.0});
  CHECK(std::abs(r.value - std::sqrt(pi)) < 1e-10);
}

TEST_CASE("integrate_line reports budget exhaustion with the best estimate") {
  try {
    integrate_line([](double t) -> Complex { return std::log1p(t * t) / (1.0 + t * t); }, {},
                   {1e-15, 0.0, 60});
    FAIL("expected QuadratureBudgetError");
  } catch (const QuadratureBudgetError& e) {
    CHECK(std::abs(e.best_estimate - 4.355172180607204) < 1e-1);
    CHECK(e.error_estimate >= 0.0);
  }
}

TEST_CASE("strip and half-plane maps") {
  for (double h : {0.3, pi / 4, pi / 2}) {
    CHECK(std::abs(strip_to_halfplane(0.0, h) - I) < 1e-15);
    CHECK(std::abs(strip_to_halfplane(I * h, h) + 1.0) < 1e-15);
  }
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double h = 0.05 + u(rng) * (pi / 2 - 0.05);
    const Complex z(8.0 * (u(rng) - 0.5), h * (2.0 * u(rng) - 1.0) * 0.999);
    CHECK(std::abs(halfplane_to_strip(strip_to_halfplane(z, h), h) - z) < 1e-12);
  }
  CHECK_THROWS_AS(halfplane_to_strip(0.0, 1.0), AnalysisError);
  CHECK_THROWS_AS(strip_to_halfplane(0.0, 0.0), AnalysisError);
  CHECK_THROWS_AS(strip_to_halfplane(0.0, 1.6), AnalysisError);
}

TEST_CASE("g_eval examples") {
  CHECK(std::abs(g_eval(I, pi / 2, Sign::Plus) - 2.0) < 1e-10);
  CHECK(std::abs(g_eval(0.5 + 2.0 * I, pi / 3, Sign::Plus) -
                 Complex(2.2319574079329786088, -0.23761520835613638755)) < 1e-9);
  for (double h : {0.2, pi / 4, 1.2}) {
    CAPTURE(h);
    CHECK(std::abs(std::abs(g_eval(Complex(1.0, 1e-6), h, Sign::Plus)) - std::sqrt(2.0)) < 1e-4);
  }
  CHECK_THROWS_AS(g_eval(0.0, 1.0, Sign::Plus), AnalysisError);
  CHECK_THROWS_AS(g_eval(Complex(0.5, -1.0), 1.0, Sign::Plus), AnalysisError);
  CHECK_THROWS_AS(g_eval(2.0, 1.0, Sign::Plus), BoundaryEvaluationError);
}

TEST_CASE("g at h = pi/2 is 1 - i w") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 30; ++i) {
    const Complex w(u(rng), 0.05 + std::abs(u(rng)));
    CHECK(std::abs(g_eval(w, pi / 2, Sign::Plus) - (1.0 - I * w)) < 1e-9 * std::abs(1.0 - I * w));
  }
}

TEST_CASE("sign is an exact prefactor") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double h = 0.1 + 1.4 * u(rng);
    const Complex w(4.0 * (u(rng) - 0.5), 0.1 + 2.0 * u(rng));
    CHECK(g_eval(w, h, Sign::Minus) == -g_eval(w, h, Sign::Plus));
    const Complex z(4.0 * (u(rng) - 0.5), h * 0.9 * u(rng));
    CHECK(f_eval(PoissonSolution(h, Sign::Minus), z) == -f_eval(PoissonSolution(h, Sign::Plus), z));
  }
  const PoissonSolution p(0.7, Sign::Plus);
  CHECK(p.negated().sign() == Sign::Minus);
}

TEST_CASE("f_eval against the high-precision oracle") {
  const PoissonSolution a(pi / 4, Sign::Plus);
  const Complex v = f_eval(a, 1.0);
  CHECK(std::abs(v.imag()) < 1e-8);
  CHECK(std::abs(v - 3.1054721374020399348) < 1e-9);
  CHECK(std::abs(f_eval(a, Complex(0.3, 0.2)) - Complex(1.8527907559805067869, 0.22645601637231416579)) <
        1e-9);
  const PoissonSolution b(pi / 8, Sign::Plus);
  CHECK(std::abs(f_eval(b, Complex(-0.5, 0.1)) - Complex(1.2010815185386287307, 0.034851820348079174062)) <
        1e-9);
  const PoissonSolution c(1.0, Sign::Plus);
  CHECK(std::abs(f_eval(c, Complex(0.7, 0.5)) - Complex(2.3367086194310178745, 0.87969450107067077572)) <
        1e-9);
}

TEST_CASE("f_eval agrees with g_eval through the strip map") {
  const double h = 0.9;
  const PoissonSolution s(h, Sign::Minus);
  for (Complex z : {Complex(0.2, 0.1), Complex(-2.0, 0.6), Complex(3.0, 0.85)})
    CHECK(std::abs(f_eval(s, z) - g_eval(strip_to_halfplane(z, h), h, Sign::Minus)) <
          1e-12 * std::abs(f_eval(s, z)));
}

TEST_CASE("f_eval domain") {
  const PoissonSolution s(pi / 4, Sign::Plus);
  CHECK_THROWS_AS(f_eval(s, Complex(0.0, pi / 4)), BoundaryEvaluationError);
  CHECK_THROWS_AS(f_eval(s, Complex(0.0, -0.1)), AnalysisError);
  CHECK_THROWS_AS(f_eval(s, Complex(0.0, 1.0)), AnalysisError);
  CHECK_THROWS_AS(PoissonSolution(0.0, Sign::Plus), AnalysisError);
  CHECK_THROWS_AS(s.log_value(Complex(0.0, pi / 4)), BoundaryEvaluationError);
}

TEST_CASE("uniqueness at h = pi/2: f_+ = e^z + 1") {
  const PoissonSolution s(pi / 2, Sign::Plus);
  CHECK(std::abs(f_eval(s, 0.0) - 2.0) < 1e-12);
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Complex z(12.0 * (u(rng) - 0.5), (pi / 2) * 0.999 * u(rng));
    const Complex exact = std::exp(z) + 1.0;
    worst = std::max(worst, std::abs(f_eval(s, z) - exact) / std::abs(exact));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("property: Cauchy-Riemann at random interior points") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0, worst_jet = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double h = 0.1 + 1.45 * u(rng);
    const PoissonSolution s(h, i % 2 ? Sign::Plus : Sign::Minus);
    const double step = 1e-4 * h;
    const Complex z(10.0 * (u(rng) - 0.5), step + (h - 3 * step) * u(rng));
    const Complex fx = (f_eval(s, z + step) - f_eval(s, z - step)) / (2 * step);
    const Complex fy = (f_eval(s, z + I * step) - f_eval(s, z - I * step)) / (2 * step);
    const Complex fz = f_eval(s, z);
    // d f / d zbar = (f_x + i f_y) / 2
    worst = std::max(worst, std::abs(0.5 * (fx + I * fy)) / std::max(1.0, std::abs(fz)));
    const auto jet = s.log_jet(z);
    worst_jet = std::max(worst_jet, std::abs(jet.log_derivative * fz - fx) / std::max(1.0, std::abs(fx)));
  }
  CHECK(worst < 1e-5);
  CHECK(worst_jet < 1e-5);
}

TEST_CASE("property: real on the real axis, Schwarz symmetry of g") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double h = 0.1 + 1.45 * u(rng);
    const PoissonSolution s(h, Sign::Plus);
    const double x = 20.0 * (u(rng) - 0.5);
    const Complex v = f_eval(s, x);
    CHECK(std::abs(v.imag()) < 1e-8 * std::max(1.0, std::abs(v)));
    CHECK(v.real() > 0.0);
    const Complex g = g_eval(I * (0.01 + 5.0 * u(rng)), h, Sign::Plus);
    CHECK(std::abs(g.imag()) < 1e-8);
  }
}

TEST_CASE("boundary_modulus examples") {
  auto b = boundary_modulus(PoissonSolution(pi / 4, Sign::Plus), 0.0);
  CHECK(b.converged);
  CHECK(std::abs(b.value / 2.0 - 1.0) < 1e-4);
  b = boundary_modulus(PoissonSolution(pi / 8, Sign::Plus), 1.0);
  CHECK(std::abs(b.value / (std::exp(2.0) + 1.0) - 1.0) < 1e-4);
  b = boundary_modulus(PoissonSolution(pi / 2, Sign::Minus), -3.0);
  CHECK(std::abs(b.value / (std::exp(-6.0) + 1.0) - 1.0) < 1e-4);
  CHECK_THROWS_AS(boundary_modulus(PoissonSolution(1.0, Sign::Plus), INFINITY), AnalysisError);
}

TEST_CASE("property: boundary law |f(x+ih)|^2 = e^{2x} + 1") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    const double h = 0.05 + 1.5 * u(rng);
    const double x = 16.0 * (u(rng) - 0.5);
    const auto b = boundary_modulus(PoissonSolution(h, Sign::Plus), x);
    CAPTURE(h);
    CAPTURE(x);
    CHECK(std::abs(b.value / (std::exp(2 * x) + 1.0) - 1.0) < 1e-4);
  }
}

TEST_CASE("asymptotic_ratio") {
  CHECK(std::abs(asymptotic_ratio(PoissonSolution(pi / 2, Sign::Plus), 20.0, 0.1) - 1.0) < 1e-3);
  CHECK(std::abs(asymptotic_ratio(PoissonSolution(pi / 4, Sign::Plus), -20.0, 0.1) - 1.0) < 1e-2);
  const double mid = asymptotic_ratio(PoissonSolution(pi / 4, Sign::Plus), 0.0, 0.0);
  CHECK(std::isfinite(mid));
  CHECK(mid > 0.0);
  CHECK(std::abs(asymptotic_ratio(PoissonSolution(0.3, Sign::Minus), 25.0, 0.2) - 1.0) < 1e-3);
}

TEST_CASE("blaschke examples") {
  for (double h : {0.4, pi / 4, pi / 2}) {
    const BlaschkeData one{{1.0}, h};
    CHECK(std::abs(blaschke_eval(one, 0.0)) < 1e-15);
    CHECK(std::abs(blaschke_eval(one, I * h) - I) < 1e-15);
    const BlaschkeData pair{{1.0 + I, 1.0 - I}, h};
    CHECK(std::abs(blaschke_eval(pair, 30.0) - 1.0) < 1e-6);
    CHECK(std::abs(blaschke_eval(pair, Complex(30.0, h / 2)) - 1.0) < 1e-6);
    CHECK(std::abs(blaschke_eval(pair, -40.0) - 1.0) < 1e-6);
  }
  CHECK_THROWS_AS(BlaschkeData({{-1.0}, 1.0}).validate(), AnalysisError);
  CHECK_THROWS_AS(BlaschkeData({{0.0}, 1.0}).validate(), AnalysisError);
  CHECK_THROWS_AS(BlaschkeData({{1.0 + I}, 1.0}).validate(), AnalysisError);
  CHECK_THROWS_AS(blaschke_eval(BlaschkeData{{1.0 + I}, 1.0}, 0.0), AnalysisError);
  CHECK_NOTHROW(BlaschkeData({{2.0, 1.0 + I, 3.0, 1.0 - I}, 1.0}).validate());
}

TEST_CASE("property: Blaschke boundary laws") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double top = 0.0, bottom = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double h = 0.05 + 1.5 * u(rng);
    const Complex a(0.1 + 3.0 * u(rng), 3.0 * (u(rng) - 0.5));
    const BlaschkeData d{{a, std::conj(a), 0.2 + 2.0 * u(rng)}, h};
    const double x = 30.0 * (u(rng) - 0.5);
    top = std::max(top, std::abs(std::abs(blaschke_eval(d, Complex(x, h))) - 1.0));
    bottom = std::max(bottom, std::abs(blaschke_eval(d, x).imag()));
  }
  CHECK(top < 1e-12);
  CHECK(bottom < 1e-12);
}

TEST_CASE("winding numbers") {
  const double h = pi / 4;
  const PoissonSolution s(h, Sign::Plus);
  const std::function<Complex(Complex)> f = [&](Complex z) { return f_eval(s, z); };
  CHECK(winding_number(f, {-5.0, 5.0, h / 10, 9 * h / 10}) == 0);

  // E = 1 + i has Im z = h/2 inside the strip; its conjugate lies below the real axis.
  const BlaschkeData pair{{1.0 + I, 1.0 - I}, h};
  const Complex zero = (2 * h / pi) * std::log(1.0 + I);
  CHECK(std::abs(zero.imag() - h / 2) < 1e-15);
  const std::function<Complex(Complex)> fb = [&](Complex z) { return f_eval(s, z) * blaschke_eval(pair, z); };
  CHECK(winding_number(fb, {-5.0, 5.0, h / 10, 9 * h / 10}) == 1);
  CHECK(winding_number(fb, {zero.real() + 0.5, 5.0, h / 10, 9 * h / 10}) == 0);

  const std::function<Complex(Complex)> ex = [](Complex z) { return std::exp(z); };
  CHECK(winding_number(ex, {-3.0, 7.0, -2.0, 9.0}) == 0);
  const std::function<Complex(Complex)> cube = [](Complex z) { return z * z * z; };
  CHECK(winding_number(cube, {-1.0, 1.5, -0.7, 1.1}) == 3);
  CHECK_THROWS_AS(winding_number(cube, {0.0, 1.0, -1.0, 1.0}), UnreliableContourError);
}
