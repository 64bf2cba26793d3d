#include "quiltlab/figure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/rational.hpp>
#include <fmt/format.h>

namespace quiltlab {

namespace {

using std::numbers::pi;
using Rational = boost::rational<long long>;

Point2 mu2(const ProjectivePoint& p) {
  const auto m = moment_cp2(p);
  return {m.m1 + 0.0, m.m2 + 0.0};  // no negative zeros in the CSV
}

double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Distance from p to the segment [a, b].
double segment_offset(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy), 0.0, 1.0);
  return dist(p, {a.x + t * dx, a.y + t * dy});
}

double outside_triangle(Point2 p) { return std::max({p.x, p.y, -0.5 - p.x - p.y, 0.0}); }

// Exact squared modulus of a lift coordinate that is known to be an integer.
std::optional<long long> exact_integer(double v) {
  const double r = std::round(v);
  if (r != v || std::abs(r) > 1e15) return std::nullopt;
  return static_cast<long long>(r);
}

void require_acw_shape(const Quilt& q) {
  if (q.patches.size() != 2 || q.patches[0].target_dim() != 2 || q.patches[1].target_dim() != 1 ||
      q.patches[0].region().kind != RegionKind::Strip || q.patches[0].region().y_lo != 0.0 ||
      q.patches[0].region().y_hi != 1.0 || q.patches[1].region().kind != RegionKind::HalfPlaneAbove)
    throw CatalogError(fmt::format("moment figure needs a CP^2 strip 0 <= Im z <= 1 under a CP^1 half-plane; got {}",
                                   q.label));
}

}  // namespace

double ellipse_residual(Point2 p) {
  const double x = p.x, y = p.y;
  return 100 * x * x + 16 * x * y + 16 * y * y + 20 * x + 8 * y + 1;
}

FigureData emit_moment_figure(const Quilt& q, const FigureOptions& opts) {
  require_acw_shape(q);
  if (opts.samples < 2) throw std::invalid_argument("moment figure: need at least 2 samples per curve");
  const auto& u2 = q.patches[0];
  const auto& u1 = q.patches[1];
  const std::size_t n = opts.samples;
  FigureData f;
  auto& c = f.checks;

  f.triangle = {{0.0, 0.0}, {-0.5, 0.0}, {0.0, -0.5}};

  // Segment endpoints from the extreme points of each Lagrangian.
  const double r = 1.0 / std::sqrt(2.0);
  f.lambda_segment = {mu2(ProjectivePoint{0.0, 1.0, r}), mu2(ProjectivePoint{1.0, 0.0, r})};
  c.lambda_endpoint_error =
      std::max(dist(f.lambda_segment[0], {-1.0 / 3, -1.0 / 6}), dist(f.lambda_segment[1], {0.0, -1.0 / 6}));
  // [A + iB : i sqrt2 C : A - iB] at (A,B,C) = (0,0,1) and (1,0,0).
  f.lac_segment = {mu2(ProjectivePoint{0.0, Complex(0.0, std::sqrt(2.0)), 0.0}), mu2(ProjectivePoint{1.0, 0.0, 1.0})};
  c.lac_endpoint_error = std::max(dist(f.lac_segment[0], {-0.5, 0.0}), dist(f.lac_segment[1], {0.0, -0.25}));

  // Edges of u_2 for x >= 0, x = 6 tan t.
  std::vector<Point2> bottom, top;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = 6.0 * std::tan(0.5 * pi * static_cast<double>(k) / static_cast<double>(n));
    bottom.push_back(mu2(u2(Complex(x, 0.0))));
    top.push_back(mu2(u2(Complex(x, 1.0))));
  }
  f.lac_samples = bottom;
  f.lambda_samples = top;
  for (const auto& p : bottom) c.lac_offset = std::max(c.lac_offset, segment_offset(p, f.lac_segment[0], f.lac_segment[1]));
  for (const auto& p : top)
    c.lambda_offset = std::max(c.lambda_offset, segment_offset(p, f.lambda_segment[0], f.lambda_segment[1]));

  // The fold line Re z = 0 maps onto the ellipse arc.
  for (std::size_t k = 0; k < n; ++k) {
    const double y = static_cast<double>(k) / static_cast<double>(n - 1);
    const auto p = mu2(u2(Complex(0.0, y)));
    const double e = ellipse_residual(p);
    f.ellipse.push_back({p, e});
    c.ellipse_residual = std::max(c.ellipse_residual, std::abs(e));
  }

  f.region_boundary = bottom;
  f.region_boundary.insert(f.region_boundary.end(), top.rbegin(), top.rend());
  for (auto it = f.ellipse.rbegin(); it != f.ellipse.rend(); ++it) f.region_boundary.push_back(it->first);

  c.mu_u2_origin = mu2(u2(0.0));
  c.mu_u2_origin_error = dist(c.mu_u2_origin, {0.0, -0.25});

  // Seam corner in exact arithmetic: the lift at z = i has integer squared moduli.
  {
    const auto l = u2.lift(Complex(0.0, 1.0));
    std::array<std::optional<long long>, 3> m{exact_integer(std::norm(l[0])), exact_integer(std::norm(l[1])),
                                              exact_integer(std::norm(l[2]))};
    if (m[0] && m[1] && m[2]) {
      const Rational total(2 * (*m[0] + *m[1] + *m[2]));
      const Rational x = -Rational(*m[1]) / total, y = -Rational(*m[2]) / total;
      const Rational e = 100 * x * x + 16 * x * y + 16 * y * y + 20 * x + 8 * y + 1;
      c.ellipse_exact = e == Rational(0) && x == Rational(-1, 150) && y == Rational(-1, 6);
    }
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> ux(0.0, 20.0), uy(0.0, 1.0);
  for (std::size_t k = 0; k < opts.symmetry_pairs; ++k) {
    const double x = ux(rng), y = uy(rng);
    const auto a = mu2(u2(Complex(x, y)));
    const auto b = mu2(u2(Complex(-x, y)));
    const double gap = dist(a, b);
    f.symmetry.push_back({a, gap});
    c.symmetry = std::max(c.symmetry, gap);
  }

  for (double y : {1.0, 1.5, 3.0, 10.0})
    for (std::size_t k = 0; k < n; ++k) {
      const double x = 6.0 * std::tan(pi * (static_cast<double>(k) / static_cast<double>(n) - 0.5) * 0.98);
      const auto m = moment_cp1_lift(u1(Complex(x, y)));
      f.u1_samples.push_back({m.m1, m.m2});
      c.u1_offset = std::max(c.u1_offset, std::abs(m.m2 + 1.0 / 6));
    }

  for (const auto* layer : {&f.lambda_samples, &f.lac_samples, &f.region_boundary, &f.u1_samples})
    for (const auto& p : *layer) c.triangle_violation = std::max(c.triangle_violation, outside_triangle(p));

  constexpr double tol = 1e-12;
  c.pass = c.lambda_endpoint_error <= tol && c.lac_endpoint_error <= tol && c.lambda_offset <= tol &&
           c.lac_offset <= tol && c.ellipse_exact && c.mu_u2_origin_error <= tol && c.ellipse_residual <= tol &&
           c.symmetry <= tol && c.u1_offset <= tol && c.triangle_violation <= tol;
  return f;
}

std::vector<std::pair<std::string, std::string>> figure_csv(const FigureData& f) {
  auto points = [](const std::vector<Point2>& ps) {
    std::string s = "x,y\n";
    for (const auto& p : ps) s += fmt::format("{:.17g},{:.17g}\n", p.x, p.y);
    return s;
  };
  auto with_residual = [](const std::vector<std::pair<Point2, double>>& ps) {
    std::string s = "x,y,residual\n";
    for (const auto& [p, r] : ps) s += fmt::format("{:.17g},{:.17g},{:.17g}\n", p.x, p.y, r);
    return s;
  };
  return {{"triangle.csv", points(f.triangle)},
          {"lambda_segment.csv", points(f.lambda_segment)},
          {"lac_segment.csv", points(f.lac_segment)},
          {"lambda_samples.csv", points(f.lambda_samples)},
          {"lac_samples.csv", points(f.lac_samples)},
          {"region_boundary.csv", points(f.region_boundary)},
          {"ellipse.csv", with_residual(f.ellipse)},
          {"u1_samples.csv", points(f.u1_samples)},
          {"symmetry.csv", with_residual(f.symmetry)}};
}

std::string figure_svg(const FigureData& f) {
  constexpr double scale = 1000.0, pad = 0.05;
  auto px = [&](Point2 p) { return fmt::format("{:.3f},{:.3f}", (p.x + 0.5 + pad) * scale, (pad - p.y) * scale); };
  auto poly = [&](const std::vector<Point2>& ps) {
    std::string s;
    for (const auto& p : ps) s += px(p) + ' ';
    if (!s.empty()) s.pop_back();
    return s;
  };
  const double size = (0.5 + 2 * pad) * scale;
  std::string s = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{0:.0f}\" viewBox=\"0 0 {0:.0f} {0:.0f}\">\n",
      size);
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += fmt::format("<polygon points=\"{}\" fill=\"#cde6f7\" stroke=\"#5b8db8\" stroke-width=\"2\"/>\n", poly(f.triangle));
  s += fmt::format("<polygon points=\"{}\" fill=\"#2f6fb0\" fill-opacity=\"0.6\" stroke=\"#1c4d80\" stroke-width=\"1\"/>\n",
                   poly(f.region_boundary));
  s += fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n",
                   poly(f.lambda_segment));
  s += fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"#b03030\" stroke-width=\"3\"/>\n",
                   poly(f.lac_segment));
  if (!f.u1_samples.empty()) {
    const auto [lo, hi] = std::minmax_element(f.u1_samples.begin(), f.u1_samples.end(),
                                              [](Point2 a, Point2 b) { return a.x < b.x; });
    s += fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"#2a9d3a\" stroke-width=\"5\"/>\n",
                     poly({*lo, *hi}));
  }
  s += "</svg>\n";
  return s;
}

}  // namespace quiltlab
