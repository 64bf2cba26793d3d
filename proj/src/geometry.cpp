#include "quiltlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace quiltlab {

namespace {

// Coordinates below this modulus (on the unit representative) do not fix the
// canonical phase.
constexpr double kPhaseFloor = 1e-13;

double norm_sq(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return s;
}

// sum_{j<k} |a_j b_k - a_k b_j|^2 = |a|^2 |b|^2 - |<a,b>|^2, without cancellation.
double gram_defect(std::span<const Complex> a, std::span<const Complex> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = j + 1; k < a.size(); ++k) s += std::norm(a[j] * b[k] - a[k] * b[j]);
  return s;
}

void require_dimension(const ProjectivePoint& p, std::size_t n, const char* what) {
  if (p.dimension() != n)
    throw GeometryError(std::string(what) + ": expected a point of CP^" + std::to_string(n) +
                        ", got CP^" + std::to_string(p.dimension()));
}

// sqrt((1 - |sum p_k^2|) / 2): the smallest imaginary-part norm over global
// phases. Uses 1 - |S| = 4 sum_{j<k} Im(p_j conj p_k)^2 / (1 + |S|).
double real_locus_residual(const ProjectivePoint& p) {
  const auto c = p.coords();
  Complex s = 0.0;
  double cross = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    s += c[j] * c[j];
    for (std::size_t k = j + 1; k < c.size(); ++k) {
      const double im = std::imag(c[j] * std::conj(c[k]));
      cross += im * im;
    }
  }
  return std::sqrt(2.0 * cross / (1.0 + std::abs(s)));
}

double modulus_gap(const ProjectivePoint& p) {
  double lo = 1.0, hi = 0.0;
  for (const auto& c : p.coords()) {
    lo = std::min(lo, std::norm(c));
    hi = std::max(hi, std::norm(c));
  }
  return hi - lo;
}

double level_residual(const ProjectivePoint& p) {
  return std::abs(2.0 * std::norm(p[2]) - std::norm(p[0]) - std::norm(p[1]));
}

// Points [A+iB : i sqrt2 C : A-iB]. On the unit representative membership is
// |p0| = |p2| and s = p1^2 conj(p0 p2) <= 0. The phase defect of s is divided
// by sqrt|s|, which makes it first order in the distance (about sqrt2 times).
double lac_residual(const ProjectivePoint& p) {
  const Complex s = p[1] * p[1] * std::conj(p[0] * p[2]);
  const double gap = std::abs(std::norm(p[0]) - std::norm(p[2]));
  const double phase = std::abs(s.imag()) + std::max(0.0, s.real());
  const double m = std::sqrt(std::abs(s));
  return std::max(gap, m > 0.0 ? phase / m : 0.0);
}

}  // namespace

ProjectivePoint::ProjectivePoint(std::span<const Complex> raw) : coords_(raw.begin(), raw.end()) {
  if (coords_.size() < 2) throw GeometryError("projective point needs at least two coordinates");
  double scale = 0.0;
  for (const auto& c : coords_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw GeometryError("projective point has a non-finite coordinate");
    scale = std::max(scale, std::abs(c));
  }
  if (scale == 0.0) throw GeometryError("all homogeneous coordinates are zero");
  // Rescale first so that the norm cannot overflow.
  for (auto& c : coords_) c /= scale;
  const double norm = std::sqrt(norm_sq(coords_));
  for (auto& c : coords_) c /= norm;
  for (const auto& c : coords_) {
    const double m = std::abs(c);
    if (m > kPhaseFloor) {
      const Complex phase = std::conj(c) / m;
      for (auto& d : coords_) d *= phase;
      break;
    }
  }
}

ProjectivePoint::ProjectivePoint(std::initializer_list<Complex> raw)
    : ProjectivePoint(std::span<const Complex>(raw.begin(), raw.size())) {}

bool ProjectivePoint::approx_equal(const ProjectivePoint& other, double tol) const {
  if (other.dimension() != dimension()) return false;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (std::abs(coords_[i] - other.coords_[i]) > tol) return false;
  return true;
}

ProjectivePoint normalize(std::span<const Complex> raw) { return ProjectivePoint(raw); }

double fs_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.dimension() != q.dimension())
    throw GeometryError("fs_distance: dimension mismatch");
  return std::sqrt(std::min(1.0, gram_defect(p.coords(), q.coords())));
}

double pullback_density(std::span<const Complex> w, std::span<const Complex> dw) {
  if (w.size() != dw.size() || w.empty())
    throw GeometryError("pullback_density: value and derivative sizes differ");
  const double n = static_cast<double>(w.size());
  const double q = 1.0 + norm_sq(w);
  // (1+|w|^2)|w'|^2 - |<w,w'>|^2 = |w'|^2 + sum_{j<k} |w_j w'_k - w_k w'_j|^2
  const double numer = norm_sq(dw) + gram_defect(w, dw);
  return (n + 1.0) / std::numbers::pi * numer / (q * q);
}

double pullback_density_homogeneous(std::span<const Complex> lift,
                                    std::span<const Complex> lift_derivative) {
  if (lift.size() != lift_derivative.size() || lift.size() < 2)
    throw GeometryError("pullback_density_homogeneous: size mismatch");
  std::size_t k = 0;
  for (std::size_t j = 1; j < lift.size(); ++j)
    if (std::abs(lift[j]) > std::abs(lift[k])) k = j;
  const Complex fk = lift[k];
  if (fk == Complex(0.0)) throw GeometryError("pullback_density_homogeneous: zero lift");
  const Complex dfk = lift_derivative[k];
  CVector w, dw;
  w.reserve(lift.size() - 1);
  dw.reserve(lift.size() - 1);
  for (std::size_t j = 0; j < lift.size(); ++j) {
    if (j == k) continue;
    w.push_back(lift[j] / fk);
    dw.push_back((lift_derivative[j] * fk - lift[j] * dfk) / (fk * fk));
  }
  return pullback_density(w, dw);
}

MomentValue moment_cp2(const ProjectivePoint& p) {
  require_dimension(p, 2, "moment_cp2");
  // The canonical representative already has unit norm.
  return {-0.5 * std::norm(p[1]), -0.5 * std::norm(p[2])};
}

MomentValue moment_cp1_lift(const ProjectivePoint& p) {
  require_dimension(p, 1, "moment_cp1_lift");
  return {-std::norm(p[1]) / 3.0, -1.0 / 6.0};
}

bool in_moment_triangle(MomentValue m, double tol) {
  return m.m1 <= tol && m.m2 <= tol && m.m1 + m.m2 >= -0.5 - tol;
}

std::string_view to_string(LagrangianId id) {
  switch (id) {
    case LagrangianId::RP1: return "RP1";
    case LagrangianId::RP2: return "RP2";
    case LagrangianId::S1Clifford: return "S1_CLIFFORD";
    case LagrangianId::T2Clifford: return "T2_CLIFFORD";
    case LagrangianId::LAC: return "L_AC";
    case LagrangianId::GammaImage: return "GAMMA_IMAGE";
  }
  return "?";
}

std::optional<LagrangianId> parse_lagrangian(std::string_view name) {
  for (auto id : {LagrangianId::RP1, LagrangianId::RP2, LagrangianId::S1Clifford,
                  LagrangianId::T2Clifford, LagrangianId::LAC, LagrangianId::GammaImage})
    if (to_string(id) == name) return id;
  return std::nullopt;
}

bool lagrangian_accepts_dimension(LagrangianId id, std::size_t n) {
  switch (id) {
    case LagrangianId::RP1:
    case LagrangianId::S1Clifford: return n == 1;
    case LagrangianId::RP2:
    case LagrangianId::T2Clifford:
    case LagrangianId::LAC: return n == 2;
    case LagrangianId::GammaImage: return n == 1 || n == 2;
  }
  return false;
}

double lagrangian_residual(LagrangianId id, const ProjectivePoint& p) {
  if (!lagrangian_accepts_dimension(id, p.dimension()))
    throw GeometryError(std::string("lagrangian_residual: ") + std::string(to_string(id)) +
                        " does not live in CP^" + std::to_string(p.dimension()));
  switch (id) {
    case LagrangianId::RP1:
    case LagrangianId::RP2: return real_locus_residual(p);
    case LagrangianId::S1Clifford:
    case LagrangianId::T2Clifford: return modulus_gap(p);
    case LagrangianId::LAC: return lac_residual(p);
    case LagrangianId::GammaImage:
      if (p.dimension() == 1) return real_locus_residual(p);
      return std::max(real_locus_residual(p), level_residual(p));
  }
  return 0.0;
}

std::optional<ProjectivePoint> project_to_cp1(const ProjectivePoint& ambient) {
  require_dimension(ambient, 2, "project_to_cp1");
  const Complex xy[2] = {ambient[0], ambient[1]};
  if (std::max(std::abs(xy[0]), std::abs(xy[1])) <= kPhaseFloor) return std::nullopt;
  return ProjectivePoint(std::span<const Complex>(xy, 2));
}

CorrespondenceResidual correspondence_residual(const ProjectivePoint& reduced,
                                               const ProjectivePoint& ambient) {
  require_dimension(reduced, 1, "correspondence_residual");
  require_dimension(ambient, 2, "correspondence_residual");
  CorrespondenceResidual r;
  r.level = level_residual(ambient);
  if (auto proj = project_to_cp1(ambient)) {
    r.projection = fs_distance(*proj, reduced);
  } else {
    r.projection_defined = false;
  }
  r.value = std::max(r.level, r.projection);
  return r;
}

}  // namespace quiltlab
