#pragma once

// Complex projective spaces with the monotone Fubini-Study normalisation,
// torus moment maps, and residual functions measuring how far a point is
// from each Lagrangian / correspondence used in the quilt constructions.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quiltlab {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr double kMembershipTol = 1e-9;
inline constexpr double kEqualityTol = 1e-12;

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of CP^n stored in canonical form: unit Euclidean norm, first
/// nonzero coordinate real and positive.
class ProjectivePoint {
 public:
  /// Normalises homogeneous coordinates; throws GeometryError when all are zero.
  explicit ProjectivePoint(std::span<const Complex> raw);
  ProjectivePoint(std::initializer_list<Complex> raw);

  std::size_t dimension() const { return coords_.size() - 1; }
  std::span<const Complex> coords() const { return coords_; }
  const Complex& operator[](std::size_t i) const { return coords_[i]; }

  bool approx_equal(const ProjectivePoint& other, double tol = kEqualityTol) const;

 private:
  CVector coords_;
};

ProjectivePoint normalize(std::span<const Complex> raw);

/// Chordal Fubini-Study distance sqrt(1 - |<p,q>|^2) on unit representatives.
double fs_distance(const ProjectivePoint& p, const ProjectivePoint& q);

/// Area density rho with f^*omega = rho dx^dy for a holomorphic map written in
/// an affine chart of CP^n, n = value.size(). omega has monotonicity constant 1,
/// so CP^1 has total area 2.
double pullback_density(std::span<const Complex> affine_value,
                        std::span<const Complex> affine_derivative);

/// Same density from a homogeneous lift F and its z-derivative. The chart is
/// the one in which |F_k| is largest.
double pullback_density_homogeneous(std::span<const Complex> lift,
                                    std::span<const Complex> lift_derivative);

struct MomentValue {
  double m1 = 0.0;
  double m2 = 0.0;
};

/// (-|Y|^2 / 2N, -|Z|^2 / 2N), N = |X|^2 + |Y|^2 + |Z|^2.
MomentValue moment_cp2(const ProjectivePoint& p);

/// Lift of the CP^1 moment map into the CP^2 moment triangle along the
/// reduction level -1/6.
MomentValue moment_cp1_lift(const ProjectivePoint& p);

/// Closed triangle with vertices (0,0), (-1/2,0), (0,-1/2).
bool in_moment_triangle(MomentValue m, double tol = kEqualityTol);

enum class LagrangianId { RP1, RP2, S1Clifford, T2Clifford, LAC, GammaImage };

std::string_view to_string(LagrangianId id);
std::optional<LagrangianId> parse_lagrangian(std::string_view name);
/// Ambient dimension n of CP^n in which the Lagrangian lives; GammaImage
/// accepts both CP^1 (image RP^1) and CP^2 (the double cover itself).
bool lagrangian_accepts_dimension(LagrangianId id, std::size_t n);

/// Nonnegative, zero exactly on the Lagrangian. Throws GeometryError on a
/// dimension mismatch.
double lagrangian_residual(LagrangianId id, const ProjectivePoint& p);

struct CorrespondenceResidual {
  double value = 0.0;       // max(level, projection)
  double level = 0.0;       // |2|Z|^2 - |X|^2 - |Y|^2| on the unit representative
  double projection = 0.0;  // fs_distance([X:Y], reduced)
  bool projection_defined = true;  // false at [0:0:1]
};

/// Distance-to-membership for (reduced, ambient) in the reduction
/// correspondence from CP^1 to CP^2 at level -1/6.
CorrespondenceResidual correspondence_residual(const ProjectivePoint& reduced,
                                               const ProjectivePoint& ambient);

/// [X:Y:Z] -> [X:Y]; nullopt at [0:0:1].
std::optional<ProjectivePoint> project_to_cp1(const ProjectivePoint& ambient);

}  // namespace quiltlab
