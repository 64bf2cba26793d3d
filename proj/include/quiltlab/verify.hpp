#pragma once

// Residual profiles along seams and boundaries, Fubini-Study areas of patches
// over unbounded regions, whole-quilt reports and the sweep over h.

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quiltlab/catalog.hpp"

namespace quiltlab {

struct ToleranceProfile {
  double seam_tol = 1e-12;
  double boundary_tol = 1e-12;
  double area_tol = 1e-6;
  double cr_tol = 1e-10;
  std::size_t samples = 1000;
  double x_min = -50.0;
  double x_max = 50.0;

  /// Closed-form quilts.
  static ToleranceProfile exact();
  /// Quilts with a Poisson-integral patch: seams carry the boundary-modulus
  /// extrapolation error, areas and holomorphy the quadrature error.
  static ToleranceProfile numeric();
  static ToleranceProfile for_quilt(const Quilt& q);

  /// Throws std::invalid_argument unless all tolerances are positive and the
  /// sample range is non-empty.
  void validate() const;
};

/// Partial replacement of a profile, e.g. from command-line flags.
struct ToleranceOverrides {
  std::optional<double> seam_tol;
  std::optional<double> boundary_tol;
  std::optional<double> area_tol;
  std::optional<std::size_t> samples;

  ToleranceProfile apply(ToleranceProfile t) const;
};

struct ResidualProfile {
  double max = 0.0;
  double at = std::numeric_limits<double>::quiet_NaN();
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

ResidualProfile seam_residual_profile(const Quilt& q, std::size_t seam, std::size_t samples, double x_min,
                                      double x_max);
ResidualProfile boundary_residual_profile(const Quilt& q, std::size_t boundary, std::size_t samples,
                                          double x_min, double x_max);

struct AreaOptions {
  double tol = 1e-9;
  /// Truncation |Re z| <= x_extent; 0 picks 40 for exponential and 1e6 for
  /// algebraic decay.
  double x_extent = 0.0;
  int max_levels = 10;
};

struct AreaResult {
  double value = 0.0;
  double error = 0.0;  // quadrature plus truncation tail
  double tail = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Integral of the pulled-back Fubini-Study density over the patch region:
/// x = scale sinh(s) with a nested trapezoid rule in s, adaptive
/// Gauss-Kronrod in y (y = y0 + tan(theta) on half-planes).
AreaResult patch_area(const AnalyticMap& m, const AreaOptions& opts = {});

struct HolomorphyResult {
  double max_residual = 0.0;  // |d/dzbar F| / (|F| + |F'|)
  Complex at;
  double derivative_mismatch = 0.0;  // closed-form F' against the contour estimate
  std::size_t points = 0;
};

/// Discrete Cauchy moments on small circles at interior sample points.
HolomorphyResult holomorphy_residual(const AnalyticMap& m);

struct CheckSummary {
  std::size_t index = 0;
  std::string what;
  ResidualProfile profile;
  double tol = 0.0;
  bool pass = false;
};

struct PatchAreaSummary {
  std::size_t patch = 0;
  std::string label;
  AreaResult area;
};

struct VerificationReport {
  std::string label;
  ToleranceProfile tol;
  std::vector<CheckSummary> seams;
  std::vector<CheckSummary> boundaries;
  std::vector<PatchAreaSummary> areas;
  double total_area = 0.0;
  double total_area_error = 0.0;
  std::optional<double> expected_area;
  bool area_pass = false;
  double holomorphy = 0.0;
  double derivative_mismatch = 0.0;
  bool holomorphy_pass = false;
  bool pass = false;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

VerificationReport verify_quilt(const Quilt& q, const ToleranceProfile& tol);
inline VerificationReport verify_quilt(const Quilt& q) { return verify_quilt(q, ToleranceProfile::for_quilt(q)); }

/// Negative controls. "seam+D" translates every seam's CP^2 patch by i*D
/// (its values on the seam line are taken from Im z = y - D); "boundary:K=TAG"
/// retags boundary K; "retag" replaces every boundary tag by another one of
/// the same dimension. Throws std::invalid_argument for anything else.
Quilt tamper(const Quilt& q, std::string_view spec);
LagrangianId alternate_lagrangian(LagrangianId id, std::size_t dim);

struct LimitDiagnostics {
  double h_small = 1e-3;
  double h_top = 0.0;
  /// max FS distance between u_2((2h/pi) w) and the bubble v_2(w).
  double const_rescaling = 0.0;
  /// max FS distance between u_1 and its CP^1 Floer strip on the shared strip.
  double maslov1_u1_distance = 0.0;
  /// max |area(u_1) - 1/2| at h_small.
  double maslov1_u1_area_gap = 0.0;
  /// sup over |z| <= radius of FS distance from u_2 to the h = pi/2 strip.
  double top_distance = 0.0;
  std::vector<std::pair<std::string, double>> top_by_member;
  bool pass = false;
};

struct SweepOptions {
  std::optional<ToleranceProfile> tolerance;  // default: per quilt
  ToleranceOverrides overrides;
  bool limits = true;
  double h_small = 1e-3;
  double h_top_gap = 1e-3;
  double radius = 2.0;
  double top_tol = 1e-2;
  double rescaling_tol = 1e-14;
};

struct FiberResult {
  double h;
  std::vector<VerificationReport> reports;
  std::string error;  // construction failure, if any
  bool pass = false;
};

struct SweepResult {
  std::vector<FiberResult> fibers;
  std::optional<LimitDiagnostics> limits;
  bool pass = false;
  double seconds = 0.0;

  nlohmann::json to_json() const;
};

/// Verifies every member of the selected families (both when family is
/// empty) at each h, then the h -> 0 and h -> pi/2 diagnostics.
SweepResult sweep_family(std::optional<Family> family, const std::vector<double>& h_grid,
                         const SweepOptions& opts = {});

LimitDiagnostics limit_diagnostics(std::optional<Family> family, const SweepOptions& opts = {});

}  // namespace quiltlab
