#pragma once

// Explicit holomorphic maps and quilts: the rigid Floer strips, the two
// families of quilted strips fibred over h, the figure-eight bubble and the
// two-patch quilts with an L_AC boundary.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quiltlab/analysis.hpp"
#include "quiltlab/geometry.hpp"

namespace quiltlab {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class RegionKind { Strip, HalfPlaneAbove, HalfPlaneBelow };

/// Closed horizontal strip or half-plane. Unused bounds are +/-infinity.
struct PatchRegion {
  RegionKind kind = RegionKind::Strip;
  double y_lo = 0.0;
  double y_hi = 0.0;

  static PatchRegion strip(double y_lo, double y_hi);
  static PatchRegion above(double y_lo);
  static PatchRegion below(double y_hi);

  bool has_bottom() const { return kind != RegionKind::HalfPlaneBelow; }
  bool has_top() const { return kind != RegionKind::HalfPlaneAbove; }
  bool contains(Complex z, double slack = 0.0) const;
  std::string describe() const;
};

/// How fast the pulled-back area density decays as |Re z| grows.
enum class DecayClass { Exponential, Algebraic };

/// A homogeneous lift F and its z-derivative F'.
struct LiftJet {
  CVector value;
  CVector derivative;
};

class AnalyticMap {
 public:
  using LiftFn = std::function<CVector(Complex)>;
  using JetFn = std::function<LiftJet(Complex)>;
  using EdgeFn = std::function<CVector(double)>;

  /// Closed-form map: the jet supplies both lift and derivative.
  AnalyticMap(std::string label, PatchRegion region, std::size_t target_dim, JetFn jet);
  /// Map with a lift only; derivatives fall back to central differences.
  AnalyticMap(std::string label, PatchRegion region, std::size_t target_dim, LiftFn lift);

  const std::string& label() const { return label_; }
  const PatchRegion& region() const { return region_; }
  std::size_t target_dim() const { return target_dim_; }
  std::optional<int> maslov() const { return maslov_; }
  DecayClass decay() const { return decay_; }
  double x_scale() const { return x_scale_; }
  bool numeric() const { return numeric_; }
  bool has_analytic_derivative() const { return static_cast<bool>(jet_); }
  bool has_top_edge() const { return static_cast<bool>(top_edge_); }

  AnalyticMap& set_maslov(int m);
  AnalyticMap& set_decay(DecayClass d, double x_scale);
  AnalyticMap& set_numeric(bool n);
  /// Boundary values on Im z = y_hi where the interior formula cannot reach.
  AnalyticMap& set_top_edge(EdgeFn edge);

  /// Homogeneous lift at z (top-edge values when Im z is on a registered top edge).
  CVector lift(Complex z) const;
  ProjectivePoint operator()(Complex z) const;
  LiftJet jet(Complex z) const;

  /// z -> this(z + shift) on the same region; drops any top-edge override.
  AnalyticMap translated(Complex shift) const;

 private:
  std::string label_;
  PatchRegion region_;
  std::size_t target_dim_;
  LiftFn lift_;
  JetFn jet_;
  EdgeFn top_edge_;
  std::optional<int> maslov_;
  DecayClass decay_ = DecayClass::Exponential;
  double x_scale_ = 1.0;
  bool numeric_ = false;
};

/// Seam on the line Im z = y between a CP^2 patch below and a CP^1 patch
/// above, carrying the reduction correspondence.
struct Seam {
  std::size_t ambient_patch;
  std::size_t reduced_patch;
  double y;
};

enum class Edge { Bottom, Top };

struct BoundaryCondition {
  std::size_t patch;
  Edge edge;
  LagrangianId lagrangian;
};

/// Parameters of a Maslov-1 quilt of the second family, kept so that the
/// quilt can be rebuilt with Blaschke factors.
struct Maslov1Params {
  double h;
  int variant;
  Sign s1;
  Sign fsign;
  std::vector<Complex> alphas;
};

struct Quilt {
  std::string label;
  std::vector<AnalyticMap> patches;
  std::vector<Seam> seams;
  std::vector<BoundaryCondition> boundaries;
  std::optional<double> expected_area;
  std::optional<int> maslov;
  std::optional<Maslov1Params> maslov1;

  /// Seam lines match the adjacent patch edges, every other finite edge has
  /// a boundary condition, targets match Lagrangians. Throws CatalogError.
  void validate() const;
  /// y coordinate of an edge of a patch.
  double edge_y(std::size_t patch, Edge edge) const;
};

enum class FloerSide { CP1, CP2 };

/// One rigid strip of the Floer differential, with its sheet metadata.
struct FloerStrip {
  std::string id;
  FloerSide side;
  int family;  // i in u^i / v^i
  Sign s1;
  Sign s2;  // on the CP1 side: sheet of the input generator
  AnalyticMap map;
  LagrangianId bottom;
  LagrangianId top;

  Quilt as_quilt() const;
};

FloerStrip make_floer_strip_cp2(int i, Sign s1, Sign s2);
FloerStrip make_floer_strip_cp1(int i, Sign s1, Sign s2);
/// 12 CP^2 strips then 8 CP^1 strips.
std::vector<FloerStrip> floer_strips();
std::vector<FloerStrip> floer_strips(FloerSide side);

Quilt make_const_projection_quilt(double h, Sign s1, Sign s2);
Quilt make_maslov1_quilt(double h, int variant, Sign s1, Sign fsign);
Quilt make_eight_bubble_sheet_switch(Sign s1, Sign s2);
Quilt make_acw_quilt(Sign sign);

/// Multiplies the third coordinate of the CP^2 patch of a Maslov-1 quilt by
/// the Blaschke product. Throws CatalogError for other quilts.
Quilt with_blaschke(const Quilt& q, const BlaschkeData& data);

enum class Family { Const, Maslov1 };

/// A member of one of the two families, independent of h.
struct FamilyMember {
  Family family;
  int variant;  // Maslov1 only
  Sign s1;
  Sign s2;  // second sign for Const, f sign for Maslov1
};

std::vector<FamilyMember> family_members(Family f);
/// All members at h; the 8 Maslov-1 quilts share one Poisson evaluation cache.
std::vector<Quilt> make_family(Family f, double h);
std::vector<Quilt> make_all_components(double h);
Quilt make_member(const FamilyMember& m, double h);

/// The unquilted map a member converges to as h -> pi/2 (a CP^2 Floer strip).
FloerStrip top_limit(const FamilyMember& m);
/// As h -> 0: the bubble for Const members, the CP^1 Floer strip for Maslov1.
std::string bottom_limit_id(const FamilyMember& m);
/// The CP^1 strip a Maslov1 member's u_1 becomes at h = 0.
FloerStrip bottom_limit_strip(const FamilyMember& m);

std::string member_id(const FamilyMember& m, double h);
std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Resolves a catalog id such as floer.cp2.u0.pp, quilt.const.h0.5.pm,
/// quilt.maslov1.h0.5.v0.p.fplus, bubble.sheet_switch.pp or quilt.acw.plus.
/// Floer strips resolve to their one-patch quilt.
Quilt lookup(std::string_view id);

struct CatalogEntry {
  std::string id;
  std::string description;
};
/// Every fixed id plus the parametric templates with {h} placeholders.
std::vector<CatalogEntry> catalog_listing();

std::string sign_pair(Sign a, Sign b);

}  // namespace quiltlab
