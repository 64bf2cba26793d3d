#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "quiltlab/catalog.hpp"
#include "quiltlab/verify.hpp"

using namespace quiltlab;
using std::numbers::pi;
constexpr Complex I{0.0, 1.0};
constexpr Sign P = Sign::Plus;
constexpr Sign M = Sign::Minus;

namespace {

ProjectivePoint cp2_generator(Sign a, Sign b) { return ProjectivePoint{1.0, double(value(a)), double(value(b))}; }

}  // namespace

TEST_CASE("CP2 Floer strips: values and endpoints") {
  const auto u = make_floer_strip_cp2(0, P, P);
  CHECK(u.map(0.0).approx_equal(ProjectivePoint{0.0, 1.0, 1.0}));
  CHECK(fs_distance(u.map(40.0), cp2_generator(P, P)) < 1e-10);
  CHECK(fs_distance(u.map(-40.0), cp2_generator(M, M)) < 1e-10);
  CHECK(u.map.maslov() == 1);
  CHECK(u.bottom == LagrangianId::RP2);
  CHECK(u.top == LagrangianId::T2Clifford);

  // u^1_{++} from p_{-+}, u^2_{++} from p_{+-}.
  const auto u1 = make_floer_strip_cp2(1, P, P);
  CHECK(fs_distance(u1.map(-40.0), cp2_generator(M, P)) < 1e-10);
  CHECK(fs_distance(u1.map(40.0), cp2_generator(P, P)) < 1e-10);
  const auto u2 = make_floer_strip_cp2(2, P, P);
  CHECK(fs_distance(u2.map(-40.0), cp2_generator(P, M)) < 1e-10);

  const auto u2pm = make_floer_strip_cp2(2, P, M);
  for (double x = -10; x <= 10; x += 0.5) {
    CHECK(lagrangian_residual(LagrangianId::RP2, u2pm.map(x)) < 1e-12);
    CHECK(lagrangian_residual(LagrangianId::T2Clifford, u2pm.map(Complex(x, pi / 2))) < 1e-12);
  }
  CHECK_THROWS_AS(make_floer_strip_cp2(3, P, P), CatalogError);
}

TEST_CASE("CP1 Floer strips") {
  const auto v = make_floer_strip_cp1(1, P, P);
  CHECK(v.map(I * (pi / 2)).approx_equal(ProjectivePoint{1.0, I}));
  const auto v0 = make_floer_strip_cp1(0, P, P);
  for (double x = -20; x <= 20; x += 0.25)
    CHECK(lagrangian_residual(LagrangianId::S1Clifford, v0.map(Complex(x, pi / 2))) < 1e-12);
  // Endpoints as points of CP^1; the sheets are tracked by the floer module.
  CHECK(fs_distance(v0.map(-40.0), ProjectivePoint{1.0, -1.0}) < 1e-10);
  CHECK(fs_distance(v0.map(40.0), ProjectivePoint{1.0, 1.0}) < 1e-10);
  CHECK_THROWS_AS(make_floer_strip_cp1(2, P, P), CatalogError);
}

TEST_CASE("all 20 rigid strips satisfy their boundary conditions") {
  const auto strips = floer_strips();
  REQUIRE(strips.size() == 20);
  CHECK(floer_strips(FloerSide::CP2).size() == 12);
  CHECK(floer_strips(FloerSide::CP1).size() == 8);
  std::set<std::string> ids;
  for (const auto& s : strips) {
    ids.insert(s.id);
    const auto q = s.as_quilt();
    CHECK_NOTHROW(q.validate());
    for (std::size_t b = 0; b < q.boundaries.size(); ++b)
      CHECK_MESSAGE(boundary_residual_profile(q, b, 1000, -50, 50).max < 1e-12, s.id);
  }
  CHECK(ids.size() == 20);
}

TEST_CASE("constant-projection quilt") {
  const auto q = make_const_projection_quilt(pi / 4, P, P);
  REQUIRE(q.patches.size() == 2);
  CHECK(q.patches[0].region().y_hi == doctest::Approx(pi / 4));
  CHECK(q.patches[1].region().y_lo == doctest::Approx(pi / 4));
  CHECK(q.patches[1].region().y_hi == doctest::Approx(pi / 2));
  for (double x : {-7.0, 0.0, 0.3, 12.0})
    for (double y : {pi / 4, 1.0, pi / 2}) CHECK(q.patches[1](Complex(x, y)).approx_equal(ProjectivePoint{1.0, 1.0}));
  CHECK(seam_residual_profile(q, 0, 1000, -50, 50).max < 1e-12);
  CHECK_THROWS_AS(make_const_projection_quilt(0.0, P, P), CatalogError);
  CHECK_THROWS_AS(make_const_projection_quilt(pi / 2, P, P), CatalogError);
}

TEST_CASE("figure-eight bubble") {
  for (Sign a : {P, M})
    for (Sign b : {P, M}) {
      const auto q = make_eight_bubble_sheet_switch(a, b);
      CHECK(q.patches[0](0.0).approx_equal(ProjectivePoint{1.0, double(value(a)), 0.0}));
      CHECK(q.patches[1].region().kind == RegionKind::HalfPlaneAbove);
      CHECK(seam_residual_profile(q, 0, 1000, -50, 50).max < 1e-12);
    }
  const auto area = patch_area(make_eight_bubble_sheet_switch(P, P).patches[0]);
  CHECK(std::abs(area.value - 0.5) < 1e-5);
}

TEST_CASE("ACW quilt") {
  for (Sign s : {P, M}) {
    const auto q = make_acw_quilt(s);
    CHECK(q.patches[0](0.0).approx_equal(ProjectivePoint{1.0, 0.0, -1.0}));
    // 2|z - 6i|^2 = |z + 6i|^2 + |z|^2 at z = i: 50 = 49 + 1.
    const auto l = q.patches[0].lift(I);
    CHECK(2 * std::norm(l[2]) == std::norm(l[0]) + std::norm(l[1]));
    CHECK(seam_residual_profile(q, 0, 1, 0.0, 0.0).max < 1e-15);
    for (int x = -10; x <= 10; ++x) CHECK(lagrangian_residual(LagrangianId::LAC, q.patches[0](double(x))) < 1e-12);
  }
}

TEST_CASE("Maslov-1 quilts") {
  const double h = pi / 4;
  const auto q = make_maslov1_quilt(h, 0, P, P);
  CHECK(q.maslov == 1);
  // 2|f(x + ih)|^2 = |e^z + 1|^2 + |e^z - 1|^2 on the seam.
  for (double x : {-2.0, 0.0, 1.5}) {
    const Complex z(x, h);
    const auto l = q.patches[0].lift(z);
    const double lhs = 2 * std::norm(l[2]);
    CHECK(std::abs(lhs - (std::norm(l[0]) + std::norm(l[1]))) / lhs < 1e-4);
  }
  for (double x = -10; x <= 10; x += 0.5) CHECK(std::abs(q.patches[0].lift(x)[2].imag()) < 1e-12);
  CHECK(seam_residual_profile(q, 0, 200, -50, 50).max < 1e-4);
  CHECK_THROWS_AS(make_maslov1_quilt(h, 2, P, P), CatalogError);
}

TEST_CASE("families enumerate 4 + 8 distinct components") {
  CHECK(family_members(Family::Const).size() == 4);
  CHECK(family_members(Family::Maslov1).size() == 8);
  const auto all = make_all_components(0.7);
  REQUIRE(all.size() == 12);
  std::set<std::string> labels;
  for (const auto& q : all) labels.insert(q.label);
  CHECK(labels.size() == 12);

  std::set<std::vector<double>> distinct;
  for (const auto& q : make_family(Family::Maslov1, 0.7)) {
    std::vector<double> sig;
    for (Complex z : {Complex(0.3, 0.2), Complex(-1.0, 0.5)})
      for (Complex c : q.patches[0](z).coords()) sig.push_back(std::round(1e6 * (c.real() + 3 * c.imag())));
    distinct.insert(sig);
  }
  CHECK(distinct.size() == 8);
}

TEST_CASE("limits of family members") {
  const FamilyMember c{Family::Const, 0, P, M};
  CHECK(top_limit(c).id == "floer.cp2.u2.pm");
  CHECK(bottom_limit_id(c) == "bubble.sheet_switch.pm");
  CHECK_THROWS_AS(bottom_limit_strip(c), CatalogError);
  const FamilyMember m0{Family::Maslov1, 0, M, P};
  CHECK(top_limit(m0).id == "floer.cp2.u1.mp");
  CHECK(bottom_limit_id(m0) == "floer.cp1.v1.mp");
  const FamilyMember m1{Family::Maslov1, 1, P, P};
  CHECK(top_limit(m1).id == "floer.cp2.u0.pp");
  CHECK(bottom_limit_id(m1) == "floer.cp1.v0.pp");
  CHECK(member_id(m1, 0.5) == "quilt.maslov1.h0.5.v1.p.fplus");
}

TEST_CASE("lookup resolves every listed id") {
  for (const auto& e : catalog_listing()) {
    if (e.id.find('{') != std::string::npos) continue;
    CHECK_MESSAGE(lookup(e.id).label == e.id, e.id);
  }
  CHECK(lookup("quilt.const.h0.5.pm").label == "quilt.const.h0.5.pm");
  CHECK(lookup("quilt.maslov1.h0.5.v0.p.fplus").patches.size() == 2);
  CHECK_THROWS_AS(lookup("floer.cp1.v2.pp"), CatalogError);
  CHECK_THROWS_AS(lookup("quilt.const.habc.pp"), CatalogError);
  CHECK_THROWS_AS(lookup("quilt.const.h2.pp"), CatalogError);
  CHECK_THROWS_AS(lookup("nothing"), CatalogError);
  CHECK(parse_family("const") == Family::Const);
  CHECK(!parse_family("other"));
}

TEST_CASE("quilt validation") {
  auto q = make_acw_quilt(P);
  q.seams[0].y = 0.5;
  CHECK_THROWS_AS(q.validate(), CatalogError);
  q = make_acw_quilt(P);
  q.boundaries.clear();
  CHECK_THROWS_AS(q.validate(), CatalogError);
  q = make_acw_quilt(P);
  q.boundaries[0].lagrangian = LagrangianId::S1Clifford;
  CHECK_THROWS_AS(q.validate(), CatalogError);
}

TEST_CASE("translated maps") {
  const auto u = make_floer_strip_cp2(1, P, M).map;
  const auto t = u.translated(Complex(0.7, 0.1));
  CHECK(t(Complex(0.2, 0.3)).approx_equal(u(Complex(0.9, 0.4))));
}

TEST_CASE("Blaschke factors") {
  const double h = pi / 4;
  const auto base = make_maslov1_quilt(h, 0, P, P);
  const auto r0 = verify_quilt(base);
  REQUIRE(r0.pass);

  auto measure = [&](std::vector<Complex> alphas) {
    const auto q = with_blaschke(base, BlaschkeData{alphas, h});
    CHECK(std::abs(seam_residual_profile(q, 0, 1000, -50, 50).max - r0.seams[0].profile.max) < 1e-10);
    const auto r = verify_quilt(q);
    CHECK(r.pass);
    return r.total_area - r0.total_area;
  };
  const double real = measure({2.0});
  CHECK(real > 0.0);
  CHECK(std::abs(real - 0.5 * std::round(real / 0.5)) < 1e-3);
  // Measured: 1/2 per real alpha, 1 per conjugate pair.
  CHECK(real == doctest::Approx(0.5).epsilon(1e-6));
  const double pair = measure({Complex(1.0, 0.3), Complex(1.0, -0.3)});
  CHECK(pair == doctest::Approx(1.0).epsilon(1e-6));

  CHECK_THROWS_AS(with_blaschke(make_acw_quilt(P), BlaschkeData{{2.0}, h}), CatalogError);
  CHECK_THROWS(with_blaschke(base, BlaschkeData{{-1.0}, h}));
}
