#include "quiltlab/catalog.hpp"

#include <cmath>
#include <charconv>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <regex>

#include <fmt/format.h>

namespace quiltlab {

using std::numbers::pi;

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

double sv(Sign s) { return static_cast<double>(value(s)); }

void require_open_height(double h, const char* what) {
  if (!(h > 0.0 && h < pi / 2))
    throw CatalogError(fmt::format("{}: h must lie in (0, pi/2), got {}", what, h));
}

std::string h_token(double h) { return fmt::format("{}", h); }

// tanh(c z) and its derivative.
struct Tanh {
  Complex t, dt;
};
Tanh tanh_jet(Complex z, double c) {
  const Complex t = std::tanh(c * z);
  return {t, c * (1.0 - t * t)};
}

// f_+ for one h, shared by the eight Maslov-1 quilts of a fibre.
class PoissonCache {
 public:
  explicit PoissonCache(double h) : sol_(h, Sign::Plus) {}

  PoissonSolution::LogJet jet(Complex z) {
    const auto key = std::make_pair(z.real(), z.imag());
    {
      std::lock_guard lock(mu_);
      if (auto it = jets_.find(key); it != jets_.end()) return it->second;
    }
    auto j = sol_.log_jet(z);
    std::lock_guard lock(mu_);
    jets_.emplace(key, j);
    return j;
  }

  double top_modulus_sq(double x) {
    {
      std::lock_guard lock(mu_);
      if (auto it = top_.find(x); it != top_.end()) return it->second;
    }
    const auto b = boundary_modulus(sol_, x);
    if (!b.converged)
      throw AnalysisError(fmt::format("boundary modulus extrapolation unresolved at x = {} (spread {:.2e})",
                                      x, b.spread));
    std::lock_guard lock(mu_);
    top_.emplace(x, b.value);
    return b.value;
  }

 private:
  PoissonSolution sol_;
  std::mutex mu_;
  std::map<std::pair<double, double>, PoissonSolution::LogJet> jets_;
  std::map<double, double> top_;
};

Quilt build_maslov1(double h, int variant, Sign s1, Sign fs, std::vector<Complex> alphas,
                    std::shared_ptr<PoissonCache> cache) {
  require_open_height(h, "make_maslov1_quilt");
  if (variant != 0 && variant != 1) throw CatalogError("make_maslov1_quilt: variant must be 0 or 1");
  std::optional<BlaschkeData> blaschke;
  if (!alphas.empty()) {
    blaschke = BlaschkeData{alphas, h};
    blaschke->validate();
  }
  const double a = sv(s1), b = sv(fs);
  const double pm = variant == 0 ? 1.0 : -1.0;  // X = e^z + pm, Y = s1 (e^z - pm)

  std::string id = fmt::format("quilt.maslov1.h{}.v{}.{}.f{}", h_token(h), variant, sign_char(s1),
                               fs == Sign::Plus ? "plus" : "minus");
  if (blaschke) {
    id += ".blaschke[";
    for (std::size_t i = 0; i < alphas.size(); ++i)
      id += fmt::format("{}{}{:+}i", i ? "," : "", alphas[i].real(), alphas[i].imag());
    id += "]";
  }

  auto u2_jet = [=](Complex z) {
    const Complex e = std::exp(z);
    const auto lj = cache->jet(z);
    const Complex f = b * std::exp(lj.log_value);
    Complex third = f, dthird = f * lj.log_derivative;
    if (blaschke) {
      const auto bj = blaschke_jet(*blaschke, z);
      third = f * bj.value;
      dthird = f * (lj.log_derivative * bj.value + bj.derivative);
    }
    return LiftJet{{e + pm, a * (e - pm), third}, {e, a * e, dthird}};
  };
  // Only |f| is prescribed on Im z = h; the argument of the third coordinate
  // is left at that of the Blaschke factor.
  auto u2_top = [=](double x) {
    const Complex z(x, h);
    const Complex e = std::exp(z);
    Complex third = std::sqrt(cache->top_modulus_sq(x));
    if (blaschke) third *= blaschke_eval(*blaschke, z);
    return CVector{e + pm, a * (e - pm), third};
  };
  AnalyticMap u2(fmt::format("u2[{}]", id), PatchRegion::strip(0.0, h), 2, AnalyticMap::JetFn(u2_jet));
  u2.set_decay(DecayClass::Exponential, std::min(1.0, 2.0 * h / pi)).set_numeric(true).set_top_edge(u2_top);

  auto u1_jet = [=](Complex z) {
    const Complex e = std::exp(z);
    return LiftJet{{e + pm, a * (e - pm)}, {e, a * e}};
  };
  AnalyticMap u1(fmt::format("u1[{}]", id), PatchRegion::strip(h, pi / 2), 1, AnalyticMap::JetFn(u1_jet));
  u1.set_decay(DecayClass::Exponential, 1.0);

  Quilt q;
  q.label = id;
  q.patches = {u2, u1};
  q.seams = {{0, 1, h}};
  q.boundaries = {{0, Edge::Bottom, LagrangianId::RP2}, {1, Edge::Top, LagrangianId::S1Clifford}};
  if (!blaschke) {
    q.expected_area = 0.5;
    q.maslov = 1;
  }
  q.maslov1 = Maslov1Params{h, variant, s1, fs, alphas};
  return q;
}

std::optional<Sign> parse_sign_char(char c) {
  if (c == 'p') return Sign::Plus;
  if (c == 'm') return Sign::Minus;
  return std::nullopt;
}

std::optional<double> parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

std::string sign_pair(Sign a, Sign b) { return {sign_char(a), sign_char(b)}; }

PatchRegion PatchRegion::strip(double y_lo, double y_hi) {
  if (!(y_lo < y_hi)) throw CatalogError("strip region needs y_lo < y_hi");
  return {RegionKind::Strip, y_lo, y_hi};
}
PatchRegion PatchRegion::above(double y_lo) { return {RegionKind::HalfPlaneAbove, y_lo, kInf}; }
PatchRegion PatchRegion::below(double y_hi) { return {RegionKind::HalfPlaneBelow, -kInf, y_hi}; }

bool PatchRegion::contains(Complex z, double slack) const {
  return z.imag() >= y_lo - slack && z.imag() <= y_hi + slack;
}

std::string PatchRegion::describe() const {
  switch (kind) {
    case RegionKind::Strip: return fmt::format("STRIP({}, {})", y_lo, y_hi);
    case RegionKind::HalfPlaneAbove: return fmt::format("HALF_PLANE_ABOVE({})", y_lo);
    case RegionKind::HalfPlaneBelow: return fmt::format("HALF_PLANE_BELOW({})", y_hi);
  }
  return "?";
}

AnalyticMap::AnalyticMap(std::string label, PatchRegion region, std::size_t target_dim, JetFn jet)
    : label_(std::move(label)), region_(region), target_dim_(target_dim), jet_(std::move(jet)) {}

AnalyticMap::AnalyticMap(std::string label, PatchRegion region, std::size_t target_dim, LiftFn lift)
    : label_(std::move(label)), region_(region), target_dim_(target_dim), lift_(std::move(lift)) {}

AnalyticMap& AnalyticMap::set_maslov(int m) {
  maslov_ = m;
  return *this;
}
AnalyticMap& AnalyticMap::set_decay(DecayClass d, double x_scale) {
  decay_ = d;
  x_scale_ = x_scale;
  return *this;
}
AnalyticMap& AnalyticMap::set_numeric(bool n) {
  numeric_ = n;
  return *this;
}
AnalyticMap& AnalyticMap::set_top_edge(EdgeFn edge) {
  top_edge_ = std::move(edge);
  return *this;
}

CVector AnalyticMap::lift(Complex z) const {
  if (top_edge_ && region_.has_top() && z.imag() >= region_.y_hi) return top_edge_(z.real());
  return lift_ ? lift_(z) : jet_(z).value;
}

ProjectivePoint AnalyticMap::operator()(Complex z) const {
  const CVector v = lift(z);
  if (v.size() != target_dim_ + 1)
    throw CatalogError(fmt::format("{}: lift has {} coordinates, expected {}", label_, v.size(),
                                   target_dim_ + 1));
  return ProjectivePoint(v);
}

LiftJet AnalyticMap::jet(Complex z) const {
  if (jet_) return jet_(z);
  const double step = 1e-6 * std::max(1.0, std::abs(z));
  const CVector a = lift_(z + step), b = lift_(z - step);
  LiftJet j{lift_(z), CVector(a.size())};
  for (std::size_t k = 0; k < a.size(); ++k) j.derivative[k] = (a[k] - b[k]) / (2.0 * step);
  return j;
}

AnalyticMap AnalyticMap::translated(Complex shift) const {
  AnalyticMap m = *this;
  m.label_ = fmt::format("{}~shift({}{:+}i)", label_, shift.real(), shift.imag());
  if (lift_) m.lift_ = [f = lift_, shift](Complex z) { return f(z + shift); };
  if (jet_) m.jet_ = [f = jet_, shift](Complex z) { return f(z + shift); };
  m.top_edge_ = {};
  return m;
}

double Quilt::edge_y(std::size_t patch, Edge edge) const {
  const auto& r = patches.at(patch).region();
  return edge == Edge::Bottom ? r.y_lo : r.y_hi;
}

void Quilt::validate() const {
  if (patches.empty()) throw CatalogError(label + ": quilt has no patches");
  std::vector<int> bottom_cover(patches.size(), 0), top_cover(patches.size(), 0);
  for (const auto& s : seams) {
    if (s.ambient_patch >= patches.size() || s.reduced_patch >= patches.size())
      throw CatalogError(label + ": seam refers to a missing patch");
    const auto& amb = patches[s.ambient_patch];
    const auto& red = patches[s.reduced_patch];
    if (amb.target_dim() != 2 || red.target_dim() != 1)
      throw CatalogError(label + ": seam must join a CP^2 patch to a CP^1 patch");
    if (!amb.region().has_top() || amb.region().y_hi != s.y || !red.region().has_bottom() ||
        red.region().y_lo != s.y)
      throw CatalogError(label + ": seam line does not match the adjacent patch edges");
    ++top_cover[s.ambient_patch];
    ++bottom_cover[s.reduced_patch];
  }
  for (const auto& b : boundaries) {
    if (b.patch >= patches.size()) throw CatalogError(label + ": boundary refers to a missing patch");
    const auto& p = patches[b.patch];
    if (!lagrangian_accepts_dimension(b.lagrangian, p.target_dim()))
      throw CatalogError(fmt::format("{}: {} does not live in CP^{}", label, to_string(b.lagrangian),
                                     p.target_dim()));
    if (b.edge == Edge::Bottom) {
      if (!p.region().has_bottom()) throw CatalogError(label + ": boundary on a missing bottom edge");
      ++bottom_cover[b.patch];
    } else {
      if (!p.region().has_top()) throw CatalogError(label + ": boundary on a missing top edge");
      ++top_cover[b.patch];
    }
  }
  for (std::size_t i = 0; i < patches.size(); ++i) {
    const auto& r = patches[i].region();
    if (bottom_cover[i] != (r.has_bottom() ? 1 : 0) || top_cover[i] != (r.has_top() ? 1 : 0))
      throw CatalogError(fmt::format("{}: patch {} edges are not each covered by exactly one condition",
                                     label, i));
  }
}

Quilt FloerStrip::as_quilt() const {
  Quilt q;
  q.label = id;
  q.patches = {map};
  q.boundaries = {{0, Edge::Bottom, bottom}, {0, Edge::Top, top}};
  q.expected_area = 0.5;
  q.maslov = 1;
  return q;
}

FloerStrip make_floer_strip_cp2(int i, Sign s1, Sign s2) {
  if (i < 0 || i > 2) throw CatalogError("make_floer_strip_cp2: index must be 0, 1 or 2");
  const double a = sv(s1), b = sv(s2);
  auto jet = [=](Complex z) {
    const auto [m, dm] = tanh_jet(z, 0.5);
    switch (i) {
      case 0: return LiftJet{{m, a, b}, {dm, 0.0, 0.0}};
      case 1: return LiftJet{{1.0, a * m, b}, {0.0, a * dm, 0.0}};
      default: return LiftJet{{1.0, a, b * m}, {0.0, 0.0, b * dm}};
    }
  };
  const std::string id = fmt::format("floer.cp2.u{}.{}", i, sign_pair(s1, s2));
  AnalyticMap map(id, PatchRegion::strip(0.0, pi / 2), 2, AnalyticMap::JetFn(jet));
  map.set_maslov(1).set_decay(DecayClass::Exponential, 1.0);
  return {id, FloerSide::CP2, i, s1, s2, map, LagrangianId::RP2, LagrangianId::T2Clifford};
}

FloerStrip make_floer_strip_cp1(int i, Sign s1, Sign s2) {
  if (i < 0 || i > 1) throw CatalogError("make_floer_strip_cp1: index must be 0 or 1");
  const double a = sv(s1);
  auto jet = [=](Complex z) {
    const auto [m, dm] = tanh_jet(z, 0.5);
    if (i == 0) return LiftJet{{m, a}, {dm, 0.0}};
    return LiftJet{{1.0, a * m}, {0.0, a * dm}};
  };
  const std::string id = fmt::format("floer.cp1.v{}.{}", i, sign_pair(s1, s2));
  AnalyticMap map(id, PatchRegion::strip(0.0, pi / 2), 1, AnalyticMap::JetFn(jet));
  map.set_maslov(1).set_decay(DecayClass::Exponential, 1.0);
  return {id, FloerSide::CP1, i, s1, s2, map, LagrangianId::GammaImage, LagrangianId::S1Clifford};
}

std::vector<FloerStrip> floer_strips(FloerSide side) {
  std::vector<FloerStrip> out;
  const int families = side == FloerSide::CP2 ? 3 : 2;
  for (int i = 0; i < families; ++i)
    for (Sign s1 : {Sign::Plus, Sign::Minus})
      for (Sign s2 : {Sign::Plus, Sign::Minus})
        out.push_back(side == FloerSide::CP2 ? make_floer_strip_cp2(i, s1, s2)
                                             : make_floer_strip_cp1(i, s1, s2));
  return out;
}

std::vector<FloerStrip> floer_strips() {
  auto out = floer_strips(FloerSide::CP2);
  for (auto& s : floer_strips(FloerSide::CP1)) out.push_back(std::move(s));
  return out;
}

Quilt make_const_projection_quilt(double h, Sign s1, Sign s2) {
  require_open_height(h, "make_const_projection_quilt");
  const double a = sv(s1), b = sv(s2);
  const double c = pi / (4.0 * h);
  const std::string id = fmt::format("quilt.const.h{}.{}", h_token(h), sign_pair(s1, s2));
  auto u2_jet = [=](Complex z) {
    const auto [t, dt] = tanh_jet(z, c);
    return LiftJet{{1.0, a, b * t}, {0.0, 0.0, b * dt}};
  };
  AnalyticMap u2(fmt::format("u2[{}]", id), PatchRegion::strip(0.0, h), 2, AnalyticMap::JetFn(u2_jet));
  u2.set_decay(DecayClass::Exponential, 2.0 * h / pi);
  auto u1_jet = [=](Complex) { return LiftJet{{1.0, a}, {0.0, 0.0}}; };
  AnalyticMap u1(fmt::format("u1[{}]", id), PatchRegion::strip(h, pi / 2), 1, AnalyticMap::JetFn(u1_jet));
  u1.set_decay(DecayClass::Exponential, 1.0);

  Quilt q;
  q.label = id;
  q.patches = {u2, u1};
  q.seams = {{0, 1, h}};
  q.boundaries = {{0, Edge::Bottom, LagrangianId::RP2}, {1, Edge::Top, LagrangianId::S1Clifford}};
  q.expected_area = 0.5;
  q.maslov = 1;
  return q;
}

Quilt make_maslov1_quilt(double h, int variant, Sign s1, Sign fsign) {
  require_open_height(h, "make_maslov1_quilt");
  return build_maslov1(h, variant, s1, fsign, {}, std::make_shared<PoissonCache>(h));
}

Quilt make_eight_bubble_sheet_switch(Sign s1, Sign s2) {
  const double a = sv(s1), b = sv(s2);
  const std::string id = fmt::format("bubble.sheet_switch.{}", sign_pair(s1, s2));
  auto v2_jet = [=](Complex z) {
    const auto [t, dt] = tanh_jet(z, 0.5);
    return LiftJet{{1.0, a, b * t}, {0.0, 0.0, b * dt}};
  };
  AnalyticMap v2(fmt::format("v2[{}]", id), PatchRegion::strip(0.0, pi / 2), 2, AnalyticMap::JetFn(v2_jet));
  v2.set_decay(DecayClass::Exponential, 1.0);
  auto v1_jet = [=](Complex) { return LiftJet{{1.0, a}, {0.0, 0.0}}; };
  AnalyticMap v1(fmt::format("v1[{}]", id), PatchRegion::above(pi / 2), 1, AnalyticMap::JetFn(v1_jet));
  v1.set_decay(DecayClass::Algebraic, 1.0);

  Quilt q;
  q.label = id;
  q.patches = {v2, v1};
  q.seams = {{0, 1, pi / 2}};
  q.boundaries = {{0, Edge::Bottom, LagrangianId::RP2}};
  q.expected_area = 0.5;
  return q;
}

Quilt make_acw_quilt(Sign sign) {
  const double s = sv(sign);
  const std::string id = fmt::format("quilt.acw.{}", sign == Sign::Plus ? "plus" : "minus");
  auto u2_jet = [=](Complex z) {
    return LiftJet{{s * (z + 6.0 * kI), kI * z, s * (z - 6.0 * kI)}, {s, kI, s}};
  };
  AnalyticMap u2(fmt::format("u2[{}]", id), PatchRegion::strip(0.0, 1.0), 2, AnalyticMap::JetFn(u2_jet));
  u2.set_decay(DecayClass::Algebraic, 5.0);
  auto u1_jet = [=](Complex z) { return LiftJet{{s * (z + 6.0 * kI), kI * z}, {s, kI}}; };
  AnalyticMap u1(fmt::format("u1[{}]", id), PatchRegion::above(1.0), 1, AnalyticMap::JetFn(u1_jet));
  u1.set_decay(DecayClass::Algebraic, 5.0);

  Quilt q;
  q.label = id;
  q.patches = {u2, u1};
  q.seams = {{0, 1, 1.0}};
  q.boundaries = {{0, Edge::Bottom, LagrangianId::LAC}};
  q.expected_area = 0.5;
  q.maslov = 1;
  return q;
}

Quilt with_blaschke(const Quilt& q, const BlaschkeData& data) {
  if (!q.maslov1) throw CatalogError(q.label + ": Blaschke factors apply only to Maslov-1 Poisson quilts");
  const auto& p = *q.maslov1;
  if (data.h != p.h)
    throw CatalogError(fmt::format("with_blaschke: data height {} differs from quilt height {}", data.h, p.h));
  data.validate();
  auto alphas = p.alphas;
  alphas.insert(alphas.end(), data.alphas.begin(), data.alphas.end());
  return build_maslov1(p.h, p.variant, p.s1, p.fsign, alphas, std::make_shared<PoissonCache>(p.h));
}

std::vector<FamilyMember> family_members(Family f) {
  std::vector<FamilyMember> out;
  if (f == Family::Const) {
    for (Sign s1 : {Sign::Plus, Sign::Minus})
      for (Sign s2 : {Sign::Plus, Sign::Minus}) out.push_back({f, 0, s1, s2});
  } else {
    for (int v : {0, 1})
      for (Sign s1 : {Sign::Plus, Sign::Minus})
        for (Sign fs : {Sign::Plus, Sign::Minus}) out.push_back({f, v, s1, fs});
  }
  return out;
}

Quilt make_member(const FamilyMember& m, double h) {
  if (m.family == Family::Const) return make_const_projection_quilt(h, m.s1, m.s2);
  return make_maslov1_quilt(h, m.variant, m.s1, m.s2);
}

std::vector<Quilt> make_family(Family f, double h) {
  std::vector<Quilt> out;
  if (f == Family::Const) {
    for (const auto& m : family_members(f)) out.push_back(make_member(m, h));
    return out;
  }
  require_open_height(h, "make_family");
  auto cache = std::make_shared<PoissonCache>(h);
  for (const auto& m : family_members(f)) out.push_back(build_maslov1(h, m.variant, m.s1, m.s2, {}, cache));
  return out;
}

std::vector<Quilt> make_all_components(double h) {
  auto out = make_family(Family::Const, h);
  for (auto& q : make_family(Family::Maslov1, h)) out.push_back(std::move(q));
  return out;
}

FloerStrip top_limit(const FamilyMember& m) {
  if (m.family == Family::Const) return make_floer_strip_cp2(2, m.s1, m.s2);
  return make_floer_strip_cp2(m.variant == 0 ? 1 : 0, m.s1, m.s2);
}

FloerStrip bottom_limit_strip(const FamilyMember& m) {
  if (m.family != Family::Maslov1) throw CatalogError("bottom_limit_strip: Const members bubble at h = 0");
  return make_floer_strip_cp1(m.variant == 0 ? 1 : 0, m.s1, m.s2);
}

std::string bottom_limit_id(const FamilyMember& m) {
  if (m.family == Family::Const) return fmt::format("bubble.sheet_switch.{}", sign_pair(m.s1, m.s2));
  return bottom_limit_strip(m).id;
}

std::string member_id(const FamilyMember& m, double h) {
  if (m.family == Family::Const) return fmt::format("quilt.const.h{}.{}", h_token(h), sign_pair(m.s1, m.s2));
  return fmt::format("quilt.maslov1.h{}.v{}.{}.f{}", h_token(h), m.variant, sign_char(m.s1),
                     m.s2 == Sign::Plus ? "plus" : "minus");
}

std::string family_name(Family f) { return f == Family::Const ? "const" : "maslov1"; }

std::optional<Family> parse_family(std::string_view name) {
  if (name == "const") return Family::Const;
  if (name == "maslov1") return Family::Maslov1;
  return std::nullopt;
}

Quilt lookup(std::string_view id_view) {
  const std::string id(id_view);
  std::smatch m;
  static const std::regex floer(R"(floer\.cp([12])\.([uv])([0-2])\.([pm])([pm]))");
  static const std::regex bubble(R"(bubble\.sheet_switch\.([pm])([pm]))");
  static const std::regex acw(R"(quilt\.acw\.(plus|minus))");
  static const std::regex cnst(R"(quilt\.const\.h(.+)\.([pm])([pm]))");
  static const std::regex maslov(R"(quilt\.maslov1\.h(.+)\.v([01])\.([pm])\.f(plus|minus))");
  auto sign = [](const std::ssub_match& s) { return *parse_sign_char(s.str()[0]); };
  auto height = [&](const std::ssub_match& s) {
    auto h = parse_double(s.str());
    if (!h) throw CatalogError("unparseable h in catalog id: " + id);
    return *h;
  };
  if (std::regex_match(id, m, floer)) {
    const int i = m[3].str()[0] - '0';
    if (m[1] == "2" && m[2] == "u") return make_floer_strip_cp2(i, sign(m[4]), sign(m[5])).as_quilt();
    if (m[1] == "1" && m[2] == "v" && i < 2) return make_floer_strip_cp1(i, sign(m[4]), sign(m[5])).as_quilt();
  } else if (std::regex_match(id, m, bubble)) {
    return make_eight_bubble_sheet_switch(sign(m[1]), sign(m[2]));
  } else if (std::regex_match(id, m, acw)) {
    return make_acw_quilt(m[1] == "plus" ? Sign::Plus : Sign::Minus);
  } else if (std::regex_match(id, m, cnst)) {
    return make_const_projection_quilt(height(m[1]), sign(m[2]), sign(m[3]));
  } else if (std::regex_match(id, m, maslov)) {
    return make_maslov1_quilt(height(m[1]), m[2].str()[0] - '0', sign(m[3]),
                              m[4] == "plus" ? Sign::Plus : Sign::Minus);
  }
  throw CatalogError("unknown catalog id: " + id);
}

std::vector<CatalogEntry> catalog_listing() {
  std::vector<CatalogEntry> out;
  for (const auto& s : floer_strips()) {
    const char* what = s.side == FloerSide::CP2 ? "rigid strip in CP^2, RP^2 / T^2 boundary"
                                                : "rigid strip in CP^1, gamma / S^1 boundary";
    out.push_back({s.id, what});
  }
  for (Sign a : {Sign::Plus, Sign::Minus})
    for (Sign b : {Sign::Plus, Sign::Minus})
      out.push_back({fmt::format("bubble.sheet_switch.{}", sign_pair(a, b)),
                     "figure-eight bubble: strip in CP^2 plus constant half-plane in CP^1"});
  out.push_back({"quilt.acw.plus", "two-patch quilt with L_AC boundary, area 1/5 + 3/10"});
  out.push_back({"quilt.acw.minus", "two-patch quilt with L_AC boundary, area 1/5 + 3/10"});
  out.push_back({"quilt.const.h{h}.{pp|pm|mp|mm}", "constant-projection quilt, 0 < h < pi/2"});
  out.push_back({"quilt.maslov1.h{h}.v{0|1}.{p|m}.f{plus|minus}",
                 "Maslov-1 quilt with Poisson-integral third coordinate, 0 < h < pi/2"});
  return out;
}

}  // namespace quiltlab
