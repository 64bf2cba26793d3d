#include "quiltlab/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace quiltlab {

using std::numbers::pi;

namespace {

double vec_norm(const CVector& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

double sample_x(std::size_t j, std::size_t n, double x_min, double x_max) {
  if (n <= 1) return x_min;
  return x_min + (x_max - x_min) * static_cast<double>(j) / static_cast<double>(n - 1);
}

template <class Residual>
ResidualProfile profile(std::size_t samples, double x_min, double x_max, Residual&& residual) {
  ResidualProfile p;
  for (std::size_t j = 0; j < samples; ++j) {
    const double x = sample_x(j, samples, x_min, x_max);
    ++p.samples;
    try {
      const double r = residual(x);
      if (!std::isfinite(r)) throw std::runtime_error("non-finite residual");
      if (r > p.max || std::isnan(p.at)) {
        p.max = std::max(p.max, r);
        p.at = x;
      }
    } catch (const std::exception& e) {
      if (p.failures++ == 0) p.first_failure = fmt::format("x = {}: {}", x, e.what());
    }
  }
  return p;
}

double density_at(const AnalyticMap& m, Complex z) {
  const auto j = m.jet(z);
  return pullback_density_homogeneous(j.value, j.derivative);
}

}  // namespace

ToleranceProfile ToleranceProfile::exact() { return {}; }

ToleranceProfile ToleranceProfile::numeric() {
  ToleranceProfile t;
  t.seam_tol = 1e-4;
  t.boundary_tol = 1e-8;
  t.area_tol = 1e-5;
  t.cr_tol = 1e-5;
  return t;
}

ToleranceProfile ToleranceProfile::for_quilt(const Quilt& q) {
  for (const auto& p : q.patches)
    if (p.numeric()) return numeric();
  return exact();
}

void ToleranceProfile::validate() const {
  if (!(seam_tol > 0 && boundary_tol > 0 && area_tol > 0 && cr_tol > 0))
    throw std::invalid_argument("tolerances must be positive");
  if (samples == 0) throw std::invalid_argument("sample count must be positive");
  if (!(x_max > x_min) && samples > 1) throw std::invalid_argument("sample range must satisfy x_min < x_max");
}

ToleranceProfile ToleranceOverrides::apply(ToleranceProfile t) const {
  if (seam_tol) t.seam_tol = *seam_tol;
  if (boundary_tol) t.boundary_tol = *boundary_tol;
  if (area_tol) t.area_tol = *area_tol;
  if (samples) t.samples = *samples;
  return t;
}

ResidualProfile seam_residual_profile(const Quilt& q, std::size_t seam, std::size_t samples, double x_min,
                                      double x_max) {
  const Seam& s = q.seams.at(seam);
  const auto& ambient = q.patches.at(s.ambient_patch);
  const auto& reduced = q.patches.at(s.reduced_patch);
  return profile(samples, x_min, x_max, [&](double x) {
    const Complex z(x, s.y);
    const auto r = correspondence_residual(reduced(z), ambient(z));
    return r.value;
  });
}

ResidualProfile boundary_residual_profile(const Quilt& q, std::size_t boundary, std::size_t samples,
                                          double x_min, double x_max) {
  const BoundaryCondition& b = q.boundaries.at(boundary);
  const auto& patch = q.patches.at(b.patch);
  const double y = q.edge_y(b.patch, b.edge);
  return profile(samples, x_min, x_max,
                 [&](double x) { return lagrangian_residual(b.lagrangian, patch(Complex(x, y))); });
}

AreaResult patch_area(const AnalyticMap& m, const AreaOptions& opts) {
  const auto& region = m.region();
  const double scale = m.x_scale();
  const double extent =
      opts.x_extent > 0.0 ? opts.x_extent : (m.decay() == DecayClass::Exponential ? 40.0 : 1e6);
  const double s_max = std::asinh(extent / scale);
  const int base = std::max(2, static_cast<int>(std::ceil(2.0 * s_max)));
  const double h0 = s_max / base;

  AreaResult out;
  // Line integral of the density across the region at fixed x, with its error.
  auto line = [&](double x, double abs_tol) {
    const QuadratureOptions q{abs_tol, 1e-12, 20000};
    QuadratureResult<double> r;
    if (region.kind == RegionKind::Strip) {
      r = integrate_interval([&](double y) { return density_at(m, Complex(x, y)); }, region.y_lo, region.y_hi,
                             q);
    } else {
      // The y-profile of an algebraically decaying density widens like |x|.
      const double dir = region.kind == RegionKind::HalfPlaneAbove ? 1.0 : -1.0;
      const double y0 = region.kind == RegionKind::HalfPlaneAbove ? region.y_lo : region.y_hi;
      const double width = std::hypot(x, scale);
      r = integrate_interval(
          [&](double th) {
            const double t = std::tan(th);
            return density_at(m, Complex(x, y0 + dir * width * t)) * width * (1.0 + t * t);
          },
          0.0, pi / 2, q);
    }
    out.evaluations += r.evaluations;
    return r;
  };

  // Trapezoid sums over the nested grids s = j * h0 / 2^level.
  bool lines_ok = true;
  double sum = 0.0, inner_err = 0.0, edge_values = 0.0;
  auto add_node = [&](int j, double step) {
    const double s = j * step;
    const double w = scale * std::cosh(s);
    const double tol_here = opts.tol / (4.0 * s_max * w);
    const auto r = line(scale * std::sinh(s), tol_here);
    lines_ok = lines_ok && r.converged;
    sum += w * r.value;
    inner_err += w * r.error_estimate;
    return w * r.value;
  };
  double step = h0;
  for (int j = -base; j <= base; ++j) {
    const double v = add_node(j, step);
    if (std::abs(j) == base) edge_values += std::abs(v) / (scale * std::cosh(s_max));
  }
  double prev = step * sum;
  double current = prev;
  double diff = std::numeric_limits<double>::infinity();
  bool converged = false;
  int nodes_per_side = base;
  for (int level = 1; level <= opts.max_levels; ++level) {
    step *= 0.5;
    nodes_per_side *= 2;
    for (int j = -nodes_per_side + 1; j < nodes_per_side; j += 2) add_node(j, step);
    current = step * sum;
    diff = std::abs(current - prev);
    prev = current;
    if (level >= 2 && diff <= opts.tol) {
      converged = true;
      break;
    }
  }
  // Tail beyond |x| = extent for densities decaying at least like |z|^-4: the
  // line integral then decays like |x|^-4 across a strip, |x|^-3 across a half-plane.
  out.tail = edge_values * extent / (region.kind == RegionKind::Strip ? 3.0 : 2.0);
  out.value = current;
  out.error = diff + step * inner_err + out.tail;
  out.converged = converged && lines_ok;
  return out;
}

HolomorphyResult holomorphy_residual(const AnalyticMap& m) {
  const auto& region = m.region();
  std::vector<double> ys;
  double radius;
  if (region.kind == RegionKind::Strip) {
    const double height = region.y_hi - region.y_lo;
    for (double f : {0.25, 0.5, 0.75}) ys.push_back(region.y_lo + f * height);
    radius = 0.05 * std::min(height, 1.0);
  } else {
    const double dir = region.kind == RegionKind::HalfPlaneAbove ? 1.0 : -1.0;
    const double y0 = region.kind == RegionKind::HalfPlaneAbove ? region.y_lo : region.y_hi;
    for (double d : {0.5, 1.0, 2.0}) ys.push_back(y0 + dir * d);
    radius = 0.05;
  }
  const double xs_unit = std::max(m.x_scale(), 0.25);
  constexpr int kNodes = 16;

  HolomorphyResult out;
  for (double u : {-6.0, -3.0, -1.5, -0.5, 0.0, 0.5, 1.5, 3.0, 6.0}) {
    for (double y : ys) {
      const Complex z(u * xs_unit, y);
      const auto j0 = m.jet(z);
      CVector dz(j0.value.size()), dzbar(j0.value.size());
      for (int k = 0; k < kNodes; ++k) {
        const Complex w = std::polar(1.0, 2.0 * pi * k / kNodes);
        const CVector v = m.lift(z + radius * w);
        for (std::size_t c = 0; c < v.size(); ++c) {
          dzbar[c] += v[c] * w / (kNodes * radius);
          dz[c] += v[c] * std::conj(w) / (kNodes * radius);
        }
      }
      const double scale = vec_norm(j0.value) + vec_norm(dz);
      const double r = vec_norm(dzbar) / scale;
      CVector gap(dz.size());
      for (std::size_t c = 0; c < dz.size(); ++c) gap[c] = j0.derivative[c] - dz[c];
      out.derivative_mismatch = std::max(out.derivative_mismatch, vec_norm(gap) / scale);
      if (r >= out.max_residual) {
        out.max_residual = r;
        out.at = z;
      }
      ++out.points;
    }
  }
  return out;
}

VerificationReport verify_quilt(const Quilt& q, const ToleranceProfile& tol) {
  tol.validate();
  VerificationReport rep;
  rep.label = q.label;
  rep.tol = tol;
  rep.expected_area = q.expected_area;
  try {
    q.validate();
  } catch (const CatalogError& e) {
    rep.notes.push_back(e.what());
    return rep;
  }

  for (std::size_t i = 0; i < q.seams.size(); ++i) {
    CheckSummary c;
    c.index = i;
    c.what = fmt::format("Lambda seam at Im z = {}", q.seams[i].y);
    c.profile = seam_residual_profile(q, i, tol.samples, tol.x_min, tol.x_max);
    c.tol = tol.seam_tol;
    c.pass = c.profile.failures == 0 && c.profile.max <= c.tol;
    if (c.profile.failures) rep.notes.push_back("seam: " + c.profile.first_failure);
    rep.seams.push_back(c);
  }
  for (std::size_t i = 0; i < q.boundaries.size(); ++i) {
    const auto& b = q.boundaries[i];
    CheckSummary c;
    c.index = i;
    c.what = fmt::format("{} on patch {} {} edge", to_string(b.lagrangian), b.patch,
                         b.edge == Edge::Bottom ? "bottom" : "top");
    c.profile = boundary_residual_profile(q, i, tol.samples, tol.x_min, tol.x_max);
    c.tol = tol.boundary_tol;
    c.pass = c.profile.failures == 0 && c.profile.max <= c.tol;
    if (c.profile.failures) rep.notes.push_back("boundary: " + c.profile.first_failure);
    rep.boundaries.push_back(c);
  }

  bool areas_ok = true;
  bool holo_ok = true;
  for (std::size_t i = 0; i < q.patches.size(); ++i) {
    const auto& p = q.patches[i];
    PatchAreaSummary a;
    a.patch = i;
    a.label = p.label();
    try {
      a.area = patch_area(p);
      if (!a.area.converged) {
        areas_ok = false;
        rep.notes.push_back(fmt::format("area of patch {} did not converge", i));
      }
    } catch (const std::exception& e) {
      areas_ok = false;
      rep.notes.push_back(fmt::format("area of patch {}: {}", i, e.what()));
    }
    rep.total_area += a.area.value;
    rep.total_area_error += a.area.error;
    rep.areas.push_back(a);
    try {
      const auto h = holomorphy_residual(p);
      rep.holomorphy = std::max(rep.holomorphy, h.max_residual);
      rep.derivative_mismatch = std::max(rep.derivative_mismatch, h.derivative_mismatch);
    } catch (const std::exception& e) {
      holo_ok = false;
      rep.notes.push_back(fmt::format("holomorphy check on patch {}: {}", i, e.what()));
    }
  }
  rep.area_pass = areas_ok && (!rep.expected_area || std::abs(rep.total_area - *rep.expected_area) <= tol.area_tol);
  rep.holomorphy_pass = holo_ok && rep.holomorphy <= tol.cr_tol && rep.derivative_mismatch <= 1e-6;
  rep.pass = rep.area_pass && rep.holomorphy_pass;
  for (const auto& c : rep.seams) rep.pass = rep.pass && c.pass;
  for (const auto& c : rep.boundaries) rep.pass = rep.pass && c.pass;
  return rep;
}

nlohmann::json VerificationReport::to_json() const {
  using nlohmann::json;
  auto checks = [](const std::vector<CheckSummary>& v) {
    json a = json::array();
    for (const auto& c : v)
      a.push_back({{"index", c.index},
                   {"what", c.what},
                   {"max", c.profile.max},
                   {"at", c.profile.at},
                   {"samples", c.profile.samples},
                   {"failures", c.profile.failures},
                   {"tol", c.tol},
                   {"pass", c.pass}});
    return a;
  };
  json areas_json = json::array();
  for (const auto& a : areas)
    areas_json.push_back({{"patch", a.patch},
                          {"label", a.label},
                          {"value", a.area.value},
                          {"err", a.area.error},
                          {"converged", a.area.converged}});
  json j = {{"label", label},
            {"seams", checks(seams)},
            {"boundaries", checks(boundaries)},
            {"areas", areas_json},
            {"total_area", total_area},
            {"total_area_err", total_area_error},
            {"expected_area", expected_area ? json(*expected_area) : json(nullptr)},
            {"area_pass", area_pass},
            {"holomorphy", {{"residual", holomorphy}, {"derivative_mismatch", derivative_mismatch},
                            {"pass", holomorphy_pass}}},
            {"tolerances", {{"seam", tol.seam_tol}, {"boundary", tol.boundary_tol}, {"area", tol.area_tol},
                            {"cr", tol.cr_tol}, {"samples", tol.samples}, {"x_min", tol.x_min},
                            {"x_max", tol.x_max}}},
            {"pass", pass},
            {"notes", notes}};
  return j;
}

LagrangianId alternate_lagrangian(LagrangianId id, std::size_t dim) {
  if (dim == 1) return id == LagrangianId::S1Clifford ? LagrangianId::RP1 : LagrangianId::S1Clifford;
  switch (id) {
    case LagrangianId::RP2: return LagrangianId::T2Clifford;
    case LagrangianId::T2Clifford: return LagrangianId::LAC;
    default: return LagrangianId::RP2;
  }
}

Quilt tamper(const Quilt& q, std::string_view spec) {
  Quilt t = q;
  t.label = fmt::format("{} [tamper {}]", q.label, spec);
  if (spec.rfind("seam", 0) == 0) {
    const std::string num(spec.substr(4));
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (num.empty() || used != num.size() || !std::isfinite(d))
      throw std::invalid_argument(fmt::format("bad tamper spec '{}': expected seam+<shift>", spec));
    if (q.seams.empty()) throw std::invalid_argument("tamper seam: quilt has no seams");
    for (const auto& s : q.seams) t.patches[s.ambient_patch] = q.patches[s.ambient_patch].translated(Complex(0.0, -d));
    return t;
  }
  if (spec == "retag") {
    for (auto& b : t.boundaries) b.lagrangian = alternate_lagrangian(b.lagrangian, t.patches[b.patch].target_dim());
    return t;
  }
  if (spec.rfind("boundary:", 0) == 0) {
    const auto eq = spec.find('=');
    if (eq != std::string_view::npos) {
      const std::string idx(spec.substr(9, eq - 9));
      const auto tag = parse_lagrangian(spec.substr(eq + 1));
      std::size_t k = 0;
      try {
        k = std::stoul(idx);
      } catch (const std::exception&) {
        k = t.boundaries.size();
      }
      if (tag && k < t.boundaries.size()) {
        t.boundaries[k].lagrangian = *tag;
        return t;
      }
    }
  }
  throw std::invalid_argument(fmt::format("bad tamper spec '{}'", spec));
}

namespace {

std::vector<FamilyMember> selected_members(std::optional<Family> family) {
  if (family) return family_members(*family);
  auto all = family_members(Family::Const);
  for (const auto& m : family_members(Family::Maslov1)) all.push_back(m);
  return all;
}

std::vector<Quilt> selected_components(std::optional<Family> family, double h) {
  return family ? make_family(*family, h) : make_all_components(h);
}

}  // namespace

LimitDiagnostics limit_diagnostics(std::optional<Family> family, const SweepOptions& opts) {
  LimitDiagnostics d;
  d.h_small = opts.h_small;
  d.h_top = pi / 2 - opts.h_top_gap;
  const auto members = selected_members(family);

  // h -> 0
  const auto small = selected_components(family, d.h_small);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    const auto& q = small[i];
    if (m.family == Family::Const) {
      const auto bubble = make_eight_bubble_sheet_switch(m.s1, m.s2);
      for (int a = -24; a <= 24; ++a)
        for (int b = 0; b <= 8; ++b) {
          const Complex w(0.25 * a, (pi / 2) * b / 8.0);
          const Complex z = (2.0 * d.h_small / pi) * w;
          d.const_rescaling = std::max(d.const_rescaling, fs_distance(q.patches[0](z), bubble.patches[0](w)));
        }
    } else {
      const auto strip = bottom_limit_strip(m);
      const auto& u1 = q.patches[1];
      for (int a = -24; a <= 24; ++a)
        for (int b = 0; b <= 8; ++b) {
          const Complex w(0.25 * a, d.h_small + (pi / 2 - d.h_small) * b / 8.0);
          d.maslov1_u1_distance = std::max(d.maslov1_u1_distance, fs_distance(u1(w), strip.map(w)));
        }
      d.maslov1_u1_area_gap = std::max(d.maslov1_u1_area_gap, std::abs(patch_area(u1).value - 0.5));
    }
  }

  // h -> pi/2, on the part of the disc |z| <= radius inside the strip. The
  // last row stays just inside: the top-edge values only carry a modulus.
  const auto top = selected_components(family, d.h_top);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto limit = top_limit(members[i]);
    const auto& u2 = top[i].patches[0];
    double worst = 0.0;
    for (int a = -16; a <= 16; ++a)
      for (int b = 0; b <= 8; ++b) {
        const double y = b < 8 ? d.h_top * b / 8.0 : d.h_top * (1.0 - 1e-4);
        const Complex z(opts.radius * a / 16.0, y);
        if (std::abs(z) > opts.radius) continue;
        worst = std::max(worst, fs_distance(u2(z), limit.map(z)));
      }
    d.top_by_member.emplace_back(fmt::format("{} -> {}", top[i].label, limit.id), worst);
    d.top_distance = std::max(d.top_distance, worst);
  }
  d.pass = d.const_rescaling <= opts.rescaling_tol && d.maslov1_u1_distance <= opts.rescaling_tol &&
           d.top_distance < opts.top_tol;
  return d;
}

SweepResult sweep_family(std::optional<Family> family, const std::vector<double>& h_grid,
                         const SweepOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SweepResult res;
  res.pass = true;
  const std::size_t expected = family ? family_members(*family).size() : 12;
  for (double h : h_grid) {
    FiberResult f;
    f.h = h;
    try {
      for (const auto& q : selected_components(family, h))
        f.reports.push_back(verify_quilt(q, opts.overrides.apply(opts.tolerance.value_or(ToleranceProfile::for_quilt(q)))));
      f.pass = f.reports.size() == expected;
      for (const auto& r : f.reports) f.pass = f.pass && r.pass;
    } catch (const std::exception& e) {
      f.error = e.what();
      f.pass = false;
    }
    res.pass = res.pass && f.pass;
    res.fibers.push_back(std::move(f));
  }
  if (opts.limits) {
    res.limits = limit_diagnostics(family, opts);
    res.pass = res.pass && res.limits->pass;
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

nlohmann::json SweepResult::to_json() const {
  using nlohmann::json;
  json fibers_json = json::array();
  for (const auto& f : fibers) {
    json reps = json::array();
    for (const auto& r : f.reports) reps.push_back(r.to_json());
    fibers_json.push_back({{"h", f.h}, {"pass", f.pass}, {"error", f.error}, {"components", f.reports.size()},
                           {"reports", reps}});
  }
  json j = {{"fibers", fibers_json}, {"pass", pass}};
  if (limits) {
    json members = json::array();
    for (const auto& [label, dist] : limits->top_by_member) members.push_back({{"member", label}, {"sup_distance", dist}});
    j["limits"] = {{"h_small", limits->h_small},
                   {"h_top", limits->h_top},
                   {"const_rescaling", limits->const_rescaling},
                   {"maslov1_u1_distance", limits->maslov1_u1_distance},
                   {"maslov1_u1_area_gap", limits->maslov1_u1_area_gap},
                   {"top_distance", limits->top_distance},
                   {"top_by_member", members},
                   {"pass", limits->pass}};
  }
  return j;
}

}  // namespace quiltlab
