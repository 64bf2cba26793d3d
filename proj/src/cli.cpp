#include "quiltlab/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include <fmt/format.h>

#include "quiltlab/figure.hpp"
#include "quiltlab/floer.hpp"
#include "quiltlab/verify.hpp"

namespace quiltlab::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::vector<std::string> kCommands = {"catalog", "verify", "sweep", "area", "floer", "moment-plot", "eight"};
const std::vector<double> kDefaultGrid = {0.15, 0.5, 1.0, 1.4};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

ToleranceOverrides overrides_of(const RunConfig& c) { return {c.tol_seam, c.tol_boundary, c.tol_area, c.samples}; }

void write_report(const RunConfig& c, const json& j) {
  if (c.report.empty()) return;
  const fs::path p(c.report);
  const auto dir = p.has_parent_path() ? p.parent_path().string() : std::string(".");
  write_files_atomically(dir, {{p.filename().string(), j.dump(2) + "\n"}});
}

void print_report(const VerificationReport& r, std::ostream& out) {
  out << fmt::format("{}: {}\n", r.label, r.pass ? "PASS" : "FAIL");
  for (const auto& c : r.seams)
    out << fmt::format("  seam {} ({}): max {:.3e} at x = {:.6g}, tol {:.1e}{}\n", c.index, c.what, c.profile.max,
                       c.profile.at, c.tol, c.pass ? "" : "  FAIL");
  for (const auto& c : r.boundaries)
    out << fmt::format("  boundary {} ({}): max {:.3e} at x = {:.6g}, tol {:.1e}{}\n", c.index, c.what,
                       c.profile.max, c.profile.at, c.tol, c.pass ? "" : "  FAIL");
  for (const auto& a : r.areas)
    out << fmt::format("  area of patch {} ({}): {:.12f} +- {:.1e}\n", a.patch, a.label, a.area.value, a.area.error);
  out << fmt::format("  total area {:.12f} +- {:.1e}", r.total_area, r.total_area_error);
  if (r.expected_area) out << fmt::format(" (expected {}, tol {:.1e})", *r.expected_area, r.tol.area_tol);
  out << (r.area_pass ? "\n" : "  FAIL\n");
  out << fmt::format("  holomorphy residual {:.3e}, derivative mismatch {:.3e}{}\n", r.holomorphy,
                     r.derivative_mismatch, r.holomorphy_pass ? "" : "  FAIL");
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
}

std::optional<Family> family_of(const std::string& name) {
  if (name.empty() || name == "all") return std::nullopt;
  auto f = parse_family(name);
  if (!f) throw UsageError(fmt::format("unknown family '{}' (const, maslov1 or all)", name));
  return f;
}

int cmd_catalog(const RunConfig& c, std::ostream& out) {
  const auto entries = catalog_listing();
  if (c.json) {
    json j = json::array();
    for (const auto& e : entries) j.push_back({{"id", e.id}, {"description", e.description}});
    out << j.dump(2) << '\n';
  } else {
    for (const auto& e : entries) out << fmt::format("{:<40} {}\n", e.id, e.description);
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  std::vector<Quilt> quilts;
  if (!c.quilt.empty()) {
    quilts.push_back(lookup(c.quilt));
  } else if (!c.family.empty()) {
    if (!c.h) throw UsageError("verify --family needs --h");
    const auto f = family_of(c.family);
    quilts = f ? make_family(*f, *c.h) : make_all_components(*c.h);
  } else {
    throw UsageError("verify needs --quilt or --family with --h");
  }
  if (!c.tamper.empty())
    for (auto& q : quilts) q = tamper(q, c.tamper);

  bool pass = true;
  json reports = json::array();
  for (const auto& q : quilts) {
    const auto r = verify_quilt(q, overrides_of(c).apply(ToleranceProfile::for_quilt(q)));
    print_report(r, out);
    pass = pass && r.pass;
    reports.push_back(r.to_json());
  }
  write_report(c, quilts.size() == 1 ? reports[0] : json{{"reports", reports}, {"pass", pass}});
  return pass ? kExitPass : kExitFail;
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  auto grid = c.h_grid;
  if (grid.empty()) grid = c.h ? std::vector<double>{*c.h} : kDefaultGrid;
  SweepOptions opts;
  opts.overrides = overrides_of(c);
  const auto r = sweep_family(family_of(c.family), grid, opts);
  for (const auto& f : r.fibers) {
    std::size_t passed = 0;
    for (const auto& q : f.reports) passed += q.pass;
    out << fmt::format("h = {}: {}/{} components pass{}\n", f.h, passed, f.reports.size(),
                       f.error.empty() ? "" : " (" + f.error + ")");
    for (const auto& q : f.reports)
      if (!q.pass) print_report(q, out);
  }
  if (r.limits) {
    const auto& l = *r.limits;
    out << fmt::format("h -> 0 (h = {}): rescaled const members vs bubble {:.3e}, maslov1 u1 vs CP1 strips {:.3e}\n",
                       l.h_small, l.const_rescaling, l.maslov1_u1_distance);
    out << fmt::format("h -> pi/2 (h = {:.6f}): sup distance of u2 to the CP2 strips on |z| <= {} is {:.3e}\n",
                       l.h_top, opts.radius, l.top_distance);
  }
  out << fmt::format("sweep {} in {:.1f} s\n", r.pass ? "PASS" : "FAIL", r.seconds);
  write_report(c, r.to_json());
  return r.pass ? kExitPass : kExitFail;
}

int cmd_area(const RunConfig& c, std::ostream& out) {
  if (c.quilt.empty()) throw UsageError("area needs --quilt");
  const auto q = lookup(c.quilt);
  const double tol = c.tol_area.value_or(ToleranceProfile::for_quilt(q).area_tol);
  double total = 0.0, err = 0.0;
  bool converged = true;
  json patches = json::array();
  for (std::size_t i = 0; i < q.patches.size(); ++i) {
    const auto a = patch_area(q.patches[i]);
    out << fmt::format("patch {} ({}, {}): {:.12f} +- {:.1e}, {} evaluations\n", i, q.patches[i].label(),
                       q.patches[i].region().describe(), a.value, a.error, a.evaluations);
    total += a.value;
    err += a.error;
    converged = converged && a.converged;
    patches.push_back({{"patch", i}, {"value", a.value}, {"err", a.error}, {"converged", a.converged}});
  }
  bool pass = converged;
  out << fmt::format("total {:.12f} +- {:.1e}", total, err);
  if (q.expected_area) {
    pass = pass && std::abs(total - *q.expected_area) <= tol;
    out << fmt::format(" (expected {}, tol {:.1e})", *q.expected_area, tol);
  }
  out << (pass ? "\n" : "  FAIL\n");
  write_report(c, {{"label", q.label}, {"areas", patches}, {"total_area", total}, {"pass", pass}});
  return pass ? kExitPass : kExitFail;
}

int cmd_floer(const RunConfig& c, std::ostream& out) {
  std::vector<FloerSide> sides;
  if (c.side == "cp1") sides = {FloerSide::CP1};
  else if (c.side == "cp2") sides = {FloerSide::CP2};
  else if (c.side == "both") sides = {FloerSide::CP1, FloerSide::CP2};
  else throw UsageError(fmt::format("unknown side '{}' (cp1, cp2 or both)", c.side));

  bool pass = true;
  json j = json::array();
  for (auto side : sides) {
    const auto fc = build_complex(side);
    const auto d2 = differential_square(fc);
    const bool cp2 = side == FloerSide::CP2;
    const bool ok = d2 == (cp2 ? Z2Matrix::identity() : Z2Matrix::zero()) &&
                    differential_square_bruteforce(fc) == d2 && fc.strips.size() == (cp2 ? 12u : 8u);
    pass = pass && ok;
    out << fmt::format("{} side: {} rigid strips\n", side_name(side), fc.strips.size());
    out << format_provenance(fc);
    out << "d (column = input, row = output):\n" << format_matrix(fc.d);
    out << "d^2:\n" << format_matrix(d2);
    out << fmt::format("rank d = {}; d^2 {}\n", fc.d.rank(),
                       d2 == Z2Matrix::zero() ? fmt::format("= 0, homology dimension {}", homology_dimension(fc))
                       : d2 == Z2Matrix::identity() ? std::string("= identity")
                                                    : std::string("is neither 0 nor the identity"));
    json m = json::array();
    for (std::size_t r = 0; r < 4; ++r) {
      json row = json::array();
      for (std::size_t k = 0; k < 4; ++k) row.push_back(fc.d(r, k));
      m.push_back(row);
    }
    json strips = json::array();
    for (const auto& w : fc.strips) strips.push_back({{"strip", w.strip}, {"from", w.from.label()}, {"to", w.to.label()}});
    j.push_back({{"side", side_name(side)}, {"d", m}, {"d_squared_zero", d2 == Z2Matrix::zero()},
                 {"d_squared_identity", d2 == Z2Matrix::identity()}, {"strips", strips}, {"pass", ok}});
  }
  write_report(c, j);
  return pass ? kExitPass : kExitFail;
}

int cmd_moment_plot(const RunConfig& c, std::ostream& out) {
  const auto q = lookup(c.quilt.empty() ? "quilt.acw.plus" : c.quilt);
  FigureOptions opts;
  if (c.samples) opts.samples = *c.samples;
  opts.seed = c.seed;
  const auto f = emit_moment_figure(q, opts);
  const auto& k = f.checks;
  const json checks = {{"quilt", q.label},
                       {"lambda_endpoint_error", k.lambda_endpoint_error},
                       {"lac_endpoint_error", k.lac_endpoint_error},
                       {"lambda_offset", k.lambda_offset},
                       {"lac_offset", k.lac_offset},
                       {"ellipse_exact", k.ellipse_exact},
                       {"mu_u2_origin", {k.mu_u2_origin.x, k.mu_u2_origin.y}},
                       {"mu_u2_origin_error", k.mu_u2_origin_error},
                       {"ellipse_residual", k.ellipse_residual},
                       {"symmetry", k.symmetry},
                       {"u1_offset", k.u1_offset},
                       {"triangle_violation", k.triangle_violation},
                       {"pass", k.pass}};
  auto files = figure_csv(f);
  files.emplace_back("figure.svg", figure_svg(f));
  files.emplace_back("checks.json", checks.dump(2) + "\n");
  const std::string dir = c.out.empty() ? "moment_figure" : c.out;
  write_files_atomically(dir, files);

  out << fmt::format("Lambda segment ({:.12g}, {:.12g}) to ({:.12g}, {:.12g}), endpoint error {:.1e}\n",
                     f.lambda_segment[0].x, f.lambda_segment[0].y, f.lambda_segment[1].x, f.lambda_segment[1].y,
                     k.lambda_endpoint_error);
  out << fmt::format("L_AC segment ({:.12g}, {:.12g}) to ({:.12g}, {:.12g}), endpoint error {:.1e}\n",
                     f.lac_segment[0].x, f.lac_segment[0].y, f.lac_segment[1].x, f.lac_segment[1].y,
                     k.lac_endpoint_error);
  out << fmt::format("mu(u2(0)) = ({:.12g}, {:.12g})\n", k.mu_u2_origin.x, k.mu_u2_origin.y);
  out << fmt::format("ellipse at (-1/150, -1/6) in rational arithmetic: {}\n", k.ellipse_exact ? "0" : "nonzero");
  out << fmt::format("max ellipse residual {:.1e}, mirror symmetry {:.1e}, u1 off y = -1/6 by {:.1e}\n",
                     k.ellipse_residual, k.symmetry, k.u1_offset);
  out << fmt::format("wrote {} files to {}; {}\n", files.size(), dir, k.pass ? "PASS" : "FAIL");
  write_report(c, checks);
  return k.pass ? kExitPass : kExitFail;
}

int cmd_eight(const RunConfig& c, std::ostream& out) {
  bool pass = true;
  json reports = json::array();
  for (const char* id : {"quilt.acw.plus", "quilt.acw.minus"}) {
    auto q = lookup(id);
    if (!c.tamper.empty()) q = tamper(q, c.tamper);
    const auto r = verify_quilt(q, overrides_of(c).apply(ToleranceProfile::for_quilt(q)));
    print_report(r, out);
    // u_1 on the half-plane carries 1/5, u_2 on the strip 3/10.
    const double tol = r.tol.area_tol;
    const bool areas = r.areas.size() == 2 && std::abs(r.areas[0].area.value - 0.3) <= tol &&
                       std::abs(r.areas[1].area.value - 0.2) <= tol;
    if (!areas) out << "  patch areas differ from 3/10 and 1/5\n";
    pass = pass && r.pass && areas;
    reports.push_back(r.to_json());
  }
  write_report(c, {{"reports", reports}, {"pass", pass}});
  return pass ? kExitPass : kExitFail;
}

std::string normalize_key(std::string k) {
  std::replace(k.begin(), k.end(), '_', '-');
  return k;
}

std::string json_scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) {
    std::ostringstream s;
    s.precision(17);
    s << v.get<double>();
    return s.str();
  }
  throw std::runtime_error("config values must be strings, numbers, booleans or arrays of numbers");
}

bool given(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::map<std::string, std::string> out;

  if (trim(text).starts_with("{")) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw std::runtime_error(fmt::format("{}: {}", path, e.what()));
    }
    for (const auto& [k, v] : j.items()) {
      if (v.is_array()) {
        std::string joined;
        for (const auto& e : v) joined += (joined.empty() ? "" : ",") + json_scalar(e);
        out[normalize_key(k)] = joined;
      } else {
        out[normalize_key(k)] = json_scalar(v);
      }
    }
    return out;
  }

  std::istringstream lines(text);
  std::string line;
  for (int n = 1; std::getline(lines, line); ++n) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error(fmt::format("{}:{}: expected key = value", path, n));
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw std::runtime_error(fmt::format("{}:{}: empty key", path, n));
    out[normalize_key(key)] = trim(line.substr(eq + 1));
  }
  return out;
}

void write_files_atomically(const std::string& dir, const std::vector<std::pair<std::string, std::string>>& files) {
  fs::create_directories(dir);
  const auto tag = fmt::format(".tmp-{}", ::getpid());
  std::vector<std::pair<fs::path, fs::path>> moves;
  for (const auto& [name, content] : files) {
    const fs::path final_path = fs::path(dir) / name;
    const fs::path tmp = fs::path(dir) / ("." + name + tag);
    std::ofstream f(tmp, std::ios::binary);
    f << content;
    f.close();
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    moves.emplace_back(tmp, final_path);
  }
  for (const auto& [tmp, final_path] : moves) fs::rename(tmp, final_path);
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "catalog") return cmd_catalog(c, out);
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "sweep") return cmd_sweep(c, out);
    if (c.command == "area") return cmd_area(c, out);
    if (c.command == "floer") return cmd_floer(c, out);
    if (c.command == "moment-plot") return cmd_moment_plot(c, out);
    if (c.command == "eight") return cmd_eight(c, out);
    throw UsageError(fmt::format("unknown command '{}'", c.command));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Catalog ids, h ranges, tamper specs and tolerances.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Holomorphic quilts in CP^1 and CP^2: catalog, verification, h-sweeps, Floer checks, moment figure.",
               "quiltlab"};
  app.set_help_flag("--help", "Print this help and exit");
  app.fallthrough();
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path,
                 "Config file: key = value lines or a flat JSON object; keys are flag names, plus 'command'. "
                 "Flags override the file.");

  auto common = [&](CLI::App* s) {
    s->add_option("--quilt", cfg.quilt, "Catalog id, e.g. quilt.acw.plus (see 'catalog list')");
    s->add_option("--family", cfg.family, "const, maslov1 or all (sweep default: all)");
    s->add_option_function<double>("--h", [&](double v) { cfg.h = v; }, "Strip height h in (0, pi/2)");
    s->add_option("--h-grid", cfg.h_grid, "Comma-separated h values (sweep default: 0.15,0.5,1.0,1.4)")
        ->delimiter(',');
    s->add_option_function<std::size_t>("--samples", [&](std::size_t v) { cfg.samples = v; },
                                        "Residual samples per seam/boundary (default 1000) or points per figure "
                                        "curve (default 200)");
    s->add_option_function<double>("--tol-seam", [&](double v) { cfg.tol_seam = v; },
                                   "Seam tolerance (default 1e-12 closed-form, 1e-4 Poisson quilts)");
    s->add_option_function<double>("--tol-boundary", [&](double v) { cfg.tol_boundary = v; },
                                   "Boundary tolerance (default 1e-12 closed-form, 1e-8 Poisson quilts)");
    s->add_option_function<double>("--tol-area", [&](double v) { cfg.tol_area = v; },
                                   "Area tolerance against the expected area (default 1e-6, 1e-5 Poisson quilts)");
    s->add_option("--side", cfg.side, "Floer side: cp1, cp2 or both (default cp2)");
    s->add_option("--out", cfg.out, "Output directory for figure files (default moment_figure)");
    s->add_option("--report", cfg.report, "Write the JSON report to this file");
    s->add_option("--tamper", cfg.tamper, "Negative control: seam+D, retag or boundary:K=TAG");
    s->add_option("--seed", cfg.seed, "Seed for sampled checks (default 1)");
    s->add_flag("--json", cfg.json, "Machine-readable listing");
  };

  auto* catalog = app.add_subcommand("catalog", "Browse the catalog");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog ids");
  list->add_flag("--json", cfg.json, "Print JSON");
  common(app.add_subcommand("verify", "Verify seams, boundaries, holomorphy and area of a quilt or family"));
  common(app.add_subcommand("sweep", "Verify every component over a grid of h plus the h -> 0, pi/2 limits"));
  common(app.add_subcommand("area", "Symplectic area of each patch of a quilt"));
  common(app.add_subcommand("floer", "Mod-2 Floer differentials and their squares"));
  common(app.add_subcommand("moment-plot", "Moment-map figure data as CSV and SVG"));
  common(app.add_subcommand("eight", "The two L_AC quilts: seam, boundary and the areas 1/5 + 3/10"));

  std::vector<std::string> args = raw;
  try {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == "--config" && i + 1 < raw.size()) config_path = raw[i + 1];
      else if (raw[i].rfind("--config=", 0) == 0) config_path = raw[i].substr(9);
    }
    if (!config_path.empty()) {
      auto file = read_config_file(config_path);
      const bool has_command = std::any_of(raw.begin(), raw.end(), [](const std::string& a) {
        return std::find(kCommands.begin(), kCommands.end(), a) != kCommands.end();
      });
      if (auto it = file.find("command"); it != file.end()) {
        if (!has_command) {
          std::istringstream words(it->second);
          std::vector<std::string> cmd{std::istream_iterator<std::string>(words), {}};
          args.insert(args.begin(), cmd.begin(), cmd.end());
        }
        file.erase(it);
      }
      for (const auto& [key, value] : file) {
        if (given(raw, key)) continue;
        if (key == "json") {
          if (value == "true" || value == "1") args.push_back("--json");
          continue;
        }
        args.push_back("--" + key);
        args.push_back(value);
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::vector<const char*> argv{"quiltlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  for (auto* s : app.get_subcommands()) {
    cfg.command = s->get_name();
    break;
  }
  return run(cfg, out, err);
}

}  // namespace quiltlab::cli
