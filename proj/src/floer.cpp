#include "quiltlab/floer.hpp"

#include <fmt/format.h>

namespace quiltlab {

namespace {

constexpr double kLimitX = 40.0;
constexpr double kEndpointTol = 1e-10;

ProjectivePoint generator_point(FloerSide side, Generator g) {
  const double a = value(g.s1), b = value(g.s2);
  return side == FloerSide::CP2 ? ProjectivePoint{1.0, a, b} : ProjectivePoint{1.0, a};
}

Sign sign_of(double v) { return v < 0 ? Sign::Minus : Sign::Plus; }

// Generator nearest to p, ignoring the sheet on the CP^1 side.
std::pair<Generator, double> nearest(FloerSide side, const ProjectivePoint& p) {
  std::pair<Generator, double> best{kGenerators[0], 2.0};
  for (const auto& g : kGenerators) {
    const double d = fs_distance(p, generator_point(side, g));
    if (d < best.second) best = {g, d};
  }
  return best;
}

std::array<double, 2> real_rep(const ProjectivePoint& p) { return {p[0].real(), p[1].real()}; }

}  // namespace

std::string Generator::label() const {
  return fmt::format("p{}{}", value(s1) > 0 ? '+' : '-', value(s2) > 0 ? '+' : '-');
}

std::size_t generator_index(Generator g) {
  return (g.s1 == Sign::Plus ? 0 : 2) + (g.s2 == Sign::Plus ? 0 : 1);
}

Generator parse_generator(std::string_view label) {
  std::string s;
  for (char c : label)
    if (c != '_' && c != '{' && c != '}') s += c;
  // Either p followed by two of +-, or two of pm.
  const bool symbols = s.size() == 3 && s[0] == 'p';
  if (symbols) s.erase(0, 1);
  auto sign = [&](char c) -> Sign {
    if (c == (symbols ? '+' : 'p')) return Sign::Plus;
    if (c == (symbols ? '-' : 'm')) return Sign::Minus;
    throw FloerError(fmt::format("unknown generator label '{}'", label));
  };
  if (s.size() != 2) throw FloerError(fmt::format("unknown generator label '{}'", label));
  return {sign(s[0]), sign(s[1])};
}

Z2Matrix Z2Matrix::identity() {
  Z2Matrix m;
  for (std::size_t i = 0; i < 4; ++i) m.a[i][i] = 1;
  return m;
}

Z2Matrix Z2Matrix::operator*(const Z2Matrix& o) const {
  Z2Matrix r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      std::uint8_t s = 0;
      for (std::size_t k = 0; k < 4; ++k) s ^= a[i][k] & o.a[k][j];
      r.a[i][j] = s;
    }
  return r;
}

std::size_t Z2Matrix::rank() const {
  auto m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < 4 && r < 4; ++c) {
    std::size_t p = r;
    while (p < 4 && !m[p][c]) ++p;
    if (p == 4) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < 4; ++i)
      if (i != r && m[i][c])
        for (std::size_t j = 0; j < 4; ++j) m[i][j] ^= m[r][j];
    ++r;
  }
  return r;
}

StripEndpoints strip_endpoints(const FloerStrip& s) {
  const auto start = s.map(Complex(-kLimitX, 0.0));
  const auto end = s.map(Complex(kLimitX, 0.0));
  auto [from, d0] = nearest(s.side, start);
  auto [to, d1] = nearest(s.side, end);
  if (d0 > kEndpointTol || d1 > kEndpointTol)
    throw FloerError(fmt::format("{}: limits are not generators (distances {:.3g}, {:.3g})", s.id, d0, d1));

  if (s.side == FloerSide::CP1) {
    // Sheet of the output: carry a real lift continuously along Im z = 0.
    auto r = real_rep(start);
    if (sign_of(r[0]) != s.s2) r = {-r[0], -r[1]};
    from.s2 = s.s2;
    constexpr int steps = 8000;
    for (int k = 1; k <= steps; ++k) {
      const double x = -kLimitX + 2 * kLimitX * k / steps;
      auto next = real_rep(s.map(Complex(x, 0.0)));
      if (next[0] * r[0] + next[1] * r[1] < 0) next = {-next[0], -next[1]};
      r = next;
    }
    to.s2 = sign_of(r[0]);
  }
  return {from, to, std::max(d0, d1)};
}

std::vector<std::string> FloerComplex::provenance(Generator from, Generator to) const {
  std::vector<std::string> out;
  for (const auto& w : strips)
    if (w.from == from && w.to == to) out.push_back(w.strip);
  return out;
}

FloerComplex build_complex(FloerSide side) {
  FloerComplex c{side, {}, {}};
  for (const auto& s : floer_strips(side)) {
    const auto e = strip_endpoints(s);
    c.strips.push_back({s.id, e.from, e.to, e.residual});
    c.d.a[generator_index(e.to)][generator_index(e.from)] ^= 1;
  }
  return c;
}

Z2Matrix differential_square(const FloerComplex& c) { return c.d * c.d; }

Z2Matrix differential_square_bruteforce(const FloerComplex& c) {
  Z2Matrix r;
  for (const auto& x : kGenerators)
    for (const auto& z : kGenerators) {
      int n = 0;
      for (const auto& y : kGenerators)
        n += c.d(generator_index(z), generator_index(y)) * c.d(generator_index(y), generator_index(x));
      r.a[generator_index(z)][generator_index(x)] = static_cast<std::uint8_t>(n % 2);
    }
  return r;
}

StripCount strip_count(const FloerComplex& c, std::string_view from, std::string_view to) {
  const auto f = parse_generator(from), t = parse_generator(to);
  StripCount out;
  out.via = c.provenance(f, t);
  out.count = static_cast<int>(out.via.size() % 2);
  return out;
}

std::size_t homology_dimension(const FloerComplex& c) {
  if (!(differential_square(c) == Z2Matrix::zero()))
    throw FloerError("homology is undefined: d^2 != 0");
  const auto r = c.d.rank();
  return 4 - 2 * r;
}

std::string side_name(FloerSide side) { return side == FloerSide::CP2 ? "cp2" : "cp1"; }

std::string format_matrix(const Z2Matrix& m) {
  std::string out = "      ";
  for (const auto& g : kGenerators) out += fmt::format(" {:>3}", g.label());
  out += '\n';
  for (std::size_t r = 0; r < 4; ++r) {
    out += fmt::format("  {:>3} ", kGenerators[r].label());
    for (std::size_t c = 0; c < 4; ++c) out += fmt::format(" {:>3}", static_cast<int>(m(r, c)));
    out += '\n';
  }
  return out;
}

std::string format_provenance(const FloerComplex& c) {
  std::string out;
  for (const auto& w : c.strips)
    out += fmt::format("  {:<18} {} -> {}  (limit residual {:.1e})\n", w.strip, w.from.label(), w.to.label(),
                       w.residual);
  return out;
}

}  // namespace quiltlab
