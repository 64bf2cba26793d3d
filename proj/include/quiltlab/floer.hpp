#pragma once

// Mod-2 Floer complexes on the four generators p_{s1 s2}, assembled from the
// endpoints of the catalog's rigid strips.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quiltlab/catalog.hpp"

namespace quiltlab {

class FloerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// p_{s1 s2}. In CP^2 the point [1:s1:s2]; in CP^1 the point [1:s1] on sheet s2 of gamma.
struct Generator {
  Sign s1;
  Sign s2;

  std::string label() const;
  bool operator==(const Generator&) const = default;
};

/// Index order p++, p+-, p-+, p--.
constexpr std::array<Generator, 4> kGenerators{
    {{Sign::Plus, Sign::Plus}, {Sign::Plus, Sign::Minus}, {Sign::Minus, Sign::Plus}, {Sign::Minus, Sign::Minus}}};

std::size_t generator_index(Generator g);
/// Accepts "p++", "p_{+-}", "pp", "mp" and similar. Throws FloerError.
Generator parse_generator(std::string_view label);

/// 4x4 matrix over Z/2; entry (to, from).
struct Z2Matrix {
  std::array<std::array<std::uint8_t, 4>, 4> a{};

  static Z2Matrix zero() { return {}; }
  static Z2Matrix identity();
  std::uint8_t operator()(std::size_t r, std::size_t c) const { return a[r][c]; }
  bool operator==(const Z2Matrix&) const = default;
  Z2Matrix operator*(const Z2Matrix& o) const;
  std::size_t rank() const;
};

struct StripEndpoints {
  Generator from;  // Re z -> -infinity
  Generator to;    // Re z -> +infinity
  double residual = 0.0;  // FS distance of the evaluated limits to the generator points
};

/// Limits evaluated at Re z = -40 and +40. On the CP^1 side the sheets are
/// read off a sign-continuous real lift along the bottom edge, whose first
/// coordinate starts with the sign of the strip's input sheet.
/// Throws FloerError when a limit is not within 1e-10 of a generator.
StripEndpoints strip_endpoints(const FloerStrip& s);

struct StripWitness {
  std::string strip;
  Generator from;
  Generator to;
  double residual;
};

struct FloerComplex {
  FloerSide side;
  Z2Matrix d;
  std::vector<StripWitness> strips;

  /// Strips from `from` to `to`, in catalog order.
  std::vector<std::string> provenance(Generator from, Generator to) const;
};

FloerComplex build_complex(FloerSide side);

Z2Matrix differential_square(const FloerComplex& c);
/// d^2 by explicit double summation over the intermediate generator.
Z2Matrix differential_square_bruteforce(const FloerComplex& c);

struct StripCount {
  int count = 0;  // mod 2
  std::vector<std::string> via;
};
StripCount strip_count(const FloerComplex& c, std::string_view from, std::string_view to);

/// dim ker d / im d over Z/2; throws FloerError unless d^2 = 0.
std::size_t homology_dimension(const FloerComplex& c);

std::string side_name(FloerSide side);
std::string format_matrix(const Z2Matrix& m);
std::string format_provenance(const FloerComplex& c);

}  // namespace quiltlab
