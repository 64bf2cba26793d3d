#pragma once

// Moment-map picture of the two-patch quilt with an L_AC boundary: the
// moment triangle of CP^2, the images of Lambda and L_AC, the region covered
// by u_2 and the lifted image of u_1.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quiltlab/catalog.hpp"

namespace quiltlab {

struct Point2 {
  double x;
  double y;
};

struct FigureOptions {
  std::size_t samples = 200;  // per sampled curve
  std::size_t symmetry_pairs = 100;
  std::uint64_t seed = 1;
};

struct FigureChecks {
  double lambda_endpoint_error = 0.0;  // against (-1/3,-1/6), (0,-1/6)
  double lac_endpoint_error = 0.0;     // against (-1/2,0), (0,-1/4)
  double lambda_offset = 0.0;          // sampled Lambda points off their segment
  double lac_offset = 0.0;
  bool ellipse_exact = false;          // rational check at mu(u_2(i)) = (-1/150,-1/6)
  Point2 mu_u2_origin{};
  double mu_u2_origin_error = 0.0;     // against (0,-1/4)
  double ellipse_residual = 0.0;       // max over sampled mu(u_2(iy))
  double symmetry = 0.0;               // max |mu(u_2(x+iy)) - mu(u_2(-x+iy))|
  double u1_offset = 0.0;              // max |second coordinate + 1/6| over u_1 samples
  double triangle_violation = 0.0;     // max distance outside the triangle
  bool pass = false;
};

struct FigureData {
  std::vector<Point2> triangle;
  std::vector<Point2> lambda_segment;
  std::vector<Point2> lac_segment;
  std::vector<Point2> lambda_samples;
  std::vector<Point2> lac_samples;
  std::vector<Point2> region_boundary;  // closed polyline around mu(image u_2)
  std::vector<std::pair<Point2, double>> ellipse;   // mu(u_2(iy)) and the conic residual
  std::vector<Point2> u1_samples;
  std::vector<std::pair<Point2, double>> symmetry;  // mu(u_2(x+iy)) and the pair gap
  FigureChecks checks;
};

/// Expects a quilt shaped like quilt.acw.*: CP^2 patch on 0 <= Im z <= 1,
/// CP^1 patch above. Throws CatalogError otherwise.
FigureData emit_moment_figure(const Quilt& q, const FigureOptions& opts = {});

/// 100x^2 + 16xy + 16y^2 + 20x + 8y + 1.
double ellipse_residual(Point2 p);

/// One CSV per layer, keyed by file name; header row, RFC 4180 quoting-free numbers.
std::vector<std::pair<std::string, std::string>> figure_csv(const FigureData& f);
std::string figure_svg(const FigureData& f);

}  // namespace quiltlab
