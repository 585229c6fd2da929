#pragma once

#include <span>
#include <string>
#include <utility>

namespace emdstego {

/// y = c3 x^3 + c2 x^2 + c1 x + c0
struct CubicPoly {
  double c3 = 0.0;
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;
};

/// The published bound curve in (inverse payload, proposed efficiency).
inline constexpr CubicPoly kReferenceBoundCurve{2.994, -10.5, 10.82, -1.098};

struct CubicFit {
  CubicPoly poly;
  double residual = 0.0;  // sum of squared residuals
};

struct Sample {
  double x = 0.0;
  double y = 0.0;
};

enum class DistanceMode { Euclidean, Vertical };

double cubic_eval(const CubicPoly& p, double x);

/// Ordinary least squares; needs at least four distinct abscissae.
CubicFit cubic_fit(std::span<const Sample> points);

double distance_to_curve(const CubicPoly& p, Sample point, DistanceMode mode, double lo = 0.0, double hi = 3.0);

DistanceMode parse_distance_mode(std::string_view s);
std::string to_json(const CubicFit& fit);
CubicPoly poly_from_json(const std::string& text);

}  // namespace emdstego
