#include "emdstego/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Dense>
#include <json.hpp>

#include "emdstego/error.hpp"

namespace emdstego {

double cubic_eval(const CubicPoly& p, double x) { return ((p.c3 * x + p.c2) * x + p.c1) * x + p.c0; }

CubicFit cubic_fit(std::span<const Sample> points) {
  std::set<double> distinct;
  for (const auto& s : points) distinct.insert(s.x);
  if (points.size() < 4 || distinct.size() < 4) {
    throw Error(Errc::RankDeficient, "cubic fit needs at least 4 distinct x values");
  }
  const auto rows = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd design(rows, 4);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double x = points[static_cast<std::size_t>(i)].x;
    design(i, 0) = x * x * x;
    design(i, 1) = x * x;
    design(i, 2) = x;
    design(i, 3) = 1.0;
    rhs(i) = points[static_cast<std::size_t>(i)].y;
  }
  // Householder QR on the design matrix.
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < 4) throw Error(Errc::RankDeficient, "design matrix is rank deficient");
  const Eigen::Vector4d c = qr.solve(rhs);

  CubicFit fit{{c(0), c(1), c(2), c(3)}, 0.0};
  for (const auto& s : points) {
    const double r = cubic_eval(fit.poly, s.x) - s.y;
    fit.residual += r * r;
  }
  return fit;
}

double distance_to_curve(const CubicPoly& p, Sample point, DistanceMode mode, double lo, double hi) {
  if (mode == DistanceMode::Vertical) return std::abs(cubic_eval(p, point.x) - point.y);
  if (!(lo < hi)) throw Error(Errc::InvalidDomain, "distance domain needs lo < hi");

  auto dist2 = [&](double x) {
    const double dx = x - point.x;
    const double dy = cubic_eval(p, x) - point.y;
    return dx * dx + dy * dy;
  };

  constexpr int kSamples = 10000;
  const double step = (hi - lo) / kSamples;
  int best_i = 0;
  double best = dist2(lo);
  for (int i = 1; i <= kSamples; ++i) {
    const double v = dist2(lo + step * i);
    if (v < best) {
      best = v;
      best_i = i;
    }
  }

  // Golden-section refinement on the bracket around the best sample.
  double a = std::max(lo, lo + step * (best_i - 1));
  double b = std::min(hi, lo + step * (best_i + 1));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = dist2(c), fd = dist2(d);
  while (b - a > 1e-9) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = dist2(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = dist2(d);
    }
  }
  best = std::min({best, dist2(0.5 * (a + b)), dist2(a), dist2(b)});
  return std::sqrt(best);
}

DistanceMode parse_distance_mode(std::string_view s) {
  if (s == "euclidean") return DistanceMode::Euclidean;
  if (s == "vertical") return DistanceMode::Vertical;
  throw Error(Errc::InvalidParameter, "unknown distance mode '" + std::string(s) + "'");
}

std::string to_json(const CubicFit& fit) {
  nlohmann::ordered_json j;
  j["c3"] = fit.poly.c3;
  j["c2"] = fit.poly.c2;
  j["c1"] = fit.poly.c1;
  j["c0"] = fit.poly.c0;
  j["residual"] = fit.residual;
  return j.dump();
}

CubicPoly poly_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return {j.at("c3").get<double>(), j.at("c2").get<double>(), j.at("c1").get<double>(), j.at("c0").get<double>()};
}

}  // namespace emdstego
