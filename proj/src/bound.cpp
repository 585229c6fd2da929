#include "emdstego/bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "emdstego/error.hpp"
#include "emdstego/metrics.hpp"

namespace emdstego {

namespace mp = boost::multiprecision;

std::string_view metric_name(BoundMetric m) noexcept {
  return m == BoundMetric::Standard ? "standard" : "proposed";
}

std::string_view normalization_name(Normalization n) noexcept {
  switch (n) {
    case Normalization::Literal: return "literal";
    case Normalization::Mean: return "mean";
    case Normalization::MeanPerPixel: return "mean-per-pixel";
  }
  return "literal";
}

BoundMetric parse_metric(std::string_view s) {
  if (s == "standard") return BoundMetric::Standard;
  if (s == "proposed") return BoundMetric::Proposed;
  throw Error(Errc::InvalidParameter, "unknown metric '" + std::string(s) + "'");
}

Normalization parse_normalization(std::string_view s) {
  if (s == "literal") return Normalization::Literal;
  if (s == "mean") return Normalization::Mean;
  if (s == "mean-per-pixel") return Normalization::MeanPerPixel;
  throw Error(Errc::InvalidParameter, "unknown normalization '" + std::string(s) + "'");
}

void validate(const BoundQuery& qy) {
  if (qy.n < 1 || qy.z < 1 || qy.q < 0 || qy.q > qy.n) {
    throw Error(Errc::InvalidQuery, "need n >= 1, z >= 1, 0 <= q <= n (got n=" + std::to_string(qy.n) +
                                        " z=" + std::to_string(qy.z) + " q=" + std::to_string(qy.q) + ")");
  }
}

namespace {

BigInt big_pow(long base, int exp) {
  return mp::pow(BigInt(base), static_cast<unsigned>(exp));
}

BigInt binomial(int n, int k) {
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace

BigInt BoundRecurrences::states(int n, int z, int q) {
  if (q == n) return big_pow(2L * z + 1, n);
  if (q == 0) return big_pow(2L * z - 1, n);
  const auto key = std::make_tuple(n, z, q);
  if (auto it = states_memo_.find(key); it != states_memo_.end()) return it->second;
  // Peel one pixel: it either takes +-z, or stays within +-(z - 1).
  BigInt v = 2 * states(n - 1, z, q - 1) + (2 * z - 1) * states(n - 1, z, q);
  states_memo_.emplace(key, v);
  return v;
}

BigInt BoundRecurrences::cube_sum(int n, int z, int power) {
  if (z == 0 || n == 0) return 0;
  if (n == 1) {
    BigInt s = 0;
    for (int i = 0; i <= z; ++i) s += big_pow(i, power);
    return 2 * s;
  }
  const auto key = std::make_tuple(n, z, power);
  if (auto it = cube_memo_.find(key); it != cube_memo_.end()) return it->second;
  // Split into two blocks; each block's total is weighted by the other's
  // state count.
  const int a = n / 2;
  const int b = n - a;
  BigInt v = big_pow(2L * z + 1, a) * cube_sum(b, z, power) + big_pow(2L * z + 1, b) * cube_sum(a, z, power);
  cube_memo_.emplace(key, v);
  return v;
}

BigInt BoundRecurrences::exact_q_sum(int n, int z, int q, int power) {
  // Exactly q pixels at +-z, the other n - q within +-(z - 1).
  const BigInt full = q * big_pow(z, power) * big_pow(2L * z - 1, n - q);
  return mp::pow(BigInt(2), static_cast<unsigned>(q)) * binomial(n, q) * (full + cube_sum(n - q, z - 1, power));
}

BigInt BoundRecurrences::change_sum(const BoundQuery& qy, int power) {
  validate(qy);
  if (qy.n == qy.q) return cube_sum(qy.n, qy.z, power);
  BigInt total = cube_sum(qy.n, qy.z - 1, power);
  for (int i = 1; i <= qy.q; ++i) total += exact_q_sum(qy.n, qy.z, i, power);
  return total;
}

BigInt BoundRecurrences::count_states(const BoundQuery& qy) {
  validate(qy);
  return states(qy.n, qy.z, qy.q);
}

BigInt BoundRecurrences::sum_changes_linear(const BoundQuery& qy) { return change_sum(qy, 1); }
BigInt BoundRecurrences::sum_changes_squared(const BoundQuery& qy) { return change_sum(qy, 2); }

BoundResult BoundRecurrences::evaluate(const BoundQuery& qy) {
  return {count_states(qy), sum_changes_linear(qy), sum_changes_squared(qy)};
}

BigInt count_states(const BoundQuery& qy) { return BoundRecurrences{}.count_states(qy); }
BigInt sum_changes_linear(const BoundQuery& qy) { return BoundRecurrences{}.sum_changes_linear(qy); }
BigInt sum_changes_squared(const BoundQuery& qy) { return BoundRecurrences{}.sum_changes_squared(qy); }

BoundResult enumerate_oracle(const BoundQuery& qy) {
  validate(qy);
  const double states = std::pow(2.0 * qy.z + 1.0, qy.n);
  if (states > 1e8) throw Error(Errc::QueryTooLarge, "oracle refuses more than 1e8 states");

  std::uint64_t count = 0, lin = 0, sq = 0;
  std::vector<int> d(static_cast<std::size_t>(qy.n), -qy.z);
  while (true) {
    int at_full = 0;
    std::uint64_t a = 0, s = 0;
    for (int v : d) {
      const auto m = static_cast<std::uint64_t>(std::abs(v));
      if (std::abs(v) == qy.z) ++at_full;
      a += m;
      s += m * m;
    }
    if (at_full <= qy.q) {
      ++count;
      lin += a;
      sq += s;
    }
    int pos = qy.n - 1;
    while (pos >= 0 && d[static_cast<std::size_t>(pos)] == qy.z) {
      d[static_cast<std::size_t>(pos)] = -qy.z;
      --pos;
    }
    if (pos < 0) break;
    ++d[static_cast<std::size_t>(pos)];
  }
  return {BigInt(count), BigInt(lin), BigInt(sq)};
}

double log2_big(const BigInt& v) {
  if (v <= 0) throw Error(Errc::InvalidParameter, "log2 of a non-positive integer");
  const auto top = mp::msb(v);
  if (top < 53) return std::log2(v.convert_to<double>());
  const unsigned shift = static_cast<unsigned>(top) - 52;
  const BigInt head = v >> shift;
  return std::log2(head.convert_to<double>()) + shift;
}

namespace {

double big_ratio(const BigInt& num, const BigInt& den) {
  if (mp::msb(num) < 1000 && mp::msb(den) < 1000) return num.convert_to<double>() / den.convert_to<double>();
  return std::exp2(log2_big(num) - log2_big(den));
}

}  // namespace

BoundPoint bound_point(const BoundQuery& qy, const BoundResult& c, BoundMetric metric, Normalization norm) {
  if (c.state_count < 2 || c.change_sum_linear == 0) {
    throw Error(Errc::DegenerateQuery, "only the zero state is admissible; efficiency is unbounded");
  }
  BoundPoint p;
  p.query = qy;
  p.metric = metric;
  p.normalization = norm;
  const double bits = log2_big(c.state_count);
  p.alpha = bits / qy.n;
  p.inv_alpha = 1.0 / p.alpha;
  const double pixels = static_cast<double>(qy.n);
  switch (norm) {
    case Normalization::Literal:
      p.eff_standard = bits / c.change_sum_linear.convert_to<double>();
      p.eff_proposed = bits / std::sqrt(c.change_sum_squared.convert_to<double>());
      break;
    case Normalization::Mean:
      p.eff_standard = bits / big_ratio(c.change_sum_linear, c.state_count);
      p.eff_proposed = bits / std::sqrt(big_ratio(c.change_sum_squared, c.state_count));
      break;
    case Normalization::MeanPerPixel:
      p.eff_standard = p.alpha / (big_ratio(c.change_sum_linear, c.state_count) / pixels);
      p.eff_proposed = p.alpha / std::sqrt(big_ratio(c.change_sum_squared, c.state_count) / pixels);
      break;
  }
  return p;
}

BoundPoint bound_point(const BoundQuery& qy, BoundMetric metric, Normalization norm) {
  return bound_point(qy, BoundRecurrences{}.evaluate(qy), metric, norm);
}

namespace {

void check_range(IntRange r, const char* what) {
  if (r.lo < 1 || r.hi < r.lo) {
    throw Error(Errc::EmptyRange, std::string(what) + " range must satisfy 1 <= lo <= hi");
  }
}

}  // namespace

std::vector<BoundPoint> bound_points(IntRange n_range, IntRange z_range, BoundMetric metric, Normalization norm) {
  check_range(n_range, "n");
  check_range(z_range, "z");
  BoundRecurrences rec;
  std::vector<BoundPoint> out;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    for (int z = z_range.lo; z <= z_range.hi; ++z) {
      for (int q = 1; q <= n; ++q) {
        const BoundQuery qy{n, z, q};
        out.push_back(bound_point(qy, rec.evaluate(qy), metric, norm));
      }
    }
  }
  return out;
}

std::vector<BoundPoint> upper_envelope(std::vector<BoundPoint> points) {
  std::stable_sort(points.begin(), points.end(), [](const BoundPoint& a, const BoundPoint& b) {
    if (a.inv_alpha != b.inv_alpha) return a.inv_alpha < b.inv_alpha;
    if (a.efficiency() != b.efficiency()) return a.efficiency() > b.efficiency();
    return a.query < b.query;
  });
  std::vector<BoundPoint> out;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    if (p.efficiency() > best) {
      out.push_back(p);
      best = p.efficiency();
    }
  }
  return out;
}

std::vector<BoundPoint> frontier(IntRange n_range, IntRange z_range, BoundMetric metric, Normalization norm) {
  return upper_envelope(bound_points(n_range, z_range, metric, norm));
}

double envelope_efficiency_at(const std::vector<BoundPoint>& envelope, double inv_alpha) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : envelope) {
    if (p.inv_alpha <= inv_alpha) best = std::max(best, p.efficiency());
  }
  return best;
}

std::string bound_csv_header() {
  return "n,z,q,f_M,f_rho_lin,f_rho_sq,alpha,inv_alpha,eff,metric,normalization";
}

std::string to_csv_row(const BoundPoint& p, const BoundResult& c) {
  std::ostringstream os;
  os << p.query.n << ',' << p.query.z << ',' << p.query.q << ',' << c.state_count << ',' << c.change_sum_linear
     << ',' << c.change_sum_squared << ',' << format_number(p.alpha) << ',' << format_number(p.inv_alpha) << ','
     << format_number(p.efficiency()) << ',' << metric_name(p.metric) << ',' << normalization_name(p.normalization);
  return os.str();
}

}  // namespace emdstego
