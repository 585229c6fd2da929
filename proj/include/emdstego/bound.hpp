#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace emdstego {

using BigInt = boost::multiprecision::cpp_int;

/// State set for a group of n pixels: every change vector in [-z, z]^n with
/// at most q coordinates at the full +-z.
struct BoundQuery {
  int n = 1;
  int z = 1;
  int q = 0;
  friend auto operator<=>(const BoundQuery&, const BoundQuery&) = default;
};

struct BoundResult {
  BigInt state_count;         // f_M
  BigInt change_sum_linear;   // sum of |delta| over all states
  BigInt change_sum_squared;  // sum of delta^2 over all states
  friend bool operator==(const BoundResult&, const BoundResult&) = default;
};

enum class BoundMetric { Standard, Proposed };
enum class Normalization { Literal, Mean, MeanPerPixel };

std::string_view metric_name(BoundMetric m) noexcept;
std::string_view normalization_name(Normalization n) noexcept;
BoundMetric parse_metric(std::string_view s);
Normalization parse_normalization(std::string_view s);

struct BoundPoint {
  BoundQuery query;
  double alpha = 0.0;
  double inv_alpha = 0.0;
  double eff_standard = 0.0;
  double eff_proposed = 0.0;
  BoundMetric metric = BoundMetric::Proposed;
  Normalization normalization = Normalization::MeanPerPixel;

  /// The efficiency selected by `metric`.
  double efficiency() const { return metric == BoundMetric::Standard ? eff_standard : eff_proposed; }
};

/// Memoized evaluation of the state-count and change-sum recurrences. Not
/// thread-safe; use one instance per thread.
class BoundRecurrences {
 public:
  BigInt count_states(const BoundQuery& qy);
  BigInt sum_changes_linear(const BoundQuery& qy);
  BigInt sum_changes_squared(const BoundQuery& qy);
  BoundResult evaluate(const BoundQuery& qy);

 private:
  BigInt states(int n, int z, int q);
  // Sum over the full cube [-z, z]^n; power 1 or 2 selects |d| or d^2.
  BigInt cube_sum(int n, int z, int power);
  BigInt exact_q_sum(int n, int z, int q, int power);
  BigInt change_sum(const BoundQuery& qy, int power);

  std::map<std::tuple<int, int, int>, BigInt> states_memo_;
  std::map<std::tuple<int, int, int>, BigInt> cube_memo_;
};

void validate(const BoundQuery& qy);

BigInt count_states(const BoundQuery& qy);
BigInt sum_changes_linear(const BoundQuery& qy);
BigInt sum_changes_squared(const BoundQuery& qy);

/// Brute force over [-z, z]^n. Refuses more than 1e8 states.
BoundResult enumerate_oracle(const BoundQuery& qy);

/// log2 of a positive big integer without converting through double.
double log2_big(const BigInt& v);

BoundPoint bound_point(const BoundQuery& qy, BoundMetric metric, Normalization normalization);
BoundPoint bound_point(const BoundQuery& qy, const BoundResult& counts, BoundMetric metric,
                       Normalization normalization);

struct IntRange {
  int lo = 1;
  int hi = 1;
};

/// Every (n, z, q >= 1) point in the ranges, in (n, z, q) order.
std::vector<BoundPoint> bound_points(IntRange n_range, IntRange z_range, BoundMetric metric,
                                     Normalization normalization);

/// Upper envelope: sorted by inv_alpha, efficiency strictly increasing.
std::vector<BoundPoint> upper_envelope(std::vector<BoundPoint> points);

std::vector<BoundPoint> frontier(IntRange n_range, IntRange z_range, BoundMetric metric,
                                 Normalization normalization);

/// Best envelope efficiency available at inverse payload x, i.e. the
/// largest efficiency among envelope points with inv_alpha <= x. Returns
/// -infinity when no point qualifies.
double envelope_efficiency_at(const std::vector<BoundPoint>& envelope, double inv_alpha);

std::string bound_csv_header();
std::string to_csv_row(const BoundPoint& p, const BoundResult& counts);

}  // namespace emdstego
