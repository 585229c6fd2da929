#pragma once

// Straightforward reference implementations used to check the library.
// They share no code with src/ beyond the public data types.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include <doctest.h>

#include "emdstego/error.hpp"
#include "emdstego/scheme.hpp"

namespace oracle {

using emdstego::PixelGroup;

inline std::uint64_t modular_value(const std::vector<std::int64_t>& base, std::uint64_t modulus, std::int64_t key,
                                   const PixelGroup& g, std::size_t offset = 0) {
  std::int64_t acc = key;
  for (std::size_t i = 0; i < base.size(); ++i) acc += base[i] * g[offset + i];
  const auto m = static_cast<std::int64_t>(modulus);
  return static_cast<std::uint64_t>(((acc % m) + m) % m);
}

// Visits every vector in [-z, z]^n in lexicographic order.
inline void for_each_cube_point(int n, int z, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> d(static_cast<std::size_t>(n), -z);
  while (true) {
    fn(d);
    int pos = n - 1;
    while (pos >= 0 && d[static_cast<std::size_t>(pos)] == z) d[static_cast<std::size_t>(pos--)] = -z;
    if (pos < 0) return;
    ++d[static_cast<std::size_t>(pos)];
  }
}

inline bool admissible(const emdstego::ChangeConstraint& c, const std::vector<int>& d) {
  int changed = 0, l1 = 0;
  for (int v : d) {
    if (std::abs(v) > c.per_pixel_max) return false;
    changed += v != 0;
    l1 += std::abs(v);
  }
  if (changed > c.max_changed_pixels) return false;
  return !c.l1_radius || l1 <= *c.l1_radius;
}

// Minimal-cost change for one modular part, ties to the lexicographically
// smallest change vector.
inline std::vector<int> best_change(const emdstego::ModularPart& part, std::int64_t key, const PixelGroup& x,
                                    std::uint64_t target, emdstego::Objective objective) {
  std::vector<int> best;
  std::tuple<long, long> best_cost{std::numeric_limits<long>::max(), 0};
  for_each_cube_point(part.length, part.constraint.per_pixel_max, [&](const std::vector<int>& d) {
    if (!admissible(part.constraint, d)) return;
    PixelGroup g(x.begin() + part.offset, x.begin() + part.offset + part.length);
    for (std::size_t i = 0; i < d.size(); ++i) g[i] += d[i];
    if (modular_value(part.base, part.modulus, key, g) != target) return;
    long sq = 0, l1 = 0;
    for (int v : d) {
      sq += v * v;
      l1 += std::abs(v);
    }
    const auto cost = objective == emdstego::Objective::L2ThenL1 ? std::make_tuple(sq, l1) : std::make_tuple(l1, sq);
    if (cost < best_cost) {
      best_cost = cost;
      best = d;
    }
  });
  if (best.empty()) throw std::runtime_error("oracle: no admissible change");
  return best;
}

// Exhaustive embed over each part of the scheme independently.
inline PixelGroup brute_embed(const emdstego::SchemeSpec& spec, const PixelGroup& x, std::uint64_t s) {
  PixelGroup g = x;
  for (const auto& part : spec.parts) {
    const std::uint64_t digit = (s / part.weight) % part.modulus;
    const auto d = best_change(part, spec.key.value_or(0), x, digit, spec.objective);
    for (std::size_t i = 0; i < d.size(); ++i) g[static_cast<std::size_t>(part.offset) + i] += d[i];
  }
  return g;
}

struct Counts {
  std::uint64_t states = 0, lin = 0, sq = 0;
};

// State set of a bound query, recounted from scratch.
inline Counts bound_counts(int n, int z, int q) {
  Counts c;
  for_each_cube_point(n, z, [&](const std::vector<int>& d) {
    int full = 0;
    std::uint64_t a = 0, s = 0;
    for (int v : d) {
      full += std::abs(v) == z;
      a += static_cast<std::uint64_t>(std::abs(v));
      s += static_cast<std::uint64_t>(v * v);
    }
    if (full > q) return;
    ++c.states;
    c.lin += a;
    c.sq += s;
  });
  return c;
}

// Minimum euclidean distance by uniform sampling of the domain.
template <class F>
double grid_distance(F&& curve, double x0, double y0, double lo, double hi, int samples) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= samples; ++i) {
    const double x = lo + (hi - lo) * i / samples;
    best = std::min(best, std::hypot(x - x0, curve(x) - y0));
  }
  return best;
}

inline std::uint64_t splitmix_first(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace oracle

#define CHECK_ERRC(expr, errc)                                   \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const emdstego::Error& e_) {                        \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e_.code() == (errc), e_.what());             \
    }                                                            \
    CHECK_MESSAGE(thrown_, "expected an error from " #expr);     \
  } while (0)
