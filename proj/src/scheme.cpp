#include "emdstego/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

#include "emdstego/error.hpp"

namespace emdstego {

namespace {

constexpr double kMaxEnumeratedStates = 5e7;

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error(Errc::InvalidParameter, "modulus overflows 64 bits");
    }
    out *= base;
  }
  return out;
}

std::uint64_t mod_floor(std::int64_t v, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  std::int64_t r = v % mm;
  if (r < 0) r += mm;
  return static_cast<std::uint64_t>(r);
}

struct Cost {
  long primary;
  long secondary;
  bool operator<(const Cost& o) const {
    return primary != o.primary ? primary < o.primary : secondary < o.secondary;
  }
};

Cost cost_of(const ChangeVector& d, Objective obj) {
  long sq = 0, abs_sum = 0;
  for (int v : d) {
    sq += static_cast<long>(v) * v;
    abs_sum += std::abs(v);
  }
  return obj == Objective::L2ThenL1 ? Cost{sq, abs_sum} : Cost{abs_sum, sq};
}

// Exhaustive enumeration of [-z, z]^len in lexicographic order; equal-cost
// ties keep the lexicographically smallest vector.
ResidueTable build_residue_table(const ModularPart& part, Objective obj) {
  const int z = part.constraint.per_pixel_max;
  const double states = std::pow(2.0 * z + 1.0, part.length);
  if (states > kMaxEnumeratedStates) {
    throw Error(Errc::InvalidParameter,
                "change enumeration too large (" + std::to_string(static_cast<long long>(states)) + " states)");
  }
  if (part.modulus > 1u << 26) throw Error(Errc::InvalidParameter, "modulus too large for residue table");

  ResidueTable table(part.modulus);
  std::vector<Cost> best(part.modulus, Cost{std::numeric_limits<long>::max(), 0});
  std::vector<bool> seen(part.modulus, false);

  ChangeVector delta(static_cast<std::size_t>(part.length), -z);
  while (true) {
    if (satisfies_constraint(part.constraint, delta)) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < delta.size(); ++i) acc += part.base[i] * delta[i];
      const std::uint64_t r = mod_floor(acc, part.modulus);
      const Cost c = cost_of(delta, obj);
      if (!seen[r] || c < best[r]) {
        seen[r] = true;
        best[r] = c;
        table[r] = delta;
      }
    }
    int pos = part.length - 1;
    while (pos >= 0 && delta[static_cast<std::size_t>(pos)] == z) {
      delta[static_cast<std::size_t>(pos)] = -z;
      --pos;
    }
    if (pos < 0) break;
    ++delta[static_cast<std::size_t>(pos)];
  }

  for (std::uint64_t r = 0; r < part.modulus; ++r) {
    if (!seen[r]) {
      throw Error(Errc::InfeasibleScheme,
                  "residue " + std::to_string(r) + " mod " + std::to_string(part.modulus) +
                      " is unreachable within the change constraint");
    }
  }
  return table;
}

std::uint64_t part_value(const ModularPart& part, const PixelGroup& g, std::int64_t key) {
  std::int64_t acc = key;
  for (int i = 0; i < part.length; ++i) acc += part.base[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(part.offset + i)];
  return mod_floor(acc, part.modulus);
}

int get_param(const ParamMap& p, const std::string& key, int fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(Errc::InvalidParameter, msg);
}

void check_keys(const std::string& name, const ParamMap& p, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : p) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
      throw Error(Errc::InvalidParameter, "scheme " + name + " does not take parameter '" + k + "'");
    }
  }
}

ModularPart single_part(int n, std::vector<std::int64_t> base, std::uint64_t modulus, ChangeConstraint c) {
  return ModularPart{0, n, std::move(base), modulus, 1, c};
}

std::vector<std::int64_t> linear_base(int n) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = i + 1;
  return b;
}

std::vector<std::int64_t> gemd_base(int n) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) b[static_cast<std::size_t>(i - 1)] = (std::int64_t{1} << i) - 1;
  return b;
}

std::vector<std::int64_t> power_base(std::int64_t radix, int n) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(n));
  std::int64_t v = 1;
  for (int i = 0; i < n; ++i) {
    b[static_cast<std::size_t>(i)] = v;
    v *= radix;
  }
  return b;
}

void finalize(SchemeSpec& spec) {
  spec.base.clear();
  spec.modulus = 1;
  for (const auto& p : spec.parts) {
    spec.base.insert(spec.base.end(), p.base.begin(), p.base.end());
    spec.modulus *= p.modulus;
  }
  if (spec.modulus < 2) throw Error(Errc::InvalidParameter, "modulus must be >= 2");
  auto tables = std::make_shared<std::vector<ResidueTable>>();
  for (const auto& p : spec.parts) tables->push_back(build_residue_table(p, spec.objective));
  spec.tables = std::move(tables);
}

}  // namespace

double SchemeSpec::payload_bits_exact() const { return std::log2(static_cast<double>(modulus)); }

int SchemeSpec::payload_bits_operational() const { return bits_per_symbol(modulus); }

std::string SchemeSpec::param_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) os << ';';
    os << k << '=' << v;
    first = false;
  }
  return os.str();
}

const std::vector<std::string>& scheme_names() {
  static const std::vector<std::string> names = {"emd",  "iemd", "pva", "femd", "de",  "mpemd", "emd2",
                                                 "twoemd", "gemd", "egemd", "mbe", "msd", "hemd", "aemd"};
  return names;
}

SchemeSpec make_scheme(const std::string& name, const ParamMap& params) {
  SchemeSpec spec;
  spec.id = name;

  if (name == "emd") {
    check_keys(name, params, {"n"});
    const int n = get_param(params, "n", 2);
    require(n >= 1 && n <= 16, "emd: n must be in [1, 16]");
    spec.params = {{"n", n}};
    spec.n = n;
    spec.constraint = {1, 1, std::nullopt};
    spec.strategy = Strategy::ExplicitEmd;
    spec.parts = {single_part(n, linear_base(n), 2u * n + 1u, spec.constraint)};
  } else if (name == "iemd") {
    check_keys(name, params, {});
    spec.n = 2;
    spec.constraint = {1, 2, std::nullopt};
    spec.strategy = Strategy::ExplicitIemd;
    spec.parts = {single_part(2, {1, 3}, 8, spec.constraint)};
  } else if (name == "pva") {
    check_keys(name, params, {"t"});
    const int t = get_param(params, "t", 2);
    require(t >= 2 && t <= 4, "pva: t must be in [2, 4]");
    spec.params = {{"t", t}};
    spec.n = 1;
    spec.constraint = {t * t / 2, 1, std::nullopt};
    spec.strategy = Strategy::ExplicitPva;
    spec.parts = {single_part(1, {1}, static_cast<std::uint64_t>(t * t), spec.constraint)};
  } else if (name == "femd") {
    check_keys(name, params, {"t"});
    const int t = get_param(params, "t", 2);
    require(t >= 2 && t <= 32, "femd: t must be in [2, 32]");
    spec.params = {{"t", t}};
    spec.n = 2;
    spec.constraint = {t / 2, 2, std::nullopt};
    spec.parts = {single_part(2, {t - 1, t}, static_cast<std::uint64_t>(t * t), spec.constraint)};
  } else if (name == "de") {
    check_keys(name, params, {"k"});
    const int k = get_param(params, "k", 1);
    require(k >= 1 && k <= 32, "de: k must be in [1, 32]");
    spec.params = {{"k", k}};
    spec.n = 2;
    spec.constraint = {k, 2, k};
    spec.objective = Objective::L1ThenL2;
    spec.parts = {single_part(2, {2 * k + 1, 1}, static_cast<std::uint64_t>(2 * k * k + 2 * k + 1), spec.constraint)};
  } else if (name == "mpemd") {
    check_keys(name, params, {"n", "key"});
    const int n = get_param(params, "n", 2);
    require(n >= 2 && n <= 16, "mpemd: n must be in [2, 16]");
    const int key = get_param(params, "key", 0);
    require(key >= 0 && key <= 2 * n - 1, "mpemd: key must be in [0, 2n-1]");
    spec.params = {{"key", key}, {"n", n}};
    spec.n = n;
    spec.key = key;
    spec.constraint = {1, 1, std::nullopt};
    spec.parts = {single_part(n, linear_base(n), 2u * n, spec.constraint)};
  } else if (name == "emd2") {
    check_keys(name, params, {"n"});
    const int n = get_param(params, "n", 2);
    require(n >= 2 && n <= 12, "emd2: n must be in [2, 12]");
    spec.params = {{"n", n}};
    spec.n = n;
    std::vector<std::int64_t> base;
    int w = 0;
    if (n == 2) {
      base = {1, 3};
      w = 4;
    } else {
      base = {1, 2};
      for (int i = 3; i <= n; ++i) base.push_back(6 + 5 * (i - 3));
      w = 8 + 5 * (n - 3);
    }
    spec.constraint = {1, 2, std::nullopt};
    spec.parts = {single_part(n, std::move(base), static_cast<std::uint64_t>(2 * w + 1), spec.constraint)};
  } else if (name == "twoemd") {
    check_keys(name, params, {"n"});
    const int n = get_param(params, "n", 2);
    require(n >= 1 && n <= 8, "twoemd: n must be in [1, 8]");
    spec.params = {{"n", n}};
    spec.n = 2 * n;
    spec.constraint = {1, 2, std::nullopt};
    spec.strategy = Strategy::Explicit2Emd;
    const ChangeConstraint half{1, 1, std::nullopt};
    const std::uint64_t m = 2u * n + 1u;
    spec.parts = {ModularPart{0, n, linear_base(n), m, m, half}, ModularPart{n, n, linear_base(n), m, 1, half}};
  } else if (name == "gemd") {
    check_keys(name, params, {"n"});
    const int n = get_param(params, "n", 2);
    require(n >= 1 && n <= 12, "gemd: n must be in [1, 12]");
    spec.params = {{"n", n}};
    spec.n = n;
    spec.constraint = {1, n, std::nullopt};
    spec.parts = {single_part(n, gemd_base(n), std::uint64_t{1} << (n + 1), spec.constraint)};
  } else if (name == "egemd") {
    check_keys(name, params, {"n", "n1"});
    const int n = get_param(params, "n", 4);
    require(n >= 2 && n <= 12, "egemd: n must be in [2, 12]");
    const int n1 = get_param(params, "n1", n / 2);
    if (n1 < 1 || n1 >= n) throw Error(Errc::InvalidSplit, "egemd: n1 must satisfy 1 <= n1 < n");
    const int n2 = n - n1;
    spec.params = {{"n", n}, {"n1", n1}};
    spec.n = n;
    spec.constraint = {1, n, std::nullopt};
    spec.strategy = Strategy::ExplicitEgemd;
    spec.parts = {ModularPart{0, n1, gemd_base(n1), std::uint64_t{1} << (n1 + 1), 1, {1, n1, std::nullopt}},
                  ModularPart{n1, n2, gemd_base(n2), std::uint64_t{1} << (n2 + 1), std::uint64_t{1} << (n1 + 1),
                              {1, n2, std::nullopt}}};
  } else if (name == "mbe") {
    check_keys(name, params, {"n", "k"});
    const int n = get_param(params, "n", 2);
    const int k = get_param(params, "k", 1);
    require(n >= 1 && n <= 8, "mbe: n must be in [1, 8]");
    require(k >= 1 && k <= 3, "mbe: k must be in [1, 3]");
    spec.params = {{"k", k}, {"n", n}};
    spec.n = n;
    std::vector<std::int64_t> base{1};
    for (int i = 1; i < n; ++i) base.push_back((std::int64_t{1} << k) * base.back() + 1);
    spec.constraint = {(1 << k) - 1, n, std::nullopt};
    spec.parts = {single_part(n, std::move(base), std::uint64_t{1} << (n * k + 1), spec.constraint)};
  } else if (name == "msd") {
    check_keys(name, params, {"n"});
    const int n = get_param(params, "n", 3);
    require(n >= 1 && n <= 12, "msd: n must be in [1, 12]");
    spec.params = {{"n", n}};
    spec.n = n;
    std::uint64_t tn = 0;
    if (n % 2 == 1) {
      tn = 2 * ((ipow(4, (n + 1) / 2) - 1) / 3) + 1;
    } else {
      tn = 4 * ((ipow(4, n / 2) - 1) / 3) + 1;
    }
    spec.constraint = {1, n, std::nullopt};
    spec.parts = {single_part(n, power_base(2, n), tn, spec.constraint)};
  } else if (name == "hemd") {
    check_keys(name, params, {"n", "w", "wbase"});
    const int n = get_param(params, "n", 3);
    const int w = get_param(params, "w", 3);
    const int wbase = get_param(params, "wbase", 0);
    require(n >= 1 && n <= 8, "hemd: n must be in [1, 8]");
    require(w >= 3 && w % 2 == 1, "hemd: w should be an odd integer >= 3");
    require(wbase == 0 || wbase == 1, "hemd: wbase is a 0/1 flag");
    spec.params = {{"n", n}, {"w", w}};
    if (wbase) spec.params["wbase"] = 1;
    spec.n = n;
    spec.constraint = {(w - 1) / 2, n, std::nullopt};
    spec.parts = {single_part(n, power_base(wbase ? w : n, n), ipow(static_cast<std::uint64_t>(w), n), spec.constraint)};
  } else if (name == "aemd") {
    check_keys(name, params, {"n", "m"});
    const int n = get_param(params, "n", 2);
    const int m = get_param(params, "m", 4);
    require(n >= 1 && n <= 8, "aemd: n must be in [1, 8]");
    require(m >= 2 && m <= 16, "aemd: m must be in [2, 16]");
    spec.params = {{"m", m}, {"n", n}};
    spec.n = n;
    spec.constraint = {m / 2, n, std::nullopt};  // ceil((m - 1) / 2)
    spec.parts = {single_part(n, power_base(m, n), ipow(static_cast<std::uint64_t>(m), n), spec.constraint)};
  } else {
    throw Error(Errc::UnknownScheme, "unknown scheme '" + name + "'");
  }

  finalize(spec);
  return spec;
}

bool satisfies_constraint(const ChangeConstraint& c, const ChangeVector& delta) {
  int changed = 0;
  long l1 = 0;
  for (int v : delta) {
    if (std::abs(v) > c.per_pixel_max) return false;
    if (v != 0) ++changed;
    l1 += std::abs(v);
  }
  if (changed > c.max_changed_pixels) return false;
  if (c.l1_radius && l1 > *c.l1_radius) return false;
  return true;
}

std::uint64_t extraction_value(const SchemeSpec& spec, const PixelGroup& g) {
  if (static_cast<int>(g.size()) != spec.n) {
    throw Error(Errc::GroupSizeMismatch,
                "group of " + std::to_string(g.size()) + " pixels, scheme expects " + std::to_string(spec.n));
  }
  const std::int64_t key = spec.key.value_or(0);
  std::uint64_t out = 0;
  for (const auto& part : spec.parts) out += part_value(part, g, key) * part.weight;
  return out;
}

namespace {

void check_symbol(std::uint64_t s, std::uint64_t modulus) {
  if (s >= modulus) {
    throw Error(Errc::SymbolOutOfRange, "symbol " + std::to_string(s) + " >= modulus " + std::to_string(modulus));
  }
}

void check_size(const PixelGroup& x, int n) {
  if (static_cast<int>(x.size()) != n) {
    throw Error(Errc::GroupSizeMismatch,
                "group of " + std::to_string(x.size()) + " pixels, expected " + std::to_string(n));
  }
}

}  // namespace

PixelGroup solver_embed_group(const SchemeSpec& spec, const PixelGroup& x, std::uint64_t s) {
  check_size(x, spec.n);
  check_symbol(s, spec.modulus);
  if (!spec.tables || spec.tables->size() != spec.parts.size()) {
    throw Error(Errc::SolverInfeasible, "scheme has no residue tables");
  }
  const std::int64_t key = spec.key.value_or(0);
  PixelGroup g = x;
  for (std::size_t p = 0; p < spec.parts.size(); ++p) {
    const auto& part = spec.parts[p];
    const std::uint64_t digit = (s / part.weight) % part.modulus;
    const std::uint64_t current = part_value(part, x, key);
    const std::uint64_t r = (digit + part.modulus - current) % part.modulus;
    const ChangeVector& delta = (*spec.tables)[p][r];
    for (int i = 0; i < part.length; ++i) g[static_cast<std::size_t>(part.offset + i)] += delta[static_cast<std::size_t>(i)];
  }
  return g;
}

PixelGroup emd_embed_group(const PixelGroup& x, std::uint64_t s, int n) {
  check_size(x, n);
  const std::uint64_t m = 2u * static_cast<std::uint64_t>(n) + 1u;
  check_symbol(s, m);
  std::int64_t acc = 0;
  for (int i = 0; i < n; ++i) acc += static_cast<std::int64_t>(i + 1) * x[static_cast<std::size_t>(i)];
  const std::uint64_t f = mod_floor(acc, m);
  PixelGroup g = x;
  if (s == f) return g;
  const std::uint64_t d = (s + m - f) % m;
  if (d <= static_cast<std::uint64_t>(n)) {
    g[d - 1] += 1;
  } else {
    g[m - d - 1] -= 1;
  }
  return g;
}

PixelGroup iemd_embed_group(const PixelGroup& x, std::uint64_t s) {
  check_size(x, 2);
  check_symbol(s, 8);
  auto f = [](int a, int b) { return mod_floor(static_cast<std::int64_t>(a) + 3 * b, 8); };
  if (f(x[0], x[1]) == s) return x;
  static constexpr int kCases[7][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}};
  for (const auto& c : kCases) {
    if (f(x[0] + c[0], x[1] + c[1]) == s) return {x[0] + c[0], x[1] + c[1]};
  }
  throw Error(Errc::NoCaseMatches, "no IEMD case reaches symbol " + std::to_string(s));
}

int pva_embed_pixel(int x, std::uint64_t s, int t) {
  if (t < 2 || t > 4) throw Error(Errc::InvalidParameter, "pva: t must be in [2, 4]");
  const std::uint64_t m = static_cast<std::uint64_t>(t * t);
  check_symbol(s, m);
  const auto r0 = static_cast<int>(mod_floor(static_cast<std::int64_t>(x) - static_cast<std::int64_t>(s), m));
  const int r_neg = r0 - static_cast<int>(m);
  const int r = (r0 <= -r_neg) ? r0 : r_neg;  // tie goes to the positive representative
  return x - r;
}

PixelGroup egemd_embed(const PixelGroup& x, std::uint64_t s, int n1) {
  const int n = static_cast<int>(x.size());
  if (n < 2 || n1 < 1 || n1 >= n) throw Error(Errc::InvalidSplit, "egemd: need 1 <= n1 < n");
  return solver_embed_group(make_scheme("egemd", {{"n", n}, {"n1", n1}}), x, s);
}

PixelGroup twoemd_embed(const PixelGroup& x, std::uint64_t s) {
  if (x.empty() || x.size() % 2 != 0) throw Error(Errc::GroupSizeMismatch, "2-EMD needs an even group");
  const int n = static_cast<int>(x.size() / 2);
  const std::uint64_t m = 2u * static_cast<std::uint64_t>(n) + 1u;
  check_symbol(s, m * m);
  const PixelGroup hi(x.begin(), x.begin() + n);
  const PixelGroup lo(x.begin() + n, x.end());
  PixelGroup g = emd_embed_group(hi, s / m, n);
  const PixelGroup g_lo = emd_embed_group(lo, s % m, n);
  g.insert(g.end(), g_lo.begin(), g_lo.end());
  return g;
}

PixelGroup embed_group(const SchemeSpec& spec, const PixelGroup& x, std::uint64_t s) {
  check_size(x, spec.n);
  switch (spec.strategy) {
    case Strategy::ExplicitEmd:
      return emd_embed_group(x, s, spec.n);
    case Strategy::ExplicitIemd:
      return iemd_embed_group(x, s);
    case Strategy::ExplicitPva:
      return {pva_embed_pixel(x[0], s, spec.params.at("t"))};
    case Strategy::Explicit2Emd:
      return twoemd_embed(x, s);
    case Strategy::ExplicitEgemd:
    case Strategy::Solver:
      return solver_embed_group(spec, x, s);
  }
  return solver_embed_group(spec, x, s);
}

namespace {

std::size_t operational_capacity_bits(const GrayImage& img, const SchemeSpec& spec) {
  return (img.pixels.size() / static_cast<std::size_t>(spec.n)) *
         static_cast<std::size_t>(spec.payload_bits_operational());
}

}  // namespace

EmbedResult embed_message(const GrayImage& img, const SchemeSpec& spec, const BitStream& msg) {
  const std::size_t cap = operational_capacity_bits(img, spec);
  if (msg.bit_length() > cap) {
    throw Error(Errc::CapacityExceeded,
                std::to_string(msg.bit_length()) + " bits exceed capacity " + std::to_string(cap));
  }
  EmbedResult out{clamp_for_scheme(img, spec.constraint.per_pixel_max), 0};
  const SymbolStream sym = bits_to_symbols(msg, spec.modulus);
  const auto n = static_cast<std::size_t>(spec.n);
  for (std::size_t i = 0; i < sym.symbols.size(); ++i) {
    const auto first = out.stego.pixels.begin() + static_cast<std::ptrdiff_t>(i * n);
    const PixelGroup x(first, first + static_cast<std::ptrdiff_t>(n));
    const PixelGroup g = embed_group(spec, x, sym.symbols[i]);
    for (std::size_t j = 0; j < n; ++j) {
      // Clamping keeps every feasible change inside [0, 255].
      out.stego.pixels[i * n + j] = static_cast<std::uint8_t>(g[j]);
    }
  }
  out.used_groups = sym.symbols.size();
  return out;
}

BitStream extract_message(const GrayImage& img, const SchemeSpec& spec, std::size_t bit_length) {
  const std::size_t cap = operational_capacity_bits(img, spec);
  if (bit_length > cap) {
    throw Error(Errc::CapacityExceeded,
                std::to_string(bit_length) + " bits exceed capacity " + std::to_string(cap));
  }
  const auto width = static_cast<std::size_t>(spec.payload_bits_operational());
  const std::size_t count = (bit_length + width - 1) / width;
  const auto n = static_cast<std::size_t>(spec.n);
  SymbolStream sym;
  sym.modulus = spec.modulus;
  sym.symbols.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto first = img.pixels.begin() + static_cast<std::ptrdiff_t>(i * n);
    sym.symbols.push_back(extraction_value(spec, PixelGroup(first, first + static_cast<std::ptrdiff_t>(n))));
  }
  return symbols_to_bits(sym, bit_length);
}

}  // namespace emdstego
