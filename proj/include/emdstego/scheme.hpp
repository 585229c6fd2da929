#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "emdstego/codec.hpp"
#include "emdstego/image.hpp"

namespace emdstego {

using ParamMap = std::map<std::string, int>;

struct ChangeConstraint {
  int per_pixel_max = 1;       // z
  int max_changed_pixels = 1;  // k
  std::optional<int> l1_radius;
};

using ChangeVector = std::vector<int>;

enum class Strategy { ExplicitEmd, ExplicitIemd, ExplicitPva, ExplicitEgemd, Explicit2Emd, Solver };
enum class Objective { L2ThenL1, L1ThenL2 };

/// One modular-linear extraction function over a contiguous run of pixels.
/// Plain schemes have a single part; EGEMD and 2-EMD compose two parts in
/// mixed radix, the composite symbol being sum(value_i * weight_i).
struct ModularPart {
  int offset = 0;
  int length = 0;
  std::vector<std::int64_t> base;
  std::uint64_t modulus = 2;
  std::uint64_t weight = 1;
  ChangeConstraint constraint;
};

/// Minimal-cost change vector for every residue of one part, indexed by
/// residue. Built once per scheme by exhaustive enumeration.
using ResidueTable = std::vector<ChangeVector>;

struct SchemeSpec {
  std::string id;
  ParamMap params;
  int n = 1;
  std::vector<std::int64_t> base;  // concatenation of the part bases
  std::uint64_t modulus = 2;       // product of the part moduli
  ChangeConstraint constraint;
  Strategy strategy = Strategy::Solver;
  Objective objective = Objective::L2ThenL1;
  std::optional<std::int64_t> key;  // MPEMD security factor C
  std::vector<ModularPart> parts;
  std::shared_ptr<const std::vector<ResidueTable>> tables;

  double payload_bits_exact() const;
  int payload_bits_operational() const;
  /// "k=v;..." in key order, the canonical text form used in reports.
  std::string param_string() const;
};

SchemeSpec make_scheme(const std::string& name, const ParamMap& params = {});

/// Scheme tokens accepted by make_scheme, in registry order.
const std::vector<std::string>& scheme_names();

std::uint64_t extraction_value(const SchemeSpec& spec, const PixelGroup& g);

/// Solves every part independently against its residue table.
PixelGroup solver_embed_group(const SchemeSpec& spec, const PixelGroup& x, std::uint64_t s);

PixelGroup emd_embed_group(const PixelGroup& x, std::uint64_t s, int n);
PixelGroup iemd_embed_group(const PixelGroup& x, std::uint64_t s);
int pva_embed_pixel(int x, std::uint64_t s, int t);
PixelGroup egemd_embed(const PixelGroup& x, std::uint64_t s, int n1);
PixelGroup twoemd_embed(const PixelGroup& x, std::uint64_t s);

/// Dispatches on spec.strategy.
PixelGroup embed_group(const SchemeSpec& spec, const PixelGroup& x, std::uint64_t s);

bool satisfies_constraint(const ChangeConstraint& c, const ChangeVector& delta);

struct EmbedResult {
  GrayImage stego;
  std::size_t used_groups = 0;
};

EmbedResult embed_message(const GrayImage& img, const SchemeSpec& spec, const BitStream& msg);
BitStream extract_message(const GrayImage& img, const SchemeSpec& spec, std::size_t bit_length);

}  // namespace emdstego
