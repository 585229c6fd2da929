#include <doctest.h>

#include <set>

#include "configs.hpp"
#include "emdstego/codec.hpp"
#include "emdstego/rng.hpp"
#include "emdstego/scheme.hpp"
#include "oracles.hpp"

using namespace emdstego;

namespace {

PixelGroup random_group(SplitMix64& rng, int n, int lo = 32, int hi = 223) {
  PixelGroup g(static_cast<std::size_t>(n));
  for (auto& p : g) p = lo + static_cast<int>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
  return g;
}

long squared_change(const PixelGroup& a, const PixelGroup& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

ChangeVector diff(const PixelGroup& from, const PixelGroup& to) {
  ChangeVector d(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) d[i] = to[i] - from[i];
  return d;
}

}  // namespace

TEST_SUITE("schemes") {
  TEST_CASE("extraction function values") {
    const auto emd = make_scheme("emd", {{"n", 2}});
    CHECK(extraction_value(emd, {100, 100}) == 0);
    const auto gemd = make_scheme("gemd", {{"n", 2}});
    CHECK(extraction_value(gemd, {10, 20}) == 6);
    for (const auto& c : configs::primary()) {
      const auto spec = make_scheme(c.name, c.params);
      if (!spec.key || *spec.key == 0) CHECK(extraction_value(spec, PixelGroup(static_cast<std::size_t>(spec.n), 0)) == 0);
    }
    CHECK_ERRC(extraction_value(emd, {1, 2, 3}), Errc::GroupSizeMismatch);
  }

  TEST_CASE("scheme construction") {
    const auto emd = make_scheme("emd", {{"n", 2}});
    CHECK(emd.base == std::vector<std::int64_t>{1, 2});
    CHECK(emd.modulus == 5);
    const auto emd2 = make_scheme("emd2", {{"n", 2}});
    CHECK(emd2.base == std::vector<std::int64_t>{1, 3});
    CHECK(emd2.modulus == 9);
    const auto emd2_4 = make_scheme("emd2", {{"n", 4}});
    CHECK(emd2_4.base == std::vector<std::int64_t>{1, 2, 6, 11});
    CHECK(emd2_4.modulus == 27);
    CHECK(make_scheme("iemd").modulus == 8);
    CHECK(make_scheme("pva", {{"t", 3}}).constraint.per_pixel_max == 4);
    const auto femd = make_scheme("femd", {{"t", 4}});
    CHECK(femd.base == std::vector<std::int64_t>{3, 4});
    CHECK(femd.modulus == 16);
    CHECK(femd.constraint.per_pixel_max == 2);
    const auto de = make_scheme("de", {{"k", 2}});
    CHECK(de.base == std::vector<std::int64_t>{5, 1});
    CHECK(de.modulus == 13);
    CHECK(de.constraint.l1_radius == 2);
    CHECK(make_scheme("gemd", {{"n", 3}}).base == std::vector<std::int64_t>{1, 3, 7});
    const auto mbe = make_scheme("mbe", {{"n", 3}, {"k", 1}});
    CHECK(mbe.base == std::vector<std::int64_t>{1, 3, 7});
    CHECK(mbe.modulus == 16);
    CHECK(make_scheme("mbe", {{"n", 2}, {"k", 2}}).base == std::vector<std::int64_t>{1, 5});
    CHECK(make_scheme("msd", {{"n", 3}}).modulus == 11);
    CHECK(make_scheme("msd", {{"n", 2}}).modulus == 5);
    CHECK(make_scheme("msd", {{"n", 4}}).modulus == 21);
    const auto hemd = make_scheme("hemd", {{"n", 3}, {"w", 3}});
    CHECK(hemd.base == std::vector<std::int64_t>{1, 3, 9});
    CHECK(hemd.modulus == 27);
    const auto aemd = make_scheme("aemd", {{"n", 2}, {"m", 4}});
    CHECK(aemd.base == std::vector<std::int64_t>{1, 4});
    CHECK(aemd.modulus == 16);
    CHECK(aemd.constraint.per_pixel_max == 2);
    CHECK(make_scheme("egemd", {{"n", 4}}).modulus == 64);
    CHECK(make_scheme("twoemd", {{"n", 2}}).modulus == 25);
    CHECK(make_scheme("mpemd", {{"n", 3}, {"key", 2}}).key == 2);
  }

  TEST_CASE("scheme construction errors") {
    CHECK_ERRC(make_scheme("hemd", {{"n", 3}, {"w", 4}}), Errc::InvalidParameter);
    CHECK_ERRC(make_scheme("nonesuch"), Errc::UnknownScheme);
    CHECK_ERRC(make_scheme("emd", {{"t", 2}}), Errc::InvalidParameter);
    CHECK_ERRC(make_scheme("emd", {{"n", 0}}), Errc::InvalidParameter);
    CHECK_ERRC(make_scheme("pva", {{"t", 5}}), Errc::InvalidParameter);
    CHECK_ERRC(make_scheme("mpemd", {{"n", 2}, {"key", 4}}), Errc::InvalidParameter);
    CHECK_ERRC(make_scheme("egemd", {{"n", 4}, {"n1", 0}}), Errc::InvalidSplit);
    CHECK_ERRC(make_scheme("egemd", {{"n", 4}, {"n1", 4}}), Errc::InvalidSplit);
    // A single-pixel GEMD subgroup cannot reach residue 2 mod 4.
    CHECK_ERRC(make_scheme("egemd", {{"n", 3}}), Errc::InfeasibleScheme);
    CHECK_ERRC(make_scheme("gemd", {{"n", 1}}), Errc::InfeasibleScheme);
    CHECK_ERRC(make_scheme("hemd", {{"n", 3}, {"w", 5}}), Errc::InfeasibleScheme);
    CHECK_NOTHROW(make_scheme("hemd", {{"n", 3}, {"w", 5}, {"wbase", 1}}));
  }

  TEST_CASE("solver examples") {
    const auto gemd = make_scheme("gemd", {{"n", 2}});
    CHECK(solver_embed_group(gemd, {10, 20}, 6) == PixelGroup{10, 20});
    CHECK(solver_embed_group(gemd, {10, 20}, 7) == PixelGroup{11, 20});
    const auto de = make_scheme("de", {{"k", 1}});
    CHECK(solver_embed_group(de, {100, 100}, 2) == PixelGroup{99, 100});
    CHECK_ERRC(solver_embed_group(gemd, {10, 20}, 8), Errc::SymbolOutOfRange);
  }

  TEST_CASE("EMD explicit embed") {
    CHECK(emd_embed_group({100, 100}, 0, 2) == PixelGroup{100, 100});
    CHECK(emd_embed_group({100, 100}, 3, 2) == PixelGroup{100, 99});
    CHECK(emd_embed_group({5, 5}, 1, 2) == PixelGroup{6, 5});
    CHECK_ERRC(emd_embed_group({5, 5}, 5, 2), Errc::SymbolOutOfRange);
  }

  TEST_CASE("IEMD explicit embed") {
    CHECK(iemd_embed_group({10, 20}, 6) == PixelGroup{10, 20});
    CHECK(iemd_embed_group({10, 20}, 5) == PixelGroup{9, 20});
    CHECK(iemd_embed_group({10, 20}, 7) == PixelGroup{11, 20});
    CHECK_ERRC(iemd_embed_group({10, 20}, 8), Errc::SymbolOutOfRange);
  }

  TEST_CASE("PVA explicit embed") {
    CHECK(pva_embed_pixel(100, 0, 2) == 100);
    CHECK(pva_embed_pixel(100, 3, 2) == 99);
    CHECK(pva_embed_pixel(100, 2, 2) == 98);
    CHECK_ERRC(pva_embed_pixel(100, 4, 2), Errc::SymbolOutOfRange);
  }

  TEST_CASE("EGEMD splits the symbol between two GEMD subgroups") {
    const auto spec = make_scheme("egemd", {{"n", 4}, {"n1", 2}});
    const PixelGroup zero{0, 0, 0, 0};
    CHECK(egemd_embed(zero, 0, 2) == zero);

    const std::uint64_t s = 0b100101;
    const PixelGroup x{100, 120, 140, 160};
    const auto g = egemd_embed(x, s, 2);
    const std::vector<std::int64_t> gemd2{1, 3};
    CHECK(oracle::modular_value(gemd2, 8, 0, g, 0) == 0b101);
    CHECK(oracle::modular_value(gemd2, 8, 0, g, 2) == 0b100);
    CHECK(extraction_value(spec, g) == s);
    CHECK(embed_group(spec, x, s) == g);
    CHECK_ERRC(egemd_embed(x, s, 0), Errc::InvalidSplit);
    CHECK_ERRC(egemd_embed(x, 64, 2), Errc::SymbolOutOfRange);
  }

  TEST_CASE("2-EMD embeds the high digit first") {
    const auto spec = make_scheme("twoemd", {{"n", 2}});
    const PixelGroup x{100, 100, 100, 100};
    const auto g = twoemd_embed(x, 16);
    CHECK(g == PixelGroup{100, 99, 101, 100});
    CHECK(extraction_value(spec, g) == 16);
    CHECK(twoemd_embed(g, 16) == g);
    CHECK_ERRC(twoemd_embed(x, 25), Errc::SymbolOutOfRange);
  }

  TEST_CASE("round trip and change constraints on random groups") {
    for (const auto& c : configs::extended()) {
      CAPTURE(configs::label(c));
      const auto spec = make_scheme(c.name, c.params);
      SplitMix64 rng(1234);
      int failures = 0;
      for (int i = 0; i < 1000; ++i) {
        const auto x = random_group(rng, spec.n);
        const auto s = rng.next() % spec.modulus;
        const auto g = embed_group(spec, x, s);
        if (extraction_value(spec, g) != s) ++failures;
        if (!satisfies_constraint(spec.constraint, diff(x, g))) ++failures;
        for (const auto& part : spec.parts) {
          ChangeVector d;
          for (int j = 0; j < part.length; ++j) {
            const auto k = static_cast<std::size_t>(part.offset + j);
            d.push_back(g[k] - x[k]);
          }
          if (!oracle::admissible(part.constraint, d)) ++failures;
        }
      }
      CHECK(failures == 0);
    }
  }

  TEST_CASE("solver output is the exhaustive optimum") {
    for (const auto& c : configs::extended()) {
      CAPTURE(configs::label(c));
      const auto spec = make_scheme(c.name, c.params);
      SplitMix64 rng(99);
      int mismatches = 0;
      for (int i = 0; i < 300; ++i) {
        const auto x = random_group(rng, spec.n);
        const auto s = rng.next() % spec.modulus;
        if (solver_embed_group(spec, x, s) != oracle::brute_embed(spec, x, s)) ++mismatches;
      }
      CHECK(mismatches == 0);
    }
  }

  TEST_CASE("explicit procedures against the solver") {
    SplitMix64 rng(7);
    for (int n = 1; n <= 6; ++n) {
      const auto spec = make_scheme("emd", {{"n", n}});
      for (int i = 0; i < 500; ++i) {
        const auto x = random_group(rng, n);
        const auto s = rng.next() % spec.modulus;
        const auto explicit_g = emd_embed_group(x, s, n);
        const auto solver_g = solver_embed_group(spec, x, s);
        REQUIRE(satisfies_constraint(spec.constraint, diff(x, explicit_g)));
        REQUIRE(squared_change(x, explicit_g) == squared_change(x, solver_g));
        REQUIRE(squared_change(x, explicit_g) <= 1);
      }
    }
    const auto iemd = make_scheme("iemd");
    for (int i = 0; i < 2000; ++i) {
      const auto x = random_group(rng, 2);
      const auto s = rng.next() % 8;
      const auto explicit_g = iemd_embed_group(x, s);
      REQUIRE(satisfies_constraint(iemd.constraint, diff(x, explicit_g)));
      REQUIRE(squared_change(x, explicit_g) >= squared_change(x, solver_embed_group(iemd, x, s)));
    }
    for (int t = 2; t <= 4; ++t) {
      const auto pva = make_scheme("pva", {{"t", t}});
      for (int i = 0; i < 500; ++i) {
        const auto x = random_group(rng, 1);
        const auto s = rng.next() % pva.modulus;
        REQUIRE(PixelGroup{pva_embed_pixel(x[0], s, t)} == solver_embed_group(pva, x, s));
      }
    }
  }

  TEST_CASE("every residue is reachable within the change constraint") {
    for (const auto& c : configs::extended()) {
      CAPTURE(configs::label(c));
      const auto spec = make_scheme(c.name, c.params);
      for (const auto& part : spec.parts) {
        std::set<std::uint64_t> reached;
        oracle::for_each_cube_point(part.length, part.constraint.per_pixel_max, [&](const std::vector<int>& d) {
          if (!oracle::admissible(part.constraint, d)) return;
          PixelGroup g(d.begin(), d.end());
          reached.insert(oracle::modular_value(part.base, part.modulus, 0, g));
        });
        CHECK(reached.size() == part.modulus);
      }
    }
  }

  TEST_CASE("MPEMD key invariance") {
    const int n = 3;
    SplitMix64 rng(21);
    for (int key = 0; key <= 2 * n - 1; ++key) {
      const auto spec = make_scheme("mpemd", {{"n", n}, {"key", key}});
      const auto wrong = make_scheme("mpemd", {{"n", n}, {"key", (key + 1) % (2 * n)}});
      int disagreements = 0;
      for (int i = 0; i < 200; ++i) {
        const auto x = random_group(rng, n);
        const auto s = rng.next() % spec.modulus;
        const auto g = embed_group(spec, x, s);
        REQUIRE(extraction_value(spec, g) == s);
        disagreements += extraction_value(wrong, g) != s;
      }
      CHECK(disagreements > 0);
    }
  }

  TEST_CASE("message pipeline") {
    const auto spec = make_scheme("emd", {{"n", 2}});
    const auto flat = GrayImage::filled(512, 512, 128);

    const auto empty = embed_message(flat, spec, BitStream{});
    CHECK(empty.used_groups == 0);
    CHECK(empty.stego == clamp_for_scheme(flat, 1));
    CHECK(extract_message(empty.stego, spec, 0).bits.empty());

    const auto msg = seeded_bits(3, 1000);
    const auto r = embed_message(flat, spec, msg);
    CHECK(r.used_groups == 500);
    CHECK(extract_message(r.stego, spec, 1000) == msg);
    for (std::size_t i = 1000; i < r.stego.pixels.size(); ++i) REQUIRE(r.stego.pixels[i] == 128);
  }

  TEST_CASE("capacity boundary") {
    const auto spec = make_scheme("emd", {{"n", 2}});
    const auto cover = seeded_interior_image(9, 7, 1);  // 63 pixels: 31 groups, 62 bits
    const auto full = seeded_bits(8, 62);
    const auto r = embed_message(cover, spec, full);
    CHECK(extract_message(r.stego, spec, 62) == full);
    CHECK(r.stego.pixels.back() == cover.pixels.back());
    CHECK_ERRC(embed_message(cover, spec, seeded_bits(8, 63)), Errc::CapacityExceeded);
    CHECK_ERRC(extract_message(r.stego, spec, 63), Errc::CapacityExceeded);
  }

  TEST_CASE("extraction from a stego group") {
    const auto spec = make_scheme("emd", {{"n", 2}});
    const GrayImage stego(2, 1, {100, 99});
    CHECK(extraction_value(spec, {100, 99}) == 3);
    BitStream three;
    three.bits = {1, 1};
    CHECK(extract_message(stego, spec, 2) == three);
  }

  TEST_CASE("every scheme round trips a full message through the pipeline") {
    for (const auto& c : configs::extended()) {
      CAPTURE(configs::label(c));
      const auto spec = make_scheme(c.name, c.params);
      const auto cover = seeded_interior_image(40, 30, 17);
      const auto groups = cover.size() / static_cast<std::size_t>(spec.n);
      const auto bits = groups * static_cast<std::size_t>(spec.payload_bits_operational());
      const auto msg = seeded_bits(5, bits);
      const auto r = embed_message(cover, spec, msg);
      CHECK(extract_message(r.stego, spec, bits) == msg);
    }
  }
}
