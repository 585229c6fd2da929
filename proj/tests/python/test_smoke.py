import math

import pytest

import emdstego as es


def test_scheme_basics():
    s = es.make_scheme("emd", {"n": 2})
    assert s.modulus == 5
    assert s.n == 2
    assert es.relative_payload(s) == pytest.approx(math.log2(5) / 2)
    assert "emd" in es.scheme_names()


def test_group_embed_hits_every_symbol():
    s = es.make_scheme("emd", {"n": 3})
    for sym in range(s.modulus):
        g = es.embed_group(s, [100, 120, 140], sym)
        assert es.extraction_value(s, g) == sym
        assert sum(abs(a - b) for a, b in zip(g, [100, 120, 140])) <= 1


def test_message_round_trip():
    cover = es.seeded_interior_image(32, 32, 3)
    s = es.make_scheme("gemd", {"n": 2})
    bits = es.seeded_bits(11, 500)
    stego, used = es.embed_message(cover, s, bits)
    assert used > 0
    assert es.extract_message(stego, s, len(bits)) == bits
    report = es.analyze_pair(cover, stego, s)
    assert report["mse"] == pytest.approx(es.mse(cover, stego))
    assert report["psnr_db"] == pytest.approx(es.psnr(report["mse"]))


def test_pgm_round_trip():
    img = es.GrayImage(3, 2, bytes([0, 1, 2, 253, 254, 255]))
    assert es.load_pgm(es.save_pgm(img)) == img
    assert img.pixels == bytes([0, 1, 2, 253, 254, 255])


def test_errors_carry_codes():
    with pytest.raises(es.Error, match="UnknownScheme"):
        es.make_scheme("nope")
    cover = es.GrayImage.filled(4, 4, 128)
    with pytest.raises(es.Error, match="CapacityExceeded"):
        es.embed_message(cover, es.make_scheme("emd", {"n": 2}), [1] * 1000)


def test_bound_counts_match_enumeration():
    for n, z, q in [(2, 1, 1), (3, 2, 2), (4, 1, 3)]:
        want = es.enumerate_oracle(n, z, q)
        got = (es.count_states(n, z, q), es.sum_changes_linear(n, z, q), es.sum_changes_squared(n, z, q))
        assert got == want
    assert es.count_states(40, 3, 40) > 2**64


def test_frontier_and_cubic():
    pts = es.frontier(4, 2)
    assert pts
    xs = [p["inv_alpha"] for p in pts]
    assert xs == sorted(xs)
    ref = es.REFERENCE_BOUND_CURVE
    assert es.cubic_eval(ref, 0.0) == pytest.approx(-1.098)
    samples = [(x / 4, es.cubic_eval(ref, x / 4)) for x in range(10)]
    poly, residual = es.cubic_fit(samples)
    assert poly.c3 == pytest.approx(ref.c3)
    assert residual < 1e-12
    assert es.distance_to_curve(ref, 1.0, es.cubic_eval(ref, 1.0)) < 1e-6


def test_seeded_bits_are_deterministic():
    a = es.seeded_bits(0, 64)
    assert a == es.seeded_bits(0, 64)
    assert set(a) <= {0, 1}
    assert a != es.seeded_bits(1, 64)
