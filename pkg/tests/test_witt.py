import random
from fractions import Fraction

import pytest

from zetalab import (
    GhostVector,
    PrecisionMismatch,
    TruncatedSeries,
    WittVector,
    ghost,
    unghost,
    witt_add,
    witt_mul,
    witt_neg,
)


def geometric(c, precision):
    return WittVector(TruncatedSeries.geometric(c, precision))


def random_witt(rng, precision):
    return WittVector.from_coefficients(
        [1] + [rng.randint(-3, 3) for _ in range(precision)]
    )


def test_ghost_of_one():
    assert ghost(WittVector.zero(5)) == GhostVector([0] * 5)


def test_ghost_geometric():
    assert ghost(geometric(3, 5)) == GhostVector([3**n for n in range(1, 6)])


def test_ghost_of_product():
    w = witt_add(geometric(1, 6), geometric(2, 6))
    assert ghost(w) == GhostVector([1 + 2**n for n in range(1, 7)])


def test_unghost_zeros():
    assert unghost(GhostVector([0] * 4)) == WittVector.zero(4)


def test_unghost_ones():
    assert unghost(GhostVector([1] * 6)) == geometric(1, 6)


def test_unghost_powers_of_two():
    assert unghost(GhostVector([2**n for n in range(1, 7)])) == geometric(2, 6)


def test_witt_add_identity():
    one = WittVector.zero(4)
    assert witt_add(one, one) == one


def test_witt_add_is_series_product():
    got = witt_add(geometric(1, 6), geometric(2, 6))
    # oracle: polynomial long multiplication of the two expansions
    expect = [sum(2**j for j in range(n + 1)) for n in range(7)]
    assert got == WittVector.from_coefficients(expect)


def test_witt_add_inverse():
    rng = random.Random(3)
    w = random_witt(rng, 8)
    assert witt_add(w, witt_neg(w)) == WittVector.zero(8)


def test_witt_mul_unit():
    rng = random.Random(5)
    w = random_witt(rng, 8)
    assert witt_mul(w, WittVector.one(8)) == w


def test_witt_mul_geometrics():
    assert witt_mul(geometric(2, 8), geometric(3, 8)) == geometric(6, 8)


def test_witt_mul_annihilator():
    rng = random.Random(7)
    w = random_witt(rng, 8)
    assert witt_mul(w, WittVector.zero(8)) == WittVector.zero(8)


def test_precision_mismatch_rejected():
    with pytest.raises(PrecisionMismatch):
        witt_add(WittVector.zero(4), WittVector.zero(5))
    with pytest.raises(PrecisionMismatch):
        witt_mul(WittVector.zero(4), WittVector.zero(5))


def test_ring_axioms_precision_8():
    rng = random.Random(11)
    for _ in range(15):
        a, b, c = (random_witt(rng, 8) for _ in range(3))
        assert witt_add(a, b) == witt_add(b, a)
        assert witt_mul(a, b) == witt_mul(b, a)
        assert witt_add(witt_add(a, b), c) == witt_add(a, witt_add(b, c))
        assert witt_mul(witt_mul(a, b), c) == witt_mul(a, witt_mul(b, c))
        assert witt_mul(a, witt_add(b, c)) == witt_add(witt_mul(a, b), witt_mul(a, c))


def test_ghost_roundtrip_all_precisions():
    rng = random.Random(13)
    for precision in range(1, 13):
        for _ in range(5):
            w = random_witt(rng, precision)
            assert unghost(ghost(w)) == w
            g = GhostVector([Fraction(rng.randint(-6, 6), rng.choice([1, 2, 3])) for _ in range(precision)])
            assert ghost(unghost(g)) == g
