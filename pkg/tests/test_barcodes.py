"""Barcode calculus: shifts, torsion, convolution, almostization, hom, K0."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from aptkit.barcodes import (
    Barcode,
    almost_iso,
    almostize,
    bar,
    barcode,
    convolve,
    eval_at,
    hom_dim,
    is_almost_zero,
    is_c_torsion,
    k0_class,
    quotient_by_locals,
    shift,
    torsionfree_hom_dim,
)
from aptkit.errors import InvalidInput, UnsupportedShape
from aptkit.k0 import K0Class, e

from generators import random_barcode, random_decorated_barcode

GRID = [Fraction(n, 2) for n in range(0, 13)]
LINE = bar("-inf", "inf", False, False)


def test_eval_decorations():
    assert eval_at(barcode(bar(0, 1)), Fraction(1, 2)) == {0: 1}
    assert eval_at(barcode(bar(0, 1)), 1) == {}
    assert eval_at(barcode(bar(0, 1, right_closed=True)), 1) == {0: 1}
    assert eval_at(barcode(bar(0, 1, False, False)), 0) == {}


def test_shift_group_action():
    b = barcode(bar(0, 2))
    assert shift(b, 1) == barcode(bar(-1, 1))
    assert shift(b, 0) == b
    a, c = Fraction(2, 3), Fraction(-1, 5)
    assert shift(shift(b, a), c) == shift(b, a + c)


def test_invalid_intervals_rejected():
    with pytest.raises(InvalidInput):
        bar(1, 0)
    with pytest.raises(InvalidInput):
        bar(0, 0, True, False)
    with pytest.raises(InvalidInput):
        bar("-inf", 0, True, False)


def test_torsion_examples():
    c = Fraction(3, 2)
    assert is_c_torsion(barcode(bar(0, c)), c)
    assert not is_c_torsion(barcode(bar(0, 1)), Fraction(1, 2))
    assert not is_c_torsion(barcode(bar(0, "inf")), 1000)
    assert is_c_torsion(Barcode(), 0)
    # closed-right needs strictly more than its length
    assert not is_c_torsion(barcode(bar(0, 1, True, True)), 1)
    assert is_c_torsion(barcode(bar(0, 1, True, True)), Fraction(3, 2))
    # singleton at c = 0 is not torsion, at any positive c it is
    assert not is_c_torsion(barcode(bar(2, 2, True, True)), 0)
    assert is_c_torsion(barcode(bar(2, 2, True, True)), Fraction(1, 10))


def test_torsion_calibration_grid():
    for num_a in range(0, 5):
        for num_len in range(1, 5):
            a = Fraction(num_a, 2)
            length = Fraction(num_len, 2)
            for num_c in range(0, 7):
                c = Fraction(num_c, 2)
                assert is_c_torsion(barcode(bar(a, a + length)), c) == (c >= length)


def test_torsion_closed_under_sums():
    rng = random.Random(2)
    for _ in range(50):
        x = random_barcode(rng, GRID, ray_chance=0)
        y = random_barcode(rng, GRID, ray_chance=0)
        c = Fraction(rng.randint(0, 12), 2)
        if is_c_torsion(x, c) and is_c_torsion(y, c):
            assert is_c_torsion(Barcode(list(x.bars) + list(y.bars)), c)


def test_convolution_unit():
    unit = barcode(bar(0, "inf"))
    rng = random.Random(3)
    for _ in range(40):
        x = random_barcode(rng, GRID)
        assert convolve(unit, x) == x
        assert convolve(x, unit) == x


def test_convolution_koszul_example():
    out = convolve(barcode(bar(0, 1)), barcode(bar(0, 1)))
    assert out == Barcode([bar(0, 1), bar(1, 2, hdegree=1)])


def test_convolution_by_line():
    assert convolve(barcode(LINE), barcode(bar(0, 1))).is_empty()
    assert convolve(barcode(LINE), barcode(bar(0, "inf"))) == barcode(LINE)
    assert convolve(barcode(LINE), barcode(LINE)) == barcode(LINE)


def test_convolution_rejects_decorations():
    with pytest.raises(UnsupportedShape):
        convolve(barcode(bar(0, 1, right_closed=True)), barcode(bar(0, 1)))


def test_convolution_commutative_associative_random():
    rng = random.Random(4)
    for _ in range(200):
        x = random_barcode(rng, GRID, max_bars=2)
        y = random_barcode(rng, GRID, max_bars=2)
        z = random_barcode(rng, GRID, max_bars=2)
        assert convolve(x, y) == convolve(y, x)
        assert convolve(convolve(x, y), z) == convolve(x, convolve(y, z))


def test_k0_examples():
    assert k0_class(barcode(bar(Fraction(5, 2), "inf"))) == e(Fraction(5, 2))
    assert k0_class(barcode(bar(0, 2))) == e(0) - e(2)
    assert k0_class(barcode(bar(0, 1), bar(1, 2))) == e(0) - e(2)
    assert k0_class(barcode(bar(0, 1, hdegree=1))) == e(1) - e(0)
    with pytest.raises(UnsupportedShape):
        k0_class(barcode(LINE))


def test_k0_multiplicative_under_convolution():
    rng = random.Random(5)
    for _ in range(100):
        x = random_barcode(rng, GRID, max_bars=3)
        y = random_barcode(rng, GRID, max_bars=3)
        assert k0_class(convolve(x, y)) == k0_class(x) * k0_class(y)


def test_almostize_examples():
    mixed = Barcode(
        [bar(0, 1, True, True), bar(2, 2, True, True), bar(3, 4, False, False)]
    )
    assert almostize(mixed) == Barcode([bar(0, 1), bar(3, 4)])
    assert almostize(barcode(bar(0, 1))) == barcode(bar(0, 1))
    assert almostize(barcode(bar(7, 7, True, True))).is_empty()


def test_almostize_idempotent_and_kernel():
    rng = random.Random(6)
    for _ in range(200):
        b = random_decorated_barcode(rng, GRID)
        nb = almostize(b)
        assert almostize(nb) == nb
        assert (nb.is_empty()) == is_almost_zero(b)


def test_almost_iso_examples():
    assert almost_iso(barcode(bar(0, 1, True, True)), barcode(bar(0, 1)))
    assert almost_iso(barcode(bar(0, 0, True, True)), Barcode())
    assert not almost_iso(barcode(bar(0, 1)), barcode(bar(0, 2)))


def test_quotient_by_locals():
    assert quotient_by_locals(barcode(LINE, bar(0, 1))) == barcode(bar(0, 1))
    assert quotient_by_locals(barcode(bar(0, "inf"))) == barcode(bar(0, "inf"))
    only_line = barcode(bar("-inf", "inf", False, False, hdegree=3))
    assert quotient_by_locals(only_line).is_empty()


def test_hom_rule():
    # Hom([a,b), [c,d)) is nonzero exactly when c <= a < d <= b
    assert hom_dim(barcode(bar(1, 4)), barcode(bar(0, 3))) == 1
    assert hom_dim(barcode(bar(0, 3)), barcode(bar(1, 4))) == 0
    assert hom_dim(barcode(bar(0, "inf")), barcode(bar(0, "inf"))) == 1
    assert hom_dim(barcode(bar(0, 1)), barcode(bar(0, 1))) == 1
    assert hom_dim(barcode(bar(0, 1)), barcode(bar(2, 3))) == 0


def test_torsionfree_hom_examples():
    free = barcode(bar(0, "inf"))
    assert torsionfree_hom_dim(free, free) == 1
    assert torsionfree_hom_dim(barcode(bar(0, 1)), free) == 0
    assert torsionfree_hom_dim(barcode(bar(0, 1)), barcode(bar(0, 5))) == 0
    assert torsionfree_hom_dim(barcode(bar(1, "inf")), barcode(bar(0, "inf"))) == 1


def test_torsionfree_hom_closed_form():
    # in the quotient only infinite bars survive, pairing freely
    rng = random.Random(7)
    for _ in range(60):
        x = random_barcode(rng, GRID, ray_chance=0.5)
        y = random_barcode(rng, GRID, ray_chance=0.5)
        free_x = sum(b.multiplicity for b in x.bars if b.interval.right == float("inf"))
        free_y = sum(b.multiplicity for b in y.bars if b.interval.right == float("inf"))
        assert torsionfree_hom_dim(x, y) == free_x * free_y


def test_k0_group_ring():
    a = e(Fraction(1, 2)) - e(3)
    b = e(0) + e(1)
    assert a * b == e(Fraction(1, 2)) + e(Fraction(3, 2)) - e(3) - e(4)
    assert (a - a).is_zero()
    assert K0Class.zero() * a == K0Class.zero()
