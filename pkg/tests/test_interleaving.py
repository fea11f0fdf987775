"""Interleaving distance: metric axioms, oracle agreement, certificates, towers."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement

from aptkit import catalog
from aptkit.barcodes import Barcode, almost_iso, bar, barcode, shift
from aptkit.interleaving import (
    InterleavingCertificate,
    certificate_for,
    distance_to_zero,
    interleaving_distance,
    verify_interleaving,
)
from aptkit.rational import INF

from generators import random_barcode, random_decorated_barcode

GRID = [Fraction(n, 2) for n in range(0, 13)]
SMALL_GRID = [Fraction(n, 2) for n in range(0, 7)]  # half-integer endpoints up to 3


def test_distance_examples():
    assert interleaving_distance(Barcode(), barcode(bar(0, 2))) == 1
    x = barcode(bar(0, 10))
    assert interleaving_distance(x, x) == 0
    assert interleaving_distance(x, barcode(bar(1, 9))) == 1


def test_distance_to_zero_examples():
    assert distance_to_zero(barcode(bar(0, 2))) == 1
    assert distance_to_zero(Barcode()) == 0
    assert distance_to_zero(barcode(bar(0, "inf"))) == INF


def test_distance_to_zero_matches_distance():
    rng = random.Random(20)
    for _ in range(50):
        x = random_barcode(rng, GRID, ray_chance=0.15)
        assert distance_to_zero(x) == interleaving_distance(x, Barcode())


def test_line_multiplicity_mismatch_is_infinite():
    line = barcode(bar("-inf", "inf", False, False))
    assert interleaving_distance(line, Barcode()) == INF
    assert interleaving_distance(line, line) == 0
    ray = barcode(bar(0, "inf"))
    assert interleaving_distance(ray, Barcode()) == INF
    assert interleaving_distance(ray, barcode(bar(3, "inf"))) == 3


def test_pseudo_metric_axioms_random():
    rng = random.Random(21)
    for _ in range(170):
        x = random_barcode(rng, GRID, max_bars=3, ray_chance=0.15)
        y = random_barcode(rng, GRID, max_bars=3, ray_chance=0.15)
        z = random_barcode(rng, GRID, max_bars=3, ray_chance=0.15)
        dxy = interleaving_distance(x, y)
        dyx = interleaving_distance(y, x)
        assert dxy == dyx
        assert interleaving_distance(x, x) == 0
        dyz = interleaving_distance(y, z)
        dxz = interleaving_distance(x, z)
        if dxy != INF and dyz != INF:
            assert dxz <= dxy + dyz


def test_shift_contractivity():
    rng = random.Random(22)
    for _ in range(60):
        x = random_barcode(rng, GRID, max_bars=3, ray_chance=0.2)
        y = random_barcode(rng, GRID, max_bars=3, ray_chance=0.2)
        c = Fraction(rng.randint(-8, 8), 2)
        assert interleaving_distance(shift(x, c), shift(y, c)) == interleaving_distance(x, y)
        d_self = interleaving_distance(x, shift(x, c))
        if d_self != INF:
            assert d_self <= abs(c)


def test_almost_iso_implies_distance_zero():
    rng = random.Random(23)
    for _ in range(100):
        x = random_decorated_barcode(rng, GRID)
        y = random_decorated_barcode(rng, GRID)
        if almost_iso(x, y):
            assert interleaving_distance(x, y) == 0


def test_oracle_agreement_small_instances():
    from oracles import bottleneck_by_matching_enumeration

    shapes = []
    for a in SMALL_GRID:
        for b in SMALL_GRID:
            if a < b:
                shapes.append(bar(a, b))
    shapes += [bar(a, "inf") for a in SMALL_GRID]
    # exhaustive over all pairs of barcodes with <= 2 bars over a subgrid
    small_shapes = [bar(a, b) for a in SMALL_GRID[:4] for b in SMALL_GRID[:4] if a < b]
    small_barcodes = [Barcode()]
    small_barcodes += [Barcode([s]) for s in small_shapes]
    small_barcodes += [Barcode(list(pair)) for pair in combinations_with_replacement(small_shapes[:5], 2)]
    for x in small_barcodes:
        for y in small_barcodes:
            assert interleaving_distance(x, y) == bottleneck_by_matching_enumeration(x, y)
    # seeded random pairs with <= 4 bars over the full {0..6}/2 grid
    rng = random.Random(24)
    for _ in range(120):
        x = random_barcode(rng, SMALL_GRID, max_bars=4, ray_chance=0.2)
        y = random_barcode(rng, SMALL_GRID, max_bars=4, ray_chance=0.2)
        assert interleaving_distance(x, y) == bottleneck_by_matching_enumeration(x, y)


def test_certificates_sound():
    rng = random.Random(25)
    checked = 0
    for _ in range(80):
        x = random_barcode(rng, GRID, max_bars=3, ray_chance=0.2)
        y = random_barcode(rng, GRID, max_bars=3, ray_chance=0.2)
        d = interleaving_distance(x, y)
        if d == INF:
            continue
        cert = certificate_for(x, y, d)
        assert cert.a == d and cert.b == d
        assert verify_interleaving(x, y, cert)
        checked += 1
    assert checked > 30


def test_verify_rejects_undersized_shift():
    x = barcode(bar(0, 2))
    assert verify_interleaving(x, Barcode(), InterleavingCertificate(1, 1, (None,), ()))
    assert not verify_interleaving(
        x, Barcode(), InterleavingCertificate(Fraction(1, 2), Fraction(1, 2), (None,), ())
    )


def test_verify_identity_matching():
    x = barcode(bar(0, 5), bar(1, "inf"))
    cert = InterleavingCertificate(0, 0, (0, 1), (0, 1))
    assert verify_interleaving(x, x, cert)
    swapped = InterleavingCertificate(0, 0, (1, 0), (1, 0))
    assert not verify_interleaving(x, x, swapped)


def test_verify_rejects_mismatched_composite():
    x = barcode(bar(0, 4))
    y = barcode(bar(1, 5))
    good = InterleavingCertificate(1, 1, (0,), (0,))
    bad = InterleavingCertificate(Fraction(1, 2), Fraction(1, 2), (0,), (0,))
    assert verify_interleaving(x, y, good)
    assert not verify_interleaving(x, y, bad)
    # at scale 2 the matched maps vanish while both bars are killable:
    # the matched certificate is invalid, the double kill is valid
    far = barcode(bar(2, 6))
    assert not verify_interleaving(x, far, InterleavingCertificate(2, 2, (0,), (0,)))
    assert verify_interleaving(x, far, InterleavingCertificate(2, 2, (None,), (None,)))


def test_fiber_sequence_subadditivity_on_direct_sums():
    # fiber sequences A -> A + C -> C: d(A,0) <= d(A+C,0) + d(C,0)
    rng = random.Random(26)
    for _ in range(60):
        a = random_barcode(rng, GRID, max_bars=2, ray_chance=0)
        c = random_barcode(rng, GRID, max_bars=2, ray_chance=0)
        total = Barcode(list(a.bars) + list(c.bars))
        assert distance_to_zero(a) <= distance_to_zero(total) + distance_to_zero(c)


def test_composite_subadditivity_surrogate():
    # chains of canonical surjections [a1,b) -> [a2,b) -> [a3,b) have
    # explicit interval cofibers; direct sums of such chains exercise
    # d(cofib(v.u), 0) <= d(cofib(u), 0) + d(cofib(v), 0)
    rng = random.Random(27)
    for _ in range(80):
        cof_u, cof_v, cof_vu = [], [], []
        for _ in range(rng.randint(1, 3)):
            vals = sorted(Fraction(rng.randint(0, 12), 2) for _ in range(3))
            a3, a2, a1 = vals
            if a1 > a2:
                cof_u.append(bar(a2, a1))
            if a2 > a3:
                cof_v.append(bar(a3, a2))
            if a1 > a3:
                cof_vu.append(bar(a3, a1))
        lhs = distance_to_zero(Barcode(cof_vu))
        rhs = distance_to_zero(Barcode(cof_u)) + distance_to_zero(Barcode(cof_v))
        assert lhs <= rhs


def test_tower_bound():
    towers = catalog.geometric_towers()
    assert len(towers) == 5
    for tower in towers:
        stages = tower["stages"]
        cofibers = tower["cofibers"]
        colim = tower["colimit"]
        from aptkit.barcodes import eval_at

        for k, cof in enumerate(cofibers):
            # dimension count of the cofiber sequence stage_k -> stage_{k+1} -> cof
            for num in range(-4, 24):
                g = Fraction(num, 4)
                lhs = eval_at(stages[k + 1], g).get(0, 0)
                rhs = eval_at(stages[k], g).get(0, 0) + eval_at(cof, g).get(0, 0)
                assert lhs == rhs
        for N in range(len(cofibers)):
            lhs = distance_to_zero(tower["colim_cofibers"][N])
            rhs = 2 * tower["tail_sum"](N)
            assert lhs <= rhs
            # convergence: stages approach the colimit in distance
            assert interleaving_distance(stages[N], colim) <= 2 * tower["tail_sum"](N)


def test_certificates_with_lines_and_multiplicity():
    line2 = Barcode([bar("-inf", "inf", False, False, multiplicity=2)])
    x = Barcode(list(line2.bars) + [bar(0, 3)])
    y = Barcode(list(line2.bars) + [bar(1, 4)])
    d = interleaving_distance(x, y)
    assert d == 1
    cert = certificate_for(x, y, d)
    assert verify_interleaving(x, y, cert)
    # mismatched line counts have no certificate
    assert interleaving_distance(line2, Barcode([bar("-inf", "inf", False, False)])) == INF


def test_left_infinite_bars_rejected():
    import pytest

    from aptkit.errors import UnsupportedShape

    half_left = barcode(bar("-inf", 0, False, False))
    with pytest.raises(UnsupportedShape):
        interleaving_distance(half_left, Barcode())
    with pytest.raises(UnsupportedShape):
        distance_to_zero(half_left)


def test_nonzero_degree_rejected():
    import pytest

    from aptkit.errors import UnsupportedShape

    with pytest.raises(UnsupportedShape):
        interleaving_distance(barcode(bar(0, 1, hdegree=1)), Barcode())
