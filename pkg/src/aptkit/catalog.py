"""Named fans, cones, barcodes and presentations used across tests and the CLI."""

from __future__ import annotations

from fractions import Fraction

from .barcodes import Barcode, bar
from .geometry import Cone, Fan, validate_fan
from .modules import HALFLINE, PresentationND


def _fan(dim, entries):
    cones = [Cone(dim, gens) for _, gens in entries]
    ids = [name for name, _ in entries]
    return validate_fan(cones, ids)


def _p1():
    return _fan(1, [("0", []), ("neg", [(-1,)]), ("pos", [(1,)])])


def _p2():
    e1, e2, e3 = (1, 0), (0, 1), (-1, -1)
    return _fan(
        2,
        [
            ("0", []),
            ("e1", [e1]),
            ("e2", [e2]),
            ("e3", [e3]),
            ("s12", [e1, e2]),
            ("s23", [e2, e3]),
            ("s31", [e3, e1]),
        ],
    )


def _p1xp1():
    e1, e2 = (1, 0), (0, 1)
    w1, w2 = (-1, 0), (0, -1)
    return _fan(
        2,
        [
            ("0", []),
            ("e1", [e1]),
            ("e2", [e2]),
            ("-e1", [w1]),
            ("-e2", [w2]),
            ("q1", [e1, e2]),
            ("q2", [e2, w1]),
            ("q3", [w1, w2]),
            ("q4", [w2, e1]),
        ],
    )


def _hirzebruch(a: int):
    u1 = (-1, a)
    u2 = (0, 1)
    u3 = (1, 0)
    u4 = (0, -1)
    return _fan(
        2,
        [
            ("0", []),
            ("u1", [u1]),
            ("u2", [u2]),
            ("u3", [u3]),
            ("u4", [u4]),
            ("s12", [u1, u2]),
            ("s23", [u2, u3]),
            ("s34", [u3, u4]),
            ("s41", [u4, u1]),
        ],
    )


def _quadrant():
    return _fan(2, [("0", []), ("e1", [(1, 0)]), ("e2", [(0, 1)]), ("q", [(1, 0), (0, 1)])])


def _halffan():
    e1, e2, w1 = (1, 0), (0, 1), (-1, 0)
    return _fan(
        2,
        [
            ("0", []),
            ("e1", [e1]),
            ("e2", [e2]),
            ("-e1", [w1]),
            ("q1", [e1, e2]),
            ("q2", [e2, w1]),
        ],
    )


_FAN_BUILDERS = {
    "p1": _p1,
    "p2": _p2,
    "p1xp1": _p1xp1,
    "hirzebruch-1": lambda: _hirzebruch(1),
    "hirzebruch-2": lambda: _hirzebruch(2),
    "quadrant": _quadrant,
    "halffan": _halffan,
}

COMPLETE_FANS = ("p1", "p2", "p1xp1", "hirzebruch-1", "hirzebruch-2")


def fan_names():
    return sorted(_FAN_BUILDERS)


def fan(name: str) -> Fan:
    try:
        return _FAN_BUILDERS[name]()
    except KeyError:
        from .errors import InvalidInput

        raise InvalidInput(f"unknown catalog fan {name!r}", available=fan_names()) from None


def catalog_cones():
    """Representative cones, as (name, cone), for property sweeps."""
    out = [
        ("zero1", Cone(1, [])),
        ("halfline", Cone(1, [(1,)])),
        ("zero2", Cone(2, [])),
        ("quadrant", Cone(2, [(1, 0), (0, 1)])),
        ("ray2", Cone(2, [(1, 2)])),
        ("skew2", Cone(2, [(2, 1), (-1, 3)])),
        ("octant", Cone(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])),
        ("wedge3", Cone(3, [(1, 0, 0), (1, 2, 0), (1, 0, 3)])),
    ]
    return out


_BARCODES = {
    "basic": lambda: Barcode([bar(0, 1)]),
    "free": lambda: Barcode([bar(0, "inf")]),
    "pair": lambda: Barcode([bar(0, 2), bar(1, 3)]),
    "mixed": lambda: Barcode(
        [bar(0, 2), bar(Fraction(1, 2), "inf"), bar(1, 1, True, True), bar(3, 4, False, True)]
    ),
    "local": lambda: Barcode([bar("-inf", "inf", False, False), bar(0, 1)]),
}


def barcode_names():
    return sorted(_BARCODES)


def barcode(name: str) -> Barcode:
    try:
        return _BARCODES[name]()
    except KeyError:
        from .errors import InvalidInput

        raise InvalidInput(
            f"unknown catalog barcode {name!r}", available=barcode_names()
        ) from None


def _pres_interval01(field=None):
    return PresentationND(HALFLINE, [(0,)], [((1,), [1])], field)


def _pres_free(field=None):
    return PresentationND(HALFLINE, [(0,)], [], field)


def _pres_quadrant_origin(field=None):
    quad = Cone(2, [(1, 0), (0, 1)])
    return PresentationND(quad, [(0, 0)], [((1, 0), [1]), ((0, 1), [1])], field)


_PRESENTATIONS = {
    "interval01": _pres_interval01,
    "free1d": _pres_free,
    "quadrant-origin": _pres_quadrant_origin,
}


def presentation_names():
    return sorted(_PRESENTATIONS)


def presentation(name: str, field=None) -> PresentationND:
    try:
        return _PRESENTATIONS[name](field)
    except KeyError:
        from .errors import InvalidInput

        raise InvalidInput(
            f"unknown catalog presentation {name!r}", available=presentation_names()
        ) from None


def exact_triples(field=None):
    """Short exact triples (sub, total, quotient) of 1-d presentations.

    Each encodes 0 -> sub -> total -> quotient -> 0 at the barcode level,
    for the K0 additivity checks.
    """
    mk = PresentationND
    triples = [
        # [1,2) -> [0,2) -> [0,1)
        (
            mk(HALFLINE, [(1,)], [((2,), [1])], field),
            mk(HALFLINE, [(0,)], [((2,), [1])], field),
            mk(HALFLINE, [(0,)], [((1,), [1])], field),
        ),
        # [1,inf) -> [0,inf) -> [0,1)
        (
            mk(HALFLINE, [(1,)], [], field),
            mk(HALFLINE, [(0,)], [], field),
            mk(HALFLINE, [(0,)], [((1,), [1])], field),
        ),
        # direct sum: [0,1) -> [0,1)+[2,3) -> [2,3)
        (
            mk(HALFLINE, [(0,)], [((1,), [1])], field),
            mk(HALFLINE, [(0,), (2,)], [((1,), [1, 0]), ((3,), [0, 1])], field),
            mk(HALFLINE, [(2,)], [((3,), [1])], field),
        ),
    ]
    return triples


def geometric_towers():
    """Explicit towers (X_n, cofib f_n, colimit, cofib i_N) for the tower bound.

    Each entry: dict with keys 'stages', 'cofibers', 'colimit', 'tail_sum'
    where tail_sum(N) is the exact value of sum_{k >= N} d(cofib f_k, 0).
    """
    towers = []
    for birth, limit, ratio in [
        (Fraction(0), Fraction(2), Fraction(1, 2)),
        (Fraction(1), Fraction(3), Fraction(1, 2)),
        (Fraction(0), Fraction(1), Fraction(1, 3)),
        (Fraction(-1), Fraction(4), Fraction(2, 3)),
        (Fraction(1, 2), Fraction(5, 2), Fraction(1, 4)),
    ]:
        span = limit - birth
        depth = 6
        stages = []
        cofibers = []
        colim_cofibers = []
        for k in range(depth + 1):
            death = limit - span * ratio ** k
            stages.append(Barcode([bar(birth, death)]) if death > birth else Barcode([]))
            colim_cofibers.append(Barcode([bar(death, limit)]))
        for k in range(depth):
            lo = limit - span * ratio ** k
            hi = limit - span * ratio ** (k + 1)
            cofibers.append(Barcode([bar(max(lo, birth), hi)]))
        towers.append(
            {
                "stages": stages,
                "cofibers": cofibers,
                "colimit": Barcode([bar(birth, limit)]),
                "colim_cofibers": colim_cofibers,
                # sum_{k >= N} d(cofib f_k, 0) = span * ratio^N / 2, exactly
                "tail_sum": lambda N, span=span, ratio=ratio: span * ratio ** N / 2,
            }
        )
    return towers
