"""Exact rational scalars, vectors and grades.

All geometry and grading in this library is computed over Q with
``fractions.Fraction``; no floats ever enter a computation except the two
infinite sentinels ``math.inf`` / ``-math.inf`` used for grades (bar
endpoints, polytope offsets, distances).  Comparisons between ``Fraction``
and the sentinels are exact, so mixed sorting and interval logic stay exact.

Vectors (``QVec``) are plain tuples of ``Fraction``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import gcd

INF = math.inf
NEG_INF = -math.inf

QVec = tuple  # tuple[Fraction, ...]


def q(x) -> Fraction:
    """Coerce ints, strings like ``"3/4"``, and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def parse_grade(x):
    """Parse a grade: rational, or the strings ``"inf"`` / ``"-inf"``."""
    if x == INF or x == NEG_INF:
        return x
    if isinstance(x, str):
        s = x.strip()
        if s in ("inf", "+inf", "Infinity"):
            return INF
        if s in ("-inf", "-Infinity"):
            return NEG_INF
    return q(x)


def format_grade(g) -> str:
    if g == INF:
        return "inf"
    if g == NEG_INF:
        return "-inf"
    return str(q(g))


def is_finite(g) -> bool:
    return g != INF and g != NEG_INF


def qvec(xs) -> QVec:
    return tuple(q(x) for x in xs)


def format_qvec(v) -> list:
    return [str(x) for x in v]


def zero_vec(n: int) -> QVec:
    return (Fraction(0),) * n


def dot(u: QVec, v: QVec) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u: QVec, v: QVec) -> QVec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: QVec, v: QVec) -> QVec:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: QVec) -> QVec:
    return tuple(-a for a in u)


def vscale(c, u: QVec) -> QVec:
    c = q(c)
    return tuple(c * a for a in u)


def is_zero_vec(u: QVec) -> bool:
    return all(a == 0 for a in u)


def l1norm(u: QVec) -> Fraction:
    return sum((abs(a) for a in u), Fraction(0))


def denominator_lcm(u: QVec) -> int:
    m = 1
    for a in u:
        d = q(a).denominator
        m = m * d // gcd(m, d)
    return m


def primitive(u: QVec) -> QVec:
    """Positive rescaling of a nonzero vector to integral entries with content 1."""
    if is_zero_vec(u):
        raise ValueError("zero vector has no primitive form")
    m = denominator_lcm(u)
    ints = [int(a * m) for a in u]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    return tuple(Fraction(a, g) for a in ints)


def sign_normalized(u: QVec) -> QVec:
    """Primitive form with the first nonzero entry positive (for line directions)."""
    p = primitive(u)
    for a in p:
        if a != 0:
            return p if a > 0 else vneg(p)
    raise ValueError("zero vector")
