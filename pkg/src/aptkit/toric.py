"""Novikov toric combinatorics: charts, transitions, cocycles, boundary ideals.

Everything is carried at the cone/monoid level: a chart is the dual-cone
monoid of a fan cone, a transition is the localization datum produced by a
separating vector, and the cocycle condition reduces to exact cone
equalities plus a unit-monomial comparison on the triple overlap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyInterior, ImproperCone, InvalidInput, NotAdjacent, NotInDualCone
from .geometry import Cone, cone_sum, dual_cone, intersect, is_proper, separating_vector
from .polyhedra import OpenPolyhedron, minkowski_sum
from .rational import QVec, denominator_lcm, is_zero_vec, qvec, vneg


GRADING_RATIONAL = "Q"


def _check_grading(tag):
    if tag == GRADING_RATIONAL:
        return tag
    if isinstance(tag, int) and tag >= 1:
        return tag
    raise InvalidInput("grading tag must be 'Q' or a positive integer k for (1/k)Z^n")


@dataclass(frozen=True)
class Chart:
    """Monoid-algebra chart attached to the dual of a proper cone."""

    cone: Cone
    dual: Cone
    grading: object = GRADING_RATIONAL

    def monoid_contains(self, grade) -> bool:
        """Membership of a grade in dual-cone intersect grading group."""
        grade = qvec(grade)
        if not self.dual.contains(grade):
            return False
        if self.grading == GRADING_RATIONAL:
            return True
        return all((x * self.grading).denominator == 1 for x in grade)


def chart_of_cone(cone: Cone, grading=GRADING_RATIONAL) -> Chart:
    if not is_proper(cone):
        raise ImproperCone("charts are attached to proper cones")
    return Chart(cone, dual_cone(cone), _check_grading(grading))


@dataclass(frozen=True)
class Transition:
    """Localization datum gluing two charts over their common face."""

    source: Chart
    target: Chart
    m: QVec
    overlap: Cone


def transition_data(c1: Chart, c2: Chart) -> Transition:
    """Overlap monoid and separating monomial for two charts of one fan.

    Verifies the exact cone identities overlap = dual1 + ray(-m) and
    overlap = dual1 + dual2 before returning.
    """
    try:
        m = separating_vector(c1.cone, c2.cone)
    except Exception as exc:
        raise NotAdjacent(f"charts do not glue: {exc}") from exc
    tau = intersect(c1.cone, c2.cone)
    overlap = dual_cone(tau)
    if is_zero_vec(m):
        localized = c1.dual
    else:
        localized = cone_sum(c1.dual, Cone(c1.cone.dim, [vneg(m)]))
    if localized != overlap:
        raise NotAdjacent("overlap dual is not the expected localization")
    if cone_sum(c1.dual, c2.dual) != overlap:
        raise NotAdjacent("overlap dual is not the sum of the chart duals")
    return Transition(c1, c2, m, overlap)


def cocycle_check(c1: Chart, c2: Chart, c3: Chart) -> bool:
    """Triple-overlap consistency of the pairwise gluing data.

    Both iterated localizations must cut out the dual of the triple
    intersection, and the two composite localizing monomials must differ
    by a unit monomial of the triple overlap (a vector of its lineality).
    """
    tau123 = intersect(intersect(c1.cone, c2.cone), c3.cone)
    expected = dual_cone(tau123)

    def route(first: Chart, second: Chart, third: Chart):
        t12 = transition_data(first, second)
        mid = chart_of_cone(intersect(first.cone, second.cone), first.grading)
        t3 = transition_data(mid, third)
        cone_out = cone_sum(mid.dual, Cone(mid.cone.dim, [vneg(t3.m)])) if not is_zero_vec(
            t3.m
        ) else mid.dual
        total_m = tuple(a + b for a, b in zip(t12.m, t3.m))
        return cone_out, total_m

    cone_a, m_a = route(c1, c2, c3)
    cone_b, m_b = route(c1, c3, c2)
    if cone_a != expected or cone_b != expected:
        return False
    # unit monomials of the overlap monoid form its lineality part
    diff = tuple(a - b for a, b in zip(m_a, m_b))
    return expected.contains(diff) and expected.contains(vneg(diff))


@dataclass(frozen=True)
class AlmostContent:
    """Chart with its idempotent boundary ideal: the dual-cone interior."""

    chart: Chart
    interior_ideal_cone: OpenPolyhedron

    def __post_init__(self):
        if not boundary_idempotent_check(self):
            raise InvalidInput("interior ideal is not idempotent")


def almost_content(chart: Chart) -> AlmostContent:
    if not chart.dual.is_full_dim():
        raise EmptyInterior("boundary ideal needs a full-dimensional dual cone")
    return AlmostContent(chart, OpenPolyhedron.cone_interior(chart.dual))


def boundary_idempotent_check(content: AlmostContent) -> bool:
    """Exact Minkowski idempotency int + int = int of the ideal cone."""
    ideal = content.interior_ideal_cone
    return minkowski_sum(ideal, ideal) == ideal


def root_ladder_level(chart: Chart, grade) -> int:
    """Minimal k with the grade in dual-cone intersect (1/k)Z^n.

    Checks the divisibility-monotone ladder membership on the way out.
    """
    grade = qvec(grade)
    if not chart.dual.contains(grade):
        raise NotInDualCone("grade lies outside the chart's dual cone")
    level = denominator_lcm(grade)
    for multiple in (level, 2 * level, 3 * level):
        assert all((x * multiple).denominator == 1 for x in grade)
    # minimality: any admissible k is a common multiple of the coordinate
    # denominators, so maximal proper divisors of the lcm must fail
    n = level
    p = 2
    while p * p <= n:
        if n % p == 0:
            assert not all((x * (level // p)).denominator == 1 for x in grade)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        assert not all((x * (level // n)).denominator == 1 for x in grade)
    return level
