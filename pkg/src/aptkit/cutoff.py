"""Combinatorial substrate of the microlocal cut-off theorem.

Covers the gamma-topology predicates and basis witnesses, the fan open
sets Delta(d) with their Minkowski identity, dual-cone openness, the
star-complex stalk homology of complete fans, and indicator convolution.

Stalk homology builds the cellular (Borel-Moore) chain complex of the
polyhedral decomposition a complete fan puts on the ambient space: one
cell per cone, cell degree = cone dimension, incidence signs read off
from fixed span orientations with an inward transversal.  Restricting to
the cones containing the query point realizes the relative pair of the
closed star against its boundary; d.d = 0 is asserted exactly per run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import fm
from .errors import (
    EmptyInterior,
    IncompleteFan,
    InvalidInput,
    NotGammaOpen,
    PointNotInSet,
)
from .geometry import Cone, Fan, dual_cone, faces_of
from .linalg import coords_in_basis, det, rank_over, row_space_basis
from .polyhedra import OpenPolyhedron, minkowski_sum, minkowski_with_relint_cone
from .rational import INF, dot, l1norm, q, qvec, vadd, vscale, vsub, zero_vec


def is_gamma_open(u: OpenPolyhedron, gamma: Cone) -> bool:
    """U + gamma = U, decided exactly: every irredundant normal lies in gamma's dual."""
    if u.dim != gamma.dim:
        raise InvalidInput("ambient dimension mismatch")
    if u.is_empty:
        return True
    return all(
        all(dot(n, g) >= 0 for g in gamma.generators) for n, _ in u.constraints
    )


def is_theta_dual_open(u: OpenPolyhedron, theta: Cone) -> bool:
    """U + theta^dual = U."""
    return is_gamma_open(u, dual_cone(theta))


def gamma_basis_witness(u: OpenPolyhedron, x, gamma: Cone):
    """A shift a with x in int(gamma) - a, a subset of u; verified exactly.

    Construction: an exact rational radius bound r with the l1-norm of the
    constraint normals, an interior point of gamma scaled below r, and
    a = d - x.  Raises PointNotInSet / NotGammaOpen / EmptyInterior.
    """
    x = qvec(x)
    if len(x) != u.dim or gamma.dim != u.dim:
        raise InvalidInput("ambient dimension mismatch")
    if not gamma.is_full_dim():
        raise EmptyInterior("gamma has empty interior (its dual cone is not proper)")
    if not u.contains(x):
        raise PointNotInSet("witness point is not in the set")
    if not is_gamma_open(u, gamma):
        raise NotGammaOpen("the set is not gamma-open")
    if u.constraints:
        slacks = [(dot(n, x) + d) / l1norm(n) for n, d in u.constraints]
        radius = min(slacks)
    else:
        radius = Fraction(1)
    interior = gamma.interior_point()
    if all(c == 0 for c in interior):
        d_point = zero_vec(u.dim)
    else:
        d_point = vscale(radius / (2 * l1norm(interior)), interior)
    a = vsub(d_point, x)
    # exact verification of both memberships
    shifted_interior = OpenPolyhedron.cone_interior(gamma).translate(
        tuple(-c for c in a)
    )
    assert shifted_interior.contains(x)
    assert shifted_interior.is_subset_of(u)
    return a


def delta_polytope(theta: Fan, offsets) -> OpenPolyhedron:
    """The fan open set: one strict halfspace per ray with a finite offset.

    ``offsets`` maps ray ids to rationals or +inf (missing entries count
    as +inf, meaning the constraint is omitted); primitive ray generators
    are the constraint normals.
    """
    constraints = []
    known = dict(offsets)
    ray_ids = {rid for rid, _ in theta.rays()}
    for key in known:
        if key not in ray_ids:
            raise InvalidInput(f"offset given for unknown ray {key!r}")
    for rid, generator in theta.rays():
        d = known.get(rid, INF)
        if d == INF:
            continue
        constraints.append((generator, q(d)))
    return OpenPolyhedron(theta.dim, constraints)


def restrict_offsets(theta: Fan, offsets, cone: Cone):
    """The offset vector d(cone): keep offsets of rays that are faces of cone."""
    out = {}
    for rid, generator in theta.rays():
        if cone.contains(generator) and rid in offsets and offsets[rid] != INF:
            out[rid] = offsets[rid]
    return out


def tighten_offsets(theta: Fan, offsets) -> dict:
    """Support-tight offsets describing the same fan open set.

    Replaces every offset by the exact support value of Delta(d) in the
    ray direction (infinite when unbounded).  The set is unchanged, but
    redundant slack is removed; the cut-off Minkowski identity holds for
    tight offsets, and can genuinely fail when a kept constraint carries
    slack that the dropped constraints used to absorb.
    """
    base = delta_polytope(theta, offsets)
    if base.is_empty:
        return dict(offsets)
    out = {}
    system = base.system()
    n = theta.dim
    for rid, generator in theta.rays():
        # range of <m, u_rho> over the set: one fresh variable t
        cons = [(coeffs + (Fraction(0),), const, rel) for coeffs, const, rel in system]
        cons.append((tuple(-x for x in generator) + (Fraction(1),), Fraction(0), fm.EQ))
        rng = fm.interval_of_var(cons, n + 1, n)
        assert rng != fm._FALSE
        lo = rng[0]
        if lo is not None:
            out[rid] = -lo
    return out


def minkowski_with_cone(u: OpenPolyhedron, cone: Cone) -> OpenPolyhedron:
    """Exact H-representation of u + relint(cone).

    For the dual cone of a fan member and a support-tight Delta(d) this
    drops exactly the constraints whose normals are not rays of the
    member (the cut-off Minkowski identity); the computation itself is an
    exact FM projection, so the identity is a theorem the tests verify,
    not an assumption baked in.
    """
    from .errors import EmptyInput

    if u.is_empty:
        raise EmptyInput("Minkowski sum with an empty set")
    return minkowski_with_relint_cone(u, cone)


@dataclass(frozen=True)
class StalkReport:
    point: tuple
    betti: dict

    def total_rank(self) -> int:
        return sum(self.betti.values())


def _orientation_basis(cone: Cone):
    """Ordered basis of the cone's span: canonical rref rows."""
    return list(row_space_basis(list(cone.rays), cone.dim))


def _incidence_sign(cone: Cone, facet: Cone) -> int:
    """Sign comparing (facet basis, inward vector) with the cone's basis.

    The inward transversal is the sum of the cone's rays outside the facet,
    which lies in the cone strictly off the facet's span.
    """
    basis_c = _orientation_basis(cone)
    basis_f = _orientation_basis(facet)
    inward = zero_vec(cone.dim)
    for r in cone.rays:
        if not facet.contains(r):
            inward = vadd(inward, r)
    rows = []
    for v in basis_f + [inward]:
        coords = coords_in_basis(basis_c, v)
        assert coords is not None
        rows.append(coords)
    d = det(rows)
    assert d != 0
    return 1 if d > 0 else -1


def star_stalk_homology(sigma_fan: Fan, point, field=None) -> StalkReport:
    """Betti ranks of the stalk complex of the fan limit diagram at a point.

    The total rank is 1 for every point of a complete fan; that is the
    star-complex property this routine exercises.  Reported
    degrees follow the cell dimensions (cone dimensions) of the complex.
    """
    if sigma_fan.dim < 1:
        raise InvalidInput("ambient dimension must be at least 1")
    if not sigma_fan.is_complete():
        raise IncompleteFan("stalk homology is computed for complete fans")
    point = qvec(point)
    cells = [c for c in sigma_fan.cones if c.contains(point)]
    by_degree: dict = {}
    for c in cells:
        by_degree.setdefault(c.cone_dim, []).append(c)
    for deg in by_degree:
        by_degree[deg].sort(key=lambda c: c._key)
    index = {
        c._key: (deg, i) for deg, cones in by_degree.items() for i, c in enumerate(cones)
    }
    # boundary matrices: rows = degree d-1 cells, cols = degree d cells
    boundary = {}
    for deg, cones in sorted(by_degree.items()):
        lower = by_degree.get(deg - 1, [])
        matrix = [[Fraction(0)] * len(cones) for _ in lower]
        for col, cone in enumerate(cones):
            for face in faces_of(cone):
                if face.cone_dim == cone.cone_dim - 1 and face._key in index:
                    sign = _incidence_sign(cone, face)
                    matrix[index[face._key][1]][col] = Fraction(sign)
        boundary[deg] = matrix
    _assert_chain_complex(by_degree, boundary)
    betti = {}
    for deg, cones in by_degree.items():
        dim_d = len(cones)
        rank_out = _matrix_rank(boundary.get(deg, []), dim_d, field)
        above = by_degree.get(deg + 1, [])
        rank_in = _matrix_rank(boundary.get(deg + 1, []), len(above), field)
        b = dim_d - rank_out - rank_in
        if b:
            betti[deg] = b
    return StalkReport(point, betti)


def _matrix_rank(matrix, ncols, field):
    if not matrix or ncols == 0:
        return 0
    return rank_over(matrix, ncols, field)


def _assert_chain_complex(by_degree, boundary):
    for deg in sorted(by_degree):
        if deg - 1 not in by_degree or deg + 1 not in by_degree:
            continue
        lower = boundary.get(deg, [])
        upper = boundary.get(deg + 1, [])
        if not lower or not upper:
            continue
        rows = len(lower)
        mid = len(by_degree[deg])
        cols = len(by_degree[deg + 1])
        for i in range(rows):
            for j in range(cols):
                s = sum((lower[i][k] * upper[k][j] for k in range(mid)), Fraction(0))
                assert s == 0, "incidence signs failed d.d = 0"


def stratum_points(sigma_fan: Fan):
    """One canonical relative-interior point per cone, plus one extra
    generically weighted point per maximal cone."""
    points = []
    for c in sigma_fan.cones:
        if c.is_zero():
            points.append(zero_vec(sigma_fan.dim))
        else:
            p = zero_vec(sigma_fan.dim)
            for r in c.rays:
                p = vadd(p, r)
            points.append(p)
    for i in sigma_fan.maximal_indices():
        c = sigma_fan.cones[i]
        if c.is_zero():
            continue
        p = zero_vec(sigma_fan.dim)
        for k, r in enumerate(c.rays):
            p = vadd(p, vscale(k + 1, r))
        points.append(p)
    # dedupe, preserving order
    seen = set()
    out = []
    for p in points:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def convolution_unit_check(sigma_fan: Fan, field=None):
    """Total stalk rank 1 at one representative point per stratum.

    Returns (ok, strata_checked).
    """
    points = stratum_points(sigma_fan)
    for p in points:
        report = star_stalk_homology(sigma_fan, p, field)
        if report.total_rank() != 1:
            return False, len(points)
    return True, len(points)


def indicator_convolve(a: OpenPolyhedron, b: OpenPolyhedron, shift_a: int = 0, shift_b: int = 0):
    """Convolution of shifted indicator sheaves of open convex sets.

    The stalk of the convolution at x is the compactly supported cohomology
    of an open convex fiber, contributing rank one in degree n, so the
    result is the Minkowski sum with total shift shift_a + shift_b - n.
    Zero convolves to zero (returned as the empty polyhedron, shift 0).
    """
    if a.dim != b.dim:
        raise InvalidInput("ambient dimension mismatch")
    if a.is_empty or b.is_empty:
        return OpenPolyhedron.empty(a.dim), 0
    return minkowski_sum(a, b), shift_a + shift_b - a.dim
