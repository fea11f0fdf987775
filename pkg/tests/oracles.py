"""Independent oracles used by the test suite.

Each oracle recomputes a quantity along a different algorithmic route than
the library: Fourier-Motzkin V-to-H conversion for duals, supporting
hyperplane sweeps for faces, brute-force matchings for the bottleneck
value, the order-complex derived limit for stalk ranks, point sampling
for Minkowski sums.  Expected values in the tests were produced (or are
recomputed live) by these, never by the code under test.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from aptkit import fm
from aptkit.barcodes import Barcode
from aptkit.geometry import Cone, Fan, dual_cone
from aptkit.interleaving import _expand, _kill_cost, _pair_cost
from aptkit.linalg import rank
from aptkit.polyhedra import OpenPolyhedron
from aptkit.rational import INF, dot, qvec, vadd, vneg, vscale, zero_vec


def fm_dual_generators(cone: Cone):
    """Dual-cone generators via Fourier-Motzkin V-to-H conversion.

    Eliminating the multipliers from {x = sum l_i g_i, l_i >= 0} leaves an
    H-description {<n, x> >= 0}; those normals generate the dual cone.
    """
    gens = cone.generators
    dim = cone.dim
    k = len(gens)
    nvars = dim + k
    cons = []
    for j in range(dim):
        coeffs = [Fraction(0)] * nvars
        coeffs[j] = Fraction(1)
        for i, g in enumerate(gens):
            coeffs[dim + i] = -g[j]
        cons.append((tuple(coeffs), Fraction(0), fm.EQ))
    for i in range(k):
        coeffs = [Fraction(0)] * nvars
        coeffs[dim + i] = Fraction(1)
        cons.append((tuple(coeffs), Fraction(0), fm.GE))
    projected = fm.project(cons, nvars, list(range(dim)))
    assert projected != fm._FALSE
    normals = []
    for coeffs, const, rel in projected:
        assert const == 0
        if rel == fm.EQ:
            normals.append(coeffs)
            normals.append(vneg(coeffs))
        else:
            normals.append(coeffs)
    return [n for n in normals if any(x != 0 for x in n)]


def faces_by_supporting_hyperplanes(cone: Cone):
    """All faces as cone n {<m, .> = 0} for m ranging over sums of subsets
    of the dual cone's generators."""
    dual = dual_cone(cone)
    candidates = set()
    gens = dual.generators
    for r in range(len(gens) + 1):
        for subset in combinations(gens, r):
            m = zero_vec(cone.dim)
            for g in subset:
                m = vadd(m, g)
            candidates.add(m)
    faces = {}
    for m in candidates:
        face = Cone.from_halfspaces(cone.dim, list(cone.halfspaces) + [m, vneg(m)])
        faces[face._key] = face
    return sorted(faces.values(), key=lambda f: (f.cone_dim, f._key))


def bottleneck_by_matching_enumeration(x: Barcode, y: Barcode):
    """Bottleneck value by exhaustive enumeration of partial matchings."""
    lines_x, bars_x = _expand(x)
    lines_y, bars_y = _expand(y)
    if lines_x != lines_y:
        return INF

    best = [INF]

    def assign(i, used, worst):
        if worst >= best[0]:
            return
        if i == len(bars_x):
            cost = worst
            for j in range(len(bars_y)):
                if j not in used:
                    cost = max(cost, _kill_cost(bars_y[j]))
                    if cost >= best[0]:
                        return
            best[0] = min(best[0], cost)
            return
        kill = _kill_cost(bars_x[i])
        if kill != INF:
            assign(i + 1, used, max(worst, kill))
        for j in range(len(bars_y)):
            if j in used:
                continue
            cost = _pair_cost(bars_x[i], bars_y[j])
            if cost == INF:
                continue
            assign(i + 1, used | {j}, max(worst, cost))

    assign(0, frozenset(), Fraction(0))
    return best[0]


def order_complex_stalk_ranks(fan: Fan, point) -> dict:
    """Betti numbers of the order complex of the cones containing a point.

    This computes the derived limit of the stalk diagram over the fan
    poset by the simplicial (co)chain complex on strict face chains, a
    route entirely independent of the cellular incidence-sign build.
    """
    point = qvec(point)
    members = [i for i, c in enumerate(fan.cones) if c.contains(point)]
    if not members:
        return {}
    local = {i: k for k, i in enumerate(members)}
    rel = set()
    for (i, j) in fan.face_rel:
        if i != j and i in local and j in local:
            rel.add((local[i], local[j]))  # i is a proper face of j
    chains = {0: [(k,) for k in range(len(members))]}
    p = 0
    while chains[p]:
        extended = []
        for chain in chains[p]:
            last = chain[-1]
            for k in range(len(members)):
                if (k, last) in rel:
                    extended.append(chain + (k,))
        p += 1
        chains[p] = extended
    max_p = p - 1
    index = {}
    for d in range(max_p + 1):
        for i, ch in enumerate(chains[d]):
            index[ch] = i
    ranks = {0: 0}
    for d in range(max_p):
        rows = []
        for ch in chains[d + 1]:
            row = [Fraction(0)] * len(chains[d])
            for drop in range(d + 2):
                sub = ch[:drop] + ch[drop + 1 :]
                row[index[sub]] += Fraction(-1) ** drop
            rows.append(row)
        ranks[d + 1] = rank(rows, len(chains[d]))
    ranks[max_p + 1] = 0
    betti = {}
    for d in range(max_p + 1):
        b = len(chains[d]) - ranks[d] - ranks[d + 1]
        if b:
            betti[d] = b
    return betti


def decomposes_in_sum(z, p: OpenPolyhedron, other: OpenPolyhedron) -> bool:
    """FM feasibility of z = x + y with x in p, y in other."""
    n = p.dim
    cons = [(nrm, off, fm.GT) for nrm, off in p.constraints]
    for nrm, off in other.constraints:
        cons.append((vneg(nrm), off + dot(nrm, z), fm.GT))
    return fm.feasible(cons, n)


def check_minkowski_by_sampling(p: OpenPolyhedron, other: OpenPolyhedron, result: OpenPolyhedron, rng):
    """Point-sampling check of a Minkowski sum, both directions."""
    if p.is_empty or other.is_empty:
        assert result.is_empty
        return
    for _ in range(5):
        a = perturbed_point(p, rng)
        b = perturbed_point(other, rng)
        assert result.contains(vadd(a, b))
    for _ in range(5):
        z = perturbed_point(result, rng)
        assert decomposes_in_sum(z, p, other)


def perturbed_point(poly: OpenPolyhedron, rng):
    """A pseudorandom exact rational point of a nonempty open polyhedron."""
    base = poly.sample_point()
    for _ in range(10):
        jitter = tuple(
            Fraction(rng.randint(-3, 3), rng.randint(4, 9)) for _ in range(poly.dim)
        )
        candidate = vadd(base, vscale(Fraction(1, 4), jitter))
        if poly.contains(candidate):
            return candidate
    return base
