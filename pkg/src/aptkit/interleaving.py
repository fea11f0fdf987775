"""Interleaving distance on barcodes, with certificates.

The distance is the infimum of max(a, b) over (a, b)-isomorphisms, which
for barcodes coincides with the classical bottleneck value; that
identification is classical persistence theory, so it is cross-validated
in the tests by an exhaustive matching oracle rather than assumed.  The
computation runs the standard route: binary search over the finite set of
candidate values with exact bipartite matching feasibility.

Decorations are ignored by the distance: inputs are almostized first,
consistent with almost-isomorphic barcodes being at distance zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .barcodes import (
    Barcode,
    DecoratedInterval,
    almostize,
    classify_shape,
    interval,
)
from .errors import InvalidInput, UnsupportedShape
from .rational import INF, NEG_INF, q


def _normal_bars(b: Barcode):
    """Almostize, check degree-0 and shapes; split (lines, rays, finite bars).

    Bars are expanded to unit multiplicity so matchings index single bars.
    """
    lines = 0
    rays = []
    finite = []
    for item in almostize(b).bars:
        if item.hdegree != 0:
            raise UnsupportedShape("interleaving distance expects degree-0 barcodes")
        shape = classify_shape(item.interval)
        if shape == "line":
            lines += item.multiplicity
        elif shape == "ray":
            rays.extend([item.interval] * item.multiplicity)
        else:
            finite.extend([item.interval] * item.multiplicity)
    return lines, rays, finite


def _pair_cost(iv1: DecoratedInterval, iv2: DecoratedInterval):
    """Bottleneck cost of matching two bars: max endpoint displacement."""
    left = abs(iv1.left - iv2.left)
    if iv1.right == INF and iv2.right == INF:
        right = Fraction(0)
    elif iv1.right == INF or iv2.right == INF:
        return INF
    else:
        right = abs(iv1.right - iv2.right)
    return max(left, right)


def _kill_cost(iv: DecoratedInterval):
    """Cost of interleaving a bar with zero: half its length (inf for rays)."""
    if iv.right == INF:
        return INF
    return iv.length() / 2


def _expand(b: Barcode):
    lines, rays, finite = _normal_bars(b)
    return lines, rays + finite


def _perfect_matching(allowed, n_left, n_right):
    """Kuhn's augmenting paths; returns matching dict left->right or None."""
    if n_left != n_right:
        return None
    match_l = {}
    match_r = {}

    def augment(u, seen):
        for v in allowed[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match_r or augment(match_r[v], seen):
                match_l[u] = v
                match_r[v] = u
                return True
        return False

    for u in range(n_left):
        if not augment(u, set()):
            return None
    return match_l


def _feasible(bars_x, bars_y, eps):
    """Is there an interleaving of the multisets at scale eps?

    Classical square construction: left = X-bars plus one diagonal slot per
    Y-bar, right = Y-bars plus one diagonal slot per X-bar.  Returns the
    matching (x index -> y index or None) or None.
    """
    nx, ny = len(bars_x), len(bars_y)
    size = nx + ny
    allowed = [[] for _ in range(size)]
    for i, ivx in enumerate(bars_x):
        for j, ivy in enumerate(bars_y):
            if _pair_cost(ivx, ivy) <= eps:
                allowed[i].append(j)
        if _kill_cost(ivx) <= eps:
            allowed[i].append(ny + i)
    for j in range(ny):
        diag = nx + j
        if _kill_cost(bars_y[j]) <= eps:
            allowed[diag].append(j)
        for i in range(nx):
            allowed[diag].append(ny + i)
    matching = _perfect_matching(allowed, size, size)
    if matching is None:
        return None
    return {i: (matching[i] if matching[i] < ny else None) for i in range(nx)}


def _candidates(bars_x, bars_y):
    values = {Fraction(0)}
    for ivx in bars_x:
        for ivy in bars_y:
            c = _pair_cost(ivx, ivy)
            if c != INF:
                values.add(c)
    for iv in bars_x + bars_y:
        c = _kill_cost(iv)
        if c != INF:
            values.add(c)
    return sorted(values)


def interleaving_distance(x: Barcode, y: Barcode):
    """Exact inf over max(a, b) of (a, b)-isomorphisms; +inf when none exists."""
    lines_x, bars_x = _expand(x)
    lines_y, bars_y = _expand(y)
    if lines_x != lines_y:
        return INF
    nx_rays = sum(1 for iv in bars_x if iv.right == INF)
    ny_rays = sum(1 for iv in bars_y if iv.right == INF)
    if nx_rays != ny_rays:
        return INF
    candidates = _candidates(bars_x, bars_y)
    lo, hi = 0, len(candidates) - 1
    if _feasible(bars_x, bars_y, candidates[lo]) is not None:
        return candidates[lo]
    if _feasible(bars_x, bars_y, candidates[hi]) is None:
        return INF
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _feasible(bars_x, bars_y, candidates[mid]) is not None:
            hi = mid
        else:
            lo = mid
    return candidates[hi]


def distance_to_zero(x: Barcode):
    """d(x, 0): half the maximal bar length, +inf for any infinite bar."""
    lines, bars = _expand(x)
    if lines:
        return INF
    worst = Fraction(0)
    for iv in bars:
        c = _kill_cost(iv)
        if c == INF:
            return INF
        worst = max(worst, c)
    return worst


@dataclass(frozen=True)
class InterleavingCertificate:
    """Bar matchings realizing an (a, b)-isomorphism.

    ``forward`` maps expanded X-bar indices to Y-bar indices (None = killed),
    ``backward`` the reverse.  Bars are expanded by multiplicity in canonical
    barcode order; lines are listed after rays and finite bars.
    """

    a: object
    b: object
    forward: tuple
    backward: tuple


def _expanded_intervals(b: Barcode):
    lines, bars = _expand(b)
    return bars + [interval("-inf", "inf", False, False)] * lines


def certificate_for(x: Barcode, y: Barcode, value=None) -> InterleavingCertificate:
    """Build a certificate at (d, d) for d = interleaving_distance(x, y)."""
    if value is None:
        value = interleaving_distance(x, y)
    if value == INF:
        raise InvalidInput("no finite interleaving exists")
    bars_x = _expanded_intervals(x)
    bars_y = _expanded_intervals(y)
    real_x = [iv for iv in bars_x if classify_shape(iv) != "line"]
    real_y = [iv for iv in bars_y if classify_shape(iv) != "line"]
    matching = _feasible(real_x, real_y, value)
    assert matching is not None
    forward = []
    backward = [None] * len(bars_y)
    for i in range(len(bars_x)):
        if i < len(real_x):
            j = matching[i]
            if j is not None and not (
                _canonical_map_exists(real_x[i], real_y[j], value)
                and _canonical_map_exists(real_y[j], real_x[i], value)
            ):
                # both bars are 2*value-torsion in this case: kill instead
                j = None
            forward.append(j)
            if j is not None:
                backward[j] = i
        else:
            j = len(real_y) + (i - len(real_x))
            forward.append(j)
            backward[j] = i
    return InterleavingCertificate(value, value, tuple(forward), tuple(backward))


def _canonical_map_exists(src: DecoratedInterval, dst: DecoratedInterval, shift_by) -> bool:
    """Nonzero module map src -> T_shift(dst)?"""
    moved = dst.translate(q(shift_by))
    left_ok = moved.left == NEG_INF or moved.left <= src.left
    return bool(left_ok and src.left < moved.right and moved.right <= src.right)


def _tau_support(iv: DecoratedInterval, s):
    return iv.intersect(iv.translate(q(s)))


def verify_interleaving(x: Barcode, y: Barcode, cert: InterleavingCertificate) -> bool:
    """Check both composite identities of an (a, b)-isomorphism exactly.

    Per matched pair the morphisms are the canonical interval maps; the
    composite through Y must have exactly the support of tau_{a+b} on each
    X-bar, and symmetrically.  Unmatched bars need tau_{a+b} to vanish.
    """
    a, b = q(cert.a), q(cert.b)
    if a < 0 or b < 0:
        raise InvalidInput("certificate shifts must be nonnegative")
    bars_x = _expanded_intervals(x)
    bars_y = _expanded_intervals(y)
    if len(cert.forward) != len(bars_x) or len(cert.backward) != len(bars_y):
        return False
    s = a + b

    def side_ok(bars_src, bars_dst, fwd, bwd, first_shift):
        for i, iv in enumerate(bars_src):
            tau = _tau_support(iv, s)
            j = fwd[i]
            if j is None:
                if tau is not None:
                    return False
                continue
            if j < 0 or j >= len(bars_dst):
                return False
            ivj = bars_dst[j]
            if not _canonical_map_exists(iv, ivj, first_shift):
                return False
            i2 = bwd[j]
            if i2 is None:
                # second leg is zero, so the composite column vanishes
                if tau is not None:
                    return False
                continue
            # composite lands in bar i2: support = src n T_first(dst) n T_s(target)
            comp = iv.intersect(ivj.translate(first_shift))
            if comp is not None:
                comp = comp.intersect(bars_src[i2].translate(s))
            if i2 != i:
                # off-diagonal component of the composite must be the zero map,
                # and the diagonal one (also zero) must still equal tau
                if comp is not None or tau is not None:
                    return False
                continue
            if (comp is None) != (tau is None):
                return False
            if comp is not None and comp != tau:
                return False
        return True

    if not side_ok(bars_x, bars_y, cert.forward, cert.backward, a):
        return False
    if not side_ok(bars_y, bars_x, cert.backward, cert.forward, b):
        return False
    return True
