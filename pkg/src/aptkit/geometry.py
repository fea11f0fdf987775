"""Exact rational polyhedral cones and fans.

A :class:`Cone` carries both representations at all times: the canonical
V-representation (extreme rays plus a lineality basis) and the canonical
minimal H-representation (facet normals plus span equalities), computed
eagerly at construction so values are immutable and safely shareable.

The conversion engine enumerates extreme rays of an H-cone by brute-force
kernel enumeration over (rank-1)-subsets of the normals, after splitting
off the lineality space.  At desk scale (dimension <= 4, a handful of
normals) this is exact, simple and fast; duplicates collapse to canonical
primitive integral rays.

Module-level caches memoize the conversion, duals and face lists keyed by
canonical content, so concurrent use can at worst recompute and overwrite
an entry with an equal value; no cone is ever mutated after construction.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import fm
from .errors import BadIntersection, ImproperCone, InvalidInput, MissingFace, NotSeparable
from .linalg import kernel_basis, rank, row_space_basis
from .rational import (
    QVec,
    dot,
    is_zero_vec,
    primitive,
    qvec,
    vadd,
    vneg,
    vscale,
    zero_vec,
)


_HREP_CACHE: dict = {}


def _rays_from_halfspaces(normals, dim):
    """Extreme rays and lineality of {x : <n, x> >= 0 for all n}.

    Returns ``(lineality_basis, rays)``, both canonical: the lineality basis
    is the sign-normalized kernel basis, rays are primitive and sorted.
    Results are memoized on the normalized input; cones are immutable, so
    the cache is shareable.
    """
    normals = [primitive(n) for n in normals if not is_zero_vec(n)]
    normals = sorted(set(normals))
    cache_key = (dim, tuple(normals))
    cached = _HREP_CACHE.get(cache_key)
    if cached is not None:
        return list(cached[0]), list(cached[1])
    lin = kernel_basis(normals, dim)
    if not normals:
        return lin, []
    basis = row_space_basis(normals, dim)
    r = len(basis)
    if r == 0:
        return lin, []
    reduced = [tuple(dot(n, w) for w in basis) for n in normals]
    found = set()
    for subset in combinations(range(len(reduced)), r - 1):
        ker = kernel_basis([reduced[i] for i in subset], r)
        if len(ker) != 1:
            continue
        v = ker[0]
        if all(dot(row, v) >= 0 for row in reduced):
            found.add(primitive(v))
        elif all(dot(row, v) <= 0 for row in reduced):
            found.add(primitive(vneg(v)))
    rays = set()
    for v in found:
        ray = zero_vec(dim)
        for coef, w in zip(v, basis):
            ray = vadd(ray, vscale(coef, w))
        rays.add(primitive(ray))
    rays = sorted(rays)
    _HREP_CACHE[cache_key] = (tuple(lin), tuple(rays))
    return lin, rays


class Cone:
    """Finitely generated rational convex cone with cached dual data."""

    __slots__ = ("dim", "rays", "lineality", "facet_normals", "span_normals", "_key")

    def __init__(self, dim: int, generators):
        gens = []
        for g in generators:
            g = qvec(g)
            if len(g) != dim:
                raise InvalidInput(f"generator {g} has wrong dimension (expected {dim})")
            if not is_zero_vec(g):
                gens.append(primitive(g))
        gens = sorted(set(gens))
        # H-representation: the dual cone {v : <v, g> >= 0} has the generators
        # as normals; its rays are our facet normals, its lineality our span
        # equalities.
        span_normals, facet_normals = _rays_from_halfspaces(gens, dim)
        halfspaces = list(facet_normals)
        for e in span_normals:
            halfspaces.append(e)
            halfspaces.append(vneg(e))
        lin, rays = _rays_from_halfspaces(halfspaces, dim)
        for g in gens:
            if not all(dot(h, g) >= 0 for h in halfspaces):
                raise AssertionError("H-representation does not contain a generator")
        self.dim = dim
        self.rays = tuple(rays)
        self.lineality = tuple(lin)
        self.facet_normals = tuple(facet_normals)
        self.span_normals = tuple(span_normals)
        self._key = (dim, self.rays, self.lineality)

    @classmethod
    def from_halfspaces(cls, dim: int, normals) -> "Cone":
        lin, rays = _rays_from_halfspaces([qvec(n) for n in normals], dim)
        gens = list(rays)
        for e in lin:
            gens.append(e)
            gens.append(vneg(e))
        return cls(dim, gens)

    @property
    def generators(self):
        gens = list(self.rays)
        for e in self.lineality:
            gens.append(e)
            gens.append(vneg(e))
        if not gens:
            gens.append(zero_vec(self.dim))
        return tuple(gens)

    @property
    def halfspaces(self):
        hs = list(self.facet_normals)
        for e in self.span_normals:
            hs.append(e)
            hs.append(vneg(e))
        return tuple(hs)

    @property
    def cone_dim(self) -> int:
        return self.dim - len(self.span_normals)

    def is_full_dim(self) -> bool:
        return not self.span_normals

    def is_zero(self) -> bool:
        return not self.rays and not self.lineality

    def contains(self, x) -> bool:
        """H-representation membership: every halfspace inequality holds."""
        x = qvec(x)
        return all(dot(h, x) >= 0 for h in self.halfspaces)

    def contains_vrep(self, x) -> bool:
        """V-representation membership: LP feasibility of nonnegative combinations."""
        x = qvec(x)
        gens = self.generators
        k = len(gens)
        cons = []
        for j in range(self.dim):
            cons.append((tuple(g[j] for g in gens), -x[j], fm.EQ))
        for i in range(k):
            coeffs = [Fraction(0)] * k
            coeffs[i] = Fraction(1)
            cons.append((tuple(coeffs), Fraction(0), fm.GE))
        return fm.feasible(cons, k)

    def relint_contains(self, x) -> bool:
        """Relative interior membership: equalities on the span, strict on facets."""
        x = qvec(x)
        return all(dot(e, x) == 0 for e in self.span_normals) and all(
            dot(f, x) > 0 for f in self.facet_normals
        )

    def interior_point(self):
        """Sum of extreme rays: interior point iff the cone is full-dimensional."""
        p = zero_vec(self.dim)
        for r in self.rays:
            p = vadd(p, r)
        return p

    def __eq__(self, other):
        return isinstance(other, Cone) and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Cone(dim={self.dim}, rays={len(self.rays)}, lineality={len(self.lineality)})"


_DUAL_CACHE: dict = {}
_FACES_CACHE: dict = {}


def dual_cone(c: Cone) -> Cone:
    """Polar dual {v : <v, w> >= 0 for all w in c}."""
    cached = _DUAL_CACHE.get(c._key)
    if cached is None:
        cached = Cone(c.dim, c.halfspaces)
        _DUAL_CACHE[c._key] = cached
    return cached


def intersect(c1: Cone, c2: Cone) -> Cone:
    if c1.dim != c2.dim:
        raise InvalidInput("ambient dimension mismatch")
    return Cone.from_halfspaces(c1.dim, c1.halfspaces + c2.halfspaces)


def cone_sum(c1: Cone, c2: Cone) -> Cone:
    """Minkowski sum of cones (join): generated by both generator sets."""
    if c1.dim != c2.dim:
        raise InvalidInput("ambient dimension mismatch")
    return Cone(c1.dim, c1.generators + c2.generators)


def is_proper(c: Cone) -> bool:
    """True iff c meets -c only in the origin.

    Both characterizations are evaluated and cross-asserted: triviality of
    the lineality space, and full-dimensionality of the dual certified by an
    exact interior point (the sum of the dual's extreme rays).
    """
    no_lines = not c.lineality
    dual_full_dim = rank(dual_cone(c).generators, c.dim) == c.dim
    # interior-point construction: sum of dual rays is strict on every facet
    # of the dual (the extreme rays of c) iff the dual is full-dimensional
    p = dual_cone(c).interior_point()
    interior_ok = no_lines and all(dot(p, g) > 0 for g in c.rays)
    assert no_lines == dual_full_dim == interior_ok
    return no_lines


def faces_of(c: Cone):
    """All faces of a proper cone, from {0} up to the cone itself.

    Every face of a polyhedral cone is the intersection with the supporting
    hyperplanes of a subset of facets, so we enumerate facet subsets and
    deduplicate canonically.
    """
    if not is_proper(c):
        raise ImproperCone("faces are only enumerated for proper cones")
    cached = _FACES_CACHE.get(c._key)
    if cached is not None:
        return list(cached)
    seen = {}
    normals = list(c.halfspaces)
    for k in range(len(c.facet_normals) + 1):
        for subset in combinations(c.facet_normals, k):
            extra = [vneg(n) for n in subset]
            face = Cone.from_halfspaces(c.dim, normals + extra)
            seen.setdefault(face._key, face)
    faces = sorted(seen.values(), key=lambda f: (f.cone_dim, f._key))
    _FACES_CACHE[c._key] = tuple(faces)
    return faces


class Fan:
    """Validated fan: cones, ids, and the face relation."""

    __slots__ = ("dim", "cones", "ids", "face_rel", "_index")

    def __init__(self, dim, cones, ids, face_rel):
        self.dim = dim
        self.cones = tuple(cones)
        self.ids = tuple(ids)
        self.face_rel = frozenset(face_rel)
        self._index = {c._key: i for i, c in enumerate(self.cones)}

    def index_of(self, cone: Cone):
        return self._index.get(cone._key)

    def cone_by_id(self, cid: str) -> Cone:
        for i, name in enumerate(self.ids):
            if name == cid:
                return self.cones[i]
        raise InvalidInput(f"no cone with id {cid!r}", available=list(self.ids))

    def rays(self):
        """The 1-dimensional cones, as (id, primitive generator), in fan order."""
        out = []
        for cid, cone in zip(self.ids, self.cones):
            if cone.cone_dim == 1 and not cone.lineality:
                out.append((cid, cone.rays[0]))
        return out

    def maximal_indices(self):
        below = {i for (i, j) in self.face_rel if i != j}
        return [i for i in range(len(self.cones)) if i not in below]

    def support_contains(self, x) -> bool:
        x = qvec(x)
        return any(c.contains(x) for c in self.cones)

    def is_complete(self) -> bool:
        """Exact combinatorial completeness: facet pairing plus connectivity."""
        n = self.dim
        full = [i for i, c in enumerate(self.cones) if c.cone_dim == n]
        if not full:
            return False
        for i in self.maximal_indices():
            if self.cones[i].cone_dim != n:
                return False
        facet_owners = {}
        for i in full:
            for face in faces_of(self.cones[i]):
                if face.cone_dim == n - 1:
                    facet_owners.setdefault(face._key, []).append(i)
        if any(len(owners) != 2 for owners in facet_owners.values()):
            return False
        # connectivity of the dual graph on full-dimensional cones
        adj = {i: set() for i in full}
        for owners in facet_owners.values():
            a, b = owners
            adj[a].add(b)
            adj[b].add(a)
        seen = {full[0]}
        stack = [full[0]]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(full)

    def __repr__(self):
        return f"Fan(dim={self.dim}, cones={len(self.cones)})"


def validate_fan(cones, ids=None) -> Fan:
    """Check the fan axioms and return a Fan, or raise a structured violation.

    Raises ImproperCone, MissingFace or BadIntersection, each carrying the
    offending cone ids in ``details``.
    """
    cones = list(cones)
    if not cones:
        raise InvalidInput("a fan needs at least one cone")
    dim = cones[0].dim
    if any(c.dim != dim for c in cones):
        raise InvalidInput("cones have mixed ambient dimensions")
    if ids is None:
        ids = [f"c{i}" for i in range(len(cones))]
    ids = [str(s) for s in ids]
    if len(ids) != len(cones) or len(set(ids)) != len(ids):
        raise InvalidInput("cone ids must be unique and match the cone list")
    keys = {}
    for cid, c in zip(ids, cones):
        if c._key in keys:
            raise InvalidInput(f"duplicate cone: {cid!r} equals {keys[c._key]!r}")
        keys[c._key] = cid
    for cid, c in zip(ids, cones):
        if not is_proper(c):
            raise ImproperCone(f"cone {cid!r} is not proper", cone=cid)
    member = {c._key: i for i, c in enumerate(cones)}
    all_faces = [faces_of(c) for c in cones]
    face_rel = set()
    for i, faces in enumerate(all_faces):
        for face in faces:
            j = member.get(face._key)
            if j is None:
                raise MissingFace(
                    f"face of cone {ids[i]!r} is not a member of the fan",
                    cone=ids[i],
                    face_rays=[[str(x) for x in ray] for ray in face.rays],
                )
            face_rel.add((j, i))
    face_sets = [{f._key for f in faces} for faces in all_faces]
    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            tau = intersect(cones[i], cones[j])
            if tau._key not in face_sets[i] or tau._key not in face_sets[j]:
                raise BadIntersection(
                    f"intersection of {ids[i]!r} and {ids[j]!r} is not a common face",
                    pair=[ids[i], ids[j]],
                )
    return Fan(dim, cones, ids, face_rel)


def separating_vector(s1: Cone, s2: Cone) -> QVec:
    """A vector m with s1 in {<m,.> >= 0}, s2 in {<m,.> <= 0}, cutting out
    the common face: s1 n H_m = s1 n s2 = s2 n H_{-m}.

    m is the canonical relative-interior point of s1^dual n (-s2^dual): the
    primitive rescaling of the sum of its primitive extreme rays (zero when
    the intersection cone is pure lineality, e.g. s1 = s2).  Both hyperplane
    identities are verified exactly before returning.
    """
    if s1.dim != s2.dim:
        raise InvalidInput("ambient dimension mismatch")
    tau = intersect(s1, s2)
    if not (is_proper(s1) and is_proper(s2)):
        raise NotSeparable("separating vectors need proper cones")
    # K = s1^dual n (-s2^dual) = {v : <v, g1> >= 0, <v, g2> <= 0}.  The
    # verified hyperplane identities below certify that tau is a common
    # face, so no separate face enumeration is needed.
    normals = list(s1.generators) + [vneg(g) for g in s2.generators]
    k_cone = Cone.from_halfspaces(s1.dim, normals)
    m = zero_vec(s1.dim)
    for r in k_cone.rays:
        m = vadd(m, r)
    if not is_zero_vec(m):
        m = primitive(m)
    if not k_cone.relint_contains(m):
        raise NotSeparable("constructed vector is not in the relative interior")
    hyperplane = [m, vneg(m)]
    cut1 = Cone.from_halfspaces(s1.dim, list(s1.halfspaces) + hyperplane)
    cut2 = Cone.from_halfspaces(s2.dim, list(s2.halfspaces) + hyperplane)
    if cut1 != tau or cut2 != tau:
        raise NotSeparable("hyperplane identities failed")
    return m
