"""Novikov toric atlases: charts, transitions, cocycles, root ladders.

Run with:  python3 demos/toric_atlas.py
"""

from fractions import Fraction
from itertools import combinations

from aptkit import catalog
from aptkit.geometry import Cone
from aptkit.toric import (
    almost_content,
    boundary_idempotent_check,
    chart_of_cone,
    cocycle_check,
    root_ladder_level,
    transition_data,
)

print("== the projective-line atlas ==")
p1 = catalog.fan("p1")
pos = chart_of_cone(p1.cone_by_id("pos"))
neg = chart_of_cone(p1.cone_by_id("neg"))
torus = chart_of_cone(p1.cone_by_id("0"))
print("torus chart has the full line as monoid:", len(torus.dual.lineality) == 1)
t = transition_data(pos, neg)
print("gluing inverts t: m =", t.m, " and backwards m =", transition_data(neg, pos).m)
print("overlap monoid is the Laurent line:", t.overlap == Cone(1, [(1,), (-1,)]))

print()
print("== transitions and cocycles on P2 ==")
p2 = catalog.fan("p2")
charts = {cid: chart_of_cone(p2.cone_by_id(cid)) for cid in p2.ids}
t01 = transition_data(charts["s12"], charts["s23"])
print("m(s12 -> s23) =", tuple(str(x) for x in t01.m))
triple_ok = cocycle_check(charts["s12"], charts["s23"], charts["s31"])
print("cocycle on the three big charts:", triple_ok)
all_triples = all(
    cocycle_check(charts[a], charts[b], charts[c])
    for a, b, c in combinations(p2.ids, 3)
)
print("cocycle on every distinct triple:", all_triples)

print()
print("== idempotent boundary ideals ==")
for cid in p2.ids:
    content = almost_content(charts[cid])
    assert boundary_idempotent_check(content)
print("int(sigma^dual) + int(sigma^dual) = int(sigma^dual) for all P2 charts: True")

print()
print("== the rational root ladder ==")
quad = chart_of_cone(Cone(2, [(1, 0), (0, 1)]))
grade = (Fraction(1, 2), Fraction(1, 3))
level = root_ladder_level(quad, grade)
print(f"grade {tuple(str(x) for x in grade)} first appears at level k = {level}")
memberships = {
    k: chart_of_cone(quad.cone, grading=k).monoid_contains(grade) for k in range(1, 13)
}
print("ladder membership by level:", memberships)
