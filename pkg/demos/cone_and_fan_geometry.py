"""Exact cone and fan geometry: duals, faces, fan axioms, separating vectors.

Run with:  python3 demos/cone_and_fan_geometry.py
"""

from aptkit import catalog
from aptkit.errors import MissingFace
from aptkit.geometry import Cone, dual_cone, faces_of, is_proper, separating_vector, validate_fan


def rays(cone):
    return [tuple(str(x) for x in r) for r in cone.rays] or (
        ["<lines>"] if cone.lineality else ["{0}"]
    )


print("== dual cones ==")
quadrant = Cone(2, [(1, 0), (0, 1)])
print("first quadrant is self-dual:", dual_cone(quadrant) == quadrant)
origin = Cone(2, [])
print("dual of {0} is the whole plane:", dual_cone(origin).cone_dim == 2)
print("double dual returns the cone:", dual_cone(dual_cone(quadrant)) == quadrant)

print()
print("== properness: no lines iff the dual is full-dimensional ==")
print("quadrant proper:", is_proper(quadrant))
print("full line proper:", is_proper(Cone(1, [(1,), (-1,)])))
print("half-plane proper:", is_proper(Cone(2, [(1, 0), (-1, 0), (0, 1)])))

print()
print("== face lattices ==")
for face in faces_of(quadrant):
    print(f"  dim {face.cone_dim}: rays {rays(face)}")

print()
print("== fan validation ==")
p1 = catalog.fan("p1")
print("P1 fan {0, R<=, R>=} is valid and complete:", p1.is_complete())
try:
    validate_fan([Cone(2, [(1, 0), (0, 1)]), Cone(2, [(-1, 0), (0, -1)])])
except MissingFace as exc:
    print("opposite quadrants alone fail:", exc)

for name in catalog.fan_names():
    fan = catalog.fan(name)
    print(f"  {name:<13} cones={len(fan.cones):>2}  complete={fan.is_complete()}")

print()
print("== separating vectors cut out common faces ==")
print("R>= vs R<= in the P1 fan:", separating_vector(p1.cone_by_id("pos"), p1.cone_by_id("neg")))
p2 = catalog.fan("p2")
m = separating_vector(p2.cone_by_id("s12"), p2.cone_by_id("s23"))
print("adjacent P2 cones:", tuple(str(x) for x in m))
sigma = p2.cone_by_id("s12")
print("a cone against itself gives m = 0:", separating_vector(sigma, sigma))
