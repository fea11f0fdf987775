"""Interleaving distance with certificates and tower convergence.

Run with:  python3 demos/interleaving_distance.py
"""

from fractions import Fraction

from aptkit import catalog
from aptkit.barcodes import Barcode, bar, barcode, shift
from aptkit.interleaving import (
    certificate_for,
    distance_to_zero,
    interleaving_distance,
    verify_interleaving,
)

print("== distances ==")
x = barcode(bar(0, 10))
y = barcode(bar(1, 9))
print("d([0,10), [1,9)) =", interleaving_distance(x, y))
print("d(X, X) =", interleaving_distance(x, x))
print("d(0, [0,2)) =", interleaving_distance(Barcode(), barcode(bar(0, 2))))
print("d to 0 of a ray =", distance_to_zero(barcode(bar(0, "inf"))))
print("mismatched constants never interleave:",
      interleaving_distance(barcode(bar("-inf", "inf", False, False)), Barcode()))

print()
print("== shift contractivity ==")
c = Fraction(3, 2)
print("d(T_c X, T_c Y) = d(X, Y):",
      interleaving_distance(shift(x, c), shift(y, c)) == interleaving_distance(x, y))
print("d(X, T_c X) <= |c|:", interleaving_distance(x, shift(x, c)) <= abs(c))

print()
print("== certificates ==")
d = interleaving_distance(x, y)
cert = certificate_for(x, y, d)
print(f"certificate at (a, b) = ({cert.a}, {cert.b}), matching {cert.forward}")
print("verifier accepts it:", verify_interleaving(x, y, cert))
from aptkit.interleaving import InterleavingCertificate

too_small = InterleavingCertificate(Fraction(1, 2), Fraction(1, 2), cert.forward, cert.backward)
print("verifier rejects an undersized shift:", verify_interleaving(x, y, too_small))

print()
print("== tower convergence bound ==")
tower = catalog.geometric_towers()[0]
stages = tower["stages"]
print("stages approach the colimit bar:",
      [str(interleaving_distance(stages[N], tower["colimit"])) for N in range(len(stages))])
for N in range(3):
    lhs = distance_to_zero(tower["colim_cofibers"][N])
    rhs = 2 * tower["tail_sum"](N)
    print(f"  d(cofib(i_{N}), 0) = {lhs} <= 2 * tail sum = {rhs}")
