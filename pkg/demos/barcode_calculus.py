"""Tour of the barcode calculus: shifts, torsion, convolution, almostization.

Run with:  python3 demos/barcode_calculus.py
"""

from fractions import Fraction

from aptkit.barcodes import (
    Barcode,
    almost_iso,
    almostize,
    bar,
    barcode,
    convolve,
    eval_at,
    is_almost_zero,
    is_c_torsion,
    k0_class,
    quotient_by_locals,
    shift,
    torsionfree_hom_dim,
)


def show(title, value):
    print(f"{title:<46} {value}")


print("== decorated bars and evaluation ==")
b = barcode(bar(0, 1))
show("dim of [0,1) at 1/2:", eval_at(b, Fraction(1, 2)))
show("dim of [0,1) at 1 (right-open):", eval_at(b, 1))
show("dim of [0,1] at 1 (right-closed):", eval_at(barcode(bar(0, 1, True, True)), 1))

print()
print("== the shift action T_c ==")
show("T_1 [0,2):", shift(barcode(bar(0, 2)), 1).bars[0].interval)
show("T_a T_b = T_{a+b} on [0,1):",
     shift(shift(b, Fraction(1, 3)), Fraction(2, 3)) == shift(b, 1))

print()
print("== Tamarkin torsion: tau_c vanishes iff bars are short ==")
show("[0,c) is c-torsion (c = 3/2):", is_c_torsion(barcode(bar(0, Fraction(3, 2))), Fraction(3, 2)))
show("[0,1) is 1/2-torsion:", is_c_torsion(b, Fraction(1, 2)))
show("[0,inf) is 100-torsion:", is_c_torsion(barcode(bar(0, "inf")), 100))

print()
print("== derived convolution ==")
unit = barcode(bar(0, "inf"))
show("[0,inf) * [0,1) (the unit acts):", convolve(unit, b) == b)
kos = convolve(b, b)
show("[0,1) * [0,1):", [(str(x.interval.left), str(x.interval.right), x.hdegree) for x in kos])
line = barcode(bar("-inf", "inf", False, False))
show("full line * [0,1) (torsion dies):", convolve(line, b).is_empty())

print()
print("== almostization: the ephemeral quotient ==")
messy = Barcode([bar(0, 1, True, True), bar(2, 2, True, True), bar(3, 4, False, False)])
show("input decorations:", [(str(x.interval.left), str(x.interval.right),
                             x.interval.left_closed, x.interval.right_closed) for x in messy])
clean = almostize(messy)
show("normal form:", [(str(x.interval.left), str(x.interval.right)) for x in clean])
show("almostize is idempotent:", almostize(clean) == clean)
show("singletons are almost zero:", is_almost_zero(barcode(bar(5, 5, True, True))))
show("[0,1] and [0,1) are almost isomorphic:",
     almost_iso(barcode(bar(0, 1, True, True)), b))

print()
print("== Tamarkin quotient by locals and torsion-free homs ==")
show("drop constants from {line, [0,1)}:",
     [(str(x.interval.left), str(x.interval.right)) for x in quotient_by_locals(barcode(line.bars[0], bar(0, 1)))])
show("Hom_inf([0,inf), [0,inf)):", torsionfree_hom_dim(unit, unit))
show("Hom_inf([0,1), anything) (torsion dies):", torsionfree_hom_dim(b, unit))

print()
print("== K0 classes in Z[Q] ==")
show("k0 of [0,2):", k0_class(barcode(bar(0, 2))))
show("k0 of [0,1) + [1,2) (telescopes):", k0_class(barcode(bar(0, 1), bar(1, 2))))
show("k0 multiplicative under convolution:",
     k0_class(kos) == k0_class(b) * k0_class(b))
