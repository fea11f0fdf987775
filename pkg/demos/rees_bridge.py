"""The Rees bridge: graded Novikov modules to barcodes and back.

Run with:  python3 demos/rees_bridge.py
"""

from fractions import Fraction

from aptkit.barcodes import bar, barcode
from aptkit.barcodes import eval_at as bc_eval
from aptkit.geometry import Cone
from aptkit.modules import (
    HALFLINE,
    PresentationND,
    barcode_of_presentation,
    eval_at,
    free_module,
    h0_tensor,
    k0_of_presentation,
    presentation_of_barcode,
    shift,
)

print("== degreewise evaluation of presentations ==")
lam = free_module(HALFLINE)
print("free rank one at 3/2:", eval_at(lam, (Fraction(3, 2),)), " at -1:", eval_at(lam, (-1,)))

interval01 = PresentationND(HALFLINE, [(0,)], [((1,), [1])])
print("<g at 0 | t^1 g> at 1/2:", eval_at(interval01, (Fraction(1, 2),)),
      " at 1:", eval_at(interval01, (1,)))

quad = Cone(2, [(1, 0), (0, 1)])
corner = PresentationND(quad, [(0, 0)], [((1, 0), [1]), ((0, 1), [1])])
print("2d corner module at (1/2,1/2):", eval_at(corner, (Fraction(1, 2), Fraction(1, 2))),
      " at (1,1/2):", eval_at(corner, (1, Fraction(1, 2))))

print()
print("== shifts translate the grading ==")
moved = shift(interval01, (1,))
print("T_1 of [0,1)-module at -1/2:", eval_at(moved, (Fraction(-1, 2),)))

print()
print("== tensor products at H0 ==")
square = h0_tensor(interval01, interval01)
print("[0,1) (x) [0,1) at 1/2:", eval_at(square, (Fraction(1, 2),)),
      " at 3/2:", eval_at(square, (Fraction(3, 2),)))
print("unit acts trivially:",
      all(eval_at(h0_tensor(lam, interval01), (Fraction(k, 3),)) == eval_at(interval01, (Fraction(k, 3),))
          for k in range(-3, 7)))

print()
print("== barcodes from presentations (column reduction) ==")
print("<g at 0 | t^1 g>  ->", barcode_of_presentation(interval01) == barcode(bar(0, 1)))
cancel = PresentationND(HALFLINE, [(0,), (1,)], [((1,), [1, -1])])
print("internal cancellation -> one infinite bar:",
      barcode_of_presentation(cancel) == barcode(bar(0, "inf")))

print()
print("== presentations from barcodes, and the round trip ==")
b = barcode(bar(0, 2), bar(Fraction(1, 2), "inf"))
p = presentation_of_barcode(b)
print("round trip equals the input:", barcode_of_presentation(p) == b)
agree = all(
    bc_eval(b, Fraction(k, 4)).get(0, 0) == eval_at(p, (Fraction(k, 4),))
    for k in range(-2, 24)
)
print("evaluation agrees along the way:", agree)

print()
print("== K0 of presentations ==")
print("free at a:", k0_of_presentation(free_module(HALFLINE, (Fraction(5, 2),))))
print("[0,1):", k0_of_presentation(interval01))
print("[0,2) vs [0,1)+[1,2) agree:",
      k0_of_presentation(presentation_of_barcode(barcode(bar(0, 2))))
      == k0_of_presentation(presentation_of_barcode(barcode(bar(0, 1), bar(1, 2)))))
