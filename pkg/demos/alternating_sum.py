"""Walk through the alternating sum on a rational cyclic hexagon.

Prints the six signed terms x(m) S(m), shows they cancel exactly, then
nudges one vertex off the circle and shows the sum no longer vanishes.

    python3 demos/alternating_sum.py [seed]
"""

import sys
from fractions import Fraction

from heronfrieze import build_table, perturb_radially, random_cyclic_polygon
from heronfrieze.exactnum import format_rat
from heronfrieze.identities import alternating_terms, check_main_theorem

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 7
P = random_cyclic_polygon(6, seed)
print("vertices on the unit circle:")
for i, v in enumerate(P.vertices, start=1):
    print(f"  A{i} = ({format_rat(v.x)}, {format_rat(v.y)})")

T = build_table(P)
terms = alternating_terms(T)
for m, t in enumerate(terms, start=1):
    print(f"  m={m}: {float(t):+.6e}  ({len(str(t.numerator))}-digit numerator)")
print("sum:", sum(terms))
print(check_main_theorem(T).summary())

Q = perturb_radially(P, 3, Fraction(1, 1000))
print("\nafter moving A4 outward by 1/1000:")
print(check_main_theorem(Q).summary())
