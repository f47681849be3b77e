"""Cross-check the exact alternating sum against chord products.

delta(m) is the product of the chord lengths among all vertices but A_m.
It splits as S(m) / X(m); the floating-point column compares that split
with a direct product of square roots.

    python3 demos/chord_oracle.py [n] [radius]
"""

import sys

from heronfrieze import random_cyclic_polygon
from heronfrieze.exactnum import to_float
from heronfrieze.identities import check_oracle, oracle_delta, oracle_XSL

n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
R = int(sys.argv[2]) if len(sys.argv) > 2 else 2
P = random_cyclic_polygon(n, 11, R)

print(f"{'m':>3} {'delta(m)':>14} {'S/X':>14} {'rel err':>9}  R power of X")
for m in range(1, n + 1):
    o = oracle_XSL(P, m)
    ratio = to_float(o.S / o.X.evaluate(R))
    d = oracle_delta(P, m)
    print(f"{m:>3} {d:14.6e} {ratio:14.6e} {abs(ratio - d) / d:9.1e}  {o.X.r_power}")

reps = check_oracle(P)
print("\n".join(sorted({f"{r.identity}: {r.verdict}" for r in reps})))
