"""Draw the Heronian frieze of a cyclic pentagon and audit its diamonds.

Every diamond of the plane frieze, gluing diamonds included, satisfies the
seven diamond equations. The three determinant relations attached to each
diamond need the vertices to be concyclic, which this script shows by
comparing the pentagon against a generic one.

    python3 demos/frieze_picture.py
"""

from heronfrieze import build_plane_frieze, make_polygon, random_polygon, verify_diamond
from heronfrieze.frieze import render_frieze
from heronfrieze.identities import check_cor_diamonds

# Pythagorean points keep the entries short
P = make_polygon([(5, 0), (3, 4), (0, 5), (-4, 3), (0, -5)])
F = build_plane_frieze(P)
print(render_frieze(F))

bad = [key for key, D in F.diamonds() if any(verify_diamond(D))]
print(f"diamond equations: {sum(1 for _ in F.diamonds())} diamonds, {len(bad)} failures")

reps = check_cor_diamonds(P)
print(f"determinant relations (cyclic): {sum(r.holds for r in reps)}/{len(reps)} hold")

G = random_polygon(5, 3)
generic = build_plane_frieze(G)
bad = [key for key, D in generic.diamonds() if any(verify_diamond(D))]
print(f"generic pentagon, diamond equations: {len(bad)} failures")
print("generic pentagon, determinant relations:", check_cor_diamonds(G)[0].reason)
