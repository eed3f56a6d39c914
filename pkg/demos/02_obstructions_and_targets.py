"""
Obstructions and the extra-vertex targets
=========================================

Search all 128 signatures of the subdivided K4 for the ones that do not map
to the rook target, then attach a tenth vertex ``z`` and see which pinned
extension cases survive.
"""

from itertools import combinations

from signedhom.targets import (
    all_subdivided_k4_signatures,
    attach_vertex,
    build_catalog,
    extension_cases,
)
from signedhom.core import canonical_form
from signedhom.homsearch import find_homomorphism

cat = build_catalog(with_star=True)
sp9 = cat.sp9

failing = [g for g in all_subdivided_k4_signatures() if find_homomorphism(g, sp9) is None]
print(len(failing), "signatures fail,", len({canonical_form(g) for g in failing}), "classes")
for pat in cat.obstructions:
    print(pat.name, pat.graph.signature())

###############################################################################
# Which positive neighbourhoods of z make every k4s+ case extend?  Exactly
# the rows and columns.  For k4s- it is exactly the negative triangles.  A
# row always meets a negative triangle, so no disjoint choice serves both.

plus_ok = [s for s in combinations(range(9), 3)
           if all(c.ok for c in extension_cases(attach_vertex(sp9, s, ()), 9, [cat.k4s_plus]))]
minus_ok = [s for s in combinations(range(9), 3)
            if all(c.ok for c in extension_cases(attach_vertex(sp9, (), s), 9, [cat.k4s_minus]))]
print("plus neighbourhoods:", plus_ok)
print("minus neighbourhoods:", minus_ok)
print("disjoint pairs:", [(p, m) for p in plus_ok for m in minus_ok if not set(p) & set(m)])

d = cat.dagger
print(f"chosen: z+ {d.nplus}, z- {d.nminus}; failing cases:",
      [(c.pattern, c.pin, c.edge_sign.symbol) for c in d.failed])

###############################################################################
# The 11-vertex target with two extra vertices.

st = cat.star
print("star base roles:", st.base, "degrees:", st.graph.degree(st.zero_prime), st.graph.degree(st.one_prime))
