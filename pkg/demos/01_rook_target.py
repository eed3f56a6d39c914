"""
The 9-vertex rook target
========================

Build the complete signed graph whose positive edges form the 3x3 rook's
graph, check its common-neighbour counts and its symmetry under a global
sign flip.
"""

from signedhom import build_sp9, canonical_form, flip_signs, verify_sp9_adjacency
from signedhom.core import POS, from_pairs
from signedhom.homsearch import count_homomorphisms

sp9 = build_sp9()
print(f"{sp9.n} vertices, {sp9.m} edges,",
      sum(s is POS for *_, s in sp9.edges), "positive")

# vertex 3r + c sits in row r, column c
for r in range(3):
    print("  ".join("".join(sp9.sign(3 * r + c, w).symbol if w != 3 * r + c else "."
                            for w in range(9)) for c in range(3)))

###############################################################################
# For an edge uv and a sign pattern, count the vertices w whose edges to u
# and v carry that pattern.  A pinned path u-w-v does the counting.

report = verify_sp9_adjacency(sp9)
print("all checks pass:", report.ok)
for pattern in ("++", "+-", "-+", "--"):
    path = from_pairs(3, [(0, 1), (1, 2)], pattern)
    print(pattern, "on 01 (positive):", count_homomorphisms(path, sp9, {0: 0, 2: 1}),
          " on 04 (negative):", count_homomorphisms(path, sp9, {0: 0, 2: 4}))

###############################################################################
# Flipping every sign gives an isomorphic graph.

print("self-complementary:", canonical_form(sp9) == canonical_form(flip_signs(sp9)))
