"""
Ten colours for a cubic graph
=============================

Run the constructive colouring on a few cubic signed graphs, one per
branch, and compare with the exact chromatic number.
"""

import networkx as nx

from signedhom import chromatic_number, ten_colouring, validate_colouring
from signedhom.core import NEG, POS, SignedGraph, complete_graph, from_pairs

examples = {
    "all-positive K4": complete_graph(4),
    "prism, positive triangles": SignedGraph(6, (
        (0, 1, POS), (1, 2, POS), (0, 2, POS), (3, 4, POS), (4, 5, POS), (3, 5, POS),
        (0, 3, NEG), (1, 4, NEG), (2, 5, NEG),
    )),
    "Moebius-Kantor": from_pairs(
        16, sorted(tuple(sorted(e)) for e in nx.LCF_graph(16, [5, -5], 8).edges()),
        "+-+--++-++-+----++--+-+-",
    ),
}

for name, g in examples.items():
    colouring, trace = ten_colouring(g)
    print(f"{name:28s} branch={trace.name:18s} colours used={colouring.used} "
          f"chi={chromatic_number(g)} valid={validate_colouring(g, colouring)}")
    for step in trace.surgery:
        print("    ", step)
