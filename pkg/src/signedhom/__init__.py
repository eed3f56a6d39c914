"""Homomorphisms and colourings of 2-edge-coloured graphs, with a
constructive 10-colouring of connected cubic ones."""

from .bound10 import BranchTrace, InternalFalsification, ten_colouring, verify_extension_lemmas
from .colouring import (
    Colouring,
    chromatic_colouring,
    chromatic_number,
    find_k_colouring,
    implicit_target,
    validate_colouring,
)
from .core import (
    NEG,
    POS,
    Embedding,
    Sign,
    SignedGraph,
    VertexKind,
    canonical_form,
    classify_vertex,
    find_induced_copies,
    find_triangles,
    flip_signs,
    format_signed_graph,
    parse_graph6_with_signs,
    parse_signed_graph,
)
from .homsearch import check_homomorphism, count_homomorphisms, find_homomorphism
from .targets import TargetCatalog, build_catalog, build_sp9, verify_sp9_adjacency

__version__ = "0.1.0"
