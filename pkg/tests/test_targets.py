from itertools import combinations

import pytest

from oracles import valid_maps
from signedhom.core import (
    NEG,
    POS,
    SignedGraph,
    VertexKind,
    canonical_form,
    classify_vertex,
    complete_graph,
    flip_signs,
)
from signedhom.homsearch import find_homomorphism
from signedhom.targets import (
    all_subdivided_k4_signatures,
    attach_vertex,
    build_sp9,
    build_sp9_dagger,
    build_sp9_star,
    derive_k4s_obstructions,
    extension_cases,
    star_candidates,
    star_from_base,
    subdivided_k4,
    verify_sp9_adjacency,
)


def lines():
    rows = [tuple(range(3 * r, 3 * r + 3)) for r in range(3)]
    cols = [tuple(range(c, 9, 3)) for c in range(3)]
    return set(rows + cols)


class TestSP9:
    def test_edge_counts(self, sp9):
        assert sp9.m == 36
        assert sum(s is POS for *_, s in sp9.edges) == 18

    def test_regular_signs(self, sp9):
        for v in range(9):
            assert sp9.pos_mask[v].bit_count() == 4
            assert sp9.neg_mask[v].bit_count() == 4

    def test_positive_part_is_rooks_graph(self, sp9):
        import networkx as nx

        pos = nx.Graph([(u, v) for u, v, s in sp9.edges if s is POS])
        rook = nx.cartesian_product(nx.complete_graph(3), nx.complete_graph(3))
        assert nx.is_isomorphic(pos, rook)

    def test_self_complementary(self, sp9):
        assert canonical_form(flip_signs(sp9)) == canonical_form(sp9)


class TestAdjacency:
    def test_sp9_passes(self, sp9):
        report = verify_sp9_adjacency(sp9)
        assert report.ok
        assert len(report.bullets) == 8
        assert len(report.counts) == 36

    def test_counts_sum_to_seven(self, sp9):
        for c in verify_sp9_adjacency(sp9).counts.values():
            assert sum(c.values()) == 7

    def test_all_positive_k9_fails(self):
        report = verify_sp9_adjacency(complete_graph(9))
        assert not report.ok
        assert report.counts[(0, 1)]["++"] == 7

    def test_rejects_incomplete(self):
        with pytest.raises(ValueError):
            verify_sp9_adjacency(SignedGraph(9))


class TestObstructions:
    def test_all_positive_signature_maps(self, sp9):
        g = subdivided_k4([POS] * 7)
        assert valid_maps(g, sp9).any()
        assert find_homomorphism(g, sp9) is not None

    def test_derived_plus_does_not_map(self, catalog, sp9):
        assert not valid_maps(catalog.k4s_plus.graph, sp9).any()
        assert not valid_maps(catalog.k4s_minus.graph, sp9).any()

    def test_minus_is_flip_of_plus(self, catalog):
        assert canonical_form(flip_signs(catalog.k4s_plus.graph)) == canonical_form(
            catalog.k4s_minus.graph
        )

    def test_exactly_four_failing_signatures(self, sp9):
        # brute force over 9^5 maps for each of the 128 signatures
        failing = [g for g in all_subdivided_k4_signatures() if not valid_maps(g, sp9).any()]
        assert len(failing) == 4
        assert len({canonical_form(g) for g in failing}) == 2

    def test_shape(self, catalog):
        for pat, kind in ((catalog.k4s_plus, VertexKind.ALL_POSITIVE),
                          (catalog.k4s_minus, VertexKind.ALL_NEGATIVE)):
            g = pat.graph
            assert g.n == 5 and g.m == 7
            assert sorted(g.degrees()) == [2, 3, 3, 3, 3]
            assert g.degree(pat.role("x1")) == 2
            assert sum(classify_vertex(g, v) is kind for v in range(5)) >= 3

    def test_stable(self, sp9):
        a = derive_k4s_obstructions(sp9)
        b = derive_k4s_obstructions(build_sp9())
        assert a == b

    def test_wrong_target_raises(self):
        with pytest.raises(RuntimeError):
            derive_k4s_obstructions(complete_graph(9))


class TestDagger:
    def test_shape(self, catalog):
        d = catalog.dagger
        assert d.graph.n == 10 and d.graph.m == 42
        assert d.graph.degree(d.z) == 6
        assert not set(d.nplus) & set(d.nminus)
        assert d.graph.induced(range(9)) == catalog.sp9

    def test_obstructions_map_into_dagger(self, catalog):
        for pat in catalog.obstructions:
            assert find_homomorphism(pat.graph, catalog.dagger.graph) is not None

    def test_plus_cases_need_a_positive_triangle(self, catalog):
        sp9 = catalog.sp9
        good = [s for s in combinations(range(9), 3)
                if all(c.ok for c in extension_cases(attach_vertex(sp9, s, ()), 9, [catalog.k4s_plus]))]
        assert set(good) == lines()

    def test_minus_cases_need_a_negative_triangle(self, catalog):
        sp9 = catalog.sp9
        good = [s for s in combinations(range(9), 3)
                if all(c.ok for c in extension_cases(attach_vertex(sp9, (), s), 9, [catalog.k4s_minus]))]
        assert good and all(
            all(sp9.sign(a, b) is NEG for a, b in combinations(s, 2)) for s in good
        )
        # every negative triangle meets every row and column
        for s in good:
            for line in lines():
                assert set(s) & set(line)

    def test_best_attachment_fails_one_case(self, catalog):
        d = catalog.dagger
        assert (d.nplus, d.nminus) == ((0, 1, 2), (3, 4, 8))
        assert [(c.pattern, c.pin, c.edge_sign) for c in d.failed] == [("k4s-", 5, POS)]

    def test_strict_mode_raises(self, catalog):
        with pytest.raises(RuntimeError):
            build_sp9_dagger(catalog.sp9, catalog.obstructions, strict=True)


class TestStar:
    def test_zero_prime_degree(self, sp9):
        st = star_from_base(sp9, 0, 1, 2)
        assert st.graph.n == 11
        assert st.graph.degree(st.zero_prime) == 8
        assert st.graph.degree(st.one_prime) == 8
        assert st.graph.sign(st.zero_prime, 0) is NEG
        assert st.graph.sign(st.zero_prime, st.one_prime) is NEG
        assert st.graph.sign(st.one_prime, 1) is POS

    def test_excluded_vertex(self, sp9):
        st = star_from_base(sp9, 0, 4, 8)
        assert not st.graph.has_edge(st.zero_prime, 8)
        assert not st.graph.has_edge(st.one_prime, 8)
        assert not st.graph.has_edge(st.zero_prime, 4)
        assert not st.graph.has_edge(st.one_prime, 0)

    def test_copies_signs(self, sp9):
        st = star_from_base(sp9, 0, 1, 8)
        for k in range(2, 8):
            assert st.graph.sign(st.zero_prime, k) is sp9.sign(0, k)
            assert st.graph.sign(st.one_prime, k) is sp9.sign(1, k)

    def test_sp9_is_induced(self, star_catalog):
        assert star_catalog.star.graph.induced(range(9)) == star_catalog.sp9

    def test_candidates_are_pairwise_non_isomorphic(self, sp9):
        cands = star_candidates(sp9)
        assert len({canonical_form(c.graph) for c in cands}) == len(cands)

    def test_all_positive_cubic_graphs_map(self, star_catalog):
        from signedhom.harness import enumerate_cubic_graphs

        for n in (4, 6, 8):
            for g in enumerate_cubic_graphs(n):
                assert find_homomorphism(g, star_catalog.star.graph) is not None

    def test_no_candidate_raises(self, sp9):
        with pytest.raises(RuntimeError):
            build_sp9_star(sp9, [complete_graph(12)])


def test_small_graphs_map_when_every_component_has_a_low_degree_vertex(catalog):
    from oracles import signed_graph_class_reps
    from signedhom.core import find_induced_copies
    from signedhom.harness import components_properly_subcubic

    for n in range(1, 6):
        for g in signed_graph_class_reps(n):
            if max(g.degrees(), default=0) > 3 or not components_properly_subcubic(g):
                continue
            if any(find_induced_copies(g, p.graph) for p in catalog.obstructions):
                continue
            assert find_homomorphism(g, catalog.sp9) is not None


def test_cubic_component_breaks_the_whole_graph_reading(catalog):
    # K4 plus an isolated vertex has a degree-0 vertex but no map to SP9
    g = SignedGraph(5, complete_graph(4).edges)
    assert find_homomorphism(g, catalog.sp9) is None
