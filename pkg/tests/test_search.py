"""Backtracking search: embeddings, isomorphisms, automorphism groups,
and locally injective map enumeration.

Automorphism counts are cross-checked against networkx's VF2 matcher;
embeddings and locally injective maps against brute force over all
vertex assignments on small instances.
"""

from itertools import permutations, product

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from spherecomplex import (
    FlagComplex,
    VertexMap,
    automorphism_group,
    build_caterpillar_window,
    catalog,
    enumerate_automorphisms,
    enumerate_locally_injective_maps,
    flag_from_adjacency,
    search_embedding,
    search_isomorphism,
)


def to_nx(c: FlagComplex) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(c.vertices)
    g.add_edges_from(c.edges())
    return g


def oracle_embeds(src: FlagComplex, dst: FlagComplex) -> bool:
    """Try every injection of the source vertices into the target."""
    for images in permutations(dst.vertices, src.n_vertices):
        phi = dict(zip(src.vertices, images))
        if all(dst.adjacent(phi[u], phi[v]) for u, v in src.edges()):
            return True
    return src.n_vertices == 0


def small_graph(draw, lo, hi, prefix):
    n = draw(st.integers(min_value=lo, max_value=hi))
    vs = ["%s%d" % (prefix, i) for i in range(n)]
    pairs = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)
             if draw(st.booleans())]
    return flag_from_adjacency(vs, pairs)


sources = st.composite(lambda draw: small_graph(draw, 1, 4, "s"))
targets = st.composite(lambda draw: small_graph(draw, 1, 6, "t"))


class TestVertexMap:
    def test_simplicial_and_injective_flags(self, petersen):
        ident = VertexMap(petersen, petersen, {v: v for v in petersen.vertices})
        assert ident.is_simplicial() and ident.is_injective()
        assert ident.is_locally_injective()

    def test_collapsing_an_edge_is_simplicial_but_not_locally_injective(self):
        k3 = catalog("k3")
        m = VertexMap(k3, k3, {"t1": "t1", "t2": "t1", "t3": "t3"})
        assert m.is_simplicial(), "vertex collapses are allowed"
        assert not m.is_locally_injective()

    def test_locally_injective_but_not_injective(self):
        """Wrapping a 6-path around a triangle is injective on every
        closed star but not globally."""
        path = flag_from_adjacency(
            ["a", "b", "c", "d", "e", "f"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f")])
        k3 = catalog("k3")
        wrap = {"a": "t1", "b": "t2", "c": "t3", "d": "t1", "e": "t2", "f": "t3"}
        m = VertexMap(path, k3, wrap)
        assert m.is_simplicial()
        assert m.is_locally_injective()
        assert not m.is_injective()

    def test_missing_vertex_rejected(self, petersen):
        with pytest.raises(ValueError):
            VertexMap(petersen, petersen, {"k:12": "k:12"})


class TestEmbedding:
    @settings(max_examples=60)
    @given(sources(), targets())
    def test_matches_brute_force(self, src, dst):
        found = search_embedding(src, dst)
        assert (found is not None) == oracle_embeds(src, dst)
        if found is not None:
            assert found.is_injective() and found.is_simplicial()

    def test_k33_does_not_embed_in_petersen(self, petersen):
        k33 = catalog("k33")
        assert search_embedding(k33, petersen) is None
        assert search_embedding(k33, petersen, use_acyclicity_shortcut=False) is None

    def test_vertex_count_precheck(self, petersen):
        k33 = catalog("k33")
        assert petersen.n_vertices > k33.n_vertices
        assert search_embedding(petersen, k33) is None

    def test_acyclicity_shortcut_agrees_on_tree_target(self, petersen):
        win = build_caterpillar_window(4)
        with_shortcut = search_embedding(petersen, win.complex)
        without = search_embedding(petersen, win.complex,
                                   use_acyclicity_shortcut=False)
        assert with_shortcut is None and without is None

    def test_k13_embeds_in_petersen(self, petersen):
        m = search_embedding(catalog("k13"), petersen)
        assert m is not None, "a 3-star sits inside any cubic graph"


class TestIsomorphism:
    def test_petersen_self(self, petersen):
        assert search_isomorphism(petersen, petersen) is not None

    def test_distinguishes_k33_from_petersen(self, petersen):
        assert search_isomorphism(catalog("k33"), petersen) is None

    def test_relabelled_copy(self, petersen):
        renamed = flag_from_adjacency(
            ["x" + v for v in petersen.vertices],
            [("x" + u, "x" + v) for u, v in petersen.edges()])
        m = search_isomorphism(petersen, renamed)
        assert m is not None and m.is_injective()


class TestAutomorphisms:
    def test_petersen_count_matches_vf2(self, petersen):
        auts = enumerate_automorphisms(petersen)
        gm = nx.algorithms.isomorphism.GraphMatcher(to_nx(petersen), to_nx(petersen))
        assert len(auts) == sum(1 for _ in gm.isomorphisms_iter()) == 120

    def test_k33_count_matches_vf2(self):
        k33 = catalog("k33")
        auts = enumerate_automorphisms(k33)
        gm = nx.algorithms.isomorphism.GraphMatcher(to_nx(k33), to_nx(k33))
        assert len(auts) == sum(1 for _ in gm.isomorphisms_iter()) == 72

    def test_group_closure(self, petersen):
        g = automorphism_group(petersen)
        assert g.order == 120
        keys = {a.key() for a in g.elements}
        assert len(keys) == 120
        assert {a.key() for a in enumerate_automorphisms(petersen)} == keys

    def test_generators_generate(self, petersen):
        g = automorphism_group(petersen)
        assert 1 <= len(g.generators) < g.order


class TestLocallyInjectiveMaps:
    def oracle(self, X: FlagComplex, target: FlagComplex):
        out = []
        for images in product(target.vertices, repeat=X.n_vertices):
            phi = dict(zip(X.vertices, images))
            m = VertexMap(X, target, phi)
            if m.is_simplicial() and m.is_locally_injective():
                out.append(m.key())
        return sorted(out)

    @settings(max_examples=25)
    @given(st.composite(lambda draw: small_graph(draw, 1, 3, "s"))(),
           st.composite(lambda draw: small_graph(draw, 1, 4, "t"))())
    def test_matches_brute_force(self, X, target):
        got = sorted(m.key() for m in enumerate_locally_injective_maps(X, target))
        assert got == self.oracle(X, target)

    def test_all_results_validate(self, petersen):
        star = petersen.induced(["k:12", "k:34", "k:35", "k:45"])
        maps = enumerate_locally_injective_maps(star, petersen)
        assert maps, "a star must map somewhere"
        for m in maps:
            assert m.is_simplicial() and m.is_locally_injective()

    def test_require_maximal_needs_cliques(self, petersen):
        with pytest.raises(ValueError):
            enumerate_locally_injective_maps(petersen, petersen, require_maximal=True)
