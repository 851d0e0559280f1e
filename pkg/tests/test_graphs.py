"""Derived graphs, structural predicates, completions and separations."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treetoric.errors import GraphError
from treetoric.graphs import (
    ColoredGraph,
    completion,
    connected_components,
    derive_graph,
    edge,
    four_point_check,
    is_block_graph,
    is_connected,
    is_vertex_regular,
    one_clique_separated_quadruples,
    star_decomposition,
    vertex_regular_via_parents,
)

from conftest import fixture_tree, random_tree


def make_graph(n, edges):
    """Uncolored helper: distinct vertex colors, distinct edge colors."""
    edges = [edge(*e) for e in edges]
    return ColoredGraph(
        n=n,
        edges=edges,
        vertex_color={v: f"v{v}" for v in range(1, n + 1)},
        edge_color={e: f"e{e[0]}_{e[1]}" for e in edges},
    )


def complete_graph(n):
    return make_graph(n, combinations(range(1, n + 1), 2))


def random_graph(rng, n_max=9):
    n = rng.randint(1, n_max)
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < 0.5]
    return make_graph(n, edges)


# ------------------------------------------------------------------ #
# oracles                                                              #
# ------------------------------------------------------------------ #


def completion_closure_oracle(g):
    """Naive fixed-point closure over edge-class pairs."""
    classes = {frozenset({e}) for e in (edge(*p) for p in combinations(g.vertices(), 2))}

    def class_of(classes, e):
        return next(c for c in classes if e in c)

    changed = True
    while changed:
        changed = False
        for verts in g.vertex_color_classes().values():
            for i, j in combinations(verts, 2):
                for k in g.vertices():
                    if k in (i, j):
                        continue
                    a = class_of(classes, edge(i, k))
                    b = class_of(classes, edge(j, k))
                    if a != b:
                        classes = (classes - {a, b}) | {a | b}
                        changed = True
    return classes


def minor_quadruples_oracle(g):
    """All separated pairings via exhaustive bipartition enumeration."""
    out = set()
    for c in g.vertices():
        comps = connected_components(g, removed=c)
        if len(comps) < 2:
            continue
        for split in range(1, 2 ** len(comps) - 1):
            side_a = set()
            side_b = set()
            for idx, comp in enumerate(comps):
                (side_a if split & (1 << idx) else side_b).update(comp)
            rows = sorted(side_a | {c})
            cols = sorted(side_b | {c})
            for p1 in combinations(rows, 2):
                for p2 in combinations(cols, 2):
                    if set(p1) & set(p2) - {c}:
                        continue
                    out.add((min(p1, p2), max(p1, p2)))
    return out


# ------------------------------------------------------------------ #
# derivation                                                           #
# ------------------------------------------------------------------ #


class TestDeriveGraph:
    def test_colored_star(self):
        g = derive_graph(fixture_tree("colored_star"))
        assert sorted(g.edges) == [(1, 2), (1, 4), (2, 4), (3, 4)]
        assert g.edge_color[(1, 2)] == "red"
        assert g.edge_color[(1, 4)] == g.edge_color[(2, 4)] == g.edge_color[(3, 4)] == "blue"
        assert g.vertex_color[1] == g.vertex_color[2]

    def test_no_zeroing_gives_complete_graph(self):
        g = derive_graph(fixture_tree("uncolored_binary"))
        assert g.is_complete()
        assert len(set(g.vertex_color.values())) == 4
        assert len(set(g.edge_color.values())) == 3  # one per internal node

    def test_block_g2_star(self):
        g = derive_graph(fixture_tree("zeroed_block_g2"))
        assert sorted(g.edges) == [(1, 2), (1, 4), (2, 4), (3, 4)]

    def test_derived_graph_always_connected(self):
        rng = random.Random(7)
        for _ in range(100):
            assert is_connected(derive_graph(random_tree(rng)))


class TestVertexRegular:
    def test_g1_regular(self):
        assert is_vertex_regular(derive_graph(fixture_tree("leafcolor_g1")))

    def test_g3_not_regular(self):
        assert not is_vertex_regular(derive_graph(fixture_tree("leafcolor_g3")))

    def test_distinct_colors_vacuous(self):
        assert is_vertex_regular(derive_graph(fixture_tree("uncolored_binary")))

    def test_via_parents_examples(self):
        assert vertex_regular_via_parents(fixture_tree("leafcolor_g1"))
        # same color on leaves under different parents
        t = fixture_tree("leafcolor_g3")
        assert not vertex_regular_via_parents(t)

    def test_parent_criterion_equals_graph_predicate(self):
        # Z = empty, distinct internal colors: the two independent
        # implementations must agree (200 random trees).
        rng = random.Random(2024)
        checked = 0
        while checked < 200:
            t = random_tree(
                rng, zero_mode="none", internal_mode="distinct"
            )
            assert is_vertex_regular(derive_graph(t)) == vertex_regular_via_parents(t)
            checked += 1


class TestBlock:
    def test_g2_block_both_ways(self):
        g = derive_graph(fixture_tree("zeroed_block_g2"))
        assert is_block_graph(g) and four_point_check(g)

    def test_g3_not_block_both_ways(self):
        g = derive_graph(fixture_tree("zeroed_block_g3"))
        assert not is_block_graph(g) and not four_point_check(g)

    def test_complete_graphs(self):
        for n in range(1, 6):
            assert is_block_graph(complete_graph(n))

    @settings(max_examples=120, deadline=None)
    @given(st.integers(0, 10**6))
    def test_two_characterizations_agree(self, seed):
        g = random_graph(random.Random(seed))
        assert is_block_graph(g) == four_point_check(g)


class TestStarDecomposition:
    def test_colored_star(self):
        g = derive_graph(fixture_tree("colored_star"))
        assert star_decomposition(g) == (4, [(1, 2, 4), (3, 4)])

    def test_complete_graph_tiebreak(self):
        center, cliques = star_decomposition(complete_graph(4))
        assert center == 1
        assert cliques == [(1, 2, 3, 4)]

    def test_path_graph(self):
        g = make_graph(3, [(1, 3), (2, 3)])
        assert star_decomposition(g) == (3, [(1, 3), (2, 3)])

    def test_long_path_is_not_a_star(self):
        g = make_graph(4, [(1, 2), (2, 3), (3, 4)])
        assert star_decomposition(g) is None

    def test_requires_block(self):
        cycle = make_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        with pytest.raises(GraphError, match="block"):
            star_decomposition(cycle)

    def test_derived_block_graphs_are_stars(self):
        # structural consequence: zeroed tree with block derived graph
        # always decomposes as a star
        rng = random.Random(99)
        hits = 0
        for _ in range(300):
            t = random_tree(rng)
            g = derive_graph(t)
            if t.zeroed and is_block_graph(g):
                assert star_decomposition(g) is not None
                hits += 1
        assert hits >= 30  # the sweep actually exercised the case


class TestCompletion:
    def test_merges_rule_instances(self):
        g = derive_graph(fixture_tree("leafcolor_g1"))  # vertices 1,2 share
        comp = completion(g)
        assert comp.is_complete()
        assert comp.edge_color[(1, 3)] == comp.edge_color[(2, 3)]
        assert comp.edge_color[(1, 4)] == comp.edge_color[(2, 4)]
        assert comp.edge_color[(1, 2)] != comp.edge_color[(1, 3)]

    def test_distinct_colors_all_singletons(self):
        g = derive_graph(fixture_tree("uncolored_binary"))
        comp = completion(g)
        assert len(set(comp.edge_color.values())) == len(comp.edges)

    def test_three_way_merge(self):
        g = ColoredGraph(
            n=3,
            edges=[(1, 2), (1, 3), (2, 3)],
            vertex_color={1: "a", 2: "a", 3: "a"},
            edge_color={(1, 2): "x", (1, 3): "y", (2, 3): "z"},
        )
        comp = completion(g)
        assert len(set(comp.edge_color.values())) == 1

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10**6))
    def test_matches_fixed_point_oracle(self, seed):
        rng = random.Random(seed)
        t = random_tree(rng, leaf_mode="random")
        g = derive_graph(t)
        comp = completion(g)
        got = {}
        for e, c in comp.edge_color.items():
            got.setdefault(c, set()).add(e)
        assert set(map(frozenset, got.values())) == completion_closure_oracle(g)


class TestSeparatedQuadruples:
    def test_complete_graph_empty(self):
        assert one_clique_separated_quadruples(complete_graph(4)) == set()

    def test_star_with_diagonal_cases(self):
        g = make_graph(4, [(1, 2), (1, 4), (2, 4), (3, 4)])
        quads = one_clique_separated_quadruples(g)
        assert ((1, 2), (3, 4)) in quads
        assert ((1, 4), (3, 4)) in quads  # diagonal: 4 in both pairs
        assert ((2, 4), (3, 4)) in quads
        assert ((1, 2), (1, 3)) not in quads

    def test_path_graph(self):
        g = make_graph(3, [(1, 3), (2, 3)])
        assert one_clique_separated_quadruples(g) == {((1, 3), (2, 3))}

    def test_matches_bipartition_oracle(self):
        rng = random.Random(11)
        checked = 0
        while checked < 60:
            t = random_tree(rng, zero_mode="chain", leaf_mode="distinct")
            g = derive_graph(t)
            if not is_block_graph(g):
                continue
            assert one_clique_separated_quadruples(g) == minor_quadruples_oracle(g)
            checked += 1

    def test_requires_block(self):
        cycle = make_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        with pytest.raises(GraphError):
            one_clique_separated_quadruples(cycle)


class TestValidation:
    def test_shared_vertex_edge_tokens_rejected(self):
        with pytest.raises(GraphError, match="share color tokens"):
            ColoredGraph(
                n=2,
                edges=[(1, 2)],
                vertex_color={1: "a", 2: "b"},
                edge_color={(1, 2): "a"},
            )
