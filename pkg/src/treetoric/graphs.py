"""Colored graphs derived from trees, and their structural predicates.

The graph derived from a tree lives on the non-root leaves: an edge {i,j}
exists iff lca(i,j) is not zeroed, vertex colors copy leaf colors, and edge
colors are the color tokens of the lca internal nodes.  Classification of
these graphs (vertex-regular, block, star) decides which toric description
applies downstream.
"""

from __future__ import annotations

from itertools import combinations

from .errors import GraphError
from .trees import ColoredTree


def edge(i: int, j: int) -> tuple[int, int]:
    """Canonical (min, max) form of an undirected edge."""
    return (i, j) if i < j else (j, i)


class ColoredGraph:
    """Simple graph on vertices 1..n with vertex and edge color classes."""

    def __init__(self, n, edges, vertex_color, edge_color):
        self.n = int(n)
        self.edges = frozenset(edge(*e) for e in edges)
        self.vertex_color = {int(v): str(c) for v, c in vertex_color.items()}
        self.edge_color = {edge(*e): str(c) for e, c in edge_color.items()}
        self._validate()

    def vertices(self) -> list[int]:
        return list(range(1, self.n + 1))

    def neighbors(self, v: int) -> list[int]:
        return sorted(
            u
            for u in self.vertices()
            if u != v and edge(u, v) in self.edges
        )

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def incident_edge_colors(self, v: int) -> list[str]:
        """Multiset (sorted) of colors on edges incident to v."""
        return sorted(
            self.edge_color[edge(v, u)] for u in self.neighbors(v)
        )

    def vertex_color_classes(self) -> dict[str, list[int]]:
        classes: dict[str, list[int]] = {}
        for v in self.vertices():
            classes.setdefault(self.vertex_color[v], []).append(v)
        return classes

    def edge_color_classes(self) -> dict[str, list[tuple[int, int]]]:
        classes: dict[str, list[tuple[int, int]]] = {}
        for e in sorted(self.edges):
            classes.setdefault(self.edge_color[e], []).append(e)
        return classes

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in sorted(self.edges)],
            "vertex_classes": {
                c: vs for c, vs in sorted(self.vertex_color_classes().items())
            },
            "edge_classes": {
                c: [list(e) for e in es]
                for c, es in sorted(self.edge_color_classes().items())
            },
        }

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, edges={sorted(self.edges)})"

    def _validate(self) -> None:
        verts = set(self.vertices())
        for i, j in self.edges:
            if i == j or i not in verts or j not in verts:
                raise GraphError(f"invalid edge ({i},{j})")
        if set(self.vertex_color) != verts:
            raise GraphError("every vertex needs a color")
        if set(self.edge_color) != set(self.edges):
            raise GraphError("every edge needs a color, and only edges")
        shared = set(self.vertex_color.values()) & set(self.edge_color.values())
        if shared:
            raise GraphError(f"vertices and edges share color tokens: {sorted(shared)}")


# -------------------------------------------------------------------- #
# construction from trees                                                #
# -------------------------------------------------------------------- #


def derive_graph(t: ColoredTree) -> ColoredGraph:
    """Graph on the non-root leaves with edges keyed by non-zeroed lcas."""
    n = t.n_leaves
    edges = {}
    for i, j in combinations(range(1, n + 1), 2):
        anc = t.lca(i, j)
        if anc not in t.zeroed:
            edges[(i, j)] = t.color[anc]
    return ColoredGraph(
        n=n,
        edges=edges.keys(),
        vertex_color={i: t.color[i] for i in t.leaves()},
        edge_color=edges,
    )


def vertex_regular_via_parents(t: ColoredTree) -> bool:
    """Parent criterion: same-colored leaves share a parent.

    Equivalent to vertex-regularity of the derived graph when no node is
    zeroed and internal colors are distinct; serves as its independent
    oracle in the tests.
    """
    by_color: dict[str, set[int]] = {}
    for i in t.leaves():
        by_color.setdefault(t.color[i], set()).add(t.parent[i])
    return all(len(parents) == 1 for parents in by_color.values())


# -------------------------------------------------------------------- #
# predicates                                                             #
# -------------------------------------------------------------------- #


def is_vertex_regular(g: ColoredGraph) -> bool:
    """Same-colored vertices see the same multiset of incident edge colors."""
    for verts in g.vertex_color_classes().values():
        if len(verts) < 2:
            continue
        reference = g.incident_edge_colors(verts[0])
        for v in verts[1:]:
            if g.incident_edge_colors(v) != reference:
                return False
    return True


def connected_components(g: ColoredGraph, removed: int | None = None) -> list[set[int]]:
    """Connected components, optionally with one vertex deleted."""
    remaining = [v for v in g.vertices() if v != removed]
    seen: set[int] = set()
    comps = []
    for start in remaining:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u != removed and u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: ColoredGraph) -> bool:
    return len(connected_components(g)) <= 1


def biconnected_components(g: ColoredGraph) -> list[set[int]]:
    """Vertex sets of the biconnected components (Hopcroft-Tarjan)."""
    index = {}
    low = {}
    counter = [0]
    edge_stack: list[tuple[int, int]] = []
    comps: list[set[int]] = []

    def dfs(v: int, parent: int | None) -> None:
        index[v] = low[v] = counter[0]
        counter[0] += 1
        for u in g.neighbors(v):
            if u == parent:
                continue
            if u not in index:
                edge_stack.append((v, u))
                dfs(u, v)
                low[v] = min(low[v], low[u])
                if low[u] >= index[v]:
                    comp: set[int] = set()
                    while True:
                        e = edge_stack.pop()
                        comp.update(e)
                        if e == (v, u):
                            break
                    comps.append(comp)
            elif index[u] < index[v]:
                edge_stack.append((v, u))
                low[v] = min(low[v], index[u])

    for start in g.vertices():
        if start not in index:
            dfs(start, None)
    return comps


def is_block_graph(g: ColoredGraph) -> bool:
    """Every biconnected component is a clique (per connected component)."""
    for comp in biconnected_components(g):
        for u, v in combinations(sorted(comp), 2):
            if edge(u, v) not in g.edges:
                return False
    return True


def _distances(g: ColoredGraph) -> dict[int, dict[int, int]]:
    dist: dict[int, dict[int, int]] = {}
    for source in g.vertices():
        d = {source: 0}
        frontier = [source]
        while frontier:
            nxt = []
            for v in frontier:
                for u in g.neighbors(v):
                    if u not in d:
                        d[u] = d[v] + 1
                        nxt.append(u)
            frontier = nxt
        dist[source] = d
    return dist


def four_point_check(g: ColoredGraph) -> bool:
    """Distance characterization of block graphs.

    For every vertex quadruple (within a connected component) the larger two
    of d(u,v)+d(w,x), d(u,w)+d(v,x), d(u,x)+d(v,w) must agree.  Independent
    of :func:`is_block_graph`; the two must coincide.
    """
    dist = _distances(g)
    for comp in connected_components(g):
        for u, v, w, x in combinations(sorted(comp), 4):
            sums = sorted(
                (
                    dist[u][v] + dist[w][x],
                    dist[u][w] + dist[v][x],
                    dist[u][x] + dist[v][w],
                )
            )
            if sums[1] != sums[2]:
                return False
    return True


def star_decomposition(
    g: ColoredGraph,
) -> tuple[int, list[tuple[int, ...]]] | None:
    """Central vertex and cliques of a star block graph.

    A star graph is a union of cliques pairwise intersecting in one common
    vertex.  Returns ``None`` when the block graph is not a star.  On a
    complete graph any vertex qualifies; the smallest id is returned.

    Raises
    ------
    GraphError
        If the graph is disconnected or not a block graph.
    """
    if not is_connected(g):
        raise GraphError("star decomposition needs a connected graph")
    if not is_block_graph(g):
        raise GraphError("not a block graph")
    if g.n == 1:
        return 1, [(1,)]
    cliques = [tuple(sorted(c)) for c in biconnected_components(g)]
    cliques.sort()
    common = set(cliques[0])
    for c in cliques[1:]:
        common &= set(c)
    if not common:
        return None
    return min(common), cliques


def one_clique_separated_quadruples(
    g: ColoredGraph,
) -> set[tuple[tuple[int, int], tuple[int, int]]]:
    """Pairs of vertex pairs separated by a single cut vertex.

    A pairing ((i,j),(k,l)) is collected when some cut vertex c places
    {i,j}\\{c} and {k,l}\\{c} in different components of g - c; c itself may
    occur in either pair.  These index the 2x2 minors generating the block
    graph's vanishing ideal.
    """
    if not is_connected(g):
        raise GraphError("separation analysis needs a connected graph")
    if not is_block_graph(g):
        raise GraphError("not a block graph")
    result: set[tuple[tuple[int, int], tuple[int, int]]] = set()
    all_pairs = list(combinations(g.vertices(), 2))
    for c in g.vertices():
        comps = connected_components(g, removed=c)
        if len(comps) < 2:
            continue
        comp_of = {v: idx for idx, comp in enumerate(comps) for v in comp}
        for p1, p2 in combinations(all_pairs, 2):
            overlap = set(p1) & set(p2)
            if overlap - {c}:
                continue
            rows = [v for v in p1 if v != c]
            cols = [v for v in p2 if v != c]
            if all(comp_of[x] != comp_of[y] for x in rows for y in cols):
                result.add((min(p1, p2), max(p1, p2)))
    return result


def completion(g: ColoredGraph) -> ColoredGraph:
    """Vertex-regular completion: complete graph carrying only the vertex
    symmetries of g.

    Edge classes are the finest partition of all pairs closed under
    "same-colored vertices i,j force {i,k} ~ {j,k} for every k", computed by
    union-find over the rule instances; untouched pairs stay singletons.
    """
    verts = g.vertices()
    all_pairs = [edge(i, j) for i, j in combinations(verts, 2)]
    parent: dict[tuple[int, int], tuple[int, int]] = {e: e for e in all_pairs}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for verts_same in g.vertex_color_classes().values():
        for i, j in combinations(verts_same, 2):
            for k in verts:
                if k not in (i, j):
                    union(edge(i, k), edge(j, k))

    edge_color = {e: f"E{find(e)[0]}_{find(e)[1]}" for e in all_pairs}
    return ColoredGraph(
        n=g.n,
        edges=all_pairs,
        vertex_color=g.vertex_color,
        edge_color=edge_color,
    )
