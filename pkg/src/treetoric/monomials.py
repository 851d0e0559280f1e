"""Monomial parametrizations built from paths between leaves.

The path map sends the coordinate x_ij (0 <= i < j <= n) to the product of
the parameters of the non-zeroed nodes met along the tree path i <-> j,
where each path edge (l,k) contributes the parameter of its lower node k
and parameters are indexed by color tokens.  With zeroed nodes present the
coordinate x_0c of the unique leaf c under the top internal node is instead
sent to the square of c's parameter.

One construction therefore covers the uncolored map (all tokens distinct),
the leaf-colored map (tokens merge), and both zeroed variants (the squared
center rule switches on exactly when the zeroed set is nonempty).

Everything is an exponent matrix; kernel membership of a binomial reduces
to equality of two integer vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import linalg
from .binomials import Binomial, Monomial, Var, coord_var, var_name
from .errors import GraphError
from .graphs import derive_graph, is_block_graph, is_connected, star_decomposition
from .laplacians import pq_index_pairs
from .trees import ColoredTree


@dataclass(frozen=True)
class MonomialMap:
    """Exponent matrix of a monomial map: coordinates x parameters."""

    kind: str
    n: int
    params: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def coords(self) -> list[Var]:
        return [coord_var(self.kind, i, j) for i, j in pq_index_pairs(self.n)]

    def row_of(self, v: Var) -> tuple[int, ...]:
        kind, i, j = v
        if kind != self.kind:
            raise KeyError(f"variable {var_name(v)} has kind {kind!r}, map is {self.kind!r}")
        pairs = pq_index_pairs(self.n)
        try:
            idx = pairs.index((i, j))
        except ValueError:
            raise KeyError(f"variable {var_name(v)} outside coordinate range") from None
        return self.rows[idx]

    def image_exponents(self, m: Monomial) -> tuple[int, ...]:
        """Total parameter exponent vector of the image of a monomial."""
        total = [0] * len(self.params)
        for v, e in m:
            row = self.row_of(v)
            for k, r in enumerate(row):
                if r:
                    total[k] += e * r
        return tuple(total)

    def in_kernel(self, b: Binomial) -> bool:
        """True iff both monomials map to the same parameter monomial."""
        return self.image_exponents(b.lead) == self.image_exponents(b.trail)

    def evaluate(self, theta: Mapping[str, Fraction]) -> dict[Var, Fraction]:
        """Point of the parametrized variety at the given parameter values."""
        missing = [p for p in self.params if p not in theta]
        if missing:
            raise KeyError(f"no value for parameters {missing}")
        values = {}
        for v, row in zip(self.coords(), self.rows):
            acc = Fraction(1)
            for tok, e in zip(self.params, row):
                if e:
                    acc *= Fraction(theta[tok]) ** e
            values[v] = acc
        return values

    def occurring_params(self) -> list[str]:
        """Parameters whose column contains a nonzero exponent."""
        return [
            tok
            for k, tok in enumerate(self.params)
            if any(row[k] for row in self.rows)
        ]


def exponent_rank(m: MonomialMap) -> int:
    """Exact integer rank of the exponent matrix."""
    return linalg.rank_int(m.rows)


def path_map(t: ColoredTree, kind: str | None = None) -> MonomialMap:
    """Path map of a colored tree with zeroed nodes.

    Coordinates default to p-variables, switching to q-variables (and the
    squared-center override) when zeroed nodes are present.

    Raises
    ------
    GraphError
        With zeroed nodes, when the derived graph is not a connected star
        block graph (the center coordinate would be ill-defined).
    """
    if kind is None:
        kind = "q" if t.zeroed else "p"
    n = t.n_leaves
    tokens = sorted(
        {t.color[i] for i in t.nodes() if i not in t.zeroed}
    )
    pos = {tok: k for k, tok in enumerate(tokens)}

    center = None
    if t.zeroed:
        g = derive_graph(t)
        if not is_connected(g) or not is_block_graph(g):
            raise GraphError(
                "zeroed nodes need a connected block derived graph for the path map"
            )
        if star_decomposition(g) is None or t.center_leaf() is None:
            raise GraphError("derived graph is not a star; no center coordinate")
        center = t.center_leaf()

    rows = []
    for i, j in pq_index_pairs(n):
        row = [0] * len(tokens)
        if t.zeroed and (i, j) == (0, center):
            row[pos[t.color[center]]] = 2
        else:
            for _, child in t.path_edges(i, j):
                if child not in t.zeroed:
                    row[pos[t.color[child]]] += 1
        rows.append(tuple(row))
    return MonomialMap(kind=kind, n=n, params=tuple(tokens), rows=tuple(rows))
