"""Linear coordinate changes between matrix entries and edge weights.

The reduced graph Laplacian sends a symmetric matrix (sigma-coordinates) to
weights p_ij on the complete graph over {0,..,n}: p_ij = -sigma_ij off the
root and p_0i = sum_j sigma_ij.  Its generalization for a graph G weights
the complete graph Gamma(G) by q-variables whose signs and 0-row corrections
depend on edge membership and vertex degrees; deleting row and column 0 of
the Laplacian of Gamma(G) and reading the entries as linear forms in q gives
an invertible linear system between sigma and q.

Both transformations are materialized as explicit N x N rational matrices
(N = n(n+1)/2) over fixed variable orderings, so application, inversion and
comparisons are uniform.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import linalg
from .binomials import Var, coord_var, var_name
from .errors import SingularMatrixError
from .graphs import ColoredGraph, edge
from .matrices import SymMatrix

LinForm = dict[tuple[int, int], int]  # q-variable index pair -> coefficient


def sigma_index_pairs(n: int) -> list[tuple[int, int]]:
    """(i,j) with 1 <= i <= j <= n, lexicographic."""
    return [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def pq_index_pairs(n: int) -> list[tuple[int, int]]:
    """(i,j) with 0 <= i < j <= n, lexicographic."""
    return [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]


def form_text(form: LinForm, kind: str = "q") -> str:
    """Human-readable linear form, e.g. ``q03 - q13 - q23``."""
    if not form:
        return "0"
    parts = []
    for (i, j), coeff in sorted(form.items()):
        name = var_name(coord_var(kind, i, j))
        mag = abs(coeff)
        term = name if mag == 1 else f"{mag}*{name}"
        if not parts:
            parts.append(term if coeff > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if coeff > 0 else f"- {term}")
    return " ".join(parts)


def _add(acc: LinForm, form: LinForm, sign: int = 1) -> None:
    for key, coeff in form.items():
        new = acc.get(key, 0) + sign * coeff
        if new:
            acc[key] = new
        else:
            acc.pop(key, None)


def gamma_graph(g: ColoredGraph) -> dict[tuple[int, int], LinForm]:
    """Symbolic edge weights of the weighted complete graph Gamma(G).

    On vertices {0,..,n}: edges inside G keep weight q_ij, non-edges get
    -q_ij, and the root edges {0,i} get q_0i minus a degree-dependent
    correction: the sum of q_ij over full-degree j when deg(i) < n-1, and
    over non-full-degree j when deg(i) = n-1.  Empty sums are zero.
    """
    n = g.n
    full = [j for j in g.vertices() if g.degree(j) == n - 1]
    not_full = [j for j in g.vertices() if g.degree(j) < n - 1]
    weights: dict[tuple[int, int], LinForm] = {}
    for i, j in ((a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)):
        sign = 1 if edge(i, j) in g.edges else -1
        weights[(i, j)] = {(i, j): sign}
    for i in g.vertices():
        form: LinForm = {(0, i): 1}
        others = not_full if g.degree(i) == n - 1 else full
        for j in others:
            if j != i:
                _add(form, {edge(i, j): 1}, sign=-1)
        weights[(0, i)] = form
    return weights


def gamma_laplacian(g: ColoredGraph) -> list[list[LinForm]]:
    """Graph Laplacian of Gamma(G) as an (n+1) x (n+1) grid of linear forms."""
    n = g.n
    weights = gamma_graph(g)
    grid: list[list[LinForm]] = [[{} for _ in range(n + 1)] for _ in range(n + 1)]
    for i in range(n + 1):
        diag: LinForm = {}
        for j in range(n + 1):
            if i == j:
                continue
            w = weights[(min(i, j), max(i, j))]
            _add(diag, w)
            neg: LinForm = {}
            _add(neg, w, sign=-1)
            grid[i][j] = neg
        grid[i][i] = diag
    return grid


@dataclass(frozen=True)
class CoordinateMap:
    """Invertible linear map between sigma-coordinates and p/q-coordinates.

    ``forward`` maps the sigma-vector (order :func:`sigma_index_pairs`) to
    the coordinate vector (order :func:`pq_index_pairs`); ``backward`` is its
    exact inverse.  Construction fails on a singular matrix.
    """

    n: int
    kind: str
    forward: tuple[tuple[Fraction, ...], ...]
    backward: tuple[tuple[Fraction, ...], ...]

    def sigma_vars(self) -> list[Var]:
        return [coord_var("s", i, j) for i, j in sigma_index_pairs(self.n)]

    def coord_vars(self) -> list[Var]:
        return [coord_var(self.kind, i, j) for i, j in pq_index_pairs(self.n)]

    def apply(self, m: SymMatrix) -> dict[Var, Fraction]:
        """Coordinate vector of a symmetric matrix, keyed by variable."""
        if m.n != self.n:
            raise ValueError("dimension mismatch")
        vec = [m[i - 1, j - 1] for i, j in sigma_index_pairs(self.n)]
        out = linalg.mat_vec(self.forward, vec)
        return dict(zip(self.coord_vars(), out))

    def unapply(self, point: Mapping[Var, Fraction]) -> SymMatrix:
        """Symmetric matrix whose coordinate vector is the given point."""
        vec = [point[v] for v in self.coord_vars()]
        sigma = linalg.mat_vec(self.backward, vec)
        rows = [[Fraction(0)] * self.n for _ in range(self.n)]
        for (i, j), val in zip(sigma_index_pairs(self.n), sigma):
            rows[i - 1][j - 1] = val
            rows[j - 1][i - 1] = val
        return SymMatrix.from_rows(rows)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "sigma_order": [var_name(v) for v in self.sigma_vars()],
            "coord_order": [var_name(v) for v in self.coord_vars()],
            "forward": [[str(x) for x in row] for row in self.forward],
        }


def _freeze(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def reduced_laplacian_map(n: int) -> CoordinateMap:
    """p_ij = -sigma_ij for 1 <= i < j, p_0i = sum_j sigma_ij."""
    if n < 1:
        raise ValueError("need n >= 1")
    sigma_pos = {pair: k for k, pair in enumerate(sigma_index_pairs(n))}
    rows = []
    for i, j in pq_index_pairs(n):
        row = [Fraction(0)] * len(sigma_pos)
        if i == 0:
            for k in range(1, n + 1):
                row[sigma_pos[(min(j, k), max(j, k))]] += 1
        else:
            row[sigma_pos[(i, j)]] = Fraction(-1)
        rows.append(row)
    backward = linalg.invert_fraction(rows)
    return CoordinateMap(n=n, kind="p", forward=_freeze(rows), backward=_freeze(backward))


def g_derived_laplacian_map(g: ColoredGraph) -> CoordinateMap:
    """Coordinate change read off the reduced Laplacian of Gamma(G).

    Entry (i,j) of the reduced Laplacian expresses sigma_ij as a linear form
    in the q-variables; inverting that system yields the sigma -> q map.
    """
    n = g.n
    grid = gamma_laplacian(g)
    q_pos = {pair: k for k, pair in enumerate(pq_index_pairs(n))}
    size = len(q_pos)
    backward_rows = []
    for i, j in sigma_index_pairs(n):
        row = [Fraction(0)] * size
        for q_pair, coeff in grid[i][j].items():
            row[q_pos[q_pair]] = Fraction(coeff)
        backward_rows.append(row)
    try:
        forward = linalg.invert_fraction(backward_rows)
    except SingularMatrixError as exc:
        raise SingularMatrixError(
            "derived Laplacian system is singular; construction bug"
        ) from exc
    return CoordinateMap(
        n=n, kind="q", forward=_freeze(forward), backward=_freeze(backward_rows)
    )
