"""Symbolic symmetric-matrix patterns and exact rational matrices.

A :class:`MatrixPattern` records, for each entry of a symmetric n x n
matrix, either a color token (entries sharing a token must be equal) or
``None`` for a structural zero.  The pattern of a tree keys entry (i,j) by
the color of lca(i,j), with zeroed lcas giving structural zeros; the pattern
of a colored graph reads vertex and edge classes.  The two constructions
agree on derived graphs.

All numeric work happens on :class:`SymMatrix`, a symmetric matrix of exact
rationals.  Sampling, inversion and the Jordan product are exact; there is
no floating point and hence no tolerance anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import linalg
from .errors import SamplingError, SingularMatrixError
from .graphs import ColoredGraph, edge
from .trees import ColoredTree

SAMPLE_NUMERATOR_BOUND = 10**6
SAMPLE_DENOMINATOR_BOUND = 10**3
SAMPLE_RETRIES = 64


@dataclass(frozen=True)
class MatrixPattern:
    """Entry classes of a linear space of symmetric matrices.

    ``classes[i][j]`` is a color token or ``None`` for a structural zero;
    the grid is symmetric and the diagonal is never ``None``.
    """

    size: int
    classes: tuple[tuple[str | None, ...], ...]

    def __post_init__(self):
        n = self.size
        if len(self.classes) != n or any(len(r) != n for r in self.classes):
            raise ValueError("pattern grid must be n x n")
        for i in range(n):
            if self.classes[i][i] is None:
                raise ValueError("diagonal entries cannot be zeroed")
            for j in range(n):
                if self.classes[i][j] != self.classes[j][i]:
                    raise ValueError("pattern must be symmetric")

    def tokens(self) -> list[str]:
        """Sorted color tokens occurring in the pattern."""
        seen = {c for row in self.classes for c in row if c is not None}
        return sorted(seen)

    def instantiate(self, values: dict[str, Fraction]) -> "SymMatrix":
        """Matrix with each token replaced by its value and zeros kept."""
        n = self.size
        rows = [
            [
                Fraction(0) if self.classes[i][j] is None else values[self.classes[i][j]]
                for j in range(n)
            ]
            for i in range(n)
        ]
        return SymMatrix.from_rows(rows)


class SymMatrix:
    """Immutable symmetric matrix with exact rational entries."""

    __slots__ = ("entries",)

    def __init__(self, entries: tuple[tuple[Fraction, ...], ...]):
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i):
                if entries[i][j] != entries[j][i]:
                    raise ValueError("matrix must be exactly symmetric")

    def __setattr__(self, *args):
        raise AttributeError("SymMatrix is immutable")

    @classmethod
    def from_rows(cls, rows) -> "SymMatrix":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "SymMatrix":
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, SymMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"SymMatrix({[[str(x) for x in row] for row in self.entries]})"

    def to_json(self) -> list[list[str]]:
        """Rows of "num/den" strings."""
        return [[str(x) for x in row] for row in self.entries]

    def _int_scaled(self) -> tuple[list[list[int]], int]:
        """Integer matrix M_int with self = M_int / scale."""
        denoms = [x.denominator for row in self.entries for x in row]
        scale = lcm(*denoms) if denoms else 1
        return [[int(x * scale) for x in row] for row in self.entries], scale


def pattern_from_tree(t: ColoredTree) -> MatrixPattern:
    """Pattern of the tree's linear space: entry (i,j) keyed by lca color."""
    n = t.n_leaves
    grid = [[None] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            anc = t.lca(i, j)
            token = None if anc in t.zeroed else t.color[anc]
            grid[i - 1][j - 1] = token
            grid[j - 1][i - 1] = token
    return MatrixPattern(size=n, classes=tuple(tuple(r) for r in grid))


def pattern_from_graph(g: ColoredGraph) -> MatrixPattern:
    """Pattern of the colored graph's linear space.

    Diagonal entries carry vertex classes, off-diagonal entries edge classes,
    and non-edges are structural zeros.  Equals :func:`pattern_from_tree` on
    the tree's derived graph.
    """
    n = g.n
    grid = [[None] * n for _ in range(n)]
    for i in range(1, n + 1):
        grid[i - 1][i - 1] = g.vertex_color[i]
        for j in range(i + 1, n + 1):
            token = g.edge_color.get(edge(i, j))
            grid[i - 1][j - 1] = token
            grid[j - 1][i - 1] = token
    return MatrixPattern(size=n, classes=tuple(tuple(r) for r in grid))


def sample_point(pattern: MatrixPattern, seed: int) -> SymMatrix:
    """Deterministic invertible sample from the pattern.

    Each color token independently gets a rational with numerator uniform in
    [-10^6, 10^6] and denominator uniform in [1, 10^3]; resampled until the
    exact determinant is nonzero.  Positive definiteness is not required.

    Raises
    ------
    SamplingError
        After 64 failed retries (the pattern forces singularity).
    """
    rng = random.Random(seed)
    tokens = pattern.tokens()
    for _ in range(SAMPLE_RETRIES):
        values = {
            tok: Fraction(
                rng.randint(-SAMPLE_NUMERATOR_BOUND, SAMPLE_NUMERATOR_BOUND),
                rng.randint(1, SAMPLE_DENOMINATOR_BOUND),
            )
            for tok in tokens
        }
        m = pattern.instantiate(values)
        if det_exact(m) != 0:
            return m
    raise SamplingError(
        f"no invertible matrix in the pattern after {SAMPLE_RETRIES} tries"
    )


def pattern_contains(pattern: MatrixPattern, m: SymMatrix) -> bool:
    """Exact membership: zeros at structural zeros, equal entries per class."""
    if pattern.size != m.n:
        raise ValueError("size mismatch")
    witness: dict[str, Fraction] = {}
    for i in range(m.n):
        for j in range(m.n):
            token = pattern.classes[i][j]
            value = m[i, j]
            if token is None:
                if value != 0:
                    return False
            elif token in witness:
                if witness[token] != value:
                    return False
            else:
                witness[token] = value
    return True


def det_exact(m: SymMatrix) -> Fraction:
    return linalg.det_fraction(m.entries)


def invert_exact(m: SymMatrix) -> SymMatrix:
    """Exact inverse via fraction-free elimination.

    Raises
    ------
    SingularMatrixError
        When det(m) = 0.
    """
    try:
        inv = linalg.invert_fraction(m.entries)
    except SingularMatrixError:
        raise SingularMatrixError("matrix is exactly singular") from None
    return SymMatrix.from_rows(inv)


def jordan_product(x: SymMatrix, y: SymMatrix) -> SymMatrix:
    """Symmetrized product (XY + YX)/2, exact.

    Computed on integer-scaled copies so the inner products run on machine
    integers; a single rational division per entry restores the scale.
    """
    if x.n != y.n:
        raise ValueError("size mismatch")
    n = x.n
    a, sa = x._int_scaled()
    b, sb = y._int_scaled()
    denom = 2 * sa * sb
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            acc = 0
            for k in range(n):
                acc += a[i][k] * b[k][j] + b[i][k] * a[k][j]
            val = Fraction(acc, denom)
            rows[i][j] = val
            rows[j][i] = val
    return SymMatrix.from_rows(rows)
