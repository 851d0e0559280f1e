"""Rooted trees with colored and zeroed nodes.

The root is the distinguished leaf 0, the non-root leaves are 1..n, and
internal nodes carry ids above n.  Every non-root node has a parent; the
single child of 0 is the "top" internal node.  Non-root nodes carry a color
token unless they are zeroed; leaves and internal nodes never share colors.
Zeroed nodes are internal nodes whose matrix parameter is pinned to zero.

Trees are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .errors import TreeError


class ColoredTree:
    """A validated rooted tree with colored and zeroed nodes.

    Attributes
    ----------
    n_leaves : int
        Number of non-root leaves (labeled 1..n).
    parent : dict[int, int]
        Parent id for every non-root node; exactly one node has parent 0.
    color : dict[int, str]
        Color token for every non-root, non-zeroed node.
    zeroed : frozenset[int]
        Zeroed internal nodes.  The top internal node is never zeroed.
    """

    def __init__(
        self,
        n_leaves: int,
        parent: Mapping[int, int],
        color: Mapping[int, str],
        zeroed: Iterable[int] = (),
    ):
        self.n_leaves = int(n_leaves)
        self.parent = {int(k): int(v) for k, v in parent.items()}
        self.color = {int(k): str(v) for k, v in color.items()}
        self.zeroed = frozenset(int(z) for z in zeroed)
        self._validate()

        self.children: dict[int, list[int]] = {i: [] for i in self.nodes()}
        self.children[0] = []
        for child, par in sorted(self.parent.items()):
            self.children[par].append(child)

        # Depth from the root leaf 0 (0 itself has depth 0).
        self._depth = {0: 0}
        for node in self._toposort():
            self._depth[node] = self._depth[self.parent[node]] + 1

        self._height = {i: 0 for i in self.leaves()}
        for node in reversed(self._toposort()):
            if node in self.internal_nodes():
                self._height[node] = 1 + min(
                    self._height[c] for c in self.children[node]
                )

    # ---------------------------------------------------------------- #
    # node sets                                                          #
    # ---------------------------------------------------------------- #

    def leaves(self) -> list[int]:
        return list(range(1, self.n_leaves + 1))

    def internal_nodes(self) -> list[int]:
        return sorted(i for i in self.parent if i > self.n_leaves)

    def nodes(self) -> list[int]:
        """All non-root nodes, leaves first."""
        return self.leaves() + self.internal_nodes()

    def top_node(self) -> int:
        """The unique child of the root leaf 0."""
        return next(i for i, p in self.parent.items() if p == 0)

    def center_leaf(self) -> int | None:
        """The unique leaf whose parent is the top internal node, if any.

        Well-defined for every tree whose derived graph is a non-complete
        block graph; ``None`` when no or several such leaves exist.
        """
        top = self.top_node()
        cands = [i for i in self.leaves() if self.parent.get(i) == top]
        return cands[0] if len(cands) == 1 else None

    def depth(self, i: int) -> int:
        self._check_node(i, allow_root=True)
        return self._depth[i]

    def height(self, i: int) -> int:
        """Edges on the shortest path from node i down to a non-root leaf."""
        self._check_node(i)
        return self._height[i]

    def descendants(self, i: int) -> set[int]:
        """All nodes strictly below i (leaves and internal nodes)."""
        self._check_node(i, allow_root=True)
        out: set[int] = set()
        stack = list(self.children[i])
        while stack:
            node = stack.pop()
            out.add(node)
            stack.extend(self.children[node])
        return out

    # ---------------------------------------------------------------- #
    # paths and ancestry                                                 #
    # ---------------------------------------------------------------- #

    def lca(self, i: int, j: int) -> int:
        """Deepest common ancestor of nodes i and j (0 permitted)."""
        self._check_node(i, allow_root=True)
        self._check_node(j, allow_root=True)
        a, b = i, j
        while self._depth[a] > self._depth[b]:
            a = self.parent[a]
        while self._depth[b] > self._depth[a]:
            b = self.parent[b]
        while a != b:
            a = self.parent[a]
            b = self.parent[b]
        return a

    def path_edges(self, i: int, j: int) -> list[tuple[int, int]]:
        """Edges of the unique i-j path, each oriented (parent, child).

        Ordered as the climb i -> lca followed by the descent lca -> j.
        """
        if i == j:
            raise TreeError(f"path endpoints coincide: {i}")
        anc = self.lca(i, j)
        up = []
        node = i
        while node != anc:
            up.append((self.parent[node], node))
            node = self.parent[node]
        down = []
        node = j
        while node != anc:
            down.append((self.parent[node], node))
            node = self.parent[node]
        return up + down[::-1]

    def tree_distance(self, i: int, j: int) -> int:
        """Number of edges on the i-j path."""
        anc = self.lca(i, j)
        return self._depth[i] + self._depth[j] - 2 * self._depth[anc]

    # ---------------------------------------------------------------- #
    # colors                                                             #
    # ---------------------------------------------------------------- #

    def leaf_colors(self) -> dict[int, str]:
        return {i: self.color[i] for i in self.leaves()}

    def internal_color_classes(self) -> dict[str, list[int]]:
        """Non-zeroed internal nodes grouped by color token."""
        classes: dict[str, list[int]] = {}
        for i in self.internal_nodes():
            if i not in self.zeroed:
                classes.setdefault(self.color[i], []).append(i)
        return classes

    # ---------------------------------------------------------------- #
    # serialization                                                      #
    # ---------------------------------------------------------------- #

    def to_dict(self) -> dict:
        return {
            "n_leaves": self.n_leaves,
            "parents": {str(k): v for k, v in sorted(self.parent.items())},
            "colors": {str(k): v for k, v in sorted(self.color.items())},
            "zeroed": sorted(self.zeroed),
        }

    def __repr__(self) -> str:
        return (
            f"ColoredTree(n_leaves={self.n_leaves}, "
            f"internal={self.internal_nodes()}, zeroed={sorted(self.zeroed)})"
        )

    # ---------------------------------------------------------------- #
    # validation                                                         #
    # ---------------------------------------------------------------- #

    def _check_node(self, i: int, allow_root: bool = False) -> None:
        if i == 0 and allow_root:
            return
        if i not in self.parent:
            raise TreeError(f"unknown node id: {i}")

    def _toposort(self) -> list[int]:
        """Non-root nodes ordered root-down (parents before children)."""
        return sorted(self.parent, key=lambda v: self._depth_unchecked(v))

    def _depth_unchecked(self, node: int) -> int:
        d = 0
        while node != 0:
            node = self.parent[node]
            d += 1
        return d

    def _validate(self) -> None:
        n = self.n_leaves
        if n < 1:
            raise TreeError("n_leaves must be at least 1")
        ids = set(self.parent)
        if set(range(1, n + 1)) - ids:
            raise TreeError("every leaf 1..n needs a parent entry")
        if any(i <= 0 for i in ids):
            raise TreeError("node ids must be positive")
        if sum(1 for p in self.parent.values() if p == 0) != 1:
            raise TreeError("exactly one node must have parent 0")

        # Acyclicity and connectivity: every node must reach 0 without
        # revisiting and without leaving the id set.
        for start in ids:
            seen = set()
            node = start
            while node != 0:
                if node in seen:
                    raise TreeError("parent map contains a cycle")
                seen.add(node)
                if node not in self.parent:
                    raise TreeError(f"parent chain leaves the node set at {node}")
                node = self.parent[node]

        internal = {i for i in ids if i > n}
        leaves = set(range(1, n + 1))
        if ids != internal | leaves:
            raise TreeError("internal node ids must exceed n_leaves")
        bad_parents = set(self.parent.values()) & leaves
        if bad_parents:
            raise TreeError(f"leaves cannot be parents: {sorted(bad_parents)}")

        n_children: dict[int, int] = {}
        for p in self.parent.values():
            n_children[p] = n_children.get(p, 0) + 1
        for i in internal:
            if n_children.get(i, 0) < 2:
                raise TreeError(f"internal node {i} has fewer than 2 children")

        if not self.zeroed <= internal:
            raise TreeError("zeroed nodes must be internal nodes")
        top = next(i for i, p in self.parent.items() if p == 0)
        if top in self.zeroed:
            raise TreeError("zeroed top node")

        expect_colored = (leaves | internal) - self.zeroed
        missing = expect_colored - set(self.color)
        if missing:
            raise TreeError(f"missing colors for nodes {sorted(missing)}")
        extra = set(self.color) - expect_colored
        if extra & self.zeroed:
            raise TreeError(f"zeroed nodes cannot carry colors: {sorted(extra)}")
        if extra:
            raise TreeError(f"colors given for unknown nodes {sorted(extra)}")

        leaf_colors = {self.color[i] for i in leaves}
        internal_colors = {self.color[i] for i in internal - self.zeroed}
        shared = leaf_colors & internal_colors
        if shared:
            raise TreeError(f"leaves and internal nodes share colors: {sorted(shared)}")


def parse_tree(text: str) -> ColoredTree:
    """Parse and validate a JSON tree document.

    Schema::

        {"n_leaves": int,
         "parents": {"<id>": int, ...},
         "colors": {"<id>": "token", ...},
         "zeroed": [int, ...]}

    Beyond the :class:`ColoredTree` invariants, documents must label internal
    nodes contiguously as n+1..m.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TreeError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise TreeError("tree document must be a JSON object")
    for key in ("n_leaves", "parents"):
        if key not in doc:
            raise TreeError(f"missing required key {key!r}")
    try:
        tree = ColoredTree(
            n_leaves=doc["n_leaves"],
            parent=doc["parents"],
            color=doc.get("colors", {}),
            zeroed=doc.get("zeroed", []),
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, TreeError):
            raise
        raise TreeError(f"malformed tree document: {exc}") from exc
    internal = tree.internal_nodes()
    n = tree.n_leaves
    if internal != list(range(n + 1, n + 1 + len(internal))):
        raise TreeError("internal nodes must be labeled contiguously n+1..m")
    return tree


def load_tree(path) -> ColoredTree:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tree(fh.read())
