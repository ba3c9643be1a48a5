"""Tree shapes and enumeration of unlabelled (free) trees.

Free trees on ``k`` nodes are produced by generating every rooted tree as a
canonical parenthesis string, re-rooting each at its centre and keeping one
representative per canonical form. The counts follow OEIS A000055
(1, 1, 1, 2, 3, 6, 11, 23, 47, 106, ...).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, ValidationError


@dataclass(frozen=True)
class TreeShape:
    k: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValidationError("a tree needs at least one node")
        if len(self.edges) != self.k - 1:
            raise ValidationError(f"{len(self.edges)} edges for {self.k} nodes")
        nbrs = self.neighbours()
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != self.k:
            raise ValidationError("tree shape is disconnected")

    def neighbours(self) -> list[list[int]]:
        nbrs: list[list[int]] = [[] for _ in range(self.k)]
        for a, b in self.edges:
            if not (0 <= a < self.k and 0 <= b < self.k) or a == b:
                raise ValidationError(f"bad tree edge ({a}, {b})")
            nbrs[a].append(b)
            nbrs[b].append(a)
        for row in nbrs:
            row.sort()
        return nbrs

    def is_connected_subset(self, nodes) -> bool:
        """Whether ``nodes`` induce a (non-empty) subtree."""
        nodes = set(nodes)
        if not nodes:
            return False
        inside = sum(1 for a, b in self.edges if a in nodes and b in nodes)
        return inside == len(nodes) - 1

    def bfs_order(self, root: int = 0) -> list[tuple[int, int | None]]:
        """``(node, parent)`` in breadth-first order, neighbours by increasing index."""
        nbrs = self.neighbours()
        order = [(root, None)]
        seen = {root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    order.append((y, x))
                    queue.append(y)
        return order

    def degrees(self) -> list[int]:
        return [len(r) for r in self.neighbours()]

    def canonical(self) -> str:
        return free_canonical_form(self)

    def to_json(self):
        return {"k": self.k, "edges": [list(e) for e in self.edges]}


def path_tree(k: int) -> TreeShape:
    return TreeShape(k, tuple((i, i + 1) for i in range(k - 1)))


def star_tree(k: int) -> TreeShape:
    """Star on ``k`` nodes with centre 0."""
    return TreeShape(k, tuple((0, i) for i in range(1, k)))


def prufer_to_tree(seq, k: int) -> TreeShape:
    if k == 1:
        return TreeShape(1, ())
    if len(seq) != k - 2:
        raise DomainError("Prüfer sequence must have length k - 2")
    degree = [1] * k
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(k) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(k) if degree[i] == 1)
    edges.append((u, v))
    return TreeShape(k, tuple(edges))


def _rooted_form(nbrs, root: int, parent: int | None = None) -> str:
    kids = sorted(_rooted_form(nbrs, c, root) for c in nbrs[root] if c != parent)
    return "(" + "".join(kids) + ")"


def centres(tree: TreeShape) -> list[int]:
    nbrs = tree.neighbours()
    deg = [len(r) for r in nbrs]
    layer = [v for v in range(tree.k) if deg[v] <= 1]
    left = tree.k
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in nbrs[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def free_canonical_form(tree: TreeShape) -> str:
    nbrs = tree.neighbours()
    return min(_rooted_form(nbrs, c) for c in centres(tree))


@lru_cache(maxsize=None)
def _rooted_trees(k: int) -> tuple[str, ...]:
    if k == 1:
        return ("()",)
    out: set[str] = set()

    def pick(remaining: int, max_key: tuple[int, int], chosen: list[str]):
        if remaining == 0:
            out.add("(" + "".join(sorted(chosen)) + ")")
            return
        for size in range(min(remaining, max_key[0]), 0, -1):
            forms = _rooted_trees(size)
            top = len(forms) - 1 if size < max_key[0] else max_key[1]
            for idx in range(top, -1, -1):
                pick(remaining - size, (size, idx), chosen + [forms[idx]])

    pick(k - 1, (k - 1, len(_rooted_trees(k - 1)) - 1), [])
    return tuple(sorted(out))


def _form_to_tree(form: str) -> TreeShape:
    edges = []
    stack: list[int] = []
    count = 0
    for ch in form:
        if ch == "(":
            if stack:
                edges.append((stack[-1], count))
            stack.append(count)
            count += 1
        else:
            stack.pop()
    return TreeShape(count, tuple(edges))


def free_trees(k: int) -> list[TreeShape]:
    """One representative of every isomorphism class of trees on ``k`` nodes.

    Ordered by decreasing diameter, so the path comes first and the star last.
    """
    if k < 1:
        raise DomainError("trees need at least one node")
    seen: dict[str, TreeShape] = {}
    for form in _rooted_trees(k):
        t = _form_to_tree(form)
        seen.setdefault(free_canonical_form(t), t)
    return sorted(seen.values(), key=lambda t: (-diameter(t), free_canonical_form(t)))


def diameter(tree: TreeShape) -> int:
    def farthest(src):
        dist = {src: 0}
        queue = deque([src])
        nbrs = tree.neighbours()
        while queue:
            x = queue.popleft()
            for y in nbrs[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        far = max(dist, key=lambda v: (dist[v], -v))
        return far, dist[far]

    a, _ = farthest(0)
    return farthest(a)[1]
