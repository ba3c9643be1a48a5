"""Maximal cliques and clique trees of chordal graphs.

A clique tree pair ``(T, sigma)`` assigns the maximal cliques of ``G``
bijectively to the nodes of a tree ``T`` so that, for every vertex ``v``,
the nodes whose clique contains ``v`` induce a subtree. Chordal graphs are
exactly the graphs with a clique tree; the one built here is a maximum
weight spanning tree of the clique intersection graph.

For threshold graphs the pair is valid iff the nodes carrying cliques of
size at least ``j`` induce nested subtrees, for every ``j``; assigning
cliques in breadth-first order by decreasing size therefore works on any
tree, which makes threshold graphs clique tree universal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, PreconditionError, ResourceError, ValidationError
from .graph import Graph
from .recognizers import recognize_chordal, recognize_threshold
from .trees import TreeShape, free_trees, star_tree

MAX_UNIVERSAL_CLIQUES = 9


def _clique_key(c: frozenset[int]):
    return (-len(c), tuple(sorted(c)))


def _require_chordal(g: Graph):
    rec = recognize_chordal(g)
    if not rec:
        raise PreconditionError("graph is not chordal", rec.witness)
    return rec.certificate


def maximal_cliques_chordal(g: Graph) -> tuple[frozenset[int], ...]:
    """All maximal cliques, by decreasing size then lexicographically.

    Each vertex together with its later neighbours in a perfect elimination
    ordering is a clique; the maximal ones among these are all of them.
    """
    peo = _require_chordal(g)
    pos = {v: i for i, v in enumerate(peo)}
    candidates = {frozenset([v, *(w for w in g.adj[v] if pos[w] > pos[v])]) for v in peo}
    maximal = [c for c in candidates if not any(c < d for d in candidates)]
    return tuple(sorted(maximal, key=_clique_key))


@dataclass(frozen=True)
class CliqueTreePair:
    tree: TreeShape
    assignment: tuple[int, ...]  # node -> index into the maximal clique list

    def cliques_at_nodes(self, cliques: Sequence[frozenset[int]]) -> list[frozenset[int]]:
        return [cliques[i] for i in self.assignment]

    def to_json(self, cliques: Sequence[frozenset[int]]) -> dict:
        return {
            "nodes": [sorted(c) for c in self.cliques_at_nodes(cliques)],
            "edges": [list(e) for e in self.tree.edges],
        }

    def to_dot(self, cliques: Sequence[frozenset[int]], name: str = "T") -> str:
        lines = [f"graph {name} {{"]
        for node, c in enumerate(self.cliques_at_nodes(cliques)):
            label = "{" + ",".join(map(str, sorted(c))) + "}"
            lines.append(f'  {node} [label="{label}"];')
        lines.extend(f"  {a} -- {b};" for a, b in self.tree.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass
class TreeCheck:
    ok: bool
    vertex: int | None = None

    def __bool__(self):
        return self.ok


def _check_bijection(p: CliqueTreePair, k: int) -> None:
    if p.tree.k != k or sorted(p.assignment) != list(range(k)):
        raise ValidationError(f"assignment is not a bijection onto {k} maximal cliques")


def verify_clique_tree_pair(
    g: Graph, p: CliqueTreePair, cliques: Sequence[frozenset[int]] | None = None
) -> TreeCheck:
    """Subtree property for every vertex; reports the first vertex that breaks it."""
    cliques = maximal_cliques_chordal(g) if cliques is None else cliques
    _check_bijection(p, len(cliques))
    at = p.cliques_at_nodes(cliques)
    for v in g.vertices:
        nodes = [x for x in range(p.tree.k) if v in at[x]]
        if not p.tree.is_connected_subset(nodes):
            return TreeCheck(False, v)
    return TreeCheck(True)


def kj_profile(g: Graph) -> tuple[int, ...]:
    """``|K^j|`` (maximal cliques of size at least ``j``) for ``j = 1..omega``."""
    sizes = [len(c) for c in maximal_cliques_chordal(g)]
    omega = max(sizes, default=0)
    return tuple(sum(1 for s in sizes if s >= j) for j in range(1, omega + 1))


def _require_threshold(g: Graph) -> None:
    rec = recognize_threshold(g)
    if not rec:
        raise PreconditionError("graph is not threshold", rec.witness)


def verify_threshold_tree_pair(
    g: Graph, p: CliqueTreePair, cliques: Sequence[frozenset[int]] | None = None
) -> bool:
    """Nested-subtree test: each ``T_j`` is a subtree and ``T_{j+1}`` a subtree of ``T_j``."""
    _require_threshold(g)
    cliques = maximal_cliques_chordal(g) if cliques is None else cliques
    _check_bijection(p, len(cliques))
    size = [len(cliques[i]) for i in p.assignment]
    omega = max(size)
    prev = None
    for j in range(1, omega + 1):
        nodes = {x for x in range(p.tree.k) if size[x] >= j}
        if not p.tree.is_connected_subset(nodes):
            return False
        if prev is not None and not nodes <= prev:
            return False
        prev = nodes
    return True


def universal_assignment(g: Graph, t: TreeShape) -> CliqueTreePair:
    """Breadth-first from node 0, give each new node a largest unassigned clique."""
    _require_threshold(g)
    cliques = maximal_cliques_chordal(g)
    if t.k != len(cliques):
        raise DomainError(f"tree has {t.k} nodes but the graph has {len(cliques)} maximal cliques")
    assignment = [0] * t.k
    for rank, (node, _) in enumerate(t.bfs_order(0)):
        assignment[node] = rank  # cliques are already sorted largest first
    return CliqueTreePair(t, tuple(assignment))


def find_assignment(
    g: Graph, t: TreeShape, cliques: Sequence[frozenset[int]] | None = None
) -> CliqueTreePair | None:
    """Backtracking search for a bijection making ``t`` a clique tree of ``g``.

    Nodes are filled in breadth-first order. A clique may go on node ``w``
    (parent ``p``) only if each of its vertices already seen elsewhere is
    also in the clique on ``p``; this local test is exact, since the path
    from ``w`` to any earlier node runs through ``p``.
    """
    cliques = maximal_cliques_chordal(g) if cliques is None else cliques
    k = len(cliques)
    if t.k != k:
        raise DomainError(f"tree has {t.k} nodes but the graph has {k} maximal cliques")
    order = t.bfs_order(0)
    assignment = [-1] * k
    used = [False] * k
    seen: dict[int, int] = {}

    def place(step: int) -> bool:
        if step == k:
            return True
        node, parent = order[step]
        for ci in range(k):
            if used[ci]:
                continue
            c = cliques[ci]
            if parent is not None:
                on_parent = cliques[assignment[parent]]
                if any(seen.get(v, 0) and v not in on_parent for v in c):
                    continue
            used[ci] = True
            assignment[node] = ci
            for v in c:
                seen[v] = seen.get(v, 0) + 1
            if place(step + 1):
                return True
            for v in c:
                seen[v] -= 1
            used[ci] = False
        assignment[node] = -1
        return False

    if place(0):
        return CliqueTreePair(t, tuple(assignment))
    return None


@dataclass
class UniversalityResult:
    universal: bool
    failing_tree: TreeShape | None = None
    trees_checked: int = 0

    def __bool__(self):
        return self.universal


def is_clique_tree_universal(g: Graph) -> UniversalityResult:
    """Whether every tree on ``|M_G|`` nodes is a clique tree of ``g``.

    Trees are enumerated up to isomorphism (the assignment absorbs any
    labelling), paths first.
    """
    cliques = maximal_cliques_chordal(g)
    k = len(cliques)
    if k > MAX_UNIVERSAL_CLIQUES:
        raise ResourceError(f"{k} maximal cliques exceeds the enumeration bound {MAX_UNIVERSAL_CLIQUES}")
    checked = 0
    for t in free_trees(k):
        checked += 1
        if find_assignment(g, t, cliques) is None:
            return UniversalityResult(False, t, checked)
    return UniversalityResult(True, None, checked)


def star_clique_tree_check(g: Graph) -> bool:
    """Whether the star on ``|M_G|`` nodes is a clique tree.

    Always true for split graphs. The converse needs at least four maximal
    cliques, since smaller stars are paths.
    """
    cliques = maximal_cliques_chordal(g)
    return find_assignment(g, star_tree(len(cliques)), cliques) is not None


def gavril_clique_tree(g: Graph) -> CliqueTreePair:
    """Maximum-weight spanning tree of the clique intersection graph.

    Weights are intersection sizes; zero-weight pairs are allowed so that
    disconnected graphs still get a single tree.
    """
    cliques = maximal_cliques_chordal(g)
    k = len(cliques)
    pairs = sorted(
        ((len(cliques[a] & cliques[b]), a, b) for a in range(k) for b in range(a + 1, k)),
        key=lambda e: (-e[0], e[1], e[2]),
    )
    root = list(range(k))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    edges = []
    for _, a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            root[ra] = rb
            edges.append((a, b))
    return CliqueTreePair(TreeShape(k, tuple(edges)), tuple(range(k)))
