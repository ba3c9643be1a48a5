"""Certificate-producing recognizers for the graph classes used throughout.

Every recognizer returns either a certificate that can be replayed or
checked against the input (cotree, perfect elimination ordering, creation
sequence, split partition, nested ordering) or a small forbidden induced
subgraph proving non-membership. Callers are expected to re-validate
certificates rather than trust them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import ValidationError
from .graph import Graph, complement, induced_subgraph

UNION, JOIN, LEAF = "union", "join", "leaf"
ISOLATED, DOMINATING = "isolated", "dominating"


# --- certificates -----------------------------------------------------------


@dataclass(frozen=True)
class Cotree:
    """A cotree node. Leaves carry ``vertex``; internal nodes carry ``children``."""

    kind: str
    children: tuple[Cotree, ...] = ()
    vertex: int | None = None

    @classmethod
    def leaf(cls, v: int) -> Cotree:
        return cls(LEAF, (), v)

    def leaves(self) -> list[int]:
        if self.kind == LEAF:
            return [self.vertex]
        return [v for c in self.children for v in c.leaves()]

    def evaluate(self, n: int | None = None) -> Graph:
        """Graph on vertices ``0..n-1`` built by the unions and joins of this tree."""
        self.check()
        leaves = self.leaves()
        n = max(leaves) + 1 if n is None else n
        edges: list[tuple[int, int]] = []
        self._edges(edges)
        return Graph.from_edges(n, edges)

    def _edges(self, out: list) -> list[int]:
        if self.kind == LEAF:
            return [self.vertex]
        parts = [c._edges(out) for c in self.children]
        if self.kind == JOIN:
            for a, b in combinations(parts, 2):
                out.extend((x, y) for x in a for y in b)
        return [v for p in parts for v in p]

    def check(self) -> None:
        if self.kind == LEAF:
            if self.vertex is None or self.children:
                raise ValidationError("malformed cotree leaf")
            return
        if self.kind not in (UNION, JOIN):
            raise ValidationError(f"unknown cotree node kind {self.kind!r}")
        if len(self.children) < 2:
            raise ValidationError("internal cotree node with fewer than two children")
        for c in self.children:
            c.check()
        leaves = self.leaves()
        if len(set(leaves)) != len(leaves):
            raise ValidationError("cotree repeats a leaf")

    def edge_children(self) -> int:
        """Number of children whose subgraph contains an edge."""
        return sum(c.has_edge() for c in self.children)

    def has_edge(self) -> bool:
        if self.kind == LEAF:
            return False
        if self.kind == JOIN:
            return True
        return any(c.has_edge() for c in self.children)

    def nodes(self):
        yield self
        for c in self.children:
            yield from c.nodes()

    def to_json(self):
        if self.kind == LEAF:
            return self.vertex
        return {self.kind: [c.to_json() for c in self.children]}


def union(*children: Cotree) -> Cotree:
    return Cotree(UNION, tuple(children))


def join(*children: Cotree) -> Cotree:
    return Cotree(JOIN, tuple(children))


@dataclass(frozen=True)
class CreationSequence:
    """Vertices in construction order with the tag each was added under.

    The first tag is always ``isolated`` (a lone vertex).
    """

    order: tuple[int, ...]
    tags: tuple[str, ...]

    def replay(self, n: int | None = None) -> Graph:
        n = len(self.order) if n is None else n
        edges = []
        for i, (v, tag) in enumerate(zip(self.order, self.tags)):
            if tag == DOMINATING:
                edges.extend((v, w) for w in self.order[:i])
            elif tag != ISOLATED:
                raise ValidationError(f"unknown creation tag {tag!r}")
        return Graph.from_edges(n, edges)

    def to_json(self):
        return {"order": list(self.order), "tags": list(self.tags)}


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]

    def check(self, g: Graph) -> bool:
        return (
            self.clique | self.independent == frozenset(g.vertices)
            and not self.clique & self.independent
            and g.is_clique(self.clique)
            and g.is_independent(self.independent)
        )

    def to_json(self):
        return {"clique": sorted(self.clique), "independent": sorted(self.independent)}


@dataclass
class Recognition:
    """Outcome of a recognizer: ``certificate`` if a member, else ``witness``.

    ``witness`` is a tuple of vertices inducing a forbidden subgraph, with
    ``witness_kind`` naming it (``"P4"``, ``"C4"``, ``"2K2"``, ``"C5"``, ``"C<k>"``).
    """

    graph_class: str
    member: bool
    certificate: object = None
    witness: tuple[int, ...] | None = None
    witness_kind: str | None = None
    extra: dict = field(default_factory=dict)

    def __bool__(self):
        return self.member

    def to_json(self) -> dict:
        out: dict = {"class": self.graph_class, "member": self.member}
        if self.member:
            cert = self.certificate
            out["certificate"] = cert.to_json() if hasattr(cert, "to_json") else cert
        else:
            out["witness"] = list(self.witness) if self.witness is not None else None
            out["witness_kind"] = self.witness_kind
        return out


# --- forbidden subgraph searches ---------------------------------------------


def find_induced_p4(g: Graph, within: Sequence[int] | None = None) -> tuple[int, ...] | None:
    """Vertices ``a, b, c, d`` inducing the path a-b-c-d, if one exists."""
    allowed = set(g.vertices if within is None else within)
    adj = g.adj
    for b in sorted(allowed):
        for c in sorted(adj[b]):
            if c not in allowed:
                continue
            left = [a for a in adj[b] if a in allowed and a != c and a not in adj[c]]
            if not left:
                continue
            right = [d for d in adj[c] if d in allowed and d != b and d not in adj[b]]
            for a in sorted(left):
                for d in sorted(right):
                    if d not in adj[a]:
                        return (a, b, c, d)
    return None


def find_induced_c4(g: Graph, within: Sequence[int] | None = None) -> tuple[int, ...] | None:
    """Vertices ``a, b, c, d`` in cyclic order inducing a 4-cycle."""
    allowed = set(g.vertices if within is None else within)
    adj = g.adj
    for a, c in combinations(sorted(allowed), 2):
        if c in adj[a]:
            continue
        common = sorted(x for x in adj[a] & adj[c] if x in allowed)
        for b, d in combinations(common, 2):
            if d not in adj[b]:
                return (a, b, c, d)
    return None


def find_induced_2k2(g: Graph, within: Sequence[int] | None = None) -> tuple[int, ...] | None:
    """Vertices ``a, b, c, d`` with ``ab`` and ``cd`` the only edges among them."""
    allowed = set(g.vertices if within is None else within)
    adj = g.adj
    edges = [(u, v) for u, v in g.edges() if u in allowed and v in allowed]
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1 :]:
            if len({a, b, c, d}) < 4:
                continue
            if c in adj[a] or d in adj[a] or c in adj[b] or d in adj[b]:
                continue
            return (a, b, c, d)
    return None


def find_induced_c5(g: Graph) -> tuple[int, ...] | None:
    adj = g.adj
    for a in g.vertices:
        for b in adj[a]:
            for c in adj[b]:
                if c == a or c in adj[a]:
                    continue
                for d in adj[c]:
                    if d in (a, b) or d in adj[a] or d in adj[b]:
                        continue
                    for e in adj[d] & adj[a]:
                        if e not in adj[b] and e not in adj[c] and e not in (b, c):
                            return (a, b, c, d, e)
    return None


def find_chordless_cycle(g: Graph) -> tuple[int, ...] | None:
    """An induced cycle of length at least four, listed in cyclic order.

    For every vertex ``v`` and non-adjacent pair ``x, y`` of its neighbours,
    a shortest x-y path avoiding the rest of ``N[v]`` closes an induced
    cycle through ``v``. Every induced cycle is found this way from any of
    its vertices, so the search is complete.
    """
    adj = g.adj
    for v in g.vertices:
        nbrs = sorted(adj[v])
        for x, y in combinations(nbrs, 2):
            if y in adj[x]:
                continue
            blocked = (adj[v] | {v}) - {x, y}
            parent = {x: None}
            queue = deque([x])
            while queue and y not in parent:
                z = queue.popleft()
                for w in sorted(adj[z]):
                    if w not in parent and w not in blocked:
                        parent[w] = z
                        queue.append(w)
            if y in parent:
                path = [y]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return (v, *reversed(path))
    return None


# --- cographs -----------------------------------------------------------------


def _cotree(g: Graph, verts: list[int]) -> Cotree | tuple[int, ...]:
    if len(verts) == 1:
        return Cotree.leaf(verts[0])
    sub, _ = induced_subgraph(g, verts)
    back = verts  # verts is sorted, so new index i maps to verts[i]
    comps = sub.components()
    kind = UNION
    if len(comps) == 1:
        comps = complement(sub).components()
        kind = JOIN
        if len(comps) == 1:
            p4 = find_induced_p4(sub)
            return tuple(back[i] for i in p4)
    children = []
    for comp in comps:
        child = _cotree(g, [back[i] for i in comp])
        if isinstance(child, tuple):
            return child
        children.append(child)
    return Cotree(kind, tuple(children))


def recognize_cograph(g: Graph) -> Recognition:
    """Cotree by recursive component / co-component splitting, or an induced P4."""
    if g.n == 0:
        return Recognition("cograph", True, None)
    result = _cotree(g, list(g.vertices))
    if isinstance(result, tuple):
        return Recognition("cograph", False, witness=result, witness_kind="P4")
    return Recognition("cograph", True, result)


# --- chordal graphs -------------------------------------------------------------


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic breadth-first search order (ties by lowest index)."""
    labels: dict[int, list[int]] = {v: [] for v in g.vertices}
    order: list[int] = []
    remaining = set(g.vertices)
    for step in range(g.n, 0, -1):
        v = max(remaining, key=lambda x: (labels[x], -x))
        remaining.discard(v)
        order.append(v)
        for w in g.adj[v]:
            if w in remaining:
                labels[w].append(step)
    return order


def is_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    """Each vertex's later neighbours form a clique."""
    if sorted(order) != list(g.vertices):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        first = min(later, key=pos.__getitem__)
        if any(w != first and w not in g.adj[first] for w in later):
            return False
    return True


def recognize_chordal(g: Graph) -> Recognition:
    """Perfect elimination ordering from reversed Lex-BFS, or a chordless cycle."""
    peo = lex_bfs(g)[::-1]
    if is_perfect_elimination_ordering(g, peo):
        return Recognition("chordal", True, tuple(peo))
    cycle = find_chordless_cycle(g)
    return Recognition("chordal", False, witness=cycle, witness_kind=f"C{len(cycle)}")


# --- threshold graphs -----------------------------------------------------------


def _threshold_witness(g: Graph, verts: list[int]) -> tuple[tuple[int, ...], str]:
    for finder, kind in ((find_induced_c4, "C4"), (find_induced_p4, "P4"), (find_induced_2k2, "2K2")):
        found = finder(g, verts)
        if found is not None:
            return found, kind
    raise AssertionError("peeling stalled on a {C4, P4, 2K2}-free graph")


def recognize_threshold(g: Graph) -> Recognition:
    """Peel dominating (preferred) or isolated vertices, lowest index first.

    The creation sequence is the reverse of the peeling order. When no
    vertex can be peeled the remaining graph contains an induced C4, P4 or
    2K2, which is returned as the witness.
    """
    remaining = set(g.vertices)
    deg = {v: len(g.adj[v]) for v in g.vertices}
    peeled: list[tuple[int, str]] = []
    while remaining:
        size = len(remaining)
        pick = None
        for v in sorted(remaining):
            if deg[v] == size - 1:
                pick = (v, DOMINATING)
                break
        if pick is None:
            for v in sorted(remaining):
                if deg[v] == 0:
                    pick = (v, ISOLATED)
                    break
        if pick is None:
            verts = sorted(remaining)
            witness, kind = _threshold_witness(g, verts)
            return Recognition("threshold", False, witness=witness, witness_kind=kind)
        v = pick[0]
        remaining.discard(v)
        for w in g.adj[v]:
            if w in remaining:
                deg[w] -= 1
        peeled.append(pick)
    peeled.reverse()
    order = tuple(v for v, _ in peeled)
    tags = (ISOLATED,) + tuple(t for _, t in peeled[1:])
    return Recognition("threshold", True, CreationSequence(order, tags))


def is_threshold(g: Graph) -> bool:
    return recognize_threshold(g).member


# --- split graphs and friends ------------------------------------------------------


def is_2k2_free(g: Graph) -> Recognition:
    w = find_induced_2k2(g)
    if w is None:
        return Recognition("2K2-free", True, None)
    return Recognition("2K2-free", False, witness=w, witness_kind="2K2")


def recognize_split(g: Graph) -> Recognition:
    """Split partition from the degree-sequence criterion, checked structurally.

    With degrees sorted as ``d1 >= ... >= dn`` and ``k`` the largest index
    with ``d_k >= k - 1``, the graph is split iff
    ``sum(d_1..d_k) == k(k-1) + sum(d_{k+1}..d_n)``; the top ``k`` vertices
    are then a clique and the rest independent. Non-split graphs contain an
    induced 2K2, C4 or C5, which is returned as the witness.
    """
    if g.n == 0:
        return Recognition("split", True, SplitPartition(frozenset(), frozenset()))
    order = sorted(g.vertices, key=lambda v: (-len(g.adj[v]), v))
    d = [len(g.adj[v]) for v in order]
    k = max(i for i in range(1, g.n + 1) if d[i - 1] >= i - 1)
    if sum(d[:k]) == k * (k - 1) + sum(d[k:]):
        part = SplitPartition(frozenset(order[:k]), frozenset(order[k:]))
        if not part.check(g):
            raise AssertionError("splittance criterion produced an invalid partition")
        return Recognition("split", True, part)
    for finder, kind in ((find_induced_2k2, "2K2"), (find_induced_c4, "C4"), (find_induced_c5, "C5")):
        w = finder(g)
        if w is not None:
            return Recognition("split", False, witness=w, witness_kind=kind)
    raise AssertionError("non-split graph without a 2K2, C4 or C5")


def is_trivially_perfect(g: Graph) -> bool:
    """No induced P4 and no induced C4."""
    return find_induced_p4(g) is None and find_induced_c4(g) is None


def nested_neighborhood_order(g: Graph, u) -> tuple[bool, tuple[int, ...]]:
    """Order ``u`` so that neighbourhoods are nested, or report an incomparable pair.

    Returns ``(True, ordering)`` or ``(False, (x, y))``. Containment forces
    degree order, so sorting by degree and checking consecutive pairs is
    enough.
    """
    verts = sorted(set(u), key=lambda v: (len(g.adj[v]), v))
    for a, b in zip(verts, verts[1:]):
        if not g.adj[a] <= g.adj[b]:
            return False, (a, b)
    return True, tuple(verts)


def classify(g: Graph) -> dict[str, bool]:
    """Membership in every class, keyed by class name."""
    cograph = recognize_cograph(g).member
    c4_free = find_induced_c4(g) is None
    return {
        "cograph": cograph,
        "chordal": recognize_chordal(g).member,
        "split": recognize_split(g).member,
        "threshold": recognize_threshold(g).member,
        "2k2_free": find_induced_2k2(g) is None,
        "trivially_perfect": cograph and c4_free,
    }
