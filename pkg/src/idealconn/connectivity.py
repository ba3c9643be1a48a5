"""Local connectivity by vertex-capacitated max-flow, and everything built on it.

``local_connectivity(g, u, v)`` is the maximum number of internally disjoint
u-v paths. It is computed on the usual split network (every vertex ``x``
becomes ``x_in -> x_out`` with capacity one) using BFS augmenting paths.
For an adjacent pair the direct edge is set aside, the flow is computed on
``G - uv`` and one is added.

This module is the ground truth the theorem-based deciders are checked
against, so it deliberately uses nothing but the flow computation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .errors import DomainError, ValidationError
from .graph import Graph, delete_vertices

_IN, _OUT = 0, 1  # side tags in reachable-set entries


@dataclass(frozen=True)
class PathSystem:
    """A family of internally disjoint ``source``-``target`` paths."""

    source: int
    target: int
    paths: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.paths)

    def validate(self, g: Graph) -> None:
        """Raise :class:`ValidationError` unless every invariant holds in ``g``."""
        s, t = self.source, self.target
        if s == t:
            raise ValidationError("source equals target")
        used: set[int] = set()
        direct = 0
        for p in self.paths:
            if len(p) < 2 or p[0] != s or p[-1] != t:
                raise ValidationError(f"path {p} does not run from {s} to {t}")
            if len(set(p)) != len(p):
                raise ValidationError(f"path {p} repeats a vertex")
            for a, b in zip(p, p[1:]):
                if not 0 <= a < g.n or b not in g.adj[a]:
                    raise ValidationError(f"path {p} uses non-edge {a}{b}")
            inner = set(p[1:-1])
            if inner & used:
                raise ValidationError(f"path {p} shares internal vertices {sorted(inner & used)}")
            used |= inner
            direct += len(p) == 2
        if direct > 1:
            raise ValidationError("more than one length-one path")

    def internal_vertices(self) -> set[int]:
        return {x for p in self.paths for x in p[1:-1]}

    def lines(self) -> list[str]:
        return [" ".join(map(str, p)) for p in self.paths]


class _SplitFlow:
    """Unit vertex-capacity flow from ``s`` to ``t`` on the split network.

    Split nodes are encoded as ``2x`` (in) and ``2x + 1`` (out). Edge
    capacities are unbounded, so only the vertex arcs saturate. Flow is kept
    as ``succ[x]`` (vertices receiving one unit from ``x``); each internal
    vertex carries at most one unit.
    """

    def __init__(self, g: Graph, s: int, t: int, skip_direct: bool):
        self.g, self.s, self.t = g, s, t
        self.skip_direct = skip_direct
        self.succ: list[set[int]] = [set() for _ in range(g.n)]
        self.pred: list[set[int]] = [set() for _ in range(g.n)]
        self.used = [False] * g.n
        self.value = 0
        self.reachable: set[tuple[int, int]] = set()

    def _bfs(self) -> list[int] | None:
        """Shortest augmenting path as a list of split nodes, or ``None``.

        On failure ``self.reachable`` holds the residual-reachable nodes.
        """
        adj, used, pred = self.g.adj, self.used, self.pred
        s, t = self.s, self.t
        start, goal = 2 * s + 1, 2 * t
        parent = {start: -1}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            x = node >> 1
            if node & 1:
                nbrs = adj[x]
                if x != s and used[x]:
                    if node - 1 not in parent:
                        parent[node - 1] = node
                        queue.append(node - 1)
                skip = self.skip_direct and x == s
                for y in nbrs:
                    nxt = 2 * y
                    if nxt in parent or (skip and y == t):
                        continue
                    parent[nxt] = node
                    if nxt == goal:
                        return self._trace(parent, goal)
                    queue.append(nxt)
            else:
                if x == t:
                    continue
                if (x == s or not used[x]) and node + 1 not in parent:
                    parent[node + 1] = node
                    queue.append(node + 1)
                for w in pred[x]:
                    nxt = 2 * w + 1
                    if nxt not in parent:
                        parent[nxt] = node
                        queue.append(nxt)
        self.reachable = {(node >> 1, node & 1) for node in parent}
        return None

    @staticmethod
    def _trace(parent, goal):
        path = [goal]
        while parent[path[-1]] != -1:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    def _augment(self, path: list[int]) -> None:
        for prev, node in zip(path, path[1:]):
            a, b = prev >> 1, node >> 1
            if a == b:
                # vertex arc: forward saturates, backward frees
                self.used[a] = not prev & 1
            elif prev & 1:
                if a in self.succ[b]:  # cancel opposite flow instead of stacking
                    self.succ[b].discard(a)
                    self.pred[a].discard(b)
                else:
                    self.succ[a].add(b)
                    self.pred[b].add(a)
            else:
                # a_in -> b_out undoes flow on the edge b -> a
                self.succ[b].discard(a)
                self.pred[a].discard(b)
        self.value += 1

    def _seed_short_paths(self, limit: int | None) -> None:
        # any feasible flow is a valid starting point; common neighbours give one cheaply
        s, t = self.s, self.t
        for z in sorted(self.g.adj[s] & self.g.adj[t]):
            if limit is not None and self.value >= limit:
                return
            self.succ[s].add(z)
            self.pred[z].add(s)
            self.succ[z].add(t)
            self.pred[t].add(z)
            self.used[z] = True
            self.value += 1

    def run(self, limit: int | None = None) -> int:
        self._seed_short_paths(limit)
        while limit is None or self.value < limit:
            path = self._bfs()
            if path is None:
                break
            self._augment(path)
        return self.value

    def paths(self) -> list[tuple[int, ...]]:
        out = []
        for first in sorted(self.succ[self.s]):
            path = [self.s, first]
            while path[-1] != self.t:
                (nxt,) = self.succ[path[-1]]
                path.append(nxt)
            out.append(tuple(path))
        return out


def _check_pair(g: Graph, u: int, v: int) -> None:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise DomainError(f"vertex pair ({u}, {v}) out of range for n={g.n}")
    if u == v:
        raise DomainError("local connectivity is undefined for u == v")


def _flow(g: Graph, u: int, v: int, limit: int | None = None) -> tuple[_SplitFlow, int]:
    direct = v in g.adj[u]
    flow = _SplitFlow(g, u, v, skip_direct=direct)
    flow.run(None if limit is None else limit - direct)
    return flow, flow.value + direct


def local_connectivity(g: Graph, u: int, v: int) -> int:
    """Maximum number of internally disjoint u-v paths."""
    _check_pair(g, u, v)
    return _flow(g, u, v)[1]


def capped_local_connectivity(g: Graph, u: int, v: int, bound: int) -> int:
    """``min(kappa(u, v), bound)``; stops augmenting once ``bound`` is reached."""
    return _flow(g, u, v, limit=bound)[1]


def disjoint_paths(g: Graph, u: int, v: int) -> PathSystem:
    """A maximum family of internally disjoint u-v paths (the Menger witness)."""
    _check_pair(g, u, v)
    flow, _ = _flow(g, u, v)
    paths = flow.paths()
    if v in g.adj[u]:
        paths.insert(0, (u, v))
    return PathSystem(u, v, tuple(paths))


def min_vertex_separator(g: Graph, u: int, v: int) -> set[int]:
    """A minimum u-v vertex separator for non-adjacent ``u``, ``v``."""
    _check_pair(g, u, v)
    if v in g.adj[u]:
        raise DomainError("adjacent vertices have no vertex separator")
    flow = _SplitFlow(g, u, v, skip_direct=False)
    flow.run()
    seen = flow.reachable
    return {x for x in g.vertices if (x, _IN) in seen and (x, _OUT) not in seen}


def vertex_connectivity(g: Graph) -> int:
    """kappa(G): ``n - 1`` for complete graphs, 0 when disconnected.

    For a non-complete graph the minimum over non-adjacent pairs equals the
    minimum over all pairs, so only non-adjacent pairs are flowed.
    """
    if g.n == 0:
        raise DomainError("vertex connectivity of the null graph is undefined")
    if g.is_complete():
        return g.n - 1
    if not g.is_connected():
        return 0
    best = g.n - 2
    for u, v in combinations(range(g.n), 2):
        if v not in g.adj[u]:
            best = min(best, capped_local_connectivity(g, u, v, best))
            if best == 0:
                break
    return best


@dataclass(frozen=True)
class Witness:
    u: int
    v: int
    local: int
    bound: int


@dataclass
class IdealityReport:
    ideally_connected: bool
    kappa: int
    witness: Witness | None = None
    local_table: list[list[int]] | None = field(default=None, repr=False)

    def __bool__(self):
        return self.ideally_connected

    def to_json(self) -> dict:
        w = self.witness
        return {
            "ideal": self.ideally_connected,
            "kappa": self.kappa,
            "witness": None if w is None else {"u": w.u, "v": w.v, "local": w.local, "bound": w.bound},
        }


def first_ideality_failure(g: Graph) -> Witness | None:
    """First pair (lexicographic) with kappa(u, v) < min degree, if any."""
    deg = g.degrees()
    for u, v in combinations(range(g.n), 2):
        bound = min(deg[u], deg[v])
        if bound == 0:
            continue
        got = capped_local_connectivity(g, u, v, bound)
        if got < bound:
            return Witness(u, v, local_connectivity(g, u, v), bound)
    return None


def is_ideally_connected(g: Graph, table: bool = False) -> IdealityReport:
    """Check kappa(u, v) = min{deg u, deg v} over every pair.

    With ``table=True`` the full matrix of local connectivities is computed
    and attached, and the sweep does not stop at the first failure.
    """
    if g.n == 0:
        raise DomainError("ideal connectedness of the null graph is undefined")
    if not table:
        w = first_ideality_failure(g)
        if w is None:
            kappa = min(g.degrees()) if g.n > 1 else 0
            return IdealityReport(True, kappa)
        return IdealityReport(False, vertex_connectivity(g), w)
    deg = g.degrees()
    mat = [[0] * g.n for _ in range(g.n)]
    witness = None
    for u, v in combinations(range(g.n), 2):
        k = local_connectivity(g, u, v)
        mat[u][v] = mat[v][u] = k
        if witness is None and k < min(deg[u], deg[v]):
            witness = Witness(u, v, k, min(deg[u], deg[v]))
    kappa = 0 if g.n == 1 else min(mat[u][v] for u, v in combinations(range(g.n), 2))
    return IdealityReport(witness is None, kappa, witness, mat)


def average_connectivity(g: Graph) -> Fraction:
    """Mean of kappa(u, v) over unordered pairs, as an exact rational."""
    if g.n < 2:
        raise DomainError("average connectivity needs at least two vertices")
    total = sum(local_connectivity(g, u, v) for u, v in combinations(range(g.n), 2))
    return Fraction(total, g.n * (g.n - 1) // 2)


def fault_sets(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """All vertex sets of size at most ``m``, by size then lexicographically."""
    for size in range(m + 1):
        yield from combinations(range(n), size)


@dataclass
class MengerResult:
    strongly_menger: bool
    fault_set: tuple[int, ...] | None = None
    report: IdealityReport | None = None

    def __bool__(self):
        return self.strongly_menger


def is_strongly_m_menger(g: Graph, m: int) -> MengerResult:
    """Every ``G - F`` with ``|F| <= m`` ideally connected; returns the first failing ``F``.

    Removing every vertex leaves the null graph, which is treated as
    (vacuously) ideally connected.
    """
    if not 0 <= m <= g.n:
        raise DomainError(f"fault budget m={m} outside [0, {g.n}]")
    for f in fault_sets(g.n, m):
        if len(f) == g.n:
            continue
        h, _ = delete_vertices(g, f)
        if first_ideality_failure(h) is not None:
            return MengerResult(False, f, is_ideally_connected(h))
    return MengerResult(True)


def saturates(g: Graph, ps: PathSystem, u: int) -> bool:
    """Whether every neighbour of ``u`` except the far endpoint is an internal vertex of some path."""
    ps.validate(g)
    if u == ps.source:
        other = ps.target
    elif u == ps.target:
        other = ps.source
    else:
        raise ValidationError(f"{u} is not an endpoint of the path system")
    counts: dict[int, int] = {}
    for p in ps.paths:
        for x in p[1:-1]:
            counts[x] = counts.get(x, 0) + 1
    return all(counts.get(w, 0) == 1 for w in g.adj[u] if w != other)


def local_connectivity_table(g: Graph) -> list[list[int]]:
    mat = [[0] * g.n for _ in range(g.n)]
    for u, v in combinations(range(g.n), 2):
        mat[u][v] = mat[v][u] = local_connectivity(g, u, v)
    return mat


def bound_pairs(g: Graph) -> Sequence[tuple[int, int, int]]:
    """``(u, v, min degree)`` for every unordered pair."""
    deg = g.degrees()
    return [(u, v, min(deg[u], deg[v])) for u, v in combinations(range(g.n), 2)]
