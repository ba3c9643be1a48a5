"""Kappa-clique cuts, S-subgraphs and the structure theorem around them.

A kappa-clique cut of a connected, non-complete graph is a minimum vertex
cut that induces a clique. Removing it leaves components ``C_1..C_m``; the
S-subgraphs are ``H_i = G[C_i + S]``. For such a graph, ideal connectedness
is equivalent to three checkable conditions on the ``H_i`` (see
:func:`verify_structure_theorem`), and every ideally connected graph of this
kind is obtained by gluing ideally connected pieces along the clique.

Condition checks call the flow oracle directly, never the fast deciders,
so the structure theorem is tested independently of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .connectivity import (
    capped_local_connectivity,
    first_ideality_failure,
    local_connectivity,
    min_vertex_separator,
    vertex_connectivity,
)
from .errors import ConsistencyError, DomainError, PreconditionError, ValidationError
from .graph import Graph, induced_subgraph
from .recognizers import recognize_chordal


@dataclass(frozen=True)
class CliqueCut:
    members: frozenset[int]

    @property
    def t(self) -> int:
        return len(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)


@dataclass(frozen=True)
class SSubgraph:
    """One S-subgraph: ``graph`` is ``G[C + S]`` reindexed, ``vertices[i]`` its original name."""

    graph: Graph
    vertices: tuple[int, ...]
    component: tuple[int, ...]

    def local(self, v: int) -> int:
        return self.vertices.index(v)

    def degree_of(self, v: int) -> int:
        return self.graph.degree(self.local(v))


@dataclass
class Decomposition:
    cut: CliqueCut
    subgraphs: list[SSubgraph]
    high_degree: list[int] = field(default_factory=list)

    @property
    def distinguished_index(self) -> int | None:
        """The unique part whose component carries a vertex of degree above ``t``."""
        return self.high_degree[0] if len(self.high_degree) == 1 else None

    def to_json(self) -> dict:
        return {
            "cut": self.cut.sorted(),
            "t": self.cut.t,
            "subgraphs": [
                {"vertices": list(h.vertices), "component": list(h.component), "edges": h.graph.m}
                for h in self.subgraphs
            ],
            "distinguished": self.distinguished_index,
        }


def _require_connected_noncomplete(g: Graph) -> None:
    if g.n == 0 or g.is_complete():
        raise DomainError("graph is complete; it has no vertex cut")
    if not g.is_connected():
        raise DomainError("graph is disconnected")


def find_min_vertex_cut(g: Graph) -> set[int]:
    """A vertex cut of size kappa(G), from the minimising non-adjacent pair."""
    _require_connected_noncomplete(g)
    best, pair = g.n, None
    for u, v in combinations(range(g.n), 2):
        if v in g.adj[u]:
            continue
        k = capped_local_connectivity(g, u, v, best)
        if k < best:
            best, pair = k, (u, v)
    return min_vertex_separator(g, *pair)


def _cliques_of_size(g: Graph, k: int) -> Iterable[tuple[int, ...]]:
    def extend(chosen, candidates):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for i, v in enumerate(candidates):
            yield from extend(chosen + [v], [w for w in candidates[i + 1 :] if w in g.adj[v]])

    yield from extend([], list(g.vertices))


def all_kappa_clique_cuts(g: Graph) -> list[CliqueCut]:
    """Every clique of size kappa(G) whose removal disconnects ``g``, lexicographically."""
    _require_connected_noncomplete(g)
    k = vertex_connectivity(g)
    return [
        CliqueCut(frozenset(c))
        for c in _cliques_of_size(g, k)
        if len(g.components(removed=c)) > 1
    ]


def find_kappa_clique_cut(g: Graph) -> CliqueCut | None:
    """A minimum vertex cut inducing a clique, or ``None`` if no minimum cut is one.

    Chordal graphs take the flow cut directly (every minimum cut of a
    chordal graph is a clique); other graphs enumerate candidate cliques.
    """
    _require_connected_noncomplete(g)
    if recognize_chordal(g):
        cut = find_min_vertex_cut(g)
        if not g.is_clique(cut):
            raise ConsistencyError("minimum cut of a chordal graph is not a clique")
        return CliqueCut(frozenset(cut))
    cuts = all_kappa_clique_cuts(g)
    return cuts[0] if cuts else None


def validate_cut(g: Graph, s: CliqueCut, kappa: int | None = None) -> None:
    """Raise :class:`ValidationError` unless ``s`` is a kappa-clique cut of ``g``."""
    if g.n == 0 or g.is_complete() or not g.is_connected():
        raise ValidationError("kappa-clique cuts exist only in connected non-complete graphs")
    members = s.sorted()
    if any(not 0 <= v < g.n for v in members):
        raise ValidationError("cut vertex out of range")
    if not g.is_clique(members):
        raise ValidationError(f"cut {members} is not a clique")
    if len(g.components(removed=members)) < 2:
        raise ValidationError(f"removing {members} does not disconnect the graph")
    kappa = vertex_connectivity(g) if kappa is None else kappa
    if s.t != kappa:
        raise ValidationError(f"cut has size {s.t} but kappa(G) = {kappa}")


def s_subgraphs(g: Graph, s: CliqueCut, validate: bool = True) -> Decomposition:
    """One S-subgraph per component of ``G - S``, components ordered by smallest vertex."""
    if validate:
        validate_cut(g, s)
    cut = s.sorted()
    parts = []
    high = []
    for i, comp in enumerate(g.components(removed=cut)):
        h, index = induced_subgraph(g, list(comp) + cut)
        names = tuple(sorted(index, key=index.__getitem__))
        parts.append(SSubgraph(h, names, tuple(comp)))
        if any(g.degree(v) > s.t for v in comp):
            high.append(i)
    return Decomposition(s, parts, high)


# --- the structure theorem ------------------------------------------------------


@dataclass
class Condition:
    holds: bool
    detail: list = field(default_factory=list)

    def __bool__(self):
        return self.holds


@dataclass
class ConditionReport:
    cond1: Condition
    cond2: Condition
    cond3: Condition

    @property
    def overall(self) -> bool:
        return bool(self.cond1 and self.cond2 and self.cond3)

    def to_json(self) -> dict:
        return {
            "cond1": {"holds": self.cond1.holds, "detail": self.cond1.detail},
            "cond2": {"holds": self.cond2.holds, "detail": self.cond2.detail},
            "cond3": {"holds": self.cond3.holds, "detail": self.cond3.detail},
            "overall": self.overall,
        }


def _is_t_connected(h: Graph, t: int) -> bool:
    return vertex_connectivity(h) >= t


def verify_structure_theorem(g: Graph, s: CliqueCut, decomposition: Decomposition | None = None) -> ConditionReport:
    """Evaluate the three conditions characterising ideal connectedness.

    1. every S-subgraph is ideally connected and t-connected;
    2. at most one component carries a vertex of degree above ``t`` in G,
       and if ``C_j`` does then ``deg_Hj(u) <= deg_Hj(s) < deg_G(s)`` for all
       ``u`` in ``C_j`` and ``s`` in ``S``;
    3. for ``s1 != s2`` in ``S`` with ``deg_G(s1) <= deg_G(s2)``,
       ``deg_Hi(s1) <= deg_Hi(s2)`` in every S-subgraph.

    Details are lists of JSON-friendly failure records.
    """
    d = decomposition or s_subgraphs(g, s)
    t = s.t
    cut = s.sorted()

    fails1 = []
    for i, h in enumerate(d.subgraphs):
        w = first_ideality_failure(h.graph)
        if w is not None:
            fails1.append({"subgraph": i, "reason": "not ideally connected",
                           "pair": [h.vertices[w.u], h.vertices[w.v]], "local": w.local, "bound": w.bound})
        if not _is_t_connected(h.graph, t):
            fails1.append({"subgraph": i, "reason": f"not {t}-connected",
                           "kappa": vertex_connectivity(h.graph)})

    fails2 = []
    if len(d.high_degree) > 1:
        fails2.append({"reason": "several components with a vertex of degree above t",
                       "subgraphs": list(d.high_degree)})
    elif d.high_degree:
        j = d.high_degree[0]
        h = d.subgraphs[j]
        for u in h.component:
            for x in cut:
                du, dx, dgx = h.degree_of(u), h.degree_of(x), g.degree(x)
                if not du <= dx < dgx:
                    fails2.append({"subgraph": j, "u": u, "s": x,
                                   "deg_H_u": du, "deg_H_s": dx, "deg_G_s": dgx})

    fails3 = []
    for s1, s2 in combinations(cut, 2):
        for a, b in ((s1, s2), (s2, s1)):
            if g.degree(a) <= g.degree(b):
                for i, h in enumerate(d.subgraphs):
                    if h.degree_of(a) > h.degree_of(b):
                        fails3.append({"subgraph": i, "s1": a, "s2": b,
                                       "deg_H_s1": h.degree_of(a), "deg_H_s2": h.degree_of(b)})

    return ConditionReport(Condition(not fails1, fails1), Condition(not fails2, fails2), Condition(not fails3, fails3))


# --- gluing --------------------------------------------------------------------


def glue_along_clique(parts: Sequence[tuple[Graph, Sequence[int]]], t: int) -> Graph:
    """Identify the designated ``t``-cliques of all parts, position by position.

    The first part keeps its own vertex numbers; the private vertices of
    every later part are appended in increasing order. ``parts[i][1][k]``
    is identified with ``parts[0][1][k]``.
    """
    if not parts:
        raise ValidationError("nothing to glue")
    for h, clique in parts:
        cl = list(clique)
        if len(cl) != t or len(set(cl)) != t:
            raise ValidationError(f"designated set {cl} does not have {t} distinct vertices")
        if any(not 0 <= v < h.n for v in cl):
            raise ValidationError(f"designated set {cl} out of range")
        if not h.is_clique(cl):
            raise ValidationError(f"designated set {cl} is not a clique")
    base, base_clique = parts[0]
    edges = list(base.edges())
    n = base.n
    for h, clique in parts[1:]:
        name = {v: base_clique[k] for k, v in enumerate(clique)}
        for v in h.vertices:
            if v not in name:
                name[v] = n
                n += 1
        edges.extend((name[a], name[b]) for a, b in h.edges())
    return Graph.from_edges(n, edges)


# --- lemmas ---------------------------------------------------------------------


def _require_ideal(g: Graph) -> None:
    w = first_ideality_failure(g)
    if w is not None:
        raise PreconditionError("graph is not ideally connected", (w.u, w.v))


def check_lemma_u_s(g: Graph, s: CliqueCut) -> bool:
    """Degree chain and local connectivity between non-cut and cut vertices.

    For every S-subgraph ``H``, ``u`` in ``H - S`` and ``s`` in ``S``:
    ``deg_H(u) = deg_G(u) <= deg_H(s) < deg_G(s)`` and
    ``kappa_H(u, s) = kappa_G(u, s) = deg_H(u)``.
    """
    _require_ideal(g)
    d = s_subgraphs(g, s)
    for h in d.subgraphs:
        for u in h.component:
            for x in s.members:
                du = h.degree_of(u)
                if not (du == g.degree(u) <= h.degree_of(x) < g.degree(x)):
                    return False
                kh = local_connectivity(h.graph, h.local(u), h.local(x))
                if not kh == local_connectivity(g, u, x) == du:
                    return False
    return True


def check_lemma_high_degree(g: Graph, s: CliqueCut) -> bool:
    """At most one component of ``G - S`` has a vertex of degree above ``|S|``."""
    _require_ideal(g)
    return len(s_subgraphs(g, s).high_degree) <= 1


def check_lemma_cut_pairs(g: Graph, s: CliqueCut) -> bool:
    """For ``deg_G(s1) <= deg_G(s2)``: ``deg_H(s1) <= deg_H(s2)`` and ``kappa_H(s1, s2) = deg_H(s1)``.

    The local-connectivity clause reads the two cut vertices as the pair in
    question.
    """
    _require_ideal(g)
    d = s_subgraphs(g, s)
    for s1, s2 in combinations(s.sorted(), 2):
        if g.degree(s1) > g.degree(s2):
            s1, s2 = s2, s1
        for h in d.subgraphs:
            d1 = h.degree_of(s1)
            if min(d1, h.degree_of(s2)) != d1:
                return False
            if local_connectivity(h.graph, h.local(s1), h.local(s2)) != d1:
                return False
    return True


def check_lemma_subgraphs_ideal(g: Graph, s: CliqueCut) -> bool:
    """Every S-subgraph is ideally connected with kappa(H) >= |S|."""
    _require_ideal(g)
    d = s_subgraphs(g, s)
    return all(
        first_ideality_failure(h.graph) is None and vertex_connectivity(h.graph) >= s.t
        for h in d.subgraphs
    )


def check_unique_cut(g: Graph) -> bool:
    """Exactly one kappa-clique cut, and the maximum degree is attained on it with value >= |S| + 1."""
    _require_ideal(g)
    cuts = all_kappa_clique_cuts(g)
    if not cuts:
        raise PreconditionError("graph has no kappa-clique cut")
    if len(cuts) != 1:
        return False
    s = cuts[0]
    top = max(g.degree(v) for v in s.members)
    return max(g.degrees()) == top >= s.t + 1


# --- chordal refinement ------------------------------------------------------------


@dataclass
class ChordalStructure:
    head_index: int
    simplicial_vertices: list[int]
    decomposition: Decomposition


def chordal_structure(g: Graph, s: CliqueCut) -> ChordalStructure | None:
    """Split the S-subgraphs of a chordal graph into a head and ``K_{t+1}`` pendants.

    Succeeds when every S-subgraph except one (the head) is a single vertex
    simplicial to ``S``, the head is ideally connected, ``t``-connected and
    chordal, and no private vertex of the head has larger head-degree than a
    cut vertex. The last clause is needed for the equivalence with ideal
    connectedness: without it a path ``d-a-b-c`` with cut ``{a}`` would
    qualify. Returns ``None`` on failure.
    """
    rec = recognize_chordal(g)
    if not rec:
        raise PreconditionError("graph is not chordal", rec.witness)
    d = s_subgraphs(g, s)
    pendants = [i for i, h in enumerate(d.subgraphs) if len(h.component) == 1]
    heads = [i for i in range(len(d.subgraphs)) if i not in pendants]
    if len(heads) > 1:
        return None
    head = heads[0] if heads else 0
    h = d.subgraphs[head]
    if first_ideality_failure(h.graph) is not None or not _is_t_connected(h.graph, s.t):
        return None
    if not recognize_chordal(h.graph):
        return None
    floor = min(h.degree_of(x) for x in s.members)
    if any(h.degree_of(u) > floor for u in h.component):
        return None
    simplicial = [d.subgraphs[i].component[0] for i in pendants if i != head]
    return ChordalStructure(head, simplicial, d)


def find_simplicial(g: Graph) -> set[int]:
    return {v for v in g.vertices if g.is_clique(g.adj[v])}

