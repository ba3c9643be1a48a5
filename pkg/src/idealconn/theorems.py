"""Fast ideal-connectedness deciders for cographs and chordal graphs.

* A cograph is ideally connected iff it is 2K2-free. Equivalently, every
  union node of its cotree has at most one child containing an edge.
* A chordal graph is ideally connected iff it is a threshold graph.

Each fast answer embeds the certificate it was derived from, so it can be
re-checked independently. In a threshold graph the paths realising
``min{deg u, deg v}`` all have length at most two, which gives a direct
constructor for them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import PathSystem, is_ideally_connected
from .errors import ConsistencyError, DomainError, PreconditionError
from .graph import Graph, graph_join
from .recognizers import (
    UNION,
    Cotree,
    Recognition,
    is_2k2_free,
    recognize_chordal,
    recognize_cograph,
    recognize_threshold,
)

COGRAPH_THM, CHORDAL_THM, NO_THM = "cograph-thm", "chordal-thm", "none"


@dataclass
class FastVerdict:
    applicable_theorem: str
    ideally_connected: bool | None
    certificate: Recognition | None = None

    def to_json(self) -> dict:
        return {
            "theorem": self.applicable_theorem,
            "ideal": self.ideally_connected,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
        }


def fast_ideal_cograph(g: Graph) -> FastVerdict:
    cograph = recognize_cograph(g)
    if not cograph:
        raise PreconditionError("graph is not a cograph", cograph.witness)
    free = is_2k2_free(g)
    return FastVerdict(COGRAPH_THM, free.member, cograph if free.member else free)


def fast_ideal_chordal(g: Graph) -> FastVerdict:
    chordal = recognize_chordal(g)
    if not chordal:
        raise PreconditionError("graph is not chordal", chordal.witness)
    threshold = recognize_threshold(g)
    return FastVerdict(CHORDAL_THM, threshold.member, threshold)


def fast_verdict(g: Graph) -> FastVerdict:
    """Apply whichever theorem covers ``g``, cographs first."""
    if recognize_cograph(g):
        return fast_ideal_cograph(g)
    if recognize_chordal(g):
        return fast_ideal_chordal(g)
    return FastVerdict(NO_THM, None)


def cotree_is_ideally_connected(t: Cotree) -> bool:
    """Safe-union calculus: no union node may have two children carrying edges."""
    t.check()
    return all(node.kind != UNION or node.edge_children() <= 1 for node in t.nodes())


@dataclass(frozen=True)
class JoinLemmaRecord:
    first: bool
    second: bool
    joined: bool

    @property
    def consistent(self) -> bool:
        return (self.first and self.second) == self.joined


def check_join_lemma(g1: Graph, g2: Graph) -> JoinLemmaRecord:
    """Oracle verdicts for ``g1``, ``g2`` and their join."""
    for g in (g1, g2):
        rec = recognize_cograph(g)
        if not rec:
            raise PreconditionError("join lemma needs cographs", rec.witness)
    return JoinLemmaRecord(
        is_ideally_connected(g1).ideally_connected,
        is_ideally_connected(g2).ideally_connected,
        is_ideally_connected(graph_join(g1, g2)).ideally_connected,
    )


def threshold_disjoint_paths(g: Graph, u: int, v: int, check: bool = True) -> PathSystem:
    """The edge ``uv`` (if present) plus ``u z v`` for every common neighbour ``z``."""
    if u == v:
        raise DomainError("threshold_disjoint_paths needs u != v")
    if check:
        rec = recognize_threshold(g)
        if not rec:
            raise PreconditionError("graph is not threshold", rec.witness)
    paths = [(u, v)] if v in g.adj[u] else []
    paths += [(u, z, v) for z in sorted(g.adj[u] & g.adj[v])]
    if len(paths) != min(len(g.adj[u]), len(g.adj[v])):
        raise ConsistencyError(
            f"{len(paths)} short paths between {u} and {v}, expected the smaller degree"
        )
    return PathSystem(u, v, tuple(paths))


OPEN_CONTAINED = "open-contained"
CLOSED_CONTAINED = "closed-contained"
EQUAL_OPEN = "equal-open"
EQUAL_CLOSED = "equal-closed"
INCOMPARABLE = "incomparable"


def neighborhood_comparability(g: Graph, u: int, v: int) -> str:
    """How the neighbourhood of the lower-degree vertex ``a`` sits inside that of ``b``.

    Equal neighbourhoods are reported first. Otherwise ``closed-contained``
    means ``N[a]`` is inside ``N[b]`` (so ``a`` and ``b`` are adjacent) and
    ``open-contained`` means ``N(a)`` is inside ``N[b]`` without that.
    """
    if u == v:
        raise DomainError("neighborhood_comparability needs u != v")
    nu, nv = g.adj[u], g.adj[v]
    if nu == nv:
        return EQUAL_OPEN
    if nu | {u} == nv | {v}:
        return EQUAL_CLOSED
    a, b = (u, v) if len(nu) <= len(nv) else (v, u)
    closed_b = g.adj[b] | {b}
    if g.adj[a] | {a} <= closed_b:
        return CLOSED_CONTAINED
    if g.adj[a] <= closed_b:
        return OPEN_CONTAINED
    return INCOMPARABLE
