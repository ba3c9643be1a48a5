"""Figure fixtures, seeded random generators and exhaustive enumeration.

Random generators draw from :class:`SplitMix64`, a 64-bit generator small
enough to re-implement anywhere:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)            (all arithmetic mod 2**64)

``below(n)`` uses rejection sampling on the top of the range, so identical
``(n, seed)`` give identical graphs on every platform.

Sampling is uniform over creation sequences and cotree shapes, not over
isomorphism classes.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .errors import DomainError, ResourceError
from .graph import Graph, graph_join, graph_union, relabel
from .recognizers import DOMINATING, ISOLATED, CreationSequence
from .trees import TreeShape, prufer_to_tree

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK:
            raise DomainError("seed must be a 64-bit unsigned integer")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise DomainError("below() needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def coin(self) -> bool:
        return self.next_u64() >> 63 == 1

    def shuffle(self, items: list) -> list:
        """Fisher-Yates, in place; returns ``items``."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


# --- figure fixtures -----------------------------------------------------------


def fig1_threshold16() -> Graph:
    """The 16-vertex threshold graph: a 12-clique plus four nested pendants.

    Clique vertex ``i`` (0..11) sits at circle position ``i + 1``. Vertices
    12 and 13 see positions {12, 1, 2}, vertex 14 sees {11, 12, 1, 2} and
    vertex 15 sees {10, 11, 12, 1, 2}.
    """
    edges = [(a, b) for a in range(12) for b in range(a + 1, 12)]
    attach = {
        12: (12, 1, 2),
        13: (12, 1, 2),
        14: (11, 12, 1, 2),
        15: (10, 11, 12, 1, 2),
    }
    for v, positions in attach.items():
        edges.extend((p - 1, v) for p in positions)
    return Graph.from_edges(16, edges)


FIG1_PENDANTS = (12, 13, 14, 15)


def fig4_split_counterexample() -> Graph:
    """Triangle ``0,1,2`` with ``3 ~ {0,1}``, ``4 ~ {0,2}``, ``5 ~ {1,2}``."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 0), (4, 2), (5, 1), (5, 2)])


def fig4_minus_edge() -> Graph:
    """The previous graph without the edge between vertex 3 and vertex 0."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 1), (4, 0), (4, 2), (5, 1), (5, 2)])


# --- random generators -----------------------------------------------------------


def _permute(g: Graph, rng: SplitMix64) -> Graph:
    return relabel(g, rng.shuffle(list(range(g.n))))


def random_creation_sequence(n: int, rng: SplitMix64) -> CreationSequence:
    tags = (ISOLATED,) + tuple(DOMINATING if rng.coin() else ISOLATED for _ in range(n - 1))
    return CreationSequence(tuple(range(n)), tags)


def random_threshold(n: int, seed: int, shuffle: bool = True) -> Graph:
    """Replay a uniformly random creation sequence (vertex labels shuffled)."""
    if n < 1:
        raise DomainError("n must be at least 1")
    rng = SplitMix64(seed)
    g = random_creation_sequence(n, rng).replay()
    return _permute(g, rng) if shuffle else g


def _random_cotree_graph(n: int, rng: SplitMix64) -> Graph:
    if n == 1:
        return Graph.empty(1)
    left = 1 + rng.below(n - 1)
    a = _random_cotree_graph(left, rng)
    b = _random_cotree_graph(n - left, rng)
    return graph_join(a, b) if rng.coin() else graph_union(a, b)


def random_cograph(n: int, seed: int, shuffle: bool = True) -> Graph:
    """Evaluate a random binary cotree on ``n`` leaves."""
    if n < 1:
        raise DomainError("n must be at least 1")
    rng = SplitMix64(seed)
    g = _random_cotree_graph(n, rng)
    return _permute(g, rng) if shuffle else g


def random_chordal(n: int, seed: int, connected: bool = False, shuffle: bool = True) -> Graph:
    """Add vertices one at a time, each joined to a random clique of the current graph.

    The clique grows from a random anchor by admitting its neighbours (in
    random order, each with probability 1/2) while they stay pairwise
    adjacent. Without ``connected`` the clique is empty with probability 1/8.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    rng = SplitMix64(seed)
    adj: list[set[int]] = [set()]
    for v in range(1, n):
        clique: list[int] = []
        if connected or rng.below(8) != 0:
            anchor = rng.below(v)
            clique = [anchor]
            for w in rng.shuffle(sorted(adj[anchor])):
                if rng.coin() and all(w in adj[c] for c in clique):
                    clique.append(w)
        adj.append(set(clique))
        for c in clique:
            adj[c].add(v)
    g = Graph(n, tuple(frozenset(a) for a in adj))
    return _permute(g, rng) if shuffle else g


def random_tree(k: int, rng: SplitMix64) -> TreeShape:
    """Uniform labelled tree on ``k`` nodes via a random Prüfer sequence."""
    if k <= 2:
        return TreeShape(k, ((0, 1),) if k == 2 else ())
    return prufer_to_tree([rng.below(k) for _ in range(k - 2)], k)


def random_graph(n: int, seed: int, p_num: int = 1, p_den: int = 2) -> Graph:
    """G(n, p) with ``p = p_num / p_den``."""
    rng = SplitMix64(seed)
    edges = [(u, v) for v in range(n) for u in range(v) if rng.below(p_den) < p_num]
    return Graph.from_edges(n, edges)


# --- exhaustive enumeration --------------------------------------------------------

MAX_ALL_GRAPHS_N = 7


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, once each (``2**C(n,2)`` of them)."""
    if n > MAX_ALL_GRAPHS_N:
        raise ResourceError(f"all_graphs is limited to n <= {MAX_ALL_GRAPHS_N}; use a graph6 corpus")
    if n < 0:
        raise DomainError("n must be non-negative")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for bits in product((0, 1), repeat=len(pairs)):
        yield Graph.from_edges(n, (e for e, b in zip(pairs, bits) if b))


def all_threshold_graphs(max_n: int) -> Iterator[Graph]:
    """Threshold graphs from every creation sequence of length ``1..max_n``.

    Sequences differing only in the (meaningless) first tag are generated
    once; distinct sequences give non-isomorphic graphs.
    """
    for n in range(1, max_n + 1):
        for rest in product((ISOLATED, DOMINATING), repeat=n - 1):
            yield CreationSequence(tuple(range(n)), (ISOLATED, *rest)).replay()
