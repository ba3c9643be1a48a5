"""Simple undirected graphs on vertices ``0..n-1`` and their text formats.

A :class:`Graph` is immutable: ``adj[v]`` is the frozen neighbourhood of
``v``. Every constructor in this module returns a fresh graph; nothing is
ever mutated in place, so graphs can be shared freely between workers.

Supported text formats:

* graph6 (McKay), bit-exact in both directions, including the 4- and
  8-byte size headers;
* a plain edge list (``"n m"`` followed by ``m`` lines ``"u v"``);
* DOT, write only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, Graph6Error, UnsupportedSizeError, ValidationError

GRAPH6_HEADER = ">>graph6<<"
_MAX_GRAPH6_N = 68719476735  # 2**36 - 1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValidationError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValidationError(f"loop at vertex {v}")
            for w in nbrs:
                if not 0 <= w < self.n:
                    raise ValidationError(f"neighbour {w} of {v} out of range")
                if v not in self.adj[w]:
                    raise ValidationError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(frozenset(r) for r in rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(frozenset() for _ in range(n)))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def closed_nbhd(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(b in self.adj[a] for a, b in combinations(vs, 2))

    def is_independent(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return not any(b in self.adj[a] for a, b in combinations(vs, 2))

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self.adj)

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        """Connected components of ``G - removed``, ordered by smallest vertex."""
        gone = set(removed)
        seen = set(gone)
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            seen.add(s)
            comp, stack = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def remove_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] = rows[u] - {v}
        rows[v] = rows[v] - {u}
        return Graph(self.n, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertices(g: Graph, vs: Iterable[int]) -> list[int]:
    out = []
    for v in vs:
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} out of range for n={g.n}")
        out.append(v)
    return out


def induced_subgraph(g: Graph, u: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[u]`` and the map old index -> new index.

    New indices follow the increasing order of the old ones.
    """
    keep = sorted(set(_check_vertices(g, u)))
    index = {old: new for new, old in enumerate(keep)}
    rows = tuple(frozenset(index[w] for w in g.adj[old] if w in index) for old in keep)
    return Graph(len(keep), rows), index


def delete_vertices(g: Graph, f: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``G - F`` with its index map."""
    gone = set(_check_vertices(g, f))
    return induced_subgraph(g, (v for v in g.vertices if v not in gone))


def graph_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    rows = list(g1.adj) + [frozenset(w + shift for w in a) for a in g2.adj]
    return Graph(g1.n + g2.n, tuple(rows))


def graph_join(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    right = frozenset(range(shift, shift + g2.n))
    left = frozenset(range(shift))
    rows = [a | right for a in g1.adj] + [frozenset(w + shift for w in a) | left for a in g2.adj]
    return Graph(g1.n + g2.n, tuple(rows))


def complement(g: Graph) -> Graph:
    everything = frozenset(range(g.n))
    return Graph(g.n, tuple(everything - a - {v} for v, a in enumerate(g.adj)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise DomainError("relabelling is not a permutation")
    rows: list[frozenset[int]] = [frozenset()] * g.n
    for v, a in enumerate(g.adj):
        rows[perm[v]] = frozenset(perm[w] for w in a)
    return Graph(g.n, tuple(rows))


# --- named families -------------------------------------------------------

FAMILIES = ("complete", "edgeless", "cycle", "path", "star")


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(frozenset(range(n)) - {v} for v in range(n)))


def edgeless_graph(n: int) -> Graph:
    return Graph.empty(n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}; vertex 0 is the centre."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def family(label: str, size: int) -> Graph:
    """Build a named fixture: ``complete``, ``edgeless``, ``cycle``, ``path`` or ``star``."""
    if size < 1:
        raise DomainError("family size must be at least 1")
    builders = {
        "complete": complete_graph,
        "edgeless": edgeless_graph,
        "cycle": cycle_graph,
        "path": path_graph,
        "star": star_graph,
    }
    try:
        return builders[label](size)
    except KeyError:
        raise DomainError(f"unknown graph family {label!r}") from None


def two_k2() -> Graph:
    return graph_union(complete_graph(2), complete_graph(2))


# --- graph6 -----------------------------------------------------------------


def _bit_positions(n: int) -> Iterator[tuple[int, int]]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def _encode_size(n: int) -> list[int]:
    if n < 0:
        raise UnsupportedSizeError("negative vertex count")
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    if n <= _MAX_GRAPH6_N:
        return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise UnsupportedSizeError(f"n={n} exceeds the graph6 range")


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g`` as a graph6 line (without the trailing newline)."""
    out = _encode_size(g.n)
    word = nbits = 0
    for i, j in _bit_positions(g.n):
        word = (word << 1) | (j in g.adj[i])
        nbits += 1
        if nbits == 6:
            out.append(word + 63)
            word = nbits = 0
    if nbits:
        out.append((word << (6 - nbits)) + 63)
    text = bytes(out).decode("ascii")
    return GRAPH6_HEADER + text if header else text


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line. Trailing newline and the optional header are accepted.

    Padding bits must be zero so that re-encoding is byte-identical.
    """
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    base = 0
    if data.startswith(GRAPH6_HEADER.encode()):
        base = len(GRAPH6_HEADER)
        data = data[base:]
    for k, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside the printable range 63..126", base + k)
    if not data:
        raise Graph6Error("empty graph6 line", base)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size header", base + len(data))
        n = 0
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
        pos = 8
        if n <= 258047:
            raise Graph6Error("non-canonical 8-byte size header", base)
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size header", base + len(data))
        n = 0
        for byte in data[1:4]:
            n = (n << 6) | (byte - 63)
        pos = 4
        if n <= 62:
            raise Graph6Error("non-canonical 4-byte size header", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"adjacency truncated: expected {need} bytes, got {len(body)}", base + len(data))
    if len(body) > need:
        raise Graph6Error("trailing bytes after adjacency", base + pos + need)

    rows: list[set[int]] = [set() for _ in range(n)]
    positions = _bit_positions(n)
    for k, byte in enumerate(body):
        word = byte - 63
        for shift in range(5, -1, -1):
            bit = (word >> shift) & 1
            idx = 6 * k + (5 - shift)
            if idx >= nbits:
                if bit:
                    raise Graph6Error("non-zero padding bit", base + pos + k)
                continue
            i, j = next(positions)
            if bit:
                rows[i].add(j)
                rows[j].add(i)
    return Graph(n, tuple(frozenset(r) for r in rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# --- edge list and DOT ------------------------------------------------------


def to_edgelist(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def parse_edgelist(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise ValidationError("edge list needs a header 'n m'")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValidationError(f"edge list: {exc}") from None
    n, m = nums[0], nums[1]
    body = nums[2:]
    if n < 0 or m < 0:
        raise ValidationError("edge list header must be non-negative")
    if len(body) != 2 * m:
        raise ValidationError(f"edge list declares {m} edges but carries {len(body) / 2:g}")
    return Graph.from_edges(n, zip(body[0::2], body[1::2]))


def to_dot(g: Graph, name: str = "G", labels: Sequence[str] | None = None) -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        label = f' [label="{labels[v]}"]' if labels is not None else ""
        lines.append(f"  {v}{label};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
