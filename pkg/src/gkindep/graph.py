"""Canonical graph representation, edge-list parsing, and structural queries.

Graphs are finite, simple, and undirected.  Vertices are always the dense
integers ``0..n-1``; array-indexed adjacency is what gives the constructor
its O(n+m) running time.  Values are immutable after construction and safe
to share across threads.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DuplicateEdgeError,
    ParseError,
    RangeError,
    SelfLoopError,
)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``edges`` holds each unordered pair once as ``(min, max)``.
    ``adjacency`` is derived: per-vertex sorted neighbor tuples.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self.edges

    def __repr__(self) -> str:  # keep huge graphs printable
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges) -> Graph:
    """Validate and assemble a Graph from an iterable of (u, v) pairs.

    Raises SelfLoopError / DuplicateEdgeError / RangeError on defective
    input; duplicates are an error rather than silently merged so corpus
    defects surface.
    """
    if n < 0:
        raise RangeError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    neighbors: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise RangeError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
        neighbors[u].append(v)
        neighbors[v].append(u)
    adjacency = tuple(tuple(sorted(ns)) for ns in neighbors)
    return Graph(n=n, edges=frozenset(seen), adjacency=adjacency)


def parse_graph(text: str, one_indexed: bool = False) -> Graph:
    """Parse the edge-list interchange format.

    First non-comment line is ``n m``; then exactly m lines ``u v``.
    Lines starting with ``#`` and blank lines are ignored.  With
    ``one_indexed`` the file uses ids 1..n, normalized here to 0..n-1.
    """
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    shift = 1 if one_indexed else 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError("expected header 'n m'", lineno)
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError("header fields must be integers", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("header fields must be nonnegative", lineno)
            header = (n, m)
            continue
        if len(fields) != 2:
            raise ParseError("expected edge line 'u v'", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno) from None
        u -= shift
        v -= shift
        n = header[0]
        if not (0 <= u < n) or not (0 <= v < n):
            raise RangeError(f"line {lineno}: edge ({fields[0]}, {fields[1]}) out of range for n={n}")
        if u == v:
            raise SelfLoopError("self-loop edge", lineno)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge ({fields[0]}, {fields[1]})", lineno)
        seen.add(e)
        pairs.append(e)
    if header is None:
        raise ParseError("empty input: missing 'n m' header")
    n, m = header
    if len(pairs) != m:
        raise ParseError(f"header promised {m} edges but file has {len(pairs)}")
    return build_graph(n, pairs)


def write_graph(g: Graph) -> str:
    """Serialize to the edge-list format; inverse of parse_graph."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components: vertex -> contiguous component index, plus count."""

    component_id: tuple[int, ...]
    count: int

    def members(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.component_id):
            out[c].append(v)
        return out


def components(g: Graph) -> ComponentPartition:
    """Partition vertices into maximal connected sets; count = c(G)."""
    comp = [-1] * g.n
    count = 0
    adjacency = g.adjacency
    for start in range(g.n):
        if comp[start] != -1:
            continue
        comp[start] = count
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if comp[w] == -1:
                    comp[w] = count
                    stack.append(w)
        count += 1
    return ComponentPartition(component_id=tuple(comp), count=count)


def induced_subgraph(g: Graph, s) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on vertex set s with exactly the edges of g inside s.

    Survivors are relabeled order-preservingly; returns (subgraph, old_ids)
    where old_ids[new] is the original id, so certificates translate back.
    """
    keep = sorted(set(s))
    for v in keep:
        if not (0 <= v < g.n):
            raise RangeError(f"vertex {v} out of range for n={g.n}")
    new_id = {old: new for new, old in enumerate(keep)}
    edges = [
        (new_id[u], new_id[v])
        for u, v in g.edges
        if u in new_id and v in new_id
    ]
    return build_graph(len(keep), edges), tuple(keep)


def delete_vertices(g: Graph, w) -> tuple[Graph, tuple[int, ...]]:
    """G - W: delete the vertices in w and all incident edges.

    Returns (subgraph, old_ids) exactly like induced_subgraph.
    """
    drop = set(w)
    for v in drop:
        if not (0 <= v < g.n):
            raise RangeError(f"vertex {v} out of range for n={g.n}")
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))
