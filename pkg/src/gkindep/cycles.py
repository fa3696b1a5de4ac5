"""DFS cycle-space analysis: back edges, disjoint-cycle detection, contractions.

All traversals break ties lowest-vertex-id-first and use explicit stacks, so
results are deterministic and million-vertex paths do not overflow the call
stack.  The visit order matches what a recursive lowest-id-first DFS would
produce.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, build_graph, components


@dataclass(frozen=True)
class DfsForest:
    """Rooted spanning forest plus the non-tree (back) edges.

    Back edges are oriented deeper-endpoint-first: ``(u, v)`` has
    ``depth[u] > depth[v]`` and v is a DFS ancestor of u.  Tree edges and
    back edges together cover every edge exactly once.
    """

    parent: tuple[int | None, ...]
    depth: tuple[int, ...]
    roots: tuple[int, ...]
    back_edges: tuple[tuple[int, int], ...]
    visit_order: tuple[int, ...]


def dfs_forest(g: Graph) -> DfsForest:
    """Deterministic iterative DFS over every component.

    Roots are taken in increasing vertex id, neighbors explored in
    increasing id; every non-tree edge is reported once, from its deeper
    endpoint.
    """
    n = g.n
    adjacency = g.adjacency
    parent: list[int | None] = [None] * n
    depth = [0] * n
    visited = [False] * n
    roots: list[int] = []
    back: list[tuple[int, int]] = []
    order: list[int] = []
    for r in range(n):
        if visited[r]:
            continue
        roots.append(r)
        visited[r] = True
        order.append(r)
        stack_v = [r]
        stack_i = [0]
        while stack_v:
            v = stack_v[-1]
            i = stack_i[-1]
            nbrs = adjacency[v]
            if i == len(nbrs):
                stack_v.pop()
                stack_i.pop()
                continue
            stack_i[-1] = i + 1
            w = nbrs[i]
            if not visited[w]:
                visited[w] = True
                parent[w] = v
                depth[w] = depth[v] + 1
                order.append(w)
                stack_v.append(w)
                stack_i.append(0)
            elif w != parent[v] and depth[w] < depth[v]:
                back.append((v, w))
    return DfsForest(
        parent=tuple(parent),
        depth=tuple(depth),
        roots=tuple(roots),
        back_edges=tuple(back),
        visit_order=tuple(order),
    )


def cycle_space_dimension(g: Graph) -> int:
    """m - n + c(G); equals the number of DFS back edges."""
    return g.m - g.n + components(g).count


@dataclass(frozen=True)
class NotVertexDisjoint:
    """Verdict that some vertex lies on two cycles; not an error.

    ``witness`` is a vertex shared by two back-edge cycles.
    """

    witness: int
    omega: int

    def as_dict(self) -> dict:
        return {"cycles_disjoint": False, "witness": self.witness, "omega": self.omega}


@dataclass(frozen=True)
class CycleStructure:
    """Full cycle inventory of a graph whose cycles are pairwise disjoint.

    ``cycles[i]`` lists the i-th cycle's vertices in cyclic order.
    ``pendant_anchor[i]`` is the unique degree-3 vertex when the cycle is
    pendant (every other vertex of degree 2), else None.
    ``cycle_index[v]`` maps a vertex to its cycle, or None for off-cycle
    vertices.  ``gamma``/``contracted`` are the graphs obtained by deleting
    all cycle vertices / contracting each cycle to a single vertex; both
    come with maps back to original ids.  A contracted vertex's tag is
    ("vertex", original_id) or ("cycle", cycle_index).
    """

    omega: int
    cycles: tuple[tuple[int, ...], ...]
    pendant_anchor: tuple[int | None, ...]
    cycle_index: tuple[int | None, ...]
    gamma: Graph
    gamma_old_ids: tuple[int, ...]
    contracted: Graph
    contracted_tags: tuple[tuple[str, int], ...]

    @property
    def pendant_cycles(self) -> list[int]:
        return [i for i, a in enumerate(self.pendant_anchor) if a is not None]

    def as_dict(self) -> dict:
        return {
            "cycles_disjoint": True,
            "omega": self.omega,
            "cycles": [list(c) for c in self.cycles],
            "pendant_anchors": list(self.pendant_anchor),
            "gamma_vertices": list(self.gamma_old_ids),
            "contracted_tags": [list(t) for t in self.contracted_tags],
        }


def cycle_structure(g: Graph) -> CycleStructure | NotVertexDisjoint:
    """Enumerate the cycles when they are pairwise vertex-disjoint.

    Each DFS back edge closes one fundamental cycle (its tree path plus the
    back edge).  When these omega cycles are pairwise vertex-disjoint they
    are exactly the cycles of the graph; the first vertex found on two of
    them is returned as a NotVertexDisjoint witness instead.
    """
    forest = dfs_forest(g)
    omega = len(forest.back_edges)
    parent = forest.parent
    cycle_index: list[int | None] = [None] * g.n
    cycles: list[tuple[int, ...]] = []
    for u, v in forest.back_edges:
        path = [u]
        x = u
        while x != v:
            x = parent[x]  # type: ignore[assignment]
            path.append(x)
        idx = len(cycles)
        for y in path:
            if cycle_index[y] is not None:
                return NotVertexDisjoint(witness=y, omega=omega)
            cycle_index[y] = idx
        cycles.append(tuple(path))

    pendant: list[int | None] = []
    for cyc in cycles:
        anchor = None
        ok = True
        for y in cyc:
            d = g.degree(y)
            if d == 2:
                continue
            if d == 3 and anchor is None:
                anchor = y
            else:
                ok = False
                break
        pendant.append(anchor if ok and anchor is not None else None)

    off_cycle = [v for v in range(g.n) if cycle_index[v] is None]
    gamma_new = {old: new for new, old in enumerate(off_cycle)}
    gamma_edges = []
    n_off = len(off_cycle)
    contracted_edges: set[tuple[int, int]] = set()

    def contracted_id(v: int) -> int:
        ci = cycle_index[v]
        return gamma_new[v] if ci is None else n_off + ci

    for u, v in g.edges:
        cu, cv = cycle_index[u], cycle_index[v]
        if cu is None and cv is None:
            gamma_edges.append((gamma_new[u], gamma_new[v]))
        a, b = contracted_id(u), contracted_id(v)
        if a != b:
            e = (a, b) if a < b else (b, a)
            contracted_edges.add(e)

    gamma = build_graph(n_off, gamma_edges)
    contracted = build_graph(n_off + len(cycles), sorted(contracted_edges))
    tags = [("vertex", old) for old in off_cycle]
    tags.extend(("cycle", i) for i in range(len(cycles)))
    return CycleStructure(
        omega=omega,
        cycles=tuple(cycles),
        pendant_anchor=tuple(pendant),
        cycle_index=tuple(cycle_index),
        gamma=gamma,
        gamma_old_ids=tuple(off_cycle),
        contracted=contracted,
        contracted_tags=tuple(tags),
    )


def gamma_graph(cs: CycleStructure) -> tuple[Graph, tuple[int, ...]]:
    """The graph left after deleting all cycle vertices, with its id map."""
    return cs.gamma, cs.gamma_old_ids


def contracted_graph(cs: CycleStructure) -> tuple[Graph, tuple[tuple[str, int], ...]]:
    """The cycle-contraction: off-cycle vertices first (in increasing
    original id), then one vertex per cycle; acyclic whenever cs is valid."""
    return cs.contracted, cs.contracted_tags
