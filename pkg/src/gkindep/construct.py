"""Linear-time construction of a large valid set, plus verification.

Phase A breaks every cycle by deleting the deeper endpoint of each DFS back
edge; at most omega vertices go, so at least n - omega survive.  Phase B
prunes the remaining forest bottom-up: a vertex is deleted the moment its
residual subtree reaches k vertices, which caps removals at |U|/k.  The
composition therefore returns at least ceil((k-1)(n - omega)/k) vertices
whose induced components all have fewer than k vertices, in O(n + m).

For graphs that satisfy the equality conditions (see extremal), the
refinement below achieves the bound exactly instead of just meeting it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bounds import base_bound
from .cycles import CycleStructure, cycle_structure, dfs_forest
from .errors import (
    CyclicInputError,
    InternalGuaranteeViolation,
    NotExtremalError,
    ParameterError,
    RangeError,
    RefinementFailure,
)
from .extremal import _greedy_removals, check_extremal
from .graph import Graph, components


@dataclass(frozen=True)
class GkSet:
    """A vertex set certified valid: no induced component reaches k vertices.

    ``guarantee`` is the proven size floor ceil((k-1)(n-omega)/k); the two
    removed sets partition the complement by pipeline phase.
    """

    vertices: frozenset[int]
    k: int
    guarantee: int
    phase_a_removed: frozenset[int]
    phase_b_removed: frozenset[int]
    max_component: int

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "size": len(self.vertices),
            "vertices": sorted(self.vertices),
            "guarantee": self.guarantee,
            "phase_a_removed": sorted(self.phase_a_removed),
            "phase_b_removed": sorted(self.phase_b_removed),
            "max_component": self.max_component,
        }


def phase_a(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Cycle-breaking: X = deeper endpoints of all DFS back edges, U = rest.

    A vertex that closes several back edges is deleted once, so |X| can be
    strictly below omega.  G[U] is acyclic because every cycle contains a
    back edge.
    """
    forest = dfs_forest(g)
    x = frozenset(u for u, _ in forest.back_edges)
    u = frozenset(v for v in range(g.n) if v not in x)
    return x, u


def _clip_removals(g: Graph, vertices, k: int) -> list[int]:
    """Bottom-up forest pruning; the shared recurrence of phase B.

    Processes each tree of the induced forest from its lowest-id root.
    A vertex accumulates its surviving subtree size and is removed (its
    branch's contribution reset to zero) as soon as that size reaches k.
    Decisions depend only on each vertex's own subtree, so the removal set
    is the same as for the recursive child-by-child formulation.
    """
    n = g.n
    allowed = bytearray(n)
    for v in vertices:
        if not (0 <= v < n):
            raise RangeError(f"vertex {v} out of range for n={n}")
        allowed[v] = 1
    adjacency = g.adjacency
    parent = [-1] * n
    preorder: list[int] = []
    seen = bytearray(n)
    for r in range(n):
        if not allowed[r] or seen[r]:
            continue
        seen[r] = 1
        parent[r] = -1
        preorder.append(r)
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
            if not allowed[w]:
                continue
            if not seen[w]:
                seen[w] = 1
                parent[w] = v
                preorder.append(w)
                stack_v.append(w)
                stack_i.append(0)
            elif w != parent[v]:
                raise CyclicInputError("induced subgraph contains a cycle")
    size = [1] * n
    removed: list[int] = []
    for v in reversed(preorder):
        if size[v] >= k:
            removed.append(v)
        else:
            p = parent[v]
            if p >= 0:
                size[p] += size[v]
    return removed


def phase_b(g: Graph, u, k: int) -> frozenset[int]:
    """Tree-pruning on the forest G[u]; returns the surviving set S.

    Every component of G[S] has at most k-1 vertices and at most |u|/k
    vertices are removed.  Raises CyclicInputError if G[u] has a cycle.
    """
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    removed = _clip_removals(g, u, k)
    gone = bytearray(g.n)
    for v in removed:
        gone[v] = 1
    return frozenset(v for v in u if not gone[v])


def verify_set(g: Graph, k: int, s) -> int:
    """Largest component size of G[s]; valid exactly when the result < k."""
    n = g.n
    members = bytearray(n)
    for v in s:
        if not (0 <= v < n):
            raise RangeError(f"vertex {v} out of range for n={n}")
        members[v] = 1
    adjacency = g.adjacency
    seen = bytearray(n)
    best = 0
    for v in range(n):
        if not members[v] or seen[v]:
            continue
        seen[v] = 1
        size = 0
        stack = [v]
        while stack:
            x = stack.pop()
            size += 1
            for y in adjacency[x]:
                if members[y] and not seen[y]:
                    seen[y] = 1
                    stack.append(y)
        if size > best:
            best = size
    return best


def construct_set(g: Graph, k: int) -> GkSet:
    """Phase A then phase B; certifies the output before returning it.

    Runs in O(n + m); phase A's DFS also supplies the cycle-space dimension
    for the guarantee.  A result below the guarantee or with an oversized
    component is an implementation bug and raises rather than returning.
    """
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    forest = dfs_forest(g)
    x = frozenset(a for a, _ in forest.back_edges)
    u = [v for v in range(g.n) if v not in x]
    s = phase_b(g, u, k)
    omega = len(forest.back_edges)
    guarantee = base_bound(g.n, omega, k)
    if len(s) < guarantee:
        raise InternalGuaranteeViolation(
            f"constructed {len(s)} vertices, guarantee was {guarantee}"
        )
    max_component = verify_set(g, k, s)
    if max_component > k - 1:
        raise InternalGuaranteeViolation(
            f"constructed set has a component of size {max_component} >= k={k}"
        )
    return GkSet(
        vertices=s,
        k=k,
        guarantee=guarantee,
        phase_a_removed=x,
        phase_b_removed=frozenset(v for v in u if v not in s),
        max_component=max_component,
    )


def equality_refinement(g: Graph, k: int) -> GkSet:
    """Exact-size set for graphs meeting the equality conditions.

    Deletions are planned over the piece forest (each cycle and each
    off-cycle tree component contracted to a node, joined by bridges):
    every non-root piece must delete the endpoint of the bridge toward its
    parent.  A cycle of length q = a*k + 1 rotated to start at that vertex
    deletes positions 0, k, ..., a*k, leaving runs of exactly k-1; a tree
    piece runs the block greedy rooted at that vertex, which always deletes
    its root last.  Every bridge then loses an endpoint, so surviving
    components never span two pieces and the output size is exactly
    (k-1)(n - omega)/k.
    """
    report = check_extremal(g, k)
    if not report.is_extremal:
        raise NotExtremalError(
            f"graph does not satisfy the equality conditions for k={k}"
        )
    cs = cycle_structure(g)
    assert isinstance(cs, CycleStructure)
    gamma_parts = components(cs.gamma)
    tree_count = gamma_parts.count
    gamma_index = {old: i for i, old in enumerate(cs.gamma_old_ids)}
    tree_vertices: list[list[int]] = [[] for _ in range(tree_count)]
    for new, old in enumerate(cs.gamma_old_ids):
        tree_vertices[gamma_parts.component_id[new]].append(old)

    def piece_of(v: int) -> int:
        ci = cs.cycle_index[v]
        if ci is None:
            return gamma_parts.component_id[gamma_index[v]]
        return tree_count + ci

    piece_count = tree_count + cs.omega
    piece_adj: list[list[int]] = [[] for _ in range(piece_count)]
    bridge_end: dict[tuple[int, int], int] = {}  # (piece, neighbor piece) -> endpoint in piece
    for a, b in sorted(g.edges):
        pa, pb = piece_of(a), piece_of(b)
        if pa == pb:
            continue
        piece_adj[pa].append(pb)
        piece_adj[pb].append(pa)
        bridge_end[(pa, pb)] = a
        bridge_end[(pb, pa)] = b

    designated: dict[int, int] = {}
    seen = [False] * piece_count
    for root in range(piece_count):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            p = stack.pop()
            for q in piece_adj[p]:
                if not seen[q]:
                    seen[q] = True
                    designated[q] = bridge_end[(q, p)]
                    stack.append(q)

    cycle_removed: set[int] = set()
    for j, cyc in enumerate(cs.cycles):
        anchor = designated.get(tree_count + j, min(cyc))
        pos = cyc.index(anchor)
        order = cyc[pos:] + cyc[:pos]
        q = len(cyc)
        a = (q - 1) // k
        cycle_removed.update(order[i * k] for i in range(a + 1))
    tree_removed: set[int] = set()
    for t, verts in enumerate(tree_vertices):
        root = designated.get(t, min(verts))
        removed, _, _, _ = _greedy_removals(g, verts, root, k)
        tree_removed.update(removed)

    s = frozenset(v for v in range(g.n) if v not in cycle_removed and v not in tree_removed)
    target = (k - 1) * (g.n - cs.omega) // k
    max_component = verify_set(g, k, s)
    if max_component > k - 1 or len(s) != target:
        raise RefinementFailure(
            f"refinement produced size {len(s)} (target {target}), "
            f"max component {max_component}"
        )
    return GkSet(
        vertices=s,
        k=k,
        guarantee=target,
        phase_a_removed=frozenset(cycle_removed),
        phase_b_removed=frozenset(tree_removed),
        max_component=max_component,
    )
