"""Tight-bound machinery: k-block tree families and the extremal recognizer.

A tree on i*k vertices belongs to the tight family when it can be assembled
by attaching i connected k-vertex blocks one at a time, each by a single
edge.  Such trees are exactly the ones whose largest valid set has size
(k-1)/k of their order; the recognizer below decides membership with the
same bottom-up greedy that proves the bound, and the generators build
planted instances for round-trip testing.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .cycles import NotVertexDisjoint, cycle_structure
from .errors import NotATreeError, ParameterError
from .graph import Graph, build_graph, components, induced_subgraph


@dataclass(frozen=True)
class BlockDecomposition:
    """Partition of a tree into connected k-vertex blocks.

    ``anchors[i]`` is the vertex of ``blocks[i]`` whose removal detaches the
    block (the greedy's deletion); ``block_tree_edges`` are the attaching
    edges between blocks (one fewer than the number of blocks).  On success
    every entry of ``block_sizes`` equals k and ``remainder`` is 0.
    """

    blocks: tuple[tuple[int, ...], ...]
    anchors: tuple[int, ...]
    block_tree_edges: tuple[tuple[int, int], ...]
    block_sizes: tuple[int, ...]
    remainder: int

    def as_dict(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "anchors": list(self.anchors),
            "block_tree_edges": [list(e) for e in self.block_tree_edges],
            "block_sizes": list(self.block_sizes),
            "remainder": self.remainder,
        }


@dataclass(frozen=True)
class NotMember:
    """Negative membership verdict with the first failing greedy step."""

    reason: str  # "size-not-divisible" | "oversized-block"
    witness: int | None = None
    witness_size: int | None = None

    def as_dict(self) -> dict:
        return {
            "member": False,
            "reason": self.reason,
            "witness": self.witness,
            "witness_size": self.witness_size,
        }


def _greedy_removals(g: Graph, vertices, root: int, k: int):
    """Bottom-up block greedy on one tree induced by ``vertices``.

    Repeatedly removes the deepest vertex whose residual subtree has >= k
    vertices.  Returns (removed, sizes, parent, preorder); the removal set
    is independent of traversal order because each decision depends only on
    the vertex's own subtree.
    """
    allowed = set(vertices)
    edge_count = 0
    parent: dict[int, int | None] = {root: None}
    preorder = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w in allowed and w > v:
                edge_count += 1
        for w in reversed(g.adjacency[v]):
            if w in allowed and w not in parent:
                parent[w] = v
                preorder.append(w)
                stack.append(w)
    if len(preorder) != len(allowed):
        raise NotATreeError("vertex set is not connected")
    if edge_count != len(allowed) - 1:
        raise NotATreeError("vertex set induces a cycle")
    size = {v: 1 for v in preorder}
    removed: list[int] = []
    sizes: list[int] = []
    for v in reversed(preorder):
        if size[v] >= k:
            removed.append(v)
            sizes.append(size[v])
        else:
            p = parent[v]
            if p is not None:
                size[p] += size[v]
    return removed, sizes, parent, preorder


def _blocks_from_removals(g: Graph, vertices, removed, parent) -> list[tuple[int, ...]]:
    """Blocks = components after cutting each removed vertex's parent edge."""
    allowed = set(vertices)
    cut = {(v, parent[v]) for v in removed if parent[v] is not None}
    blocks = []
    assigned: set[int] = set()
    for v in removed:
        block = [v]
        assigned.add(v)
        stack = [v]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if y not in allowed or y in assigned:
                    continue
                if (x, y) in cut or (y, x) in cut:
                    continue
                assigned.add(y)
                block.append(y)
                stack.append(y)
        blocks.append(tuple(sorted(block)))
    return blocks


def r_membership(t: Graph, k: int) -> BlockDecomposition | NotMember:
    """Decide whether the tree t splits into connected k-vertex blocks.

    Runs the bottom-up greedy rooted at the lowest id; membership holds
    exactly when every removed subtree has exactly k vertices and nothing
    remains, in which case the removed subtrees are the blocks.
    """
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    n = t.n
    if n < 1 or t.m != n - 1 or components(t).count != 1:
        raise NotATreeError(f"expected a tree, got n={n}, m={t.m}")
    if n % k != 0:
        return NotMember(reason="size-not-divisible")
    removed, sizes, parent, _ = _greedy_removals(t, range(n), 0, k)
    for v, s in zip(removed, sizes):
        if s > k:
            return NotMember(reason="oversized-block", witness=v, witness_size=s)
    # all removed subtrees are exactly k; divisibility forces zero remainder
    blocks = _blocks_from_removals(t, range(n), removed, parent)
    edges = tuple(
        (v, parent[v]) for v in removed if parent[v] is not None
    )
    return BlockDecomposition(
        blocks=tuple(blocks),
        anchors=tuple(removed),
        block_tree_edges=edges,
        block_sizes=tuple(sizes),
        remainder=0,
    )


def _random_tree_edges(rng: random.Random, n: int) -> list[tuple[int, int]]:
    """Uniform labeled tree on 0..n-1 decoded from a random Pruefer sequence."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def _build_r_tree(rng: random.Random, i: int, k: int, offset: int = 0):
    """Edges of a random member of the i-block family, plus its blocks."""
    edges: list[tuple[int, int]] = []
    blocks: list[list[int]] = []
    for b in range(i):
        base = offset + b * k
        edges.extend((base + u, base + v) for u, v in _random_tree_edges(rng, k))
        blocks.append(list(range(base, base + k)))
        if b > 0:
            inside = base + rng.randrange(k)
            outside = offset + rng.randrange(b * k)
            edges.append((inside, outside))
    return edges, blocks


def generate_r_tree(i: int, k: int, seed: int) -> Graph:
    """Random tree built from i connected k-blocks attached one at a time.

    Every output is a family member by construction; deterministic given
    the seed.
    """
    if i < 1:
        raise ParameterError(f"block count must be >= 1, got {i}")
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    rng = random.Random(seed)
    edges, _ = _build_r_tree(rng, i, k)
    return build_graph(i * k, edges)


@dataclass(frozen=True)
class CycleCondition:
    length: int
    ok: bool  # length == 1 (mod k)


@dataclass(frozen=True)
class GammaComponentCondition:
    vertices: tuple[int, ...]
    size: int
    divisible: bool
    member: bool
    decomposition: BlockDecomposition | None  # in original vertex ids


@dataclass(frozen=True)
class ExtremalReport:
    """Three-condition verdict for equality in the base bound.

    is_extremal holds iff the cycles are pairwise vertex-disjoint, every
    cycle length is 1 mod k, and every component left after deleting cycle
    vertices splits into connected k-blocks.
    """

    k: int
    n: int
    omega: int
    cycles_disjoint: bool
    overlap_witness: int | None
    cycle_conditions: tuple[CycleCondition, ...]
    gamma_conditions: tuple[GammaComponentCondition, ...]
    is_extremal: bool

    @property
    def condition_i(self) -> bool:
        return self.cycles_disjoint

    @property
    def condition_ii(self) -> bool:
        return self.cycles_disjoint and all(c.ok for c in self.cycle_conditions)

    @property
    def condition_iii(self) -> bool:
        return self.cycles_disjoint and all(
            c.divisible and c.member for c in self.gamma_conditions
        )

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "omega": self.omega,
            "is_extremal": self.is_extremal,
            "condition_i": {
                "ok": self.condition_i,
                "overlap_witness": self.overlap_witness,
            },
            "condition_ii": {
                "ok": self.condition_ii,
                "cycles": [
                    {"length": c.length, "ok": c.ok} for c in self.cycle_conditions
                ],
            },
            "condition_iii": {
                "ok": self.condition_iii,
                "components": [
                    {
                        "vertices": list(c.vertices),
                        "size": c.size,
                        "divisible": c.divisible,
                        "member": c.member,
                        "decomposition": (
                            c.decomposition.as_dict() if c.decomposition else None
                        ),
                    }
                    for c in self.gamma_conditions
                ],
            },
        }


def check_extremal(g: Graph, k: int) -> ExtremalReport:
    """Recognize equality cases of the base bound via the three conditions."""
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    cs = cycle_structure(g)
    if isinstance(cs, NotVertexDisjoint):
        return ExtremalReport(
            k=k,
            n=g.n,
            omega=cs.omega,
            cycles_disjoint=False,
            overlap_witness=cs.witness,
            cycle_conditions=(),
            gamma_conditions=(),
            is_extremal=False,
        )
    cycle_conds = tuple(
        CycleCondition(length=len(c), ok=len(c) % k == 1) for c in cs.cycles
    )
    gamma_conds = []
    for comp in components(cs.gamma).members():
        orig = tuple(cs.gamma_old_ids[v] for v in comp)
        size = len(comp)
        divisible = size % k == 0
        member = False
        decomposition = None
        if divisible:
            sub, old = induced_subgraph(cs.gamma, comp)
            result = r_membership(sub, k)
            if isinstance(result, BlockDecomposition):
                member = True
                to_orig = [cs.gamma_old_ids[old[v]] for v in range(sub.n)]
                decomposition = BlockDecomposition(
                    blocks=tuple(
                        tuple(sorted(to_orig[v] for v in b)) for b in result.blocks
                    ),
                    anchors=tuple(to_orig[v] for v in result.anchors),
                    block_tree_edges=tuple(
                        (to_orig[a], to_orig[b]) for a, b in result.block_tree_edges
                    ),
                    block_sizes=result.block_sizes,
                    remainder=result.remainder,
                )
        gamma_conds.append(
            GammaComponentCondition(
                vertices=orig,
                size=size,
                divisible=divisible,
                member=member,
                decomposition=decomposition,
            )
        )
    cond_ii = all(c.ok for c in cycle_conds)
    cond_iii = all(c.divisible and c.member for c in gamma_conds)
    return ExtremalReport(
        k=k,
        n=g.n,
        omega=cs.omega,
        cycles_disjoint=True,
        overlap_witness=None,
        cycle_conditions=cycle_conds,
        gamma_conditions=tuple(gamma_conds),
        is_extremal=cond_ii and cond_iii,
    )


def generate_extremal_plan(
    num_cycles: int,
    cycle_multipliers,
    num_tree_blocks: int,
    k: int,
    seed: int,
) -> tuple[Graph, dict]:
    """Build a planted extremal graph plus a description of its structure.

    Pieces are cycles of length a_i*k + 1 and random k-block trees; they
    are joined into one connected graph by bridges forming a tree over the
    pieces, so no new cycles appear and every condition of the recognizer
    holds by construction.
    """
    multipliers = list(cycle_multipliers)
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if num_cycles != len(multipliers):
        raise ParameterError(
            f"num_cycles={num_cycles} but {len(multipliers)} multipliers given"
        )
    if any(a < 1 for a in multipliers):
        raise ParameterError("cycle multipliers must be >= 1")
    if num_tree_blocks < 0:
        raise ParameterError("num_tree_blocks must be >= 0")
    if num_cycles + num_tree_blocks == 0:
        raise ParameterError("nothing to generate: no cycles and no tree blocks")

    rng = random.Random(seed)
    tree_sizes: list[int] = []
    remaining = num_tree_blocks
    while remaining:
        take = rng.randint(1, remaining)
        tree_sizes.append(take)
        remaining -= take

    edges: list[tuple[int, int]] = []
    piece_vertices: list[list[int]] = []
    cycles_out: list[list[int]] = []
    trees_out: list[dict] = []
    offset = 0
    for a in multipliers:
        q = a * k + 1
        ids = list(range(offset, offset + q))
        edges.extend((ids[j], ids[(j + 1) % q]) for j in range(q))
        piece_vertices.append(ids)
        cycles_out.append(ids)
        offset += q
    for blocks in tree_sizes:
        tree_edges, block_ids = _build_r_tree(rng, blocks, k, offset)
        edges.extend(tree_edges)
        ids = list(range(offset, offset + blocks * k))
        piece_vertices.append(ids)
        trees_out.append({"vertices": ids, "blocks": block_ids})
        offset += blocks * k

    bridges: list[tuple[int, int]] = []
    for j in range(1, len(piece_vertices)):
        target = rng.randrange(j)
        u = rng.choice(piece_vertices[j])
        v = rng.choice(piece_vertices[target])
        bridges.append((u, v))
        edges.append((u, v))

    g = build_graph(offset, edges)
    plan = {
        "k": k,
        "n": offset,
        "cycles": cycles_out,
        "tree_components": trees_out,
        "bridges": [list(b) for b in bridges],
        "seed": seed,
    }
    return g, plan


def generate_extremal(
    num_cycles: int,
    cycle_multipliers,
    num_tree_blocks: int,
    k: int,
    seed: int,
) -> Graph:
    """Seeded extremal-graph generator; see generate_extremal_plan."""
    g, _ = generate_extremal_plan(num_cycles, cycle_multipliers, num_tree_blocks, k, seed)
    return g
