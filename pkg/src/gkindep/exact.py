"""Exact optimum: forest greedy, branch-and-bound, and the subset oracle.

The solver works on the deletion side: the smallest X whose removal leaves
every component below k vertices, with the optimum value then n - |X|.
Forests are solved by the same bottom-up greedy the constructor uses (its
optimality on trees is enforced by the oracle-equivalence test suite);
cyclic components get branch-and-bound seeded with the constructor's set
as incumbent and pruned with a spanning-forest relaxation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .construct import _clip_removals, construct_set
from .cycles import dfs_forest
from .errors import (
    BudgetExhausted,
    CyclicInputError,
    ParameterError,
    TooLargeError,
)
from .graph import Graph, build_graph, components, induced_subgraph

DEFAULT_BUDGET = 10_000_000
BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class ExactResult:
    """Provably optimal value with a witness set.

    alpha + tau = n always; the witness induces only components below k.
    """

    alpha: int
    tau: int
    witness: tuple[int, ...]
    method: str  # "forest-greedy" | "branch-bound" | "brute-force"
    nodes_explored: int

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "tau": self.tau,
            "witness": list(self.witness),
            "method": self.method,
            "nodes_explored": self.nodes_explored,
        }


def forest_tau(g: Graph, k: int) -> ExactResult:
    """Exact optimum on forests via the bottom-up deletion greedy."""
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if g.m != g.n - components(g).count:
        raise CyclicInputError("forest_tau requires an acyclic graph")
    removed = _clip_removals(g, range(g.n), k)
    gone = set(removed)
    witness = tuple(v for v in range(g.n) if v not in gone)
    return ExactResult(
        alpha=g.n - len(removed),
        tau=len(removed),
        witness=witness,
        method="forest-greedy",
        nodes_explored=0,
    )


def brute_force_alpha(g: Graph, k: int) -> int:
    """Subset-enumeration oracle; hard-limited to n <= 20.

    Scans subsets in increasing integer encoding, keeping the best valid
    size.  Subsets no larger than the incumbent are skipped outright, which
    changes nothing about the returned maximum.
    """
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    n = g.n
    if n > BRUTE_FORCE_LIMIT:
        raise TooLargeError(f"brute force capped at n={BRUTE_FORCE_LIMIT}, got {n}")
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    best = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        rem = mask
        ok = True
        while rem:
            bit = rem & -rem
            comp = 0
            frontier = bit
            while frontier:
                comp |= frontier
                if comp.bit_count() >= k:
                    ok = False
                    break
                grow = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    grow |= nbr[b.bit_length() - 1]
                frontier = grow & mask & ~comp
            if not ok:
                break
            rem &= ~comp
        if ok:
            best = size
    return best


class _Search:
    """Branch-and-bound for the minimum deletion set of one cyclic component."""

    def __init__(self, g: Graph, k: int, budget: int, nodes_used: int):
        self.g = g
        self.k = k
        self.budget = budget
        self.nodes = nodes_used
        start = construct_set(g, k)
        self.best_removed = frozenset(range(g.n)) - start.vertices
        self.best = len(self.best_removed)

    def _component_sets(self, avail: frozenset[int]) -> list[frozenset[int]]:
        adjacency = self.g.adjacency
        seen: set[int] = set()
        out = []
        for v in sorted(avail):
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                for y in adjacency[x]:
                    if y in avail and y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
            out.append(frozenset(comp))
        return out

    def _is_forest(self, verts: frozenset[int]) -> bool:
        edges = 0
        for v in verts:
            for w in self.g.adjacency[v]:
                if w in verts and w > v:
                    edges += 1
        return edges == len(verts) - 1  # verts is connected here

    def _relax_lb(self, verts: frozenset[int]) -> int:
        """Deletions needed for a spanning tree of the piece: a valid
        lower bound because removing edges never increases the optimum."""
        sub, _ = induced_subgraph(self.g, verts)
        forest = dfs_forest(sub)
        spanning = build_graph(
            sub.n,
            ((w, p) for w, p in enumerate(forest.parent) if p is not None),
        )
        lb = len(_clip_removals(spanning, range(sub.n), self.k))
        return max(lb, 1)

    def _resolve(self, verts: frozenset[int], deleted: set[int]) -> list[tuple[frozenset[int], int]]:
        """Split into components; settle small and forest pieces, queue the rest."""
        tasks = []
        for comp in self._component_sets(verts):
            if len(comp) < self.k:
                continue
            if self._is_forest(comp):
                deleted.update(_clip_removals(self.g, comp, self.k))
            else:
                tasks.append((comp, self._relax_lb(comp)))
        return tasks

    def _branch_vertex(self, comp: frozenset[int], kept: frozenset[int]) -> int | None:
        best_v, best_deg = None, -1
        for v in sorted(comp):
            if v in kept:
                continue
            deg = sum(1 for w in self.g.adjacency[v] if w in comp)
            if deg > best_deg:
                best_v, best_deg = v, deg
        return best_v

    def _kept_blob_too_big(self, comp: frozenset[int], kept: frozenset[int], v: int) -> bool:
        blob = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in self.g.adjacency[x]:
                if y in comp and y in kept and y not in blob:
                    blob.add(y)
                    if len(blob) >= self.k:
                        return True
                    stack.append(y)
        return False

    def run(self) -> tuple[int, frozenset[int], int]:
        deleted: set[int] = set()
        tasks = self._resolve(frozenset(range(self.g.n)), deleted)
        self._search(tasks, deleted, frozenset())
        return self.best, self.best_removed, self.nodes

    def _search(self, tasks, deleted: set[int], kept: frozenset[int]) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget()
        if not tasks:
            if len(deleted) < self.best:
                self.best = len(deleted)
                self.best_removed = frozenset(deleted)
            return
        lower = len(deleted) + sum(lb for _, lb in tasks)
        if lower >= self.best:
            return
        comp, _ = tasks[0]
        rest = tasks[1:]
        v = self._branch_vertex(comp, kept)
        if v is None:
            return  # every vertex pinned kept yet the piece is oversized
        # branch 1: delete v
        sub_deleted = set(deleted)
        sub_deleted.add(v)
        new_tasks = self._resolve(comp - {v}, sub_deleted)
        self._search(rest + new_tasks, sub_deleted, kept)
        # branch 2: pin v kept
        if not self._kept_blob_too_big(comp, kept, v):
            self._search(tasks, set(deleted), kept | {v})


class _OutOfBudget(Exception):
    pass


def exact_alpha(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Exact optimum for arbitrary graphs, component by component.

    Forest components use the greedy; cyclic ones branch on a maximum-degree
    vertex of an oversized piece (delete it, or pin it kept), pruning with
    the spanning-forest relaxation against the incumbent.  Raises
    BudgetExhausted carrying the best feasible incumbent when the node
    budget runs out before optimality is proven.
    """
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if g.m == g.n - components(g).count:
        return forest_tau(g, k)
    nodes = 0
    witness: list[int] = []
    parts = components(g).members()
    for idx, comp in enumerate(parts):
        sub, old = induced_subgraph(g, comp)
        if sub.m == sub.n - 1 or sub.m == 0 or sub.n < k:
            removed = set(_clip_removals(sub, range(sub.n), k)) if sub.n >= k else set()
            witness.extend(old[v] for v in range(sub.n) if v not in removed)
            continue
        search = _Search(sub, k, budget, nodes)
        try:
            _, removed_set, nodes = search.run()
        except _OutOfBudget:
            witness.extend(
                old[v] for v in range(sub.n) if v not in search.best_removed
            )
            for later in parts[idx + 1 :]:
                later_sub, later_old = induced_subgraph(g, later)
                kept = construct_set(later_sub, k).vertices
                witness.extend(later_old[v] for v in kept)
            incumbent = ExactResult(
                alpha=len(witness),
                tau=g.n - len(witness),
                witness=tuple(sorted(witness)),
                method="branch-bound",
                nodes_explored=search.nodes,
            )
            raise BudgetExhausted(incumbent, search.nodes) from None
        witness.extend(old[v] for v in range(sub.n) if v not in removed_set)
    result_witness = tuple(sorted(witness))
    return ExactResult(
        alpha=len(result_witness),
        tau=g.n - len(result_witness),
        witness=result_witness,
        method="branch-bound",
        nodes_explored=nodes,
    )
