"""Shared test utilities: seeded generators, hypothesis strategies, and
independent oracles that never touch the code paths they are checking."""
from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from gkindep import Graph, build_graph, path_graph


def gnp(seed_or_rng, n: int, p: float) -> Graph:
    rng = seed_or_rng if isinstance(seed_or_rng, random.Random) else random.Random(seed_or_rng)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return build_graph(n, edges)


def random_tree(seed_or_rng, n: int) -> Graph:
    """Uniform labeled tree via a random Pruefer sequence (test-local decode,
    independent of the package's generators)."""
    rng = seed_or_rng if isinstance(seed_or_rng, random.Random) else random.Random(seed_or_rng)
    if n <= 2:
        return path_graph(n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return build_graph(n, prufer_edges(seq, n))


def prufer_edges(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    leaf = -1
    # linear decode: smallest-leaf selection via pointer scan
    import heapq

    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return edges


def oracle_alpha(g: Graph, k: int) -> int:
    """Plain subset-scan oracle kept deliberately separate from the package's
    brute_force_alpha (set-based component walk, no bit tricks)."""
    verts = list(range(g.n))
    adj = {v: set(g.adjacency[v]) for v in verts}

    def valid(sub: set[int]) -> bool:
        seen: set[int] = set()
        for s in sub:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y in sub and y not in comp:
                        comp.add(y)
                        stack.append(y)
            if len(comp) >= k:
                return False
            seen |= comp
        return True

    for size in range(g.n, -1, -1):
        for sub in combinations(verts, size):
            if valid(set(sub)):
                return size
    return 0


def oracle_block_partition(tree: Graph, k: int) -> bool:
    """Exhaustive k-block partition oracle for trees: some subset of the
    n-1 tree edges, when cut, leaves components of size exactly k."""
    n = tree.n
    if n == 0 or n % k != 0:
        return False
    edges = sorted(tree.edges)
    adj = [list(tree.adjacency[v]) for v in range(n)]
    for cut_mask in range(1 << len(edges)):
        cut = {edges[i] for i in range(len(edges)) if cut_mask >> i & 1}
        seen = [False] * n
        ok = True
        for start in range(n):
            if seen[start]:
                continue
            comp = 1
            seen[start] = True
            stack = [start]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    e = (x, y) if x < y else (y, x)
                    if e in cut or seen[y]:
                        continue
                    seen[y] = True
                    comp += 1
                    stack.append(y)
            if comp != k:
                ok = False
                break
        if ok:
            return True
    return False


def lies_on_cycle(g: Graph, v: int) -> bool:
    """True when two neighbors of v stay connected after deleting v."""
    nbrs = list(g.adjacency[v])
    for i in range(len(nbrs)):
        for j in range(i + 1, len(nbrs)):
            a, b = nbrs[i], nbrs[j]
            seen = {v, a}
            stack = [a]
            while stack:
                x = stack.pop()
                if x == b:
                    return True
                for y in g.adjacency[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
    return False


@st.composite
def graphs(draw, max_n: int = 10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    possible = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if possible:
        edges = draw(st.lists(st.sampled_from(possible), unique=True))
    else:
        edges = []
    return build_graph(n, edges)


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n <= 2:
        return path_graph(n)
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return build_graph(n, prufer_edges(seq, n))


@st.composite
def ks(draw, max_k: int = 5):
    return draw(st.integers(min_value=2, max_value=max_k))
