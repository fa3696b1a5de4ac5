"""Named graph builders used by the CLI and the test suite."""
from __future__ import annotations

from .errors import ParameterError
from .graph import Graph, build_graph


def path_graph(n: int) -> Graph:
    if n < 0:
        raise ParameterError(f"path order must be >= 0, got {n}")
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle order must be >= 3, got {n}")
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ParameterError(f"order must be >= 0, got {n}")
    return build_graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    """Center vertex 0 with the given number of leaves."""
    if leaves < 0:
        raise ParameterError(f"leaf count must be >= 0, got {leaves}")
    return build_graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def figure1_graph(k: int) -> Graph:
    """The built-in worked example behind the `figure1` CLI command.

    Two paths of k vertices and two cycles (lengths k+1 and 2k+1) joined by
    three bridges into one connected graph on 5k+2 vertices with cycle-space
    dimension 2.  The base bound 5(k-1) is attained exactly: cycle lengths
    are 1 mod k and the off-cycle components are k-vertex paths.

    Layout: first path 0..k-1; first cycle k..2k; second path 2k+1..3k;
    second cycle 3k+1..5k+1; bridges (k-1, k), (k, 2k+1), (3k, 3k+1).
    """
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    edges: list[tuple[int, int]] = []
    edges.extend((i, i + 1) for i in range(k - 1))
    edges.extend((k + i, k + i + 1) for i in range(k))
    edges.append((2 * k, k))
    edges.extend((2 * k + 1 + i, 2 * k + 2 + i) for i in range(k - 1))
    edges.extend((3 * k + 1 + i, 3 * k + 2 + i) for i in range(2 * k))
    edges.append((5 * k + 1, 3 * k + 1))
    edges.extend([(k - 1, k), (k, 2 * k + 1), (3 * k, 3 * k + 1)])
    return build_graph(5 * k + 2, edges)
