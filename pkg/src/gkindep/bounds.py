"""Closed-form values and certified lower bounds on the largest valid set.

Everything here is exact arithmetic: Fraction for slack terms, integer
floor/ceil identities for the closed forms.  Floating point is banned from
this module because rounding off-by-ones are the dominant risk.

The headline quantity is the base bound ceil((k-1)(n - omega)/k) where
omega = m - n + c is the cycle-space dimension.  On top of it, four slack
sources are itemized and a sound combined bound is assembled by peeling
the graph apart (see refined_bound).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cycles import CycleStructure, cycle_structure
from .errors import ParameterError
from .extremal import BlockDecomposition, r_membership
from .graph import Graph, components, induced_subgraph


def _check_k(k: int) -> None:
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")


def path_alpha(n: int, k: int) -> int:
    """Largest valid set in the n-vertex path: ceil((k-1)n/k).

    Equals n - floor(n/k), so paths shorter than k keep every vertex.
    """
    _check_k(k)
    if n < 1:
        raise ParameterError(f"path order must be >= 1, got {n}")
    return n - n // k


def cycle_alpha(n: int, k: int) -> int:
    """Largest valid set in the n-vertex cycle: floor((k-1)n/k) for n >= k.

    A cycle shorter than k keeps all n vertices; the closed form only
    applies from n >= k.
    """
    _check_k(k)
    if n < 3:
        raise ParameterError(f"cycle order must be >= 3, got {n}")
    if n < k:
        return n
    return n - (n + k - 1) // k


def base_bound(n: int, omega: int, k: int) -> int:
    """ceil((k-1)(n - omega)/k) in exact integer arithmetic."""
    _check_k(k)
    return math.ceil(Fraction((k - 1) * (n - omega), k))


def pendant_slack(q: int, k: int) -> Fraction:
    """Extra value a pendant cycle of length q adds over (k-1)(q-1)/k.

    With s = q mod k this is (k-1)/k when s = 0, else (s-1)/k; zero exactly
    when q = 1 (mod k).
    """
    if q < 3:
        raise ParameterError(f"cycle length must be >= 3, got {q}")
    _check_k(k)
    s = q % k
    if s == 0:
        return Fraction(k - 1, k)
    return Fraction(s - 1, k)


@dataclass(frozen=True)
class GammaComponentSlack:
    """Slack contributed by one component left after deleting cycle vertices."""

    size: int
    remainder: int  # size mod k
    slack: Fraction  # remainder / k
    plus_one: bool  # k | size but the component is not a k-block tree


@dataclass(frozen=True)
class BoundReport:
    """Base bound plus itemized slack sources and two integer lower bounds.

    ``combined`` folds every applicable slack into one sound bound;
    ``conservative`` is the max over the individually-justified bounds.
    Neither dominates the other by contract, but both are always <= the
    exact optimum.
    """

    k: int
    n: int
    omega: int
    base: Fraction
    base_ceil: int
    cycles_disjoint: bool
    overlap_slack: Fraction
    pendant_slacks: tuple[tuple[int, Fraction], ...]
    gamma_slacks: tuple[GammaComponentSlack, ...]
    combined: int
    conservative: int

    def as_dict(self) -> dict:
        def frac(x: Fraction) -> dict:
            return {"num": x.numerator, "den": x.denominator}

        return {
            "k": self.k,
            "n": self.n,
            "omega": self.omega,
            "base": frac(self.base),
            "base_ceil": self.base_ceil,
            "cycles_disjoint": self.cycles_disjoint,
            "overlap_slack": frac(self.overlap_slack),
            "pendant_slacks": [
                {"length": q, "slack": frac(s)} for q, s in self.pendant_slacks
            ],
            "gamma_slacks": [
                {
                    "size": gs.size,
                    "remainder": gs.remainder,
                    "slack": frac(gs.slack),
                    "plus_one": gs.plus_one,
                }
                for gs in self.gamma_slacks
            ],
            "combined": self.combined,
            "conservative": self.conservative,
        }


def _tree_floor(tree: Graph, k: int) -> int:
    """Sound per-tree bound: ceil((k-1)n/k), +1 when divisible but not
    decomposable into k-blocks (strict-inequality direction of the tree
    characterization)."""
    n = tree.n
    value = n - n // k
    if n > 0 and n % k == 0:
        if not isinstance(r_membership(tree, k), BlockDecomposition):
            value += 1
    return value


def _peel_component(g: Graph, comp: list[int], k: int, work: list[list[int]]) -> int:
    """Sound integer bound for one connected piece with disjoint cycles.

    Pendant cycles are peeled off one at a time (each worth
    ceil((k-1)(q-1)/k), by deleting its attachment vertex); leftover pieces
    go back on the worklist.  Pure cycles and trees get their exact / tree
    values; anything still entangled falls back to the max of its own base
    bound and the sum of its off-cycle tree bounds.
    """
    sub, old = induced_subgraph(g, comp)
    nc = sub.n
    if nc < k:
        return nc
    cs = cycle_structure(sub)
    assert isinstance(cs, CycleStructure)  # induced cycles stay disjoint
    if cs.omega == 0:
        return _tree_floor(sub, k)
    if nc == len(cs.cycles[0]):
        return cycle_alpha(nc, k)
    pendants = cs.pendant_cycles
    if pendants:
        cyc = cs.cycles[pendants[0]]
        q = len(cyc)
        rest = set(range(nc)) - set(cyc)
        rest_sub, rest_old = induced_subgraph(sub, rest)
        for piece in components(rest_sub).members():
            work.append([old[rest_old[v]] for v in piece])
        return path_alpha(q - 1, k)
    fallback = base_bound(nc, cs.omega, k)
    gamma_total = 0
    for piece in components(cs.gamma).members():
        tree, _ = induced_subgraph(cs.gamma, piece)
        gamma_total += _tree_floor(tree, k)
    return max(fallback, gamma_total)


def _sound_combined(g: Graph, k: int) -> int:
    total = 0
    work = components(g).members()
    while work:
        comp = work.pop()
        total += _peel_component(g, comp, k, work)
    return total


def refined_bound(g: Graph, k: int) -> BoundReport:
    """Itemize every slack source and assemble sound integer lower bounds.

    Overlapping cycles short-circuit everything else: some vertex deletion
    then drops the cycle-space dimension by two, which is worth an extra
    (k-1)/k on top of the base bound, and no finer cycle structure is
    available.  With disjoint cycles the combined bound comes from the
    peeling decomposition, which reproduces base + pendant slacks + gamma
    slacks whenever the graph decomposes cleanly but never overshoots on
    entangled instances.  Graphs of order below k trivially keep all
    vertices.
    """
    _check_k(k)
    n = g.n
    cs = cycle_structure(g)
    if isinstance(cs, CycleStructure):
        omega = cs.omega
        disjoint = True
    else:
        omega = cs.omega
        disjoint = False
    base = Fraction((k - 1) * (n - omega), k)
    base_ceil = math.ceil(base)

    if not disjoint:
        overlap = Fraction(k - 1, k)
        combined = math.ceil(Fraction((k - 1) * (n - omega + 1), k))
        conservative = max(base_ceil, combined)
        if n < k:
            combined = conservative = n
        return BoundReport(
            k=k,
            n=n,
            omega=omega,
            base=base,
            base_ceil=base_ceil,
            cycles_disjoint=False,
            overlap_slack=overlap,
            pendant_slacks=(),
            gamma_slacks=(),
            combined=combined,
            conservative=conservative,
        )

    pendant_items = tuple(
        (len(cs.cycles[i]), pendant_slack(len(cs.cycles[i]), k))
        for i in cs.pendant_cycles
    )
    gamma_items = []
    for piece in components(cs.gamma).members():
        size = len(piece)
        r = size % k
        plus_one = False
        if r == 0 and size > 0:
            tree, _ = induced_subgraph(cs.gamma, piece)
            plus_one = not isinstance(r_membership(tree, k), BlockDecomposition)
        gamma_items.append(
            GammaComponentSlack(
                size=size, remainder=r, slack=Fraction(r, k), plus_one=plus_one
            )
        )

    combined = _sound_combined(g, k)
    pendant_source = math.ceil(base + sum((s for _, s in pendant_items), Fraction(0)))
    gamma_source = sum(
        (gs.size - gs.size // k) + (1 if gs.plus_one else 0) for gs in gamma_items
    )
    conservative = max(base_ceil, pendant_source, gamma_source)
    if n < k:
        combined = conservative = n
    return BoundReport(
        k=k,
        n=n,
        omega=omega,
        base=base,
        base_ceil=base_ceil,
        cycles_disjoint=True,
        overlap_slack=Fraction(0),
        pendant_slacks=pendant_items,
        gamma_slacks=tuple(gamma_items),
        combined=combined,
        conservative=conservative,
    )
