"""Exact solvers: exhaustive oracle, kernelize-and-branch search, s-plex duality."""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DomainError, OracleTimeout, ScaleError
from .graph import Graph, find_star
from .kernel import compute_ab, kernel_constant

ORACLE_LIMIT = 16
ORACLE_HARD_LIMIT = 24
SPLEX_LIMIT = 40


def _bitmasks(g: Graph):
    index = {v: i for i, v in enumerate(g.vertices)}
    masks = []
    for v in g.vertices:
        m = 0
        for w in g.adjacency(v):
            m |= 1 << index[w]
        masks.append(m)
    return masks


def _check_scale(g, limit):
    if g.n > ORACLE_HARD_LIMIT:
        raise ScaleError(f"exhaustive search refused: n={g.n} exceeds hard limit {ORACLE_HARD_LIMIT}")
    if g.n > limit:
        raise ScaleError(f"exhaustive search refused: n={g.n} exceeds limit {limit}")


def brute_force_min_bdd(g: Graph, d: int, *, limit: int = ORACLE_LIMIT,
                        deadline: float | None = None) -> frozenset:
    """Minimum bdd-d-set by exhaustive search.

    Candidates are tried by increasing size, and within one size in
    lexicographic order of vertex ids, so the returned optimum is the
    lexicographically first one. ``deadline`` is a :func:`time.monotonic`
    timestamp; passing it raises :class:`OracleTimeout`.
    """
    if d < 0:
        raise DomainError("d must be non-negative")
    _check_scale(g, limit)
    n = g.n
    masks = _bitmasks(g)
    heavy = [i for i in range(n) if masks[i].bit_count() > d]
    full = (1 << n) - 1
    verts = g.vertices
    counter = 0
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            counter += 1
            if deadline is not None and counter & 0xFFF == 0 and time.monotonic() > deadline:
                raise OracleTimeout("exhaustive search ran past its deadline")
            s = 0
            for i in combo:
                s |= 1 << i
            rest = full & ~s
            if all(s >> i & 1 or (masks[i] & rest).bit_count() <= d for i in heavy):
                return frozenset(verts[i] for i in combo)
    raise AssertionError("unreachable: V itself is a bdd-d-set")


def all_bdd_sets(g: Graph, d: int, *, limit: int = ORACLE_LIMIT) -> Iterator[frozenset]:
    """Yield every bdd-d-set of ``g`` (``2^n`` candidates)."""
    _check_scale(g, limit)
    n = g.n
    masks = _bitmasks(g)
    heavy = [i for i in range(n) if masks[i].bit_count() > d]
    full = (1 << n) - 1
    verts = g.vertices
    for s in range(1 << n):
        rest = full & ~s
        if all(s >> i & 1 or (masks[i] & rest).bit_count() <= d for i in heavy):
            yield frozenset(verts[i] for i in range(n) if s >> i & 1)


@dataclass(frozen=True)
class SolveOutcome:
    feasible: bool
    solution: frozenset | None
    nodes_explored: int


def fpt_solve(g: Graph, d: int, k: int, *, kernelize: bool = True) -> SolveOutcome:
    """Decide whether ``g`` has a bdd-d-set of size at most ``k``.

    Every node of the search tree is kernelized first (unless ``kernelize``
    is false). A node answers NO when its forced set exceeds the budget, when
    the reduced graph is larger than ``kernel_constant(d) * budget``, or when
    a greedy packing of ``(d+1)``-stars has more stars than the budget.
    Otherwise it branches on the ``d+2`` vertices of some ``(d+1)``-star,
    center first.
    """
    if d < 0:
        raise DomainError("d must be non-negative")
    if k < 0:
        raise DomainError("k must be non-negative")
    const = kernel_constant(d)
    nodes = 0

    def search(cur: Graph, budget: int, chosen: frozenset):
        nonlocal nodes
        nodes += 1
        if kernelize:
            res = compute_ab(cur, d)
            if len(res.forced) > budget:
                return None
            budget -= len(res.forced)
            chosen = chosen | res.forced
            cur = res.reduced
            if cur.n > const * budget:
                return None
            if len(res.witness.packing) > budget:
                return None
        star = find_star(cur, d + 1)
        if star is None:
            return chosen
        if budget == 0:
            return None
        center, leaves = star
        for v in (center,) + leaves:
            found = search(cur.remove_vertices((v,)), budget - 1, chosen | {v})
            if found is not None:
                return found
        return None

    solution = search(g, k, frozenset())
    return SolveOutcome(solution is not None, solution, nodes)


def is_splex(g: Graph, members: Iterable[int], s: int) -> bool:
    """Every vertex of ``G[U]`` has degree at least ``|U| - s`` there."""
    u = g.check_subset(members)
    need = len(u) - s
    return all(len(g.adjacency(v) & u) >= need for v in u)


def splex_max(g: Graph, s: int, *, limit: int = SPLEX_LIMIT, kernelize: bool = True) -> frozenset:
    """Maximum s-plex of ``g``.

    A vertex set is an s-plex of ``g`` exactly when its complement in ``V``
    is a bdd-(s-1)-set of the complement graph, so the smallest such
    deletion set is found by trying budgets ``0, 1, 2, ...`` with
    :func:`fpt_solve`.
    """
    if s < 1:
        raise DomainError("s must be at least 1")
    if g.n > limit:
        raise ScaleError(f"s-plex search refused: n={g.n} exceeds limit {limit}")
    comp = g.complement()
    for budget in range(g.n + 1):
        out = fpt_solve(comp, s - 1, budget, kernelize=kernelize)
        if out.feasible:
            return frozenset(g.vertices) - out.solution
    raise AssertionError("unreachable: deleting every vertex always works")
