"""Extraction of an extremal pair ``(C, D)`` from a witness/residual split.

Given a witness ``X`` (a bdd-d-set) and its residual ``Y``, :func:`find_extremal`
returns ``C`` subset of ``X`` and ``D`` subset of ``Y`` such that

* C1: every vertex of ``N[D] \\ C`` has degree at most ``d`` in ``G - C``;
* C2: ``C`` is a minimum bdd-d-set of ``G[C | D]``.

Such a pair can be moved into the solution (``C``) and discarded (``D``)
without changing the optimum. Each round of the outer loop is recorded in an
:class:`ExtremalTrace` so the per-round guarantees can be checked afterwards.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

from .errors import DomainError
from .graph import Graph, is_bdd_set
from .packing import BipartiteAux, StarPacking, build_auxiliary, star_packing_max_edges

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtremalPair:
    forced: frozenset
    discardable: frozenset

    def __iter__(self):
        return iter((self.forced, self.discardable))


@dataclass(frozen=True)
class ExtremalRound:
    forbidden_x: frozenset
    forbidden_y: frozenset
    packing: StarPacking
    fixpoint_steps: int
    forced: frozenset
    discardable: frozenset


@dataclass
class ExtremalTrace:
    """Per-round record of :func:`find_extremal`.

    ``exhausted_fy`` is set only when every witness vertex became forbidden and
    the procedure fell through to its final return.
    """

    witness: frozenset
    residual: frozenset
    d: int
    rounds: list[ExtremalRound] = field(default_factory=list)
    exhausted_fy: frozenset | None = None

    def summary_lines(self) -> list[str]:
        out = []
        for k, r in enumerate(self.rounds):
            out.append(f"round {k}: |FX|={len(r.forbidden_x)} |FY|={len(r.forbidden_y)} "
                       f"packing_edges={r.packing.edge_count} fixpoint_steps={r.fixpoint_steps}")
        if self.exhausted_fy is not None:
            out.append(f"exhausted: |FX|={len(self.witness)} |FY|={len(self.exhausted_fy)}")
        return out


def forbidden_residual(g: Graph, j: BipartiteAux, fx: Iterable[int]) -> frozenset:
    """``N_G[N_J(FX)] \\ X`` where ``X`` is the left side of ``j``."""
    fx = frozenset(fx)
    if not fx <= j.left:
        raise DomainError("forbidden witness vertices must lie in the witness")
    return frozenset(g.closed_neighborhood(j.neighborhood(fx)) - j.left)


def cd_fixpoint(j: BipartiteAux, p: StarPacking, d0: Iterable[int]) -> tuple[ExtremalPair, int]:
    """Alternate ``C <- N_J(D)`` and ``D <- D | N_P(C)`` until ``D`` is stable.

    Returns the pair and the number of iterations. Only the vertices added in
    the previous step are expanded, which gives the same sets as recomputing
    the full neighborhoods.
    """
    d_set = set(d0)
    c_set: set[int] = set()
    frontier = sorted(d_set)
    steps = 0
    while True:
        steps += 1
        new_c = sorted(j.neighborhood(frontier) - c_set)
        c_set.update(new_c)
        new_d = sorted(p.neighborhood(new_c) - d_set)
        if not new_d:
            break
        d_set.update(new_d)
        frontier = new_d
    return ExtremalPair(frozenset(c_set), frozenset(d_set)), steps


def find_extremal(g: Graph, x: Iterable[int], y: Iterable[int], d: int,
                  *, check: bool = True) -> tuple[ExtremalPair, ExtremalTrace]:
    """Compute ``(C, D)`` satisfying C1 and C2 for witness ``x`` and residual ``y``.

    ``check`` verifies that ``x`` is a bdd-d-set; callers that built ``x``
    with :func:`~bddkernel.packing.compute_witness` may skip it.
    """
    if d < 0:
        raise DomainError("d must be non-negative")
    j = build_auxiliary(g, x, y)
    x, y = j.left, j.right
    if check and not is_bdd_set(g, x, d):
        raise DomainError("witness is not a bdd-d-set of the graph")
    trace = ExtremalTrace(x, y, d)

    fx = frozenset()
    while fx != x:
        fy = forbidden_residual(g, j, fx)
        centers = x - fx
        packing = star_packing_max_edges(j.restrict(centers, y - fy), d)
        d0 = y - fy - packing.vertices
        pair, steps = cd_fixpoint(j, packing, d0)
        trace.rounds.append(ExtremalRound(fx, fy, packing, steps, pair.forced, pair.discardable))
        log.debug("round %d: |FX|=%d |FY|=%d |P|=%d steps=%d |C|=%d |D|=%d",
                  len(trace.rounds) - 1, len(fx), len(fy), packing.edge_count, steps,
                  len(pair.forced), len(pair.discardable))
        if pair.forced == centers:
            return pair, trace
        fx = x - pair.forced

    fy = forbidden_residual(g, j, x)
    trace.exhausted_fy = fy
    return ExtremalPair(frozenset(), y - fy), trace


# -- certificates --------------------------------------------------------------

def satisfies_c1(g: Graph, c: frozenset, d_set: frozenset, d: int) -> bool:
    """Every vertex of ``N[D] \\ C`` has degree at most ``d`` in ``G - C``."""
    for v in g.closed_neighborhood(d_set) - c:
        if len(g.adjacency(v) - c) > d:
            return False
    return True


def c2_certificate(g: Graph, c: frozenset, d_set: frozenset, packing: StarPacking, d: int) -> bool:
    """Cheap proof of C2: ``|C|`` disjoint ``(d+1)``-stars inside ``G[C | D]``
    give the lower bound, and ``C`` being a bdd-d-set there gives the upper."""
    inside = c | d_set
    for v in c:
        star = packing.star_at(v)
        if star is None or len(star.leaves) != d + 1 or not set(star.leaves) <= d_set:
            return False
    sub = g.induced(inside)
    return is_bdd_set(sub, c, d)


def trace_violations(g: Graph, pair: ExtremalPair, trace: ExtremalTrace) -> list[str]:
    """Check every per-round guarantee of :func:`find_extremal`; return violations.

    Checked: strict growth of the forbidden witness set between rounds,
    star structure of ``C`` and ``D`` after each fixpoint, absence of edges
    between ``D`` and ``N_J(FX)``, the ``(d+1)^2`` bound on ``|FY|``, the
    ``(d+1)^2`` bound on ``|Y \\ D|`` for the returned pair, and C1/C2.
    """
    out = []
    x, y, d = trace.witness, trace.residual, trace.d
    bound = (d + 1) ** 2
    j = build_auxiliary(g, x, y)
    prev = None
    for k, r in enumerate(trace.rounds):
        if prev is not None and not prev < r.forbidden_x:
            out.append(f"round {k}: forbidden witness set did not strictly grow")
        prev = r.forbidden_x
        if r.forbidden_y != forbidden_residual(g, j, r.forbidden_x):
            out.append(f"round {k}: FY is not N_G[N_J(FX)] minus X")
        if len(r.forbidden_y) > bound * len(r.forbidden_x):
            out.append(f"round {k}: |FY|={len(r.forbidden_y)} exceeds (d+1)^2*|FX|")
        for v in r.forced:
            star = r.packing.star_at(v)
            if star is None or len(star.leaves) != d + 1:
                out.append(f"round {k}: C-vertex {v} is not the center of a (d+1)-star")
            elif not set(star.leaves) <= r.discardable:
                out.append(f"round {k}: star at {v} has leaves outside D")
        near = j.neighborhood(r.forbidden_x)
        if any(g.adjacency(v) & near for v in r.discardable):
            out.append(f"round {k}: edge between D and N_J(FX)")
        if r.forced & r.discardable:
            out.append(f"round {k}: C and D intersect")
        if not r.forced <= x or not r.discardable <= y:
            out.append(f"round {k}: C or D on the wrong side")
    if trace.exhausted_fy is not None:
        if len(trace.exhausted_fy) > bound * len(x):
            out.append("exhausted: |FY| exceeds (d+1)^2*|X|")
        if pair.forced:
            out.append("exhausted return with nonempty C")
    c, d_set = pair.forced, pair.discardable
    if len(y - d_set) > bound * len(x - c):
        out.append(f"|Y\\D|={len(y - d_set)} exceeds (d+1)^2*|X\\C|={bound * len(x - c)}")
    if not satisfies_c1(g, c, d_set, d):
        out.append("C1 violated")
    final_packing = trace.rounds[-1].packing if trace.rounds and trace.exhausted_fy is None else StarPacking()
    if not c2_certificate(g, c, d_set, final_packing, d):
        out.append("C2 certificate failed")
    return out
