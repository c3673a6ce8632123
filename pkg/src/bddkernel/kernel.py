"""Kernelization for Bounded-Degree Deletion.

:func:`compute_ab` repeatedly extracts extremal pairs until the residual of a
fresh witness is at most ``(d+1)^2`` times the witness. The returned sets
``A`` (forced into some optimum) and ``B`` (safe to discard) leave a reduced
graph with at most ``kernel_constant(d) * opt`` vertices.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

from .errors import DomainError, InternalError, ParseError, ScaleError
from .extremal import ExtremalPair, ExtremalTrace, find_extremal, satisfies_c1, trace_violations
from .graph import Graph, is_bdd_set, parse_graph, serialize_graph
from .packing import WitnessPartition, compute_witness

log = logging.getLogger(__name__)


def kernel_constant(d: int) -> int:
    """Per-solution-vertex bound on the reduced instance: ``d^3 + 4d^2 + 6d + 4``."""
    if d < 0:
        raise DomainError("d must be non-negative")
    return d ** 3 + 4 * d ** 2 + 6 * d + 4


@dataclass(frozen=True)
class RoundRecord:
    """One find-extremal call made by :func:`compute_ab` (kept only on request)."""

    graph: Graph
    pair: ExtremalPair
    trace: ExtremalTrace


@dataclass
class KernelResult:
    forced: frozenset
    discardable: frozenset
    reduced: Graph
    constant: int
    d: int
    rounds: int = 0
    witness: WitnessPartition | None = None
    history: list[RoundRecord] = field(default_factory=list)

    @property
    def A(self) -> frozenset:
        return self.forced

    @property
    def B(self) -> frozenset:
        return self.discardable

    def summary(self, g: Graph) -> str:
        """``n m d |A| |B| n_reduced constant rounds`` for input graph ``g``."""
        return (f"{g.n} {g.m} {self.d} {len(self.forced)} {len(self.discardable)} "
                f"{self.reduced.n} {self.constant} {self.rounds}")


def compute_ab(g: Graph, d: int, *, keep_history: bool = False,
               check_invariants: bool = False) -> KernelResult:
    """Compute the forced set ``A`` and discardable set ``B`` of ``g``.

    With ``check_invariants`` the cheap per-round guarantees (disjointness,
    C1 by degree counting, progress) are asserted and raise
    :class:`InternalError` on failure. ``keep_history`` stores each round's
    graph, pair and trace in :attr:`KernelResult.history`.
    """
    const = kernel_constant(d)
    bound = (d + 1) ** 2
    forced: set[int] = set()
    discardable: set[int] = set()
    cur = g
    rounds = 0
    history = []
    while True:
        w = compute_witness(cur, d)
        if len(w.residual) <= bound * len(w.witness):
            break
        pair, trace = find_extremal(cur, w.witness, w.residual, d, check=False)
        c, dd = pair.forced, pair.discardable
        if not c | dd:
            raise InternalError(f"find_extremal made no progress on a graph with n={cur.n} "
                                f"(|X|={len(w.witness)}, |Y|={len(w.residual)})")
        if check_invariants:
            if c & dd:
                raise InternalError("extremal pair is not disjoint")
            if not satisfies_c1(cur, c, dd, d):
                raise InternalError("extremal pair violates C1")
        if keep_history:
            history.append(RoundRecord(cur, pair, trace))
        log.debug("compute_ab round %d: |X|=%d |Y|=%d |C|=%d |D|=%d",
                  rounds, len(w.witness), len(w.residual), len(c), len(dd))
        forced |= c
        discardable |= dd
        cur = cur.remove_vertices(c | dd)
        rounds += 1
    if check_invariants and forced & discardable:
        raise InternalError("A and B intersect")
    return KernelResult(frozenset(forced), frozenset(discardable), cur, const, d,
                        rounds, w, history)


# -- verification ---------------------------------------------------------------

PASS, FAIL, UNVERIFIED = "pass", "fail", "unverified"


@dataclass
class VerificationReport:
    properties: dict[str, str]
    details: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v == PASS for v in self.properties.values())

    def lines(self) -> list[str]:
        out = []
        for name, status in self.properties.items():
            extra = self.details.get(name)
            out.append(f"{name}: {status}" + (f" ({extra})" if extra else ""))
        return out


def verify_theorem(g: Graph, d: int, result: KernelResult, *, limit: int = 16,
                   time_limit: float | None = None, exhaustive_p1: int = 12) -> VerificationReport:
    """Check the three kernel guarantees of ``result`` against brute force.

    * ``P1``: ``S' | A`` is a bdd-d-set of ``g`` for every bdd-d-set ``S'`` of
      the reduced graph when it has at most ``exhaustive_p1`` vertices, and
      for a minimum one otherwise.
    * ``P2``: ``opt(g) == |A| + opt(reduced)``.
    * ``P3``: ``n_reduced <= kernel_constant(d) * opt(reduced)`` when the
      reduced graph is nonempty.

    If the oracle refuses (too large) or runs past ``time_limit`` seconds,
    the affected properties are reported as ``unverified``.
    """
    from .solver import all_bdd_sets, brute_force_min_bdd

    props = {"P1": UNVERIFIED, "P2": UNVERIFIED, "P3": UNVERIFIED}
    details: dict[str, str] = {}
    deadline = None if time_limit is None else time.monotonic() + time_limit
    a = result.forced
    red = result.reduced
    try:
        opt_red = brute_force_min_bdd(red, d, limit=limit, deadline=deadline)
    except ScaleError as exc:
        details["P1"] = details["P3"] = str(exc)
        opt_red = None
    if opt_red is not None:
        if red.n <= exhaustive_p1:
            bad = next((s for s in all_bdd_sets(red, d) if not is_bdd_set(g, s | a, d)), None)
        else:
            bad = None if is_bdd_set(g, opt_red | a, d) else opt_red
        props["P1"] = PASS if bad is None else FAIL
        if bad is not None:
            details["P1"] = f"S'={sorted(bad)}"
        bound = result.constant * len(opt_red)
        props["P3"] = PASS if red.n == 0 or red.n <= bound else FAIL
        details["P3"] = f"n_reduced={red.n} bound={bound}"
        try:
            opt_g = brute_force_min_bdd(g, d, limit=limit, deadline=deadline)
        except ScaleError as exc:
            details["P2"] = str(exc)
        else:
            ok = len(opt_g) == len(a) + len(opt_red)
            props["P2"] = PASS if ok else FAIL
            details["P2"] = f"opt={len(opt_g)} |A|={len(a)} opt_reduced={len(opt_red)}"
    else:
        details["P2"] = details["P1"]
    return VerificationReport(props, details)


def lemma_violations(result: KernelResult) -> list[str]:
    """Run :func:`~bddkernel.extremal.trace_violations` over a kept history."""
    out = []
    for k, rec in enumerate(result.history):
        out.extend(f"call {k}: {msg}" for msg in trace_violations(rec.graph, rec.pair, rec.trace))
    return out


# -- text form --------------------------------------------------------------------

def _ids(vs):
    return " ".join(str(v) for v in sorted(vs))


def format_result(g: Graph, result: KernelResult) -> str:
    """Serialize as the summary line followed by ``A:``, ``B:``, ``reduced:``,
    ``constant:`` and ``rounds:`` sections. The reduced graph is an edge list."""
    lines = [result.summary(g), f"A: {_ids(result.forced)}".rstrip(),
             f"B: {_ids(result.discardable)}".rstrip(), "reduced:"]
    lines.extend(serialize_graph(result.reduced, "edge-list").splitlines())
    lines.append(f"constant: {result.constant}")
    lines.append(f"rounds: {result.rounds}")
    return "\n".join(lines) + "\n"


def parse_result(text: str) -> KernelResult:
    """Inverse of :func:`format_result` (the summary line is optional)."""
    sections: dict[str, list[str]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        head, sep, rest = line.partition(":")
        if sep and head in ("A", "B", "reduced", "constant", "rounds"):
            current = head
            if head in sections:
                raise ParseError(f"duplicate section {head!r}", lineno)
            sections[head] = [rest.strip()] if rest.strip() else []
        elif current == "reduced":
            sections[current].append(line)
        elif current is None:
            continue
        elif line:
            raise ParseError(f"unexpected line {line!r}", lineno)
    missing = {"A", "B", "reduced", "constant", "rounds"} - sections.keys()
    if missing:
        raise ParseError(f"missing sections: {sorted(missing)}")
    try:
        a = frozenset(int(t) for t in " ".join(sections["A"]).split())
        b = frozenset(int(t) for t in " ".join(sections["B"]).split())
        const = int(sections["constant"][0])
        rounds = int(sections["rounds"][0])
    except (ValueError, IndexError) as exc:
        raise ParseError(f"bad numeric field: {exc}") from None
    reduced = parse_graph("\n".join(sections["reduced"]), "edge-list")
    d = next((dd for dd in range(const + 1) if kernel_constant(dd) == const), None)
    if d is None:
        raise ParseError(f"constant {const} is not d^3+4d^2+6d+4 for any d")
    return KernelResult(a, b, reduced, const, d, rounds)

