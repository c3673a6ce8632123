"""Command-line interface.

Results go to stdout, diagnostics and traces to stderr. Exit codes:
0 success / YES, 1 NO (``solve``) or a failed check (``verify``), 2 usage
error, 3 input error, 4 instance too large for an exhaustive routine.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass

from .errors import DomainError, ParseError, ScaleError
from .generate import gnp_random_graph
from .graph import FORMATS, parse_graph, serialize_graph
from .kernel import FAIL, compute_ab, format_result, verify_theorem
from .solver import fpt_solve, splex_max

log = logging.getLogger("bddkernel")

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INPUT, EXIT_SCALE = 0, 1, 2, 3, 4
COMMANDS = ("kernelize", "solve", "splex", "verify", "gen")


@dataclass
class RunConfig:
    command: str
    d: int = 0
    k: int | None = None
    s: int | None = None
    format: str = "edge-list"
    trace: bool = False
    seed: int | None = None
    n: int | None = None
    p: float | None = None
    input_path: str | None = "-"
    inline: str | None = None
    limit: int = 16
    time_limit: float | None = None

    def validate(self):
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise DomainError(f"unknown format {self.format!r}")
        if self.d < 0:
            raise DomainError("--d must be >= 0")
        if self.command == "solve" and self.k is None:
            raise DomainError("solve needs --k")
        if self.k is not None and self.k < 0:
            raise DomainError("--k must be >= 0")
        if self.command == "splex" and self.s is None:
            raise DomainError("splex needs --s")
        if self.s is not None and self.s < 1:
            raise DomainError("--s must be >= 1")
        if self.command == "gen" and (self.n is None or self.p is None):
            raise DomainError("gen needs --n and --p")


def _ids(vs):
    return " ".join(str(v) for v in sorted(vs))


def run(config: RunConfig, text: str | None = None) -> tuple[int, str]:
    """Execute one command on graph ``text``; return ``(exit_code, stdout_text)``."""
    try:
        config.validate()
    except DomainError as exc:
        log.error("%s", exc)
        return EXIT_USAGE, ""

    if config.command == "gen":
        try:
            g = gnp_random_graph(config.n, config.p, config.seed or 0)
        except DomainError as exc:
            log.error("%s", exc)
            return EXIT_USAGE, ""
        return EXIT_OK, serialize_graph(g, config.format)

    try:
        g = parse_graph(text or "", config.format)
    except ParseError as exc:
        log.error("input error: %s", exc)
        return EXIT_INPUT, ""

    d = config.d
    try:
        if config.command == "kernelize":
            res = compute_ab(g, d, keep_history=config.trace)
            _emit_trace(res)
            return EXIT_OK, format_result(g, res)

        if config.command == "solve":
            out = fpt_solve(g, d, config.k)
            lines = ["YES" if out.feasible else "NO"]
            if out.feasible:
                lines.append(f"solution: {_ids(out.solution)}".rstrip())
            lines.append(f"nodes: {out.nodes_explored}")
            return (EXIT_OK if out.feasible else EXIT_NO), "\n".join(lines) + "\n"

        if config.command == "splex":
            best = splex_max(g, config.s)
            return EXIT_OK, f"splex: {_ids(best)}".rstrip() + f"\nsize: {len(best)}\n"

        if config.command == "verify":
            res = compute_ab(g, d, keep_history=config.trace)
            _emit_trace(res)
            report = verify_theorem(g, d, res, limit=config.limit, time_limit=config.time_limit)
            body = "\n".join(report.lines()) + "\n"
            statuses = set(report.properties.values())
            if FAIL in statuses:
                return EXIT_NO, body
            if not report.ok:
                return EXIT_SCALE, body
            return EXIT_OK, body
    except ScaleError as exc:
        log.error("refused: %s", exc)
        return EXIT_SCALE, ""
    raise AssertionError(config.command)


def _emit_trace(res):
    for k, rec in enumerate(res.history):
        for line in rec.trace.summary_lines():
            log.info("call %d %s", k, line)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bddkernel", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input", nargs="?", default="-",
                        help="graph file, '-' for stdin (ignored by gen)")
    parser.add_argument("--graph", dest="inline", help="graph text given inline instead of a file")
    parser.add_argument("--d", type=int, default=0, help="degree bound")
    parser.add_argument("--k", type=int, help="solution size budget (solve)")
    parser.add_argument("--s", type=int, help="s-plex parameter (splex)")
    parser.add_argument("--format", choices=FORMATS, default="edge-list")
    parser.add_argument("--trace", action="store_true", help="per-round trace on stderr")
    parser.add_argument("--seed", type=int, default=0, help="generator seed (gen)")
    parser.add_argument("--n", type=int, help="vertex count (gen)")
    parser.add_argument("--p", type=float, help="edge probability (gen)")
    parser.add_argument("--limit", type=int, default=16, help="oracle size limit (verify)")
    parser.add_argument("--time-limit", type=float, help="oracle time limit in seconds (verify)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.trace else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    config = RunConfig(command=args.command, d=args.d, k=args.k, s=args.s, format=args.format,
                       trace=args.trace, seed=args.seed, n=args.n, p=args.p,
                       input_path=args.input, inline=args.inline, limit=args.limit,
                       time_limit=args.time_limit)
    text = None
    if config.command != "gen":
        if config.inline is not None:
            text = config.inline.replace("\\n", "\n").replace("/", "\n")
        elif config.input_path == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(config.input_path, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                log.error("cannot read %s: %s", config.input_path, exc)
                return EXIT_INPUT
    code, out = run(config, text)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
