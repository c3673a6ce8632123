"""Reproducible Erdos-Renyi graphs.

The generator is SplitMix64 with its published constants, so a given seed
produces the same graph on every platform and Python version (``random``
makes no such promise across versions).
"""

from __future__ import annotations

import math

from .errors import DomainError
from .graph import Graph

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in ``[0, 1)`` with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def gnp_random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """``G(n, p)`` on vertex ids ``1..n``.

    Uses geometric skipping (Batagelj and Brandes), so the cost is
    ``O(n + m)`` rather than ``O(n^2)``.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise DomainError("p must lie in [0, 1]")
    vertices = range(1, n + 1)
    if p == 0.0 or n < 2:
        return Graph(vertices)
    if p == 1.0:
        return Graph(vertices, ((u, v) for u in vertices for v in range(u + 1, n + 1)))
    rng = SplitMix64(seed)
    log_q = math.log1p(-p)
    edges = []
    v, w = 1, -1
    while v < n:
        w += 1 + int(math.log1p(-rng.random()) / log_q)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            edges.append((v + 1, w + 1))
    return Graph(vertices, edges)
