"""Immutable simple undirected graphs, plus edge-list and DIMACS I/O.

Vertex ids are non-negative integers and are never renumbered: every
derived graph (induced subgraph, complement) keeps the ids of its parent.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import DomainError, ParseError, SelfLoopError, VertexRangeError

FORMATS = ("edge-list", "dimacs")


class Graph:
    """A simple undirected graph with integer vertex ids.

    Instances are immutable. Neighbor tuples returned by :meth:`neighbors`
    are sorted ascending so that every algorithm iterating over them is
    deterministic.
    """

    __slots__ = ("_vertices", "_adj", "_nbrs", "_m")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            _check_id(v)
            adj.setdefault(v, set())
        for u, v in edges:
            if u == v:
                raise SelfLoopError(f"self-loop on vertex {u}")
            _check_id(u)
            _check_id(v)
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._init_from_adj({v: frozenset(ns) for v, ns in adj.items()})

    @classmethod
    def _from_adj(cls, adj: Mapping[int, frozenset]) -> Graph:
        g = cls.__new__(cls)
        g._init_from_adj(adj)
        return g

    def _init_from_adj(self, adj):
        self._vertices = tuple(sorted(adj))
        self._adj = {v: adj[v] for v in self._vertices}
        self._nbrs = {v: tuple(sorted(ns)) for v, ns in self._adj.items()}
        self._m = sum(len(ns) for ns in self._adj.values()) // 2

    # -- queries ---------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._m

    @property
    def edge_count(self) -> int:
        return self._m

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        return hash((self._vertices, tuple(self.edges())))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def adjacency(self, v: int) -> frozenset:
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in ascending order."""
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(min, max)`` pairs, sorted."""
        return [(u, v) for u in self._vertices for v in self._nbrs[u] if u < v]

    def closed_neighborhood(self, vs: Iterable[int]) -> set[int]:
        out = set()
        for v in vs:
            out.add(v)
            out.update(self._adj[v])
        return out

    def check_subset(self, vs: Iterable[int], what: str = "vertex set") -> frozenset:
        s = frozenset(vs)
        missing = s.difference(self._adj)
        if missing:
            raise DomainError(f"{what} contains vertices not in the graph: {sorted(missing)[:10]}")
        return s

    # -- derived graphs --------------------------------------------------

    def induced(self, keep: Iterable[int]) -> Graph:
        keep = self.check_subset(keep)
        return Graph._from_adj({v: self._adj[v] & keep for v in keep})

    def remove_vertices(self, s: Iterable[int]) -> Graph:
        """Return ``G - S``, the subgraph induced by ``V \\ S``."""
        s = self.check_subset(s)
        if not s:
            return self
        return Graph._from_adj({v: ns - s for v, ns in self._adj.items() if v not in s})

    def complement(self) -> Graph:
        everything = frozenset(self._vertices)
        return Graph._from_adj({v: everything - ns - {v} for v, ns in self._adj.items()})


def _check_id(v):
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise DomainError(f"vertex ids must be non-negative integers, got {v!r}")


def remove_vertices(g: Graph, s: Iterable[int]) -> Graph:
    return g.remove_vertices(s)


def complement(g: Graph) -> Graph:
    return g.complement()


def degrees_after_removal(g: Graph, s: frozenset) -> dict[int, int]:
    """Degree of every vertex of ``G - S`` without building the subgraph."""
    return {v: len(g.adjacency(v) - s) for v in g.vertices if v not in s}


def is_bdd_set(g: Graph, s: Iterable[int], d: int) -> bool:
    """True iff every vertex of ``G - S`` has degree at most ``d`` there."""
    if d < 0:
        raise DomainError("d must be non-negative")
    s = g.check_subset(s)
    for v in g.vertices:
        if v in s:
            continue
        ns = g.adjacency(v)
        if len(ns) > d and len(ns - s) > d:
            return False
    return True


def find_star(g: Graph, size: int, exclude: frozenset = frozenset()):
    """Return ``(center, leaves)`` of some ``size``-star in ``G - exclude``, or ``None``.

    The center is the lowest-id vertex of degree >= ``size`` and the leaves are
    its ``size`` lowest-id neighbors.
    """
    for v in g.vertices:
        if v in exclude:
            continue
        if g.degree(v) < size:
            continue
        leaves = [w for w in g.neighbors(v) if w not in exclude]
        if len(leaves) >= size:
            return v, tuple(leaves[:size])
    return None


# -- text formats ------------------------------------------------------------

def _int_token(tok, lineno):
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative vertex id {value}", lineno)
    return value


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    """Parse ``text`` in ``edge-list`` or ``dimacs`` format.

    Edge-list: one ``u v`` pair per line, ``#`` starts a comment. A line with a
    single id declares an isolated vertex. DIMACS: ``c`` comment lines, one
    ``p edge n m`` header, ``e u v`` lines with ids in ``1..n``; all ``n``
    vertices exist even when no edge mentions them. Duplicate edges collapse.
    """
    if fmt == "edge-list":
        return _parse_edge_list(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    raise DomainError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _parse_edge_list(text):
    vertices, edges = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        if len(toks) == 1:
            vertices.append(_int_token(toks[0], lineno))
        elif len(toks) == 2:
            u, v = (_int_token(t, lineno) for t in toks)
            if u == v:
                raise SelfLoopError(f"self-loop on vertex {u}", lineno)
            edges.append((u, v))
        else:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", lineno)
    return Graph(vertices, edges)


def _parse_dimacs(text):
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        kind = toks[0]
        if kind == "p":
            if n is not None:
                raise ParseError("duplicate 'p' header", lineno)
            if len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise ParseError(f"expected 'p edge n m', got {raw.strip()!r}", lineno)
            n = _int_token(toks[2], lineno)
            _int_token(toks[3], lineno)
        elif kind == "e":
            if n is None:
                raise ParseError("edge line before 'p' header", lineno)
            if len(toks) != 3:
                raise ParseError(f"expected 'e u v', got {raw.strip()!r}", lineno)
            u, v = (_int_token(t, lineno) for t in toks[1:])
            for x in (u, v):
                if not 1 <= x <= n:
                    raise VertexRangeError(f"vertex {x} outside 1..{n}", lineno)
            if u == v:
                raise SelfLoopError(f"self-loop on vertex {u}", lineno)
            edges.append((u, v))
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge n m' header")
    return Graph(range(1, n + 1), edges)


def serialize_graph(g: Graph, fmt: str = "edge-list") -> str:
    """Inverse of :func:`parse_graph` on normalized graphs.

    Edges are written sorted by ``(min endpoint, max endpoint)``. The edge-list
    writer appends isolated vertices as single-id lines; the DIMACS writer
    requires the vertex ids to be exactly ``1..n``.
    """
    lines = []
    if fmt == "edge-list":
        lines.extend(f"{u} {v}" for u, v in g.edges())
        lines.extend(str(v) for v in g.vertices if g.degree(v) == 0)
    elif fmt == "dimacs":
        if g.vertices != tuple(range(1, g.n + 1)):
            raise DomainError("DIMACS output needs vertex ids 1..n")
        lines.append(f"p edge {g.n} {g.m}")
        lines.extend(f"e {u} {v}" for u, v in g.edges())
    else:
        raise DomainError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return "\n".join(lines) + ("\n" if lines else "")
