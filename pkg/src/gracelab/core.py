"""Signed-graph data model shared by every other module.

Vertices are dense integer ids 0..p-1 so labelings can live in flat arrays.
Each edge carries a '+' or '-' sign; loops and parallel edges are rejected.
Graphs are immutable after construction and safe to share across threads.
An unsigned graph is just an all-positive signed graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Sequence


class InvalidParameter(ValueError):
    """A structurally invalid graph, labeling, or operation parameter."""


class ModeMismatch(ValueError):
    """An operation was applied to a graph whose signs it does not allow."""


class LengthMismatch(ValueError):
    """A labeling's length differs from the graph's vertex count."""


class UnknownFixture(KeyError):
    """Requested fixture id is not in the catalog."""


class TooLarge(ValueError):
    """A brute-force enumeration would exceed its hard size limit."""


class Sign(Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    def __str__(self) -> str:
        return self.value


# An injective map vertex id -> nonnegative integer, stored positionally.
VertexLabeling = tuple[int, ...]

Edge = tuple[int, int, Sign]


@dataclass(frozen=True)
class SignedGraph:
    """Simple undirected graph on vertices 0..p-1 with one sign per edge.

    Edges are canonicalized on construction (endpoints ordered u < v, list
    sorted by (u, v)), so equal graphs compare, hash, and serialize equal.
    Isolated vertices are allowed; connectivity is reported, not enforced.
    """

    p: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p < 0:
            raise InvalidParameter(f"vertex count must be a nonnegative integer, got {self.p!r}")
        canon = []
        for edge in self.edges:
            try:
                u, v, sign = edge
            except (TypeError, ValueError):
                raise InvalidParameter(f"edge must be a (u, v, sign) triple, got {edge!r}") from None
            try:
                sign = Sign(sign)
            except ValueError:
                raise InvalidParameter(f"edge sign must be '+' or '-', got {sign!r}") from None
            if not isinstance(u, int) or not isinstance(v, int):
                raise InvalidParameter(f"edge endpoints must be integers, got ({u!r}, {v!r})")
            if u == v:
                raise InvalidParameter(f"loop at vertex {u}")
            if not (0 <= u < self.p and 0 <= v < self.p):
                raise InvalidParameter(f"edge ({u}, {v}) outside vertex range 0..{self.p - 1}")
            if u > v:
                u, v = v, u
            canon.append((u, v, sign))
        canon.sort(key=lambda e: (e[0], e[1]))
        for a, b in zip(canon, canon[1:]):
            if a[:2] == b[:2]:
                raise InvalidParameter(f"parallel edge on pair ({a[0]}, {a[1]})")
        object.__setattr__(self, "edges", tuple(canon))

    @cached_property
    def m(self) -> int:
        """Number of positive edges."""
        return sum(1 for e in self.edges if e[2] is Sign.POSITIVE)

    @cached_property
    def n(self) -> int:
        """Number of negative edges."""
        return len(self.edges) - self.m

    @property
    def q(self) -> int:
        """Total edge count."""
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degree of each vertex, by id, ignoring signs."""
        deg = [0] * self.p
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def is_connected(self) -> bool:
        """Connectivity of the underlying unsigned graph (p <= 1 counts as connected)."""
        if self.p <= 1:
            return True
        adj: list[list[int]] = [[] for _ in range(self.p)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = [False] * self.p
        stack = [0]
        seen[0] = True
        reached = 1
        while stack:
            for w in adj[stack.pop()]:
                if not seen[w]:
                    seen[w] = True
                    reached += 1
                    stack.append(w)
        return reached == self.p

    def positive_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, s in self.edges if s is Sign.POSITIVE)

    def negative_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, s in self.edges if s is Sign.NEGATIVE)

    def underlying(self) -> SignedGraph:
        """The same adjacency with every edge made positive."""
        return SignedGraph(self.p, tuple((u, v, Sign.POSITIVE) for u, v, _ in self.edges))


@dataclass(frozen=True)
class GraphStats:
    p: int
    m: int
    n: int
    q: int
    connected: bool
    degree_sequence: tuple[int, ...]


def structural_stats(graph: SignedGraph) -> GraphStats:
    """Vertex/edge counts, connectivity, and the non-increasing degree sequence."""
    return GraphStats(
        p=graph.p,
        m=graph.m,
        n=graph.n,
        q=graph.q,
        connected=graph.is_connected,
        degree_sequence=tuple(sorted(graph.degrees, reverse=True)),
    )


def to_obj(graph: SignedGraph, labeling: Sequence[int] | None = None) -> dict:
    """Canonical interchange dict; `labeling` key present only when given."""
    obj: dict = {
        "p": graph.p,
        "edges": [{"u": u, "v": v, "sign": s.value} for u, v, s in graph.edges],
    }
    if labeling is not None:
        obj["labeling"] = list(labeling)
    return obj


def to_json(graph: SignedGraph, labeling: Sequence[int] | None = None, *, indent: int | None = 2) -> str:
    """JSON form of to_obj; stable key and edge order, so round trips are byte-identical."""
    return json.dumps(to_obj(graph, labeling), indent=indent)


def from_json(text: str) -> tuple[SignedGraph, VertexLabeling | None]:
    """Parse the canonical JSON form; unknown top-level keys are ignored."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameter(f"input is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InvalidParameter("top-level JSON value must be an object")
    if "p" not in obj:
        raise InvalidParameter("missing required key 'p'")
    p = obj["p"]
    raw_edges = obj.get("edges", [])
    if not isinstance(raw_edges, list):
        raise InvalidParameter("'edges' must be a list")
    edges = []
    for item in raw_edges:
        if not isinstance(item, dict) or not {"u", "v", "sign"} <= item.keys():
            raise InvalidParameter(f"each edge needs keys u, v, sign; got {item!r}")
        edges.append((item["u"], item["v"], item["sign"]))
    graph = SignedGraph(p, tuple(edges))
    labeling = obj.get("labeling")
    if labeling is None:
        return graph, None
    if not isinstance(labeling, list) or not all(isinstance(x, int) for x in labeling):
        raise InvalidParameter("'labeling' must be a list of integers")
    return graph, tuple(labeling)


def to_dot(graph: SignedGraph, labeling: Sequence[int] | None = None, name: str = "G") -> str:
    """DOT export: positive edges solid, negative edges dashed.

    When a labeling is attached each node displays its label value.
    """
    if labeling is not None and len(labeling) != graph.p:
        raise LengthMismatch(f"labeling has {len(labeling)} entries for {graph.p} vertices")
    lines = [f"graph {name} {{"]
    for v in range(graph.p):
        if labeling is not None:
            lines.append(f'  {v} [label="{labeling[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v, s in graph.edges:
        style = " [style=dashed]" if s is Sign.NEGATIVE else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
