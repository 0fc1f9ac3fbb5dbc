"""Non-divisible sum graphs and cograph recognition.

G(m, n) lives on integers 1..n (vertex id i stands for integer i+1): two
distinct integers are adjacent exactly when their sum is not divisible by m.
The graphs come out all-positive and may be disconnected or contain isolated
vertices; callers decide what to do with that.

Cograph recognition is done twice on purpose: a literal complement-reduction
procedure and a brute-force induced-P4 scan act as independent oracles for
each other.
"""

from __future__ import annotations

from itertools import combinations

from .core import InvalidParameter, ModeMismatch, Sign, SignedGraph


def build_gmn(m: int, n: int) -> SignedGraph:
    """All-positive graph on ids 0..n-1 where i ~ j iff m does not divide (i+1)+(j+1)."""
    if not isinstance(m, int) or m <= 1:
        raise InvalidParameter(f"divisor m must be an integer > 1, got {m!r}")
    if not isinstance(n, int) or n < 1:
        raise InvalidParameter(f"vertex count n must be an integer >= 1, got {n!r}")
    edges = tuple(
        (a - 1, b - 1, Sign.POSITIVE)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        if (a + b) % m != 0
    )
    return SignedGraph(n, edges)


def _require_all_positive(graph: SignedGraph, what: str) -> None:
    if graph.n:
        raise ModeMismatch(f"{what} applies to all-positive graphs only")


def _adjacency(graph: SignedGraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(graph.p)]
    for u, v, _ in graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _components(vertices: tuple[int, ...], adj: dict[int, set[int]]) -> list[tuple[int, ...]]:
    remaining = set(vertices)
    comps = []
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w in remaining and w not in comp:
                    comp.add(w)
                    stack.append(w)
        remaining -= comp
        comps.append(tuple(sorted(comp)))
    return comps


def is_complement_reducible(graph: SignedGraph) -> bool:
    """Run the literal reduction: edgeless wins, disconnected splits,
    a connected graph with edges is complemented once and must fall apart."""
    _require_all_positive(graph, "complement reduction")
    adj0 = _adjacency(graph)

    def reduce(vertices: tuple[int, ...], adj: dict[int, set[int]]) -> bool:
        if all(not adj[v] for v in vertices):
            return True
        comps = _components(vertices, adj)
        if len(comps) > 1:
            return all(
                reduce(comp, {v: adj[v] & set(comp) for v in comp}) for comp in comps
            )
        vset = set(vertices)
        comp_adj = {v: vset - adj[v] - {v} for v in vertices}
        if len(_components(vertices, comp_adj)) == 1:
            return False
        return reduce(vertices, comp_adj)

    verts = tuple(range(graph.p))
    return reduce(verts, {v: adj0[v] for v in verts})


def is_p4_free(graph: SignedGraph) -> bool:
    """Brute-force oracle: no 4 vertices may induce a path on 4 vertices.

    An induced 4-vertex subgraph is that path exactly when it has 3 edges
    and degree multiset {1,1,2,2}.
    """
    _require_all_positive(graph, "induced-P4 scan")
    adj = _adjacency(graph)
    for quad in combinations(range(graph.p), 4):
        edge_count = sum(1 for a, b in combinations(quad, 2) if b in adj[a])
        if edge_count != 3:
            continue
        degs = sorted(len(adj[a] & set(quad)) for a in quad)
        if degs == [1, 1, 2, 2]:
            return False
    return True
