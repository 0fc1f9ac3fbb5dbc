"""Exact verifiers for the four labeling notions.

Each mode fixes a vertex-label domain {0..bound} and splits the edges into
classes whose induced labels must be exactly {1..class size}:

  graceful         all-positive graph, bound q, |f(u)-f(v)| over all edges
  additive         all-positive graph, bound ceil((q+1)/2), f(u)+f(v)
  graceful-signed  bound q; |f(u)-f(v)| hits {1..m} on positive edges and
                   {1..n} on negative edges
  additive-signed  bound m + ceil((n+1)/2); |f(u)-f(v)| hits {1..m} on
                   positive edges, f(u)+f(v) hits {1..n} on negative edges

Empty classes (m=0 or n=0) are vacuously satisfied.  Verification is pure:
same inputs always produce the identical report, and the first violation is
reported under a fixed check order (injectivity, then label domain, then
positive class, then negative class).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from .core import Edge, LengthMismatch, ModeMismatch, Sign, SignedGraph


class LabelingMode(Enum):
    GRACEFUL = "graceful"
    ADDITIVELY_GRACEFUL = "additive"
    GRACEFUL_SIGNED = "graceful-signed"
    ADDITIVELY_GRACEFUL_SIGNED = "additive-signed"


_UNSIGNED_ONLY = frozenset({LabelingMode.GRACEFUL, LabelingMode.ADDITIVELY_GRACEFUL})


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def requires_all_positive(mode: LabelingMode) -> bool:
    return mode in _UNSIGNED_ONLY


def label_bound(graph: SignedGraph, mode: LabelingMode) -> int:
    """Largest vertex label the mode's domain {0..bound} allows on this graph."""
    if mode is LabelingMode.GRACEFUL or mode is LabelingMode.GRACEFUL_SIGNED:
        return graph.q
    if mode is LabelingMode.ADDITIVELY_GRACEFUL:
        return _ceil_half(graph.q + 1)
    return graph.m + _ceil_half(graph.n + 1)


class EdgeClass(NamedTuple):
    """A group of edges whose induced labels must be exactly {1..size}."""

    name: str
    edges: tuple[Edge, ...]
    use_sum: bool
    size: int


def edge_classes(graph: SignedGraph, mode: LabelingMode) -> tuple[EdgeClass, ...]:
    if mode is LabelingMode.GRACEFUL:
        return (EdgeClass("all", graph.edges, False, graph.q),)
    if mode is LabelingMode.ADDITIVELY_GRACEFUL:
        return (EdgeClass("all", graph.edges, True, graph.q),)
    pos = tuple(e for e in graph.edges if e[2] is Sign.POSITIVE)
    neg = tuple(e for e in graph.edges if e[2] is Sign.NEGATIVE)
    neg_sum = mode is LabelingMode.ADDITIVELY_GRACEFUL_SIGNED
    return (
        EdgeClass("positive", pos, False, graph.m),
        EdgeClass("negative", neg, neg_sum, graph.n),
    )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification: per-edge induced labels plus pass/fail."""

    valid: bool
    mode: LabelingMode
    induced: tuple[tuple[Edge, int], ...]
    violation: str | None = None

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "mode": self.mode.value,
            "induced": [
                {"u": u, "v": v, "sign": s.value, "label": val}
                for (u, v, s), val in self.induced
            ],
            "violation": self.violation,
        }


def _first_violation(
    graph: SignedGraph,
    labeling: Sequence[int],
    bound: int,
    classes: tuple[EdgeClass, ...],
) -> str | None:
    seen_label: dict[int, int] = {}
    for v, lab in enumerate(labeling):
        if lab in seen_label:
            return f"vertices {seen_label[lab]} and {v} share label {lab}"
        seen_label[lab] = v
    for v, lab in enumerate(labeling):
        if lab < 0 or lab > bound:
            return f"label {lab} of vertex {v} outside 0..{bound}"
    for cls in classes:
        seen_val: set[int] = set()
        for u, v, _ in cls.edges:
            val = labeling[u] + labeling[v] if cls.use_sum else abs(labeling[u] - labeling[v])
            if val < 1 or val > cls.size:
                return f"{cls.name} edge ({u},{v}) induces {val}, outside 1..{cls.size}"
            if val in seen_val:
                return f"duplicate {cls.name} edge label {val} on ({u},{v})"
            seen_val.add(val)
        missing = set(range(1, cls.size + 1)) - seen_val
        if missing:
            return f"no {cls.name} edge induces label {min(missing)}"
    return None


def verify(graph: SignedGraph, labeling: Sequence[int], mode: LabelingMode) -> VerificationReport:
    """Check a labeling against one mode and report every induced edge label.

    Raises ModeMismatch when an unsigned mode meets a negative edge and
    LengthMismatch when the labeling length is not p; every other problem
    is reported as a violation, not an exception.
    """
    if len(labeling) != graph.p:
        raise LengthMismatch(f"labeling has {len(labeling)} entries for {graph.p} vertices")
    if mode in _UNSIGNED_ONLY and graph.n:
        raise ModeMismatch(
            f"{mode.value} mode requires an all-positive graph; {graph.n} negative edge(s) present"
        )
    bound = label_bound(graph, mode)
    classes = edge_classes(graph, mode)
    # induced labels in canonical edge order, computed regardless of validity
    pos_sum = mode is LabelingMode.ADDITIVELY_GRACEFUL
    neg_sum = mode is LabelingMode.ADDITIVELY_GRACEFUL_SIGNED
    induced = []
    for u, v, s in graph.edges:
        use_sum = pos_sum if s is Sign.POSITIVE else neg_sum
        val = labeling[u] + labeling[v] if use_sum else abs(labeling[u] - labeling[v])
        induced.append(((u, v, s), val))
    violation = _first_violation(graph, labeling, bound, classes)
    return VerificationReport(violation is None, mode, tuple(induced), violation)


def check_additive_bound(graph: SignedGraph) -> bool:
    """Necessary size condition q >= 2p - 4 for an additive labeling.

    Stated for unsigned graphs, so signed input raises ModeMismatch.  A
    False result certifies that no additive labeling exists.
    """
    if graph.n:
        raise ModeMismatch("the additive bound applies to all-positive graphs only")
    return graph.q >= 2 * graph.p - 4
