"""Backtracking search for labelings, a brute-force oracle, and the (m,n) survey.

The solver assigns labels to vertices in descending-degree order (ties by
id), trying labels in ascending order, so outcomes are deterministic and a
completed search with no witness is a certificate that none exists.  Each
pruning rule can be disabled independently; full assignments are always
validated from scratch at the leaves, so pruning only skips work and never
changes the witness set.

Prune rules:
  range     a completed edge's induced label must lie in 1..(class size)
  dup       a completed edge's induced label must be new within its class
  sum-reach a label so large that any future sum-class edge at this vertex
            must overshoot can be rejected immediately
  bound     additive mode only: reject up front when q < 2p - 4
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, replace
from enum import Enum
from itertools import permutations
from pathlib import Path

from .core import (
    InvalidParameter,
    ModeMismatch,
    Sign,
    SignedGraph,
    TooLarge,
    VertexLabeling,
    structural_stats,
)
from .ndsg import build_gmn, is_complement_reducible
from .verify import (
    LabelingMode,
    check_additive_bound,
    label_bound,
    requires_all_positive,
    verify,
)

PRUNE_RANGE = "range"
PRUNE_DUP = "dup"
PRUNE_SUM_REACH = "sum-reach"
PRUNE_BOUND = "bound"
ALL_PRUNES = frozenset({PRUNE_RANGE, PRUNE_DUP, PRUNE_SUM_REACH, PRUNE_BOUND})

ORACLE_LIMIT = 10_000_000


class SearchGoal(Enum):
    FIND_ONE = "find-one"
    ENUMERATE_ALL = "enumerate-all"
    COUNT_ONLY = "count-only"


class SearchStatus(Enum):
    FOUND = "found"
    EXHAUSTED_NONE = "exhausted-none"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class SearchConfig:
    mode: LabelingMode
    goal: SearchGoal = SearchGoal.FIND_ONE
    node_budget: int | None = None
    time_budget: float | None = None
    disable_prunes: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        if self.node_budget is not None and self.node_budget < 1:
            raise InvalidParameter(f"node_budget must be >= 1, got {self.node_budget}")
        if self.time_budget is not None and self.time_budget <= 0:
            raise InvalidParameter(f"time_budget must be positive, got {self.time_budget}")
        unknown = frozenset(self.disable_prunes) - ALL_PRUNES
        if unknown:
            raise InvalidParameter(f"unknown prune rule(s): {sorted(unknown)}")
        object.__setattr__(self, "disable_prunes", frozenset(self.disable_prunes))


@dataclass(frozen=True)
class SearchOutcome:
    """Witnesses are label arrays; EnumerateAll sorts them lexicographically.

    nodes_explored counts attempted (vertex, label) assignments, so two runs
    with identical inputs report identical numbers.  An EXHAUSTED_NONE
    status means the whole space was covered: it certifies nonexistence.
    """

    status: SearchStatus
    witnesses: tuple[VertexLabeling, ...]
    nodes_explored: int
    witness_count: int

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "nodes_explored": self.nodes_explored,
            "witness_count": self.witness_count,
            "witnesses": [list(w) for w in self.witnesses],
        }


def solve(graph: SignedGraph, config: SearchConfig) -> SearchOutcome:
    """Backtracking search for labelings of `graph` under `config.mode`."""
    mode = config.mode
    if requires_all_positive(mode) and graph.n:
        raise ModeMismatch(
            f"{mode.value} mode requires an all-positive graph; {graph.n} negative edge(s) present"
        )
    use_range = PRUNE_RANGE not in config.disable_prunes
    use_dup = PRUNE_DUP not in config.disable_prunes
    use_reach = PRUNE_SUM_REACH not in config.disable_prunes
    use_bound = PRUNE_BOUND not in config.disable_prunes

    if mode is LabelingMode.ADDITIVELY_GRACEFUL and use_bound and not check_additive_bound(graph):
        return SearchOutcome(SearchStatus.EXHAUSTED_NONE, (), 0, 0)

    p = graph.p
    bound = label_bound(graph, mode)
    # class 0 = positive edges (all of them in the unsigned modes), class 1 = negative
    cls_sum = (mode is LabelingMode.ADDITIVELY_GRACEFUL, mode is LabelingMode.ADDITIVELY_GRACEFUL_SIGNED)
    cls_max = (graph.m, graph.n)
    pos_pairs = graph.positive_pairs()
    neg_pairs = graph.negative_pairs()

    adj: list[list[tuple[int, int]]] = [[] for _ in range(p)]
    for u, v, s in graph.edges:
        c = 0 if s is Sign.POSITIVE else 1
        adj[u].append((v, c))
        adj[v].append((u, c))
    order = sorted(range(p), key=lambda v: (-len(adj[v]), v))

    labels = [-1] * p
    used = [False] * (bound + 1)
    cls_seen = [0, 0]

    goal = config.goal
    witnesses: list[VertexLabeling] = []
    count = 0
    nodes = 0
    budget_stop = False
    node_budget = config.node_budget
    deadline = None if config.time_budget is None else time.monotonic() + config.time_budget

    def assignment_valid() -> bool:
        # full re-check of the per-class multiset conditions; injectivity and
        # the label domain hold by construction of the assignment loop
        for pairs, use_sum, k in ((pos_pairs, cls_sum[0], cls_max[0]), (neg_pairs, cls_sum[1], cls_max[1])):
            seen = 0
            for u, v in pairs:
                a, b = labels[u], labels[v]
                val = a + b if use_sum else (a - b if a >= b else b - a)
                if val < 1 or val > k:
                    return False
                bit = 1 << val
                if seen & bit:
                    return False
                seen |= bit
        return True

    def dfs(idx: int) -> bool:
        nonlocal nodes, count, budget_stop
        if idx == p:
            if assignment_valid():
                if goal is SearchGoal.COUNT_ONLY:
                    count += 1
                else:
                    witnesses.append(tuple(labels))
                    if goal is SearchGoal.FIND_ONE:
                        return True
            return False
        v = order[idx]
        neighbors = adj[v]
        for lab in range(bound + 1):
            if used[lab]:
                continue
            if node_budget is not None and nodes >= node_budget:
                budget_stop = True
                return True
            nodes += 1
            if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
                budget_stop = True
                return True
            labels[v] = lab
            used[lab] = True
            ok = True
            new_bits = [0, 0]
            for u, c in neighbors:
                lu = labels[u]
                if lu < 0:
                    continue
                val = lab + lu if cls_sum[c] else (lab - lu if lab >= lu else lu - lab)
                if use_range and (val < 1 or val > cls_max[c]):
                    ok = False
                    break
                if use_dup:
                    bit = 1 << val
                    if (cls_seen[c] | new_bits[c]) & bit:
                        ok = False
                        break
                    new_bits[c] |= bit
            if ok and use_reach:
                min_free = -1
                for u, c in neighbors:
                    if labels[u] < 0 and cls_sum[c]:
                        if min_free < 0:
                            min_free = next((x for x in range(bound + 1) if not used[x]), bound + 1)
                        if lab + min_free > cls_max[c]:
                            ok = False
                            break
            if ok:
                old0, old1 = cls_seen
                cls_seen[0] |= new_bits[0]
                cls_seen[1] |= new_bits[1]
                stop = dfs(idx + 1)
                cls_seen[0] = old0
                cls_seen[1] = old1
                if stop:
                    labels[v] = -1
                    used[lab] = False
                    return True
            labels[v] = -1
            used[lab] = False
        return False

    dfs(0)

    if goal is SearchGoal.ENUMERATE_ALL:
        witnesses.sort()
    witness_count = count if goal is SearchGoal.COUNT_ONLY else len(witnesses)
    if budget_stop:
        status = SearchStatus.BUDGET_EXCEEDED
    elif witness_count:
        status = SearchStatus.FOUND
    else:
        status = SearchStatus.EXHAUSTED_NONE
    return SearchOutcome(status, tuple(witnesses), nodes, witness_count)


def oracle_solve(graph: SignedGraph, mode: LabelingMode) -> SearchOutcome:
    """Enumerate every injective assignment with no pruning, verifying each.

    Deliberately shares nothing with solve()'s search loop: it exists to
    cross-check the solver.  Refuses instances whose assignment count
    exceeds ORACLE_LIMIT.
    """
    if requires_all_positive(mode) and graph.n:
        raise ModeMismatch(
            f"{mode.value} mode requires an all-positive graph; {graph.n} negative edge(s) present"
        )
    bound = label_bound(graph, mode)
    total = 1
    for i in range(graph.p):
        total *= bound + 1 - i
        if total <= 0:
            total = 0
            break
    if total > ORACLE_LIMIT:
        raise TooLarge(
            f"oracle would enumerate {total} injective assignments (limit {ORACLE_LIMIT})"
        )
    witnesses = [
        perm for perm in permutations(range(bound + 1), graph.p) if verify(graph, perm, mode).valid
    ]
    witnesses.sort()
    status = SearchStatus.FOUND if witnesses else SearchStatus.EXHAUSTED_NONE
    return SearchOutcome(status, tuple(witnesses), total, len(witnesses))


@dataclass(frozen=True)
class SurveyRecord:
    """One catalog row: structure and labeling-search outcome for G(m, n)."""

    m: int
    n: int
    p: int
    q: int
    connected: bool
    complement_reducible: bool
    bound_ok: bool
    additively_graceful: str  # "yes" | "no" | "unknown"
    witness: VertexLabeling | None
    provenance: str  # "witness" | "bound" | "exhausted" | "budget"

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "connected": self.connected,
            "complement_reducible": self.complement_reducible,
            "bound_ok": self.bound_ok,
            "additively_graceful": self.additively_graceful,
            "witness": list(self.witness) if self.witness is not None else None,
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "SurveyRecord":
        witness = obj.get("witness")
        return cls(
            m=obj["m"],
            n=obj["n"],
            p=obj["p"],
            q=obj["q"],
            connected=obj["connected"],
            complement_reducible=obj["complement_reducible"],
            bound_ok=obj["bound_ok"],
            additively_graceful=obj["additively_graceful"],
            witness=tuple(witness) if witness is not None else None,
            provenance=obj["provenance"],
        )


def survey_one(m: int, n: int, config: SearchConfig | None = None) -> SurveyRecord:
    """Build G(m, n), gather its stats, and search it in additive mode."""
    graph = build_gmn(m, n)
    stats = structural_stats(graph)
    bound_ok = check_additive_bound(graph)
    reducible = is_complement_reducible(graph)
    base = config if config is not None else SearchConfig(mode=LabelingMode.ADDITIVELY_GRACEFUL)
    outcome = solve(graph, replace(base, mode=LabelingMode.ADDITIVELY_GRACEFUL, goal=SearchGoal.FIND_ONE))
    if outcome.status is SearchStatus.FOUND:
        verdict, witness, provenance = "yes", outcome.witnesses[0], "witness"
    elif outcome.status is SearchStatus.EXHAUSTED_NONE:
        verdict, witness = "no", None
        provenance = "bound" if not bound_ok else "exhausted"
    else:
        verdict, witness, provenance = "unknown", None, "budget"
    return SurveyRecord(
        m=m,
        n=n,
        p=stats.p,
        q=stats.q,
        connected=stats.connected,
        complement_reducible=reducible,
        bound_ok=bound_ok,
        additively_graceful=verdict,
        witness=witness,
        provenance=provenance,
    )


def read_catalog(path: str | Path) -> list[SurveyRecord]:
    """Read a JSONL catalog; missing file means empty catalog."""
    path = Path(path)
    if not path.exists():
        return []
    records = []
    with path.open(encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(SurveyRecord.from_dict(json.loads(line)))
    return records


def survey_gmn(
    m_values,
    n_values,
    config: SearchConfig | None = None,
    catalog_path: str | Path | None = None,
    force: bool = False,
) -> list[SurveyRecord]:
    """Survey every (m, n) pair, appending new records to the catalog.

    Pairs already present in the catalog are skipped unless `force` is set;
    the catalog is append-only, so forced recomputation appends fresh lines
    and readers take the last record per key.  Returns only the records
    computed by this call, in row-major (m, n) order.
    """
    m_values = list(m_values)
    n_values = list(n_values)
    if not m_values or not n_values:
        raise InvalidParameter("survey ranges must be nonempty")
    existing: set[tuple[int, int]] = set()
    if catalog_path is not None and not force:
        existing = {(r.m, r.n) for r in read_catalog(catalog_path)}
    records = []
    for m in m_values:
        for n in n_values:
            if (m, n) in existing:
                continue
            records.append(survey_one(m, n, config))
    if catalog_path is not None and records:
        with Path(catalog_path).open("a", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(rec.to_dict()) + "\n")
    return records
