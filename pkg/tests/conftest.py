"""Shared corpus builders for the test suite."""

import random

from gracelab import LabelingMode, Sign, SignedGraph


def random_signed_graph(
    rng: random.Random,
    p_min: int = 2,
    p_max: int = 6,
    q_max: int | None = None,
    all_positive: bool = False,
) -> SignedGraph:
    p = rng.randint(p_min, p_max)
    pairs = [(u, v) for u in range(p) for v in range(u + 1, p)]
    cap = len(pairs) if q_max is None else min(q_max, len(pairs))
    q = rng.randint(1, cap) if cap else 0
    edges = tuple(
        (u, v, Sign.POSITIVE if all_positive or rng.random() < 0.5 else Sign.NEGATIVE)
        for u, v in rng.sample(pairs, q)
    )
    return SignedGraph(p, edges)


def applicable_modes(graph: SignedGraph) -> list[LabelingMode]:
    """Signed modes always apply; unsigned modes only to all-positive graphs."""
    modes = [LabelingMode.GRACEFUL_SIGNED, LabelingMode.ADDITIVELY_GRACEFUL_SIGNED]
    if graph.n == 0:
        modes = [LabelingMode.GRACEFUL, LabelingMode.ADDITIVELY_GRACEFUL] + modes
    return modes


def random_cograph(rng: random.Random, p: int) -> SignedGraph:
    """Union/join recursion from single vertices, so the result is P4-free."""

    def build(k: int) -> tuple[int, list[tuple[int, int]]]:
        if k == 1:
            return 1, []
        a = rng.randint(1, k - 1)
        na, ea = build(a)
        nb, eb = build(k - a)
        edges = ea + [(u + na, v + na) for u, v in eb]
        if rng.random() < 0.5:
            edges += [(u, v) for u in range(na) for v in range(na, na + nb)]
        return na + nb, edges

    n, edges = build(p)
    return SignedGraph(n, tuple((u, v, Sign.POSITIVE) for u, v in edges))
