import random

import pytest

from gracelab import (
    InvalidParameter,
    ModeMismatch,
    SignedGraph,
    build_gmn,
    is_complement_reducible,
    is_p4_free,
)
from conftest import random_cograph, random_signed_graph


def pairs(g):
    return [(u, v) for u, v, _ in g.edges]


def test_g23_is_path():
    g = build_gmn(2, 3)
    assert g.n == 0
    assert pairs(g) == [(0, 1), (1, 2)]  # 1+3 is even, so ids 0 and 2 stay apart


def test_g63_is_triangle():
    g = build_gmn(6, 3)
    assert pairs(g) == [(0, 1), (0, 2), (1, 2)]


def test_g64_is_k4_minus_one_edge():
    g = build_gmn(6, 4)
    assert g.q == 5
    assert (1, 3) not in pairs(g)  # integers 2 and 4 sum to 6


@pytest.mark.parametrize("m,n", [(1, 3), (0, 3), (2, 0), (2, -1), ("2", 3)])
def test_gmn_rejects_bad_parameters(m, n):
    with pytest.raises(InvalidParameter):
        build_gmn(m, n)


def test_gmn_vertex_monotone():
    rng = random.Random(41)
    for _ in range(40):
        m = rng.randint(2, 12)
        n = rng.randint(1, 10)
        small = build_gmn(m, n)
        big = build_gmn(m, n + 1)
        restricted = [(u, v) for u, v, _ in big.edges if u < n and v < n]
        assert restricted == pairs(small)


def test_gmn_complete_when_sums_cannot_reach_divisor():
    for m, n in [(8, 4), (12, 5), (100, 7)]:
        assert 2 * n - 1 < m
        g = build_gmn(m, n)
        assert g.q == n * (n - 1) // 2


def test_gmn_edge_predicate_is_mod_based():
    rng = random.Random(43)
    for _ in range(20):
        m = rng.randint(2, 9)
        n = rng.randint(2, 9)
        g = build_gmn(m, n)
        have = set(pairs(g))
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                assert ((a - 1, b - 1) in have) == ((a + b) % m != 0)


def test_gmn_may_be_disconnected():
    # integers 1,2 with m=3: 1+2=3 is divisible, so no edge at all
    g = build_gmn(3, 2)
    assert g.q == 0 and not g.is_connected


P3 = SignedGraph(3, ((0, 1, "+"), (1, 2, "+")))
P4 = SignedGraph(4, ((0, 1, "+"), (1, 2, "+"), (2, 3, "+")))
K4 = SignedGraph(4, tuple((u, v, "+") for u in range(4) for v in range(u + 1, 4)))


def test_complement_reduction_examples():
    assert is_complement_reducible(P3)
    assert not is_complement_reducible(P4)
    assert is_complement_reducible(build_gmn(6, 4))


def test_p4_free_examples():
    assert not is_p4_free(P4)
    assert is_p4_free(K4)
    assert is_p4_free(build_gmn(2, 3))  # only 3 vertices, vacuous


def test_signed_input_rejected():
    g = SignedGraph(2, ((0, 1, "-"),))
    with pytest.raises(ModeMismatch):
        is_complement_reducible(g)
    with pytest.raises(ModeMismatch):
        is_p4_free(g)


def test_recognizers_agree_on_small_corpus():
    rng = random.Random(47)
    corpus = [random_signed_graph(rng, p_min=2, p_max=7, all_positive=True) for _ in range(150)]
    corpus += [random_cograph(rng, rng.randint(2, 7)) for _ in range(50)]
    for g in corpus:
        assert is_complement_reducible(g) == is_p4_free(g)


def test_structured_cographs_recognized():
    rng = random.Random(53)
    for _ in range(40):
        g = random_cograph(rng, rng.randint(2, 9))
        assert is_p4_free(g)
        assert is_complement_reducible(g)
