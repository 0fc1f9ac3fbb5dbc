"""Generators for labeled signed-graph families, plus fixed small fixtures.

Each family builder returns the graph together with its closed-form labeling
and a role map naming the special vertices (u, v, w, x, pendants).  Every
output is re-checked against its expected mode at build time, so a bad
formula or a mistranscribed fixture fails loudly instead of shipping.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import InvalidParameter, Sign, SignedGraph, UnknownFixture, VertexLabeling
from .verify import LabelingMode, verify

NEG = Sign.NEGATIVE
POS = Sign.POSITIVE


@dataclass(frozen=True)
class ConstructedGraph:
    """A graph bundled with the labeling that certifies it."""

    graph: SignedGraph
    labeling: VertexLabeling
    roles: dict[str, int | tuple[int, ...]] = field(default_factory=dict)
    expected_mode: LabelingMode = LabelingMode.ADDITIVELY_GRACEFUL_SIGNED


def _certified(
    graph: SignedGraph,
    labeling: list[int],
    roles: dict,
    mode: LabelingMode,
    what: str,
) -> ConstructedGraph:
    report = verify(graph, labeling, mode)
    if not report.valid:
        raise AssertionError(f"{what} failed its build-time self-check: {report.violation}")
    return ConstructedGraph(graph, tuple(labeling), roles, mode)


def _require_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"m must be an integer >= 1, got {m!r}")


def build_p3_pendants(m: int) -> ConstructedGraph:
    """Negative path u-v-w plus m positive pendants at w.

    Labels: f(v)=0, f(u)=1, f(w)=2, f(pendant i)=2+i.  The negative edges
    induce {1,2} and the positive pendants induce {1..m}.
    """
    _require_m(m)
    edges = [(0, 1, NEG), (1, 2, NEG)] + [(2, 3 + i, POS) for i in range(m)]
    labels = [1, 0, 2] + [3 + i for i in range(m)]
    roles = {"u": 0, "v": 1, "w": 2, "pendants": tuple(range(3, m + 3))}
    return _certified(SignedGraph(m + 3, tuple(edges)), labels, roles, LabelingMode.ADDITIVELY_GRACEFUL_SIGNED, f"p3_pendants(m={m})")


def build_star_one_neg(m: int) -> ConstructedGraph:
    """Star with center u, one negative spoke, and m positive spokes.

    Labels: f(u)=1, negative leaf 0, positive leaf i -> 1+i; the negative
    spoke sums to 1 and the positive spokes induce {1..m}.  Stars with two
    or more negative spokes admit no such labeling (see the search module's
    exhaustive certificates).
    """
    _require_m(m)
    edges = [(0, 1, NEG)] + [(0, 2 + i, POS) for i in range(m)]
    labels = [1, 0] + [2 + i for i in range(m)]
    roles = {"u": 0, "v1": 1, "pendants": tuple(range(2, m + 2))}
    return _certified(SignedGraph(m + 2, tuple(edges)), labels, roles, LabelingMode.ADDITIVELY_GRACEFUL_SIGNED, f"star_one_neg(m={m})")


def build_bistar(m: int) -> ConstructedGraph:
    """Positive edge uv, m-1 positive pendants at u, one negative pendant w at v.

    Labels: f(v)=1, f(w)=0, f(u)=m+1, pendant i -> m+1-i.  The single
    negative edge sums to 1; uv induces m and the pendants {1..m-1}.
    The m=1 case degenerates to the path w-v-u with no pendants.
    """
    _require_m(m)
    edges = [(0, 1, POS), (1, 2, NEG)] + [(0, 3 + i, POS) for i in range(m - 1)]
    labels = [m + 1, 1, 0] + [m - i for i in range(m - 1)]
    roles = {"u": 0, "v": 1, "w": 2, "pendants": tuple(range(3, m + 2))}
    return _certified(SignedGraph(m + 2, tuple(edges)), labels, roles, LabelingMode.ADDITIVELY_GRACEFUL_SIGNED, f"bistar(m={m})")


def build_st(m: int) -> ConstructedGraph:
    """All-negative triangle u,v,w plus m positive pendants at w.

    Labels: f(u)=0, f(v)=1, f(w)=2, pendant i -> 2+i.  Negative edges
    induce {1,2,3}, positive pendants {1..m}.
    """
    _require_m(m)
    edges = [(0, 1, NEG), (0, 2, NEG), (1, 2, NEG)] + [(2, 3 + i, POS) for i in range(m)]
    labels = [0, 1, 2] + [3 + i for i in range(m)]
    roles = {"u": 0, "v": 1, "w": 2, "pendants": tuple(range(3, m + 3))}
    return _certified(SignedGraph(m + 3, tuple(edges)), labels, roles, LabelingMode.ADDITIVELY_GRACEFUL_SIGNED, f"st(m={m})")


def build_ste(m: int) -> ConstructedGraph:
    """Triangle with exactly one negative edge uw, plus m positive pendants at w.

    Labels: f(u)=1, f(v)=2, f(w)=0, pendant i -> i+2.  The negative edge uw
    sums to 1; the positive edges uv, vw and the pendants induce {1..m+2}.
    """
    _require_m(m)
    edges = [(0, 1, POS), (0, 2, NEG), (1, 2, POS)] + [(2, 3 + i, POS) for i in range(m)]
    labels = [1, 2, 0] + [3 + i for i in range(m)]
    roles = {"u": 0, "v": 1, "w": 2, "pendants": tuple(range(3, m + 3))}
    return _certified(SignedGraph(m + 3, tuple(edges)), labels, roles, LabelingMode.ADDITIVELY_GRACEFUL_SIGNED, f"ste(m={m})")


def build_k4_pendants(m: int) -> ConstructedGraph:
    """All-negative K4 on u,v,w,x plus m positive pendants at x.

    Labels: f(u)=0, f(v)=1, f(w)=2, f(x)=4, pendant i -> 4+i.  The six
    negative edges induce {1..6} and the pendants {1..m}.  The pendants
    hang off x: with f(x)=4 they are the only attachment point that makes
    the positive differences come out to 1..m.
    """
    _require_m(m)
    k4 = [(0, 1, NEG), (0, 2, NEG), (1, 2, NEG), (0, 3, NEG), (1, 3, NEG), (2, 3, NEG)]
    edges = k4 + [(3, 4 + i, POS) for i in range(m)]
    labels = [0, 1, 2, 4] + [5 + i for i in range(m)]
    roles = {"u": 0, "v": 1, "w": 2, "x": 3, "pendants": tuple(range(4, m + 4))}
    return _certified(SignedGraph(m + 4, tuple(edges)), labels, roles, LabelingMode.ADDITIVELY_GRACEFUL_SIGNED, f"k4_pendants(m={m})")


FAMILIES = {
    "p3": build_p3_pendants,
    "star": build_star_one_neg,
    "bistar": build_bistar,
    "st": build_st,
    "ste": build_ste,
    "k4": build_k4_pendants,
}


# Fixture catalog: (p, edges, labels, mode), transcribed vertex-for-vertex
# from the reference drawings.  fig10a/b/c are the non-divisible sum graphs
# G(2,3), G(6,3), G(6,4) with additive labelings of their (unsigned) selves.
_M = LabelingMode
_FIXTURES: dict[str, tuple[int, list, list[int], LabelingMode]] = {
    "fig1": (7, [(0, 2, "-"), (2, 5, "+"), (2, 3, "+"), (0, 1, "-"), (2, 4, "+"), (2, 6, "+")],
             [0, 1, 2, 3, 4, 5, 6], _M.ADDITIVELY_GRACEFUL_SIGNED),
    "fig2": (6, [(2, 0, "+"), (2, 5, "+"), (2, 3, "+"), (0, 1, "-"), (2, 4, "+")],
             [1, 0, 5, 2, 3, 4], _M.ADDITIVELY_GRACEFUL_SIGNED),
    "fig3": (7, [(2, 0, "+"), (2, 5, "-"), (5, 6, "-"), (2, 1, "+"), (2, 4, "+"), (2, 6, "-"), (2, 3, "+")],
             [6, 5, 2, 4, 3, 0, 1], _M.ADDITIVELY_GRACEFUL_SIGNED),
    "fig4": (7, [(2, 0, "+"), (2, 5, "+"), (5, 6, "+"), (2, 1, "+"), (2, 4, "+"), (2, 6, "-"), (2, 3, "+")],
             [6, 5, 0, 4, 3, 2, 1], _M.ADDITIVELY_GRACEFUL_SIGNED),
    "fig5a": (5, [(0, 3, "-"), (3, 4, "+"), (0, 2, "-"), (0, 4, "-"), (0, 1, "-")],
              [0, 4, 3, 2, 1], _M.ADDITIVELY_GRACEFUL_SIGNED),
    "fig5b": (7, [(2, 0, "+"), (2, 5, "+"), (5, 6, "+"), (2, 1, "+"), (2, 4, "-"), (2, 6, "+"), (2, 3, "+")],
              [6, 5, 0, 4, 1, 3, 2], _M.ADDITIVELY_GRACEFUL_SIGNED),
    "fig5c": (5, [(0, 3, "+"), (3, 4, "+"), (0, 2, "-"), (0, 4, "+"), (2, 1, "-")],
              [1, 2, 0, 4, 3], _M.ADDITIVELY_GRACEFUL_SIGNED),
    "fig6a": (9, [(5, 6, "-"), (2, 5, "-"), (2, 6, "-"), (0, 3, "+"), (2, 0, "-"), (5, 0, "-"), (6, 0, "-"),
                  (0, 1, "+"), (0, 4, "+"), (0, 8, "+"), (0, 7, "+")],
              [4, 8, 0, 6, 5, 1, 2, 9, 7], _M.ADDITIVELY_GRACEFUL_SIGNED),
    "fig6b": (9, [(5, 6, "+"), (2, 5, "+"), (2, 6, "+"), (0, 3, "+"), (2, 0, "+"), (5, 0, "+"), (6, 0, "+"),
                  (0, 1, "+"), (0, 4, "+"), (0, 8, "+"), (0, 7, "+")],
              [0, 10, 1, 8, 5, 3, 7, 11, 9], _M.GRACEFUL),
    "fig7a": (9, [(5, 6, "-"), (2, 5, "-"), (2, 6, "+"), (0, 3, "+"), (2, 0, "-"), (5, 0, "-"), (6, 0, "-"),
                  (0, 1, "+"), (0, 4, "+"), (0, 8, "+"), (0, 7, "+")],
              [3, 8, 1, 6, 5, 0, 2, 9, 7], _M.ADDITIVELY_GRACEFUL_SIGNED),
    "fig7b": (11, [(5, 6, "-"), (2, 5, "-"), (2, 6, "-"), (2, 3, "-"), (2, 0, "+"), (5, 0, "+"), (6, 0, "+"),
                   (0, 1, "+"), (0, 4, "+"), (0, 9, "+"), (2, 7, "-"), (2, 8, "-"), (0, 10, "+")],
              [3, 10, 0, 6, 7, 1, 2, 4, 5, 9, 8], _M.ADDITIVELY_GRACEFUL_SIGNED),
    "fig8a": (7, [(5, 6, "+"), (2, 5, "-"), (2, 6, "-"), (2, 3, "-"), (2, 0, "+"), (5, 0, "+"), (6, 0, "+"),
                  (6, 1, "+"), (6, 4, "+")],
              [4, 7, 0, 3, 8, 1, 2], _M.ADDITIVELY_GRACEFUL_SIGNED),
    "fig8b": (9, [(5, 6, "+"), (2, 5, "-"), (2, 6, "+"), (2, 3, "+"), (2, 0, "+"), (5, 0, "+"), (6, 0, "+"),
                  (2, 1, "+"), (2, 4, "+"), (2, 8, "+"), (2, 7, "+")],
              [5, 10, 0, 7, 8, 1, 2, 6, 9], _M.ADDITIVELY_GRACEFUL_SIGNED),
    "fig9": (11, [(5, 6, "-"), (2, 5, "-"), (2, 6, "-"), (2, 3, "-"), (2, 0, "+"), (5, 0, "+"), (6, 0, "+"),
                  (0, 1, "+"), (0, 4, "+"), (0, 9, "+"), (2, 7, "-"), (2, 8, "-"), (0, 10, "+")],
             [3, 10, 0, 6, 7, 5, 2, 1, 4, 9, 8], _M.GRACEFUL_SIGNED),
    "fig10a": (3, [(0, 1, "+"), (0, 2, "+")], [0, 1, 2], _M.ADDITIVELY_GRACEFUL),
    "fig10b": (3, [(0, 1, "+"), (0, 2, "+"), (1, 2, "+")], [0, 1, 2], _M.ADDITIVELY_GRACEFUL),
    "fig10c": (4, [(0, 1, "+"), (0, 2, "+"), (1, 2, "+"), (0, 3, "+"), (1, 3, "+")],
               [0, 3, 2, 1], _M.ADDITIVELY_GRACEFUL),
}

FIXTURE_IDS = tuple(_FIXTURES)


def fixture(fixture_id: str) -> ConstructedGraph:
    """Look up a catalogued fixture by id (fig1 .. fig10c)."""
    try:
        p, edges, labels, mode = _FIXTURES[fixture_id]
    except KeyError:
        raise UnknownFixture(
            f"unknown fixture {fixture_id!r}; known ids: {', '.join(FIXTURE_IDS)}"
        ) from None
    return _certified(SignedGraph(p, tuple(edges)), labels, {}, mode, f"fixture {fixture_id}")
