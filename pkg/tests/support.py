"""Shared helpers: every graph the embedded fixtures build, and the checks
applied to each of them."""

from fractions import Fraction

from twyang import fixtures
from twyang.errors import Pole
from twyang.kgraph import bracket_value, spectral_k
from twyang.pairs import instantiate


def fixture_graphs(max_rank: int = 8, exceptional: bool = True):
    """(case, graph) for every fixture whose graph builds."""
    fxs = (fixtures.EXCEPTIONAL_FIXTURES if exceptional else []) + fixtures.classical_fixtures(max_rank)
    for fx in fxs:
        pair = instantiate(fx.family, fx.params)
        vs = [pair.g.rank - 1, pair.g.rank] if fx.vrep == ("spinors",) else [fx.vrep]
        for v in vs:
            g = fixtures._graph(pair, v, fx.orthogonal)
            if not isinstance(g, Exception):
                yield f"{fx.case} [{v}]", g


def path_independent(g) -> bool:
    """tau_dst = tau_src [Delta] on every edge, symbolically and at sample points."""
    sk = spectral_k(g, strict=False)
    for e in g.edges:
        if sk.tau[e.dst] != sk.tau[e.src].times(e.delta):
            return False
        for x in (Fraction(1, 7), Fraction(-5, 11)):
            try:
                ratio = sk.value(e.dst, x) / sk.value(e.src, x)
            except (Pole, ZeroDivisionError):
                continue
            # a zero label is the identity ([0] = 1)
            if ratio != (bracket_value(e.delta, g.c_A, x) if e.delta else 1):
                return False
    return True


def witnesses_consistent(g) -> bool:
    """Every witness sits in the edge's end nodes, shares a parent and carries Delta."""
    for e in g.edges:
        if not e.witnesses:
            return False
        for a, b in e.witnesses:
            ma, mb = g.members[a], g.members[b]
            if a not in g.nodes[e.src] or b not in g.nodes[e.dst]:
                return False
            if ma.parent != mb.parent or ma.casimir - mb.casimir != e.delta:
                return False
    return True
