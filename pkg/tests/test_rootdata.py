from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twyang.errors import BadArguments, NotDominant, ResourceLimit, UnsupportedRank
from twyang.rootdata import (
    adjoint_casimir,
    build_root_system,
    casimir,
    dimension,
    dual_weight,
    parse_lie_type,
    parse_weight,
    weight_multiplicities,
)

from oracles import dominant_weights_up_to, kostant_character, roots_for, trace_casimir

TYPES = ["a1", "a2", "a3", "b2", "b3", "c3", "d4", "g2", "f4", "e6"]


def rs_of(name):
    return build_root_system(parse_lie_type(name))


@pytest.mark.parametrize("name,dim_g,h_dual", [
    ("a1", 3, 2), ("a4", 24, 5), ("b4", 36, 7), ("c3", 21, 4), ("d5", 45, 8),
    ("g2", 14, 4), ("f4", 52, 9), ("e6", 78, 12), ("e7", 133, 18), ("e8", 248, 30),
])
def test_adjoint_data(name, dim_g, h_dual):
    rs = rs_of(name)
    assert rs.dim == dim_g
    assert dimension(rs, rs.highest_root) == dim_g
    assert adjoint_casimir(rs) == 2 * h_dual


@pytest.mark.parametrize("name,w,dim,cas", [
    ("b4", (0, 0, 0, 1), 16, Fraction(9)),
    ("f4", (0, 0, 0, 1), 26, Fraction(12)),
    ("e6", (1, 0, 0, 0, 0, 0), 27, Fraction(52, 3)),
    ("e8", (0, 0, 0, 0, 0, 0, 0, 1), 248, Fraction(60)),
    ("a2", (1, 0), 3, Fraction(8, 3)),
    ("g2", (1, 0), 7, Fraction(4)),
])
def test_known_values(name, w, dim, cas):
    rs = rs_of(name)
    assert dimension(rs, w) == dim
    assert casimir(rs, w) == cas


def test_parsing_and_errors():
    assert parse_lie_type("so10") == parse_lie_type("d5")
    assert parse_lie_type("sp4") == parse_lie_type("c2")
    assert parse_weight("1,0,2") == (1, 0, 2)
    with pytest.raises(BadArguments):
        parse_lie_type("x9")
    with pytest.raises(UnsupportedRank):
        parse_lie_type("e9")
    with pytest.raises(NotDominant):
        dimension(rs_of("a2"), (-1, 0))
    with pytest.raises(ResourceLimit):
        weight_multiplicities(rs_of("e8"), (0, 0, 0, 0, 0, 0, 0, 1), max_weights=100)


@pytest.mark.parametrize("name", ["a2", "c2", "g2", "b3"])
def test_freudenthal_matches_kostant(name):
    rs = rs_of(name)
    R = roots_for(rs)
    assert sorted(map(rs.root_to_dynkin, rs.positive_roots)) == sorted(map(R.dynkin, R.positive))
    for lam in dominant_weights_up_to(R, 60):
        ref = kostant_character(R, lam)
        assert weight_multiplicities(rs, lam) == ref
        assert sum(ref.values()) == dimension(rs, lam) == R.weyl_dimension(lam)
        assert casimir(rs, lam) == trace_casimir(R, lam, ref)


@given(st.sampled_from(TYPES), st.data())
def test_dual_weight_preserves_dim_and_casimir(name, data):
    rs = rs_of(name)
    w = tuple(data.draw(st.integers(0, 2)) for _ in range(rs.rank))
    d = dual_weight(rs, w)
    assert dual_weight(rs, d) == w
    assert dimension(rs, d) == dimension(rs, w)
    assert casimir(rs, d) == casimir(rs, w)


@given(st.sampled_from(["a1", "a2", "b2", "g2", "a3"]), st.data())
def test_character_sums_to_dimension(name, data):
    rs = rs_of(name)
    w = tuple(data.draw(st.integers(0, 3)) for _ in range(rs.rank))
    assert sum(weight_multiplicities(rs, w).values()) == dimension(rs, w)
