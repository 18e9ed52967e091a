import pytest
from hypothesis import given, strategies as st

from twyang.branching import restrict
from twyang.pairs import instantiate
from twyang.rootdata import build_root_system, dimension, weight_multiplicities

from oracles import dominant_weights_up_to, restrict_by_weights, roots_for

# one representative per shape of h: two a1s, simple, with u(1), mixed ranks
REPRESENTATIVE = [("G", ()), ("FII", ()), ("AIII", (5, 2)), ("BDI", (8, 3)), ("CII", (3, 1)), ("EIII", ())]


@pytest.mark.parametrize("fam,params", REPRESENTATIVE)
def test_against_weight_oracle(fam, params):
    pair = instantiate(fam, params)
    rs = build_root_system(pair.g)
    for hw in dominant_weights_up_to(roots_for(rs), 80):
        ref = restrict_by_weights(pair, hw, lambda w: weight_multiplicities(rs, w))
        got = {w.flat + (w.charge,): m for w, m in restrict(pair, hw).items()}
        assert got == ref, hw


def test_published_restrictions():
    f4b4 = instantiate("FII")
    # 26 -> 16 + 9 + 1
    out = restrict(f4b4, (0, 0, 0, 1))
    assert sorted(f4b4.h.dimension(w) for w in out) == [1, 9, 16]
    e6f4 = instantiate("EIV")
    assert sorted(e6f4.h.dimension(w) for w in restrict(e6f4, (1, 0, 0, 0, 0, 0))) == [1, 26]


PAIRS = [("G", ()), ("FI", ()), ("AIII", (6, 2)), ("AI", (5,)), ("DIII", (8,)), ("CI", (3,)), ("BDI", (9, 4))]


@given(st.sampled_from(PAIRS), st.data())
def test_dimension_conservation(fp, data):
    pair = instantiate(*fp)
    rs = build_root_system(pair.g)
    hw = tuple(data.draw(st.integers(0, 1)) for _ in range(rs.rank))
    if dimension(rs, hw) > 3000:
        return
    out = restrict(pair, hw)
    assert sum(m * pair.h.dimension(w) for w, m in out.items()) == dimension(rs, hw)
