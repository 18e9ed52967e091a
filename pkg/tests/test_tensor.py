import pytest
from hypothesis import given, strategies as st

from twyang.rootdata import build_root_system, dimension, parse_lie_type, weight_multiplicities
from twyang.tensor import HAlgebra, format_weight, tensor_decompose, tensor_decompose_h

from oracles import dominant_weights_up_to, roots_for, tensor_by_characters


def rs_of(name):
    return build_root_system(parse_lie_type(name))


def test_small_products():
    a2 = rs_of("a2")
    assert tensor_decompose(a2, (1, 0), (0, 1)) == {(1, 1): 1, (0, 0): 1}
    g2 = rs_of("g2")
    # 7 x 7 = 27 + 14 + 7 + 1
    assert tensor_decompose(g2, (1, 0), (1, 0)) == {(2, 0): 1, (0, 1): 1, (1, 0): 1, (0, 0): 1}


@pytest.mark.parametrize("name", ["a2", "c2", "g2", "b3"])
def test_against_character_oracle(name):
    rs = rs_of(name)
    R = roots_for(rs)
    ws = dominant_weights_up_to(R, 40)
    char = lambda w: weight_multiplicities(rs, w)
    for i, a in enumerate(ws):
        for b in ws[i:]:
            if dimension(rs, a) * dimension(rs, b) <= 600:
                assert tensor_decompose(rs, a, b) == tensor_by_characters(R, a, b, char), (a, b)


@given(st.sampled_from(["a1", "a2", "b2", "g2", "a3", "d4"]), st.data())
def test_dimension_conservation(name, data):
    rs = rs_of(name)
    a = tuple(data.draw(st.integers(0, 2)) for _ in range(rs.rank))
    b = tuple(data.draw(st.integers(0, 1)) for _ in range(rs.rank))
    out = tensor_decompose(rs, a, b)
    assert sum(m * dimension(rs, w) for w, m in out.items()) == dimension(rs, a) * dimension(rs, b)
    assert out == tensor_decompose(rs, b, a)


def test_product_algebra():
    h = HAlgebra((parse_lie_type("a1"), parse_lie_type("a2")), True)
    x = h.irrep((1,), (1, 0), charge=1)
    y = h.irrep((1,), (0, 1), charge=-1)
    out = tensor_decompose_h(h, x, y)
    assert sum(m * h.dimension(w) for w, m in out.items()) == h.dimension(x) * h.dimension(y)
    assert all(w.charge == 0 for w in out)


def test_format():
    t = parse_lie_type("e6")
    assert format_weight((0, 0, 0, 0, 0, 0), t) == "0"
    assert format_weight((1, 0, 1, 0, 0, 0), t) == "λ1+λ3"
    assert format_weight((2, 0, 0, 0, 0, 0), t) == "2λ1"
    assert format_weight((3,), parse_lie_type("a1")) == "3"
