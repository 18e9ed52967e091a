from fractions import Fraction
from importlib import resources

import pytest
from hypothesis import given, strategies as st

from twyang.errors import BadArguments, BadParams, NotInCatalogue
from twyang.exceptional import EXCEPTIONAL, catalogue_text, derive
from twyang.pairs import (
    catalogue,
    composite_casimir,
    dumps_catalogue,
    instantiate,
    loads_catalogue,
    parse_pair,
    sweep,
    symmetric_space_sum,
)
from twyang.rootdata import build_root_system


def test_nineteen_families():
    assert len(catalogue()) == 19
    assert len(EXCEPTIONAL) == 12


@pytest.mark.parametrize("text,family,params", [
    ("so10/so3xso7", "BDI", (10, 3)),
    ("f4/b4", "FII", ()),
    ("e6/d5xu1", "EIII", ()),
    ("su6/su2xsu4xu1", "AIII", (6, 2)),
    ("sp8/u4", "CI", (4,)),
    ("so10/u5", "DIII", (10,)),
    ("BDI(10,4)", "BDI", (10, 4)),
    ("g2/a1xa1", "G", ()),
])
def test_parse_pair(text, family, params):
    if family is None:
        with pytest.raises(NotInCatalogue):
            parse_pair(text)
        return
    p = parse_pair(text)
    assert (p.family, p.params) == (family, params)


def test_parse_errors():
    with pytest.raises(BadParams):
        instantiate("AII", (5,))
    with pytest.raises(BadArguments):
        parse_pair("nonsense")
    with pytest.raises(NotInCatalogue):
        parse_pair("e6/a2xa2xa2")


def test_symmetric_space_sum_small_sweep():
    for pair in sweep(9):
        assert symmetric_space_sum(pair) == Fraction(1, 2), pair.label


def test_k_dimension_is_dim_g_minus_dim_h():
    for pair in sweep(10):
        assert pair.dim_k == build_root_system(pair.g).dim - pair.h.dim, pair.label


def test_shipped_catalogue_is_the_derivation():
    shipped = resources.files("twyang").joinpath("data/exceptional_pairs.json").read_text(encoding="utf-8")
    assert catalogue_text() == shipped


def test_catalogue_round_trip_is_bit_exact():
    text = catalogue_text()
    pairs = loads_catalogue(text)
    assert dumps_catalogue(pairs) == text
    for p in pairs:
        q = instantiate(p.family, p.params)
        assert (p.projection, p.k_rep, p.c_coeffs, p.c_u1) == (q.projection, q.k_rep, q.c_coeffs, q.c_u1)


@pytest.mark.parametrize("name", EXCEPTIONAL)
def test_k_heading_reproduced(name):
    assert derive(name).k_heading_match is not False


@given(st.sampled_from(["AIII", "CI", "DIII", "EIII", "EVII"]), st.sampled_from([Fraction(2), Fraction(-1, 3), Fraction(5, 7)]))
def test_charge_rescaling_keeps_casimirs(fam, t):
    params = {"AIII": (7, 3), "CI": (4,), "DIII": (10,)}.get(fam, ())
    p = instantiate(fam, params)
    q = p.with_charge_scale(t)
    assert symmetric_space_sum(q) == Fraction(1, 2)
    assert set(q.k_rep) == {w.with_charge_scaled(t) for w in p.k_rep}
    for w in p.k_rep:
        assert composite_casimir(q, w.with_charge_scaled(t)) == composite_casimir(p, w)
