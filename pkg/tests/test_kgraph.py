import dataclasses
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twyang.errors import Disconnected, LabelAbsent, MultiplicityFailure, Pole
from twyang.fixtures import graph_spec, parse_chain, same_graph
from twyang.kgraph import (
    Tau,
    bracket_value,
    dump_json,
    g_plus_c_graph,
    graph_for,
    magic_square,
    orthogonal_graph,
    render_dot,
    render_json,
    render_text,
    restricted_reps,
    spectral_k,
    truncations,
)
from twyang.pairs import instantiate
from twyang.yangrep import bulk_tpg, fundamental_yrep, tpg_subgraphs

from support import fixture_graphs, path_independent, witnesses_consistent

SMALL = list(fixture_graphs(max_rank=5))


def test_f4_b4_text():
    assert render_text(graph_for(instantiate("FII"), 4)) == "(λ1) <-1- (λ4) -9-> (0)"


def test_e6_f4_json():
    doc = json.loads(render_json(graph_for(instantiate("EIV"), 1)))
    assert len(doc["nodes"]) == 2
    assert [(e["delta_num"], e["delta_den"]) for e in doc["edges"]] == [(12, 1)]


def test_bdi_truncation_components():
    g = orthogonal_graph(instantiate("BDI", (10, 3)), 2)
    cuts = truncations(g)
    assert [t.delta for t in cuts] == [2, 6]
    first = [sorted(g.node_label(i) for i in comp) for comp in cuts[0].components]
    assert sorted(first) == [["(0,λ2)"], ["(λ1,λ1)⊕(0,0)", "(λ2,0)"]]


@pytest.mark.parametrize("case,g", SMALL, ids=[c for c, _ in SMALL])
def test_path_independence(case, g):
    assert path_independent(g)


@pytest.mark.parametrize("case,g", SMALL, ids=[c for c, _ in SMALL])
def test_witnesses(case, g):
    assert witnesses_consistent(g)


@pytest.mark.parametrize("case,g", SMALL, ids=[c for c, _ in SMALL])
def test_json_round_trip(case, g):
    text = render_json(g)
    assert dump_json(json.loads(text)) == text


def test_json_is_deterministic():
    pair = instantiate("EIII")
    assert render_json(graph_for(pair, 2)) == render_json(graph_for(pair, 2))


@given(st.sampled_from([("AIII", (7, 3), 2), ("EIII", (), 1), ("EVII", (), 1), ("CI", (4,), 1), ("DIII", (10,), 5)]),
       st.sampled_from([Fraction(3), Fraction(-1, 2), Fraction(7, 5)]))
def test_charge_rescaling_invariance(case, t):
    fam, params, v = case
    pair = instantiate(fam, params)
    a = graph_for(pair, v)
    b = graph_for(pair.with_charge_scale(t), v)
    assert same_graph(graph_spec(a), graph_spec(b))
    assert sorted(e.delta for e in a.edges) == sorted(e.delta for e in b.edges)


def test_spectral_values():
    g = graph_for(instantiate("FII"), 4)
    at = {g.node_label(i): i for i in range(len(g.nodes))}
    sk = spectral_k(g, reference=at["(λ4)"])
    assert {k: str(sk.tau[i]) for k, i in at.items()} == {"(λ4)": "1", "(λ1)": "[1]", "(0)": "[9]"}
    # [1] at theta = i pi / 3 with c_A = 18
    assert sk.value(at["(λ1)"], Fraction(1, 3)) == Fraction(-7, 5)


def test_bracket_and_tau():
    assert bracket_value(9, 18, 0) == 1
    with pytest.raises(Pole):
        bracket_value(9, 18, Fraction(1, 2))
    t = Tau().times(Fraction(3)).times(Fraction(-3))
    assert t == Tau()


def test_restricted_reps_cover_truncations():
    g = graph_for(instantiate("EIII"), 1)
    reps = restricted_reps(g)
    assert (None, [0, 1, 2]) in reps
    assert all(d is None or d in {t.delta for t in truncations(g)} for d, _ in reps)


def test_disconnected_is_reported():
    g = graph_for(instantiate("EIII"), 1)
    cut = dataclasses.replace(g, edges=[])
    with pytest.raises(Disconnected):
        spectral_k(cut)
    sk = spectral_k(cut, strict=False)
    assert sk.warnings and all(str(t) == "1" for t in sk.tau.values())


def test_intractable_diii():
    with pytest.raises(MultiplicityFailure):
        graph_for(instantiate("DIII", (12,)), 3)


def test_g_plus_c():
    pair = instantiate("FII")
    g = g_plus_c_graph(pair)
    assert same_graph(graph_spec(g), parse_chain("(λ2) -5-> (λ4)⊕(0)", pair.h.ranks))


def test_dot_output():
    text = render_dot(graph_for(instantiate("EIV"), 1))
    assert text.startswith("digraph") and 'label="12"' in text


def test_magic_dimensions():
    for row, m in [(3, 1), (3, 8), (4, 4)]:
        cell = magic_square(row, m)
        assert cell.k_dim == cell.k_dim_formula


def test_tpg():
    g = fundamental_yrep(instantiate("FII").g, 4).g
    tpg = bulk_tpg(g, 4, 4)
    assert sum(1 for _ in tpg.nodes) >= 2
    with pytest.raises(LabelAbsent):
        tpg_subgraphs(tpg, Fraction(1, 1000))
    lab = tpg.labels()[0]
    assert sum(len(c) for c in tpg_subgraphs(tpg, lab)) == len(tpg.nodes)
