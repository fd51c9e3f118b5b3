from fractions import Fraction as F

import pytest

from chromaface.acceptance import negative_control
from chromaface.checks import (
    CRITICAL_ONLY,
    bounds_table,
    check_edge_bounds,
    check_global_bound,
    check_lemma1,
    check_sz,
    check_val,
    check_zhang,
    is_petersen_minus_vertex,
    lemma_suite,
)
from chromaface.families import gen_prism_G, gen_quartic_H, gen_quintic_T
from chromaface.graph import cycle_graph, petersen_graph, star_graph

G3 = gen_prism_G(3)[1].graph
H4 = gen_quartic_H(4)[1].graph
T4 = gen_quintic_T(4)[1].graph


@pytest.mark.parametrize("g", [cycle_graph(5), G3, T4], ids=["C5", "G3", "T4"])
def test_lemma_suite_holds_on_critical(g):
    for rep in lemma_suite(g):
        assert rep.holds, (rep.lemma_id, rep.violations)
        assert rep.hypothesis_violations == []


def test_prism_holds_as_predicate():
    rep = check_lemma1(gen_prism_G(3)[0].graph)
    assert rep.holds and CRITICAL_ONLY in rep.details


def test_val_at_bivalent_vertex_of_g3():
    u = G3.n
    for v in G3.neighbors(u):
        have = sum(1 for w in G3.neighbors(v) if w != u and G3.degree(w) == 3)
        assert have >= 2
    assert check_val(G3).holds and check_val(T4).holds and check_val(cycle_graph(5)).holds


def test_zhang_items_at_bivalent_vertex():
    u = T4.n
    v = min(T4.neighbors(u))
    assert T4.degree(u) + T4.degree(v) == 7
    assert check_zhang(T4).holds and check_zhang(G3).holds


def test_star_reports_hypothesis_problems():
    rep = check_zhang(star_graph(3))
    assert rep.hypothesis_violations


def test_sz_holds():
    assert check_sz(cycle_graph(5)).holds and check_sz(G3).holds and check_sz(T4).holds


def test_negative_control_located():
    g = negative_control()
    pendant = g.n
    reports = {r.lemma_id: r for r in lemma_suite(g)}
    for rep in reports.values():
        assert rep.violations and rep.hypothesis_violations
    assert ("degree", pendant, 1) in reports["lemma1"].violations
    assert any(pendant in v[:3] for v in reports["val"].violations)
    assert any(pendant in v[1:4] for v in reports["zhang"].violations)


def test_edge_bounds_examples():
    rep = check_edge_bounds(G3, 3)
    assert rep.holds
    assert F(4, 3) * 7 == F(28, 3) <= 10 and F(50, 37) * 7 == F(350, 37) <= 10
    assert check_edge_bounds(T4, 5).holds and 61 >= F(375, 7)
    assert check_edge_bounds(H4, 4).holds and 17 >= F(108, 7)


def test_petersen_minus_vertex_exception():
    p = petersen_graph().delete_vertex(3)
    assert is_petersen_minus_vertex(p)
    rep = check_edge_bounds(p, 3)
    assert rep.holds and any("skipped" in d for d in rep.details)
    assert not is_petersen_minus_vertex(G3)


def test_edge_bound_violation_reported():
    rep = check_edge_bounds(cycle_graph(7), 3)
    assert not rep.holds and rep.violations[0][0] == "jakobsen"


def test_global_bounds():
    assert check_global_bound(G3, 3).holds
    assert check_global_bound(T4, 5).holds and 61 * 4 < 15 * 19
    assert check_global_bound(H4, 4).holds
    assert not check_global_bound(cycle_graph(9), 3).holds


def test_unknown_k_rejected():
    with pytest.raises(ValueError):
        check_edge_bounds(G3, 7)


def test_bounds_table_rows():
    rows = {r.k: r for r in bounds_table()}
    assert sorted(rows) == [2, 3, 4, 5, 6]
    assert rows[2].avg_unbounded and rows[2].local_unbounded
    assert rows[3].avg_refined_upper == F(100, 13)
    assert rows[5].local_lower == F(16, 5) and rows[5].local_upper == F(15, 2)
    assert rows[6].avg_upper == F(10, 3) and rows[6].local_upper == F(17, 5) and rows[6].conditional
