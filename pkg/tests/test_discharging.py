from fractions import Fraction as F

import pytest

from chromaface.discharging import (
    DischargingError,
    RuleSet,
    apply_delta5,
    apply_delta6,
    claim1_lower_bound,
    claim1_supported,
    claim2_inequality,
    claim2_value,
    classify_delta6,
    delta6_star_value,
    init_charges,
    ledger_report,
    r2_amount,
)
from chromaface.embedding import PlaneGraph, find_planar_rotation
from chromaface.families import gen_odd_cycle, gen_prism_G, gen_quartic_H, gen_quintic_T
from chromaface.graph import complete_graph

T4 = gen_quintic_T(4)[1]


def _k4():
    g = complete_graph(4)
    return PlaneGraph(g, find_planar_rotation(g))


def test_init_totals():
    assert init_charges(T4, "delta5").total_initial == -8
    assert init_charges(T4, "delta6").total_initial == (4 * 61 - 6 * 38) - 25 == -9
    assert init_charges(gen_odd_cycle(5)[1], "delta5").total_initial == -8


def test_delta5_on_t4():
    ledger = apply_delta5(T4, F(16, 5))
    assert ledger.total_final == -8 and ledger.conserved() and ledger.balanced()
    fin = ledger.final
    assert all(fin[("f", i)] == 0 for i in range(len(T4.faces)))


def test_r21_amount_at_r8():
    u = T4.graph.n
    ledger = apply_delta5(T4, F(8))
    got = sum(t.amount for t in ledger.transfers if t.receiver == ("v", u) and t.rule == "R2.1")
    assert got == 2 * (F(2, 3) + F(2, 13)) == F(64, 39)


def test_delta5_default_r_is_local_min():
    assert apply_delta5(T4).ruleset.r == F(16, 5)


def test_delta5_rejects_small_r():
    with pytest.raises(DischargingError):
        RuleSet("delta5", F(3))
    with pytest.raises(DischargingError):
        apply_delta5(gen_quartic_H(3)[1])  # local minimum 3


def test_delta5_rejects_large_degree():
    from chromaface.graph import Graph

    # wheel with six spokes: hub of degree 6
    g = Graph(7, [(i, i % 6 + 1) for i in range(1, 7)] + [(7, i) for i in range(1, 7)])
    with pytest.raises(DischargingError):
        apply_delta5(PlaneGraph(g, find_planar_rotation(g)), F(8))


def test_r23_undefined_n():
    # A 4-vertex with a single 5-neighbour: the wheel W_5 hub has degree 5,
    # rim vertices degree 3; add chords to give one rim vertex degree 4.
    from chromaface.graph import Graph

    g = Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)] + [(6, i) for i in range(1, 6)] + [(1, 3)])
    pg = PlaneGraph(g, find_planar_rotation(g))
    with pytest.raises(DischargingError, match="R2.3"):
        apply_delta5(pg, F(8))


def test_delta6_on_t4():
    ledger = apply_delta6(T4)
    assert ledger.total_final == -9 and ledger.conserved()
    fin = ledger.final
    for i, f in enumerate(T4.faces):
        if f.degree >= 4:
            assert fin[("f", i)] == 0
        else:
            assert fin[("f", i)] == 0 == 2 * 3 - 6


def test_five_face_sends_four_fifths():
    ledger = apply_delta6(T4)
    five = [i for i, f in enumerate(T4.faces) if f.degree == 5]
    assert five
    amounts = {t.amount for t in ledger.transfers if t.sender == ("f", five[0])}
    assert amounts == {F(4, 5)}


def test_delta6_classes():
    cls = classify_delta6(T4)
    assert set(cls) == set(T4.graph.vertices())
    assert cls[T4.graph.n] != "heavy"


def test_star_values():
    assert delta6_star_value(T4) == -9
    assert delta6_star_value(gen_odd_cycle(5)[1]) == 3
    assert delta6_star_value(_k4()) == -4


def test_claim1_values():
    assert claim1_lower_bound(2, F(8)) == F(2, 3) - F(4, 13) == F(14, 39)
    assert claim1_lower_bound(5, F(8)) == F(-1, 3) - F(4, 28) == F(-10, 21)
    # 1/3 - 4/(40 - 20 + 6)
    assert claim1_lower_bound(5, F(8), at_most_two_triangles=True) == F(1, 3) - F(4, 26) == F(7, 39)
    assert claim1_supported(3, F(15, 2)) and not claim1_supported(3, F(7))


def test_claim2_values():
    assert claim2_value(F(27, 5)) == F(8, 25) and claim2_inequality(F(27, 5))
    assert claim2_value(F(5)) == -2 and not claim2_inequality(F(5))
    assert claim2_value(F(15, 2)) == 23 and claim2_inequality(F(15, 2))


def test_r2_amounts_exact_ceilings():
    r = F(16, 5)
    assert r2_amount("R2.1", r) == F(2, 3) + F(2, 7 - 3)
    assert r2_amount("R2.3", r, 2) == F(4, 2 * (13 - 9))
    with pytest.raises(DischargingError):
        r2_amount("R2.3", r, 5)


def test_report_fields():
    rep = ledger_report(T4, apply_delta6(T4), with_log=True)
    assert (rep["total_initial"], rep["total_final"], rep["faces4plus_final_zero"]) == (-9, -9, True)
    assert rep["star_value"] == -9 and rep["log"]
    rep5 = ledger_report(T4, apply_delta5(T4))
    assert rep5["faces_final_zero"] and rep5["r"] == F(16, 5) and "log" not in rep5


def test_log_order_is_canonical():
    ledger = apply_delta6(gen_prism_G(4)[1])
    keys = [(t.rule, t.sender, t.receiver) for t in ledger.transfers]
    assert keys == sorted(keys)
