import pytest

from chromaface.coloring import (
    EdgeColoring,
    SearchInconclusive,
    brute_force_chromatic_index,
    chromatic_index,
    criticality_report,
    is_critical,
    is_overfull,
    is_proper,
    k_colorable,
    vizing_plus_one_coloring,
)
from chromaface.families import certificate_coloring, gen_odd_cycle, gen_prism_G, gen_quartic_H, gen_quintic_T
from chromaface.graph import complete_graph, cycle_graph, petersen_graph

T4 = gen_quintic_T(4)


def test_is_proper_small_cases():
    c4 = cycle_graph(4)
    alt = EdgeColoring({e: 1 + i % 2 for i, e in enumerate([(1, 2), (2, 3), (3, 4), (1, 4)])}, 2)
    assert is_proper(c4, alt)
    c3 = cycle_graph(3)
    assert not is_proper(c3, EdgeColoring({(1, 2): 1, (2, 3): 2, (1, 3): 1}, 2))


def test_certificate_witness_is_proper():
    regular, tm, certs = T4
    h = sorted(tm.graph.edges)[0]
    c, _ = certificate_coloring(tm, certs, h)
    assert is_proper(tm.graph.delete_edge(*h), c)


def test_k_colorable_examples():
    c5 = cycle_graph(5)
    assert k_colorable(c5, 2)[0] is False
    ok, w = k_colorable(c5, 3)
    assert ok and is_proper(c5, w)
    g3 = gen_prism_G(3)[1].graph
    assert k_colorable(g3, 3)[0] is False
    assert k_colorable(g3, 4)[0] is True


def test_k_colorable_without_capacity_shortcut():
    g3 = gen_prism_G(3)[1].graph
    assert k_colorable(g3, 3, capacity_bound=False)[0] is False


def test_budget_exhaustion_raises():
    with pytest.raises(SearchInconclusive):
        k_colorable(petersen_graph(), 3, node_budget=5)


@pytest.mark.parametrize(
    "g, index, label",
    [
        (gen_prism_G(3)[0].graph, 3, "class1"),
        (cycle_graph(9), 3, "class2"),
        (T4[1].graph, 6, "class2"),
        (petersen_graph(), 4, "class2"),
    ],
)
def test_chromatic_index(g, index, label):
    d = chromatic_index(g)
    assert (d.chromatic_index, d.class_label) == (index, label)
    assert is_proper(g, d.witness) and len(d.witness.colors_used()) <= index


@pytest.mark.parametrize("g", [cycle_graph(5), complete_graph(4), T4[1].graph, complete_graph(7)])
def test_vizing(g):
    c = vizing_plus_one_coloring(g)
    assert is_proper(g, c) and set(c.assignment) == g.edges
    assert c.k == g.max_degree + 1 and max(c.colors_used()) <= c.k


def test_overfull():
    assert is_overfull(cycle_graph(5))
    assert not is_overfull(complete_graph(4))
    t = T4[1].graph
    assert is_overfull(t) and t.m == 5 * 12 + 1


def test_criticality_examples():
    assert is_critical(cycle_graph(5))
    assert not is_critical(gen_prism_G(3)[0].graph)
    for g in (gen_prism_G(3)[1].graph, gen_quartic_H(3)[1].graph, T4[1].graph):
        assert is_critical(g)


def test_criticality_report_failing_edge():
    # Petersen is class 2 but not critical.
    rep = criticality_report(petersen_graph())
    assert rep.class2 and rep.failing_edge is not None and not rep.critical


def test_criticality_parallel_matches_serial():
    g = gen_prism_G(4)[1].graph
    assert criticality_report(g, workers=2) == criticality_report(g, stop_early=False)


@pytest.mark.parametrize("g, expected", [(cycle_graph(5), 3), (complete_graph(4), 3), (cycle_graph(4), 2)])
def test_brute_force(g, expected):
    assert brute_force_chromatic_index(g) == expected


def test_brute_force_edge_limit():
    with pytest.raises(ValueError):
        brute_force_chromatic_index(complete_graph(6))


def test_odd_cycle_family():
    assert chromatic_index(gen_odd_cycle(3)[0]).chromatic_index == 3
