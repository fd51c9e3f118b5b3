"""Reproduction checks for the family constructions, parameters and audits.

Each criterion returns a :class:`CriterionResult`; ``chromaface repro`` and
``tests/test_acceptance.py`` both run them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .checks import check_edge_bounds, check_global_bound, lemma_suite
from .coloring import brute_force_chromatic_index, chromatic_index, criticality_report, is_proper
from .corpus import atlas_graphs
from .discharging import (
    apply_delta5,
    apply_delta6,
    claim1_lower_bound,
    claim2_inequality,
    claim2_value,
    delta6_star_value,
)
from .embedding import (
    PlaneGraph,
    avg_face_degree,
    enumerate_planar_embeddings,
    find_spread_witness,
    local_min,
    max_local_face_average,
)
from .families import (
    certificate_coloring,
    gen_odd_cycle,
    gen_prism_G,
    gen_quartic_H,
    gen_quintic_T,
    validate_certificates,
)
from .graph import Graph

F = Fraction


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool = True
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def expect(self, ok: bool, what: str) -> None:
        if not ok:
            self.passed = False
            self.failures.append(what)

    def within(self, seconds: float, limit: float, what: str) -> None:
        self.expect(seconds < limit, f"{what} took {seconds:.2f}s (limit {limit}s)")

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "; ".join(self.failures[:3] + self.notes[:2])
        return f"[{status}] {self.number:>2}. {self.title} ({self.seconds:.2f}s){': ' + extra if extra else ''}"


def _timed(fn: Callable[[CriterionResult], None], number: int, title: str) -> CriterionResult:
    res = CriterionResult(number, title)
    t0 = time.perf_counter()
    fn(res)
    res.seconds = time.perf_counter() - t0
    return res


def _overfull_equality(g: Graph) -> bool:
    return g.n % 2 == 1 and g.m == g.max_degree * (g.n // 2) + 1


# 1

def _closed_forms(res: CriterionResult) -> None:
    t0 = time.perf_counter()
    for n in range(3, 11):
        for name, gen, fbar, faces, total in (
            ("G", gen_prism_G, 6 - F(10, n + 2), n + 2, 6 * n + 2),
            ("H", gen_quartic_H, 4 - F(3, n + 1), 2 * n + 2, 8 * n + 2),
        ):
            pg = gen(n)[1]
            res.expect(avg_face_degree(pg.graph) == fbar, f"F({name}_{n}) = {avg_face_degree(pg.graph)} != {fbar}")
            res.expect(pg.face_average() == fbar, f"traced face average of {name}_{n} differs")
            res.expect(len(pg.faces) == faces, f"|F({name}_{n})| = {len(pg.faces)} != {faces}")
            res.expect(sum(pg.face_degrees()) == total, f"sum of face degrees of {name}_{n} != {total}")
    for m in (4, 5, 6):
        pg = gen_quintic_T(m)[1]
        fbar = F(10, 3) - F(7, 18 * m - 15)
        res.expect(avg_face_degree(pg.graph) == fbar, f"F(T_{m}) != {fbar}")
        res.expect(pg.face_average() == fbar, f"traced face average of T_{m} differs")
        res.expect(len(pg.faces) == 12 * m - 10, f"|F(T_{m})| != {12 * m - 10}")
        res.expect(sum(pg.face_degrees()) == 40 * m - 38, f"sum of face degrees of T_{m} != {40 * m - 38}")
    res.within(time.perf_counter() - t0, 1.0, "closed forms")


# 2

def _local_parameters(res: CriterionResult) -> None:
    t0 = time.perf_counter()
    for n in range(3, 9):
        for name, gen, want in (("cubic", gen_prism_G, F(n + 8, 3)), ("quartic", gen_quartic_H, F(n + 9, 4))):
            pg = gen(n)[0]
            value, status = max_local_face_average(pg.graph, rotation=pg.rotation)
            res.expect((value, status) == (want, "exact"), f"F*({name} n={n}) = {value} [{status}], want {want}")
    for m in (4, 5, 6):
        value = local_min(gen_quintic_T(m)[1])
        res.expect(value == F(16, 5), f"local min of T_{m} = {value}")
    t1 = time.perf_counter()
    for n in range(3, 6):
        for name, gen, want in (("cubic", gen_prism_G, F(n + 8, 3)), ("quartic", gen_quartic_H, F(n + 9, 4))):
            g = gen(n)[0].graph
            values = [local_min(PlaneGraph(g, r)) for r in enumerate_planar_embeddings(g, budget=10**9)]
            res.expect(len(values) == 2, f"{name} n={n} has {len(values)} plane embeddings, want 2")
            res.expect(max(values, default=None) == want, f"enumerated F*({name} n={n}) = {max(values, default=None)}")
    res.notes.append(f"enumeration cross-check {time.perf_counter() - t1:.2f}s")
    res.within(time.perf_counter() - t0, 1.0, "shortcut values with cross-check")


# 3

def _criticality(res: CriterionResult) -> None:
    t0 = time.perf_counter()
    for n in (3, 5, 7, 9, 11):
        rep = criticality_report(gen_odd_cycle(n)[0])
        res.expect(rep.critical, f"C_{n} not critical")
    res.within(time.perf_counter() - t0, 1.0, "odd cycles")
    for name, gen, ns, limit in (("G", gen_prism_G, range(3, 7), 10.0), ("H", gen_quartic_H, range(3, 6), 60.0)):
        for n in ns:
            t = time.perf_counter()
            rep = criticality_report(gen(n)[1].graph)
            res.expect(rep.critical, f"{name}_{n} not critical")
            res.within(time.perf_counter() - t, limit, f"{name}_{n}")
    t = time.perf_counter()
    g = gen_quintic_T(4)[1].graph
    decision = chromatic_index(g)
    res.expect(decision.chromatic_index == 6, f"chi'(T_4) = {decision.chromatic_index}")
    rep = criticality_report(g, stop_early=False)
    res.expect(rep.deletions_colorable == 61 == rep.deletions_total, f"T_4: {rep.deletions_colorable}/{rep.deletions_total}")
    res.within(time.perf_counter() - t, 120.0, "T_4")
    res.notes.append(f"T_4: {rep.deletions_colorable}/{rep.deletions_total} deletions 5-colourable")


# 4

def _overfullness(res: CriterionResult) -> None:
    t0 = time.perf_counter()
    for n in range(3, 9):
        for name, gen in (("G", gen_prism_G), ("H", gen_quartic_H)):
            g = gen(n)[1].graph
            res.expect(_overfull_equality(g), f"{name}_{n}: |E|={g.m}, |V|={g.n}, Delta={g.max_degree}")
    for m in (4, 5, 6):
        g = gen_quintic_T(m)[1].graph
        res.expect(_overfull_equality(g), f"T_{m}: |E|={g.m}, |V|={g.n}")
    res.within(time.perf_counter() - t0, 1.0, "overfullness")


# 5

def _certificates(res: CriterionResult) -> None:
    fallbacks = 0
    for m in (4, 5):
        regular, tm, certs = gen_quintic_T(m)
        report = validate_certificates(certs, regular.graph)
        res.expect(report.ok, f"m={m}: {report.failures()}")
        for h in sorted(tm.graph.edges):
            coloring, fell_back = certificate_coloring(tm, certs, h)
            fallbacks += fell_back
            target = tm.graph.delete_edge(*h)
            res.expect(
                is_proper(target, coloring) and set(coloring.assignment) == target.edges and coloring.k == 5,
                f"m={m}, h={h}: colouring not a proper total 5-colouring",
            )
    res.notes.append(f"fallbacks: {fallbacks}")


# 6

def _discharging(res: CriterionResult) -> None:
    cases: list[tuple[str, PlaneGraph]] = [(f"T_{m}", gen_quintic_T(m)[1]) for m in (4, 5, 6)]
    for n in range(3, 9):
        cases += [(f"G_{n}", gen_prism_G(n)[1]), (f"H_{n}", gen_quartic_H(n)[1])]
    for name, pg in cases:
        lm = local_min(pg)
        r = lm if lm > 3 else F(15, 2)
        l5 = apply_delta5(pg, r)
        res.expect(l5.conserved() and l5.balanced(), f"{name}: delta5 not conserved")
        res.expect(all(v == 0 for (k, _), v in l5.final.items() if k == "f"), f"{name}: delta5 face charge non-zero")
        l6 = apply_delta6(pg)
        res.expect(l6.conserved() and l6.balanced(), f"{name}: delta6 not conserved")
        fin = l6.final
        res.expect(
            all(fin[("f", i)] == 0 for i, f in enumerate(pg.faces) if f.degree >= 4),
            f"{name}: delta6 4+-face charge non-zero",
        )
    star = delta6_star_value(gen_quintic_T(4)[1])
    res.expect(star == -9, f"star value of T_4 = {star}")


# 7

def _inequalities(res: CriterionResult) -> None:
    stated = [(F(5), False, None), (F(27, 5), True, F(8, 25)), (F(15, 2), True, F(23, 2))]
    for r, want, value in stated:
        res.expect(claim2_inequality(r) is want, f"claim2({r}) should be {want}")
        if value is not None:
            got = claim2_value(r)
            res.expect(got == value, f"2r^2-15r+23 at r={r} is {got}, criterion states {value}")
    for (k, r), want in {(2, F(8)): F(14, 39), (5, F(8)): F(-10, 21)}.items():
        got = claim1_lower_bound(k, r)
        res.expect(got == want, f"claim1({k}, {r}) = {got}, want {want}")


# 8, 9

def _critical_instances() -> list[tuple[str, Graph]]:
    out = [(f"C_{n}", gen_odd_cycle(n)[0]) for n in (3, 5, 7, 9, 11)]
    out += [(f"G_{n}", gen_prism_G(n)[1].graph) for n in range(3, 7)]
    out += [(f"H_{n}", gen_quartic_H(n)[1].graph) for n in range(3, 6)]
    out.append(("T_4", gen_quintic_T(4)[1].graph))
    return out


def negative_control() -> Graph:
    """G_3 with a pendant vertex hung on x_0."""
    g = gen_prism_G(3)[1].graph
    return g.add_edges([(1, g.n + 1)], new_vertices=1)


def _lemma_suites(res: CriterionResult) -> None:
    for name, g in _critical_instances():
        res.expect(criticality_report(g).critical, f"{name} not confirmed critical")
        for rep in lemma_suite(g):
            res.expect(rep.holds, f"{name}: {rep.lemma_id} violations {rep.violations[:2]}")
    for rep in lemma_suite(negative_control()):
        res.expect(not rep.holds, f"negative control: {rep.lemma_id} found nothing")


def _bounds(res: CriterionResult) -> None:
    for name, g in _critical_instances():
        k = g.max_degree
        if k < 3:
            continue
        for rep in (check_edge_bounds(g, k), check_global_bound(g, k)):
            res.expect(rep.holds, f"{name}: {rep.lemma_id} {rep.violations}")
    t4 = gen_quintic_T(4)[1].graph
    res.expect(t4.m * 7 >= 15 * t4.n, "61*7 >= 15*25")
    fbar = avg_face_degree(t4)
    res.expect(fbar.numerator * 4 < 15 * fbar.denominator, "61*4 < 15*19")


# 10

def _oracle(res: CriterionResult) -> None:
    count = 0
    t0 = time.perf_counter()
    for g in atlas_graphs(7, max_edges=12):
        if g.m == 0:
            continue
        count += 1
        a = chromatic_index(g).chromatic_index
        b = brute_force_chromatic_index(g)
        res.expect(a == b, f"{sorted(g.edges)}: search {a}, brute force {b}")
    res.within(time.perf_counter() - t0, 600.0, "oracle corpus")
    res.notes.append(f"{count} graphs")


# 11

def _spread(res: CriterionResult) -> None:
    t0 = time.perf_counter()
    found = find_spread_witness(atlas_graphs(7))
    res.expect(found is not None, "no embedding-dependent graph on <= 7 vertices")
    if found is not None:
        g, lo, hi = found
        res.expect(lo < hi and g.n <= 8, "witness check")
        res.notes.append(f"witness n={g.n} edges={sorted(g.edges)} spread {lo}..{hi}")
    res.within(time.perf_counter() - t0, 300.0, "witness search")


CRITERIA: list[tuple[int, str, Callable[[CriterionResult], None]]] = [
    (1, "closed forms for G_n, H_n, T_m", _closed_forms),
    (2, "local face-degree parameters", _local_parameters),
    (3, "criticality of the families", _criticality),
    (4, "overfullness with equality", _overfullness),
    (5, "matching certificates and 5-colourings of T_m - h", _certificates),
    (6, "discharging audits", _discharging),
    (7, "supporting inequalities", _inequalities),
    (8, "lemma suites and negative control", _lemma_suites),
    (9, "edge-count and global bounds", _bounds),
    (10, "search vs brute-force chromatic index", _oracle),
    (11, "embedding dependence witness", _spread),
]


def run_criterion(number: int) -> CriterionResult:
    for num, title, fn in CRITERIA:
        if num == number:
            return _timed(fn, num, title)
    raise KeyError(number)


def run_all() -> list[CriterionResult]:
    return [_timed(fn, num, title) for num, title, fn in CRITERIA]
