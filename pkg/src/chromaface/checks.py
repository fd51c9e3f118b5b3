"""Structural lemmas on critical graphs and edge-count bounds, as predicates.

Every check runs on any graph. The lemmas are theorems only for critical
inputs, so each report keeps hypothesis problems (evidence that the input
is not critical) apart from lemma violations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

import networkx as nx

from .corpus import to_networkx
from .embedding import avg_face_degree
from .graph import Graph, connectivity_level, neighborhood, petersen_graph, triangles_through_edge_avoiding


@dataclass
class CheckReport:
    lemma_id: str
    violations: list[tuple] = field(default_factory=list)
    hypothesis_violations: list[str] = field(default_factory=list)
    details: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "holds": self.holds,
            "violations": [list(v) for v in self.violations],
            "hypothesis_violations": self.hypothesis_violations,
            "details": self.details,
        }


def hypothesis_issues(g: Graph) -> list[str]:
    """Cheap necessary conditions for criticality that ``g`` fails."""
    issues = []
    if g.m == 0:
        return ["graph has no edges"]
    if connectivity_level(g) < 2:
        issues.append("not 2-connected")
    delta = g.max_degree
    low = [v for v in g.vertices() if g.degree(v) < 2]
    if low:
        issues.append(f"vertices of degree < 2: {low}")
    thin = [e for e in sorted(g.edges) if g.degree(e[0]) + g.degree(e[1]) < delta + 2]
    if thin:
        issues.append(f"edges with degree sum < Delta+2: {thin}")
    return issues


CRITICAL_ONLY = "asserted only for critical inputs"


def _report(lemma_id: str, g: Graph) -> CheckReport:
    return CheckReport(lemma_id, hypothesis_violations=hypothesis_issues(g), details=[CRITICAL_ONLY])


def check_lemma1(g: Graph) -> CheckReport:
    rep = _report("lemma1", g)
    delta = g.max_degree
    for v in g.vertices():
        if g.degree(v) < 2:
            rep.violations.append(("degree", v, g.degree(v)))
    for x, y in sorted(g.edges):
        s = g.degree(x) + g.degree(y)
        if s < delta + 2:
            rep.violations.append(("degree_sum", x, y, s))
    return rep


def check_val(g: Graph) -> CheckReport:
    """Adjacency lemma: N(x)-{y} holds at least Delta-d(y)+1 vertices of degree Delta."""
    rep = _report("val", g)
    delta = g.max_degree
    for a, b in sorted(g.edges):
        for x, y in ((a, b), (b, a)):
            have = sum(1 for w in g.neighbors(x) if w != y and g.degree(w) == delta)
            need = delta - g.degree(y) + 1
            if have < need:
                rep.violations.append((x, y, have, need))
    return rep


def check_zhang(g: Graph) -> CheckReport:
    """Second neighbourhood N(N(x,y)) is the union of N(w) over w in N(x,y)."""
    rep = _report("zhang", g)
    delta = g.max_degree
    for x, y in sorted(g.edges):
        if g.degree(x) + g.degree(y) != delta + 2:
            continue
        first = neighborhood(g, (x, y))
        second = neighborhood(g, first) - {x, y}
        for w in sorted(first - {x, y}):
            if g.degree(w) != delta:
                rep.violations.append(("item1", x, y, w))
        for w in sorted(second):
            if g.degree(w) < delta - 1:
                rep.violations.append(("item2", x, y, w))
        if g.degree(x) < delta and g.degree(y) < delta:
            for w in sorted(second):
                if g.degree(w) != delta:
                    rep.violations.append(("item3", x, y, w))
    return rep


def check_sz(g: Graph) -> CheckReport:
    """No triple x~y, x~z with d(z) < 2Delta-d(x)-d(y)+2 and xz in enough triangles avoiding y."""
    rep = _report("sz", g)
    delta = g.max_degree
    for x in g.vertices():
        for y, z in permutations(sorted(g.neighbors(x)), 2):
            if g.degree(z) >= 2 * delta - g.degree(x) - g.degree(y) + 2:
                continue
            need = g.degree(x) + g.degree(y) - delta - 2
            if triangles_through_edge_avoiding(g, (x, z), y) >= need:
                rep.violations.append((x, y, z))
    return rep


# edge counts

EDGE_BOUNDS: dict[int, list[tuple[str, Fraction, Fraction]]] = {
    # name, slope, intercept: |E| >= slope*|V| + intercept
    3: [("jakobsen", Fraction(4, 3), Fraction(0)), ("cranston_rabern", Fraction(50, 37), Fraction(0))],
    4: [("woodall", Fraction(12, 7), Fraction(0))],
    5: [("woodall", Fraction(15, 7), Fraction(0))],
    6: [("luo_miao_zhao", Fraction(5, 2), Fraction(3, 2))],
}


def is_petersen_minus_vertex(g: Graph) -> bool:
    if g.n != 9 or g.m != 12:
        return False
    return nx.is_isomorphic(to_networkx(g), to_networkx(petersen_graph().delete_vertex(1)))


def check_edge_bounds(g: Graph, k: int) -> CheckReport:
    if k not in EDGE_BOUNDS:
        raise ValueError(f"edge-count bounds are known for k in 3..6, got {k}")
    rep = _report(f"edge_bounds_k{k}", g)
    for name, slope, icpt in EDGE_BOUNDS[k]:
        if name == "cranston_rabern" and is_petersen_minus_vertex(g):
            rep.details.append(f"{name}: skipped (Petersen graph minus a vertex)")
            continue
        bound = slope * g.n + icpt
        ok = g.m >= bound
        rep.details.append(f"{name}: {g.m} >= {bound} {'ok' if ok else 'FAILS'}")
        if not ok:
            rep.violations.append((name, g.m, bound))
    return rep


GLOBAL_BOUNDS = {3: Fraction(8), 4: Fraction(24, 5), 5: Fraction(15, 4), 6: Fraction(10, 3)}


def check_global_bound(g: Graph, k: int) -> CheckReport:
    if k not in GLOBAL_BOUNDS:
        raise ValueError(f"average face-degree bounds are known for k in 3..6, got {k}")
    rep = _report(f"global_bound_k{k}", g)
    fbar = avg_face_degree(g)
    bound = GLOBAL_BOUNDS[k]
    ok = fbar < bound
    rep.details.append(f"avg face degree {fbar} < {bound} {'ok' if ok else 'FAILS'}")
    if not ok:
        rep.violations.append(("avg_face_degree", fbar, bound))
    return rep


def lemma_suite(g: Graph) -> list[CheckReport]:
    return [check_lemma1(g), check_val(g), check_zhang(g), check_sz(g)]


def all_checks(g: Graph, k: int | None = None) -> list[CheckReport]:
    k = g.max_degree if k is None else k
    reps = lemma_suite(g)
    if k in EDGE_BOUNDS:
        reps.append(check_edge_bounds(g, k))
        reps.append(check_global_bound(g, k))
    return reps


# known bounds on the suprema over k-critical planar graphs

@dataclass(frozen=True)
class BoundRow:
    k: int
    avg_lower: Fraction | None
    avg_upper: Fraction | None
    avg_unbounded: bool = False
    avg_refined_upper: Fraction | None = None
    local_lower: Fraction | None = None
    local_upper: Fraction | None = None
    local_unbounded: bool = False
    conditional: bool = False

    def cells(self) -> tuple[str, str]:
        def rng(lo, hi, unbounded, refined=None):
            if unbounded:
                return "inf"
            s = f"{lo if lo is not None else '?'} <= b <= {hi}"
            if refined is not None:
                s += f" (refined: b < {refined})"
            return s

        avg = rng(self.avg_lower, self.avg_upper, self.avg_unbounded, self.avg_refined_upper)
        loc = rng(self.local_lower, self.local_upper, self.local_unbounded)
        if self.conditional:
            avg += " if it exists"
            loc += " if it exists"
        return avg, loc


def bounds_table() -> list[BoundRow]:
    F = Fraction
    return [
        BoundRow(2, None, None, avg_unbounded=True, local_unbounded=True),
        BoundRow(3, F(6), F(8), avg_refined_upper=F(100, 13), local_unbounded=True),
        BoundRow(4, F(4), F(24, 5), local_unbounded=True),
        BoundRow(5, F(10, 3), F(15, 4), local_lower=F(16, 5), local_upper=F(15, 2)),
        BoundRow(6, None, F(10, 3), local_upper=F(17, 5), conditional=True),
    ]
