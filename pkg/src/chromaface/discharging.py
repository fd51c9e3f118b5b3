"""Discharging rule engines for plane graphs of maximum degree 5 and 6.

Both engines apply their rules literally to any admissible plane graph and
return an exact ledger of every transfer. They check conservation; they do
not claim final charges are non-negative, which only follows for
hypothetical critical inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .embedding import PlaneGraph, local_min

Element = tuple[str, int]  # ("v", vertex id) or ("f", face index)
RuleSetId = Literal["delta5", "delta6"]
VertexClass6 = Literal["heavy", "bad_light", "good_light", "neither"]


class DischargingError(ValueError):
    pass


@dataclass(frozen=True)
class Transfer:
    sender: Element
    receiver: Element
    amount: Fraction
    rule: str


@dataclass(frozen=True)
class RuleSet:
    id: RuleSetId
    r: Fraction | None = None

    def __post_init__(self) -> None:
        if self.id == "delta5" and self.r is not None and self.r <= 3:
            raise DischargingError(f"delta5 needs r > 3, got {self.r}")


@dataclass
class ChargeLedger:
    ruleset: RuleSet
    initial: dict[Element, Fraction]
    transfers: list[Transfer] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    classes: dict[int, VertexClass6] = field(default_factory=dict)

    @property
    def final(self) -> dict[Element, Fraction]:
        out = dict(self.initial)
        for t in self.transfers:
            out[t.sender] -= t.amount
            out[t.receiver] += t.amount
        return out

    def inflow(self, x: Element) -> Fraction:
        return sum((t.amount for t in self.transfers if t.receiver == x), Fraction(0))

    def outflow(self, x: Element) -> Fraction:
        return sum((t.amount for t in self.transfers if t.sender == x), Fraction(0))

    @property
    def total_initial(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    @property
    def total_final(self) -> Fraction:
        return sum(self.final.values(), Fraction(0))

    def conserved(self) -> bool:
        return self.total_initial == self.total_final

    def balanced(self) -> bool:
        fin = self.final
        return all(fin[x] == self.initial[x] + self.inflow(x) - self.outflow(x) for x in self.initial)


def _vid(v: int) -> Element:
    return ("v", v)


def _fid(i: int) -> Element:
    return ("f", i)


def init_charges(pg: PlaneGraph, rs: RuleSet | RuleSetId) -> ChargeLedger:
    rs = RuleSet(rs) if isinstance(rs, str) else rs
    g = pg.graph
    ch: dict[Element, Fraction] = {}
    if rs.id == "delta5":
        for v in g.vertices():
            ch[_vid(v)] = Fraction(g.degree(v) - 4)
        for i, f in enumerate(pg.faces):
            ch[_fid(i)] = Fraction(f.degree - 4)
        total = sum(ch.values())
        if total != -8:
            raise DischargingError(f"initial charge sums to {total}, expected -8")
    else:
        for v in g.vertices():
            ch[_vid(v)] = Fraction(-1)
        for i, f in enumerate(pg.faces):
            ch[_fid(i)] = Fraction(2 * f.degree - 6)
    return ChargeLedger(rs, ch)


def _sorted_log(transfers: list[Transfer]) -> list[Transfer]:
    return sorted(transfers, key=lambda t: (t.rule, t.sender, t.receiver))


# maximum degree 5

def r2_amount(rule: str, r: Fraction, n: int | None = None) -> Fraction:
    """Amount a 5-vertex sends under the R2 sub-rules."""
    c2 = math.ceil(2 * r) - 3
    c3 = math.ceil(3 * r) - 6
    if rule == "R2.1":
        return Fraction(2, 3) + Fraction(2, c2)
    if rule == "R2.2.1":
        return Fraction(1, 3) + Fraction(2, c3)
    if rule == "R2.2.2":
        return Fraction(2, 9) + Fraction(4, 3 * c3)
    if rule == "R2.3":
        if n is None or not 2 <= n <= 4:
            raise DischargingError(f"R2.3 needs 2 <= n <= 4, got {n}")
        return Fraction(4, n * (math.ceil(4 * r) - 9))
    if rule == "R2.4":
        return Fraction(1, 3) * (Fraction(4, math.ceil(5 * r) - 12) + Fraction(2, c2))
    raise KeyError(rule)


def apply_delta5(pg: PlaneGraph, r: Fraction | None = None) -> ChargeLedger:
    g = pg.graph
    if g.max_degree > 5:
        raise DischargingError(f"delta5 rules need maximum degree <= 5, got {g.max_degree}")
    r = local_min(pg) if r is None else Fraction(r)
    if r <= 3:
        raise DischargingError(f"delta5 needs r > 3, got {r}")
    ledger = init_charges(pg, RuleSet("delta5", r))
    out: list[Transfer] = []
    for i, f in enumerate(pg.faces):
        amount = Fraction(f.degree - 4, f.degree)
        for x in f.vertices:
            out.append(Transfer(_fid(i), _vid(x), amount, "R1"))

    deg = g.degree
    for y in g.vertices():
        if deg(y) != 5:
            continue
        nbrs = sorted(g.neighbors(y))
        for z in nbrs:
            d = deg(z)
            if d == 2:
                out.append(Transfer(_vid(y), _vid(z), r2_amount("R2.1", r), "R2.1"))
            elif d == 3:
                rule = "R2.2.1" if any(deg(t) == 4 for t in g.neighbors(z)) else "R2.2.2"
                out.append(Transfer(_vid(y), _vid(z), r2_amount(rule, r), rule))
            elif d == 4:
                n = sum(1 for t in g.neighbors(z) if deg(t) == 5)
                if not 2 <= n <= 4:
                    raise DischargingError(f"R2.3 undefined at vertex {z}: it has {n} neighbours of degree 5")
                out.append(Transfer(_vid(y), _vid(z), r2_amount("R2.3", r, n), "R2.3"))
        if all(deg(z) >= 4 for z in nbrs):
            for z in nbrs:
                if deg(z) == 5 and any(deg(t) == 2 for t in g.neighbors(z)):
                    out.append(Transfer(_vid(y), _vid(z), r2_amount("R2.4", r), "R2.4"))

    for v in g.vertices():
        fives = sum(1 for t in g.neighbors(v) if deg(t) == 5)
        if deg(v) == 2 and fives != 2:
            ledger.warnings.append(f"2-vertex {v} has {fives} neighbours of degree 5 (critical inputs have 2)")
        if deg(v) == 3 and fives != 2:
            ledger.warnings.append(f"3-vertex {v} receives R2.2 from {fives} senders (proof assumes 2)")
        if deg(v) <= 1:
            ledger.warnings.append(f"vertex {v} has degree {deg(v)}")
    ledger.transfers = _sorted_log(out)
    return ledger


# maximum degree 6

def classify_delta6(pg: PlaneGraph) -> dict[int, VertexClass6]:
    g = pg.graph
    cls: dict[int, VertexClass6] = {}
    light: set[int] = set()
    for v in g.vertices():
        fdeg = [pg.faces[i].degree for i in pg.vertex_faces(v)]
        d = g.degree(v)
        if d in (5, 6) and any(x in (4, 5) for x in fdeg):
            cls[v] = "heavy"
        elif 2 <= d <= 4 and all(x < 6 for x in fdeg) and sum(1 for x in fdeg if x >= 4) <= 1:
            light.add(v)
        else:
            cls[v] = "neither"
    for v in light:
        bad = any(g.degree(u) + g.degree(v) == 8 for u in g.neighbors(v))
        cls[v] = "bad_light" if bad else "good_light"
    return dict(sorted(cls.items()))


def apply_delta6(pg: PlaneGraph) -> ChargeLedger:
    g = pg.graph
    if g.max_degree > 6:
        raise DischargingError(f"delta6 rules need maximum degree <= 6, got {g.max_degree}")
    ledger = init_charges(pg, RuleSet("delta6"))
    cls = classify_delta6(pg)
    ledger.classes = cls
    out: list[Transfer] = []
    for i, f in enumerate(pg.faces):
        if f.degree >= 4:
            amount = Fraction(2 * f.degree - 6, f.degree)
            for x in f.vertices:
                out.append(Transfer(_fid(i), _vid(x), amount, "R1"))
    for v, c in cls.items():
        if c != "heavy":
            continue
        for u in sorted(g.neighbors(v)):
            if cls[u] == "bad_light":
                out.append(Transfer(_vid(v), _vid(u), Fraction(3, 10), "R2"))
            elif cls[u] == "good_light":
                out.append(Transfer(_vid(v), _vid(u), Fraction(1, 10), "R2"))
    ledger.transfers = _sorted_log(out)
    return ledger


def delta6_star_value(pg: PlaneGraph) -> Fraction:
    """``-|V| + sum over faces of (2 d(f) - 6)``; at most -15 for 6-critical graphs."""
    return Fraction(-pg.graph.n + sum(2 * f.degree - 6 for f in pg.faces))


# supporting inequalities

def claim1_supported(k: int, r: Fraction) -> bool:
    return 2 <= k <= 5 and r >= Fraction(15, 2)


def claim1_lower_bound(k: int, r: Fraction, at_most_two_triangles: bool = False) -> Fraction:
    """Least total a k-vertex can receive from its faces under R1.

    Valid as a bound when :func:`claim1_supported` holds; the formula is
    evaluated regardless.
    """
    if not 2 <= k <= 5:
        raise ValueError(f"k must lie in 2..5, got {k}")
    ceil_rk = math.ceil(Fraction(r) * k)
    if at_most_two_triangles:
        denom = ceil_rk - 4 * k + 6
        base = Fraction(1, 3)
    else:
        denom = ceil_rk - 3 * k + 3
        base = Fraction(4 - k, 3)
    if denom <= 0:
        raise ValueError(f"denominator {denom} is not positive at k={k}, r={r}")
    return base - Fraction(4, denom)


def claim2_value(r: Fraction) -> Fraction:
    r = Fraction(r)
    return 2 * r * r - 15 * r + 23


def claim2_inequality(r: Fraction) -> bool:
    if r <= 0:
        raise ValueError("r must be positive")
    return claim2_value(r) >= 0


# reporting

def _element_class(pg: PlaneGraph, x: Element) -> str:
    kind, i = x
    if kind == "v":
        return f"vertex:d={pg.graph.degree(i)}"
    return f"face:d={pg.faces[i].degree}"


def ledger_report(pg: PlaneGraph, ledger: ChargeLedger, with_log: bool = False) -> dict:
    fin = ledger.final
    per_class: dict[str, Fraction] = {}
    for x, val in fin.items():
        key = _element_class(pg, x)
        per_class[key] = min(per_class.get(key, val), val)
    report: dict = {
        "ruleset": ledger.ruleset.id,
        "total_initial": ledger.total_initial,
        "total_final": ledger.total_final,
        "conserved": ledger.conserved(),
        "min_final_by_class": dict(sorted(per_class.items())),
        "negative_final": [f"{k}{i}" for (k, i), v in sorted(fin.items()) if v < 0],
        "warnings": list(ledger.warnings),
    }
    if ledger.ruleset.id == "delta5":
        report["r"] = ledger.ruleset.r
        report["faces_final_zero"] = all(v == 0 for (k, _), v in fin.items() if k == "f")
    else:
        report["faces4plus_final_zero"] = all(
            fin[("f", i)] == 0 for i, f in enumerate(pg.faces) if f.degree >= 4
        )
        report["star_value"] = delta6_star_value(pg)
        counts: dict[str, int] = {}
        for c in ledger.classes.values():
            counts[c] = counts.get(c, 0) + 1
        report["vertex_classes"] = dict(sorted(counts.items()))
    if with_log:
        report["log"] = [
            {"rule": t.rule, "from": f"{t.sender[0]}{t.sender[1]}", "to": f"{t.receiver[0]}{t.receiver[1]}", "amount": t.amount}
            for t in ledger.transfers
        ]
    return report
