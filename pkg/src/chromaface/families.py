"""Planar critical families: odd cycles, subdivided prisms G_n, subdivided
quartic graphs H_n and the 5-regular nested-circuit graphs T_m.

Each generator returns plane graphs whose rotation systems are read off a
drawing with concentric circuits, so no planarity search is involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .coloring import EdgeColoring, is_proper, k_colorable
from .embedding import PlaneGraph
from .graph import Edge, Graph, GraphError, norm_edge, subdivide_edge

Family = Literal["odd_cycle", "G", "H", "T"]


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    parameter: int

    def __post_init__(self) -> None:
        p = self.parameter
        if self.family == "odd_cycle" and (p < 3 or p % 2 == 0):
            raise GraphError(f"odd cycle needs an odd length >= 3, got {p}")
        if self.family in ("G", "H") and p < 3:
            raise GraphError(f"{self.family}_n needs n >= 3, got {p}")
        if self.family == "T" and p < 4:
            raise GraphError(f"T_m needs m >= 4, got {p}")


def _ring_rotation(
    edges: list[Edge],
    ring: dict[int, int],
    angle: dict[int, Fraction],
    cyc_next: dict[int, int],
) -> dict[int, tuple[int, ...]]:
    """Counterclockwise rotations for a drawing on concentric circles.

    Around a vertex the order is: its successor on its own circle, inner
    neighbours from largest to smallest angular offset, its predecessor,
    then outer neighbours from smallest to largest offset.
    """
    cyc_prev = {b: a for a, b in cyc_next.items()}
    inner: dict[int, list[int]] = {v: [] for v in ring}
    outer: dict[int, list[int]] = {v: [] for v in ring}
    for a, b in edges:
        if ring[a] == ring[b]:
            continue
        lo, hi = (a, b) if ring[a] < ring[b] else (b, a)
        outer[lo].append(hi)
        inner[hi].append(lo)

    def offset(v: int, w: int) -> Fraction:
        d = (angle[w] - angle[v] + Fraction(1, 2)) % 1
        return d - Fraction(1, 2)

    rot = {}
    for v in ring:
        ins = sorted(inner[v], key=lambda w: offset(v, w), reverse=True)
        outs = sorted(outer[v], key=lambda w: offset(v, w))
        rot[v] = (cyc_next[v], *ins, cyc_prev[v], *outs)
    return rot


def _subdivide_plane(pg: PlaneGraph, e: Edge) -> PlaneGraph:
    a, b = norm_edge(*e)
    g2 = subdivide_edge(pg.graph, (a, b))
    w = g2.n
    rot = dict(pg.rotation)
    rot[a] = tuple(w if x == b else x for x in rot[a])
    rot[b] = tuple(w if x == a else x for x in rot[b])
    rot[w] = (a, b)
    return PlaneGraph(g2, rot)


# odd cycles

def gen_odd_cycle(n: int) -> tuple[Graph, PlaneGraph]:
    FamilySpec("odd_cycle", n)
    g = Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])
    rot = {i: ((i - 2) % n + 1, i % n + 1) for i in range(1, n + 1)}
    return g, PlaneGraph(g, rot)


# prisms and their quartic extensions

def _x(i: int, n: int) -> int:
    return i % n + 1


def _y(i: int, n: int) -> int:
    return n + i % n + 1


def _two_ring(n: int, chords: bool) -> PlaneGraph:
    edges: list[Edge] = []
    for i in range(n):
        edges += [(_x(i, n), _x(i + 1, n)), (_y(i, n), _y(i + 1, n)), (_x(i, n), _y(i, n))]
        if chords:
            edges.append((_x(i, n), _y(i + 1, n)))
    g = Graph(2 * n, edges)
    ring = {**{_x(i, n): 1 for i in range(n)}, **{_y(i, n): 0 for i in range(n)}}
    angle = {**{_x(i, n): Fraction(i, n) for i in range(n)}, **{_y(i, n): Fraction(i, n) for i in range(n)}}
    nxt = {**{_x(i, n): _x(i + 1, n) for i in range(n)}, **{_y(i, n): _y(i + 1, n) for i in range(n)}}
    return PlaneGraph(g, _ring_rotation(edges, ring, angle, nxt))


def prism_labels(n: int) -> dict[int, str]:
    labels = {_x(i, n): f"x{i}" for i in range(n)}
    labels.update({_y(i, n): f"y{i}" for i in range(n)})
    labels[2 * n + 1] = "u"
    return labels


def subdivided_edge_GH(n: int) -> Edge:
    """The circuit edge x_1 x_2 subdivided to build G_n and H_n."""
    return norm_edge(_x(1, n), _x(2, n))


def gen_prism_G(n: int) -> tuple[PlaneGraph, PlaneGraph]:
    FamilySpec("G", n)
    cubic = _two_ring(n, chords=False)
    return cubic, _subdivide_plane(cubic, subdivided_edge_GH(n))


def gen_quartic_H(n: int) -> tuple[PlaneGraph, PlaneGraph]:
    FamilySpec("H", n)
    quartic = _two_ring(n, chords=True)
    return quartic, _subdivide_plane(quartic, subdivided_edge_GH(n))


# T_m

class TIndex:
    """Vertex ids for the circuits C_1..C_m of T (4, 8, ..., 8, 4 vertices)."""

    def __init__(self, m: int):
        self.m = m
        self.n = 8 * m - 8

    def length(self, i: int) -> int:
        return 4 if i in (1, self.m) else 8

    def __call__(self, i: int, j: int) -> int:
        L = self.length(i)
        j = (j - 1) % L + 1
        if i == 1:
            return j
        if i == self.m:
            return 4 + 8 * (self.m - 2) + j
        return 4 + 8 * (i - 2) + j

    def label(self, v: int) -> str:
        if v == self.n + 1:
            return "u"
        if v <= 4:
            return f"c1,{v}"
        if v > 4 + 8 * (self.m - 2):
            return f"c{self.m},{v - 4 - 8 * (self.m - 2)}"
        i, j = divmod(v - 5, 8)
        return f"c{i + 2},{j + 1}"


@dataclass
class CertificateBundle:
    m: int
    matchings: dict[str, frozenset[Edge]]
    special_edges: dict[str, Edge]
    circuit_unions: dict[str, frozenset[Edge]]
    labels: dict[int, str] = field(default_factory=dict)

    @property
    def subdivided(self) -> Edge:
        return self.special_edges["e1"]


def _t_edges(m: int) -> tuple[list[Edge], list[list[int]]]:
    c = TIndex(m)
    circuits = [[c(i, j) for j in range(1, c.length(i) + 1)] for i in range(1, m + 1)]
    edges: list[Edge] = []
    for cyc in circuits:
        edges += [(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc))]
    for j in range(1, 5):
        edges += [(c(1, j), c(2, 2 * j - 1)), (c(1, j), c(2, 2 * j)), (c(1, j), c(2, 2 * j + 1))]
    for i in range(2, m - 1):
        edges += [(c(i, j), c(i + 1, j)) for j in range(1, 9)]
        edges += [(c(i, j), c(i + 1, j + 1)) for j in (2, 4, 6, 8)]
    for j in range(1, 5):
        edges += [(c(m - 1, 2 * j - 2), c(m, j)), (c(m - 1, 2 * j - 1), c(m, j)), (c(m - 1, 2 * j), c(m, j))]
    return edges, circuits


def _even_cycles(edge_set: frozenset[Edge]) -> list[list[Edge]]:
    """Split a 2-regular edge set into circuits, each as an edge sequence."""
    adj: dict[int, list[int]] = {}
    for a, b in edge_set:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen: set[int] = set()
    cycles = []
    for start in sorted(adj):
        if start in seen:
            continue
        cyc: list[Edge] = []
        prev, cur = None, start
        while True:
            seen.add(cur)
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            if prev is None:
                nxt = min(adj[cur])
            cyc.append(norm_edge(cur, nxt))
            prev, cur = cur, nxt
            if cur == start:
                break
        cycles.append(cyc)
    return cycles


def _build_certificates(m: int, edges: list[Edge], circuits: list[list[int]]) -> CertificateBundle:
    c = TIndex(m)
    M1: set[Edge] = set()
    M2: set[Edge] = set()
    for i, cyc in enumerate(circuits, start=1):
        L = len(cyc)
        first = 0 if i in (1, m) else 1  # c_{i,1}c_{i,2} or c_{i,2}c_{i,3}
        for k in range(L):
            e = norm_edge(cyc[k], cyc[(k + 1) % L])
            (M1 if (k - first) % 2 == 0 else M2).add(e)
    M3 = {norm_edge(c(1, j), c(2, 2 * j + 1)) for j in range(1, 5)}
    M3 |= {norm_edge(c(i, 2 * j), c(i + 1, 2 * j + 1)) for i in range(2, m - 1) for j in range(1, 5)}
    M3 |= {norm_edge(c(m - 1, 2 * j - 2), c(m, j)) for j in range(1, 5)}
    all_edges = {norm_edge(*e) for e in edges}
    rest = frozenset(all_edges - M1 - M2 - M3)
    seeds = {norm_edge(c(1, j), c(2, 2 * j)) for j in range(1, 5)}
    M4: set[Edge] = set()
    M5: set[Edge] = set()
    for cyc in _even_cycles(rest):
        pos = next((k for k, e in enumerate(cyc) if e in seeds), None)
        if pos is None:
            pos = cyc.index(min(cyc))
        for k, e in enumerate(cyc):
            (M4 if (k - pos) % 2 == 0 else M5).add(e)
    e = {f"e{i}": norm_edge(c(m, i), c(m, i + 1)) for i in range(1, 5)}
    M2p = (M2 | {e["e1"], e["e3"]}) - {e["e2"], e["e4"]}
    matchings = {
        "M1": frozenset(M1), "M2": frozenset(M2), "M3": frozenset(M3),
        "M4": frozenset(M4), "M5": frozenset(M5), "M2'": frozenset(M2p),
    }
    unions = {
        "A1": frozenset(M1 | M3),
        "A2": frozenset(M2p | M4),
        "A3": frozenset(M2p | M5),
    }
    labels = {v: c.label(v) for v in range(1, c.n + 2)}
    return CertificateBundle(m, matchings, e, unions, labels)


def gen_quintic_T(m: int) -> tuple[PlaneGraph, PlaneGraph, CertificateBundle]:
    FamilySpec("T", m)
    c = TIndex(m)
    edges, circuits = _t_edges(m)
    g = Graph(c.n, edges)
    ring, angle, nxt = {}, {}, {}
    for i, cyc in enumerate(circuits, start=1):
        L = len(cyc)
        for j, v in enumerate(cyc, start=1):
            ring[v] = i
            nxt[v] = cyc[j % L]
            if i == 1:
                angle[v] = Fraction(2 * j - 1, 8)
            elif i == m:
                angle[v] = Fraction(2 * j - 2, 8)
            else:
                angle[v] = Fraction(j - 1, 8)
    regular = PlaneGraph(g, _ring_rotation(edges, ring, angle, nxt))
    certs = _build_certificates(m, edges, circuits)
    return regular, _subdivide_plane(regular, certs.subdivided), certs


# certificates

@dataclass
class CertificateReport:
    checks: dict[str, bool]
    hamiltonian: dict[str, bool]
    cycle_lengths: dict[str, list[int]]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def _is_perfect_matching(edges: frozenset[Edge], n: int) -> bool:
    covered = [v for e in edges for v in e]
    return len(covered) == n and len(set(covered)) == n


def validate_certificates(certs: CertificateBundle, regular: Graph) -> CertificateReport:
    E = regular.edges
    ms = certs.matchings
    names = ["M1", "M2", "M3", "M4", "M5"]
    checks: dict[str, bool] = {}
    for name in names + ["M2'"]:
        checks[f"{name} perfect matching"] = ms[name] <= E and _is_perfect_matching(ms[name], regular.n)
    disjoint = all(not (ms[a] & ms[b]) for i, a in enumerate(names) for b in names[i + 1:])
    checks["M1..M5 pairwise disjoint"] = disjoint
    checks["M1..M5 cover E(T)"] = frozenset().union(*(ms[a] for a in names)) == E
    sp = certs.special_edges
    checks["M1 holds c_{i,1}c_{i,2} / c_{i,2}c_{i,3}"] = _m1_representatives(certs) <= ms["M1"]
    c = TIndex(certs.m)
    checks["M4 holds c_{1,j}c_{2,2j}"] = all(norm_edge(c(1, j), c(2, 2 * j)) in ms["M4"] for j in range(1, 5))
    A = certs.circuit_unions
    checks["e1 in A1 & A2 & A3"] = all(sp["e1"] in A[k] for k in A)
    checks["A1 | A2 | A3 = E(T) - {e2,e4}"] = A["A1"] | A["A2"] | A["A3"] == E - {sp["e2"], sp["e4"]}
    hamiltonian: dict[str, bool] = {}
    lengths: dict[str, list[int]] = {}
    for k, a in A.items():
        degs: dict[int, int] = {}
        for x, y in a:
            degs[x] = degs.get(x, 0) + 1
            degs[y] = degs.get(y, 0) + 1
        two_regular = len(degs) == regular.n and set(degs.values()) == {2}
        checks[f"{k} 2-regular"] = two_regular
        cyc = _even_cycles(a) if two_regular else []
        lengths[k] = sorted(len(x) for x in cyc)
        hamiltonian[k] = lengths[k] == [regular.n]
    return CertificateReport(checks, hamiltonian, lengths)


def _m1_representatives(certs: CertificateBundle) -> frozenset[Edge]:
    c = TIndex(certs.m)
    reps = {norm_edge(c(i, 1), c(i, 2)) for i in (1, certs.m)}
    reps |= {norm_edge(c(i, 2), c(i, 3)) for i in range(2, certs.m)}
    return frozenset(reps)


def _lift_to_subdivided(edges: frozenset[Edge], e1: Edge, u: int) -> set[Edge]:
    out = set(edges)
    if e1 in out:
        out.discard(e1)
        out |= {norm_edge(e1[0], u), norm_edge(u, e1[1])}
    return out


def _two_color_components(edges: set[Edge]) -> dict[Edge, int] | None:
    """Alternate two colours along paths and even circuits; ``None`` on an odd circuit."""
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if any(len(x) > 2 for x in adj.values()):
        return None
    color: dict[Edge, int] = {}
    done: set[int] = set()
    # paths first, from an endpoint, then circuits
    starts = sorted(v for v in adj if len(adj[v]) == 1) + sorted(adj)
    for s in starts:
        if s in done:
            continue
        prev, cur, col = None, s, 0
        while True:
            done.add(cur)
            nxts = [w for w in adj[cur] if w != prev and norm_edge(cur, w) not in color]
            if not nxts:
                break
            w = min(nxts)
            color[norm_edge(cur, w)] = col
            col ^= 1
            prev, cur = cur, w
        if len(adj[s]) == 2:
            # closed circuit: the closing edge must differ from the first
            first = [color[norm_edge(s, w)] for w in adj[s]]
            if first[0] == first[1]:
                return None
    return color


def certificate_coloring(
    tm: PlaneGraph | Graph, certs: CertificateBundle, h: Edge
) -> tuple[EdgeColoring, bool]:
    """Proper 5-edge-colouring of ``T_m - h`` from the matching decomposition.

    Returns the colouring and whether the backtracking fallback was needed.
    """
    g = tm.graph if isinstance(tm, PlaneGraph) else tm
    h = norm_edge(*h)
    if h not in g.edges:
        raise GraphError(f"{h} is not an edge of T_{certs.m}")
    u = g.n
    ms, sp, A = certs.matchings, certs.special_edges, certs.circuit_unions
    e1 = sp["e1"]
    h_T = e1 if u in h else h
    M1pp = (ms["M1"] | {sp["e2"], sp["e4"]}) - {e1, sp["e3"]}
    plans: list[tuple[frozenset[Edge], list[frozenset[Edge]]]]
    if h_T in (sp["e2"], sp["e4"]):
        plans = [(ms["M1"] | ms["M2"], [ms["M3"], ms["M4"], ms["M5"]])]
    else:
        plans = [
            (A["A1"], [ms["M2"], ms["M4"], ms["M5"]]),
            (A["A2"], [M1pp, ms["M3"], ms["M5"]]),
            (A["A3"], [M1pp, ms["M3"], ms["M4"]]),
        ]
        plans = [p for p in plans if h_T in p[0]]
    target = g.delete_edge(*h)
    for two_reg, rest in plans:
        lifted = _lift_to_subdivided(two_reg, e1, u) - {h}
        pair = _two_color_components(lifted)
        if pair is None:
            continue
        assignment = {e: col + 1 for e, col in pair.items()}
        for idx, mat in enumerate(rest, start=3):
            for e in mat:
                assignment[e] = idx
        coloring = EdgeColoring(assignment, 5)
        if set(assignment) == target.edges and is_proper(target, coloring):
            return coloring, False
    ok, witness = k_colorable(target, 5)
    if not ok or witness is None:
        raise GraphError(f"T_{certs.m} - {h} is not 5-edge-colourable")
    return witness, True
