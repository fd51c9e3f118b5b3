"""Edge colourings: exact k-colourability, Vizing's Delta+1 construction,
class decisions, criticality and overfullness."""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .graph import Edge, Graph, norm_edge

DEFAULT_NODE_BUDGET = 10**8


class SearchInconclusive(RuntimeError):
    """The backtracking node budget ran out before a decision."""


@dataclass(frozen=True)
class EdgeColoring:
    assignment: dict[Edge, int]
    k: int

    def color(self, u: int, v: int) -> int | None:
        return self.assignment.get(norm_edge(u, v))

    def colors_used(self) -> set[int]:
        return set(self.assignment.values())

    def classes(self) -> dict[int, list[Edge]]:
        out: dict[int, list[Edge]] = {}
        for e, c in sorted(self.assignment.items()):
            out.setdefault(c, []).append(e)
        return out


@dataclass(frozen=True)
class ClassDecision:
    chromatic_index: int
    class_label: Literal["class1", "class2"]
    witness: EdgeColoring


def is_proper(g: Graph, c: EdgeColoring) -> bool:
    seen: set[tuple[int, int]] = set()
    for (u, v), col in c.assignment.items():
        if (u, v) not in g.edges or not 1 <= col <= c.k:
            return False
        for x in (u, v):
            if (x, col) in seen:
                return False
            seen.add((x, col))
    return True


def is_total(g: Graph, c: EdgeColoring) -> bool:
    return set(c.assignment) == set(g.edges)


def is_overfull(g: Graph) -> bool:
    return g.n % 2 == 1 and g.m >= g.max_degree * (g.n // 2) + 1


def edge_order(g: Graph) -> list[Edge]:
    """Edges by decreasing endpoint-degree sum, ties lexicographic."""
    return sorted(g.edges, key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e))


def k_colorable(
    g: Graph,
    k: int,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
    capacity_bound: bool = True,
) -> tuple[bool, EdgeColoring | None]:
    """Decide whether ``g`` has a proper edge colouring with ``k`` colours.

    Backtracking picks the uncoloured edge with the fewest free colours
    (ties broken by :func:`edge_order`) and only opens a fresh colour when
    all lower ones are in use. With ``capacity_bound`` the search is skipped
    when |E| exceeds k * floor(|V|/2), since every colour class is a matching.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.m == 0:
        return True, EdgeColoring({}, k)
    if k < g.max_degree:
        return False, None
    if capacity_bound and g.m > k * (g.n // 2):
        return False, None

    order = edge_order(g)
    m = len(order)
    ends = [e for e in order]
    used = [0] * (g.n + 1)
    color = [0] * m
    full = (1 << k) - 1
    nodes = 0
    limit = sys.getrecursionlimit()
    if m + 50 > limit:
        sys.setrecursionlimit(m + 100)

    def search(colored: int, top: int) -> bool:
        nonlocal nodes
        if colored == m:
            return True
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SearchInconclusive(f"{k}-colourability undecided after {node_budget} nodes")
        allowed = full if top >= k else (1 << (top + 1)) - 1
        best, best_free, best_count = -1, 0, k + 1
        for i in range(m):
            if color[i]:
                continue
            u, v = ends[i]
            free = allowed & ~(used[u] | used[v])
            cnt = free.bit_count()
            if cnt < best_count:
                best, best_free, best_count = i, free, cnt
                if cnt <= 1:
                    break
        if best_count == 0:
            return False
        u, v = ends[best]
        free = best_free
        while free:
            bit = free & -free
            free ^= bit
            c = bit.bit_length()
            color[best] = c
            used[u] |= bit
            used[v] |= bit
            if search(colored + 1, max(top, c)):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
            color[best] = 0
        return False

    if not search(0, 0):
        return False, None
    return True, EdgeColoring({ends[i]: color[i] for i in range(m)}, k)


def vizing_plus_one_coloring(g: Graph) -> EdgeColoring:
    """Proper colouring with Delta+1 colours by fan rotation and path flips."""
    k = g.max_degree + 1
    col: dict[Edge, int] = {}
    at: list[dict[int, int]] = [{} for _ in range(g.n + 1)]

    def free(v: int) -> int:
        return next(c for c in range(1, k + 1) if c not in at[v])

    def paint(a: int, b: int, c: int) -> None:
        col[norm_edge(a, b)] = c
        at[a][c] = b
        at[b][c] = a

    def scrape(a: int, b: int) -> int:
        c = col.pop(norm_edge(a, b))
        del at[a][c]
        del at[b][c]
        return c

    def fan_ok(u: int, fan: list[int]) -> bool:
        return all(
            norm_edge(u, fan[j]) in col and col[norm_edge(u, fan[j])] not in at[fan[j - 1]]
            for j in range(1, len(fan))
        )

    for u, v in sorted(g.edges):
        fan = [v]
        in_fan = {v}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for c, x in sorted(at[u].items()):
                if x not in in_fan and c not in at[last]:
                    fan.append(x)
                    in_fan.add(x)
                    grown = True
                    break
        c, d = free(u), free(fan[-1])
        if c != d:
            path: list[tuple[int, int, int]] = []
            x, want = u, d
            while want in at[x]:
                y = at[x][want]
                path.append((x, y, want))
                x, want = y, (c if want == d else d)
            for a, b, _ in path:
                scrape(a, b)
            for a, b, was in path:
                paint(a, b, c if was == d else d)
        w = next(i for i in range(len(fan)) if d not in at[fan[i]] and fan_ok(u, fan[: i + 1]))
        for j in range(w):
            nxt = scrape(u, fan[j + 1])
            paint(u, fan[j], nxt)
        paint(u, fan[w], d)
    result = EdgeColoring(dict(col), k)
    assert is_proper(g, result) and is_total(g, result)
    return result


def chromatic_index(g: Graph, node_budget: int | None = DEFAULT_NODE_BUDGET) -> ClassDecision:
    if g.m == 0:
        raise ValueError("chromatic index needs at least one edge")
    delta = g.max_degree
    ok, witness = k_colorable(g, delta, node_budget)
    if ok and witness is not None:
        return ClassDecision(delta, "class1", witness)
    return ClassDecision(delta + 1, "class2", vizing_plus_one_coloring(g))


@dataclass(frozen=True)
class CriticalityReport:
    class2: bool
    deletions_total: int
    deletions_colorable: int
    failing_edge: Edge | None

    @property
    def critical(self) -> bool:
        return self.class2 and self.failing_edge is None and self.deletions_colorable == self.deletions_total


def _deletion_colorable(args: tuple[Graph, Edge, int, int | None]) -> bool:
    g, e, k, budget = args
    return k_colorable(g.delete_edge(*e), k, budget)[0]


def criticality_report(
    g: Graph,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
    workers: int = 1,
    stop_early: bool = True,
) -> CriticalityReport:
    """Class decision plus the single-edge-deletion sweep."""
    if g.m == 0:
        raise ValueError("criticality needs at least one edge")
    decision = chromatic_index(g, node_budget)
    edges = sorted(g.edges)
    if decision.class_label == "class1":
        return CriticalityReport(False, len(edges), 0, None)
    delta = g.max_degree
    tasks = [(g, e, delta, node_budget) for e in edges]
    good, failing = 0, None
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_deletion_colorable, tasks))
        for e, ok in zip(edges, results):
            if ok:
                good += 1
            elif failing is None:
                failing = e
    else:
        for e, task in zip(edges, tasks):
            if _deletion_colorable(task):
                good += 1
            else:
                failing = failing or e
                if stop_early:
                    break
    return CriticalityReport(True, len(edges), good, failing)


def is_critical(g: Graph, node_budget: int | None = DEFAULT_NODE_BUDGET, workers: int = 1) -> bool:
    return criticality_report(g, node_budget, workers).critical


def brute_force_chromatic_index(g: Graph) -> int:
    """Chromatic index by exhausting all partitions of E into matchings.

    Independent of :func:`k_colorable`; limited to 12 edges.
    """
    if g.m > 12:
        raise ValueError(f"brute force is limited to 12 edges, got {g.m}")
    if g.m == 0:
        return 0
    edges = sorted(g.edges)
    m = len(edges)
    matchings = []
    for mask in range(1, 1 << m):
        verts: list[int] = []
        for i in range(m):
            if mask >> i & 1:
                verts += edges[i]
        if len(verts) == len(set(verts)):
            matchings.append(mask)

    @lru_cache(maxsize=None)
    def cover(mask: int) -> int:
        if mask == 0:
            return 0
        low = mask & -mask
        return 1 + min(cover(mask & ~mm) for mm in matchings if mm & low and mm & mask == mm)

    return cover((1 << m) - 1)
