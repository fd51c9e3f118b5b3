"""Rotation systems, face tracing and face-degree parameters of plane graphs.

Face tracing convention: from the dart ``(u, v)`` the walk continues with
``(v, w)`` where ``w`` follows ``u`` in the cyclic rotation at ``v``.
Rotations are listed counterclockwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Iterator, Literal, Mapping

from .graph import Graph, connectivity_level, is_connected, suppress_degree_two

RotationSystem = dict[int, tuple[int, ...]]
Dart = tuple[int, int]
Status = Literal["exact", "lower_bound"]

DEFAULT_BUDGET = 10**6


class EmbeddingError(ValueError):
    """Invalid rotation system or an embedding of the wrong genus."""


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} rotation systems, budget is {budget}")
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class Face:
    darts: tuple[Dart, ...]

    @property
    def degree(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d[0] for d in self.darts)


def validate_rotation(g: Graph, rot: Mapping[int, Iterable[int]]) -> None:
    for v in g.vertices():
        if v not in rot:
            raise EmbeddingError(f"rotation missing vertex {v}")
        cyc = tuple(rot[v])
        if len(cyc) != len(set(cyc)) or set(cyc) != g.neighbors(v):
            raise EmbeddingError(f"rotation at vertex {v} is not a permutation of its neighbours")
    extra = set(rot) - set(g.vertices())
    if extra:
        raise EmbeddingError(f"rotation names unknown vertices {sorted(extra)}")


def _successors(rot: Mapping[int, tuple[int, ...]]) -> dict[Dart, Dart]:
    """Map each dart to the next dart on its face."""
    nxt: dict[Dart, Dart] = {}
    for v, cyc in rot.items():
        d = len(cyc)
        for i, u in enumerate(cyc):
            nxt[(u, v)] = (v, cyc[(i + 1) % d])
    return nxt


def trace_faces(g: Graph, rot: Mapping[int, Iterable[int]]) -> tuple[list[Face], int]:
    if not is_connected(g):
        raise EmbeddingError("face tracing needs a connected graph")
    validate_rotation(g, rot)
    rot = {v: tuple(rot[v]) for v in g.vertices()}
    nxt = _successors(rot)
    faces: list[Face] = []
    seen: set[Dart] = set()
    for u, v in sorted(g.edges):
        for start in ((u, v), (v, u)):
            if start in seen:
                continue
            walk = []
            d = start
            while d not in seen:
                seen.add(d)
                walk.append(d)
                d = nxt[d]
            faces.append(Face(tuple(walk)))
    euler = g.n - g.m + len(faces)
    return faces, (2 - euler) // 2


def genus(g: Graph, rot: Mapping[int, Iterable[int]]) -> int:
    return trace_faces(g, rot)[1]


@dataclass
class PlaneGraph:
    """A connected graph with a genus-0 rotation system and its faces."""

    graph: Graph
    rotation: RotationSystem
    faces: list[Face] = field(init=False)
    face_of_dart: dict[Dart, int] = field(init=False, repr=False)
    _connectivity: int | None = field(default=None, init=False, repr=False)

    def __post_init__(self) -> None:
        faces, gen = trace_faces(self.graph, self.rotation)
        if gen != 0:
            raise EmbeddingError(f"rotation system has genus {gen}, not a plane embedding")
        self.rotation = {v: tuple(self.rotation[v]) for v in self.graph.vertices()}
        self.faces = faces
        self.face_of_dart = {d: i for i, f in enumerate(faces) for d in f.darts}

    @property
    def connectivity(self) -> int:
        if self._connectivity is None:
            self._connectivity = connectivity_level(self.graph)
        return self._connectivity

    def vertex_faces(self, v: int) -> list[int]:
        """Face indices around ``v``, one per incident edge in rotation order."""
        return [self.face_of_dart[(v, w)] for w in self.rotation[v]]

    def face_degrees(self) -> list[int]:
        return [f.degree for f in self.faces]

    def face_average(self) -> Fraction:
        return Fraction(sum(self.face_degrees()), len(self.faces))


def plane_graph(g: Graph, rot: Mapping[int, Iterable[int]]) -> PlaneGraph:
    return PlaneGraph(g, {v: tuple(rot[v]) for v in rot})


def avg_face_degree(g: Graph) -> Fraction:
    """Average face degree of a connected planar graph via Euler's formula."""
    denom = g.m - g.n + 2
    if denom <= 0:
        raise EmbeddingError(f"|E|-|V|+2 = {denom}: average face degree undefined")
    return Fraction(2 * g.m, denom)


def _require_2connected(pg: PlaneGraph) -> None:
    if pg.connectivity < 2:
        raise EmbeddingError("local face averages need a 2-connected graph")


def local_face_average(pg: PlaneGraph, v: int) -> Fraction:
    _require_2connected(pg)
    degs = [pg.faces[i].degree for i in pg.vertex_faces(v)]
    return Fraction(sum(degs), len(degs))


def local_min(pg: PlaneGraph) -> Fraction:
    _require_2connected(pg)
    return min(local_face_average(pg, v) for v in pg.graph.vertices())


def size_identity_check(g: Graph) -> bool:
    """``|E| = F/(F-2) * (|V|-2)`` with F the average face degree."""
    fbar = avg_face_degree(g)
    if fbar == 2:
        return False
    return Fraction(g.m) == fbar / (fbar - 2) * (g.n - 2)


# enumeration

def rotation_system_count(g: Graph) -> int:
    return math.prod(math.factorial(max(g.degree(v) - 1, 0)) for v in g.vertices())


def _cyclic_orders(nbrs: Iterable[int]) -> list[tuple[int, ...]]:
    ns = sorted(nbrs)
    if len(ns) <= 2:
        return [tuple(ns)]
    first, rest = ns[0], ns[1:]
    return [(first, *p) for p in permutations(rest)]


def all_rotation_systems(g: Graph) -> Iterator[RotationSystem]:
    """Every rotation system of ``g``, unfiltered."""
    verts = list(g.vertices())
    options = [_cyclic_orders(g.neighbors(v)) for v in verts]
    for choice in product(*options):
        yield dict(zip(verts, choice))


def _search_order(g: Graph) -> list[int]:
    start = max(g.vertices(), key=lambda v: (g.degree(v), -v))
    order, seen = [start], {start}
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in sorted(g.neighbors(x), key=lambda w: (-g.degree(w), w)):
            if y not in seen:
                seen.add(y)
                order.append(y)
    return order


class _GenusZeroSearch:
    """Depth-first search over partial rotation systems.

    Darts are glued into partial face walks as vertices receive rotations;
    a branch dies when the faces that can still form are too few for
    genus 0 or, for 2-connected graphs, a walk revisits a vertex.
    """

    def __init__(self, g: Graph, node_budget: int | None = None):
        self.g = g
        self.target = g.m - g.n + 2
        self.total_darts = 2 * g.m
        self.faces_are_cycles = connectivity_level(g) >= 2
        self.order = _search_order(g)
        self.options = [_cyclic_orders(g.neighbors(v)) for v in self.order]
        # Mirror images pair up: pin one orientation at the first vertex of
        # degree >= 3 and let callers reflect.
        for i, v in enumerate(self.order):
            if g.degree(v) >= 3:
                self.options[i] = [c for c in self.options[i] if c[1] < c[-1]]
                break
        self.node_budget = node_budget
        self.nodes = 0
        # open walks: head_of[last dart] = first dart, tail_of[first] = last
        self.head_of: dict[Dart, Dart] = {}
        self.tail_of: dict[Dart, Dart] = {}
        self.members: dict[Dart, frozenset[int]] = {}
        self.length: dict[Dart, int] = {}
        for u, v in g.edges:
            for d in ((u, v), (v, u)):
                self.head_of[d] = d
                self.tail_of[d] = d
                self.members[d] = frozenset((d[0],))
                self.length[d] = 1
        self.closed = 0
        self.closed_darts = 0
        self.rot: RotationSystem = {}

    def run(self) -> Iterator[RotationSystem]:
        if self.g.n == 0 or not is_connected(self.g):
            return iter(())
        if self.g.m <= 1:
            # K1 and K2: the only faces with fewer than three darts
            return iter([{v: tuple(sorted(self.g.neighbors(v))) for v in self.g.vertices()}])
        return self._dfs(0)

    def _link(self, a: Dart, b: Dart, undo: list) -> bool:
        """Glue the walk ending at dart ``a`` to the walk starting at ``b``."""
        head = self.head_of.pop(a)
        tail = self.tail_of.pop(b)
        if head == b:
            undo.append((a, head, b, tail, None, 0))
            self.closed += 1
            self.closed_darts += self.length[b]
            return True
        undo.append((a, head, b, tail, self.members[head], self.length[head]))
        if self.faces_are_cycles and self.members[head] & self.members[b]:
            return False
        self.tail_of[head] = tail
        self.head_of[tail] = head
        self.members[head] = self.members[head] | self.members[b]
        self.length[head] += self.length[b]
        return True

    def _unwind(self, undo: list) -> None:
        while undo:
            a, head, b, tail, members, length = undo.pop()
            if head == b:
                self.closed -= 1
                self.closed_darts -= self.length[b]
            else:
                self.members[head] = members
                self.length[head] = length
            self.tail_of[head] = a
            self.head_of[tail] = b
            self.head_of[a] = head
            self.tail_of[b] = tail

    def _dfs(self, depth: int) -> Iterator[RotationSystem]:
        if depth == len(self.order):
            if self.closed == self.target:
                yield dict(self.rot)
            return
        v = self.order[depth]
        for cyc in self.options[depth]:
            self.nodes += 1
            if self.node_budget is not None and self.nodes > self.node_budget:
                raise BudgetExceeded(self.nodes, self.node_budget)
            undo: list = []
            ok = True
            prev = cyc[-1] if cyc else None
            for u in cyc:
                if not self._link((prev, v), (v, u), undo):
                    ok = False
                    break
                prev = u
            if ok:
                open_darts = self.total_darts - self.closed_darts
                ok = self.closed + open_darts // 3 >= self.target
            if ok:
                self.rot[v] = cyc
                yield from self._dfs(depth + 1)
                del self.rot[v]
            self._unwind(undo)


def _new_search(g: Graph, node_budget: int | None = None) -> _GenusZeroSearch:
    return _GenusZeroSearch(g, node_budget)


def enumerate_planar_embeddings(g: Graph, budget: int = DEFAULT_BUDGET) -> Iterator[RotationSystem]:
    """Yield every genus-0 rotation system of ``g``.

    Mirror images are both reported; no vertex rotation is pinned. ``budget``
    caps the size of the raw rotation-system space, checked up front.
    """
    required = rotation_system_count(g)
    if required > budget:
        raise BudgetExceeded(required, budget)
    return _with_mirrors(g, _new_search(g).run())


def mirror(rot: RotationSystem) -> RotationSystem:
    return {v: (c[0], *reversed(c[1:])) if len(c) > 2 else c for v, c in rot.items()}


def _with_mirrors(g: Graph, rots: Iterator[RotationSystem]) -> Iterator[RotationSystem]:
    symmetric = g.max_degree < 3
    for rot in rots:
        yield rot
        if not symmetric:
            yield mirror(rot)


def find_planar_rotation(g: Graph, node_budget: int | None = DEFAULT_BUDGET) -> RotationSystem | None:
    """First genus-0 rotation found by the pruned search, or ``None``."""
    return next(_new_search(g, node_budget).run(), None)


def _local_min_of(g: Graph, rot: RotationSystem) -> Fraction:
    return local_min(PlaneGraph(g, rot))


def _unique_embedding(g: Graph) -> bool:
    if connectivity_level(g) == 3:
        return True
    h = suppress_degree_two(g)
    return h is not None and h.n >= 4 and connectivity_level(h) == 3


def max_local_face_average(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    rotation: RotationSystem | None = None,
) -> tuple[Fraction, Status]:
    """Maximum of the local face-degree minimum over plane embeddings.

    3-connected graphs and subdivisions of them have one embedding up to
    reflection, so any genus-0 rotation gives the exact value. Otherwise all
    embeddings are enumerated if the raw space fits ``budget``; failing that
    the value of a single embedding is returned as a lower bound.
    """
    level = connectivity_level(g)
    if level < 2:
        raise EmbeddingError("F* is defined for 2-connected graphs only")
    if rotation is not None:
        PlaneGraph(g, rotation)  # rejects non-planar rotations
    if _unique_embedding(g):
        rot = rotation if rotation is not None else find_planar_rotation(g)
        if rot is None:
            raise EmbeddingError("graph is not planar")
        return _local_min_of(g, rot), "exact"
    if rotation_system_count(g) <= budget:
        values = [_local_min_of(g, r) for r in enumerate_planar_embeddings(g, budget)]
        if not values:
            raise EmbeddingError("graph is not planar")
        return max(values), "exact"
    rot = rotation if rotation is not None else find_planar_rotation(g)
    if rot is None:
        raise EmbeddingError("no plane embedding found within the search budget")
    return _local_min_of(g, rot), "lower_bound"


def embedding_spread(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[Fraction, Fraction]:
    if connectivity_level(g) < 2:
        raise EmbeddingError("embedding spread needs a 2-connected graph")
    values = [_local_min_of(g, r) for r in enumerate_planar_embeddings(g, budget)]
    if not values:
        raise EmbeddingError("graph is not planar")
    return min(values), max(values)


def find_spread_witness(
    graphs: Iterable[Graph], budget: int = DEFAULT_BUDGET
) -> tuple[Graph, Fraction, Fraction] | None:
    """First 2-connected planar graph whose local minimum depends on the embedding."""
    for g in graphs:
        if connectivity_level(g) != 2 or rotation_system_count(g) > budget:
            continue
        if g.m > 3 * g.n - 6:
            continue
        try:
            lo, hi = embedding_spread(g, budget)
        except EmbeddingError:
            continue
        if lo < hi:
            return g, lo, hi
    return None
