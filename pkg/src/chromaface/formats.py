"""Text formats: edge lists, plane graphs, colourings and T_m certificates.

Edge list::

    p <n> <m>
    e <u> <v>          (m lines, 1-based)

Plane graph (counterclockwise rotations)::

    pg <n> <m>
    r <v>: <u1> ... <ud>

Colouring::

    col <m> <k>
    <u> <v> <colour>

Blank lines and ``#`` comments are ignored everywhere.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from .coloring import EdgeColoring
from .embedding import EmbeddingError, PlaneGraph
from .families import CertificateBundle, TIndex
from .graph import Edge, Graph, GraphError, norm_edge


class FormatError(ValueError):
    pass


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _ints(no: int, toks: list[str]) -> list[int]:
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise FormatError(f"line {no}: expected integers, got {' '.join(toks)!r}") from None


# edge lists

def write_edge_list(g: Graph) -> str:
    out = [f"p {g.n} {g.m}"]
    out += [f"e {u} {v}" for u, v in g.edge_list()]
    return "\n".join(out) + "\n"


def read_edge_list(text: str) -> Graph:
    header = None
    edges: list[Edge] = []
    for no, toks in _lines(text):
        if toks[0] == "p":
            if header is not None:
                raise FormatError(f"line {no}: second header")
            if len(toks) != 3:
                raise FormatError(f"line {no}: header must be 'p <n> <m>'")
            header = _ints(no, toks[1:])
        elif toks[0] == "e":
            if header is None:
                raise FormatError(f"line {no}: edge before header")
            if len(toks) != 3:
                raise FormatError(f"line {no}: edge must be 'e <u> <v>'")
            u, v = _ints(no, toks[1:])
            edges.append((u, v))
        else:
            raise FormatError(f"line {no}: unknown record {toks[0]!r}")
    if header is None:
        raise FormatError("missing 'p <n> <m>' header")
    n, m = header
    try:
        g = Graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    if g.m != m:
        raise FormatError(f"header announces {m} edges, found {g.m} distinct")
    return g


# plane graphs

def write_plane_graph(pg: PlaneGraph) -> str:
    g = pg.graph
    out = [f"pg {g.n} {g.m}"]
    out += [f"r {v}: " + " ".join(map(str, pg.rotation[v])) for v in g.vertices()]
    return "\n".join(out) + "\n"


def read_plane_graph(text: str) -> PlaneGraph:
    header = None
    rot: dict[int, tuple[int, ...]] = {}
    for no, toks in _lines(text):
        if toks[0] == "pg":
            if len(toks) != 3:
                raise FormatError(f"line {no}: header must be 'pg <n> <m>'")
            header = _ints(no, toks[1:])
        elif toks[0] == "r":
            if header is None:
                raise FormatError(f"line {no}: rotation before header")
            if len(toks) < 2 or not toks[1].endswith(":"):
                raise FormatError(f"line {no}: rotation must be 'r <v>: <u1> ...'")
            v = _ints(no, [toks[1][:-1]])[0]
            if v in rot:
                raise FormatError(f"line {no}: vertex {v} listed twice")
            rot[v] = tuple(_ints(no, toks[2:]))
        else:
            raise FormatError(f"line {no}: unknown record {toks[0]!r}")
    if header is None:
        raise FormatError("missing 'pg <n> <m>' header")
    n, m = header
    darts = [(v, u) for v, cyc in rot.items() for u in cyc]
    dart_set = set(darts)
    for v, u in darts:
        if (u, v) not in dart_set:
            raise FormatError(f"rotation is not symmetric: {u} appears at {v} but not {v} at {u}")
    try:
        g = Graph(n, [(v, u) for v, u in darts])
        if g.m != m:
            raise FormatError(f"header announces {m} edges, rotations give {g.m}")
        return PlaneGraph(g, rot)
    except (GraphError, EmbeddingError) as exc:
        raise FormatError(str(exc)) from None


# colourings

def write_coloring(c: EdgeColoring) -> str:
    out = [f"col {len(c.assignment)} {c.k}"]
    out += [f"{u} {v} {col}" for (u, v), col in sorted(c.assignment.items())]
    return "\n".join(out) + "\n"


def read_coloring(text: str) -> EdgeColoring:
    header = None
    assignment: dict[Edge, int] = {}
    for no, toks in _lines(text):
        if toks[0] == "col":
            header = _ints(no, toks[1:])
            continue
        if header is None:
            raise FormatError(f"line {no}: colour before header")
        if len(toks) != 3:
            raise FormatError(f"line {no}: expected '<u> <v> <colour>'")
        u, v, col = _ints(no, toks)
        assignment[norm_edge(u, v)] = col
    if header is None or len(header) != 2:
        raise FormatError("missing 'col <m> <k>' header")
    m, k = header
    if len(assignment) != m:
        raise FormatError(f"header announces {m} coloured edges, found {len(assignment)}")
    return EdgeColoring(assignment, k)


# certificates (edges of T indexed 1.. in sorted order)

def write_certificate(certs: CertificateBundle, regular: Graph) -> str:
    edges = regular.edge_list()
    idx = {e: i for i, e in enumerate(edges, start=1)}
    out = [f"cert T {certs.m} {len(edges)}"]
    out += [f"edge {i} {u} {v}" for (u, v), i in idx.items()]
    out += [f"special {name} {idx[e]}" for name, e in sorted(certs.special_edges.items())]
    for name, ms in certs.matchings.items():
        out.append(f"matching {name} " + " ".join(str(idx[e]) for e in sorted(ms)))
    for name, ms in certs.circuit_unions.items():
        out.append(f"union {name} " + " ".join(str(idx[e]) for e in sorted(ms)))
    return "\n".join(out) + "\n"


def read_certificate(text: str) -> CertificateBundle:
    m = None
    edges: dict[int, Edge] = {}
    special: dict[str, Edge] = {}
    matchings: dict[str, frozenset[Edge]] = {}
    unions: dict[str, frozenset[Edge]] = {}
    for no, toks in _lines(text):
        kind = toks[0]
        try:
            if kind == "cert":
                m = int(toks[2])
            elif kind == "edge":
                i, u, v = _ints(no, toks[1:])
                edges[i] = norm_edge(u, v)
            elif kind == "special":
                special[toks[1]] = edges[int(toks[2])]
            elif kind in ("matching", "union"):
                es = frozenset(edges[i] for i in _ints(no, toks[2:]))
                (matchings if kind == "matching" else unions)[toks[1]] = es
            else:
                raise FormatError(f"line {no}: unknown record {kind!r}")
        except (KeyError, IndexError):
            raise FormatError(f"line {no}: malformed {kind} record") from None
    if m is None:
        raise FormatError("missing 'cert T <m> <edges>' header")
    c = TIndex(m)
    return CertificateBundle(m, matchings, special, unions, {v: c.label(v) for v in range(1, c.n + 2)})


# files

def load_graph(path: str | Path) -> tuple[Graph, PlaneGraph | None]:
    """Read an edge-list or plane-graph file, sniffing the header."""
    text = Path(path).read_text()
    first = next((toks for _, toks in _lines(text)), None)
    if first and first[0] == "pg":
        pg = read_plane_graph(text)
        return pg.graph, pg
    return read_edge_list(text), None


def resolve_input(path: str | Path) -> Path:
    """Accept a file path or an output prefix, preferring ``.pg`` over ``.el``."""
    p = Path(path)
    if p.is_file():
        return p
    for suffix in (".pg", ".el"):
        q = p.with_name(p.name + suffix)
        if q.is_file():
            return q
    raise FileNotFoundError(f"no input at {path} (also tried .pg and .el)")
