import pytest

from chromaface.coloring import chromatic_index
from chromaface.families import gen_prism_G, gen_quintic_T, validate_certificates
from chromaface.formats import (
    FormatError,
    load_graph,
    read_certificate,
    read_coloring,
    read_edge_list,
    read_plane_graph,
    resolve_input,
    write_certificate,
    write_coloring,
    write_edge_list,
    write_plane_graph,
)

REGULAR, T4, CERTS = gen_quintic_T(4)


def test_edge_list_round_trip():
    text = write_edge_list(T4.graph)
    assert text.splitlines()[0] == "p 25 61"
    assert read_edge_list(text) == T4.graph


def test_edge_list_comments_and_blanks():
    g = read_edge_list("# triangle\np 3 3\n\ne 1 2\ne 2 3  # last two\ne 3 1\n")
    assert g.m == 3


@pytest.mark.parametrize(
    "text",
    ["e 1 2\n", "p 3 2\ne 1 2\n", "p 3 1\ne 1 1\n", "p 3 1\ne 1 x\n", "p 3 1\nq 1 2\n", "p 2\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(FormatError):
        read_edge_list(text)


def test_plane_graph_round_trip():
    text = write_plane_graph(T4)
    assert text.splitlines()[0] == "pg 25 61"
    back = read_plane_graph(text)
    assert back.graph == T4.graph and back.rotation == T4.rotation
    assert sorted(back.face_degrees()) == sorted(T4.face_degrees())


def test_plane_graph_rejects_asymmetric_and_toroidal():
    with pytest.raises(FormatError, match="symmetric"):
        read_plane_graph("pg 3 3\nr 1: 2 3\nr 2: 3 1\nr 3: 1\n")
    pg = gen_prism_G(3)[0]
    rot = dict(pg.rotation)
    rot[1] = tuple(reversed(rot[1]))
    bad = write_plane_graph(pg).splitlines()
    bad[1] = "r 1: " + " ".join(map(str, rot[1]))
    with pytest.raises(FormatError, match="genus"):
        read_plane_graph("\n".join(bad))


def test_coloring_round_trip():
    c = chromatic_index(T4.graph).witness
    text = write_coloring(c)
    assert text.splitlines()[0] == f"col 61 {c.k}"
    assert read_coloring(text) == c


def test_certificate_round_trip():
    back = read_certificate(write_certificate(CERTS, REGULAR.graph))
    assert back.matchings == CERTS.matchings
    assert back.special_edges == CERTS.special_edges
    assert back.circuit_unions == CERTS.circuit_unions
    assert validate_certificates(back, REGULAR.graph).ok


def test_load_and_resolve(tmp_path):
    (tmp_path / "t4.el").write_text(write_edge_list(T4.graph))
    g, pg = load_graph(resolve_input(tmp_path / "t4"))
    assert g == T4.graph and pg is None
    (tmp_path / "t4.pg").write_text(write_plane_graph(T4))
    path = resolve_input(tmp_path / "t4")
    assert path.suffix == ".pg" and load_graph(path)[1] is not None
    with pytest.raises(FileNotFoundError):
        resolve_input(tmp_path / "missing")
