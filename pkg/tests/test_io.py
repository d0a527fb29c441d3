import pytest

from cyclicec.errors import InvalidParameter, LoopRejected
from cyclicec.generators import petersen
from cyclicec.io import format_edge_list, parse_edge_list, read_edge_list, write_edge_list


def test_parse_with_comments_and_header():
    G, prov = parse_edge_list("# hello\np 4 2\n0 1\n\n2   3\n")
    assert (G.n, G.m, prov) == (4, 2, None)


def test_parse_without_header_infers_n():
    G, _ = parse_edge_list("0 1\n1 5\n")
    assert G.n == 6 and G.m == 2


def test_header_keeps_isolated_vertices():
    G, _ = parse_edge_list("p 5 1\n0 1\n")
    assert G.n == 5


def test_writer_format():
    text = format_edge_list(parse_edge_list("2 1\n0 2\n1 0\n")[0])
    assert text == "p 3 3\n0 1\n0 2\n1 2\n"


def test_bad_lines():
    with pytest.raises(InvalidParameter):
        parse_edge_list("0 1 2\n")
    with pytest.raises(InvalidParameter):
        parse_edge_list("p 3 5\n0 1\n")
    with pytest.raises(LoopRejected):
        parse_edge_list("1 1\n")


def test_file_round_trip(tmp_path):
    path = tmp_path / "p.el"
    write_edge_list(petersen(), path, {"family": "petersen"})
    G, prov = read_edge_list(path)
    assert G == petersen() and prov == {"family": "petersen"}
