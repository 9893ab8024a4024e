import pytest

from idcodes.errors import ParseError
from idcodes.graph import complete, cycle, lex_product, path, star
from idcodes.parse import format_edge_list, is_expression, load_graph, parse_edge_list


@pytest.mark.parametrize("expr, expected", [
    ("P5", path(5)),
    ("C9", cycle(9)),
    ("K3", complete(3)),
    ("S3", star(3)),
    ("LEX(P3,P4)", lex_product(path(3), path(4))),
    ("LEX(LEX(K2,P3), C4)", lex_product(lex_product(complete(2), path(3)), cycle(4))),
])
def test_expressions(expr, expected):
    assert is_expression(expr)
    assert load_graph(expr) == expected


@pytest.mark.parametrize("bad", ["P1", "C2", "LEX(P3)", "LEX(P3,P4", "LEX(P3,P4,P5)", "S0"])
def test_bad_expressions(bad):
    with pytest.raises(ParseError):
        load_graph(bad)


def test_edge_list_roundtrip(tmp_path):
    G = lex_product(path(3), complete(2))
    f = tmp_path / "g.txt"
    f.write_text(format_edge_list(G))
    assert load_graph(str(f)) == G


def test_edge_list_comments_and_blanks():
    G = parse_edge_list("# a path\n\n4 3\n0 1\n# middle\n1 2\n\n2 3\n")
    assert G == path(4)


def test_edge_list_names_are_relabelled():
    G = parse_edge_list("3 2\na b\nb c\n")
    assert G == path(3)
    assert G.labels == ("a", "b", "c")


@pytest.mark.parametrize("text", [
    "", "3\n0 1\n", "3 2\n0 1\n", "3 1\n0 3\n", "3 1\n1 1\n", "2 1\n0 1 2\n", "2 3\na b\nb c\nc d\n",
])
def test_edge_list_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_missing_file():
    with pytest.raises(ParseError):
        load_graph("/nonexistent/graph.txt")
