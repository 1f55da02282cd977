from __future__ import annotations

from fractions import Fraction

import pytest

from vetoint.errors import ParseError
from vetoint.formats import dumps_graph, dumps_rep, loads_graph, loads_rep, read_rep, write_rep
from vetoint.model import MIDPOINT, UNIT, Representation, SimpleGraph


def test_rep_round_trip(tmp_path):
    rep = Representation.from_tuples([(0, Fraction(1, 2), 1), (Fraction(-3, 4), 0, Fraction(1, 4))], {UNIT})
    text = dumps_rep(rep)
    assert text.splitlines()[0] == "REP k=1 n=2 flags=unit"
    assert "1/2" in text and "-3/4" in text
    assert loads_rep(text) == rep
    path = tmp_path / "r.rep"
    write_rep(rep, path)
    assert read_rep(path) == rep


def test_rep_flags_and_k():
    rep = Representation.from_tuples([(0, 1, 2, 3)])
    assert dumps_rep(rep).startswith("REP k=2 n=1 flags=none")
    rep = Representation.from_tuples([(0, 2, 4)], {UNIT, MIDPOINT})
    assert loads_rep(dumps_rep(rep)).flavor == {UNIT, MIDPOINT}


def test_graph_round_trip():
    g = SimpleGraph(4, frozenset({(0, 1), (2, 3), (1, 3)}))
    text = dumps_graph(g)
    assert text.splitlines()[0] == "GRAPH n=4 m=3"
    assert loads_graph(text) == g


@pytest.mark.parametrize(
    "text",
    [
        "",
        "REP k=1 n=2 flags=none\n0 1 2\n",
        "REP k=1 n=1 flags=shiny\n0 1 2\n",
        "REP k=1 n=1 flags=none\n0 1\n",
        "REP k=1 n=1 flags=none\n0 x 2\n",
        "REP k=1 n=1 flags=unit\n2 1 0\n",
        "GRAPH n=2 m=1\n0 1\n",
    ],
)
def test_rep_parse_errors(text):
    with pytest.raises(ParseError):
        loads_rep(text)


@pytest.mark.parametrize(
    "text",
    ["GRAPH n=2 m=2\n0 1\n", "GRAPH n=2 m=1\n0 2\n", "GRAPH n=2 m=1\n1 1\n", "REP k=1 n=0 flags=none\n"],
)
def test_graph_parse_errors(text):
    with pytest.raises(ParseError):
        loads_graph(text)
