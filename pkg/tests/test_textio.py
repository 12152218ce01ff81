from fractions import Fraction

import pytest

from barrierpath import textio
from barrierpath.bridge import BarrierCertificate, RouteCertificate, ShrinkVector
from barrierpath.graph import Edge, WeightedGraph
from barrierpath.mbs import build
from barrierpath.reduction import build as build_gadget
from barrierpath.solve import solve_exact_integer
from barrierpath.subset_sum import SubsetSumInstance

FIG3 = SubsetSumInstance((2, 3, 3, 2), 7)


def test_number_format():
    assert textio.fmt(3) == "3"
    assert textio.fmt(Fraction(6, 2)) == "3"
    assert textio.fmt(Fraction(-1, 3)) == "-1/3"


def test_graph_round_trip():
    red = build_gadget(FIG3)
    text = textio.dump_graph(red.graph, budget=red.C)
    g, budget = textio.parse_graph(text)
    assert budget == 115
    assert g == red.graph
    assert textio.dump_graph(g, budget) == text


def test_graph_round_trip_keeps_vertex_order_and_coefficients():
    g = WeightedGraph(("z", "s", "t"), (Edge("s", "t", Fraction(5, 2), 2, Fraction(1, 3)),), "s", "t")
    text = textio.dump_graph(g)
    assert "vertex z" in text and "edge s t 5/2 2 1/3" in text
    assert textio.parse_graph(text)[0] == g


def test_graph_comments_and_blank_lines():
    text = "# a comment\nmip 2 1\n\nterminals s t  # trailing\nedge s t 4\n"
    g, budget = textio.parse_graph(text)
    assert budget is None and g.edges[0].w == 4


@pytest.mark.parametrize(
    "text, line",
    [
        ("mip 2 1\nterminals s t\nedge s t x\n", 3),
        ("mip 2 1\nterminals s t\nedge s t 0\n", 3),
        ("mip 2 1\nterminals s t\nedge s t\n", 3),
        ("graph 2 1\n", 1),
        ("mip 2 1\nterminals s t\nbogus 1\n", 3),
        ("mip 2 1\nterminals s t\nedge s t 1/0\n", 3),
    ],
)
def test_graph_errors_name_lines(text, line):
    with pytest.raises(textio.FormatError) as exc:
        textio.parse_graph(text)
    assert exc.value.line == line
    assert ("line %d" % line) in str(exc.value)


def test_graph_count_mismatch():
    with pytest.raises(textio.FormatError, match="edges"):
        textio.parse_graph("mip 2 2\nterminals s t\nedge s t 1\n")


def test_solution_round_trip():
    red = build_gadget(FIG3)
    sol = solve_exact_integer(red.graph)
    text = textio.dump_solution(sol)
    assert text.splitlines()[0] == "cost 115"
    cost, powers, path = textio.parse_solution(text, red.graph)
    assert cost == 115 and powers == sol.assignment and path == sol.path


def test_subset_sum_round_trip():
    text = textio.dump_subset_sum(FIG3)
    assert text == "subsetsum 4 7\na 2 3 3 2\n"
    assert textio.parse_subset_sum(text) == FIG3


def test_subset_sum_errors():
    with pytest.raises(textio.FormatError) as exc:
        textio.parse_subset_sum("subsetsum 3 4\na 1 2\n")
    assert exc.value.line == 2


def test_mbs_round_trip():
    inst = build(SubsetSumInstance((1, 2), 2))
    text = textio.dump_mbs(inst)
    back = textio.parse_mbs(text)
    assert back == inst
    assert textio.dump_mbs(back) == text
    head = text.splitlines()
    assert head[0] == "mbs %d" % len(inst.disks) and head[1].startswith("budget ")


def test_mbs_errors():
    inst = build(SubsetSumInstance((1,), 1))
    lines = textio.dump_mbs(inst).splitlines()
    bad = lines[:]
    bad[-1] = bad[-1].replace("Corridor", "Wall")
    with pytest.raises(textio.FormatError) as exc:
        textio.parse_mbs("\n".join(bad))
    assert exc.value.line == len(lines)


def test_shrinks_and_certificates():
    s = ShrinkVector({"B1": 60, "D1": Fraction(49, 2)})
    text = textio.dump_shrinks(s)
    assert text == "shrink B1 60\nshrink D1 49/2\ncost 169/2\n"
    assert textio.parse_shrinks(text) == s
    with pytest.raises(textio.FormatError):
        textio.parse_shrinks("shrink B1 60\ncost 61\n")
    r = RouteCertificate((("D0", "B1"), ("B1", "D1")))
    assert textio.dump_certificate(r) == "route D0:B1 B1:D1\n"
    assert textio.parse_certificate(textio.dump_certificate(r)) == r
    b = BarrierCertificate(("a", "b", "c"))
    assert textio.parse_certificate(textio.dump_certificate(b)) == b
    with pytest.raises(textio.FormatError) as exc:
        textio.parse_certificate("# c\nroute D0-B1\n")
    assert exc.value.line == 2
