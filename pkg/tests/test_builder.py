"""The end-to-end builder: width-bound formula, gluing, certified builds on
class members, and the exact small-graph fallback."""

import pytest

from logtw import builder, detect, generators, oracle, treedec
from logtw.builder import Caps, ClassViolation, decompose, width_bound
from logtw.graph import Graph
from logtw.treedec import TreeDecomposition

from conftest import class_members


def test_width_bound_values():
    assert width_bound(3, 1, 1, 0) == 99
    # doubling n adds exactly R(3,4) * (4*delta + R(3,3)) when t = 3
    for n in (16, 32, 64, 128):
        assert width_bound(3, 2 * n, 1, 0) - width_bound(3, n, 1, 0) == 90
    # monotone in every argument
    assert width_bound(3, 100, 1, 0) < width_bound(3, 200, 1, 0)
    assert width_bound(3, 100, 1, 0) < width_bound(3, 100, 2, 0)
    assert width_bound(3, 100, 1, 0) < width_bound(3, 100, 1, 1)
    assert width_bound(3, 100, 1, 0) < width_bound(4, 100, 1, 0)


def test_glue_at_clique_reassembles():
    # two triangles sharing the edge {1, 2}: atoms {0,1,2} and {1,2,3}
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), ])
    d0 = TreeDecomposition([{0, 1, 2}], [])
    d1 = TreeDecomposition([{1, 2, 3}], [])
    t = builder.glue_at_clique([d0, d1], [(0, 1, frozenset({1, 2}))])
    assert treedec.validate(g, t) is None
    assert t.width == 2


def test_decompose_simple_certified():
    for g, want in [(generators.path(10), 1),
                    (generators.cycle(11), 2),
                    (generators.cycle(64), 2),
                    (Graph(5), 0),
                    (generators.clique(5), 4)]:
        t_param = 7 if want == 4 else 3
        td, report = decompose(g, t_param, caps=Caps(detect=64, hole=64))
        assert treedec.validate(g, td) is None
        assert report.certified
        assert report.achieved_width == td.width
        assert td.width <= report.bound
        assert td.width == want  # easy shapes come out exactly optimal


def test_decompose_rejects_forbidden_structures():
    with pytest.raises(ClassViolation) as e:
        decompose(generators.theta(2, 2, 2), 3)
    assert e.value.certificate.kind == "Theta"
    with pytest.raises(ClassViolation):
        decompose(generators.clique(4), 4)


def test_decompose_uncertified_mode():
    g = generators.wall(3)  # contains thetas, so never a class member
    with pytest.raises(ClassViolation):
        decompose(g, 3)
    td, report = decompose(g, 3, uncertified_ok=True)
    assert treedec.validate(g, td) is None
    assert not report.certified


def test_decompose_class_members_certified_and_bounded():
    for t_param, n in ((3, 12), (4, 12)):
        for g in class_members(t_param, n, 8, seed_base=2100):
            td, report = decompose(g, t_param, caps=Caps(detect=n, hole=n))
            assert treedec.validate(g, td) is None
            assert report.certified
            assert td.width <= report.bound
            assert td.width >= oracle.brute_treewidth(g)
            assert report.n == g.n and report.t == t_param


def test_decompose_disconnected_input():
    g = Graph(7, [(0, 1), (1, 2), (3, 4), (5, 6)])
    td, report = decompose(g, 3)
    assert treedec.validate(g, td) is None
    assert td.width == 1


def test_decompose_medium_class_member():
    g = generators.random_in_class(50, 1.5 / 50, 3, 11, caps=50)
    assert g is not None
    td, report = decompose(g, 3, caps=Caps(detect=50, hole=50))
    assert treedec.validate(g, td) is None
    assert report.certified
    assert td.width <= report.bound


def test_report_lines():
    td, report = decompose(generators.cycle(12), 3)
    lines = list(report.as_lines())
    assert any(line.startswith("achieved_width=") for line in lines)
    assert any(line.startswith("bound=") for line in lines)
    assert "certified=yes" in lines


def test_caps_respected():
    # hole cap too small for certified detection: fails loudly, does not
    # silently degrade
    g = generators.cycle(40)
    from logtw.graph import SizeCapExceeded
    with pytest.raises(SizeCapExceeded):
        decompose(g, 3, caps=Caps(detect=40, hole=30))
