"""Tree decompositions: validation, exact width against brute force, nice
form, and the dynamic-programming solvers against brute force."""

import pytest

from logtw import generators, oracle, treedec
from logtw.graph import Graph, SizeCapExceeded
from logtw.treedec import TreeDecomposition

from conftest import random_corpus


def test_validate_accepts_and_rejects():
    g = generators.path(3)
    good = TreeDecomposition([{0, 1}, {1, 2}], [(0, 1)])
    assert treedec.validate(g, good) is None
    # missing vertex
    assert treedec.validate(g, TreeDecomposition([{0, 1}], [])) is not None
    # missing edge
    assert treedec.validate(
        g, TreeDecomposition([{0, 1}, {2}], [(0, 1)])) is not None
    # connectivity broken: vertex 1 in two non-adjacent bags only
    bad = TreeDecomposition([{0, 1}, {0, 2}, {1, 2}], [(0, 1), (1, 2)])
    assert treedec.validate(g, bad) is not None
    # not a tree (cycle among bags)
    cyc = TreeDecomposition([{0, 1}, {1, 2}, {0, 1, 2}],
                            [(0, 1), (1, 2), (0, 2)])
    assert treedec.validate(g, cyc) is not None
    # disconnected bag-tree
    assert treedec.validate(
        g, TreeDecomposition([{0, 1}, {1, 2}], [])) is not None
    # trivial decompositions
    assert treedec.validate(Graph(0), TreeDecomposition([frozenset()],
                                                        [])) is None


def test_exact_treewidth_matches_brute():
    for g in [*random_corpus(7, 30, p=0.35, seed_base=1100),
              *random_corpus(8, 20, p=0.3, seed_base=1200)]:
        w, t = treedec.exact_treewidth(g)
        assert treedec.validate(g, t) is None
        assert t.width == w == oracle.brute_treewidth(g)


def test_exact_treewidth_named_graphs():
    assert treedec.exact_treewidth(generators.clique(5))[0] == 4
    assert treedec.exact_treewidth(generators.complete_bipartite(3, 3))[0] == 3
    assert treedec.exact_treewidth(generators.wall(3))[0] == 3
    assert treedec.exact_treewidth(generators.cycle(9))[0] == 2
    assert treedec.exact_treewidth(Graph(3))[0] == 0
    with pytest.raises(SizeCapExceeded):
        treedec.exact_treewidth(Graph(15))
    w, t = treedec.exact_treewidth(Graph(20), cap=20)  # cap is overridable
    assert w == 0


def test_greedy_fill_decomposition_always_valid():
    for g in [*random_corpus(10, 15, p=0.3, seed_base=1300),
              generators.wall(4), Graph(0), Graph(5)]:
        t = treedec.greedy_fill_decomposition(g)
        assert treedec.validate(g, t) is None
    # exact on chordal-ish easy shapes
    assert treedec.greedy_fill_decomposition(generators.path(9)).width == 1
    assert treedec.greedy_fill_decomposition(generators.cycle(9)).width == 2


def test_make_nice_preserves_width_and_validity():
    for g in random_corpus(8, 10, p=0.35, seed_base=1400):
        w, t = treedec.exact_treewidth(g)
        nice = treedec.make_nice(t, g)
        widths = []
        for node in nice.postorder():
            widths.append(len(node.bag) - 1)
            if node.kind == "leaf":
                assert len(node.bag) <= 1
            elif node.kind in ("introduce", "forget"):
                (child,) = node.children
                diff = node.bag ^ child.bag
                assert diff == {node.vertex} and len(diff) == 1
            else:
                assert all(c.bag == node.bag for c in node.children)
        assert max(widths) == w
        assert nice.root.bag == frozenset()


def test_solvers_match_brute_force():
    graphs = [*random_corpus(8, 25, p=0.35, seed_base=1500),
              *random_corpus(10, 10, p=0.25, seed_base=1600),
              generators.cycle(5), generators.clique(5), Graph(4)]
    for g in graphs:
        _, t = treedec.exact_treewidth(g)
        ss, ss_wit = treedec.solve_stable_set(g, t)
        assert ss == oracle.brute_stable_set(g)
        assert g.is_stable(ss_wit) and len(ss_wit) == ss
        vc, vc_wit = treedec.solve_vertex_cover(g, t)
        assert vc == oracle.brute_vertex_cover(g)
        assert ss + vc == g.n
        ds, ds_wit = treedec.solve_dominating_set(g, t)
        assert ds == oracle.brute_dominating_set(g)
        assert set(g.vertices()) <= set(ds_wit) | {
            w for v in ds_wit for w in g.adj[v]}
        chi = treedec.solve_chromatic(g, t)
        assert chi == oracle.brute_chromatic(g)
        ok, col = treedec.solve_q_coloring(g, t, max(chi, 1))
        assert (ok or g.n == 0)
        if chi > 1:
            bad, _ = treedec.solve_q_coloring(g, t, chi - 1)
            assert not bad


def test_solvers_reject_invalid_decomposition():
    g = generators.cycle(5)
    broken = TreeDecomposition([{0, 1}, {2, 3, 4}], [(0, 1)])
    with pytest.raises(ValueError):
        treedec.solve_stable_set(g, broken)
