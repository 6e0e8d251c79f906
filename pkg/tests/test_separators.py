"""Separator machinery: Ramsey table, minimal-separator enumeration,
potential maximal cliques, minimal triangulation, clique trees and clique
cutsets — each checked against brute force where one exists."""

import pytest

from logtw import generators, oracle, separators, treedec
from logtw.graph import Graph

from conftest import random_corpus


def test_ramsey_table_and_fallback():
    assert separators.ramsey(3, 3) == 6
    assert separators.ramsey(3, 4) == 9
    assert separators.ramsey(4, 4) == 18
    assert separators.ramsey(5, 3) == 14
    assert separators.ramsey(5, 4) == 25
    # symmetric and monotone
    assert separators.ramsey(4, 3) == separators.ramsey(3, 4)
    assert separators.ramsey(1, 7) == 1
    assert separators.ramsey(2, 7) == 7
    # outside the table: binomial upper bound, still >= true values
    assert separators.ramsey(6, 6) >= 102


def test_minimal_separator_enumeration_matches_brute():
    for g in [*random_corpus(7, 25, p=0.35, seed_base=900),
              generators.path(6), generators.cycle(7),
              Graph(5, [(0, 1), (2, 3)]), generators.clique(4)]:
        got = set(separators.enumerate_minimal_separators(g))
        assert got == oracle.brute_minimal_separators(g)
        for x in got:
            assert separators.is_minimal_separator(g, x)


def test_full_components_and_minimality():
    p5 = generators.path(5)
    assert separators.is_minimal_separator(p5, {2})
    assert not separators.is_minimal_separator(p5, {1, 2})
    fulls = separators.full_components(p5, {2})
    assert sorted(map(sorted, fulls)) == [[0, 1], [3, 4]]


def test_is_pmc():
    c5 = generators.cycle(5)
    # in C_5 the potential maximal cliques are the induced P_3's
    assert separators.is_pmc(c5, {0, 1, 2})
    assert not separators.is_pmc(c5, {0, 1})      # edge: a minimal separator
    assert not separators.is_pmc(c5, {0, 1, 2, 3})
    assert separators.is_pmc(generators.clique(4), set(range(4)))
    p4 = generators.path(4)
    assert separators.is_pmc(p4, {1, 2})
    assert not separators.is_pmc(p4, {0, 3})


def test_minimal_triangulation_is_chordal_and_minimal():
    for g in [*random_corpus(9, 15, p=0.3, seed_base=950),
              generators.cycle(8), generators.complete_bipartite(3, 3)]:
        fill, order = separators.minimal_triangulation(g)
        h = g.with_edges(fill)
        assert separators.is_chordal(h)
        assert not (set(fill) & set(g.edges()))
        # inclusion-minimal: dropping any single fill edge breaks chordality
        for e in fill:
            rest = [f for f in fill if f != e]
            assert not separators.is_chordal(g.with_edges(rest))


def test_clique_tree_is_valid_decomposition():
    for g in random_corpus(9, 10, p=0.35, seed_base=970):
        fill, _ = separators.minimal_triangulation(g)
        h = g.with_edges(fill)
        t = separators.clique_tree(h)
        assert treedec.validate(h, t) is None
        for bag in t.bags:
            assert h.is_clique(bag)


def _brute_has_clique_cutset(g):
    from itertools import combinations
    verts = list(g.vertices())
    for r in range(g.n):
        for s in combinations(verts, r):
            if g.is_clique(s) and len(g.components(removed=s)) >= 2:
                return True
    return False


def test_find_clique_cutset_matches_brute():
    # soundness + completeness (a cutset is found iff one exists) on small
    # random graphs and on shapes with known answers
    named = [(generators.cycle(6), False),
             (generators.path(5), True),
             (generators.clique(5), False),
             (Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]),
              True)]
    for g, expect in named:
        out = separators.find_clique_cutset(g)
        assert (out is not None) == expect
    for g in random_corpus(8, 40, p=0.3, seed_base=990):
        if not g.is_connected():
            continue
        out = separators.find_clique_cutset(g)
        assert (out is not None) == _brute_has_clique_cutset(g)
        if out is not None:
            cut, sides = out
            assert g.is_clique(cut)
            assert len(sides) >= 2
            assert len(g.components(removed=cut)) >= 2


def test_clique_cutset_atoms():
    for g in random_corpus(9, 20, p=0.25, seed_base=1010):
        if not g.is_connected():
            continue
        atoms, glue = separators.clique_cutset_atoms(g)
        covered = set()
        for a in atoms:
            sub, ids = g.induced(a)
            assert separators.find_clique_cutset(sub) is None
            covered |= set(a)
        assert covered == set(g.vertices())
        # every original edge lives inside some atom
        for u, v in g.edges():
            assert any(u in a and v in a for a in atoms)
        for i, j, clique in glue:
            assert g.is_clique(clique)


def test_make_structured_preserves_width_and_gives_pmcs():
    for g in random_corpus(8, 15, p=0.35, seed_base=1030):
        w, t = treedec.exact_treewidth(g)
        s = separators.make_structured(g, t)
        assert treedec.validate(g, s) is None
        assert s.width <= t.width == w
        for bag in s.bags:
            assert separators.is_pmc(g, bag)


def test_perfect_elimination_order():
    assert separators.perfect_elimination_order(generators.cycle(5)) is None
    tree = Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    order = separators.perfect_elimination_order(tree)
    assert order is not None and sorted(order) == list(range(5))
    assert separators.is_chordal(generators.clique(6))
    assert not separators.is_chordal(generators.cycle(4))
