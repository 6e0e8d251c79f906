"""Minimal separators, full components, clique cutsets, potential maximal
cliques, minimal chordal completions, clique trees, and the Ramsey table
used by the width bounds."""

import heapq
from math import comb

from .graph import Graph, SizeCapExceeded

SEPARATOR_ENUM_CAP = 20

# exact small Ramsey numbers R(s, t) = R(t, s); beyond the table we fall
# back to the binomial upper bound, which keeps every width inequality sound
_RAMSEY_EXACT = {
    (3, 3): 6, (3, 4): 9, (4, 3): 9, (4, 4): 18, (5, 3): 14, (5, 4): 25,
    (3, 5): 14, (4, 5): 25,
}


def ramsey(t, s):
    """R(t, s), exact from the table for small arguments, else the
    binomial upper bound C(t+s-2, t-1)."""
    if t < 1 or s < 1:
        raise ValueError("Ramsey arguments must be positive")
    if t == 1 or s == 1:
        return 1
    if t == 2:
        return s
    if s == 2:
        return t
    if (t, s) in _RAMSEY_EXACT:
        return _RAMSEY_EXACT[(t, s)]
    return comb(t + s - 2, t - 1)


def full_components(g, x):
    """Components D of g minus x with N(D) = x."""
    xs = frozenset(x)
    return [c for c in g.components(removed=xs)
            if g.open_neighborhood(c) == xs]


def is_minimal_separator(g, x):
    """x is a minimal separator iff at least two components of g minus x
    see all of x."""
    return len(full_components(g, x)) >= 2


def enumerate_minimal_separators(g, cap=SEPARATOR_ENUM_CAP):
    """Every minimal separator exactly once.

    Seeds with the component neighborhoods N(C) for C a component of
    g minus N[v], then closes under the substitution step: for X found and
    x in X, the neighborhoods of components of g minus (X union N(x)) are
    minimal separators too.
    """
    if g.n > cap:
        raise SizeCapExceeded(f"separator enumeration capped at n <= {cap}, "
                              f"got n = {g.n}")
    seen = set()
    queue = []
    empty = frozenset()
    if is_minimal_separator(g, empty):  # g disconnected
        seen.add(empty)
    for v in g.vertices():
        closed = g.closed_neighborhood({v})
        for c in g.components(removed=closed):
            x = frozenset(g.open_neighborhood(c))
            if x and x not in seen and is_minimal_separator(g, x):
                seen.add(x)
                queue.append(x)
    while queue:
        x = queue.pop()
        for v in sorted(x):
            removed = set(x) | g.closed_neighborhood({v})
            for c in g.components(removed=removed):
                y = frozenset(g.open_neighborhood(c))
                if y and y not in seen and is_minimal_separator(g, y):
                    seen.add(y)
                    queue.append(y)
    yield from sorted(seen, key=lambda s: (len(s), sorted(s)))


# -- clique cutsets ----------------------------------------------------------

def minimal_triangulation(g):
    """An inclusion-minimal chordal fill via maximum cardinality search
    with fill tracking (MCS-M). Returns (fill, order) where g plus fill
    is chordal with minimal fill and order is a perfect elimination
    order of the completion."""
    weight = {v: 0 for v in g.vertices()}
    numbered = set()
    order = []
    fill = set()
    for _ in range(g.n):
        v = max(sorted(set(g.vertices()) - numbered), key=lambda u: weight[u])
        # u joins S(v) when some path v..u runs through unnumbered
        # vertices all lighter than u; minimax search over path weights
        dist = {}
        heap = []
        for w in sorted(g.adj[v] - numbered):
            dist[w] = -1
            heapq.heappush(heap, (-1, w))
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist.get(u, float("inf")):
                continue
            for z in sorted(g.adj[u] - numbered - {v}):
                nd = max(d, weight[u])
                if nd < dist.get(z, float("inf")):
                    dist[z] = nd
                    heapq.heappush(heap, (nd, z))
        reached = {u for u, d in dist.items() if d < weight[u]}
        for u in reached:
            weight[u] += 1
            if not g.has_edge(u, v):
                fill.add(frozenset((u, v)))
        numbered.add(v)
        order.append(v)
    order.reverse()  # eliminate in this order
    return fill, order


def find_clique_cutset(g):
    """A clique whose removal disconnects g, with the component list, or
    None. Prefers small cutsets.

    Every clique cutset contains a clique minimal separator, and every
    clique minimal separator survives as a minimal separator of any
    minimal triangulation; so it suffices to scan the adjacent-bag
    intersections of a clique tree of one minimal completion.
    """
    if g.n == 0 or not g.is_connected():
        return None
    fill, _ = minimal_triangulation(g)
    completed = g.with_edges(tuple(sorted(e)) for e in fill)
    t = clique_tree(completed)
    candidates = {t.bags[i] & t.bags[j] for i, j in t.edges}
    for x in sorted(candidates, key=lambda s: (len(s), sorted(s))):
        if g.is_clique(x):
            sides = g.components(removed=x)
            if len(sides) >= 2:
                return frozenset(x), sides
    return None


def clique_cutset_atoms(g):
    """Recursive clique-cutset decomposition of a connected graph.

    Returns (atoms, glue_tree): atoms are vertex sets with no clique
    cutset; glue_tree is a list of (i, j, clique) entries meaning atoms i
    and j were split along that clique. Gluing the atoms back along the
    recorded cliques reproduces g.
    """
    if not g.is_connected():
        raise ValueError("clique-cutset decomposition expects a connected "
                         "graph; decompose components separately")
    atoms = []
    glue = []

    def split(vertex_set):
        sub, ids = g.induced(vertex_set)
        cut = find_clique_cutset(sub)
        if cut is None:
            atoms.append(frozenset(vertex_set))
            return len(atoms) - 1
        k, sides = cut
        clique = frozenset(ids[v] for v in k)
        first_side = set(ids[v] for v in sides[0]) | clique
        rest = set(vertex_set) - set(ids[v] for v in sides[0])
        i = split(first_side)
        j = split(rest)
        glue.append((i, j, clique))
        return i

    split(sorted(g.vertices()))
    return atoms, glue


# -- potential maximal cliques ------------------------------------------------

def is_pmc(g, omega, explain=False):
    """Is omega a potential maximal clique?

    (1) every non-edge of omega is covered by a component of g minus
    omega, and (2) no component sees all of omega.
    """
    om = frozenset(omega)
    comps = g.components(removed=om)
    nbhds = [g.open_neighborhood(c) for c in comps]
    for nb in nbhds:
        if nb == om and om:
            return (False, "a component sees all of omega") if explain \
                else False
    for u in sorted(om):
        for v in sorted(om):
            if v <= u or g.has_edge(u, v):
                continue
            if not any(u in nb and v in nb for nb in nbhds):
                return (False, f"non-edge {u},{v} uncovered") if explain \
                    else False
    return (True, "ok") if explain else True


# -- chordality, fills, clique trees ------------------------------------------

def perfect_elimination_order(g):
    """A PEO via maximum cardinality search, or None if g is not chordal."""
    weight = {v: 0 for v in g.vertices()}
    order = []
    remaining = set(g.vertices())
    while remaining:
        v = max(sorted(remaining), key=lambda u: weight[u])
        order.append(v)
        remaining.discard(v)
        for w in g.adj[v] & remaining:
            weight[w] += 1
    order.reverse()  # eliminate in this order
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = {w for w in g.adj[v] if pos[w] > pos[v]}
        if not g.is_clique(later):
            return None
    return order


def is_chordal(g):
    return perfect_elimination_order(g) is not None


def minimalize_fill(g, fill):
    """Shrink a chordal fill to an inclusion-minimal one.

    Scans fill edges in sorted order, removing any edge whose removal
    keeps the completion chordal, repeating until no edge can go.
    """
    fill = {frozenset(e) for e in fill}
    if not is_chordal(g.with_edges(tuple(sorted(e)) for e in fill)):
        raise ValueError("g plus fill must be chordal")
    changed = True
    while changed:
        changed = False
        for e in sorted(fill, key=sorted):
            trial = fill - {e}
            if is_chordal(g.with_edges(tuple(sorted(f)) for f in trial)):
                fill = trial
                changed = True
    return fill


def maximal_cliques(g):
    """All maximal cliques (Bron-Kerbosch with pivoting)."""
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(sorted(p | x), key=lambda u: len(g.adj[u] & p))
        for v in sorted(p - g.adj[pivot]):
            bk(r | {v}, p & g.adj[v], x & g.adj[v])
            p = p - {v}
            x = x | {v}

    bk(set(), set(g.vertices()), set())
    return out


def clique_tree(g):
    """A tree decomposition of a chordal graph whose bags are exactly its
    maximal cliques (a junction tree, via maximum-weight spanning tree on
    bag intersections)."""
    from .treedec import TreeDecomposition
    if not is_chordal(g):
        raise ValueError("clique_tree requires a chordal graph")
    bags = sorted(maximal_cliques(g), key=sorted)
    k = len(bags)
    if k == 0:
        return TreeDecomposition([frozenset()], [])
    # Prim, maximizing |bag_i & bag_j|; any maximum-weight spanning tree
    # of the clique intersection graph has the junction property
    in_tree = {0}
    edges = []
    while len(in_tree) < k:
        best = None
        for i in sorted(in_tree):
            for j in range(k):
                if j in in_tree:
                    continue
                w = len(bags[i] & bags[j])
                if best is None or w > best[0]:
                    best = (w, i, j)
        _, i, j = best
        in_tree.add(j)
        edges.append((i, j))
    return TreeDecomposition(bags, edges)


def make_structured(g, t):
    """Rebuild a valid tree decomposition so that every bag is a potential
    maximal clique, without increasing the width.

    Completes each bag into a clique, shrinks that fill to an inclusion
    minimal one, and returns the clique tree of the resulting chordal
    completion.
    """
    from .treedec import validate
    report = validate(g, t)
    if report is not None:
        raise ValueError(f"invalid input decomposition: {report}")
    fill = set()
    for bag in t.bags:
        for u in sorted(bag):
            for v in sorted(bag):
                if u < v and not g.has_edge(u, v):
                    fill.add(frozenset((u, v)))
    fill = minimalize_fill(g, fill)
    completed = g.with_edges(tuple(sorted(e)) for e in fill)
    return clique_tree(completed)
