"""Immutable simple graphs over dense 0-based vertex ids, plus the primitive
queries everything else is built on: neighborhoods, components, degeneracy,
shortest (hence induced) paths and induced-hole enumeration.

All iteration orders are deterministic (ids ascending) so that certificates
and decompositions are reproducible.
"""

from collections import deque


HOLE_ENUM_VERTEX_CAP = 64


class SizeCapExceeded(Exception):
    """An operation was asked to run beyond its configured exact-search cap."""


class Graph:
    """Undirected simple graph on vertex set {0..n-1}.

    Immutable after construction; adjacency sets are frozensets and all
    queries are pure.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)

    # -- basic queries -------------------------------------------------

    def vertices(self):
        return range(self.n)

    def neighbors(self, v):
        return self.adj[v]

    def degree(self, v):
        return len(self.adj[v])

    def has_edge(self, u, v):
        return v in self.adj[u]

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    @property
    def m(self):
        return sum(len(s) for s in self.adj) // 2

    def __eq__(self, other):
        if isinstance(other, Graph):
            return self.n == other.n and self.adj == other.adj
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def _check(self, x):
        for v in x:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range for n={self.n}")

    # -- neighborhoods -------------------------------------------------

    def open_neighborhood(self, x):
        """N(X): vertices outside X with at least one neighbor in X."""
        xs = set(x)
        self._check(xs)
        out = set()
        for v in xs:
            out |= self.adj[v]
        return out - xs

    def closed_neighborhood(self, x):
        xs = set(x)
        return self.open_neighborhood(xs) | xs

    def is_complete_between(self, x, y):
        xs, ys = set(x), set(y)
        if xs & ys:
            raise ValueError("sets must be disjoint")
        return all(ys <= self.adj[v] for v in xs)

    def is_anticomplete_between(self, x, y):
        xs, ys = set(x), set(y)
        if xs & ys:
            raise ValueError("sets must be disjoint")
        return all(not (ys & self.adj[v]) for v in xs)

    def is_clique(self, x):
        xs = sorted(set(x))
        return all(xs[j] in self.adj[xs[i]]
                   for i in range(len(xs)) for j in range(i + 1, len(xs)))

    def is_stable(self, x):
        xs = sorted(set(x))
        return all(xs[j] not in self.adj[xs[i]]
                   for i in range(len(xs)) for j in range(i + 1, len(xs)))

    # -- connectivity --------------------------------------------------

    def components(self, removed=()):
        """Connected components of G minus `removed`, ordered by minimum id."""
        rem = set(removed)
        self._check(rem)
        seen = set(rem)
        out = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = {s}
            seen.add(s)
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        queue.append(w)
            out.append(frozenset(comp))
        return out

    def is_connected(self):
        return self.n <= 1 or len(self.components()) == 1

    def shortest_path(self, u, v, forbidden=()):
        """A shortest (hence induced) u-v path avoiding `forbidden`, or None.

        Ties are broken by preferring smaller predecessor ids, so the result
        is deterministic.
        """
        forb = set(forbidden)
        if u in forb or v in forb:
            raise ValueError("endpoints may not be forbidden")
        prev = {u: None}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if x == v:
                path = []
                while x is not None:
                    path.append(x)
                    x = prev[x]
                return path[::-1]
            for w in sorted(self.adj[x]):
                if w not in prev and w not in forb:
                    prev[w] = x
                    queue.append(w)
        return None

    # -- derived graphs ------------------------------------------------

    def induced(self, vertices):
        """Induced subgraph plus the map new id -> old id."""
        old_ids = sorted(set(vertices))
        self._check(old_ids)
        pos = {v: i for i, v in enumerate(old_ids)}
        edges = [(pos[u], pos[v]) for u in old_ids for v in self.adj[u]
                 if v in pos and u < v]
        return Graph(len(old_ids), edges), old_ids

    def complement(self):
        edges = [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                 if v not in self.adj[u]]
        return Graph(self.n, edges)

    def with_edges(self, extra):
        return Graph(self.n, list(self.edges()) + list(extra))


# -- degeneracy ----------------------------------------------------------

def degeneracy_order(g):
    """Repeatedly remove a minimum-degree vertex (ties by smallest id).

    Returns (ordering, d) where d is the maximum degree seen at removal
    time; every subgraph of g then has a vertex of degree <= d, i.e. g is
    (d+1)-degenerate under the strict convention.
    """
    deg = {v: g.degree(v) for v in g.vertices()}
    alive = set(g.vertices())
    order = []
    d = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        order.append(v)
        alive.remove(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
    return order, d


def strict_degeneracy(g):
    """The strict delta: smallest value such that every subgraph has a
    vertex of degree strictly less; equals standard degeneracy + 1.
    Empty graphs get delta = 1 so the 4*delta thresholds stay positive."""
    if g.n == 0:
        return 1
    return degeneracy_order(g)[1] + 1


def greedy_color_by_degeneracy(g):
    """Proper coloring with at most degeneracy+1 colors.

    Colors along the reverse degeneracy order; returns a list mapping
    vertex -> color id (0-based).
    """
    order, _ = degeneracy_order(g)
    color = [None] * g.n
    for v in reversed(order):
        used = {color[w] for w in g.adj[v] if color[w] is not None}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


# -- hole enumeration -----------------------------------------------------

def enumerate_holes(g, max_len=None, min_len=4, cap=None):
    """Yield every induced cycle of length >= min_len exactly once.

    Each hole is emitted as a tuple in canonical orientation: starting at
    its minimum vertex, second element smaller than the last (this kills
    both rotation and reflection duplicates).
    """
    cap = HOLE_ENUM_VERTEX_CAP if cap is None else cap
    if g.n > cap:
        raise SizeCapExceeded(
            f"hole enumeration capped at n <= {cap}, got {g.n}")
    if max_len is None:
        max_len = g.n
    adj = g.adj

    def extend(path, path_set, blocked):
        # path starts at v0 = path[0]; every other vertex on it exceeds v0.
        # blocked = vertices adjacent to path[1:-1] (would create a chord).
        v0 = path[0]
        last = path[-1]
        for w in sorted(adj[last]):
            if w <= v0 or w in path_set or w in blocked:
                continue
            if v0 in adj[w]:
                # w can only close the cycle; extending past it would leave
                # a chord back to v0.
                if len(path) >= min_len - 1 and path[1] < w:
                    yield tuple(path) + (w,)
            elif len(path) < max_len - 1:
                new_blocked = blocked | (adj[last] - {w})
                path.append(w)
                path_set.add(w)
                yield from extend(path, path_set, new_blocked)
                path.pop()
                path_set.remove(w)

    for v0 in range(g.n):
        for v1 in sorted(adj[v0]):
            if v1 <= v0:
                continue
            yield from extend([v0, v1], {v0, v1}, set())


def is_hole(g, cycle):
    """Check a vertex tuple really is an induced cycle of length >= 4."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = g.has_edge(cycle[i], cycle[j])
            consecutive = (j - i == 1) or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True
