"""Degeneracy-based partition of the hub set into stable layers with a
low-degree guarantee, and the balanced-vertex test.

The partition drives the recursion depth bookkeeping: its order k enters
the width bound as the hub-dimension term.
"""

from dataclasses import dataclass

from .graph import strict_degeneracy, degeneracy_order
from . import detect


@dataclass(frozen=True)
class HubPartition:
    """Ordered stable layers S_1..S_k covering the hub set.

    delta is the strict degeneracy of the partitioned induced subgraph;
    every vertex of S_i has at most 4*delta neighbors (within that
    subgraph) once the earlier layers are removed.
    """
    layers: tuple
    delta: int
    hub_set: frozenset

    @property
    def order(self):
        return len(self.layers)

    def check(self, g):
        """Raise AssertionError if any invariant fails; g is the host
        graph whose hub set was partitioned."""
        union = set()
        for s in self.layers:
            assert s, "empty layer"
            assert not (union & s), "layers overlap"
            assert g.is_stable(s), "layer not stable"
            union |= s
        assert union == set(self.hub_set), "layers do not cover the hub set"
        removed = set()
        for s in self.layers:
            for v in sorted(s):
                deg = len((g.adj[v] & self.hub_set) - removed)
                assert deg <= 4 * self.delta, \
                    f"vertex {v} keeps degree {deg} > {4 * self.delta}"
            removed |= s


def low_degree_half(g):
    """Vertices of degree <= 4*delta; always at least half of them.

    delta is the strict degeneracy bound, so the average degree is below
    2*delta and fewer than half the vertices can exceed 4*delta.
    """
    delta = strict_degeneracy(g)
    return frozenset(v for v in g.vertices() if g.degree(v) <= 4 * delta)


def layered_halving(g, delta=None):
    """Partition V(g) into layers T_1..T_m, m <= ceil(log2 n) + 1.

    T_1 takes exactly ceil(n/2) vertices of degree <= 4*delta (smallest
    ids first), and the rest is partitioned recursively; each vertex has
    degree <= 4*delta in the graph left when its layer starts.
    """
    if delta is None:
        delta = strict_degeneracy(g)
    remaining = set(g.vertices())
    layers = []
    while remaining:
        sub, ids = g.induced(remaining)
        take = (len(remaining) + 1) // 2
        low = sorted(ids[v] for v in sub.vertices()
                     if sub.degree(v) <= 4 * delta)
        assert len(low) >= take, "low-degree half smaller than half"
        layer = frozenset(low[:take])
        layers.append(layer)
        remaining -= layer
    return layers


def build_hub_partition(g, caps=None, budget=None, partial=False):
    """Partition Hub(g) into stable low-degree layers.

    Runs the layered halving on g[Hub(g)] and splits each layer into
    stable sets by greedy coloring along the reverse degeneracy order;
    the layer count is at most delta * (ceil(log2 n) + 1).
    """
    hub = detect.hubs(g, hole_cap=caps, budget=budget, partial=partial)
    if not hub:
        return HubPartition((), 1, hub)
    sub, ids = g.induced(hub)
    delta = strict_degeneracy(sub)
    layers = []
    for t_layer in layered_halving(sub, delta):
        colors = _greedy_color_classes(sub, t_layer)
        for cls in colors:
            layers.append(frozenset(ids[v] for v in cls))
    hp = HubPartition(tuple(layers), delta, hub)
    hp.check(g)
    return hp


def _greedy_color_classes(g, vertices):
    """Color g[vertices] greedily along the reverse degeneracy order;
    returns the nonempty color classes in color order."""
    sub, ids = g.induced(vertices)
    order, _ = degeneracy_order(sub)
    color = {}
    for v in reversed(order):
        used = {color[w] for w in sub.adj[v] if w in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    k = max(color.values(), default=-1) + 1
    classes = [[] for _ in range(k)]
    for v, c in color.items():
        classes[c].append(ids[v])
    return [frozenset(c) for c in classes if c]


def is_balanced(g, v):
    """Every component of g minus N[v] has at most n/2 vertices."""
    closed = g.closed_neighborhood({v})
    return all(2 * len(c) <= g.n for c in g.components(removed=closed))


def big_component(g, v):
    """The unique component of g minus N[v] with more than n/2 vertices,
    or None if v is balanced."""
    closed = g.closed_neighborhood({v})
    for c in g.components(removed=closed):
        if 2 * len(c) > g.n:
            return c
    return None
