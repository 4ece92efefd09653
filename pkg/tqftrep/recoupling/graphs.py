"""
Uni-trivalent graphs and the count of their admissible colorings.

A graph is a list of edges, each edge a pair of ends; an end is a vertex
name or ``None`` for a univalent (boundary) end.  Some edges may carry a
fixed color.  The number of admissible colorings of the caterpillar graph
equals the dimension of the corresponding braid-group module.
"""
from .coefficients import admissible
from ..errors import DimensionError

__all__ = ["TrivalentGraph", "count_labelings", "theta_graph", "caterpillar"]


class TrivalentGraph(object):
    """
    A uni-trivalent graph with optional fixed edge colors.

    Parameters
    ----------
    edges : list of tuple
        (end, end) pairs; ``None`` marks a boundary end
    labels : dict, optional
        Edge index to fixed color
    name : str, optional
    """
    def __init__(self, edges, labels=None, name=None):
        self.edges = [tuple(e) for e in edges]
        self.labels = dict(labels or {})
        self.name = name
        self.stars = {}
        for idx, ends in enumerate(self.edges):
            if len(ends) != 2:
                raise DimensionError("Edge %d has %d ends" % (idx, len(ends)))
            if ends[0] is None and ends[1] is None:
                raise DimensionError("Edge %d is a free arc" % idx)
            for v in ends:
                if v is not None:
                    self.stars.setdefault(v, []).append(idx)
        for v, star in self.stars.items():
            if len(star) != 3:
                raise DimensionError("Vertex %r has valence %d" % (v, len(star)))
        for idx in self.labels:
            if not 0 <= idx < len(self.edges):
                raise DimensionError("Label for missing edge %d" % idx)

    def free_edges(self):
        return [i for i in range(len(self.edges)) if i not in self.labels]

    def __repr__(self):
        return "TrivalentGraph(%s, %d edges)" % (self.name or "unnamed", len(self.edges))


def theta_graph():
    """Two vertices joined by three unlabeled edges."""
    return TrivalentGraph([("v", "w"), ("v", "w"), ("v", "w")], name="theta")


def caterpillar(n, m):
    """
    The graph whose admissible colorings index the basis of V(n, m).

    A spine runs from a boundary end colored 0 through vertices v1 … vn to a
    boundary end colored `m`; each vertex carries one leg colored 1.
    """
    if n < 1:
        raise DimensionError("Need at least one leg, got n=%d" % n)
    edges = [(None, 1)]
    labels = {0: 0}
    for k in range(1, n + 1):
        labels[len(edges)] = 1
        edges.append((None, k))
    for k in range(1, n):
        edges.append((k, k + 1))
    labels[len(edges)] = m
    edges.append((n, None))
    return TrivalentGraph(edges, labels, name="caterpillar(%d,%d)" % (n, m))


def count_labelings(ctx, g):
    """
    Number of admissible colorings of `g` extending its fixed labels.

    Parameters
    ----------
    ctx : :class:`~tqftrep.scalar.TheoryCtx`
    g : :class:`TrivalentGraph`

    Returns
    -------
    int
    """
    free = g.free_edges()
    colors = dict(g.labels)

    def vertices_ok(idx):
        for v in g.edges[idx]:
            if v is None:
                continue
            star = g.stars[v]
            if all(e in colors for e in star):
                if not admissible(ctx, tuple(colors[e] for e in star)):
                    return False
        return True

    for idx in g.labels:
        if not vertices_ok(idx):
            return 0

    def search(pos):
        if pos == len(free):
            return 1
        idx = free[pos]
        total = 0
        for c in range(ctx.colorMax + 1):
            colors[idx] = c
            if vertices_ok(idx):
                total += search(pos + 1)
        del colors[idx]
        return total

    return search(0)
