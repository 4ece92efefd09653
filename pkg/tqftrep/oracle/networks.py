"""
Evaluation of closed trivalent networks with Jones-Wenzl projectors on
every edge, by brute-force expansion in the diagram algebra.

Each edge of color c carries the numerator of f^(c); each vertex joins its
three edges by the internal strand counts.  The expansion is contracted one
edge at a time: the state is the matching induced on the points of the edges
not yet expanded, and equal states are merged.
"""
import logging

from .jones_wenzl import jones_wenzl
from .diagrams import TLDiagram, TLElement
from .. import tqftrep_config
from ..errors import InadmissibleError, ResourceCapError
from ..scalar import LaurentPoly, LaurentRatio, LOOP

__all__ = ["Network", "jw_closure", "theta_shape", "tet_shape", "eval_closed", "bubble_coefficient"]

TOP, BOTTOM = 0, 1


class Network(object):
    """
    A planar trivalent network.

    Parameters
    ----------
    colors : list of int
        Edge colors
    ends : list of tuple
        For each edge, (top vertex, bottom vertex); the top side of the edge's
        projector faces the first vertex.  ``(None, None)`` is a closed loop.
    rotation : dict
        Vertex to the counter-clockwise tuple of incident edge indices
    name : str
    """
    def __init__(self, colors, ends, rotation, name):
        self.colors = list(colors)
        self.ends = list(ends)
        self.rotation = dict(rotation)
        self.name = name
        for v, star in self.rotation.items():
            a, b, c = (self.colors[e] for e in star)
            if (a + b + c) % 2 or not abs(a - b) <= c <= a + b:
                raise InadmissibleError("%s: vertex %r has colors %r" % (name, v, (a, b, c)))

    def _end_points(self, e, v):
        c = self.colors[e]
        if self.ends[e][0] == v:
            return [(e, TOP, t) for t in range(c)]
        return [(e, BOTTOM, t) for t in reversed(range(c))]

    def wiring(self):
        """The fixed matching of projector points made by the vertices and closed loops."""
        partner = {}

        def join(p, q):
            partner[p] = q
            partner[q] = p

        for e, (top, bottom) in enumerate(self.ends):
            if top is None and bottom is None:
                for t in range(self.colors[e]):
                    join((e, TOP, t), (e, BOTTOM, t))
        for v, star in self.rotation.items():
            lists = [self._end_points(e, v) for e in star]
            sizes = [len(pts) for pts in lists]
            for x in range(3):
                y, z = (x + 1) % 3, (x + 2) % 3
                k = (sizes[x] + sizes[y] - sizes[z]) // 2
                for t in range(k):
                    join(lists[x][sizes[x] - 1 - t], lists[y][t])
        return partner

    def __repr__(self):
        return "Network(%s, colors=%r)" % (self.name, self.colors)


def jw_closure(n):
    """The trace closure of f^(n)."""
    return Network([n], [(None, None)], {}, "jw_closure(%d)" % n)


def theta_shape(a, b, c):
    return Network([a, b, c], [(1, 2)] * 3, {1: (0, 2, 1), 2: (1, 2, 0)}, "theta(%d,%d,%d)" % (a, b, c))


def tet_shape(a, b, e, d, c, f):
    """
    The tetrahedron with colors read row by row from [A B E; D C F].

    Vertex stars are (A,B,E), (B,D,F), (E,D,C) and (A,C,F).
    """
    colors = [a, b, e, d, c, f]
    A, B, E, D, C, F = range(6)
    ends = [None] * 6
    ends[A], ends[B], ends[E] = (1, 4), (1, 2), (1, 3)
    ends[D], ends[F], ends[C] = (2, 3), (2, 4), (3, 4)
    rotation = {1: (B, A, E), 2: (D, F, B), 3: (E, C, D), 4: (A, F, C)}
    return Network(colors, ends, rotation, "tet(%d,%d,%d,%d,%d,%d)" % tuple(colors))


def _canon(partner):
    return tuple(sorted((p, q) for p, q in partner.items() if p < q))


def _absorb(partner, e, color, diagram):
    """Expand edge `e` by one diagram; returns the new matching and the loops closed."""
    def inside(p):
        return p[0] == e

    def through(p):
        # partner inside the diagram of edge e
        idx = p[2] if p[1] == TOP else color + p[2]
        other = diagram.matching[idx]
        return (e, TOP, other) if other < color else (e, BOTTOM, other - color)

    result = {}
    visited = set()
    for p, q in partner.items():
        if inside(p) or p in result:
            continue
        x = q
        while inside(x):
            visited.add(x)
            y = through(x)
            visited.add(y)
            x = partner[y]
        result[p] = x
        result[x] = p

    loops = 0
    for p in partner:
        if not inside(p) or p in visited:
            continue
        loops += 1
        x = p
        while x not in visited:
            visited.add(x)
            y = through(x)
            visited.add(y)
            x = partner[y]
    return result, loops


def eval_closed(network):
    """
    Kauffman-bracket value of a closed network over generic A.

    Parameters
    ----------
    network : :class:`Network`

    Returns
    -------
    :class:`~tqftrep.scalar.LaurentRatio`
        Numerator from the cleared projectors over the product of [c]!

    Raises
    ------
    :class:`~tqftrep.errors.ResourceCapError`
        When an edge color exceeds ``tqftrep_config.oracle_max_strands``
    """
    cap = tqftrep_config.oracle_max_strands
    if any(c > cap for c in network.colors):
        raise ResourceCapError("%s exceeds the oracle cap of %d strands" % (network.name, cap))
    logging.debug("Evaluating %s", network.name)

    one = LaurentPoly.constant(1)
    powers = [one]
    states = {_canon(network.wiring()): one}
    denominator = one
    for e, color in enumerate(network.colors):
        if color == 0:
            continue
        projector = jones_wenzl(color)
        denominator = denominator * projector.denominator
        merged = {}
        for state, coeff in states.items():
            partner = {}
            for p, q in state:
                partner[p] = q
                partner[q] = p
            for diagram, c in projector.numerator.terms.items():
                result, loops = _absorb(partner, e, color, diagram)
                while len(powers) <= loops:
                    powers.append(powers[-1] * LOOP)
                key = _canon(result)
                value = coeff * c * powers[loops]
                merged[key] = merged[key] + value if key in merged else value
        states = {k: v for k, v in merged.items() if not v.is_zero()}
    return LaurentRatio(states.get((), LaurentPoly()), denominator)


def _with_arcs(diagram, a, x):
    """
    Widen a diagram on k strands by x nested arcs after its first `a` points,
    at the top and at the bottom.
    """
    k = diagram.n
    n = k + 2 * x

    def place(p):
        if p < k:
            return p if p < a else p + 2 * x
        p -= k
        return n + (p if p < a else p + 2 * x)

    matching = [0] * (2 * n)
    for p, partner in enumerate(diagram.matching):
        matching[place(p)] = place(partner)
    for side in (0, n):
        for t in range(x):
            lo, hi = side + a + t, side + a + 2 * x - 1 - t
            matching[lo], matching[hi] = hi, lo
    return TLDiagram(n, matching)


def bubble_coefficient(i, j, k):
    """
    The scalar λ with (bubble of edges i, j on a strand colored k) = λ f^(k).

    The bubble is expanded in TL_{i+j}: the k clasped strands split into
    i − x and j − x strands and x = (i + j − k)/2 nested arcs join the i edge
    to the j edge.  λ is read off the identity term of f^(k) and the whole
    expansion must be a multiple of the widened f^(k).

    Returns
    -------
    :class:`~tqftrep.scalar.LaurentRatio`

    Raises
    ------
    :class:`~tqftrep.errors.InadmissibleError`
        When (i, j, k) is not admissible
    :class:`~tqftrep.errors.ResourceCapError`
        When i + j exceeds ``tqftrep_config.oracle_max_strands``
    """
    if (i + j + k) % 2 or not abs(i - j) <= k <= i + j:
        raise InadmissibleError("bubble(%d,%d,%d) is not admissible" % (i, j, k))
    n = i + j
    cap = tqftrep_config.oracle_max_strands
    if n > cap:
        raise ResourceCapError("bubble(%d,%d,%d) exceeds the oracle cap of %d strands" % (i, j, k, cap))
    x = (n - k) // 2
    a = i - x
    fi, fj, fk = jones_wenzl(i), jones_wenzl(j), jones_wenzl(k)
    clasp = TLElement(n, {_with_arcs(d, a, x): c for d, c in fk.numerator.terms.items()}, LOOP)
    bubble = clasp * fi.numerator.tensor(fj.numerator) * clasp
    value = bubble.terms.get(_with_arcs(TLDiagram.identity(k), a, x), LaurentPoly())
    if bubble.scale(fk.denominator) != clasp.scale(value):
        raise ArithmeticError("bubble(%d,%d,%d) is not a multiple of f^(%d)" % (i, j, k, k))
    return LaurentRatio(value, fk.denominator * fk.denominator * fi.denominator * fj.denominator)
