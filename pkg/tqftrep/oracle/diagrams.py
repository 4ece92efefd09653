"""
Planar (Temperley-Lieb) diagrams and formal linear combinations of them.

A diagram on n strands pairs up 2n boundary points: the top points are
numbered 0 … n−1 from left to right and the bottom points n … 2n−1, also
from left to right.  Products stack the first factor on top of the second;
every closed loop formed in the middle is replaced by the loop scalar.
"""
from ..errors import DimensionError

__all__ = ["TLDiagram", "TLElement", "all_diagrams", "tl_mul"]


class TLDiagram(object):
    """
    A crossingless matching of the 2n boundary points.

    Parameters
    ----------
    n : int
        Number of strands
    matching : sequence of int
        ``matching[p]`` is the partner of point `p`
    """
    __slots__ = ('n', 'matching')

    def __init__(self, n, matching):
        matching = tuple(matching)
        if len(matching) != 2 * n:
            raise DimensionError("A diagram on %d strands needs %d points, got %d"
                                 % (n, 2 * n, len(matching)))
        for p, partner in enumerate(matching):
            if partner == p or not 0 <= partner < 2 * n or matching[partner] != p:
                raise DimensionError("Point %d has an invalid partner %r" % (p, partner))
        self.n = n
        self.matching = matching
        if not self.is_planar():
            raise DimensionError("Matching %r is not planar" % (matching,))

    def _circle(self, p):
        # position when walking the boundary: top left to right, then bottom right to left
        return p if p < self.n else 3 * self.n - 1 - p

    def is_planar(self):
        chords = []
        for p, partner in enumerate(self.matching):
            if p < partner:
                a, b = sorted((self._circle(p), self._circle(partner)))
                chords.append((a, b))
        for a, b in chords:
            for c, d in chords:
                if a < c < b < d:
                    return False
        return True

    @classmethod
    def identity(cls, n):
        return cls(n, [p + n for p in range(n)] + list(range(n)))

    @classmethod
    def cap_cup(cls, n, i):
        """The generator ê_i (1-based) joining strands i and i+1 at top and at bottom."""
        if not 1 <= i < n:
            raise DimensionError("Generator e_%d needs 1 <= i < %d" % (i, n))
        matching = list(cls.identity(n).matching)
        top, bottom = i - 1, n + i - 1
        matching[top], matching[top + 1] = top + 1, top
        matching[bottom], matching[bottom + 1] = bottom + 1, bottom
        return cls(n, matching)

    def tensor_id(self):
        """This diagram with one through-strand added on the right."""
        n = self.n

        def shift(p):
            return p if p < n else p + 1

        matching = [0] * (2 * n + 2)
        for p, partner in enumerate(self.matching):
            matching[shift(p)] = shift(partner)
        matching[n] = 2 * n + 1
        matching[2 * n + 1] = n
        return TLDiagram(n + 1, matching)

    def tensor(self, other):
        """`self` and `other` side by side, `self` on the left."""
        n1, n2 = self.n, other.n
        n = n1 + n2

        def left(p):
            return p if p < n1 else p - n1 + n

        def right(p):
            return n1 + p if p < n2 else p - n2 + n + n1

        matching = [0] * (2 * n)
        for p, partner in enumerate(self.matching):
            matching[left(p)] = left(partner)
        for p, partner in enumerate(other.matching):
            matching[right(p)] = right(partner)
        return TLDiagram(n, matching)

    def compose(self, other):
        """
        Stack `self` on top of `other`.

        Returns
        -------
        (:class:`TLDiagram`, int)
            The resulting diagram and the number of closed loops removed
        """
        n = self.n
        if other.n != n:
            raise DimensionError("Cannot stack %d strands on %d strands" % (n, other.n))
        upper, lower = self.matching, other.matching
        seen = [False] * n
        result = [None] * (2 * n)

        def walk(in_upper, p):
            while True:
                if in_upper:
                    q = upper[p]
                    if q < n:
                        return q
                    seen[q - n] = True
                    in_upper, p = False, q - n
                else:
                    q = lower[p]
                    if q >= n:
                        return q
                    seen[q] = True
                    in_upper, p = True, q + n

        for p in range(n):
            if result[p] is None:
                end = walk(True, p)
                result[p], result[end] = end, p
        for p in range(n, 2 * n):
            if result[p] is None:
                end = walk(False, p)
                result[p], result[end] = end, p

        loops = 0
        for k in range(n):
            if seen[k]:
                continue
            loops += 1
            while not seen[k]:
                seen[k] = True
                k = upper[n + k] - n
                seen[k] = True
                k = lower[k]
        return TLDiagram(n, result), loops

    def __eq__(self, other):
        return isinstance(other, TLDiagram) and self.matching == other.matching

    def __hash__(self):
        return hash(self.matching)

    def __lt__(self, other):
        return self.matching < other.matching

    def __repr__(self):
        return "TLDiagram(%d, %r)" % (self.n, self.matching)


def all_diagrams(n):
    """
    Every planar diagram on `n` strands (a Catalan number of them).

    The boundary circle is read as a balanced-parenthesis word; each word
    gives exactly one non-crossing matching.
    """
    size = 2 * n

    def from_circle(c):
        return c if c < n else 3 * n - 1 - c

    def words(open_count, close_count, stack, pairs):
        if open_count == n and close_count == n:
            matching = [0] * size
            for a, b in pairs:
                pa, pb = from_circle(a), from_circle(b)
                matching[pa], matching[pb] = pb, pa
            yield TLDiagram(n, matching)
            return
        pos = open_count + close_count
        if open_count < n:
            yield from words(open_count + 1, close_count, stack + [pos], pairs)
        if close_count < open_count:
            yield from words(open_count, close_count + 1, stack[:-1], pairs + [(stack[-1], pos)])

    return list(words(0, 0, [], []))


class TLElement(object):
    """
    A finite linear combination of diagrams on `n` strands.

    Coefficients may be :class:`~tqftrep.scalar.LaurentPoly` (generic A) or
    :class:`~tqftrep.scalar.CycloScalar` (specialised A); `loop` is the value
    of a closed loop in the same coefficient ring.
    """
    def __init__(self, n, terms, loop):
        self.n = n
        self.loop = loop
        self.terms = {}
        for d, c in terms.items():
            if d.n != n:
                raise DimensionError("Diagram on %d strands in an element on %d" % (d.n, n))
            if not c.is_zero():
                self.terms[d] = c

    @classmethod
    def identity(cls, n, loop, one):
        return cls(n, {TLDiagram.identity(n): one}, loop)

    @classmethod
    def generator(cls, n, i, loop, one):
        return cls(n, {TLDiagram.cap_cup(n, i): one}, loop)

    def is_zero(self):
        return not self.terms

    def _loop_power(self, k, cache):
        if k not in cache:
            cache[k] = self.loop ** k
        return cache[k]

    def __add__(self, other):
        if other.n != self.n:
            raise DimensionError("Cannot add elements on %d and %d strands" % (self.n, other.n))
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms[d] + c if d in terms else c
        return TLElement(self.n, terms, self.loop)

    def __neg__(self):
        return TLElement(self.n, {d: -c for d, c in self.terms.items()}, self.loop)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return TLElement(self.n, {d: v * c for d, v in self.terms.items()}, self.loop)

    def __mul__(self, other):
        return tl_mul(self, other)

    def tensor_id(self):
        return TLElement(self.n + 1, {d.tensor_id(): c for d, c in self.terms.items()}, self.loop)

    def tensor(self, other):
        terms = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                terms[d1.tensor(d2)] = c1 * c2
        return TLElement(self.n + other.n, terms, self.loop)

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        if self.n != other.n or set(self.terms) != set(other.terms):
            return False
        return all(self.terms[d] == other.terms[d] for d in self.terms)

    __hash__ = None

    def __repr__(self):
        return "TLElement(n=%d, %d terms)" % (self.n, len(self.terms))


def tl_mul(x, y):
    """
    Product x·y, with x stacked on top of y.

    Raises
    ------
    :class:`~tqftrep.errors.DimensionError`
        When the strand counts differ
    """
    if x.n != y.n:
        raise DimensionError("Cannot multiply elements on %d and %d strands" % (x.n, y.n))
    powers = {}
    terms = {}
    for d1, c1 in x.terms.items():
        for d2, c2 in y.terms.items():
            d, loops = d1.compose(d2)
            c = c1 * c2
            if loops:
                c = c * x._loop_power(loops, powers)
            terms[d] = terms[d] + c if d in terms else c
    return TLElement(x.n, terms, x.loop)
