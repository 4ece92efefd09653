"""
Jones-Wenzl projectors f^(n) with cleared denominators.

The projector is stored as a numerator F_n with integral Laurent (or
cyclotomic) coefficients and the scalar D_n = [n]!, so that
f^(n) = F_n / D_n.  The numerators satisfy the single-clasp recursion

    F_{n+1} = [n+1] (F_n ⊗ 1) + Σ_{j=1}^{n} [j] (F_n ⊗ 1) ê_n ê_{n−1} ⋯ ê_j

and D_{n+1} = [n+1] D_n.
"""
from functools import lru_cache

from .diagrams import TLElement
from ..errors import ContextError
from ..scalar import LaurentPoly, LOOP, qint_poly

__all__ = ["JonesWenzl", "jones_wenzl", "ring_for"]


def ring_for(ctx):
    """
    Coefficient helpers for the generic ring (``ctx is None``) or a context.

    Returns
    -------
    tuple
        (loop value, one, quantum integer function)
    """
    if ctx is None:
        return LOOP, LaurentPoly.constant(1), qint_poly
    return LOOP.specialize(ctx), ctx.one(), ctx.qint


class JonesWenzl(object):
    """
    f^(n) as the pair (numerator, denominator).

    Parameters
    ----------
    numerator : :class:`~tqftrep.oracle.TLElement`
    denominator : LaurentPoly or CycloScalar
    """
    def __init__(self, numerator, denominator, one):
        self.numerator = numerator
        self.denominator = denominator
        self.one = one

    @property
    def n(self):
        return self.numerator.n

    def is_idempotent(self):
        """F·F == D·F, the cleared form of f² = f."""
        f = self.numerator
        return f * f == f.scale(self.denominator)

    def kills_cap_cups(self):
        """F·ê_i = ê_i·F = 0 for every generator."""
        f = self.numerator
        for i in range(1, self.n):
            e = TLElement.generator(self.n, i, f.loop, self.one)
            if not (f * e).is_zero() or not (e * f).is_zero():
                return False
        return True

    def __repr__(self):
        return "JonesWenzl(n=%d, %d terms)" % (self.n, len(self.numerator.terms))


@lru_cache(maxsize=None)
def jones_wenzl(n, ctx=None):
    """
    The Jones-Wenzl projector on `n` strands.

    Parameters
    ----------
    n : int
        Number of strands, n ≥ 0
    ctx : :class:`~tqftrep.scalar.TheoryCtx`, optional
        Specialise at a root of unity instead of working over generic A

    Returns
    -------
    :class:`JonesWenzl`

    Raises
    ------
    :class:`~tqftrep.errors.ContextError`
        When the specialised projector does not exist (n > colorMax + 1)
    """
    if n < 0:
        raise ValueError("Negative strand count %d" % n)
    if ctx is not None and n > ctx.colorMax + 1:
        raise ContextError("f^(%d) needs [%d]! invertible, which fails at rEff=%d" % (n, n, ctx.rEff))
    loop, one, qint = ring_for(ctx)
    if n <= 1:
        return JonesWenzl(TLElement.identity(n, loop, one), one, one)

    previous = jones_wenzl(n - 1, ctx)
    k = n - 1
    lifted = previous.numerator.tensor_id()
    total = lifted.scale(qint(n))
    chain = TLElement.identity(n, loop, one)
    for j in range(k, 0, -1):
        chain = chain * TLElement.generator(n, j, loop, one)
        total = total + (lifted * chain).scale(qint(j))
    return JonesWenzl(total, previous.denominator * qint(n), one)
