"""
This module holds :class:`TheoryCtx`, the evaluation context shared by every
exact computation: the conductor m, the root A = ζ_m^s, q = A⁻⁴, the
effective level rEff (the order of q) and the color bound rEff − 2.
"""
import threading
from math import gcd

from .cyclotomic import CycloScalar, cyclo_new
from ..errors import ContextError

__all__ = ["TheoryCtx", "level_conductor", "THEORIES"]


THEORIES = ('su2', 'so3')


def level_conductor(r, theory='su2'):
    """
    Conductor for a level preset.

    Parameters
    ----------
    r : int
        Level
    theory : str
        ``'su2'`` (m = 4r) or ``'so3'`` (m = 2r, r odd)

    Returns
    -------
    int
        The conductor m; the resulting context has rEff = r
    """
    if theory == 'su2':
        return 4 * r
    if theory == 'so3':
        if r % 2 == 0:
            raise ContextError("The so3 preset needs an odd level, got %d" % r)
        return 2 * r
    raise ContextError("Unknown theory %r, expected one of %s" % (theory, ', '.join(THEORIES)))


class TheoryCtx(object):
    """
    Evaluation context A = ζ_m^s.

    Quantum integers and factorials are memoised per context; the memo is
    guarded by a lock so one context can be shared between worker threads.
    """
    def __init__(self, m, s=1):
        self.m = m
        self.s = s % m if m else s
        self.A = cyclo_new(m, s)
        self.q = self.A_pow(-4)
        self.rEff = m // gcd(m, 4)
        if self.rEff < 3:
            raise ContextError("A = zeta_%d^%d gives q of order %d; need at least 3" % (m, s, self.rEff))
        self.colorMax = self.rEff - 2
        self._memo = {}
        self._lock = threading.Lock()
        for i in range(self.colorMax + 1):
            if self.qint(i + 1).is_zero():
                raise ContextError("Delta_%d vanishes for m=%d, s=%d" % (i, m, s))

    @classmethod
    def from_level(cls, r, theory='su2'):
        return cls(level_conductor(r, theory), 1)

    def A_pow(self, k):
        return CycloScalar.zeta_power(self.m, self.s * k)

    def zero(self):
        return CycloScalar.zero(self.m)

    def one(self):
        return CycloScalar.one(self.m)

    def const(self, value):
        return CycloScalar.from_rational(self.m, value)

    def memo(self, key, compute):
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)

    def qint(self, n):
        """[n] = (A^{2n} − A^{−2n})/(A² − A^{−2}), as a sum of powers of A."""
        def compute():
            if n == 0:
                return self.zero()
            if n < 0:
                return -self.qint(-n)
            total = self.zero()
            for t in range(n):
                total = total + self.A_pow(2 * n - 2 - 4 * t)
            return total
        return self.memo(('qint', n), compute)

    def qfact(self, n):
        def compute():
            result = self.one()
            for k in range(2, n + 1):
                result = result * self.qint(k)
            return result
        return self.memo(('qfact', n), compute)

    def galois(self, t):
        """The context at A^t."""
        if gcd(t, self.m) != 1:
            raise ContextError("%d is not coprime to %d" % (t, self.m))
        return TheoryCtx(self.m, (self.s * t) % self.m)

    def to_json(self):
        return {"m": self.m, "s": self.s}

    def __eq__(self, other):
        if not isinstance(other, TheoryCtx):
            return NotImplemented
        return (self.m, self.s) == (other.m, other.s)

    def __hash__(self):
        return hash((self.m, self.s))

    def __repr__(self):
        return "TheoryCtx(m=%d, s=%d, rEff=%d)" % (self.m, self.s, self.rEff)
