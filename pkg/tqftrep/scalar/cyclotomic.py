"""
This module holds the exact cyclotomic scalar type, :class:`CycloScalar`.

An element of Q(ζ_m) is stored in the power basis ζ⁰ … ζ^{φ(m)−1}, reduced
modulo the m-th cyclotomic polynomial.  Internally the coordinates are kept
as integer numerators over one positive common denominator, so that the
representation is canonical and equality is a tuple comparison.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from math import gcd

import numpy as np
from sympy import Poly, QQ, Rational, cyclotomic_poly, divisors, symbols, totient

from ..errors import ContextError, ParseError

__all__ = ["CycloScalar", "cyclo_new", "galois_apply", "is_root_of_unity", "embed",
           "euler_phi", "cyclotomic_coeffs", "lcm"]

_X = symbols('x')


def lcm(a, b):
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def euler_phi(m):
    return int(totient(m))


@lru_cache(maxsize=None)
def cyclotomic_coeffs(m):
    """
    Integer coefficients of the m-th cyclotomic polynomial, lowest power first.

    Parameters
    ----------
    m : int
        Conductor, m ≥ 1

    Returns
    -------
    tuple of int
        φ(m) + 1 coefficients; the last one is 1
    """
    poly = cyclotomic_poly(m, _X, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _power_table(m):
    # Reduced coordinates of ζ_m^k for 0 <= k < max(m, 2φ(m) - 1)
    phi_coeffs = cyclotomic_coeffs(m)
    phi = len(phi_coeffs) - 1
    size = max(m, 2 * phi - 1)
    row = [0] * phi
    row[0] = 1
    table = [tuple(row)]
    for _ in range(1, size):
        top = row[-1]
        row = [0] + row[:-1]
        if top:
            for j in range(phi):
                row[j] -= top * phi_coeffs[j]
        table.append(tuple(row))
    return tuple(table)


@lru_cache(maxsize=None)
def _sympy_modulus(m):
    return Poly(list(reversed(cyclotomic_coeffs(m))), _X, domain=QQ)


def _normalize(nums, den):
    g = reduce(gcd, nums, den)
    if den < 0:
        g = -g
    if g != 1:
        nums = [c // g for c in nums]
        den //= g
    return tuple(nums), den


def _mul_nums(m, a, b):
    phi = len(a)
    prod = [0] * (2 * phi - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    if phi == 1:
        return prod
    table = _power_table(m)
    out = prod[:phi]
    for k in range(phi, 2 * phi - 1):
        c = prod[k]
        if c:
            row = table[k]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return out


class CycloScalar(object):
    """
    An exact element of the cyclotomic field Q(ζ_m).

    Values are immutable.  Arithmetic with ``int``/``Fraction`` operands is
    supported, and two scalars of different conductors are lifted to the
    least common multiple before combining.

    Parameters
    ----------
    m : int
        Conductor
    coeffs : iterable of int or Fraction
        φ(m) coordinates, lowest power of ζ_m first
    """
    def __init__(self, m, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        phi = euler_phi(m)
        if len(coeffs) != phi:
            raise ContextError("Q(zeta_%d) needs %d coordinates, got %d" % (m, phi, len(coeffs)))
        den = reduce(lcm, (c.denominator for c in coeffs), 1)
        nums = [c.numerator * (den // c.denominator) for c in coeffs]
        self._m = m
        self._num, self._den = _normalize(nums, den)

    @classmethod
    def _raw(cls, m, nums, den):
        obj = cls.__new__(cls)
        obj._m = m
        obj._num, obj._den = _normalize(list(nums), den)
        return obj

    @classmethod
    def from_rational(cls, m, value):
        value = Fraction(value)
        nums = [0] * euler_phi(m)
        nums[0] = value.numerator
        return cls._raw(m, nums, value.denominator)

    @classmethod
    def zero(cls, m):
        return cls._raw(m, [0] * euler_phi(m), 1)

    @classmethod
    def one(cls, m):
        return cls.from_rational(m, 1)

    @classmethod
    def zeta_power(cls, m, e):
        """ζ_m raised to the integer power `e`."""
        return cls._raw(m, _power_table(m)[e % m], 1)

    @property
    def m(self):
        return self._m

    @property
    def coeffs(self):
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def phi(self):
        return len(self._num)

    def is_zero(self):
        return not any(self._num)

    def is_one(self):
        return self._den == 1 and self._num[0] == 1 and not any(self._num[1:])

    def is_rational(self):
        return not any(self._num[1:])

    def is_integral(self):
        """Whether this is an algebraic integer, i.e. lies in Z[ζ_m]."""
        return self._den == 1

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        return Fraction(self._num[0], self._den)

    # Conductor handling

    def lift(self, m):
        """The same number viewed inside Q(ζ_m); `m` must be a multiple of the conductor."""
        if m == self._m:
            return self
        if m % self._m:
            raise ContextError("Cannot lift Q(zeta_%d) into Q(zeta_%d)" % (self._m, m))
        step = m // self._m
        table = _power_table(m)
        out = [0] * euler_phi(m)
        for i, c in enumerate(self._num):
            if c:
                row = table[i * step]
                for j, v in enumerate(row):
                    if v:
                        out[j] += c * v
        return CycloScalar._raw(m, out, self._den)

    def _coerce(self, other):
        if isinstance(other, CycloScalar):
            if other._m == self._m:
                return self, other
            common = lcm(self._m, other._m)
            return self.lift(common), other.lift(common)
        if isinstance(other, (int, Fraction)):
            return self, CycloScalar.from_rational(self._m, other)
        return None, None

    # Arithmetic

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        den = a._den * b._den // gcd(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        return CycloScalar._raw(a._m, [x * fa + y * fb for x, y in zip(a._num, b._num)], den)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return CycloScalar._raw(self._m, [-c for c in self._num], self._den)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycloScalar._raw(self._m, [c * other.numerator for c in self._num],
                                    self._den * other.denominator)
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return CycloScalar._raw(a._m, _mul_nums(a._m, a._num, b._num), a._den * b._den)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of %s by zero" % self)
            return self * (1 / Fraction(other))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse

    def __rtruediv__(self, other):
        return self.inverse * other

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse ** (-exponent)
        result = CycloScalar.one(self._m)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    @cached_property
    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("0 has no inverse in Q(zeta_%d)" % self._m)
        if self.phi == 1:
            return CycloScalar.from_rational(self._m, 1 / self.to_fraction())
        f = Poly([Rational(c) for c in reversed(self._num)], _X, domain=QQ)
        inv = f.invert(_sympy_modulus(self._m))
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        coeffs += [Fraction(0)] * (self.phi - len(coeffs))
        # f was built from the numerators only
        return CycloScalar(self._m, [c * self._den for c in coeffs])

    # Field automorphisms

    def galois(self, t):
        """The automorphism σ_t, ζ_m ↦ ζ_m^t, applied to this element."""
        if gcd(t, self._m) != 1:
            raise ContextError("sigma_%d is not an automorphism of Q(zeta_%d)" % (t, self._m))
        table = _power_table(self._m)
        out = [0] * self.phi
        for i, c in enumerate(self._num):
            if c:
                row = table[(t * i) % self._m]
                for j, v in enumerate(row):
                    if v:
                        out[j] += c * v
        return CycloScalar._raw(self._m, out, self._den)

    def conj(self):
        """Complex conjugation, which is σ_{−1} in every embedding."""
        return self.galois(-1)

    def galois_orbit(self):
        return [self.galois(t) for t in range(1, self._m + 1) if gcd(t, self._m) == 1]

    def norm(self):
        """Field norm to Q, the product of all Galois conjugates."""
        result = CycloScalar.one(self._m)
        for x in self.galois_orbit():
            result = result * x
        return result.to_fraction()

    def trace(self):
        result = CycloScalar.zero(self._m)
        for x in self.galois_orbit():
            result = result + x
        return result.to_fraction()

    def embed(self, k=1):
        if gcd(k, self._m) != 1:
            raise ContextError("Embedding index %d is not coprime to %d" % (k, self._m))
        powers = np.exp(2j * np.pi * k * np.arange(self.phi) / self._m)
        return complex(np.dot(np.array([float(c) for c in self.coeffs]), powers))

    def is_root_of_unity(self):
        if self.is_zero():
            raise ZeroDivisionError("0 is not a unit")
        period = lcm(2, self._m)
        if self ** period != 1:
            return None
        for d in divisors(period):
            if self ** int(d) == 1:
                return int(d)

    # Comparison, hashing, serialization

    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a._den == b._den and a._num == b._num

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        # means of the Galois conjugates do not depend on the conductor
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self.trace() / self.phi, (self * self).trace() / self.phi))

    def __bool__(self):
        return not self.is_zero()

    def key(self):
        """Hashable canonical key."""
        return (self._m, self._num, self._den)

    def to_json(self):
        return {"m": self._m,
                "coeffs": ["%d/%d" % (c.numerator, c.denominator) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(int(obj["m"]), [Fraction(c) for c in obj["coeffs"]])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError("Malformed scalar JSON %r: %s" % (obj, exc))

    def __repr__(self):
        return "CycloScalar(%d, %r)" % (self._m, [str(c) for c in self.coeffs])

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append("z^%d" % i)
            else:
                terms.append("%s*z^%d" % (c, i))
        return " + ".join(terms) if terms else "0"


def cyclo_new(m, s=1):
    """
    The primitive m-th root of unity A = ζ_m^s.

    Parameters
    ----------
    m : int
        Conductor, at least 3
    s : int
        Exponent coprime to `m`

    Returns
    -------
    :class:`CycloScalar`
    """
    if m < 3:
        raise ContextError("Conductor must be at least 3, got %d" % m)
    if gcd(s, m) != 1:
        raise ContextError("Exponent %d is not coprime to conductor %d" % (s, m))
    return CycloScalar.zeta_power(m, s)


def galois_apply(t, x):
    return x.galois(t)


def is_root_of_unity(x):
    return x.is_root_of_unity()


def embed(x, k=1):
    return x.embed(k)
