"""
Laurent polynomials in the skein variable A, with rational coefficients.

These carry the generic (unspecialised) values used by the diagram oracle.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import ParseError

__all__ = ["LaurentPoly", "LaurentRatio", "A", "LOOP", "qint_poly", "qfact_poly"]


def _clean(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


class LaurentPoly(object):
    """
    A finite sum Σ c_e A^e.

    Zero coefficients are never stored, so equality is dictionary equality.
    """
    def __init__(self, coeffs=None):
        terms = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    terms[int(e)] = _clean(c)
        self._terms = terms

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    @classmethod
    def monomial(cls, coeff, exponent):
        return cls({exponent: coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    @property
    def min_degree(self):
        return min(self._terms)

    @property
    def max_degree(self):
        return max(self._terms)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly(terms)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, exponent):
        if exponent < 0:
            if len(self._terms) != 1:
                raise ZeroDivisionError("only monomials are invertible Laurent polynomials")
            (e, c), = self._terms.items()
            return LaurentPoly({e * exponent: Fraction(1, 1) / Fraction(c) ** (-exponent)})
        result = LaurentPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, k):
        """Multiply by A^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def divide_exact(self, divisor):
        """
        Exact quotient self / divisor.

        Raises
        ------
        ArithmeticError
            When the division leaves a remainder
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        lowest = self.min_degree - divisor.min_degree
        lead_e = divisor.max_degree
        lead_c = Fraction(divisor._terms[lead_e])
        quotient = {}
        remainder = self
        while not remainder.is_zero():
            e = remainder.max_degree - lead_e
            if e < lowest:
                raise ArithmeticError("%s is not divisible by %s" % (self, divisor))
            c = _clean(Fraction(remainder._terms[remainder.max_degree]) / lead_c)
            quotient[e] = c
            remainder = remainder - divisor.shift(e) * c
        return LaurentPoly(quotient)

    def specialize(self, ctx):
        """Evaluate at the root of unity A of the :class:`TheoryCtx` `ctx`."""
        result = ctx.zero()
        for e, c in self._terms.items():
            result = result + ctx.A_pow(e) * c
        return result

    def evaluate(self, value):
        return sum((complex(c) * value ** e for e, c in self._terms.items()), 0j)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def to_json(self):
        return {str(e): str(Fraction(c)) for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls({int(e): Fraction(c) for e, c in obj.items()})
        except (AttributeError, ValueError) as exc:
            raise ParseError("Malformed Laurent polynomial %r: %s" % (obj, exc))

    def __repr__(self):
        return "LaurentPoly(%r)" % self.to_json()

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                mono = str(c)
            else:
                power = "A" if e == 1 else "A^%d" % e
                if c == 1:
                    mono = power
                elif c == -1:
                    mono = "-" + power
                else:
                    mono = "%s*%s" % (c, power)
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")


class LaurentRatio(object):
    """
    A quotient of Laurent polynomials, kept as (numerator, denominator).

    The denominator is divided out whenever it divides the numerator exactly,
    so polynomial values come back with denominator 1.
    """
    def __init__(self, numerator, denominator=None):
        if denominator is None:
            denominator = LaurentPoly.constant(1)
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        try:
            numerator = numerator.divide_exact(denominator)
            denominator = LaurentPoly.constant(1)
        except ArithmeticError:
            pass
        self.numerator = numerator
        self.denominator = denominator

    def is_polynomial(self):
        return self.denominator == 1

    def specialize(self, ctx):
        return self.numerator.specialize(ctx) / self.denominator.specialize(ctx)

    def __eq__(self, other):
        if isinstance(other, (LaurentPoly, int, Fraction)):
            other = LaurentRatio(LaurentPoly.constant(1) * other)
        if not isinstance(other, LaurentRatio):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None

    def __truediv__(self, other):
        return LaurentRatio(self.numerator * other.denominator, self.denominator * other.numerator)

    def __str__(self):
        if self.is_polynomial():
            return str(self.numerator)
        return "(%s) / (%s)" % (self.numerator, self.denominator)

    __repr__ = __str__


A = LaurentPoly.monomial(1, 1)

# Value of a closed loop in the Kauffman bracket
LOOP = LaurentPoly({2: -1, -2: -1})


def qint_poly(n):
    """The quantum integer [n] as a Laurent polynomial in A."""
    if n < 0:
        return -qint_poly(-n)
    return LaurentPoly({2 * n - 2 - 4 * t: 1 for t in range(n)})


def qfact_poly(n):
    result = LaurentPoly.constant(1)
    for k in range(2, n + 1):
        result = result * qint_poly(k)
    return result
