"""
Projective orders of exact matrices.

A matrix M has finite projective order n when n is the least positive
integer with M^n scalar.  Eigenvalue ratios of such a matrix are roots of
unity lying in an extension of degree at most d! over Q(ζ_m), so n is
confined to the candidate set E = {n : φ(n) ≤ d!·φ(m)}, all of whose
members are at most 2(d!·φ(m))².
"""
import logging
from math import factorial, gcd

import numpy as np
from sympy import sieve

from ..rep import nullspace
from ..scalar import euler_phi

__all__ = ["OrderResult", "is_scalar", "candidate_set", "ratio_certificate", "numeric_screen",
           "minimal_polynomial", "projective_order", "expected_generator_order", "order_rule"]

FINITE = 'finite'
INFINITE = 'infiniteCertified'


class OrderResult(object):
    """
    Outcome of a projective order computation.

    Attributes
    ----------
    verdict : str
        ``'finite'`` or ``'infiniteCertified'``
    order : int or None
        The projective order for a finite verdict
    method : str
        ``'ratioTest'``, ``'scalarPowerScan'`` or ``'bfs'``
    checked_bound : int or None
        Largest candidate order excluded by an infinite verdict
    """
    def __init__(self, verdict, order=None, method='scalarPowerScan', checked_bound=None):
        self.verdict = verdict
        self.order = order
        self.method = method
        self.checked_bound = checked_bound

    @property
    def is_finite(self):
        return self.verdict == FINITE

    def to_json(self):
        return {"verdict": self.verdict, "order": self.order, "method": self.method,
                "checked_bound": self.checked_bound}

    def __repr__(self):
        if self.is_finite:
            return "OrderResult(finite(%d), %s)" % (self.order, self.method)
        return "OrderResult(infinite, %s, bound=%s)" % (self.method, self.checked_bound)


def is_scalar(M):
    """
    Returns
    -------
    :class:`~tqftrep.scalar.CycloScalar` or None
        λ when M = λ·I exactly
    """
    lam = M.entries[0][0]
    for r, row in enumerate(M.entries):
        for c, x in enumerate(row):
            if r == c:
                if x != lam:
                    return None
            elif not x.is_zero():
                return None
    return lam


def candidate_set(d, m):
    """
    The candidate projective orders for a d×d matrix over Q(ζ_m).

    Returns
    -------
    list of int
        Ascending
    """
    bound = factorial(d) * euler_phi(m)
    limit = 2 * bound * bound
    return [n for n, phi in enumerate(sieve.totientrange(1, limit + 1), start=1) if phi <= bound]


def _char_coeffs(M):
    # elementary symmetric functions e_0..e_d of the eigenvalues, via Newton's identities
    d = M.dim
    ctx = M.ctx
    power = M
    traces = []
    for k in range(d):
        traces.append(power.trace())
        if k + 1 < d:
            power = power @ M
    e = [ctx.one()]
    for k in range(1, d + 1):
        total = ctx.zero()
        for i in range(1, k + 1):
            term = e[k - i] * traces[i - 1]
            total = total + term if i % 2 else total - term
        e.append(total / k)
    return e


def ratio_certificate(M):
    """
    Exact test that excludes finite projective order.

    If all eigenvalue ratios are roots of unity then every e_k^d / e_d^k is
    an algebraic integer and its complex conjugate equals e_{d−k}^d / e_d^{d−k}.

    Returns
    -------
    bool
        True when one of these necessary conditions fails, i.e. the
        projective order is certainly infinite
    """
    d = M.dim
    if d < 2:
        return False
    e = _char_coeffs(M)
    det = e[d]
    if det.is_zero():
        raise ZeroDivisionError("Singular matrix has no projective order")
    invariants = [e[k] ** d / det ** k for k in range(d + 1)]
    for k in range(1, d):
        if not invariants[k].is_integral():
            return True
        if invariants[k].conj() != invariants[d - k]:
            return True
    return False


def numeric_screen(M, tolerance=1e-8):
    """
    True when, in some complex embedding, the eigenvalues of M do not all
    have the same modulus.
    """
    m = M.ctx.m
    for k in range(1, m // 2 + 1):
        if gcd(k, m) != 1:
            continue
        moduli = np.abs(np.linalg.eigvals(M.to_numpy(k)))
        if moduli.max() / moduli.min() - 1 > tolerance:
            return True
    return False


def minimal_polynomial(M):
    """
    Coefficients c_0 … c_{k−1} with M^k = Σ c_j M^j and k minimal.

    Returns
    -------
    list of :class:`~tqftrep.scalar.CycloScalar`
    """
    ctx = M.ctx
    powers = [M.identity_like()]
    vectors = [[x for row in powers[0].entries for x in row]]
    for k in range(1, M.dim + 1):
        powers.append(powers[-1] @ M)
        vectors.append([x for row in powers[-1].entries for x in row])
        rows = [list(col) for col in zip(*vectors)]
        kernel = nullspace(rows, ctx)
        if kernel:
            v = kernel[0]
            lead = v[k]
            return [-(x / lead) for x in v[:k]]
    raise ArithmeticError("Cayley-Hamilton failed for %r" % M)


def _scan(M, limit):
    coeffs = minimal_polynomial(M)
    k = len(coeffs)
    if k == 1:
        return 1
    ctx = M.ctx
    # x^n reduced modulo the minimal polynomial, starting at n = 1
    state = [ctx.zero() for _ in range(k)]
    state[1] = ctx.one()
    for n in range(1, limit + 1):
        if all(x.is_zero() for x in state[1:]):
            return n
        top = state[-1]
        state = [ctx.zero()] + state[:-1]
        if not top.is_zero():
            state = [x + top * c for x, c in zip(state, coeffs)]
    return None


def projective_order(M):
    """
    Exact projective order of an invertible matrix.

    Parameters
    ----------
    M : :class:`~tqftrep.rep.RepMatrix`

    Returns
    -------
    :class:`OrderResult`
    """
    if M.det().is_zero():
        raise ZeroDivisionError("Singular matrix has no projective order")
    candidates = candidate_set(M.dim, M.ctx.m)
    bound = candidates[-1]
    if is_scalar(M) is not None:
        return OrderResult(FINITE, 1, 'scalarPowerScan')
    if ratio_certificate(M):
        return OrderResult(INFINITE, None, 'ratioTest', bound)
    if numeric_screen(M):
        logging.info("Numeric screen flags %r as infinite; confirming by exact scan to %d", M, bound)
    n = _scan(M, bound)
    if n is None:
        return OrderResult(INFINITE, None, 'scalarPowerScan', bound)
    return OrderResult(FINITE, n, 'scalarPowerScan')


def expected_generator_order(r):
    """Order of −q for q of order r: 2r (r odd), r/2 (r ≡ 2 mod 4), r (r ≡ 0 mod 4)."""
    if r % 2:
        return 2 * r
    if r % 4 == 2:
        return r // 2
    return r


def order_rule(r):
    if r % 2:
        return "2r"
    return "r/2" if r % 4 == 2 else "r"
