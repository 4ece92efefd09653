"""
The quantum-group (RT) braid representation ρ^J on the same path bases,
computed in complex double precision, and its comparison with ρ̃.

Conventions: q = exp(2πi/r), q^{s} = exp(2πis/r) for fractional s, conformal
weights Δ_j = j(j+2)/(4r) and [n] = sin(πn/r)/sin(π/r).  The mixing block on
channels (a−1, a+1) is

    B_ij = (−1)^{(2a−i−j)/2} exp(πi(2Δ_a − Δ_i − Δ_j)) F_ij,
    F = (1/[a+1]) [[−1, −√([a][a+2])], [−√([a][a+2]), 1]],

which is unitary with eigenvalues q^{1/4} and −q^{−3/4}.
"""
import logging
from functools import lru_cache
from math import gcd

import numpy as np

from .bhmv import rho_gen, rho_gen_inverse, nonempty_basis
from .paths import basis_index
from .words import BraidWord, random_balanced_word
from .. import tqftrep_config
from ..errors import ContextError, DimensionError

__all__ = ["RTContext", "conformal_weight", "rt_braiding_block", "printed_braiding_block",
           "freeze_signs", "rt_rho_gen", "rt_rho_word", "rt_braid_residual", "rt_unitarity_deviation",
           "rt_embedding", "check_equivalence", "block_discrepancy"]


class RTContext(object):
    """
    Numeric context for level `r`.

    Parameters
    ----------
    r : int
        Level, at least 3
    """
    def __init__(self, r):
        if r < 3:
            raise ContextError("RT level must be at least 3, got %d" % r)
        self.r = r
        self.q_c = np.exp(2j * np.pi / r)
        self.quarter = np.exp(0.5j * np.pi / r)
        self.colorMax = r - 2
        self.rEff = r
        if abs(abs(self.q_c) - 1) > 1e-15:
            raise ContextError("q is not on the unit circle")

    def qpow(self, s):
        """q^s for a rational exponent s, with q^{1/4} = exp(πi/(2r))."""
        return np.exp(2j * np.pi * s / self.r)

    def qint(self, n):
        return np.sin(np.pi * n / self.r) / np.sin(np.pi / self.r)

    def __repr__(self):
        return "RTContext(r=%d)" % self.r


def conformal_weight(rctx, j):
    return j * (j + 2) / (4.0 * rctx.r)


def _phase(rctx, j1, j4, i, j):
    sign = -1 if ((j1 + j4 - i - j) // 2) % 2 else 1
    weights = (conformal_weight(rctx, j1) + conformal_weight(rctx, j4)
               - conformal_weight(rctx, i) - conformal_weight(rctx, j))
    return sign * np.exp(1j * np.pi * weights)


def rt_braiding_block(rctx, a):
    """
    The unitary 2×2 braiding block for two unit strands between colors a, a.

    Rows and columns are the channels (a−1, a+1), so both must be colors:
    1 <= a <= colorMax − 1.

    Returns
    -------
    numpy.ndarray
        Complex 2×2 matrix

    Raises
    ------
    :class:`~tqftrep.errors.DimensionError`
        When a channel falls outside 0..colorMax
    """
    if not 1 <= a <= rctx.colorMax - 1:
        raise DimensionError("Color %d has no two-channel block in 0..%d" % (a, rctx.colorMax))
    s = np.sqrt(max(rctx.qint(a) * rctx.qint(a + 2), 0.0))
    fusion = np.array([[-1.0, -s], [-s, 1.0]]) / rctx.qint(a + 1)
    channels = (a - 1, a + 1)
    block = np.empty((2, 2), dtype=complex)
    for x, i in enumerate(channels):
        for y, j in enumerate(channels):
            block[x, y] = _phase(rctx, a, a, i, j) * fusion[x, y]
    return block


def printed_braiding_block(rctx, a):
    """
    The braiding block in the closed form
    [[−q^{a+1/4} √([a]/([2][a+1])), −q^{−1/4} √([a+2]/([2][a+1]))],
     [−q^{−1/4} √([a+2]/([2][a+1])), −q^{−a−3/4} √([a]/([2][a+1]))]]
    with [n] = (q^n − q^{−n})/(q − q^{−1}).  It is kept for comparison only:
    it is not unitary in general.
    """
    def bracket(n):
        return (rctx.q_c ** n - rctx.q_c ** -n) / (rctx.q_c - rctx.q_c ** -1)

    den = bracket(2) * bracket(a + 1)
    if abs(den) < 1e-12:
        raise DimensionError("[2][%d] vanishes at r=%d" % (a + 1, rctx.r))
    lo = np.lib.scimath.sqrt(bracket(a) / den)
    hi = np.lib.scimath.sqrt(bracket(a + 2) / den)
    return np.array([[-rctx.qpow(a + 0.25) * lo, -rctx.qpow(-0.25) * hi],
                     [-rctx.qpow(-0.25) * hi, -rctx.qpow(-a - 0.75) * lo]], dtype=complex)


def block_discrepancy(rctx):
    """
    Per color a, how far the closed-form block is from unitary and from the
    unitary block used for ρ^J.

    Returns
    -------
    list of dict
    """
    rows = []
    for a in range(1, rctx.colorMax):
        try:
            printed = printed_braiding_block(rctx, a)
        except DimensionError:
            continue
        block = rt_braiding_block(rctx, a)
        rows.append({"a": a,
                     "printed_unitarity": float(np.abs(printed @ printed.conj().T - np.eye(2)).max()),
                     "block_unitarity": float(np.abs(block @ block.conj().T - np.eye(2)).max()),
                     "max_entry_difference": float(np.abs(printed - block).max())})
    return rows


def _single_channel_cases(rctx):
    cases = []
    for a in range(rctx.colorMax + 1):
        for a2 in (a - 2, a + 2):
            if 0 <= a2 <= rctx.colorMax:
                cases.append((a, a2, (a + a2) // 2))
        channels = [c for c in (a - 1, a + 1) if 0 <= c <= rctx.colorMax]
        if len(channels) == 1:
            cases.append((a, a, channels[0]))
    return cases


@lru_cache(maxsize=None)
def _frozen(r):
    rctx = RTContext(r)
    targets = (-rctx.qpow(-0.75), rctx.qpow(0.25))
    table = {}
    for a, a2, c in _single_channel_cases(rctx):
        value = _phase(rctx, a, a2, c, c)
        plus = min(abs(value - t) for t in targets)
        minus = min(abs(-value - t) for t in targets)
        table[(a, a2, c)] = 1 if plus <= minus else -1
    return table


def freeze_signs(rctx):
    """
    Signs of the one-dimensional fusion entries.

    For each non-mixing configuration (a, a′, c) the sign is chosen so that
    the generator acts by one of the two Hecke eigenvalues q^{1/4}, −q^{−3/4};
    the braid relations are then checked separately.

    Returns
    -------
    list of dict
        ``{"a", "a_prime", "c", "sign"}`` rows
    """
    return [{"a": a, "a_prime": a2, "c": c, "sign": s}
            for (a, a2, c), s in sorted(_frozen(rctx.r).items())]


def rt_rho_gen(rctx, basis, i):
    """Image of g_i under ρ^J on a path basis, as a complex matrix."""
    index = basis_index(basis)
    signs = _frozen(rctx.r)
    d = len(basis)
    mat = np.zeros((d, d), dtype=complex)
    blocks = {}
    for col, p in enumerate(basis):
        a, c, a2 = p[i - 1], p[i], p[i + 1]
        lower = p[:i] + (a - 1,) + p[i + 1:]
        upper = p[:i] + (a + 1,) + p[i + 1:]
        if a == a2 and lower in index and upper in index:
            if a not in blocks:
                blocks[a] = rt_braiding_block(rctx, a)
            y = 0 if c == a - 1 else 1
            mat[index[lower], col] = blocks[a][0, y]
            mat[index[upper], col] = blocks[a][1, y]
        else:
            mat[col, col] = signs[(a, a2, c)] * _phase(rctx, a, a2, c, c)
    return mat


def _basis_for(rctx, n, m):
    if not 0 <= m <= rctx.colorMax:
        raise DimensionError("Color %d is outside 0..%d" % (m, rctx.colorMax))
    return nonempty_basis(rctx, n, m)


def rt_rho_word(rctx, n, m, w):
    """
    ρ^J of a braid word on V(n, m).

    Returns
    -------
    numpy.ndarray
    """
    basis = _basis_for(rctx, n, m)
    gens = {i: rt_rho_gen(rctx, basis, i) for i in range(1, n)}
    result = np.eye(len(basis), dtype=complex)
    for i, e in w.letters:
        g = gens[i]
        result = result @ (g if e == 1 else g.conj().T)
    return result


def rt_braid_residual(rctx, n, m):
    """Largest entry of ρ^J(g_i g_{i+1} g_i) − ρ^J(g_{i+1} g_i g_{i+1}) and of distant commutators."""
    basis = _basis_for(rctx, n, m)
    gens = [rt_rho_gen(rctx, basis, i) for i in range(1, n)]
    worst = 0.0
    for k, g in enumerate(gens):
        if k + 1 < len(gens):
            h = gens[k + 1]
            worst = max(worst, np.abs(g @ h @ g - h @ g @ h).max())
        for h in gens[k + 2:]:
            worst = max(worst, np.abs(g @ h - h @ g).max())
    return float(worst)


def rt_unitarity_deviation(rctx, n, m):
    basis = _basis_for(rctx, n, m)
    worst = 0.0
    for i in range(1, n):
        g = rt_rho_gen(rctx, basis, i)
        worst = max(worst, np.abs(g @ g.conj().T - np.eye(len(basis))).max())
    return float(worst)


def rt_embedding(ctx, r):
    """
    The embedding index k (ζ_m ↦ exp(2πik/m)) under which A⁴ goes to exp(2πi/r).

    Raises
    ------
    :class:`~tqftrep.errors.ContextError`
        When no such embedding exists
    """
    target = np.exp(2j * np.pi / r)
    a4 = ctx.A_pow(4)
    for k in range(1, ctx.m):
        if gcd(k, ctx.m) == 1 and abs(a4.embed(k) - target) < 1e-12:
            return k
    raise ContextError("No embedding of %s sends A^4 to exp(2 pi i/%d)" % (ctx, r))


def check_equivalence(ctx, rctx, n, m, trials=None, seed=None, max_len=12):
    """
    Compare traces of ρ̃ and ρ^J on random balanced words.

    Balanced words have exponent sum zero, so the per-generator scalar
    relating the two representations cancels.

    Parameters
    ----------
    ctx : :class:`~tqftrep.scalar.TheoryCtx`
    rctx : :class:`RTContext`
        Must have r equal to the effective level of `ctx`
    n, m : int
    trials : int, optional
        Defaults to ``tqftrep_config.default_trials``
    seed : int, optional
        Defaults to ``tqftrep_config.default_seed``
    max_len : int

    Returns
    -------
    dict
        ``{"max_trace_dev", "trials", "pass", "frozen_signs", ...}``
    """
    if ctx.rEff != rctx.r:
        raise ContextError("Level mismatch: rEff=%d but r=%d" % (ctx.rEff, rctx.r))
    trials = tqftrep_config.default_trials if trials is None else trials
    seed = tqftrep_config.default_seed if seed is None else seed
    k = rt_embedding(ctx, rctx.r)
    basis = nonempty_basis(ctx, n, m)
    exact = {}
    numeric = {}
    for i in range(1, n):
        exact[(i, 1)] = rho_gen(ctx, n, m, i).to_numpy(k)
        exact[(i, -1)] = rho_gen_inverse(ctx, n, m, i).to_numpy(k)
        g = rt_rho_gen(rctx, basis, i)
        numeric[(i, 1)] = g
        numeric[(i, -1)] = g.conj().T

    rng = np.random.default_rng(seed)
    worst = 0.0
    worst_word = BraidWord(n)
    d = len(basis)
    for _ in range(trials):
        w = random_balanced_word(rng, n, max_len)
        lhs = np.eye(d, dtype=complex)
        rhs = np.eye(d, dtype=complex)
        for letter in w.letters:
            lhs = lhs @ exact[letter]
            rhs = rhs @ numeric[letter]
        dev = abs(np.trace(lhs) - np.trace(rhs))
        if dev > worst:
            worst, worst_word = dev, w
    tol = tqftrep_config.numeric_tolerance
    if worst >= tol:
        logging.warning("Trace deviation %g on %s at r=%d", worst, worst_word, rctx.r)
    return {"r": rctx.r, "n": n, "m_color": m, "embedding": k, "seed": seed,
            "trials": trials, "max_trace_dev": float(worst), "worst_word": str(worst_word),
            "pass": bool(worst < tol), "frozen_signs": freeze_signs(rctx)}
