"""
Helpers shared by the tests: small exact matrices and contexts.
"""
from math import gcd

from tqftrep.rep import RepMatrix
from tqftrep.scalar import TheoryCtx


def units(m):
    """The exponents s with A = zeta_m^s primitive."""
    return [s for s in range(1, m) if gcd(s, m) == 1]


def level(r, theory='su2'):
    return TheoryCtx.from_level(r, theory)


def direct_sum(first, second):
    """Block-diagonal sum of two exact matrices over the same context."""
    ctx = first.ctx
    d1, d2 = first.dim, second.dim
    entries = []
    for r in range(d1 + d2):
        row = []
        for c in range(d1 + d2):
            if r < d1 and c < d1:
                row.append(first.entries[r][c])
            elif r >= d1 and c >= d1:
                row.append(second.entries[r - d1][c - d1])
            else:
                row.append(ctx.zero())
        entries.append(row)
    return RepMatrix(ctx, entries)


def scalar_matrix(ctx, d, value):
    return RepMatrix.identity(ctx, d).scale(value)


def from_rows(ctx, rows):
    """Matrix from nested lists of ints or Fractions."""
    return RepMatrix(ctx, [[ctx.const(x) for x in row] for row in rows])
