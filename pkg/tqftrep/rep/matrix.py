"""
This module holds :class:`RepMatrix`, a square matrix of exact cyclotomic
scalars attached to a context and (optionally) a path basis, together with
the small pieces of exact linear algebra the analysis needs.
"""
import numpy as np

from ..errors import DimensionError, ParseError
from ..scalar import CycloScalar, TheoryCtx

__all__ = ["RepMatrix", "nullspace", "VARIANTS"]

VARIANTS = ('rho', 'rhoTilde')


def nullspace(rows, ctx):
    """
    Basis of the right null space of a matrix over Q(ζ_m).

    Parameters
    ----------
    rows : list of list of CycloScalar
        The matrix, possibly rectangular
    ctx : :class:`~tqftrep.scalar.TheoryCtx`

    Returns
    -------
    list of list of CycloScalar
        Column vectors spanning the kernel
    """
    if not rows:
        return []
    work = [list(r) for r in rows]
    ncols = len(work[0])
    pivots = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(work)) if not work[r][col].is_zero()), None)
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        inv = work[row][col].inverse
        work[row] = [x * inv for x in work[row]]
        for r in range(len(work)):
            if r != row and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
        if row == len(work):
            break
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [ctx.zero() for _ in range(ncols)]
        vec[free] = ctx.one()
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][free]
        basis.append(vec)
    return basis


class RepMatrix(object):
    """
    An exact square matrix acting on a path basis.

    Parameters
    ----------
    ctx : :class:`~tqftrep.scalar.TheoryCtx`
    entries : list of list of :class:`~tqftrep.scalar.CycloScalar`
    basis : list of tuple, optional
        Path basis labelling rows and columns
    variant : str
        ``'rho'`` or ``'rhoTilde'``
    n : int, optional
    m_color : int, optional
    """
    def __init__(self, ctx, entries, basis=None, variant='rhoTilde', n=None, m_color=None):
        self.ctx = ctx
        self.entries = [list(row) for row in entries]
        d = len(self.entries)
        if any(len(row) != d for row in self.entries):
            raise DimensionError("Matrix is not square")
        if basis is not None and len(basis) != d:
            raise DimensionError("Basis of size %d for a %dx%d matrix" % (len(basis), d, d))
        if variant not in VARIANTS:
            raise DimensionError("Unknown variant %r" % variant)
        self.basis = list(basis) if basis is not None else None
        self.variant = variant
        self.n = n
        self.m_color = m_color

    @property
    def dim(self):
        return len(self.entries)

    def _like(self, entries, variant=None):
        return RepMatrix(self.ctx, entries, self.basis, variant or self.variant, self.n, self.m_color)

    @classmethod
    def identity(cls, ctx, d, **kwargs):
        entries = [[ctx.one() if r == c else ctx.zero() for c in range(d)] for r in range(d)]
        return cls(ctx, entries, **kwargs)

    def identity_like(self):
        return RepMatrix.identity(self.ctx, self.dim, basis=self.basis, variant=self.variant,
                                  n=self.n, m_color=self.m_color)

    def _check(self, other):
        if other.dim != self.dim:
            raise DimensionError("Dimension mismatch %d vs %d" % (self.dim, other.dim))

    def __add__(self, other):
        self._check(other)
        return self._like([[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check(other)
        return self._like([[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return self._like([[x * c for x in row] for row in self.entries])

    def __matmul__(self, other):
        self._check(other)
        cols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            new_row = []
            for col in cols:
                total = self.ctx.zero()
                for x, y in zip(row, col):
                    if not x.is_zero() and not y.is_zero():
                        total = total + x * y
                new_row.append(total)
            out.append(new_row)
        return self._like(out)

    __mul__ = __matmul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.identity_like()
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def transpose(self):
        return self._like([list(col) for col in zip(*self.entries)])

    def trace(self):
        total = self.ctx.zero()
        for k in range(self.dim):
            total = total + self.entries[k][k]
        return total

    def _eliminate(self, augment):
        d = self.dim
        work = [list(row) + list(aug) for row, aug in zip(self.entries, augment)]
        det = self.ctx.one()
        for col in range(d):
            pivot = next((r for r in range(col, d) if not work[r][col].is_zero()), None)
            if pivot is None:
                return None, self.ctx.zero()
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            p = work[col][col]
            det = det * p
            inv = p.inverse
            work[col] = [x * inv for x in work[col]]
            for r in range(d):
                if r != col and not work[r][col].is_zero():
                    f = work[r][col]
                    work[r] = [x - f * y for x, y in zip(work[r], work[col])]
        return work, det

    def det(self):
        if self.dim == 2:
            (a, b), (c, d) = self.entries
            return a * d - b * c
        return self._eliminate([[] for _ in range(self.dim)])[1]

    def inverse(self):
        """
        Exact inverse by Gauss-Jordan elimination.

        Raises
        ------
        ZeroDivisionError
            When the matrix is singular
        """
        ident = self.identity_like().entries
        work, _ = self._eliminate(ident)
        if work is None:
            raise ZeroDivisionError("Singular %dx%d matrix" % (self.dim, self.dim))
        return self._like([row[self.dim:] for row in work])

    def galois(self, t):
        """Entrywise σ_t; the result lives in the context at A^t."""
        return RepMatrix(self.ctx.galois(t), [[x.galois(t) for x in row] for row in self.entries],
                         self.basis, self.variant, self.n, self.m_color)

    def is_identity(self):
        return self == self.identity_like()

    def is_zero(self):
        return all(x.is_zero() for row in self.entries for x in row)

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        if self.dim != other.dim:
            return False
        return all(x == y for r1, r2 in zip(self.entries, other.entries) for x, y in zip(r1, r2))

    __hash__ = None

    def first_difference(self, other):
        """
        The first entry (row-major) where two matrices differ.

        Returns
        -------
        dict or None
            ``{"row", "col", "lhs", "rhs"}`` with the scalars rendered as strings
        """
        for r, (r1, r2) in enumerate(zip(self.entries, other.entries)):
            for c, (x, y) in enumerate(zip(r1, r2)):
                if x != y:
                    return {"row": r, "col": c, "lhs": str(x), "rhs": str(y)}
        return None

    def projective_key(self):
        """
        Exact hashable key of the matrix up to scalars: the entries divided
        by the first nonzero entry in row-major order.
        """
        lead = next(x for row in self.entries for x in row if not x.is_zero())
        inv = lead.inverse
        return tuple((x * inv).key() for row in self.entries for x in row)

    def projective_normalize(self):
        """The representative of the projective class whose first nonzero entry is 1."""
        lead = next(x for row in self.entries for x in row if not x.is_zero())
        return self.scale(lead.inverse)

    def to_numpy(self, k=1):
        return np.array([[x.embed(k) for x in row] for row in self.entries], dtype=complex)

    def to_json(self):
        return {"ctx": self.ctx.to_json(),
                "n": self.n,
                "m_color": self.m_color,
                "variant": self.variant,
                "basis": [list(p) for p in self.basis] if self.basis is not None else None,
                "entries": [[x.to_json() for x in row] for row in self.entries]}

    @classmethod
    def from_json(cls, obj):
        try:
            ctx = TheoryCtx(int(obj["ctx"]["m"]), int(obj["ctx"].get("s", 1)))
            entries = [[CycloScalar.from_json(x).lift(ctx.m) for x in row] for row in obj["entries"]]
            basis = obj.get("basis")
            if basis is not None:
                basis = [tuple(p) for p in basis]
            return cls(ctx, entries, basis, obj.get("variant", "rhoTilde"), obj.get("n"), obj.get("m_color"))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError("Malformed matrix JSON: %s" % exc)

    def __repr__(self):
        return "RepMatrix(%s, dim=%d, %s)" % (self.variant, self.dim, self.ctx)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
