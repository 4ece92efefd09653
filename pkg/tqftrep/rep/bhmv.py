"""
The skein (BHMV) representation of the braid group B_n on V(n, m).

Generators are built in the rescaled normalisation ρ̃ = (−A⁻¹)ρ from the
local rule on the triple (a, c, a′) = (p_{i−1}, p_i, p_{i+1}) of each path,
with q = A⁻⁴:

  * |a − a′| = 2: the path is an eigenvector with eigenvalue −1;
  * a = a′ with both channels c = a ± 1 in range: a 2×2 block with
    diagonal q^{a+1}(q−1)/(q^{a+1}−1) at c = a+1 and (q−1)/(1−q^{a+1}) at
    c = a−1, entry −A⁻² in row a−1 / column a+1 and
    −A⁻²(1−q^a)(1−q^{a+2})/(1−q^{a+1})² in row a+1 / column a−1;
  * a = a′ with a single channel in range: the eigenvalue q.

The unscaled ρ multiplies every letter by −A.
"""
from functools import lru_cache
from math import gcd

from .matrix import RepMatrix, VARIANTS
from .paths import path_basis, basis_index
from .words import BraidWord
from ..errors import DimensionError
from ..recoupling import twist_coeff

__all__ = ["rho_gen", "rho_gen_inverse", "rho_word", "pure_braid_gen", "pure_braid_word",
           "dehn_twist_scalar", "rho_dehn_spectrum", "generator_blocks", "twist_check",
           "galois_check", "letter_scalar", "nonempty_basis"]


def nonempty_basis(ctx, n, m):
    basis = path_basis(ctx, n, m)
    if not basis:
        raise DimensionError("V(%d,%d) is empty at rEff=%d" % (n, m, ctx.rEff))
    return basis


def letter_scalar(ctx, variant, exponent=1):
    """Scalar relating the two normalisations on one letter: ρ = (−A)ρ̃."""
    if variant == 'rhoTilde':
        return ctx.one()
    return (-ctx.A_pow(1)) if exponent == 1 else (-ctx.A_pow(-1))


def generator_blocks(ctx, basis, i):
    """
    The invariant blocks of ρ̃(g_i) as lists of basis positions.

    Mixing blocks are ordered (c = a−1, c = a+1).
    """
    index = basis_index(basis)
    seen = set()
    blocks = []
    for p in basis:
        if p in seen:
            continue
        a, c, a2 = p[i - 1], p[i], p[i + 1]
        if a == a2:
            partners = []
            for cc in (a - 1, a + 1):
                q = p[:i] + (cc,) + p[i + 1:]
                if q in index:
                    partners.append(q)
            seen.update(partners)
            blocks.append([index[q] for q in partners])
        else:
            seen.add(p)
            blocks.append([index[p]])
    return blocks


def _local_entries(ctx, basis, i):
    q = ctx.q
    index = basis_index(basis)
    d = len(basis)
    entries = [[ctx.zero() for _ in range(d)] for _ in range(d)]
    for col, p in enumerate(basis):
        a, c, a2 = p[i - 1], p[i], p[i + 1]
        if a != a2:
            entries[col][col] = -ctx.one()
            continue
        lower = p[:i] + (a - 1,) + p[i + 1:]
        upper = p[:i] + (a + 1,) + p[i + 1:]
        if lower not in index or upper not in index:
            entries[col][col] = q
            continue
        qa1 = q ** (a + 1)
        if c == a + 1:
            entries[col][col] = qa1 * (q - 1) / (qa1 - 1)
            entries[index[lower]][col] = -ctx.A_pow(-2)
        else:
            entries[col][col] = (q - 1) / (1 - qa1)
            entries[index[upper]][col] = (-ctx.A_pow(-2) * (1 - q ** a) * (1 - q ** (a + 2))
                                          / ((1 - qa1) * (1 - qa1)))
    return entries


@lru_cache(maxsize=None)
def _generator(ctx, n, m, i, variant):
    basis = nonempty_basis(ctx, n, m)
    entries = _local_entries(ctx, basis, i)
    mat = RepMatrix(ctx, entries, basis, 'rhoTilde', n, m)
    if variant == 'rho':
        mat = RepMatrix(ctx, mat.scale(letter_scalar(ctx, 'rho')).entries, basis, 'rho', n, m)
    return mat


def rho_gen(ctx, n, m, i, variant='rhoTilde'):
    """
    Image of the generator g_i on V(n, m).

    Parameters
    ----------
    ctx : :class:`~tqftrep.scalar.TheoryCtx`
    n, m : int
        Strand count and final color
    i : int
        Generator index, 1 ≤ i ≤ n−1
    variant : str
        ``'rhoTilde'`` (default) or ``'rho'``

    Returns
    -------
    :class:`~tqftrep.rep.RepMatrix`
        Rows and columns in lexicographic path order

    Raises
    ------
    :class:`~tqftrep.errors.DimensionError`
        For an index out of range or an empty basis
    """
    if not 1 <= i <= n - 1:
        raise DimensionError("Generator g%d is not in B_%d" % (i, n))
    if variant not in VARIANTS:
        raise DimensionError("Unknown variant %r" % variant)
    return _generator(ctx, n, m, i, variant)


@lru_cache(maxsize=None)
def _generator_inverse(ctx, n, m, i, variant):
    g = _generator(ctx, n, m, i, 'rhoTilde')
    q = ctx.q
    # Hecke relation: ρ̃(g)⁻¹ = q⁻¹(ρ̃(g) − (q − 1))
    inv = (g - g.identity_like().scale(q - 1)).scale(q.inverse)
    if variant == 'rho':
        inv = RepMatrix(ctx, inv.scale(letter_scalar(ctx, 'rho', -1)).entries, g.basis, 'rho', n, m)
    return inv


def rho_gen_inverse(ctx, n, m, i, variant='rhoTilde'):
    if not 1 <= i <= n - 1:
        raise DimensionError("Generator g%d is not in B_%d" % (i, n))
    return _generator_inverse(ctx, n, m, i, variant)


def rho_word(ctx, n, m, w, variant='rhoTilde'):
    """
    Image of a braid word.

    Parameters
    ----------
    ctx : :class:`~tqftrep.scalar.TheoryCtx`
    n, m : int
    w : :class:`~tqftrep.rep.BraidWord`
    variant : str

    Returns
    -------
    :class:`~tqftrep.rep.RepMatrix`
    """
    if w.n != n:
        raise DimensionError("Word in B_%d applied to V(%d,%d)" % (w.n, n, m))
    basis = nonempty_basis(ctx, n, m)
    result = RepMatrix.identity(ctx, len(basis), basis=basis, variant=variant, n=n, m_color=m)
    for i, e in w.letters:
        g = rho_gen(ctx, n, m, i, variant) if e == 1 else rho_gen_inverse(ctx, n, m, i, variant)
        result = result @ g
    return result


def pure_braid_word(n, i, j):
    """(g_{j−1} ⋯ g_{i+1}) g_i² (g_{j−1} ⋯ g_{i+1})⁻¹ for 1 ≤ i < j ≤ n."""
    if not 1 <= i < j <= n:
        raise DimensionError("Pure braid A_%d%d needs 1 <= i < j <= %d" % (i, j, n))
    conj = BraidWord(n, [(k, 1) for k in range(j - 1, i, -1)])
    return conj * BraidWord(n, [(i, 1), (i, 1)]) * conj.inverse()


def pure_braid_gen(ctx, n, m, i, j, variant='rhoTilde'):
    return rho_word(ctx, n, m, pure_braid_word(n, i, j), variant)


def dehn_twist_scalar(ctx, j):
    """Twist eigenvalue (−1)^j A^{j²+2j} on a boundary circle colored j."""
    value = ctx.A_pow(j * j + 2 * j)
    return -value if j % 2 else value


def rho_dehn_spectrum(ctx):
    """
    Possible eigenvalues of ρ(g_i): the half-twist coefficients of two
    strands colored 1 in the admissible channels 0 and 2.
    """
    return [twist_coeff(ctx, c, 1, 1) for c in (0, 2) if c <= ctx.colorMax]


def twist_check(ctx, n, m):
    """
    ρ(g_1) is diagonal with the half-twist coefficient δ(p_2; 1, 1) on each path.

    Returns
    -------
    dict
        ``{"relation": "twist", "pass": bool, "witness": ...}``
    """
    g = rho_gen(ctx, n, m, 1, 'rho')
    expected = RepMatrix(ctx, [[twist_coeff(ctx, p[2], 1, 1) if r == c else ctx.zero()
                                for c in range(g.dim)] for r, p in enumerate(g.basis)],
                         g.basis, 'rho', n, m)
    witness = g.first_difference(expected)
    return {"relation": "twist", "generators": [1], "pass": witness is None, "witness": witness}


def galois_check(ctx, n, m, t):
    """
    σ_t applied entrywise to ρ̃(g_i) at A equals ρ̃(g_i) built at A^t.

    Returns
    -------
    dict
    """
    if gcd(t, ctx.m) != 1:
        raise DimensionError("%d is not a unit modulo %d" % (t, ctx.m))
    other = ctx.galois(t)
    witness = None
    for i in range(1, n):
        lhs = rho_gen(ctx, n, m, i).galois(t)
        rhs = rho_gen(other, n, m, i)
        diff = lhs.first_difference(rhs)
        if diff is not None:
            witness = dict(diff, generator=i)
            break
    return {"relation": "galois", "t": t, "pass": witness is None, "witness": witness}
