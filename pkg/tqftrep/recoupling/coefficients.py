"""
Closed-form recoupling coefficients: quantum integers, loop values, twist
eigenvalues, theta and tetrahedron networks and quantum 6j-symbols.

Every function takes the :class:`~tqftrep.scalar.TheoryCtx` first and
returns an exact :class:`~tqftrep.scalar.CycloScalar`.
"""
import functools
from collections import namedtuple

from ..errors import InadmissibleError

__all__ = ["ColorTriple", "qint", "qfact", "bracket", "delta_i", "internal_colors", "admissible",
           "twist_coeff", "theta", "tet", "sixj", "fusion_matrix", "lemma_battery"]


ColorTriple = namedtuple('ColorTriple', ['i', 'j', 'k'])


def qint(ctx, n):
    return ctx.qint(n)


def qfact(ctx, n):
    """
    Quantum factorial [n]! = [1][2]...[n].

    Parameters
    ----------
    ctx : :class:`~tqftrep.scalar.TheoryCtx`
    n : int
        Non-negative

    Returns
    -------
    :class:`~tqftrep.scalar.CycloScalar`
    """
    if n < 0:
        raise InadmissibleError("Quantum factorial of negative integer %d" % n)
    return ctx.qfact(n)


def _sign(k):
    return -1 if k % 2 else 1


def bracket(ctx, k):
    """The loop value <k> = (−1)^k [k+1] of a strand colored k."""
    if k < 0:
        raise InadmissibleError("Negative color %d" % k)
    return ctx.qint(k + 1) * _sign(k)


def delta_i(ctx, i):
    return bracket(ctx, i)


def internal_colors(a, b, c):
    """
    Strand counts between the three legs of a vertex colored (a, b, c).

    Returns
    -------
    tuple of int
        (i, j, k) with i between b and c, j between a and c, k between a and b
    """
    return (b + c - a) // 2, (a + c - b) // 2, (a + b - c) // 2


def admissible(ctx, t):
    """
    Admissibility of a color triple at the level of `ctx`.

    Parameters
    ----------
    ctx : :class:`~tqftrep.scalar.TheoryCtx`
    t : tuple of int
        Three colors

    Returns
    -------
    bool
    """
    i, j, k = t
    if min(i, j, k) < 0 or max(i, j, k) > ctx.colorMax:
        return False
    if (i + j + k) % 2:
        return False
    if not abs(i - j) <= k <= i + j:
        return False
    return i + j + k <= 2 * ctx.colorMax


def checks_admissible(faces):
    """
    Decorator for coefficient functions defined only on admissible labels.

    `faces` maps the color arguments to the triples that must be admissible.
    An :class:`~tqftrep.errors.InadmissibleError` naming the first bad triple
    is raised instead of calling the real function.
    """
    def decorator(f):
        @functools.wraps(f)
        def wrapper(ctx, *labels):
            for t in faces(*labels):
                if not admissible(ctx, t):
                    raise InadmissibleError("%s%r: triple %r is not admissible at rEff=%d"
                                            % (f.__name__, labels, tuple(t), ctx.rEff))
            return f(ctx, *labels)
        return wrapper
    return decorator


@checks_admissible(lambda c, a, b: [(a, b, c)])
def twist_coeff(ctx, c, a, b):
    """
    Eigenvalue of the positive half twist on strands colored a, b fusing to c.

    δ(c; a, b) = (−1)^k A^{ij − k(i+j+k+2)} with (i, j, k) the internal colors.
    """
    i, j, k = internal_colors(a, b, c)
    return ctx.A_pow(i * j - k * (i + j + k + 2)) * _sign(k)


@checks_admissible(lambda a, b, c: [(a, b, c)])
def theta(ctx, a, b, c):
    i, j, k = internal_colors(a, b, c)
    num = ctx.qfact(i + j + k + 1) * ctx.qfact(i) * ctx.qfact(j) * ctx.qfact(k)
    den = ctx.qfact(i + j) * ctx.qfact(i + k) * ctx.qfact(j + k)
    return num / den * _sign(i + j + k)


def tet_faces(a, b, e, d, c, f):
    return [(a, b, e), (b, d, f), (e, d, c), (a, c, f)]


@checks_admissible(tet_faces)
def tet(ctx, a, b, e, d, c, f):
    """
    Tetrahedron network value.

    The six colors are read row by row from the array [A B E; D C F]; the
    vertex triples are (A,B,E), (B,D,F), (E,D,C), (A,C,F) and the opposite
    edge pairs are {A,D}, {B,C}, {E,F}.

    Returns
    -------
    :class:`~tqftrep.scalar.CycloScalar`
    """
    total = a + b + c + d + e + f
    lows = [(a + b + e) // 2, (b + d + f) // 2, (e + d + c) // 2, (a + c + f) // 2]
    highs = [(total - a - d) // 2, (total - b - c) // 2, (total - e - f) // 2]

    prefactor = ctx.one()
    for hi in highs:
        for lo in lows:
            prefactor = prefactor * ctx.qfact(hi - lo)
    for x in (a, b, c, d, e, f):
        prefactor = prefactor / ctx.qfact(x)

    series = ctx.zero()
    for z in range(max(lows), min(highs) + 1):
        den = ctx.one()
        for hi in highs:
            den = den * ctx.qfact(hi - z)
        for lo in lows:
            den = den * ctx.qfact(z - lo)
        series = series + ctx.qfact(z + 1) / den * _sign(z)
    return prefactor * series


def sixj(ctx, a, b, i, c, d, j):
    """
    Quantum 6j-symbol {a b i; c d j} = <i> Tet[i b c; j d a] / (θ(i,a,d) θ(i,b,c)).
    """
    for t in [(i, a, d), (i, b, c)]:
        if not admissible(ctx, t):
            raise InadmissibleError("sixj%r: triple %r is not admissible at rEff=%d"
                                    % ((a, b, i, c, d, j), t, ctx.rEff))
    den = theta(ctx, i, a, d) * theta(ctx, i, b, c)
    if den.is_zero():
        raise ZeroDivisionError("sixj%r: vanishing theta" % ((a, b, i, c, d, j),))
    return bracket(ctx, i) * tet(ctx, i, b, c, j, d, a) / den


def unit_channels(ctx, a):
    """Colors a±1 that are in range next to a strand colored a."""
    return [c for c in (a - 1, a + 1) if 0 <= c <= ctx.colorMax]


def fusion_matrix(ctx, a):
    """
    Change of basis between the two ways of fusing a, 1, 1, a.

    Rows are indexed by the channel of the two unit strands (0 and, when
    admissible, 2); columns by the channel c = a ± 1 of the first pair.
    Entries are sixj(a, 1, i, 1, a, c).

    Returns
    -------
    list of list of :class:`~tqftrep.scalar.CycloScalar`
    """
    rows = [i for i in (0, 2) if admissible(ctx, (i, a, a)) and admissible(ctx, (i, 1, 1))]
    cols = unit_channels(ctx, a)
    return [[sixj(ctx, a, 1, i, 1, a, c) for c in cols] for i in rows]


def lemma_battery(ctx):
    """
    The four quantum-integer identities used for the braid generators.

    Returns
    -------
    list of dict
        One row per (identity, a) with keys ``identity``, ``a`` and ``pass``
    """
    rows = []
    a_m4 = ctx.A_pow(-4)
    for a in range(ctx.colorMax + 1):
        qa, qa1, qa2, q2 = ctx.qint(a), ctx.qint(a + 1), ctx.qint(a + 2), ctx.qint(2)
        rows.append({"identity": "sum", "a": a, "pass": qa + qa2 == q2 * qa1})
        rows.append({"identity": "ratio", "a": a,
                     "pass": qa1 * (1 + a_m4) / (qa + qa2) == ctx.A_pow(-2)})
        rows.append({"identity": "upper", "a": a,
                     "pass": (qa2 * a_m4 - qa) / (q2 * qa1) == (a_m4 - 1) / (1 - ctx.A_pow(4 + 4 * a))})
        rows.append({"identity": "lower", "a": a,
                     "pass": (qa * a_m4 - qa2) / (q2 * qa1) == (a_m4 - 1) / (1 - ctx.A_pow(-4 - 4 * a))})
    return rows
