"""
Path bases of the spaces V(n, m).

A basis vector is a tuple (p_0, …, p_n) with p_0 = 0, p_n = m, unit steps and
every entry between 0 and the color bound of the context; it records an
admissible coloring of the spine of the caterpillar graph.
"""
from ..errors import DimensionError

__all__ = ["path_basis", "is_path", "basis_index"]


def is_path(ctx, p, m=None):
    """
    Whether `p` is a valid path for `ctx` (ending in `m` when given).

    Parameters
    ----------
    ctx : :class:`~tqftrep.scalar.TheoryCtx`
    p : sequence of int
    m : int, optional

    Returns
    -------
    bool
    """
    if len(p) < 2 or p[0] != 0:
        return False
    if m is not None and p[-1] != m:
        return False
    if any(not 0 <= x <= ctx.colorMax for x in p):
        return False
    return all(abs(x - y) == 1 for x, y in zip(p, p[1:]))


def path_basis(ctx, n, m):
    """
    All paths of length `n` from 0 to `m`, in lexicographic order.

    Parameters
    ----------
    ctx : :class:`~tqftrep.scalar.TheoryCtx`
    n : int
        Number of strands, at least 1
    m : int
        Final color

    Returns
    -------
    list of tuple
        Empty when no path exists
    """
    if n < 1:
        raise DimensionError("Need at least one strand, got n=%d" % n)
    if not 0 <= m <= ctx.colorMax or (n - m) % 2 or m > n:
        return []

    out = []

    def extend(path):
        left = n + 1 - len(path)
        last = path[-1]
        if left == 0:
            if last == m:
                out.append(tuple(path))
            return
        for step in (-1, 1):
            nxt = last + step
            if 0 <= nxt <= ctx.colorMax and abs(nxt - m) <= left - 1:
                path.append(nxt)
                extend(path)
                path.pop()

    extend([0])
    return out


def basis_index(basis):
    return {p: k for k, p in enumerate(basis)}
