"""
Irreducibility by common eigenvectors.

Every generator ρ̃(g_i) satisfies (x + 1)(x − q) = 0, so a common
eigenvector lies in an intersection of eigenspaces for a choice of
eigenvalues in {−1, q}.  An invariant subspace of dimension one shows up
in the representation, one of codimension one in its transpose.  Up to
dimension 3 these exhaust the proper invariant subspaces.
"""
from itertools import product

from ..rep import rho_gen, nullspace

__all__ = ["common_eigenvector", "irreducibility"]


def common_eigenvector(gens):
    """
    Returns
    -------
    (list of CycloScalar, tuple) or (None, None)
        A common eigenvector and its eigenvalues, if one exists
    """
    ctx = gens[0].ctx
    candidates = (-ctx.one(), ctx.q)
    for lams in product(candidates, repeat=len(gens)):
        rows = []
        for g, lam in zip(gens, lams):
            shifted = g - g.identity_like().scale(lam)
            rows.extend(shifted.entries)
        kernel = nullspace(rows, ctx)
        if kernel:
            return kernel[0], lams
    return None, None


def irreducibility(ctx, n=None, m=None, generators=None):
    """
    Decide irreducibility of ρ̃ on V(n, m), or of explicit generators.

    Parameters
    ----------
    ctx : :class:`~tqftrep.scalar.TheoryCtx`
    n, m : int, optional
    generators : list of :class:`~tqftrep.rep.RepMatrix`, optional

    Returns
    -------
    dict
        ``{"irreducible", "complete", "dim", "invariant_line", "invariant_hyperplane"}``;
        ``complete`` is False above dimension 3, where a negative answer
        from this test is not conclusive
    """
    if generators is None:
        generators = [rho_gen(ctx, n, m, i) for i in range(1, n)]
    dim = generators[0].dim
    out = {"n": n, "m_color": m, "dim": dim, "complete": dim <= 3,
           "invariant_line": None, "invariant_hyperplane": None}
    if dim == 1:
        out["irreducible"] = True
        return out
    vec, lams = common_eigenvector(generators)
    if vec is not None:
        out["invariant_line"] = {"vector": [str(x) for x in vec], "eigenvalues": [str(x) for x in lams]}
    dual, dual_lams = common_eigenvector([g.transpose() for g in generators])
    if dual is not None:
        out["invariant_hyperplane"] = {"normal": [str(x) for x in dual],
                                       "eigenvalues": [str(x) for x in dual_lams]}
    out["irreducible"] = vec is None and dual is None
    return out
