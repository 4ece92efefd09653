"""
Finite versus infinite projective image of ρ̃(B_n) on V(n, m).

Two independent routes to an infinite image are reported:

  * the subgroup criterion: in a 2-dimensional block that is unitary after
    a diagonal change of basis, two non-commuting elements of projective
    order greater than 5 cannot lie in a finite subgroup of SO(3), since
    such subgroups are cyclic, dihedral or have element orders at most 5;
  * a word certificate: a short braid word whose image has exactly
    certified infinite projective order.

Finite images are confirmed by closing the projectivized generators under
multiplication.
"""
import logging
from collections import deque
from math import gcd

import numpy as np

from .order import projective_order, expected_generator_order, order_rule
from .. import tqftrep_config
from ..rep import (rho_gen, rho_gen_inverse, rho_word, nonempty_basis, parse_word, reduced_words,
                   generator_blocks, rt_embedding)
from ..scalar import TheoryCtx, level_conductor
from ..utils.parallel import ordered_map

__all__ = ["infinite_image_report", "bfs_closure", "unitarity_premise", "subgroup_criterion",
           "word_certificate", "suggested_words", "generator_order_table"]

SO3_ORDER_LIMIT = 5


def suggested_words(n):
    """Candidate witnesses tried before the exhaustive search."""
    words = ["g1^-1 g2"]
    if n >= 4:
        words.append("g1 g2 g3^-1")
    return [parse_word(text, n) for text in words]


def unitarity_premise(ctx, n, m):
    """
    Check numerically that ρ̃ becomes unitary after a positive diagonal
    change of basis, in the embedding A⁴ ↦ exp(2πi/rEff).

    The gauge D is fitted by least squares so that every 2×2 block of
    D ρ̃(g_i) D⁻¹ has off-diagonal entries of equal modulus.

    Returns
    -------
    dict
        ``{"embedding", "gauge", "max_deviation", "unitary"}``
    """
    k = rt_embedding(ctx, ctx.rEff)
    basis = nonempty_basis(ctx, n, m)
    d = len(basis)
    equations = []
    rhs = []
    gens = []
    for i in range(1, n):
        g = rho_gen(ctx, n, m, i).to_numpy(k)
        gens.append(g)
        for block in generator_blocks(ctx, basis, i):
            if len(block) != 2:
                continue
            lo, hi = block
            row = np.zeros(d)
            row[lo], row[hi] = 2.0, -2.0
            equations.append(row)
            rhs.append(np.log(abs(g[hi, lo])) - np.log(abs(g[lo, hi])))
    if equations:
        x = np.linalg.lstsq(np.array(equations), np.array(rhs), rcond=None)[0]
    else:
        x = np.zeros(d)
    gauge = np.exp(x - x[0])
    D = np.diag(gauge)
    Dinv = np.diag(1 / gauge)
    worst = 0.0
    for g in gens:
        u = D @ g @ Dinv
        worst = max(worst, float(np.abs(u @ u.conj().T - np.eye(d)).max()))
    return {"embedding": k, "gauge": [float(v) for v in gauge], "max_deviation": worst,
            "unitary": worst < tqftrep_config.numeric_tolerance}


def subgroup_criterion(ctx, n, m):
    """
    The SO(3) finite-subgroup argument applied to ρ̃(g_1), ρ̃(g_2).

    Only meaningful for 2-dimensional representations; the unitarizability
    premise is checked numerically and recorded alongside the verdict.

    Returns
    -------
    dict
    """
    dim = len(nonempty_basis(ctx, n, m))
    out = {"applicable": dim == 2 and n >= 3, "dim": dim,
           "premise": "unitary after diagonal rescaling in the embedding A^4 -> exp(2 pi i/rEff)"}
    if not out["applicable"]:
        out["pass"] = False
        return out
    g1 = rho_gen(ctx, n, m, 1)
    g2 = rho_gen(ctx, n, m, 2)
    orders = [projective_order(g) for g in (g1, g2)]
    big = all((not o.is_finite) or o.order > SO3_ORDER_LIMIT for o in orders)
    commute = (g1 @ g2) == (g2 @ g1)
    premise = unitarity_premise(ctx, n, m)
    out.update({"orders": [o.order for o in orders], "commute": commute,
                "premise_deviation": premise["max_deviation"], "premise_holds": premise["unitary"],
                "pass": big and not commute and premise["unitary"]})
    return out


def _numeric_generators(ctx, n, m):
    embeddings = [k for k in range(1, ctx.m // 2 + 1) if gcd(k, ctx.m) == 1]
    table = {}
    for k in embeddings:
        for i in range(1, n):
            table[(k, i, 1)] = rho_gen(ctx, n, m, i).to_numpy(k)
            table[(k, i, -1)] = rho_gen_inverse(ctx, n, m, i).to_numpy(k)
    return embeddings, table


def _numerically_infinite(word, embeddings, table, d):
    for k in embeddings:
        prod = np.eye(d, dtype=complex)
        for i, e in word.letters:
            prod = prod @ table[(k, i, e)]
        moduli = np.abs(np.linalg.eigvals(prod))
        if moduli.max() / moduli.min() - 1 > 1e-8:
            return True
    return False


def word_certificate(ctx, n, m, max_word_len=None):
    """
    Search freely reduced words, shortest first, for one of certified
    infinite projective order.

    Words are screened numerically across all complex embeddings; only
    words that fail the screen are decided exactly.

    Returns
    -------
    dict
        ``{"witness", "order", "searched"}``, with witness None when no
        word up to `max_word_len` qualifies
    """
    max_word_len = tqftrep_config.max_word_len if max_word_len is None else max_word_len
    d = len(nonempty_basis(ctx, n, m))
    embeddings, table = _numeric_generators(ctx, n, m)
    searched = 0
    for word in reduced_words(n, max_word_len):
        searched += 1
        if not _numerically_infinite(word, embeddings, table, d):
            continue
        result = projective_order(rho_word(ctx, n, m, word))
        if not result.is_finite:
            logging.info("Word %s has infinite projective order at rEff=%d" % (word, ctx.rEff))
            return {"witness": str(word), "order": result.to_json(), "searched": searched}
        logging.warning("Word %s failed the numeric screen but has order %d" % (word, result.order))
    return {"witness": None, "order": None, "searched": searched}


def infinite_image_report(ctx, n, m, max_word_len=None):
    """
    Decide whether ρ̃(B_n) on V(n, m) has infinite projective image.

    Parameters
    ----------
    ctx : :class:`~tqftrep.scalar.TheoryCtx`
    n, m : int
    max_word_len : int, optional
        Defaults to ``tqftrep_config.max_word_len``

    Returns
    -------
    dict
        ``{"verdict": "infinite"|"inconclusive", "witness", "certificate",
        "checked_bound", "subgroup", "suggested", ...}``
    """
    max_word_len = tqftrep_config.max_word_len if max_word_len is None else max_word_len
    suggested = []
    for word in suggested_words(n):
        result = projective_order(rho_word(ctx, n, m, word))
        suggested.append({"word": str(word), "order": result.to_json()})
    subgroup = subgroup_criterion(ctx, n, m)
    search = word_certificate(ctx, n, m, max_word_len)

    report = {"ctx": ctx.to_json(), "n": n, "m_color": m, "max_word_len": max_word_len,
              "subgroup": subgroup, "suggested": suggested, "searched": search["searched"],
              "witness": search["witness"], "certificate": None, "checked_bound": None}
    if search["witness"] is not None:
        report["certificate"] = "ratioScan"
        report["checked_bound"] = search["order"]["checked_bound"]
    elif subgroup["pass"]:
        report["certificate"] = "so3"
    report["verdict"] = "infinite" if report["certificate"] else "inconclusive"
    return report


def bfs_closure(ctx, n, m, cap=None, generators=None):
    """
    Close the projectivized generators under multiplication.

    Elements are normalized so their first nonzero entry is 1, which makes
    them exact and hashable.

    Parameters
    ----------
    ctx : :class:`~tqftrep.scalar.TheoryCtx`
    n, m : int
    cap : int, optional
        Give up once more than `cap` elements are known; defaults to
        ``tqftrep_config.bfs_cap``
    generators : list of :class:`~tqftrep.rep.RepMatrix`, optional
        Use these instead of ρ̃(g_1) … ρ̃(g_{n−1})

    Returns
    -------
    dict
        ``{"status": "closed"|"exceeded", "order", "visited", "cap"}``
    """
    cap = tqftrep_config.bfs_cap if cap is None else cap
    if cap < 1:
        raise ValueError("BFS cap must be at least 1")
    if generators is None:
        generators = [rho_gen(ctx, n, m, i) for i in range(1, n)]
    gens = [g.projective_normalize() for g in generators]
    start = gens[0].identity_like()
    seen = {start.projective_key()}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = (x @ g).projective_normalize()
            key = y.projective_key()
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > cap:
                logging.info("Projective closure exceeded %d elements at rEff=%d" % (cap, ctx.rEff))
                return {"status": "exceeded", "order": None, "visited": len(seen), "cap": cap}
            queue.append(y)
    return {"status": "closed", "order": len(seen), "visited": len(seen), "cap": cap}


def _order_row(args):
    r, theory, n, m = args
    ctx = TheoryCtx(level_conductor(r, theory))
    result = projective_order(rho_gen(ctx, n, m, 1))
    expected = expected_generator_order(r)
    return {"r": r, "m": ctx.m, "rEff": ctx.rEff, "order": result.order, "verdict": result.verdict,
            "expected": expected, "rule": order_rule(r), "pass": result.order == expected}


def generator_order_table(r_min, r_max, theory='su2', n=3, m=1):
    """
    Projective order of ρ̃(g_1) for each level in a range, against the
    order of −q.

    Returns
    -------
    list of dict
        One row per level; the so3 preset skips even levels
    """
    levels = []
    for r in range(r_min, r_max + 1):
        if theory == 'so3' and r % 2 == 0:
            logging.debug("Skipping even level %d for so3" % r)
            continue
        levels.append((r, theory, n, m))
    return ordered_map(_order_row, levels)
