"""
Level sweeps: one row per level with the generator order and the
finite/infinite verdict for a fixed space V(n, m).
"""
import logging

from .image import infinite_image_report, bfs_closure
from .order import projective_order, expected_generator_order
from .. import tqftrep_config
from ..rep import rho_gen, path_basis
from ..scalar import TheoryCtx, level_conductor
from ..utils.parallel import ordered_map

__all__ = ["SCAN_COLUMNS", "scan_row", "scan_levels"]

SCAN_COLUMNS = ['theory', 'level', 'm', 's', 'n', 'm_color', 'dim', 'rEff', 'generator_order',
                'order_pass', 'verdict', 'certificate', 'witness', 'checked_bound', 'bfs_order']


def scan_row(r, theory='su2', n=3, m=1, max_word_len=None, bfs_cap=None):
    """
    Analyse one level.

    The word certificate is tried first; when it is inconclusive the
    projective closure decides finite images up to `bfs_cap` elements.

    Returns
    -------
    dict
        Keys as in `SCAN_COLUMNS`
    """
    ctx = TheoryCtx(level_conductor(r, theory))
    row = dict.fromkeys(SCAN_COLUMNS)
    row.update({"theory": theory, "level": r, "m": ctx.m, "s": ctx.s, "n": n, "m_color": m,
                "rEff": ctx.rEff})
    basis = path_basis(ctx, n, m)
    row["dim"] = len(basis)
    if not basis:
        row["verdict"] = "empty"
        return row
    if n >= 2:
        order = projective_order(rho_gen(ctx, n, m, 1))
        row["generator_order"] = order.order
        row["order_pass"] = order.order == expected_generator_order(ctx.rEff)
    report = infinite_image_report(ctx, n, m, max_word_len)
    row.update({"verdict": report["verdict"], "certificate": report["certificate"],
                "witness": report["witness"], "checked_bound": report["checked_bound"]})
    if report["verdict"] == "inconclusive":
        closure = bfs_closure(ctx, n, m, bfs_cap)
        if closure["status"] == "closed":
            row.update({"verdict": "finite", "certificate": "bfs", "bfs_order": closure["order"]})
    logging.info("Level %d (%s) V(%d,%d): %s" % (r, theory, n, m, row["verdict"]))
    return row


def scan_levels(r_min, r_max, theory='su2', n=3, m=1, skip=(), max_word_len=None, bfs_cap=None):
    """
    Scan a range of levels, in parallel when ``tqftrep_config.threads`` > 1.

    Parameters
    ----------
    r_min, r_max : int
        Inclusive level range
    theory : str
    n, m : int
    skip : collection of int
        Levels already done
    max_word_len, bfs_cap : int, optional

    Returns
    -------
    list of dict
        Rows ordered by level
    """
    levels = [r for r in range(r_min, r_max + 1)
              if r >= 3 and r not in skip and not (theory == 'so3' and r % 2 == 0)]
    bfs_cap = tqftrep_config.bfs_cap if bfs_cap is None else bfs_cap
    return ordered_map(lambda r: scan_row(r, theory, n, m, max_word_len, bfs_cap), levels)
