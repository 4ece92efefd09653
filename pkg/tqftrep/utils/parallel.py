"""
Fan-out helper for independent computations (levels of a scan, rows of an
order table).  The pool size comes from ``tqftrep_config.threads``.
"""
import logging
from concurrent.futures import ThreadPoolExecutor

from .. import tqftrep_config


def ordered_map(func, items, threads=None):
    """
    Apply `func` to every item, possibly on worker threads.

    Parameters
    ----------
    func : callable
    items : iterable
    threads : int, optional
        Defaults to ``tqftrep_config.threads``

    Returns
    -------
    list
        Results in the order of `items`
    """
    items = list(items)
    threads = tqftrep_config.threads if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    logging.debug("Running %d tasks on %d threads" % (len(items), threads))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))
