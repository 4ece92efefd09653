"""
Query helper for stored scan rows.
"""
import functools
import logging

from .scanrecord import ScanRecord

__all__ = ["ScanQuery", "record_scan_row"]


class ScanQuery(object):
    """
    Chaining query builder over :class:`~tqftrep.orm.scanrecord.ScanRecord`.

    Every filter method returns the ScanQuery itself, so a query reads as
    one expression::

        ScanQuery(session).theory('su2').levels(5, 13).space(3, 1).verdict('infinite').all()

    Attributes not defined here are looked up on the underlying SQLAlchemy
    query.
    """
    def __init__(self, session):
        self.session = session
        self.query = session.query(ScanRecord)

    def __call_through(self, query_method, *args, **kw):
        self.query = query_method(*args, **kw)
        return self

    def theory(self, theory):
        self.query = self.query.filter(ScanRecord.theory == theory)
        return self

    def levels(self, lo, hi):
        self.query = self.query.filter(ScanRecord.level >= lo).filter(ScanRecord.level <= hi)
        return self

    def space(self, n, m_color):
        self.query = self.query.filter(ScanRecord.n == n).filter(ScanRecord.m_color == m_color)
        return self

    def verdict(self, verdict):
        self.query = self.query.filter(ScanRecord.verdict == verdict)
        return self

    def __getattr__(self, name):
        attmsg = "'{}' object has no attribute '{}'"
        try:
            return functools.partial(self.__call_through, getattr(self.query, name))
        except AttributeError:
            raise AttributeError(attmsg.format(self.__class__.__name__, name))

    def all(self):
        return self.query.order_by(ScanRecord.level).all()

    def first(self):
        return self.query.order_by(ScanRecord.level).first()

    def levels_done(self):
        """The set of levels already stored for the current filters."""
        return {rec.level for rec in self.query.all()}


def record_scan_row(session, row):
    """
    Store one scan row and commit.

    Parameters
    ----------
    session : :class:`sqlalchemy.orm.Session`
    row : dict
        A row as produced by the ``scan`` command

    Returns
    -------
    :class:`~tqftrep.orm.scanrecord.ScanRecord`
    """
    record = ScanRecord(row)
    session.add(record)
    session.commit()
    logging.debug("Stored %r" % record)
    return record
