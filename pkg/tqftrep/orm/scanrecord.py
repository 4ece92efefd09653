"""
This module holds the ScanRecord class, one row of a level scan.
"""
import datetime

from sqlalchemy import Column, Integer, String, Text, DateTime, Boolean

from . import Base
from ..analysis.scan import SCAN_COLUMNS


class ScanRecord(Base):
    """
    This is the ORM class for a stored scan row: the generator order and the
    finite/infinite verdict for one level and one space V(n, m).
    """
    __tablename__ = 'scan'

    id = Column(Integer, primary_key=True)
    theory = Column(String(8), nullable=False, index=True)
    level = Column(Integer, nullable=False, index=True)
    m = Column(Integer, nullable=False)
    s = Column(Integer, nullable=False, default=1)
    n = Column(Integer, nullable=False)
    m_color = Column(Integer, nullable=False)
    dim = Column(Integer)
    rEff = Column(Integer)
    generator_order = Column(Integer)
    order_pass = Column(Boolean)
    verdict = Column(String(16), index=True)
    certificate = Column(String(16))
    witness = Column(Text)
    checked_bound = Column(Integer)
    bfs_order = Column(Integer)
    created = Column(DateTime, default=datetime.datetime.utcnow)

    COLUMNS = SCAN_COLUMNS

    def __init__(self, row):
        for name in self.COLUMNS:
            setattr(self, name, row.get(name))

    def to_row(self):
        return {name: getattr(self, name) for name in self.COLUMNS}

    def __repr__(self):
        return "<ScanRecord %s r=%d V(%d,%d) %s>" % (self.theory, self.level, self.n, self.m_color,
                                                      self.verdict)
