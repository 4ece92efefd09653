"""
Create and drop the results tables.
"""
from . import Base
from .scanrecord import ScanRecord

__all__ = ["create_tables", "drop_tables", "ScanRecord"]


def create_tables(session):
    """
    Creates the database tables

    Parameters
    ----------
    session : :class:`sqlalchemy.orm.Session`
        Session bound to the target database
    """
    Base.metadata.create_all(bind=session.get_bind())


def drop_tables(session):
    """
    Drops the database tables

    Parameters
    ----------
    session : :class:`sqlalchemy.orm.Session`
    """
    Base.metadata.drop_all(bind=session.get_bind())
