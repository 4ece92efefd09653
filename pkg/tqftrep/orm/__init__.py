# init file for package

from sqlalchemy import create_engine
from sqlalchemy.orm import declarative_base, sessionmaker

from .. import tqftrep_config

Base = declarative_base()


def sessionfactory(url=None):
    """
    Open a session on the results database.

    Parameters
    ----------
    url : str, optional
        SQLAlchemy URL; defaults to ``tqftrep_config.results_database``

    Returns
    -------
    :class:`sqlalchemy.orm.Session`
    """
    url = tqftrep_config.results_database if url is None else url
    engine = create_engine(url)
    return sessionmaker(bind=engine)()


from .scanrecord import ScanRecord
from .createtables import create_tables, drop_tables
from .scanquery import ScanQuery, record_scan_row
