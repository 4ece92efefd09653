import pytest

from tqftrep.analysis import SCAN_COLUMNS
from tqftrep.orm import ScanRecord, ScanQuery, record_scan_row


def _row(level, theory='su2', verdict='infinite', n=3, m_color=1):
    row = dict.fromkeys(SCAN_COLUMNS)
    row.update({"theory": theory, "level": level, "m": 4 * level if theory == 'su2' else 2 * level,
                "s": 1, "n": n, "m_color": m_color, "dim": 2, "rEff": level, "generator_order": 2 * level,
                "order_pass": True, "verdict": verdict,
                "certificate": "ratioScan" if verdict == 'infinite' else "bfs",
                "witness": "g1 g2^-1" if verdict == 'infinite' else None})
    return row


@pytest.fixture
def stored(rollback):
    session = rollback
    session.query(ScanRecord).delete()
    session.commit()
    for level in (4, 5, 6, 7):
        record_scan_row(session, _row(level, verdict='finite' if level in (4, 6) else 'infinite'))
    record_scan_row(session, _row(5, theory='so3'))
    record_scan_row(session, _row(5, n=4, m_color=2))
    yield session
    session.query(ScanRecord).delete()
    session.commit()


def test_round_trip(stored):
    rec = ScanQuery(stored).theory('su2').space(3, 1).levels(5, 5).first()
    assert(rec.to_row() == _row(5))
    assert(rec.created is not None)
    assert(repr(rec) == "<ScanRecord su2 r=5 V(3,1) infinite>")


def test_filters(stored):
    assert([r.level for r in ScanQuery(stored).theory('su2').space(3, 1).all()] == [4, 5, 6, 7])
    assert([r.level for r in ScanQuery(stored).space(3, 1).verdict('infinite').all()] == [5, 5, 7])
    assert([r.level for r in ScanQuery(stored).theory('su2').levels(5, 6).space(3, 1).all()] == [5, 6])
    assert(ScanQuery(stored).theory('so3').levels_done() == {5})
    assert(ScanQuery(stored).theory('su2').space(4, 2).levels_done() == {5})


def test_call_through(stored):
    query = ScanQuery(stored).theory('su2').filter(ScanRecord.level > 5)
    assert(isinstance(query, ScanQuery))
    assert([r.level for r in query.all()] == [6, 7])
    with pytest.raises(AttributeError):
        ScanQuery(stored).no_such_method
