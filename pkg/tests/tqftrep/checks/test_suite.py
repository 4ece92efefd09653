import re

import pytest

from tqftrep.checks import paper_check, dehn_twist_check, CHECKS
from tqftrep.checks import suite
from tqftrep.errors import ContextError


def test_registered_checks():
    assert(len(CHECKS) == 13)
    assert([c.__name__ for c in CHECKS][0] == "_golden")


def test_dehn_twist():
    for r in range(3, 25):
        assert(dehn_twist_check(r))


def test_quick_rows():
    for idx in (0, 1, 5, 12):
        row = CHECKS[idx](quick=True, seed=0)
        assert(row["id"] == idx + 1)
        assert(row["pass"])
        assert(row["seconds"] >= 0)


def test_errors_become_failures(monkeypatch):
    monkeypatch.setattr(suite, "CHECKS", [])

    @suite.suite_check(99, "always raises")
    def broken(quick=False, seed=None):
        raise ContextError("no such context")

    row = broken(quick=True)
    assert(not row["pass"])
    assert(row["detail"] == {"error": "no such context"})
    assert(suite.CHECKS == [broken])


@pytest.mark.parametrize("error", [ZeroDivisionError("division by zero"), ValueError("bad bound")])
def test_arithmetic_errors_become_failures(monkeypatch, error):
    monkeypatch.setattr(suite, "CHECKS", [])

    @suite.suite_check(98, "raises")
    def broken(quick=False, seed=None):
        raise error

    row = broken(quick=True)
    assert(not row["pass"])
    assert(row["detail"] == {"error": str(error)})


@pytest.mark.slow
def test_paper_check_quick():
    report = paper_check(seed=0, quick=True)
    assert(report["pass"])
    assert([c["id"] for c in report["checks"]] == list(range(1, 14)))
    assert(re.match(r'^[0-9a-f]{32}$', report["digest"]))
    assert(paper_check(seed=0, quick=True)["digest"] == report["digest"])
