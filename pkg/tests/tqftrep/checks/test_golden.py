from tqftrep.checks import (printed_v31, printed_v42, golden_v31, tl_six_term, v42_discrepancies, reorder,
                            V31_PRINTED_ORDER, V42_SUSPECT_ENTRIES)
from tqftrep.rep import rho_gen
from tqftrep.scalar import TheoryCtx

from tests.matrix_helper import level, units


def test_printed_v31_matches_for_every_root():
    for s in units(20):
        ctx = TheoryCtx(20, s)
        rows = golden_v31(ctx)
        assert(len(rows) == 5)
        for row in rows:
            assert(row["pass"])
            assert(row["witness"] is None)
            assert(row["s"] == s)


def test_six_term_relation(ctx20):
    assert(tl_six_term(ctx20)["pass"])
    assert(sorted(printed_v31(ctx20)) == sorted(["g1", "g2", "g1 g2", "g2 g1", "g1 g2 g1"]))


def test_reorder(ctx20):
    g = rho_gen(ctx20, 3, 1, 1)
    flipped = reorder(g, V31_PRINTED_ORDER)
    assert(flipped.basis == V31_PRINTED_ORDER)
    assert(flipped.entries[0][0] == -1)
    assert(flipped.entries[1][1] == ctx20.q)
    assert(reorder(flipped, g.basis) == g)


def test_v42_misprints():
    ctx = level(10)
    report = v42_discrepancies(ctx)
    assert(report["pass"])
    assert(report["unexpected"] == [])
    found = {(mm["generator"], mm["row"], mm["col"]) for mm in report["mismatches"]}
    assert(found == V42_SUSPECT_ENTRIES)
    assert(sorted(printed_v42(ctx)) == [1, 2, 3])
