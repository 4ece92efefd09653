import numpy as np
import pytest

from tqftrep.errors import ContextError, DimensionError
from tqftrep.rep import (RTContext, rt_braiding_block, printed_braiding_block, rt_rho_word,
                         rt_braid_residual, rt_unitarity_deviation, rt_embedding, check_equivalence,
                         block_discrepancy, freeze_signs, parse_word)
from tqftrep.scalar import TheoryCtx

from tests.matrix_helper import level


@pytest.mark.parametrize("r", [4, 5, 8, 12])
def test_braiding_block(r):
    rctx = RTContext(r)
    for a in range(1, rctx.colorMax):
        block = rt_braiding_block(rctx, a)
        assert(np.abs(block @ block.conj().T - np.eye(2)).max() < 1e-12)
        eigs = np.linalg.eigvals(block)
        targets = [rctx.qpow(0.25), -rctx.qpow(-0.75)]
        for t in targets:
            assert(min(abs(e - t) for e in eigs) < 1e-9)
    for a in (0, rctx.colorMax, rctx.colorMax + 1):
        with pytest.raises(DimensionError):
            rt_braiding_block(rctx, a)


@pytest.mark.parametrize("r", [4, 5, 7, 10, 13])
def test_braiding_block_trace_and_det(r):
    rctx = RTContext(r)
    for a in range(1, rctx.colorMax):
        block = rt_braiding_block(rctx, a)
        assert(abs(np.linalg.det(block) + rctx.qpow(-0.5)) < 1e-12)
        assert(abs(np.trace(block) - (rctx.qpow(0.25) - rctx.qpow(-0.75))) < 1e-12)


def test_printed_block_at_zero():
    rctx = RTContext(5)
    block = printed_braiding_block(rctx, 0)
    off = -rctx.qpow(-0.25)
    expected = np.array([[0, off], [off, 0]])
    assert(np.abs(block - expected).max() < 1e-12)
    assert(abs(off - (-0.951057 + 0.309017j)) < 1e-6)


@pytest.mark.parametrize("r,n,m", [(5, 3, 1), (5, 4, 2), (8, 4, 2), (12, 5, 1)])
def test_unitary_braid_representation(r, n, m):
    rctx = RTContext(r)
    assert(rt_unitarity_deviation(rctx, n, m) < 1e-12)
    assert(rt_braid_residual(rctx, n, m) < 1e-9)


def test_word_and_inverse():
    rctx = RTContext(5)
    w = parse_word("g1 g2^-1 g1", 3)
    product = rt_rho_word(rctx, 3, 1, w * w.inverse())
    assert(np.abs(product - np.eye(2)).max() < 1e-12)
    with pytest.raises(DimensionError):
        rt_rho_word(rctx, 3, 5, w)


def test_embedding():
    assert(rt_embedding(TheoryCtx(20), 5) == 1)
    assert(rt_embedding(TheoryCtx(20, 3), 5) == 7)
    with pytest.raises(ContextError):
        rt_embedding(TheoryCtx(20), 7)


@pytest.mark.parametrize("r", [5, 8])
def test_trace_equivalence(r):
    result = check_equivalence(level(r), RTContext(r), 3, 1, trials=30, seed=1)
    assert(result["pass"])
    assert(result["trials"] == 30)
    assert(result["seed"] == 1)
    assert(result["frozen_signs"] == freeze_signs(RTContext(r)))


def test_equivalence_level_mismatch(ctx20):
    with pytest.raises(ContextError):
        check_equivalence(ctx20, RTContext(7), 3, 1, trials=1)
    with pytest.raises(ContextError):
        RTContext(2)


def test_block_discrepancy():
    rows = block_discrepancy(RTContext(7))
    assert(rows)
    assert(all(row["block_unitarity"] < 1e-12 for row in rows))
