import pytest

from tqftrep.analysis import (OrderResult, is_scalar, candidate_set, ratio_certificate, numeric_screen,
                              minimal_polynomial, projective_order, expected_generator_order, order_rule)
from tqftrep.rep import rho_gen, rho_word, parse_word
from tqftrep.scalar import euler_phi

from tests.matrix_helper import level, from_rows, scalar_matrix


def test_candidate_set():
    assert(candidate_set(1, 1) == [1, 2])
    cands = candidate_set(2, 20)
    assert(cands[-1] == 60)
    assert(all(euler_phi(n) <= 16 for n in cands))
    assert(17 in cands and 18 in cands)
    assert(61 not in cands)


def test_is_scalar(ctx20):
    assert(is_scalar(scalar_matrix(ctx20, 3, ctx20.A)) == ctx20.A)
    assert(is_scalar(rho_gen(ctx20, 3, 1, 1)) is None)
    assert(is_scalar(from_rows(ctx20, [[1, 1], [0, 1]])) is None)


def test_minimal_polynomial(ctx20):
    q = ctx20.q
    assert(minimal_polynomial(rho_gen(ctx20, 3, 1, 2)) == [q, q - 1])
    assert(minimal_polynomial(scalar_matrix(ctx20, 2, 3)) == [3])


def test_small_orders(ctx20):
    swap = from_rows(ctx20, [[0, 1], [1, 0]])
    assert(projective_order(swap).order == 2)
    assert(projective_order(scalar_matrix(ctx20, 2, ctx20.A)).order == 1)
    diag = from_rows(ctx20, [[1, 0], [0, 1]])
    diag.entries[1][1] = ctx20.A_pow(2)
    assert(projective_order(diag).order == 10)


def test_unipotent_is_infinite(ctx20):
    result = projective_order(from_rows(ctx20, [[1, 1], [0, 1]]))
    assert(not result.is_finite)
    assert(result.verdict == 'infiniteCertified')
    assert(result.checked_bound == 60)
    assert(result.to_json() == {"verdict": "infiniteCertified", "order": None,
                                "method": "scalarPowerScan", "checked_bound": 60})


def test_ratio_certificate(ctx20):
    # eigenvalue ratio 2 is not a unit
    M = from_rows(ctx20, [[2, 0], [0, 1]])
    assert(ratio_certificate(M))
    result = projective_order(M)
    assert(result.method == 'ratioTest')
    assert(not ratio_certificate(rho_gen(ctx20, 3, 1, 1)))
    with pytest.raises(ZeroDivisionError):
        projective_order(from_rows(ctx20, [[1, 0], [0, 0]]))


def test_numeric_screen(ctx20):
    assert(not numeric_screen(rho_gen(ctx20, 3, 1, 1)))
    assert(numeric_screen(rho_word(ctx20, 3, 1, parse_word("g1 g2^-1", 3))))


@pytest.mark.parametrize("r,expected", [(4, 4), (5, 10), (6, 3), (7, 14), (8, 8), (10, 5), (12, 12)])
def test_generator_order(r, expected):
    assert(expected_generator_order(r) == expected)
    result = projective_order(rho_gen(level(r), 3, 1, 1))
    assert(result.is_finite)
    assert(result.order == expected)


def test_order_rule():
    assert([order_rule(r) for r in (5, 6, 8)] == ["2r", "r/2", "r"])


def test_infinite_word(ctx20):
    result = projective_order(rho_word(ctx20, 3, 1, parse_word("g1^-1 g2", 3)))
    assert(not result.is_finite)
    assert(result.checked_bound == candidate_set(2, 20)[-1])
    assert("infinite" in repr(result))


def test_result_repr():
    assert(repr(OrderResult('finite', 4)) == "OrderResult(finite(4), scalarPowerScan)")
