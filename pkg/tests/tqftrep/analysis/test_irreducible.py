from tqftrep.analysis import irreducibility, common_eigenvector
from tqftrep.rep import rho_gen

from tests.matrix_helper import level, direct_sum


def test_irreducible_spaces():
    report = irreducibility(level(10), 4, 2)
    assert(report["irreducible"])
    assert(report["complete"])
    assert(report["dim"] == 3)
    assert(irreducibility(level(5), 3, 1)["irreducible"])


def test_one_dimensional(ctx20):
    report = irreducibility(ctx20, 3, 3)
    assert(report["dim"] == 1)
    assert(report["irreducible"])


def test_direct_sums_are_reducible(ctx20):
    for first, second in (((3, 1), (3, 3)), ((3, 3), (3, 3))):
        gens = [direct_sum(rho_gen(ctx20, *first, i), rho_gen(ctx20, *second, i)) for i in (1, 2)]
        report = irreducibility(ctx20, generators=gens)
        assert(not report["irreducible"])
        assert(report["invariant_line"] is not None)
        assert(report["invariant_hyperplane"] is not None)


def test_common_eigenvector(ctx20):
    gens = [rho_gen(ctx20, 3, 3, i) for i in (1, 2)]
    vec, lams = common_eigenvector(gens)
    assert(vec is not None)
    assert(lams == (-ctx20.one(), -ctx20.one()))
    assert(common_eigenvector([rho_gen(ctx20, 3, 1, i) for i in (1, 2)]) == (None, None))
