import pytest

from tqftrep.errors import DimensionError
from tqftrep.rep import (rho_gen, rho_gen_inverse, rho_word, parse_word, pure_braid_word, pure_braid_gen,
                         dehn_twist_scalar, rho_dehn_spectrum, generator_blocks, twist_check, galois_check,
                         path_basis)

from tests.matrix_helper import level, units


@pytest.mark.parametrize("n,m", [(3, 1), (4, 0), (4, 2), (5, 1), (6, 2)])
def test_first_generator_is_diagonal(ctx40, n, m):
    g = rho_gen(ctx40, n, m, 1)
    for r, p in enumerate(g.basis):
        for c in range(g.dim):
            if r != c:
                assert(g.entries[r][c].is_zero())
        assert(g.entries[r][r] == (-1 if p[2] == 2 else ctx40.q))


def test_normalisations_differ_by_minus_a(ctx20):
    for i in (1, 2, 3):
        tilde = rho_gen(ctx20, 4, 2, i)
        plain = rho_gen(ctx20, 4, 2, i, 'rho')
        assert(plain == tilde.scale(-ctx20.A))
        assert(plain.variant == 'rho')
        inv = rho_gen_inverse(ctx20, 4, 2, i, 'rho')
        assert((plain @ inv).is_identity())


@pytest.mark.parametrize("r", [4, 5, 6, 9])
def test_inverse(r):
    ctx = level(r)
    for i in range(1, 4):
        g = rho_gen(ctx, 4, 2, i)
        assert((g @ rho_gen_inverse(ctx, 4, 2, i)).is_identity())
        assert(rho_gen_inverse(ctx, 4, 2, i) == g.inverse())


def test_words(ctx20):
    g1, g2 = rho_gen(ctx20, 3, 1, 1), rho_gen(ctx20, 3, 1, 2)
    assert(rho_word(ctx20, 3, 1, parse_word("g1 g2 g1", 3)) == g1 @ g2 @ g1)
    assert(rho_word(ctx20, 3, 1, parse_word("", 3)).is_identity())
    w = parse_word("g1 g2^-1 g1 g2", 3)
    assert(rho_word(ctx20, 3, 1, w * w.inverse()).is_identity())


def test_pure_braids(ctx20):
    assert(pure_braid_word(3, 1, 2) == parse_word("g1 g1", 3))
    assert(pure_braid_word(3, 1, 3) == parse_word("g2 g1 g1 g2^-1", 3))
    g1 = rho_gen(ctx20, 3, 1, 1)
    assert(pure_braid_gen(ctx20, 3, 1, 1, 2) == g1 @ g1)
    with pytest.raises(DimensionError):
        pure_braid_word(3, 2, 1)


def test_twist_scalars(ctx20):
    A = ctx20.A
    assert(dehn_twist_scalar(ctx20, 0) == 1)
    assert(dehn_twist_scalar(ctx20, 1) == -A ** 3)
    assert(dehn_twist_scalar(ctx20, 2) == A ** 8)
    assert(rho_dehn_spectrum(ctx20) == [-A ** -3, A])


@pytest.mark.parametrize("r,n,m", [(5, 3, 1), (5, 4, 2), (8, 5, 1), (10, 4, 0), (7, 6, 2)])
def test_twist_check(r, n, m):
    assert(twist_check(level(r), n, m)["pass"])


def test_galois_equivariance(ctx20):
    for t in units(20):
        for n, m in ((3, 1), (4, 2)):
            assert(galois_check(ctx20, n, m, t)["pass"])
    with pytest.raises(DimensionError):
        galois_check(ctx20, 3, 1, 5)


def test_generator_blocks(ctx20):
    basis = path_basis(ctx20, 3, 1)
    assert(generator_blocks(ctx20, basis, 1) == [[0], [1]])
    assert(generator_blocks(ctx20, basis, 2) == [[0, 1]])


def test_errors(ctx20):
    with pytest.raises(DimensionError):
        rho_gen(ctx20, 3, 1, 3)
    with pytest.raises(DimensionError):
        rho_gen(ctx20, 3, 1, 1, 'other')
    with pytest.raises(DimensionError):
        rho_gen(ctx20, 3, 0, 1)
    with pytest.raises(DimensionError):
        rho_gen_inverse(ctx20, 3, 1, 0)
    with pytest.raises(DimensionError):
        rho_word(ctx20, 4, 2, parse_word("g1", 3))
