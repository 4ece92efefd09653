import pytest

from tqftrep.errors import DimensionError
from tqftrep.rep import path_basis, is_path, basis_index, nonempty_basis


def test_small_bases(ctx20):
    assert(path_basis(ctx20, 3, 1) == [(0, 1, 0, 1), (0, 1, 2, 1)])
    assert(path_basis(ctx20, 4, 2) == [(0, 1, 0, 1, 2), (0, 1, 2, 1, 2), (0, 1, 2, 3, 2)])
    assert(path_basis(ctx20, 3, 3) == [(0, 1, 2, 3)])
    assert(path_basis(ctx20, 1, 1) == [(0, 1)])


def test_truncation_by_color_bound(ctx20, ctx40):
    # Dyck paths of semilength 4, one of which climbs to height 4
    assert(len(path_basis(ctx20, 8, 0)) == 13)
    assert(len(path_basis(ctx40, 8, 0)) == 14)
    assert(len(path_basis(ctx20, 6, 0)) == 5)


def test_empty_spaces(ctx20):
    assert(path_basis(ctx20, 3, 0) == [])
    assert(path_basis(ctx20, 2, 4) == [])
    assert(path_basis(ctx20, 5, 5) == [])
    with pytest.raises(DimensionError):
        nonempty_basis(ctx20, 3, 0)
    with pytest.raises(DimensionError):
        path_basis(ctx20, 0, 0)


def test_is_path(ctx20):
    for p in path_basis(ctx20, 5, 1):
        assert(is_path(ctx20, p, 1))
    assert(not is_path(ctx20, (0, 1, 2), 0))
    assert(not is_path(ctx20, (1, 2, 1)))
    assert(not is_path(ctx20, (0, 1, 2, 3, 4)))
    assert(not is_path(ctx20, (0, 2)))


def test_basis_index(ctx20):
    basis = path_basis(ctx20, 4, 2)
    index = basis_index(basis)
    assert([index[p] for p in basis] == [0, 1, 2])
