import pytest

from tqftrep.errors import DimensionError
from tqftrep.oracle import TLDiagram, TLElement, all_diagrams
from tqftrep.scalar import LaurentPoly, LOOP


ONE = LaurentPoly.constant(1)


def gen(n, i):
    return TLElement.generator(n, i, LOOP, ONE)


def test_catalan_counts():
    assert([len(all_diagrams(n)) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132])
    assert(TLDiagram.identity(3) in all_diagrams(3))


def test_temperley_lieb_relations():
    e1, e2 = gen(3, 1), gen(3, 2)
    assert(e1 * e1 == e1.scale(LOOP))
    assert(e1 * e2 * e1 == e1)
    assert(e2 * e1 * e2 == e2)
    f1, f3 = gen(4, 1), gen(4, 3)
    assert(f1 * f3 == f3 * f1)


def test_identity_and_tensor():
    one = TLElement.identity(2, LOOP, ONE)
    e1 = gen(2, 1)
    assert(one * e1 == e1)
    assert(e1.tensor_id() == gen(3, 1))
    assert((e1 - e1).is_zero())


def test_compose_counts_loops():
    cap_cup = TLDiagram.cap_cup(2, 1)
    diagram, loops = cap_cup.compose(cap_cup)
    assert(diagram == cap_cup)
    assert(loops == 1)


def test_bad_diagrams():
    with pytest.raises(DimensionError):
        TLDiagram(2, [3, 2, 1, 0])
    with pytest.raises(DimensionError):
        TLDiagram(2, [1, 0, 3])
    with pytest.raises(DimensionError):
        TLDiagram.cap_cup(3, 3)
    with pytest.raises(DimensionError):
        gen(2, 1) * gen(3, 1)
