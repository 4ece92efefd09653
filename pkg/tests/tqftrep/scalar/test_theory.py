import pytest

from tqftrep.errors import ContextError
from tqftrep.scalar import TheoryCtx, level_conductor


def test_presets():
    assert(level_conductor(5) == 20)
    assert(level_conductor(5, 'so3') == 10)
    with pytest.raises(ContextError):
        level_conductor(6, 'so3')
    with pytest.raises(ContextError):
        level_conductor(5, 'su3')


@pytest.mark.parametrize("m,rEff", [(12, 3), (20, 5), (10, 5), (40, 10), (14, 7), (9, 9), (36, 9)])
def test_effective_level(m, rEff):
    ctx = TheoryCtx(m)
    assert(ctx.rEff == rEff)
    assert(ctx.colorMax == rEff - 2)
    assert(ctx.q == ctx.A_pow(-4))
    assert(ctx.q ** rEff == 1)
    assert(ctx.qint(rEff).is_zero())


def test_too_small():
    for m in (4, 8):
        with pytest.raises(ContextError):
            TheoryCtx(m)


def test_quantum_integers(ctx20):
    assert(ctx20.qint(0).is_zero())
    assert(ctx20.qint(1) == 1)
    assert(ctx20.qint(2) == ctx20.A_pow(2) + ctx20.A_pow(-2))
    assert(ctx20.qint(-3) == -ctx20.qint(3))
    assert(ctx20.qfact(3) == ctx20.qint(2) * ctx20.qint(3))
    for i in range(ctx20.colorMax + 1):
        assert(not ctx20.qint(i + 1).is_zero())


def test_galois_context(ctx20):
    other = ctx20.galois(3)
    assert(other == TheoryCtx(20, 3))
    assert(other.A == ctx20.A ** 3)
    assert(other.to_json() == {"m": 20, "s": 3})
    assert(len({ctx20, TheoryCtx(20, 1), other}) == 2)
    with pytest.raises(ContextError):
        ctx20.galois(4)
