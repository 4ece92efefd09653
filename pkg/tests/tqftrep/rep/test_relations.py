import pytest

from tqftrep.rep import verify_relations, verify_generators, rho_gen
from tqftrep.scalar import TheoryCtx

from tests.matrix_helper import level, direct_sum, from_rows


@pytest.mark.parametrize("m,s", [(12, 1), (20, 1), (20, 7), (10, 3), (24, 5), (40, 1), (14, 1)])
def test_relation_suite(m, s):
    ctx = TheoryCtx(m, s)
    for n in (3, 4, 5):
        for color in (0, 1, 2):
            if n % 2 != color % 2 or color > ctx.colorMax:
                continue
            report = verify_relations(ctx, n, color)
            assert(report["pass"])
            assert(report["dim"] > 0)


def test_relation_rows(ctx20):
    report = verify_relations(ctx20, 4, 2)
    kinds = {(row["variant"], row["relation"]) for row in report["checks"]}
    assert(('rhoTilde', 'braid') in kinds)
    assert(('rhoTilde', 'commute') in kinds)
    assert(('rhoTilde', 'hecke') in kinds)
    assert(('rhoTilde', 'temperley-lieb') in kinds)
    assert(('rhoTilde', 'block') in kinds)
    assert(('rho', 'braid') in kinds)
    assert(('rho', 'hecke') not in kinds)


def test_failures_carry_a_witness(ctx20):
    g1 = rho_gen(ctx20, 3, 1, 1)
    bogus = from_rows(ctx20, [[1, 1], [0, 1]])
    rows = verify_generators(ctx20, [g1, bogus])
    failed = [row for row in rows if not row["pass"]]
    assert(failed)
    assert(all(row["witness"] is not None for row in failed))


def test_sum_of_representations(ctx20):
    gens = [direct_sum(rho_gen(ctx20, 3, 1, i), rho_gen(ctx20, 3, 3, i)) for i in (1, 2)]
    rows = verify_generators(ctx20, gens)
    assert(all(row["pass"] for row in rows))


def test_block_trace_and_det(ctx20):
    g1, g2 = rho_gen(ctx20, 3, 1, 1), rho_gen(ctx20, 3, 1, 2)
    rows = verify_generators(ctx20, [g1, g2], basis=g1.basis)
    blocks = [row for row in rows if row["relation"] == "block"]
    assert(blocks)
    assert(all(row["pass"] for row in blocks))

    # -B keeps det = -q but moves the trace to 1 - q
    rows = verify_generators(ctx20, [g1, g2.scale(-1)], basis=g1.basis)
    blocks = [row for row in rows if row["relation"] == "block"]
    assert(len(blocks) == 1)
    assert(not blocks[0]["pass"])
    assert(blocks[0]["witness"]["trace"] == str(1 - ctx20.q))
    assert(blocks[0]["witness"]["det"] == str(-ctx20.q))
