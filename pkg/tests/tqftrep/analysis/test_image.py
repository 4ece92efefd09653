import pytest

from tqftrep.analysis import (infinite_image_report, bfs_closure, subgroup_criterion, unitarity_premise,
                              word_certificate, suggested_words, generator_order_table)

from tests.matrix_helper import level, from_rows


def test_suggested_words():
    assert([str(w) for w in suggested_words(3)] == ["g1^-1 g2"])
    assert([str(w) for w in suggested_words(4)] == ["g1^-1 g2", "g1 g2 g3^-1"])


@pytest.mark.parametrize("r", [5, 7, 8])
def test_word_certificate(r):
    report = infinite_image_report(level(r), 3, 1, max_word_len=3)
    assert(report["verdict"] == "infinite")
    assert(report["certificate"] == "ratioScan")
    assert(report["witness"] is not None)
    assert(report["checked_bound"] > 0)
    assert(report["suggested"][0]["word"] == "g1^-1 g2")


@pytest.mark.parametrize("r", [4, 6, 10])
def test_finite_images_have_no_witness(r):
    result = word_certificate(level(r), 3, 1, max_word_len=3)
    assert(result["witness"] is None)
    assert(result["searched"] == 4 + 12 + 36)
    report = infinite_image_report(level(r), 3, 1, max_word_len=2)
    assert(report["verdict"] == "inconclusive")
    assert(not report["subgroup"]["pass"])


def test_subgroup_criterion():
    out = subgroup_criterion(level(7), 3, 1)
    assert(out["applicable"])
    assert(out["orders"] == [14, 14])
    assert(not out["commute"])
    assert(out["premise_holds"])
    assert(out["pass"])
    assert(not subgroup_criterion(level(7), 4, 2)["applicable"])


def test_unitarity_premise():
    premise = unitarity_premise(level(8), 3, 1)
    assert(premise["unitary"])
    assert(len(premise["gauge"]) == 2)
    assert(premise["gauge"][0] == 1.0)


@pytest.mark.parametrize("r", [4, 6])
def test_bfs_closes(r):
    result = bfs_closure(level(r), 3, 1, cap=2000)
    assert(result["status"] == "closed")
    assert(result["order"] > 1)


def test_bfs_icosahedral():
    # two non-commuting elements of order 5 generate A5 inside PGL(2)
    assert(bfs_closure(level(10), 3, 1, cap=2000)["order"] == 60)


def test_bfs_exceeds_cap():
    result = bfs_closure(level(5), 3, 1, cap=200)
    assert(result["status"] == "exceeded")
    assert(result["order"] is None)
    with pytest.raises(ValueError):
        bfs_closure(level(5), 3, 1, cap=0)


@pytest.mark.slow
def test_bfs_default_cap():
    assert(bfs_closure(level(5), 3, 1)["status"] == "exceeded")


def test_bfs_explicit_generators(ctx20):
    x = from_rows(ctx20, [[0, 1], [1, 0]])
    z = from_rows(ctx20, [[1, 0], [0, -1]])
    assert(bfs_closure(ctx20, 3, 1, cap=100, generators=[x, z])["order"] == 4)


def test_generator_order_table():
    rows = generator_order_table(4, 12)
    assert([row["r"] for row in rows] == list(range(4, 13)))
    assert(all(row["pass"] for row in rows))
    so3 = generator_order_table(5, 11, theory='so3')
    assert([row["r"] for row in so3] == [5, 7, 9, 11])
    assert(all(row["pass"] and row["m"] == 2 * row["r"] for row in so3))


@pytest.mark.slow
@pytest.mark.parametrize("r", range(4, 14))
def test_finite_and_infinite_exclusive(r):
    report = infinite_image_report(level(r), 3, 1, max_word_len=4)
    closure = bfs_closure(level(r), 3, 1, cap=2000)
    infinite = report["verdict"] == "infinite"
    closed = closure["status"] == "closed"
    assert(not (infinite and closed))
    assert(closed == (r in (4, 6, 10)))
    assert(infinite == (r not in (4, 6, 10)))
