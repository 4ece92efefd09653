from itertools import permutations, product

from hypothesis import given, settings
from hypothesis import strategies as st

from tqftrep.recoupling import admissible, theta, tet
from tqftrep.scalar import TheoryCtx


CTX = TheoryCtx.from_level(6)
COLORS = range(CTX.colorMax + 1)

TRIPLES = [t for t in product(COLORS, repeat=3) if admissible(CTX, t)]

# arrays [A B E; D C F] read row by row
ARRAYS = [(a, b, e, d, c, f) for a, b, e, d, c, f in product(COLORS, repeat=6)
          if admissible(CTX, (a, b, e)) and admissible(CTX, (b, d, f))
          and admissible(CTX, (e, d, c)) and admissible(CTX, (a, c, f))]


def tetrahedral_images(labels):
    """The 24 arrays related by permuting columns and flipping two columns."""
    a, b, e, d, c, f = labels
    columns = [(a, d), (b, c), (e, f)]
    images = set()
    for order in permutations(columns):
        for flips in ((), (0, 1), (0, 2), (1, 2)):
            cols = [(lo, hi) if k in flips else (hi, lo) for k, (hi, lo) in enumerate(order)]
            (x1, y1), (x2, y2), (x3, y3) = cols
            images.add((x1, x2, x3, y1, y2, y3))
    return images


def test_admissible_tables():
    assert(ARRAYS)
    assert((1, 1, 2) in TRIPLES)
    assert(len(tetrahedral_images((1, 1, 0, 1, 1, 0))) > 1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(TRIPLES))
def test_theta_permutation_symmetry(labels):
    value = theta(CTX, *labels)
    for image in permutations(labels):
        assert(theta(CTX, *image) == value)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ARRAYS))
def test_tet_tetrahedral_symmetry(labels):
    value = tet(CTX, *labels)
    for image in tetrahedral_images(labels):
        assert(tet(CTX, *image) == value)
