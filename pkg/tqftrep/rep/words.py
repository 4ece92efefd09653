"""
Braid words in the Artin generators g_1 … g_{n−1}.

Words are written as whitespace separated letters ``g<i>`` or
``g<i>^-1`` (``^1`` and ``^+1`` are accepted), e.g. ``"g1 g2^-1"``.  The
letters may also be run together, as in ``"g1g2g3^-1"``.
"""
import re

from ..errors import ParseError, DimensionError

__all__ = ["BraidWord", "parse_word", "random_balanced_word", "reduced_words"]

LETTER = re.compile(r'g(\d+)(\^([+-]?1))?')


class BraidWord(object):
    """
    A word in the braid group B_n.

    Parameters
    ----------
    n : int
        Number of strands
    letters : sequence of tuple
        (generator index, exponent) pairs with exponent ±1
    """
    def __init__(self, n, letters=()):
        self.n = n
        self.letters = tuple((int(i), int(e)) for i, e in letters)
        for i, e in self.letters:
            if not 1 <= i <= n - 1:
                raise DimensionError("Generator g%d is not in B_%d" % (i, n))
            if e not in (1, -1):
                raise ParseError("Exponent %d is not +1 or -1" % e)

    @property
    def writhe(self):
        return sum(e for _, e in self.letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other):
        if other.n != self.n:
            raise DimensionError("Cannot concatenate words in B_%d and B_%d" % (self.n, other.n))
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self):
        return BraidWord(self.n, [(i, -e) for i, e in reversed(self.letters)])

    def __eq__(self, other):
        return isinstance(other, BraidWord) and (self.n, self.letters) == (other.n, other.letters)

    def __hash__(self):
        return hash((self.n, self.letters))

    def __str__(self):
        if not self.letters:
            return "e"
        return " ".join("g%d" % i if e == 1 else "g%d^-1" % i for i, e in self.letters)

    def __repr__(self):
        return "BraidWord(%d, %r)" % (self.n, str(self))


def parse_word(text, n):
    """
    Parse a braid word.

    Parameters
    ----------
    text : str
        Letters like ``g1 g2^-1``; an empty string, ``e`` or ``1`` is the identity
    n : int
        Number of strands

    Returns
    -------
    :class:`BraidWord`

    Raises
    ------
    :class:`~tqftrep.errors.ParseError`
        For text that is not a sequence of letters
    """
    compact = re.sub(r'[\s*]+', '', text or '')
    if compact in ('', 'e', '1'):
        return BraidWord(n)
    letters = []
    pos = 0
    for match in LETTER.finditer(compact):
        if match.start() != pos:
            break
        letters.append((int(match.group(1)), int(match.group(3) or 1)))
        pos = match.end()
    if pos != len(compact):
        raise ParseError("Cannot parse braid word %r near position %d" % (text, pos))
    return BraidWord(n, letters)


def random_balanced_word(rng, n, max_len):
    """
    A random word with exponent sum zero.

    Parameters
    ----------
    rng : :class:`numpy.random.Generator`
    n : int
    max_len : int
        Upper bound on the (even) length

    Returns
    -------
    :class:`BraidWord`
    """
    half = int(rng.integers(0, max_len // 2 + 1))
    gens = rng.integers(1, n, size=2 * half)
    exps = [1] * half + [-1] * half
    letters = list(zip(gens.tolist(), exps))
    order = rng.permutation(len(letters))
    return BraidWord(n, [letters[k] for k in order])


def reduced_words(n, max_len):
    """
    Freely reduced words of length 1 … `max_len`, shortest first.

    Yields
    ------
    :class:`BraidWord`
    """
    alphabet = [(i, e) for i in range(1, n) for e in (1, -1)]
    layer = [()]
    for _ in range(max_len):
        nxt = []
        for word in layer:
            for letter in alphabet:
                if word and word[-1] == (letter[0], -letter[1]):
                    continue
                w = word + (letter,)
                nxt.append(w)
                yield BraidWord(n, w)
        layer = nxt
