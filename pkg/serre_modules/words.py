"""
Words in the generators x, y of A_q, their signatures and the irreducible words.
"""
import logging
from dataclasses import dataclass
from itertools import groupby, product

from django.conf import settings

from .aqbridge import build_aq_pair
from .exceptions import CapExceeded, InvalidParameter
from .linalg import EchelonBasis, Matrix

logger = logging.getLogger(__name__)

ALPHABET = "xy"


@dataclass(frozen=True)
class Word:
    letters: str = ""

    def __post_init__(self):
        if set(self.letters) - set(ALPHABET):
            raise InvalidParameter(f"words are strings over 'x' and 'y', got {self.letters!r}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters

    def mirror(self):
        return Word(self.letters.translate(str.maketrans("xy", "yx")))


@dataclass(frozen=True)
class Signature:
    parts: tuple
    leading_letter: str = None


def _word(w):
    return w if isinstance(w, Word) else Word(w)


def signature(w):
    """Run lengths of the maximal blocks of equal letters."""
    letters = _word(w).letters
    parts = tuple(len(list(run)) for _, run in groupby(letters))
    return Signature(parts, letters[0] if letters else None)


def is_reducible(w):
    """Some interior run is no longer than the run before it and shorter than the run after it."""
    p = signature(w).parts
    return any(p[k - 1] >= p[k] < p[k + 1] for k in range(1, len(p) - 1))


def is_irreducible_unimodal(w):
    """The signature strictly increases up to some point and weakly decreases after it."""
    p = signature(w).parts
    t = 0
    while t + 1 < len(p) and p[t] < p[t + 1]:
        t += 1
    return all(p[k] >= p[k + 1] for k in range(t, len(p) - 1))


def _check_cap(n, cap, setting):
    if n < 0:
        raise InvalidParameter(f"word length must be nonnegative, got {n}")
    cap = getattr(settings, setting) if cap is None else cap
    if n > cap:
        raise CapExceeded(f"length {n} exceeds the configured cap {cap}")


def all_words(n):
    """Every word of length n, lexicographic with x < y."""
    return [Word("".join(letters)) for letters in product(ALPHABET, repeat=n)]


def enumerate_irreducible(n, cap=None):
    _check_cap(n, cap, "SERRE_WORD_CAP")
    return [w for w in all_words(n) if not is_reducible(w)]


def irreducible_compositions(n):
    """Compositions of n whose parts strictly increase and then weakly decrease."""
    found = []

    def extend(parts, remaining):
        if remaining == 0:
            if is_irreducible_unimodal("".join("xy"[k % 2] * part for k, part in enumerate(parts))):
                found.append(tuple(parts))
            return
        for part in range(1, remaining + 1):
            extend(parts + [part], remaining - part)

    extend([], n)
    return found


def count_row(n, cap=None):
    """Irreducible count, total count and the pattern/unimodality agreement for length n."""
    _check_cap(n, cap, "SERRE_WORD_CAP")
    words = all_words(n)
    irreducible = sum(1 for w in words if not is_reducible(w))
    agrees = all(is_reducible(w) != is_irreducible_unimodal(w) for w in words)
    return {"n": n, "irreducible": irreducible, "total": len(words), "equivalence": agrees}


def count_table(max_len, cap=None):
    """count_row for every length 0..max_len."""
    _check_cap(max_len, cap, "SERRE_WORD_CAP")
    return [count_row(n, cap) for n in range(max_len + 1)]


def spanning_check(rep, n, cap=None, pair=None):
    """
    Every word of length <= n, evaluated at x = A and y = A*, lies in the span
    of the evaluated irreducible words of length <= n.
    """
    _check_cap(n, cap, "SERRE_SPANNING_CAP")
    pair = pair or build_aq_pair(rep)
    letters = {"x": pair.A, "y": pair.Astar}
    images = {"": None}
    frontier = [""]
    for _ in range(n):
        next_frontier = []
        for prefix in frontier:
            for c in ALPHABET:
                previous = images[prefix]
                images[prefix + c] = letters[c] if previous is None else previous @ letters[c]
                next_frontier.append(prefix + c)
        frontier = next_frontier
    basis = EchelonBasis(pair.dim ** 2)
    basis.add(Matrix.identity(pair.dim).flatten())
    reducible = []
    for word, matrix in images.items():
        if not word:
            continue
        if is_reducible(word):
            reducible.append(word)
        else:
            basis.add(matrix.flatten())
    for word in reducible:
        if basis.add(images[word].flatten()):
            logger.warning("word %s is outside the span of irreducible words", word)
            return False
    return True
