"""Words, word vectors, and the shuffling operators that act on them.

A word is a tuple of 1-based letter indices; a deck of cards is a word whose
last position is the top card.  WordVector is a sparse rational linear
combination of words: eigenvectors, operator images and kernel elements all
live here.

The three shuffles act unnormalized (integer coefficients); probability
normalization by 1/n or 1/n^2 happens only when building transition
matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .linalg import ExactMatrix

Word = tuple[int, ...]
Permutation = tuple[int, ...]


def check_word(word) -> Word:
    word = tuple(word)
    if any(not isinstance(x, int) or x < 1 for x in word):
        raise ValueError(f"letters must be positive integers: {word}")
    return word


def evaluation_of(word: Word) -> tuple[int, ...]:
    """Letter multiplicities (nu_1, nu_2, ...) up to the largest letter."""
    word = check_word(word)
    top = max(word) if word else 0
    return tuple(word.count(v) for v in range(1, top + 1))


def word_to_text(word: Word) -> str:
    """Digit string when all letters fit in one digit, else a bracketed list."""
    if all(x <= 9 for x in word):
        return "".join(str(x) for x in word)
    return "[" + ",".join(str(x) for x in word) + "]"


def word_from_text(text: str) -> Word:
    """Inverse of word_to_text; also accepts letters a, b, c, ... for 1, 2, 3, ..."""
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"unbalanced brackets in {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return ()
        return check_word(tuple(int(tok) for tok in inner.split(",")))
    letters = []
    for ch in text:
        if ch.isdigit():
            letters.append(int(ch))
        elif "a" <= ch <= "z":
            letters.append(ord(ch) - ord("a") + 1)
        else:
            raise ValueError(f"cannot read letter {ch!r} in {text!r}")
    return check_word(tuple(letters))


class WordVector:
    """Sparse exact-rational linear combination of words.

    Zero coefficients are never stored, so equality is structural equality of
    the underlying term maps.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data: dict[Word, Fraction] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for word, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                word = tuple(word)
                total = data.get(word, Fraction(0)) + coeff
                if total:
                    data[word] = total
                else:
                    data.pop(word, None)
        self._terms = data

    @classmethod
    def unit(cls, word) -> "WordVector":
        return cls({tuple(word): Fraction(1)})

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def coefficient(self, word) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, WordVector) and self._terms == other._terms

    def __add__(self, other: "WordVector") -> "WordVector":
        out = dict(self._terms)
        for word, coeff in other._terms.items():
            total = out.get(word, Fraction(0)) + coeff
            if total:
                out[word] = total
            else:
                out.pop(word, None)
        return WordVector(out)

    def __sub__(self, other: "WordVector") -> "WordVector":
        return self + (-1) * other

    def __neg__(self) -> "WordVector":
        return (-1) * self

    def __rmul__(self, scalar) -> "WordVector":
        scalar = Fraction(scalar)
        if not scalar:
            return WordVector()
        return WordVector({w: c * scalar for w, c in self._terms.items()})

    def __truediv__(self, scalar) -> "WordVector":
        return Fraction(1, 1) / Fraction(scalar) * self

    def inner(self, other: "WordVector") -> Fraction:
        """Inner product in which the words form an orthonormal basis."""
        small, big = (
            (self._terms, other._terms)
            if len(self._terms) <= len(other._terms)
            else (other._terms, self._terms)
        )
        return sum((c * big[w] for w, c in small.items() if w in big), Fraction(0))

    def common_length(self) -> int:
        lengths = {len(w) for w in self._terms}
        if len(lengths) > 1:
            raise ValueError(f"mixed word lengths {sorted(lengths)}")
        return lengths.pop() if lengths else 0

    def __repr__(self) -> str:
        if not self._terms:
            return "WordVector(0)"
        bits = []
        for word in sorted(self._terms):
            c = self._terms[word]
            text = word_to_text(word) if word else "()"
            bits.append(f"{c}*{text}")
        return "WordVector(" + " + ".join(bits) + ")"

    def to_json(self) -> dict[str, str]:
        return {word_to_text(w): str(c) for w, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, data: dict[str, str]) -> "WordVector":
        return cls({word_from_text(w): Fraction(c) for w, c in data.items()})


def _as_vector(v) -> WordVector:
    if isinstance(v, WordVector):
        return v
    return WordVector.unit(v)


# -- elementary operators -----------------------------------------------------


def apply_sh(letter: int, v) -> WordVector:
    """Insert the given letter into every position, summed over positions."""
    v = _as_vector(v)
    terms: list[tuple[Word, Fraction]] = []
    for word, coeff in v.items():
        for j in range(len(word) + 1):
            terms.append((word[:j] + (letter,) + word[j:], coeff))
    return WordVector(terms)


def apply_del(letter: int, v) -> WordVector:
    """Delete one occurrence of the letter, summed over occurrences."""
    v = _as_vector(v)
    terms: list[tuple[Word, Fraction]] = []
    for word, coeff in v.items():
        for j, x in enumerate(word):
            if x == letter:
                terms.append((word[:j] + word[j + 1 :], coeff))
    return WordVector(terms)


def apply_theta(i: int, j: int, v) -> WordVector:
    """Replace one occurrence of letter i by letter j, summed over occurrences.

    With i == j this is multiplication by the letter count, which is needed
    by several operator identities.
    """
    v = _as_vector(v)
    terms: list[tuple[Word, Fraction]] = []
    for word, coeff in v.items():
        for k, x in enumerate(word):
            if x == i:
                terms.append((word[:k] + (j,) + word[k + 1 :], coeff))
    return WordVector(terms)


@cache
def _shuffle_words(u: Word, w: Word) -> tuple[tuple[Word, int], ...]:
    if not u:
        return ((w, 1),)
    if not w:
        return ((u, 1),)
    counts: dict[Word, int] = {}
    for rest, c in _shuffle_words(u[:-1], w):
        counts[rest + (u[-1],)] = counts.get(rest + (u[-1],), 0) + c
    for rest, c in _shuffle_words(u, w[:-1]):
        counts[rest + (w[-1],)] = counts.get(rest + (w[-1],), 0) + c
    return tuple(counts.items())


def shuffle_product(u, w) -> WordVector:
    """Sum of all interleavings of two words, with multiplicity."""
    return WordVector(_shuffle_words(check_word(u), check_word(w)))


def apply_permutation(word: Word, sigma: Permutation) -> Word:
    """Right position action: position i of the result holds letter sigma(i) of the input."""
    word, sigma = check_word(word), tuple(sigma)
    if len(word) != len(sigma):
        raise ValueError("word length and permutation degree differ")
    if sorted(sigma) != list(range(1, len(word) + 1)):
        raise ValueError(f"not a permutation: {sigma}")
    return tuple(word[sigma[i] - 1] for i in range(len(word)))


def compose_permutations(sigma: Permutation, tau: Permutation) -> Permutation:
    """sigma after tau, so that acting by the product acts by tau last."""
    return tuple(sigma[tau[i] - 1] for i in range(len(tau)))


# -- the three shuffles -------------------------------------------------------


def r2t(v) -> WordVector:
    """Random-to-top, unnormalized: every letter moved to the end in turn."""
    v = _as_vector(v)
    terms: list[tuple[Word, Fraction]] = []
    for word, coeff in v.items():
        for j in range(len(word)):
            terms.append((word[:j] + word[j + 1 :] + (word[j],), coeff))
    return WordVector(terms)


def t2r(v) -> WordVector:
    """Top-to-random, unnormalized: the last letter reinserted everywhere."""
    v = _as_vector(v)
    out = WordVector()
    for word, coeff in v.items():
        if word:
            out = out + coeff * apply_sh(word[-1], WordVector.unit(word[:-1]))
    return out


def r2r(v) -> WordVector:
    """Random-to-random, unnormalized: delete a letter, reinsert it anywhere.

    Equals the letter-wise sum of insertions composed with deletions, and
    also the composition of the other two shuffles.
    """
    v = _as_vector(v)
    v.common_length()
    terms: list[tuple[Word, Fraction]] = []
    for word, coeff in v.items():
        n = len(word)
        for j in range(n):
            letter = word[j]
            rest = word[:j] + word[j + 1 :]
            for k in range(n):
                terms.append((rest[:k] + (letter,) + rest[k:], coeff))
    return WordVector(terms)


def _cycle(n: int, first: int, last: int) -> Permutation:
    """One-line form of the cycle sending first -> first+step -> ... -> last -> first."""
    step = 1 if first <= last else -1
    image = list(range(1, n + 1))
    lo, hi = min(first, last), max(first, last)
    for x in range(lo, hi + 1):
        image[x - 1] = first if x == last else x + step
    return tuple(image)


def r2r_via_group_algebra(word) -> WordVector:
    """Random-to-random evaluated by its group-algebra element.

    Expands the sum of cycle permutations explicitly; exists solely as an
    independent cross-check of r2r.
    """
    word = check_word(word)
    n = len(word)
    terms: list[tuple[Word, Fraction]] = [(word, Fraction(n))]
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u != v:
                terms.append((apply_permutation(word, _cycle(n, u, v)), Fraction(1)))
    return WordVector(terms)


# -- word enumeration and transition matrices ---------------------------------


def enumerate_words(evaluation) -> tuple[Word, ...]:
    """All words with the given evaluation, in deck order.

    Words are sorted by their reversal, descending, which reads decks from
    bottom card to top card.
    """
    evaluation = tuple(evaluation)
    if any(not isinstance(x, int) or x < 0 for x in evaluation):
        raise ValueError(f"bad evaluation: {evaluation}")
    letters = [i + 1 for i, mult in enumerate(evaluation) for _ in range(mult)]

    def distinct_orderings(pool: tuple[int, ...]):
        if not pool:
            yield ()
            return
        for x in sorted(set(pool)):
            rest = list(pool)
            rest.remove(x)
            for tail in distinct_orderings(tuple(rest)):
                yield (x,) + tail

    words = list(distinct_orderings(tuple(letters)))
    return tuple(sorted(words, key=lambda w: tuple(reversed(w)), reverse=True))


SHUFFLES = {
    "r2r": (r2r, 2),
    "r2t": (r2t, 1),
    "t2r": (t2r, 1),
}


@dataclass(frozen=True)
class TransitionMatrix:
    """Transition matrix of a shuffle on the words of one evaluation.

    counts holds the integer one-step transition weights; the probability
    matrix is counts scaled by `scale` (1/n for the one-sided shuffles,
    1/n^2 for random-to-random).  Entry (w, u) is the weight of moving from
    deck w to deck u.
    """

    shuffle: str
    evaluation: tuple[int, ...]
    order: tuple[Word, ...]
    scale: Fraction
    counts: ExactMatrix

    @property
    def matrix(self) -> ExactMatrix:
        return self.counts.scale(self.scale)

    def to_json(self) -> dict:
        return {
            "schema": "shuffle-spectra/transition-matrix/1",
            "shuffle": self.shuffle,
            "evaluation": list(self.evaluation),
            "order": [word_to_text(w) for w in self.order],
            "scale": str(self.scale),
            "entries": [[int(x) for x in row] for row in self.counts.data],
        }


def transition_matrix(shuffle: str, evaluation) -> TransitionMatrix:
    """One-step transition matrix over enumerate_words(evaluation)."""
    if shuffle not in SHUFFLES:
        raise ValueError(f"unknown shuffle {shuffle!r}")
    op, power = SHUFFLES[shuffle]
    words = enumerate_words(evaluation)
    n = sum(evaluation)
    index = {w: i for i, w in enumerate(words)}
    rows = []
    for w in words:
        image = op(WordVector.unit(w))
        row = [0] * len(words)
        for u, c in image.items():
            row[index[u]] = int(c)
        rows.append(row)
    scale = Fraction(1, n**power) if n else Fraction(1)
    return TransitionMatrix(shuffle, tuple(evaluation), words, scale, ExactMatrix(rows))


def operator_matrix(op, words) -> ExactMatrix:
    """Matrix of a word-vector operator in column convention.

    Column j holds the coordinates of op(words[j]), so matrix-kernel
    computations agree with operator kernels without any transposition.
    """
    words = tuple(words)
    index = {w: i for i, w in enumerate(words)}
    columns = []
    for w in words:
        image = op(WordVector.unit(w))
        col = [Fraction(0)] * len(words)
        for u, c in image.items():
            col[index[u]] = c
        columns.append(col)
    return ExactMatrix.from_columns(columns)
