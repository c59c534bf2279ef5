"""The chain complex of injective words and its Laplacians.

Injective words over {1..n} carry signed deletion maps whose squares vanish;
the Laplacians built from them and their adjoints are symmetric integer
matrices with integral spectra.  At full length the Laplacian coincides with
a signed variant of the random-to-random operator, conjugate to the plain
one by the sign-of-sorting involution, which is how the integrality of the
Laplacian spectra follows from the shuffle spectrum.

Convention at the bottom of the complex: the empty word is the unique basis
element in degree zero, deleting the only letter of a word picks up the sign
of position one, and the out-of-range maps are zero, so the extreme
Laplacians use their single surviving term.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import permutations

from .linalg import ExactMatrix
from .words import Word, WordVector


@cache
def injective_words(n: int, r: int) -> tuple[Word, ...]:
    """Duplicate-free words of length r over {1..n}, lexicographically."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    return tuple(sorted(permutations(range(1, n + 1), r)))


def _check_injective(v: WordVector, r: int) -> None:
    for word in v.words():
        if len(word) != r or len(set(word)) != r:
            raise ValueError(f"{word} is not an injective word of length {r}")


def boundary(n: int, r: int, v: WordVector) -> WordVector:
    """Signed deletion: position j removed with sign (-1)^j, summed over j."""
    if not 1 <= r <= n:
        raise ValueError(f"boundary needs 1 <= r <= n, got r={r}, n={n}")
    _check_injective(v, r)
    terms = []
    for word, coeff in v.items():
        for j in range(r):
            sign = -1 if (j + 1) % 2 else 1
            terms.append((word[:j] + word[j + 1 :], sign * coeff))
    return WordVector(terms)


@cache
def boundary_matrix(n: int, r: int) -> ExactMatrix:
    """Matrix of the boundary map in column convention (targets x sources)."""
    sources = injective_words(n, r)
    targets = injective_words(n, r - 1)
    index = {w: i for i, w in enumerate(targets)}
    columns = []
    for w in sources:
        col = [Fraction(0)] * len(targets)
        for u, c in boundary(n, r, WordVector.unit(w)).items():
            col[index[u]] += c
        columns.append(col)
    return ExactMatrix.from_columns(columns)


def coboundary(n: int, r: int, v: WordVector) -> WordVector:
    """Adjoint of the boundary one degree up, in the orthonormal word basis."""
    if not 0 <= r < n:
        raise ValueError(f"coboundary needs 0 <= r < n, got r={r}, n={n}")
    _check_injective(v, r)
    matrix = boundary_matrix(n, r + 1).transpose()
    sources = injective_words(n, r)
    targets = injective_words(n, r + 1)
    coords = [v.coefficient(w) for w in sources]
    image = matrix.multiply_vector(coords)
    return WordVector({w: c for w, c in zip(targets, image)})


@cache
def laplacian(n: int, r: int) -> ExactMatrix:
    """Laplacian on injective words of length r, a symmetric integer matrix."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    size = len(injective_words(n, r))
    total = ExactMatrix.zeros(size, size)
    if r >= 1:
        down = boundary_matrix(n, r)
        total = total + down.transpose() @ down
    if r < n:
        up = boundary_matrix(n, r + 1)
        total = total + up @ up.transpose()
    return total


def sign_of_word(word: Word) -> int:
    """Sign of the permutation that sorts the word increasingly."""
    if len(set(word)) != len(word):
        raise ValueError(f"{word} has repeated letters")
    inversions = sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )
    return -1 if inversions % 2 else 1


def signed_r2r(v: WordVector) -> WordVector:
    """Signed random-to-random operator on injective words.

    A letter moved from position u to position v picks up the sign of the
    rotation between them; the unmoved term appears with weight r.
    """
    terms = []
    for word, coeff in v.items():
        r = len(word)
        if len(set(word)) != r:
            raise ValueError(f"{word} has repeated letters")
        terms.append((word, r * coeff))
        for u in range(r):
            letter = word[u]
            rest = word[:u] + word[u + 1 :]
            for k in range(r):
                if k == u:
                    continue
                sign = -1 if (k - u) % 2 else 1
                terms.append((rest[:k] + (letter,) + rest[k:], sign * coeff))
    return WordVector(terms)


def signed_r2r_matrix(n: int, r: int) -> ExactMatrix:
    """Matrix of the signed operator on the length-r injective words."""
    words = injective_words(n, r)
    index = {w: i for i, w in enumerate(words)}
    columns = []
    for w in words:
        col = [Fraction(0)] * len(words)
        for u, c in signed_r2r(WordVector.unit(w)).items():
            col[index[u]] += c
        columns.append(col)
    return ExactMatrix.from_columns(columns)


def sign_conjugated_r2r_matrix(n: int, r: int) -> ExactMatrix:
    """Matrix of the plain operator conjugated by the sign involution."""
    from .words import r2r

    words = injective_words(n, r)
    signs = [sign_of_word(w) for w in words]
    index = {w: i for i, w in enumerate(words)}
    columns = []
    for j, w in enumerate(words):
        col = [Fraction(0)] * len(words)
        for u, c in r2r(WordVector.unit(w)).items():
            col[index[u]] += c * signs[index[u]] * signs[j]
        columns.append(col)
    return ExactMatrix.from_columns(columns)


def laplacian_spectrum(n: int, r: int) -> dict[int, int]:
    """Integer spectrum of the Laplacian with multiplicities.

    Raises if the characteristic polynomial fails to split over the
    integers, which would falsify the integrality statement.
    """
    matrix = laplacian(n, r)
    poly = matrix.charpoly()
    roots, remainder = poly.integer_roots(bound=matrix.eigenvalue_bound())
    if remainder.degree != 0:
        raise AssertionError(f"Laplacian spectrum for n={n}, r={r} is not integral")
    return roots
