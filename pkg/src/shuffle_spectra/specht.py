"""Specht submodules of word spaces.

Every tableau with entries 1..n encodes a word whose i-th letter is the row
holding i.  Antisymmetrizing that word over the column stabilizer gives the
basis vectors w_t; their span over the standard tableaux of a shape is the
Specht submodule of the words with that evaluation.

The orthogonal projection onto a Specht submodule is computed by an exact
Gram solve in the inner product where words are orthonormal.  Because each
word space contains exactly one copy of its own Specht module and the
position action permutes the word basis, the orthogonal complement is again
a submodule, so this projection agrees with the module-theoretic projection
wherever this package uses it; no character theory is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations, product

from .combinatorics import (
    Partition,
    Tableau,
    check_partition,
    multiset_arrangements,
    standard_tableaux,
    tableau_shape,
)
from .linalg import ExactMatrix
from .words import Word, WordVector, evaluation_of


def word_of_tableau(t: Tableau) -> Word:
    """Word whose i-th letter is the (1-based) row of i in the tableau."""
    entries = [x for row in t for x in row]
    n = len(entries)
    if sorted(entries) != list(range(1, n + 1)):
        raise ValueError("tableau entries must be exactly 1..n")
    rows = {x: i + 1 for i, row in enumerate(t) for x in row}
    return tuple(rows[i] for i in range(1, n + 1))


def _parity(indices: tuple[int, ...]) -> int:
    inversions = sum(
        1
        for i in range(len(indices))
        for j in range(i + 1, len(indices))
        if indices[i] > indices[j]
    )
    return -1 if inversions % 2 else 1


def polytabloid(t: Tableau) -> WordVector:
    """Signed sum of row words over all column rearrangements of the tableau."""
    entries = [x for row in t for x in row]
    n = len(entries)
    if sorted(entries) != list(range(1, n + 1)):
        raise ValueError("tableau entries must be exactly 1..n")
    n_cols = len(t[0]) if t else 0
    columns = [
        [t[i][j] for i in range(len(t)) if j < len(t[i])] for j in range(n_cols)
    ]
    column_choices = []
    for col in columns:
        k = len(col)
        choices = []
        for idx in permutations(range(k)):
            assignment = {col[idx[i]]: i + 1 for i in range(k)}  # entry -> row
            choices.append((_parity(idx), assignment))
        column_choices.append(choices)
    terms: list[tuple[Word, Fraction]] = []
    for combo in product(*column_choices):
        sign = 1
        rows: dict[int, int] = {}
        for s, assignment in combo:
            sign *= s
            rows.update(assignment)
        word = tuple(rows[i] for i in range(1, n + 1))
        terms.append((word, Fraction(sign)))
    if not terms:  # empty tableau
        terms = [((), Fraction(1))]
    return WordVector(terms)


@dataclass(frozen=True)
class SpechtBasis:
    shape: Partition
    tableaux: tuple[Tableau, ...]
    vectors: tuple[WordVector, ...]

    def __len__(self) -> int:
        return len(self.vectors)


@cache
def specht_basis(shape: Partition) -> SpechtBasis:
    """Basis vectors w_t over the standard tableaux, in tableau order."""
    shape = check_partition(shape)
    tableaux = standard_tableaux(shape)
    return SpechtBasis(shape, tableaux, tuple(polytabloid(t) for t in tableaux))


@cache
def gram_matrix(shape: Partition) -> ExactMatrix:
    """Gram matrix of the basis vectors in the orthonormal word inner product."""
    vectors = specht_basis(shape).vectors
    return ExactMatrix(
        [[u.inner(v) for v in vectors] for u in vectors]
    )


def _check_evaluation(shape: Partition, v: WordVector) -> None:
    for word in v.words():
        if evaluation_of(word) != shape:
            raise ValueError(
                f"word {word} has evaluation {evaluation_of(word)}, expected {shape}"
            )


def specht_coordinates(shape: Partition, v: WordVector) -> tuple[Fraction, ...] | None:
    """Coordinates of v in the w_t basis, or None when v is outside the span."""
    shape = check_partition(shape)
    basis = specht_basis(shape)
    if not v:
        return tuple(Fraction(0) for _ in basis.vectors)
    _check_evaluation(shape, v)
    rhs = [w.inner(v) for w in basis.vectors]
    coords = gram_matrix(shape).solve(rhs)
    assert coords is not None  # Gram matrices of independent vectors are invertible
    candidate = WordVector()
    for c, w in zip(coords, basis.vectors):
        candidate = candidate + c * w
    return coords if candidate == v else None


def project_onto_specht(shape: Partition, v: WordVector) -> WordVector:
    """Orthogonal projection onto the Specht submodule of the shape's word space."""
    shape = check_partition(shape)
    if not v:
        return WordVector()
    _check_evaluation(shape, v)
    basis = specht_basis(shape)
    rhs = [w.inner(v) for w in basis.vectors]
    coords = gram_matrix(shape).solve(rhs)
    assert coords is not None
    out = WordVector()
    for c, w in zip(coords, basis.vectors):
        out = out + c * w
    return out


def theta_embedding(t: Tableau, v: WordVector) -> WordVector:
    """Module morphism attached to a filled tableau.

    On a word of evaluation shape(t), the occurrences of each letter r are
    rewritten, in position order, by every distinct arrangement of row r of
    the tableau, summed over all choices.  On the increasing word this is
    the row-permuted concatenation sum, and the position action extends it
    to everything else.
    """
    shape = tableau_shape(t)
    shape = check_partition(shape)
    if not v:
        return WordVector()
    _check_evaluation(shape, v)
    row_options = [multiset_arrangements(row) for row in t]
    terms: list[tuple[Word, Fraction]] = []
    for word, coeff in v.items():
        positions = [
            [k for k, x in enumerate(word) if x == r] for r in range(1, len(t) + 1)
        ]
        for combo in product(*row_options):
            out = list(word)
            for r_positions, arrangement in zip(positions, combo):
                for k, letter in zip(r_positions, arrangement):
                    out[k] = letter
            terms.append((tuple(out), coeff))
    return WordVector(terms)
