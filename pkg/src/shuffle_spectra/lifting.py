"""Lifting operators and the recursive eigenbasis construction.

A lift maps the Specht module of a shape into the Specht module of the shape
with one extra cell in a chosen row, sending eigenvectors of the
random-to-random operator to eigenvectors one size up.  Two implementations
exist: a closed form built from insertions and letter replacements (the
production path, no linear solves), and insertion followed by orthogonal
projection (kept for cross-validation).

Composing lifts along the rows of a horizontal strip, smallest row first,
and feeding in kernel bases of the smaller shapes produces a complete
eigenbasis of every Specht module; pushing those through the module
embeddings indexed by semistandard tableaux yields a full eigenbasis of any
word space.  Every vector is verified by exact operator application before
it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import combinations

from .combinatorics import (
    Partition,
    check_partition,
    check_skew,
    desarrangement_count,
    horizontal_strip_inners,
    part,
    semistandard_tableaux,
    standard_tableaux,
)
from .linalg import ExactMatrix
from .spectrum import eig_strip, sort_evaluation
from .specht import (
    project_onto_specht,
    specht_basis,
    specht_coordinates,
    theta_embedding,
)
from .words import WordVector, apply_sh, apply_theta, enumerate_words, r2r


def normalize_vector(v: WordVector) -> WordVector:
    """Scalar normal form: integer coefficients with content one, and the
    coefficient of the lexicographically first word positive."""
    if not v:
        return v
    coeffs = [c for _, c in sorted(v.items())]
    scale = Fraction(
        math.lcm(*(c.denominator for c in coeffs)),
        math.gcd(*(c.numerator for c in coeffs)),
    )
    if coeffs[0] < 0:
        scale = -scale
    return scale * v


def _added_rows(outer: Partition, inner: Partition) -> list[int]:
    """Rows gaining a cell, weakly increasing, with multiplicity."""
    outer, inner = check_skew(outer, inner)
    rows: list[int] = []
    for i in range(1, len(outer) + 1):
        rows.extend([i] * (outer[i - 1] - part(inner, i)))
    return rows


def _check_lift_target(shape: Partition, row: int) -> Partition:
    shape = check_partition(shape)
    if row < 1 or row > len(shape) + 1:
        raise ValueError(f"cannot add a cell in row {row} of {shape}")
    target = list(shape) + [0] * (row - len(shape))
    target[row - 1] += 1
    target_partition = tuple(target)
    if not (row == 1 or target[row - 2] >= target[row - 1]):
        raise ValueError(f"{shape} plus a cell in row {row} is not a partition")
    return target_partition


def lift(shape: Partition, row: int, v: WordVector) -> WordVector:
    """Closed-form lift of v from the Specht module of shape into the Specht
    module with one more cell in the given row.

    Sums, over all chains b_1 < ... < b_t < row, the insertion of letter b_1
    followed by the replacements b_1 -> b_2 -> ... -> row, weighted by the
    inverse gaps of the adjusted part lengths; the empty chain is the plain
    insertion of the row's letter.  The input must lie in the source Specht
    module for the output to land in the target one.
    """
    target = _check_lift_target(shape, row)
    del target
    if not v:
        return WordVector()

    def gamma(b: int) -> int:
        value = (part(shape, row) - row) - (part(shape, b) - b)
        assert value != 0, "gap coefficients are nonzero below the target row"
        return value

    out = WordVector()
    for t in range(row):
        for chain in combinations(range(1, row), t):
            coeff = Fraction(1)
            for b in chain:
                coeff /= gamma(b)
            first = chain[0] if chain else row
            term = apply_sh(first, v)
            steps = list(chain) + [row]
            for b_from, b_to in zip(steps, steps[1:]):
                term = apply_theta(b_from, b_to, term)
            out = out + coeff * term
    return out


def lift_via_projection(shape: Partition, row: int, v: WordVector) -> WordVector:
    """Insertion followed by orthogonal projection; must agree with lift."""
    target = _check_lift_target(shape, row)
    if not v:
        return WordVector()
    return project_onto_specht(target, apply_sh(row, v))


def lift_chain(outer: Partition, inner: Partition, v: WordVector) -> WordVector:
    """Composite lift along the rows of outer/inner, smallest rows first.

    The weakly increasing order is what makes deferring all projections to
    the closed form valid; the composite is identically zero whenever the
    skew shape has two cells in one column.
    """
    outer, inner = check_skew(outer, inner)
    current = inner
    for row in _added_rows(outer, inner):
        v = lift(current, row, v)
        current = _check_lift_target(current, row)
    return v


@cache
def kernel_basis(shape: Partition) -> tuple[WordVector, ...]:
    """Basis of the kernel of the random-to-random operator on the Specht
    module of the shape, in the deterministic nullspace normal form.

    The dimension always equals the number of desarrangement tableaux of
    the shape.
    """
    shape = check_partition(shape)
    basis = specht_basis(shape)
    columns = []
    for w in basis.vectors:
        coords = specht_coordinates(shape, r2r(w))
        if coords is None:
            raise AssertionError(f"operator image left the Specht module of {shape}")
        columns.append(coords)
    matrix = ExactMatrix.from_columns(columns)
    vectors = []
    for coeffs in matrix.nullspace():
        v = WordVector()
        for c, w in zip(coeffs, basis.vectors):
            v = v + c * w
        vectors.append(normalize_vector(v))
    if len(vectors) != desarrangement_count(shape):
        raise AssertionError(
            f"kernel of {shape} has dimension {len(vectors)}, "
            f"expected {desarrangement_count(shape)}"
        )
    return tuple(vectors)


@dataclass(frozen=True)
class EigenbasisEntry:
    """Eigenvectors contributed by one horizontal strip.

    vectors are normalized lifts of the kernel basis of the inner shape;
    provenance records which kernel basis element each vector came from.
    Every vector satisfies r2r(v) = eigenvalue * v exactly.
    """

    outer: Partition
    inner: Partition
    eigenvalue: int
    vectors: tuple[WordVector, ...]
    provenance: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "strip": {"outer": list(self.outer), "inner": list(self.inner)},
            "eigenvalue": self.eigenvalue,
            "vectors": [v.to_json() for v in self.vectors],
        }


def _verify_eigenvector(v: WordVector, eigenvalue: int, context: str) -> None:
    if not v:
        raise AssertionError(f"zero eigenvector in {context}")
    if r2r(v) != eigenvalue * v:
        raise AssertionError(f"eigen-equation failed in {context}")


@cache
def eigenbasis(shape: Partition) -> tuple[EigenbasisEntry, ...]:
    """Complete eigenbasis of the random-to-random operator on a Specht module.

    One entry per horizontal strip inner shape with a nonzero kernel; the
    union of all vectors has full rank, and per-strip dimensions equal the
    inner shapes' desarrangement counts.  Raises if any of that fails, since
    a failure would falsify the construction rather than the input.
    """
    shape = check_partition(shape)
    entries: list[EigenbasisEntry] = []
    for inner in sorted(horizontal_strip_inners(shape), key=lambda m: (sum(m), m)):
        kernel = kernel_basis(inner)
        if not kernel:
            continue
        eigenvalue = eig_strip(shape, inner)
        vectors = []
        for index, u in enumerate(kernel):
            lifted = normalize_vector(lift_chain(shape, inner, u))
            _verify_eigenvector(lifted, eigenvalue, f"{shape}/{inner} lift {index}")
            vectors.append(lifted)
        entries.append(
            EigenbasisEntry(shape, inner, eigenvalue, tuple(vectors), tuple(range(len(kernel))))
        )
    total = [v for e in entries for v in e.vectors]
    expected = len(standard_tableaux(shape))
    if len(total) != expected or _word_rank(total) != expected:
        raise AssertionError(f"lifted vectors do not span the Specht module of {shape}")
    return tuple(entries)


def _word_rank(vectors: list[WordVector]) -> int:
    words = sorted({w for v in vectors for w in v.words()})
    index = {w: i for i, w in enumerate(words)}
    rows = []
    for v in vectors:
        row = [Fraction(0)] * len(words)
        for w, c in v.items():
            row[index[w]] = c
        rows.append(row)
    if not rows:
        return 0
    return ExactMatrix(rows).rank()


def eigenbasis_for_evaluation(evaluation) -> tuple[tuple, ...]:
    """Full eigenbasis of the word space of an evaluation.

    Pushes the eigenbasis of every Specht module through each embedding
    tableau with this content; yields (tableau, entry) pairs whose vectors
    jointly form an eigenbasis of the whole word space.
    """
    evaluation = tuple(evaluation)
    nu = sort_evaluation(evaluation)
    n = sum(nu)
    results = []
    count = 0
    for outer in _dominating_partitions(nu):
        for tab in semistandard_tableaux(outer, nu):
            for entry in eigenbasis(outer):
                vectors = []
                for index, v in enumerate(entry.vectors):
                    pushed = normalize_vector(theta_embedding(tab, v))
                    _verify_eigenvector(
                        pushed, entry.eigenvalue, f"{outer}/{entry.inner} via {tab}"
                    )
                    vectors.append(pushed)
                results.append(
                    (
                        tab,
                        EigenbasisEntry(
                            entry.outer,
                            entry.inner,
                            entry.eigenvalue,
                            tuple(vectors),
                            entry.provenance,
                        ),
                    )
                )
                count += len(vectors)
    expected = len(enumerate_words(nu))
    all_vectors = [v for _, e in results for v in e.vectors]
    if count != expected or _word_rank(all_vectors) != expected:
        raise AssertionError(f"embedded eigenbasis does not span the word space of {nu}")
    return tuple(results)


def _dominating_partitions(nu: Partition) -> list[Partition]:
    from .combinatorics import dominates, partitions_of

    return [p for p in partitions_of(sum(nu)) if dominates(p, nu)]
