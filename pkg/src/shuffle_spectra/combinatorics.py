"""Partitions, skew shapes, tableaux and the RSK correspondence.

Partitions are tuples of weakly decreasing positive ints (the empty tuple is
the empty partition).  Tableaux are tuples of row tuples.  All enumeration
orders are deterministic: partitions are listed in descending lexicographic
order, standard tableaux by their row reading word, so downstream output is
reproducible run to run.
"""

from __future__ import annotations

from functools import cache
from itertools import permutations

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]
Word = tuple[int, ...]


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts) -> Partition:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        raise ValueError("negative size")
    if n == 0:
        return ((),)

    def rec(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for head in range(min(remaining, largest), 0, -1):
            for tail in rec(remaining - head, head):
                yield (head,) + tail

    return tuple(rec(n, n))


def part(p: Partition, i: int) -> int:
    """i-th part (1-based), with missing parts read as 0."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(
        inner[i] <= outer[i] for i in range(len(inner))
    )


def check_skew(outer, inner) -> tuple[Partition, Partition]:
    outer, inner = check_partition(outer), check_partition(inner)
    if not contains(outer, inner):
        raise ValueError(f"{inner} does not fit inside {outer}")
    return outer, inner


def skew_cells(outer: Partition, inner: Partition) -> list[tuple[int, int]]:
    """Cells of outer/inner in 1-based matrix coordinates."""
    outer, inner = check_skew(outer, inner)
    return [
        (i + 1, j + 1)
        for i in range(len(outer))
        for j in range(part(inner, i + 1), outer[i])
    ]


def diag(outer: Partition, inner: Partition = ()) -> int:
    """Sum of the diagonal index j - i over the cells of outer/inner."""
    return sum(j - i for i, j in skew_cells(outer, inner))


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    """True iff no column holds two cells of outer/inner."""
    columns = [j for _, j in skew_cells(outer, inner)]
    return len(columns) == len(set(columns))


def horizontal_strip_inners(outer: Partition) -> tuple[Partition, ...]:
    """All inner shapes mu with outer/mu a horizontal strip, lex sorted.

    The one-cell-per-column condition pins each part of mu between the part
    below it in outer and that part's own outer value.
    """
    outer = check_partition(outer)

    def rec(i: int):
        if i == len(outer):
            yield ()
            return
        lo = part(outer, i + 2)
        for v in range(lo, outer[i] + 1):
            if v == 0:
                yield ()
            else:
                for tail in rec(i + 1):
                    yield (v,) + tail

    return tuple(sorted(rec(0)))


def dominates(a: Partition, b: Partition) -> bool:
    """Dominance order: every prefix sum of a weakly exceeds that of b."""
    a, b = check_partition(a), check_partition(b)
    if sum(a) != sum(b):
        raise ValueError("dominance compares partitions of equal size")
    total_a = total_b = 0
    for i in range(max(len(a), len(b))):
        total_a += part(a, i + 1)
        total_b += part(b, i + 1)
        if total_a < total_b:
            return False
    return True


def conjugate(p: Partition) -> Partition:
    p = check_partition(p)
    return tuple(sum(1 for x in p if x > i) for i in range(p[0])) if p else ()


# -- tableaux ---------------------------------------------------------------


def tableau_shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def is_standard(t: Tableau) -> bool:
    shape = tableau_shape(t)
    if not is_partition(shape) and shape != ():
        return False
    n = sum(shape)
    entries = [x for row in t for x in row]
    if sorted(entries) != list(range(1, n + 1)):
        return False
    for row in t:
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            return False
    for i in range(len(t) - 1):
        if any(t[i][j] >= t[i + 1][j] for j in range(len(t[i + 1]))):
            return False
    return True


@cache
def standard_tableaux(shape: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux of the shape, ordered by row reading word."""
    shape = check_partition(shape)
    n = sum(shape)
    results: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in shape]

    def place(k: int):
        if k > n:
            results.append(tuple(tuple(row) for row in rows))
            return
        for i, row in enumerate(rows):
            if len(row) >= shape[i]:
                continue
            j = len(row)
            if i > 0 and len(rows[i - 1]) <= j:
                continue
            row.append(k)
            place(k + 1)
            row.pop()

    place(1)
    return tuple(sorted(results, key=lambda t: tuple(x for row in t for x in row)))


def entry_positions(t: Tableau) -> dict[int, tuple[int, int]]:
    """Entry -> (row, column), 1-based."""
    return {
        t[i][j]: (i + 1, j + 1) for i in range(len(t)) for j in range(len(t[i]))
    }


def smallest_ascent(t: Tableau) -> int:
    """Smallest ascent of a standard tableau.

    An entry i is an ascent when i is the largest entry or i + 1 sits weakly
    north (and therefore east) of i.  The largest entry always qualifies, so
    nonempty tableaux always have one; the empty tableau returns 0.
    """
    n = sum(tableau_shape(t))
    if n == 0:
        return 0
    pos = entry_positions(t)
    for i in range(1, n):
        if pos[i + 1][0] <= pos[i][0]:
            return i
    return n


def is_desarrangement(t: Tableau) -> bool:
    """True iff the smallest ascent is even (vacuously for the empty tableau)."""
    return smallest_ascent(t) % 2 == 0


@cache
def desarrangement_count(shape: Partition) -> int:
    return sum(1 for t in standard_tableaux(shape) if is_desarrangement(t))


def multiset_arrangements(values) -> list[tuple[int, ...]]:
    """Distinct orderings of a multiset, each exactly once, sorted."""
    return sorted(set(permutations(values)))


@cache
def semistandard_tableaux(shape: Partition, content: tuple[int, ...]) -> tuple[Tableau, ...]:
    """Semistandard tableaux of the shape whose entry multiplicities are content.

    content[i] is the multiplicity of the letter i + 1; trailing zeros are
    allowed.  Deterministic order: lexicographic on row reading words.
    """
    shape = check_partition(shape)
    if any(c < 0 for c in content):
        raise ValueError("negative multiplicity")
    if sum(shape) != sum(content):
        raise ValueError("shape size and content size differ")
    n_letters = len(content)
    remaining = list(content)
    rows: list[list[int]] = [[] for _ in shape]
    results: list[Tableau] = []
    cells = [(i, j) for i in range(len(shape)) for j in range(shape[i])]

    def place(idx: int):
        if idx == len(cells):
            results.append(tuple(tuple(row) for row in rows))
            return
        i, j = cells[idx]
        lo = rows[i][j - 1] if j > 0 else 1
        for v in range(lo, n_letters + 1):
            if remaining[v - 1] == 0:
                continue
            if i > 0 and rows[i - 1][j] >= v:
                continue
            rows[i].append(v)
            remaining[v - 1] -= 1
            place(idx + 1)
            remaining[v - 1] += 1
            rows[i].pop()

    place(0)
    return tuple(results)


def kostka(shape: Partition, content) -> int:
    """Number of semistandard tableaux of the shape with the given content."""
    return len(semistandard_tableaux(check_partition(shape), tuple(content)))


def tableau_content(t: Tableau) -> tuple[int, ...]:
    entries = [x for row in t for x in row]
    top = max(entries) if entries else 0
    return tuple(entries.count(v) for v in range(1, top + 1))


# -- RSK correspondence ------------------------------------------------------


def rsk(word: Word) -> tuple[Tableau, Tableau]:
    """Insertion and recording tableaux of a word, by row insertion.

    Each letter is inserted into the first row, bumping the first entry
    strictly greater than it down to the next row; the recording tableau
    marks the order in which cells appear.
    """
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, letter in enumerate(word, start=1):
        value = letter
        row = 0
        while True:
            if row == len(p):
                p.append([value])
                q.append([step])
                break
            bump = next((j for j, x in enumerate(p[row]) if x > value), None)
            if bump is None:
                p[row].append(value)
                q[row].append(step)
                break
            p[row][bump], value = value, p[row][bump]
            row += 1
    return tuple(tuple(r) for r in p), tuple(tuple(r) for r in q)


def first_ascent(word: Word) -> int:
    """Smallest weak-ascent position; the final position always qualifies."""
    if not word:
        raise ValueError("empty word has no ascent")
    for i in range(len(word) - 1):
        if word[i] <= word[i + 1]:
            return i + 1
    return len(word)


def even_ascent_suffix(word: Word) -> Word:
    """Longest suffix whose first ascent is even (possibly the empty word)."""
    word = tuple(word)
    for start in range(len(word)):
        if first_ascent(word[start:]) % 2 == 0:
            return word[start:]
    return ()
