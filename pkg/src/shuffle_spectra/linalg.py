"""Exact rational linear algebra.

Dense matrices over the rationals with exact nullspaces, ranks, linear solves
and integer characteristic polynomials.  This is the brute-force oracle that
everything else in the package is checked against, so every operation is
deterministic: equal inputs give bit-identical outputs.

Ranks use fraction-free (Bareiss) elimination on an integerized copy of the
matrix, which keeps intermediate entries polynomially sized.  Characteristic
polynomials are computed modulo a batch of word-sized primes (Hessenberg
reduction followed by the standard minor recurrence) and recombined by CRT
under a rigorous coefficient bound, so the result is exact even for the
factorial-sized matrices this package produces.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Rational = Fraction
Vector = tuple[Fraction, ...]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")


class IntPolynomial:
    """Integer polynomial; coefficients stored lowest degree first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int]):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial having degree -1."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(out)

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def from_integer_roots(cls, roots: dict[int, int]) -> "IntPolynomial":
        """Monic product of (x - r)^multiplicity over the given root map."""
        poly = cls.one()
        for root, mult in roots.items():
            factor = cls((-root, 1))
            for _ in range(mult):
                poly = poly * factor
        return poly

    def integer_roots(self, bound: int) -> tuple[dict[int, int], "IntPolynomial"]:
        """All integer roots in [-bound, bound] with multiplicities.

        Returns the root->multiplicity map together with the rootless
        cofactor.  Callers supply a bound that provably covers every root
        (e.g. a Gershgorin bound for a characteristic polynomial); the
        cofactor is constant exactly when the polynomial splits over the
        integers within that bound.
        """
        if self.is_zero():
            raise ValueError("the zero polynomial has every root")
        roots: dict[int, int] = {}
        poly = list(self.coefficients)

        def divide_out(r: int) -> bool:
            # synthetic division by (x - r); succeeds iff r is a root
            out = [0] * (len(poly) - 1)
            carry = 0
            for i in range(len(poly) - 1, 0, -1):
                carry = poly[i] + carry * r if i < len(poly) - 1 else poly[i]
                out[i - 1] = carry
            if poly[0] + carry * r != 0:
                return False
            poly[:] = out
            return True

        for r in range(-bound, bound + 1):
            if len(poly) == 1:
                break
            value = 0
            for c in reversed(poly):
                value = value * r + c
            while value == 0 and len(poly) > 1:
                if not divide_out(r):
                    break
                roots[r] = roots.get(r, 0) + 1
                value = 0
                for c in reversed(poly):
                    value = value * r + c
                if value != 0:
                    break
        return roots, IntPolynomial(poly)

    def __repr__(self) -> str:
        if self.is_zero():
            return "IntPolynomial(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            term = "x" if i == 1 else f"x^{i}" if i else ""
            mag = "" if (abs(c) == 1 and i) else str(abs(c))
            parts.append(("-" if c < 0 else "+") + mag + term)
        text = " ".join(parts).lstrip("+")
        return f"IntPolynomial({text.strip()})"


class ExactMatrix:
    """Dense, immutable matrix over exact rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence]):
        rows = tuple(tuple(_as_fraction(x) for x in row) for row in data)
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(row) != self.cols for row in rows):
            raise ValueError("ragged rows")
        self.data = rows

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "ExactMatrix":
        cols = [tuple(col) for col in columns]
        if not cols:
            return cls.zeros(0, 0)
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))])

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols})"

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(self.data[i][j] for i in range(self.rows))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def scale(self, s) -> "ExactMatrix":
        s = _as_fraction(s)
        return ExactMatrix([[x * s for x in row] for row in self.data])

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-1)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = other.transpose().data
        return ExactMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.data]
        )

    def multiply_vector(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        vec = [_as_fraction(x) for x in v]
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.data)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def to_int_rows(self) -> list[list[int]]:
        """Entries as plain ints; raises if any entry is non-integral."""
        out = []
        for row in self.data:
            ints = []
            for x in row:
                if x.denominator != 1:
                    raise ValueError(f"non-integral entry {x}")
                ints.append(x.numerator)
            out.append(ints)
        return out

    def eigenvalue_bound(self) -> int:
        """Integer Gershgorin bound: every eigenvalue has |z| <= bound."""
        if self.rows == 0:
            return 0
        return max(math.ceil(sum(abs(x) for x in row)) for row in self.data)

    # -- elimination ------------------------------------------------------

    def _integerized_rows(self) -> list[list[int]]:
        # row scaling by positive integers preserves rank
        out = []
        for row in self.data:
            scale = math.lcm(*(x.denominator for x in row)) if row else 1
            out.append([int(x * scale) for x in row])
        return out

    def rank(self) -> int:
        """Exact rank over the rationals, by fraction-free elimination."""
        m = self._integerized_rows()
        n_rows, n_cols = self.rows, self.cols
        rank = 0
        prev = 1
        for col in range(n_cols):
            pivot_row = next((r for r in range(rank, n_rows) if m[r][col]), None)
            if pivot_row is None:
                continue
            if pivot_row != rank:
                m[rank], m[pivot_row] = m[pivot_row], m[rank]
            pivot = m[rank][col]
            for r in range(rank + 1, n_rows):
                factor = m[r][col]
                for c in range(col, n_cols):
                    m[r][c] = (m[r][c] * pivot - factor * m[rank][c]) // prev
            prev = pivot
            rank += 1
            if rank == n_rows:
                break
        return rank

    def _rref(self, augment: Sequence[Vector] = ()) -> tuple[list[list[Fraction]], list[int]]:
        """Reduced row echelon form, optionally carrying extra columns."""
        width = self.cols + len(augment)
        m = [
            list(self.data[i]) + [aug[i] for aug in augment]
            for i in range(self.rows)
        ]
        pivots: list[int] = []
        row = 0
        for col in range(self.cols):
            pivot_row = next((r for r in range(row, len(m)) if m[r][col]), None)
            if pivot_row is None:
                continue
            m[row], m[pivot_row] = m[pivot_row], m[row]
            inv = 1 / m[row][col]
            m[row] = [x * inv for x in m[row]]
            for r in range(len(m)):
                if r != row and m[r][col]:
                    factor = m[r][col]
                    m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
            pivots.append(col)
            row += 1
            if row == len(m):
                break
        del width
        return m, pivots

    def nullspace(self) -> tuple[Vector, ...]:
        """Basis of the right kernel, in reduced normal form.

        Each free column yields one basis vector carrying 1 in that column
        and zeros in every other free column, so the output is unique for a
        given matrix and usable in golden-file comparisons.
        """
        rref, pivots = self._rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for r, c in enumerate(pivots):
                v[c] = -rref[r][f]
            basis.append(tuple(v))
        return tuple(basis)

    def solve(self, b: Sequence) -> Vector | None:
        """Some x with self @ x = b, or None when the system is inconsistent.

        Free variables are pinned to zero, so the answer is deterministic.
        """
        if len(b) != self.rows:
            raise ValueError("right-hand side has the wrong length")
        rhs = tuple(_as_fraction(x) for x in b)
        rref, pivots = self._rref(augment=(rhs,))
        rank = len(pivots)
        for r in range(rank, self.rows):
            if rref[r][self.cols] != 0:
                return None
        x = [Fraction(0)] * self.cols
        for r, c in enumerate(pivots):
            x[c] = rref[r][self.cols]
        return tuple(x)

    # -- characteristic polynomial ----------------------------------------

    def charpoly(self) -> IntPolynomial:
        """Characteristic polynomial det(xI - M) of an integer matrix.

        Requires a square matrix with integral entries; scale denominators
        away first.
        """
        if self.rows != self.cols:
            raise ValueError("characteristic polynomial of a non-square matrix")
        entries = self.to_int_rows()
        return IntPolynomial(_charpoly_int(entries))


# -- modular characteristic polynomial internals ---------------------------

# Primes are capped so that a dot product of length <= _MAX_DIM of products of
# two residues stays inside int64.
_PRIME_CAP = 1 << 26
_MAX_DIM = (1 << 63) // (_PRIME_CAP * _PRIME_CAP)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_stream():
    p = _PRIME_CAP - 1
    while p > 2:
        if _is_prime(p):
            yield p
        p -= 2


def _charpoly_int(a: list[list[int]]) -> tuple[int, ...]:
    n = len(a)
    if n == 0:
        return (1,)
    if n > _MAX_DIM:
        raise ValueError(f"matrix too large for modular charpoly ({n} > {_MAX_DIM})")
    radius = max(sum(abs(x) for x in row) for row in a)
    # every eigenvalue z has |z| <= radius, so the coefficient of x^(n-k)
    # is bounded by C(n,k) * radius^k
    bound = max(math.comb(n, k) * radius**k for k in range(n + 1))
    target = 2 * bound + 1

    if max(abs(x) for row in a for x in row) < (1 << 62):
        arr = np.array(a, dtype=np.int64)
    else:
        arr = np.array(a, dtype=object)
    modulus = 1
    combined = [0] * (n + 1)
    for p in _prime_stream():
        residues = _charpoly_mod(arr, p)
        if modulus == 1:
            combined = [int(r) for r in residues]
        else:
            inv = pow(modulus % p, p - 2, p)
            for i in range(n + 1):
                delta = (int(residues[i]) - combined[i]) % p
                combined[i] += modulus * ((delta * inv) % p)
        modulus *= p
        if modulus >= target:
            break
    half = modulus // 2
    return tuple(c - modulus if c > half else c for c in combined)


def _charpoly_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Characteristic polynomial mod p, lowest degree first.

    Reduction commutes with taking the characteristic polynomial, so no
    prime is ever "unlucky" here.
    """
    n = a.shape[0]
    h = (a % p).astype(np.int64)
    # similarity reduction to upper Hessenberg form
    for k in range(n - 2):
        col = h[k + 1 :, k]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = int(nz[0]) + k + 1
        if piv != k + 1:
            h[[k + 1, piv], :] = h[[piv, k + 1], :]
            h[:, [k + 1, piv]] = h[:, [piv, k + 1]]
        inv = pow(int(h[k + 1, k]), p - 2, p)
        mult = (h[k + 2 :, k] * inv) % p
        h[k + 2 :, :] = (h[k + 2 :, :] - mult[:, None] * h[k + 1, :]) % p
        h[:, k + 1] = (h[:, k + 1] + h[:, k + 2 :] @ mult) % p
    # minor recurrence on the Hessenberg form; polys[k] holds the
    # characteristic polynomial of the leading k x k block
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    prods = np.zeros(0, dtype=np.int64)  # prods[i] = h[i+1,i] * ... * h[k-1,k-2]
    for k in range(1, n + 1):
        if k >= 2:
            s = int(h[k - 1, k - 2])
            prods = np.concatenate([(prods * s) % p, np.array([s], dtype=np.int64)])
        hkk = int(h[k - 1, k - 1])
        new = np.zeros(n + 1, dtype=np.int64)
        new[1 : k + 1] = polys[k - 1, 0:k]
        new[0:k] = (new[0:k] - hkk * polys[k - 1, 0:k]) % p
        if k >= 2:
            weights = (h[0 : k - 1, k - 1] * prods[: k - 1]) % p
            new[0:k] = (new[0:k] - weights @ polys[0 : k - 1, 0:k]) % p
        polys[k, :] = new % p
    return polys[n, :]
