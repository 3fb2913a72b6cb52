"""Exact rational matrices and Gaussian elimination over Fraction.

Everything here is tolerance-free: entries are `fractions.Fraction`, pivots
are exact, and rank/determinant/inverse answers are algebraic facts rather
than numerical estimates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, SingularMatrix

Rational = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to an exact rational")


class RationalMatrix:
    """Immutable square matrix with exact rational entries (0-based access)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        table = tuple(tuple(_frac(x) for x in row) for row in rows)
        n = len(table)
        if n == 0:
            raise DimensionMismatch("matrix must have at least one row")
        for row in table:
            if len(row) != n:
                raise DimensionMismatch(f"expected square matrix, got row of length {len(row)} in dimension {n}")
        object.__setattr__(self, "rows", table)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "RationalMatrix":
        return cls([[Fraction(0)] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "RationalMatrix":
        n = len(entries)
        return cls([[_frac(entries[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "RationalMatrix":
        """Matrix with a single 1 at 0-based position (i, j)."""
        return cls([[Fraction(int((r, c) == (i, j))) for c in range(n)] for r in range(n)])

    def __getitem__(self, idx):
        return self.rows[idx]

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"RationalMatrix[{body}]"

    def _check_same_dim(self, other: "RationalMatrix"):
        if self.n != other.n:
            raise DimensionMismatch(f"dimensions {self.n} and {other.n} differ")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_dim(other)
        return RationalMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_dim(other)
        return RationalMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([[-a for a in row] for row in self.rows])

    def scale(self, c) -> "RationalMatrix":
        c = _frac(c)
        return RationalMatrix([[c * a for a in row] for row in self.rows])

    def __mul__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_dim(other)
        n = self.n
        cols = tuple(zip(*other.rows))
        return RationalMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.rows)))

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.n)), Fraction(0))

    def commutator(self, other: "RationalMatrix") -> "RationalMatrix":
        return self * other - other * self

    def vectorize(self) -> tuple:
        """Row-major flattening, used for span and rank computations."""
        return tuple(x for row in self.rows for x in row)

    @classmethod
    def from_vector(cls, vec: Sequence, n: int) -> "RationalMatrix":
        if len(vec) != n * n:
            raise DimensionMismatch(f"vector of length {len(vec)} is not {n}x{n}")
        return cls([vec[i * n : (i + 1) * n] for i in range(n)])

    def det(self) -> Fraction:
        """Exact determinant by elimination with row pivoting."""
        n = self.n
        work = [list(row) for row in self.rows]
        sign = 1
        result = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                sign = -sign
            pv = work[col][col]
            result *= pv
            for r in range(col + 1, n):
                if work[r][col] != 0:
                    factor = work[r][col] / pv
                    work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return sign * result

    def inverse(self) -> "RationalMatrix":
        """Exact inverse via Gauss-Jordan on the augmented system."""
        n = self.n
        work = [list(row) for row in self.rows]
        aug = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                raise SingularMatrix("matrix is not invertible")
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                aug[col], aug[pivot] = aug[pivot], aug[col]
            pv = work[col][col]
            work[col] = [a / pv for a in work[col]]
            aug[col] = [a / pv for a in aug[col]]
            for r in range(n):
                if r != col and work[r][col] != 0:
                    f = work[r][col]
                    work[r] = [a - f * b for a, b in zip(work[r], work[col])]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return RationalMatrix(aug)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)


def rref(vectors: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a list of equal-length rational vectors.

    Returns (reduced nonzero rows, pivot column indices).
    """
    rows = [list(map(_frac, v)) for v in vectors]
    if not rows:
        return [], []
    width = len(rows[0])
    for r in rows:
        if len(r) != width:
            raise DimensionMismatch("vectors of unequal length")
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for row in rows:
        row = _reduce_against(row, basis, pivots)
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is None:
            continue
        row = [x / row[lead] for x in row]
        for b in basis:
            if b[lead] != 0:
                f = b[lead]
                for j in range(width):
                    b[j] -= f * row[j]
        # keep basis ordered by pivot column
        pos = next((k for k, p in enumerate(pivots) if p > lead), len(pivots))
        basis.insert(pos, row)
        pivots.insert(pos, lead)
    return basis, pivots


def _reduce_against(row: list[Fraction], basis: list[list[Fraction]], pivots: list[int]) -> list[Fraction]:
    row = list(row)
    for b, p in zip(basis, pivots):
        if row[p] != 0:
            f = row[p]
            for j in range(len(row)):
                row[j] -= f * b[j]
    return row


def rank(vectors: Iterable[Sequence]) -> int:
    basis, _ = rref(vectors)
    return len(basis)


def in_row_space(vec: Sequence, basis: list[list[Fraction]], pivots: list[int]) -> bool:
    """Membership test against an rref basis produced by `rref`."""
    residue = _reduce_against([_frac(x) for x in vec], basis, pivots)
    return all(x == 0 for x in residue)


def null_space(rows: Iterable[Sequence], width: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : A x = 0} for the matrix with the given rows.

    `width` must be supplied when `rows` may be empty (no constraints:
    the kernel is the full space).
    """
    rows = [list(r) for r in rows]
    if rows:
        width = len(rows[0])
    elif width is None:
        raise DimensionMismatch("need at least one row or an explicit width")
    basis, pivots = rref(rows)
    pivot_set = set(pivots)
    out = []
    for f in range(width):
        if f in pivot_set:
            continue
        vec = [Fraction(0)] * width
        vec[f] = Fraction(1)
        for b, p in zip(basis, pivots):
            vec[p] = -b[f]
        out.append(vec)
    return out


def parse_fraction(token: str) -> Fraction:
    """Parse an exact fraction token such as '3', '-5/7'."""
    return Fraction(token.strip())


def parse_matrix_text(text: str) -> RationalMatrix:
    """Parse whitespace/newline separated fraction entries into a square matrix."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([parse_fraction(tok) for tok in line.split()])
    if not rows:
        raise DimensionMismatch("matrix text contains no rows")
    return RationalMatrix(rows)
