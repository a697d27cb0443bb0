"""
Rational Matrix and Subspace Models
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from app.utils.exceptions import DimensionMismatchError, ParseError

Rational = Fraction
Vector = Tuple[Fraction, ...]
RationalLike = Union[int, str, Fraction]

_RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')


def to_rational(value: RationalLike) -> Fraction:
    """Convert an int, Fraction or "p/q" string to an exact rational."""
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if not match:
            raise ParseError(f"not a rational: {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        if denominator == 0:
            raise ParseError(f"zero denominator in {value!r}")
        return Fraction(numerator, denominator)
    raise ParseError(f"not a rational: {value!r} (floats are not accepted)")


def format_rational(value: Fraction) -> str:
    """Serialize as "p/q", omitting q when it is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_vector(values: Iterable[RationalLike]) -> Vector:
    return tuple(to_rational(v) for v in values)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix over the rationals, row-major, immutable"""
    rows: int
    cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatchError(
                f"matrix entries do not match the declared shape {self.rows}x{self.cols}"
            )

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: int = None) -> 'RationalMatrix':
        entries = tuple(to_vector(r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def identity(cls, n: int) -> 'RationalMatrix':
        return cls(n, n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'RationalMatrix':
        return cls(rows, cols, tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]) -> 'RationalMatrix':
        diag = to_vector(values)
        n = len(diag)
        return cls(n, n, tuple(
            tuple(diag[i] if i == j else Fraction(0) for j in range(n)) for i in range(n)
        ))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], rows: int = None) -> 'RationalMatrix':
        if not columns:
            return cls(rows or 0, 0, tuple(() for _ in range(rows or 0)))
        return cls.from_rows(columns).transpose()

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def nonzero_count(self) -> int:
        return sum(1 for r in self.entries for x in r if x != 0)

    def to_lists(self) -> List[List[Fraction]]:
        return [list(r) for r in self.entries]

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def transpose(self) -> 'RationalMatrix':
        return RationalMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                              tuple(() for _ in range(self.cols)))

    def __matmul__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        other_cols = other.transpose().entries if other.rows else tuple(() for _ in range(other.cols))
        entries = tuple(
            tuple(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in other_cols)
            for r in self.entries
        )
        return RationalMatrix(self.rows, other.cols, entries)

    def __add__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)
        ))

    def __sub__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)
        ))

    def __neg__(self) -> 'RationalMatrix':
        return self.scale(-1)

    def scale(self, c: RationalLike) -> 'RationalMatrix':
        c = to_rational(c)
        return RationalMatrix(self.rows, self.cols, tuple(tuple(c * x for x in r) for r in self.entries))

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        """Matrix-vector product M v."""
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(vector)} for {self.shape} matrix")
        return tuple(sum((a * b for a, b in zip(r, vector) if a and b), Fraction(0)) for r in self.entries)

    def hstack(self, other: 'RationalMatrix') -> 'RationalMatrix':
        if self.rows != other.rows:
            raise DimensionMismatchError(f"cannot hstack {self.shape} and {other.shape}")
        return RationalMatrix(self.rows, self.cols + other.cols,
                              tuple(r + s for r, s in zip(self.entries, other.entries)))

    def vstack(self, other: 'RationalMatrix') -> 'RationalMatrix':
        if self.cols != other.cols:
            raise DimensionMismatchError(f"cannot vstack {self.shape} and {other.shape}")
        return RationalMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> 'RationalMatrix':
        return RationalMatrix(len(row_idx), len(col_idx),
                              tuple(tuple(self.entries[i][j] for j in col_idx) for i in row_idx))

    def columns_slice(self, start: int, stop: int) -> 'RationalMatrix':
        return self.submatrix(range(self.rows), range(start, stop))

    def _check_same_shape(self, other: 'RationalMatrix'):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape mismatch {self.shape} vs {other.shape}")

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_dict(self) -> List[List[str]]:
        return [[format_rational(x) for x in r] for r in self.entries]

    @classmethod
    def from_dict(cls, data) -> 'RationalMatrix':
        if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
            raise ParseError("matrix must be a JSON array of arrays")
        if data and len({len(r) for r in data}) != 1:
            raise ParseError("matrix rows have different lengths")
        return cls.from_rows(data)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(format_rational(x) for x in r) + "]" for r in self.entries) + "]"


@dataclass(frozen=True)
class Subspace:
    """
    Subspace of Q^ambient_dim stored by its reduced row echelon basis.

    Instances are built by LinAlgService.span (or the helpers that call it),
    which guarantees the canonical form; equality is then entry-wise.
    """
    ambient_dim: int
    basis: RationalMatrix

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> Tuple[Vector, ...]:
        return self.basis.entries

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x != 0) for r in self.basis.entries)

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def to_dict(self):
        return {'ambient_dim': self.ambient_dim, 'basis': self.basis.to_dict()}

    def __str__(self):
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim}, basis={self.basis})"
