"""
Laurent Polynomial and Meromorphic Family Models
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from app.models.matrix import RationalMatrix, format_rational, to_rational
from app.utils.exceptions import DimensionMismatchError, ParseError, ValidationError

INFINITY = math.inf

Scalar = Union[int, Fraction]


class LaurentPoly:
    """
    Finite Laurent polynomial in z over Q, stored as {exponent: coefficient}.

    Zero coefficients are never stored; instances are treated as immutable.
    """
    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Dict[int, Scalar] = None):
        self.coeffs: Dict[int, Fraction] = {
            int(e): Fraction(c) for e, c in (coeffs or {}).items() if c != 0
        }

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls) -> 'LaurentPoly':
        return cls()

    @classmethod
    def one(cls) -> 'LaurentPoly':
        return cls({0: 1})

    @classmethod
    def constant(cls, c: Scalar) -> 'LaurentPoly':
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, c: Scalar = 1) -> 'LaurentPoly':
        return cls({exponent: c})

    @classmethod
    def from_pairs(cls, pairs) -> 'LaurentPoly':
        """Parse [[exponent, "p/q"], ...]; repeated exponents are summed."""
        if not isinstance(pairs, list):
            raise ParseError("Laurent entry must be a list of [exponent, coefficient] pairs")
        coeffs: Dict[int, Fraction] = {}
        for pair in pairs:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise ParseError(f"bad Laurent term {pair!r}")
            exponent, coefficient = pair
            if isinstance(exponent, bool) or not isinstance(exponent, int):
                raise ParseError(f"Laurent exponent must be an integer: {exponent!r}")
            coeffs[exponent] = coeffs.get(exponent, Fraction(0)) + to_rational(coefficient)
        return cls(coeffs)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self):
        """Lowest exponent; INFINITY for the zero polynomial."""
        return min(self.coeffs) if self.coeffs else INFINITY

    @property
    def degree(self):
        return max(self.coeffs) if self.coeffs else -INFINITY

    def coefficient(self, exponent: int) -> Fraction:
        return self.coeffs.get(exponent, Fraction(0))

    def leading_coefficient(self) -> Fraction:
        """Coefficient at the valuation."""
        return self.coeffs[self.valuation]

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> 'LaurentPoly':
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) != 1:
                raise ValidationError("only monomials have Laurent polynomial inverses")
            (e, c), = self.coeffs.items()
            return LaurentPoly({e * k: c ** k})
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> 'LaurentPoly':
        """Multiply by z^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def truncate(self, order: int) -> 'LaurentPoly':
        """Drop every term of exponent >= order."""
        return LaurentPoly({e: c for e, c in self.coeffs.items() if e < order})

    def inverse_series(self, precision: int) -> 'LaurentPoly':
        """Power series inverse of a unit (valuation 0) modulo z^precision."""
        if self.valuation != 0:
            raise ValidationError("series inverse needs a unit of valuation 0")
        c0 = self.coeffs[0]
        inverse = [Fraction(0)] * precision
        if precision:
            inverse[0] = 1 / c0
        for i in range(1, precision):
            acc = sum((self.coeffs.get(j, 0) * inverse[i - j] for j in range(1, i + 1)), Fraction(0))
            inverse[i] = -acc / c0
        return LaurentPoly(dict(enumerate(inverse)))

    def scale_variable(self, c: Fraction) -> 'LaurentPoly':
        """Substitute z -> c z."""
        return LaurentPoly({e: v * c ** e for e, v in self.coeffs.items()})

    def power_substitute(self, p: int) -> 'LaurentPoly':
        """Substitute z -> z^p."""
        return LaurentPoly({e * p: v for e, v in self.coeffs.items()})

    # ------------------------------------------------------------------
    # Identity and serialization
    # ------------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def to_pairs(self) -> List[list]:
        return [[e, format_rational(c)] for e, c in sorted(self.coeffs.items())]

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items()):
            coefficient = format_rational(c)
            if e == 0:
                parts.append(coefficient)
            else:
                power = "z" if e == 1 else f"z^{e}"
                parts.append(power if c == 1 else f"{coefficient}*{power}")
        return " + ".join(parts)


def ring_determinant(entries: Sequence[Sequence], zero, one):
    """
    Determinant over any commutative ring by expansion along rows with
    memoized column subsets; entries may be Fractions or LaurentPolys.
    """
    k = len(entries)
    if k == 0:
        return one
    memo: Dict[Tuple[int, int], object] = {}

    def expand(row: int, mask: int):
        if row == k:
            return one
        key = (row, mask)
        if key in memo:
            return memo[key]
        total = zero
        position = 0
        for c in range(k):
            if mask >> c & 1:
                continue
            a = entries[row][c]
            if a:
                term = a * expand(row + 1, mask | (1 << c))
                total = total - term if position % 2 else total + term
            position += 1
        memo[key] = total
        return total

    return expand(0, 0)


@dataclass(frozen=True)
class LaurentMatrix:
    """Matrix of Laurent polynomials; square ones are meromorphic family germs."""
    rows: int
    cols: int
    entries: Tuple[Tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatchError(f"Laurent entries do not match the shape {self.rows}x{self.cols}")

    @property
    def n(self) -> int:
        if self.rows != self.cols:
            raise DimensionMismatchError(f"{self.rows}x{self.cols} Laurent matrix is not square")
        return self.rows

    def __getitem__(self, index: Tuple[int, int]) -> LaurentPoly:
        i, j = index
        return self.entries[i][j]

    @classmethod
    def from_rational(cls, m: RationalMatrix) -> 'LaurentMatrix':
        return cls(m.rows, m.cols, tuple(tuple(LaurentPoly.constant(x) for x in r) for r in m.entries))

    @classmethod
    def identity(cls, n: int) -> 'LaurentMatrix':
        return cls.from_rational(RationalMatrix.identity(n))

    @classmethod
    def diagonal_monomials(cls, exponents: Sequence[int]) -> 'LaurentMatrix':
        """diag(z^e_1, ..., z^e_n)"""
        n = len(exponents)
        return cls(n, n, tuple(
            tuple(LaurentPoly.monomial(exponents[i]) if i == j else LaurentPoly.zero() for j in range(n))
            for i in range(n)
        ))

    def nonzero_entries(self):
        return [p for r in self.entries for p in r if not p.is_zero()]

    def min_exponent(self) -> int:
        entries = self.nonzero_entries()
        return min(p.valuation for p in entries) if entries else 0

    def max_exponent(self) -> int:
        entries = self.nonzero_entries()
        return max(p.degree for p in entries) if entries else 0

    def coefficient_matrix(self, exponent: int) -> RationalMatrix:
        """Rational matrix of the z^exponent coefficients."""
        return RationalMatrix(self.rows, self.cols, tuple(
            tuple(p.coefficient(exponent) for p in r) for r in self.entries
        ))

    def map_entries(self, fn) -> 'LaurentMatrix':
        return LaurentMatrix(self.rows, self.cols, tuple(tuple(fn(p) for p in r) for r in self.entries))

    def __matmul__(self, other: 'LaurentMatrix') -> 'LaurentMatrix':
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        entries = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = LaurentPoly.zero()
                for t in range(self.cols):
                    a, b = self.entries[i][t], other.entries[t][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            entries.append(tuple(row))
        return LaurentMatrix(self.rows, other.cols, tuple(entries))

    def determinant(self) -> LaurentPoly:
        return ring_determinant(self.entries, LaurentPoly.zero(), LaurentPoly.one())

    def to_dict(self):
        return {
            'n': self.rows if self.rows == self.cols else None,
            'entries': [[p.to_pairs() for p in r] for r in self.entries],
        }

    @classmethod
    def from_dict(cls, data) -> 'LaurentMatrix':
        if not isinstance(data, dict) or 'entries' not in data:
            raise ParseError("Laurent matrix must be an object with entries")
        rows = data['entries']
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise ParseError("Laurent matrix entries must be a list of rows")
        n = data.get('n', len(rows))
        if n != len(rows) or any(len(r) != n for r in rows):
            raise ParseError(f"Laurent matrix must be {n}x{n}")
        return cls(n, n, tuple(tuple(LaurentPoly.from_pairs(p) for p in r) for r in rows))

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(p) for p in r) + "]" for r in self.entries) + "]"


@dataclass(frozen=True)
class ExponentData:
    """Exponents m_1 >= ... >= m_n, distinct values k_1 > ... > k_t and multiplicities alpha"""
    m: Tuple[int, ...]
    k: Tuple[int, ...]
    alpha: Tuple[int, ...]

    @classmethod
    def from_m(cls, m: Sequence[int]) -> 'ExponentData':
        m = tuple(m)
        if any(a < b for a, b in zip(m, m[1:])):
            raise ValidationError(f"exponents must be non-increasing: {m}")
        k, alpha = [], []
        for value in m:
            if k and k[-1] == value:
                alpha[-1] += 1
            else:
                k.append(value)
                alpha.append(1)
        return cls(m, tuple(k), tuple(alpha))

    @property
    def n(self) -> int:
        return len(self.m)

    def partial_sum(self, j: int) -> int:
        """m_1 + ... + m_j"""
        return sum(self.m[:j])

    def to_dict(self):
        return {'m': list(self.m), 'k': list(self.k), 'alpha': list(self.alpha)}


@dataclass(frozen=True)
class Factorization:
    """
    gamma = a diag(z^-m) b with a, b power series jets invertible at 0.

    `precision` is the jet order used for elimination; the reassembly is
    exact modulo z^valid_order after multiplying gamma by z^m_1.
    """
    a: LaurentMatrix
    b: LaurentMatrix
    m: Tuple[int, ...]
    precision: int
    valid_order: int

    def a0(self) -> RationalMatrix:
        return self.a.coefficient_matrix(0)

    def b0(self) -> RationalMatrix:
        return self.b.coefficient_matrix(0)

    def to_dict(self):
        return {
            'm': list(self.m),
            'precision': self.precision,
            'valid_order': self.valid_order,
            'a0': self.a0().to_dict(),
            'b0': self.b0().to_dict(),
            'a': self.a.to_dict()['entries'],
            'b': self.b.to_dict()['entries'],
        }
