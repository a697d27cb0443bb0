"""
Builders and independent oracles shared by the tests
"""
from fractions import Fraction
from itertools import combinations_with_replacement

import sympy

from app.models.laurent import LaurentMatrix, LaurentPoly
from app.models.matrix import RationalMatrix


def laurent(entries) -> LaurentMatrix:
    """Build a curve from rows of {exponent: coefficient} dicts."""
    rows = tuple(tuple(LaurentPoly(dict(e)) for e in row) for row in entries)
    return LaurentMatrix(len(rows), len(rows), rows)


def to_sympy(m: RationalMatrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.numerator, x.denominator) for r in m.entries for x in r])


def from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def count_tableaux(shape, n: int) -> int:
    """Semistandard Young tableaux of the given shape with entries in 1..n, filled row by row."""
    shape = [length for length in shape if length]

    def fill(r, above):
        if r == len(shape):
            return 1
        total = 0
        for row in combinations_with_replacement(range(1, n + 1), shape[r]):
            if above is None or all(x > y for x, y in zip(row, above)):
                total += fill(r + 1, row)
        return total

    return fill(0, None)
