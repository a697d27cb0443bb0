"""
Exact Linear Algebra Service
"""
import logging
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from app.models.matrix import RationalMatrix, Subspace, Vector, to_vector
from app.utils.exceptions import DimensionMismatchError, SingularMatrixError

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class LinAlgService:
    """Gaussian elimination, subspace algebra and Pluecker coordinates over Q"""

    # ------------------------------------------------------------------
    # Row reduction
    # ------------------------------------------------------------------

    @staticmethod
    def _rref_rows(rows: List[List[Fraction]], cols: int) -> Tuple[List[List[Fraction]], List[int]]:
        """In-place Gauss-Jordan on a list of rows; returns (rows, pivots)."""
        pivots = []
        r = 0
        for c in range(cols):
            if r == len(rows):
                break
            # first nonzero entry at or below row r in column c
            p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            lead = rows[r][c]
            if lead != 1:
                rows[r] = [x / lead for x in rows[r]]
            pivot_row = rows[r]
            for i in range(len(rows)):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [a - f * b if b else a for a, b in zip(rows[i], pivot_row)]
            pivots.append(c)
            r += 1
        return rows, pivots

    @staticmethod
    def rref(m: RationalMatrix) -> Tuple[RationalMatrix, List[int]]:
        """Reduced row echelon form and pivot columns; the row span is preserved."""
        rows, pivots = LinAlgService._rref_rows([list(r) for r in m.entries], m.cols)
        return RationalMatrix(m.rows, m.cols, tuple(tuple(r) for r in rows)), pivots

    @staticmethod
    def rank(m: RationalMatrix) -> int:
        return len(LinAlgService.rref(m)[1])

    # ------------------------------------------------------------------
    # Subspaces
    # ------------------------------------------------------------------

    @staticmethod
    def span(vectors: Sequence[Sequence[Fraction]], ambient_dim: int) -> Subspace:
        """Canonical subspace spanned by the given vectors."""
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(f"vector of length {len(v)} in Q^{ambient_dim}")
        rows, pivots = LinAlgService._rref_rows([list(to_vector(v)) for v in vectors], ambient_dim)
        basis = tuple(tuple(r) for r in rows[:len(pivots)])
        return Subspace(ambient_dim, RationalMatrix(len(basis), ambient_dim, basis))

    @staticmethod
    def zero_subspace(ambient_dim: int) -> Subspace:
        return Subspace(ambient_dim, RationalMatrix(0, ambient_dim, ()))

    @staticmethod
    def full_subspace(ambient_dim: int) -> Subspace:
        return Subspace(ambient_dim, RationalMatrix.identity(ambient_dim))

    @staticmethod
    def coordinate_subspace(ambient_dim: int, indices: Sequence[int]) -> Subspace:
        vectors = [tuple(ONE if j == i else ZERO for j in range(ambient_dim)) for i in indices]
        return LinAlgService.span(vectors, ambient_dim)

    @staticmethod
    def row_space(m: RationalMatrix) -> Subspace:
        return LinAlgService.span(m.entries, m.cols)

    @staticmethod
    def column_space(m: RationalMatrix) -> Subspace:
        return LinAlgService.span(m.transpose().entries, m.rows)

    @staticmethod
    def kernel(m: RationalMatrix) -> Subspace:
        """{v : m v = 0} in canonical form; dim = cols - rank."""
        reduced, pivots = LinAlgService.rref(m)
        free = [c for c in range(m.cols) if c not in pivots]
        vectors = []
        for f in free:
            v = [ZERO] * m.cols
            v[f] = ONE
            for i, p in enumerate(pivots):
                v[p] = -reduced[i, f]
            vectors.append(v)
        return LinAlgService.span(vectors, m.cols)

    @staticmethod
    def left_kernel_vectors(m: RationalMatrix) -> Tuple[Vector, ...]:
        """Basis of {x : x m = 0}."""
        return LinAlgService.kernel(m.transpose()).vectors

    @staticmethod
    def reduce(s: Subspace, v: Sequence[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
        """Reduce v against the RREF basis: returns (residual, coordinates)."""
        residual = list(v)
        coords = []
        for row, p in zip(s.vectors, s.pivots):
            c = residual[p]
            coords.append(c)
            if c:
                residual = [a - c * b if b else a for a, b in zip(residual, row)]
        return residual, coords

    @staticmethod
    def contains(s: Subspace, v: Sequence[Fraction]) -> bool:
        if len(v) != s.ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)} in Q^{s.ambient_dim}")
        residual, _ = LinAlgService.reduce(s, v)
        return all(x == 0 for x in residual)

    @staticmethod
    def coordinates(s: Subspace, v: Sequence[Fraction]) -> Optional[Vector]:
        """Coordinates of v in the RREF basis of s, or None if v is not in s."""
        residual, coords = LinAlgService.reduce(s, v)
        if any(x != 0 for x in residual):
            return None
        return tuple(coords)

    @staticmethod
    def is_subspace(a: Subspace, b: Subspace) -> bool:
        """a is contained in b"""
        LinAlgService._check_ambient(a, b)
        return all(LinAlgService.contains(b, v) for v in a.vectors)

    @staticmethod
    def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
        LinAlgService._check_ambient(a, b)
        return LinAlgService.span(a.vectors + b.vectors, a.ambient_dim)

    @staticmethod
    def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
        """Intersection via the kernel of the stacked system s A - t B = 0."""
        LinAlgService._check_ambient(a, b)
        if a.is_zero() or b.is_zero():
            return LinAlgService.zero_subspace(a.ambient_dim)
        stacked = RationalMatrix(
            a.dim + b.dim, a.ambient_dim,
            a.vectors + tuple(tuple(-x for x in v) for v in b.vectors),
        )
        vectors = []
        for coeffs in LinAlgService.left_kernel_vectors(stacked):
            vectors.append(LinAlgService.combine(coeffs[:a.dim], a.vectors, a.ambient_dim))
        return LinAlgService.span(vectors, a.ambient_dim)

    @staticmethod
    def extend_basis(base: Sequence[Sequence[Fraction]], ambient_dim: int,
                     candidates: Sequence[Sequence[Fraction]] = None) -> List[Vector]:
        """Candidates (default: standard basis) that extend `base` to a basis of their joint span."""
        if candidates is None:
            candidates = [tuple(ONE if j == i else ZERO for j in range(ambient_dim)) for i in range(ambient_dim)]
        current = LinAlgService.span(base, ambient_dim)
        added = []
        for v in candidates:
            if not LinAlgService.contains(current, v):
                added.append(tuple(v))
                current = LinAlgService.span(current.vectors + (tuple(v),), ambient_dim)
        return added

    @staticmethod
    def combine(coeffs: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], length: int) -> Vector:
        out = [ZERO] * length
        for c, v in zip(coeffs, vectors):
            if c:
                out = [a + c * b if b else a for a, b in zip(out, v)]
        return tuple(out)

    @staticmethod
    def _check_ambient(a: Subspace, b: Subspace):
        if a.ambient_dim != b.ambient_dim:
            raise DimensionMismatchError(f"ambient mismatch Q^{a.ambient_dim} vs Q^{b.ambient_dim}")

    # ------------------------------------------------------------------
    # Square matrices
    # ------------------------------------------------------------------

    @staticmethod
    def determinant(m: RationalMatrix) -> Fraction:
        if not m.is_square:
            raise DimensionMismatchError(f"determinant of non-square {m.shape} matrix")
        rows = [list(r) for r in m.entries]
        n = m.rows
        det = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if rows[i][c] != 0), None)
            if p is None:
                return ZERO
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                det = -det
            lead = rows[c][c]
            det *= lead
            for i in range(c + 1, n):
                if rows[i][c] != 0:
                    f = rows[i][c] / lead
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return det

    @staticmethod
    def is_invertible(m: RationalMatrix) -> bool:
        return m.is_square and LinAlgService.determinant(m) != 0

    @staticmethod
    def inverse(m: RationalMatrix) -> RationalMatrix:
        if not m.is_square:
            raise SingularMatrixError(f"non-square {m.shape} matrix has no inverse")
        n = m.rows
        augmented = m.hstack(RationalMatrix.identity(n))
        reduced, pivots = LinAlgService.rref(augmented)
        if pivots[:n] != list(range(n)):
            raise SingularMatrixError("matrix is not invertible")
        return reduced.columns_slice(n, 2 * n)

    @staticmethod
    def solve_left(m: RationalMatrix, b: Sequence[Fraction]) -> Optional[Vector]:
        """A particular x with x m = b (free variables set to 0), or None."""
        if len(b) != m.cols:
            raise DimensionMismatchError(f"right-hand side of length {len(b)} for {m.shape} matrix")
        system = m.transpose().hstack(RationalMatrix(m.cols, 1, tuple((x,) for x in b)))
        reduced, pivots = LinAlgService.rref(system)
        if m.rows in pivots:
            return None
        x = [ZERO] * m.rows
        for i, p in enumerate(pivots):
            x[p] = reduced[i, m.rows]
        return tuple(x)

    @staticmethod
    def minor(m: RationalMatrix, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
        return LinAlgService.determinant(m.submatrix(rows, cols))

    # ------------------------------------------------------------------
    # Pluecker coordinates
    # ------------------------------------------------------------------

    @staticmethod
    def normalize_projective(values: Sequence[Fraction]) -> Vector:
        """Scale so the first nonzero coordinate is 1 (zero vectors unchanged)."""
        lead = next((x for x in values if x != 0), None)
        if lead is None or lead == 1:
            return tuple(values)
        return tuple(x / lead for x in values)

    @staticmethod
    def pluecker(s: Subspace) -> Vector:
        """All k x k minors of the basis in lexicographic column-set order, normalized."""
        k = s.dim
        if k == 0:
            return (ONE,)
        minors = [
            LinAlgService.minor(s.basis, range(k), cols)
            for cols in combinations(range(s.ambient_dim), k)
        ]
        return LinAlgService.normalize_projective(minors)

    @staticmethod
    def proportionality(a: Sequence[Fraction], b: Sequence[Fraction]) -> Optional[Fraction]:
        """The c with b = c a, or None. Both zero gives 1; exactly one zero gives None."""
        if len(a) != len(b):
            raise DimensionMismatchError("proportionality of vectors of different lengths")
        i = next((i for i, x in enumerate(a) if x != 0), None)
        if i is None:
            return ONE if all(y == 0 for y in b) else None
        c = b[i] / a[i]
        if c == 0:
            return None
        if all(y == c * x for x, y in zip(a, b)):
            return c
        return None
