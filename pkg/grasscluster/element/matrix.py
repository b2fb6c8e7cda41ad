# --------------------------------------------------
# Exact rational matrices, determinants and Plücker coordinates.
#
#   * RatMatrix              ― immutable a×n matrix of Fractions
#   * determinant(M)         ― exact Gaussian elimination
#   * plucker(M, I)          ― Δ_I, the minor on the ascending column set I
#   * random_generic_matrix  ― seeded sample with every maximal minor nonzero
#
# Column indices in the Plücker API are 1-based, matching Δ_{1,3} etc.
# Everything else is 0-based.
# --------------------------------------------------

import logging
from fractions import Fraction
from itertools import combinations

import numpy as np

from grasscluster.config import RESAMPLE_CAP
from grasscluster.element.element import Element
from grasscluster.errors import (
    DimensionError,
    InputFormatError,
    NonGenericError,
    ParameterError,
    PluckerIndexError,
)

logger = logging.getLogger(__name__)

Rational = Fraction


def to_rational(value) -> Fraction:
    """Convert an int, Fraction or "p/q" string to a Fraction (floats are refused)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, float)):
        raise InputFormatError(f"Expected an exact rational, got {value!r}")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise InputFormatError(f"Cannot read {value!r} as a rational")
    raise InputFormatError(f"Cannot read {value!r} as a rational")


def rational_str(value) -> str:
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def wrap_index(i: int, n: int) -> int:
    """Reduce an index mod n into 1..n."""
    return (i - 1) % n + 1


def cyclic_window(start: int, stop: int, n: int) -> list:
    """Indices start, start+1, ..., stop taken mod n in written order."""
    assert stop >= start - 1, "Window runs backwards."
    return [wrap_index(i, n) for i in range(start, stop + 1)]


class RatMatrix(Element):
    """
    An immutable dense matrix over Q.

    Entries live in a read-only numpy object array of Fractions so matrix
    products go through numpy while every operation stays exact.
    """

    def __init__(self, entries):
        rows = [list(row) for row in entries]
        if len(rows) > 0:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise DimensionError("Rows of a matrix must all have the same length.")
        else:
            width = 0
        array = np.empty((len(rows), width), dtype=object)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                array[i, j] = to_rational(x)
        array.setflags(write=False)
        self._entries = array

    # ---------------------------------------------------------------------
    # Construction helpers
    # ---------------------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns) -> "RatMatrix":
        columns = [list(col) for col in columns]
        if not columns:
            raise DimensionError("Need at least one column.")
        height = len(columns[0])
        if any(len(col) != height for col in columns):
            raise DimensionError("Columns of a matrix must all have the same length.")
        return cls([[col[i] for col in columns] for i in range(height)])

    # ---------------------------------------------------------------------
    # Shape and access
    # ---------------------------------------------------------------------

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    @property
    def shape(self):
        return self._entries.shape

    def __getitem__(self, index) -> Fraction:
        i, j = index
        return self._entries[i, j]

    def column(self, j: int) -> tuple:
        return tuple(self._entries[:, j])

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def select_columns(self, indices) -> "RatMatrix":
        """Submatrix on the given 0-based columns, in the given order."""
        return RatMatrix(self._entries[:, list(indices)].tolist())

    def tolist(self) -> list:
        return [list(row) for row in self._entries.tolist()]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self._entries.T.tolist())

    # ---------------------------------------------------------------------
    # Arithmetic
    # ---------------------------------------------------------------------

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"Cannot multiply {self.shape} by {other.shape}.")
        if self.cols == 0:
            return RatMatrix.zeros(self.rows, other.cols)
        return RatMatrix(np.dot(self._entries, other._entries).tolist())

    def scale(self, scalar) -> "RatMatrix":
        scalar = to_rational(scalar)
        return RatMatrix([[scalar * x for x in row] for row in self.tolist()])

    def power(self, k: int) -> "RatMatrix":
        if self.rows != self.cols:
            raise DimensionError("Only square matrices have powers.")
        if k < 0:
            raise ParameterError("Negative powers are not supported.")
        result = RatMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def determinant(self) -> Fraction:
        return determinant(self)

    def rank(self) -> int:
        return len(_row_echelon(self.tolist())[1])

    def solve(self, rhs) -> list:
        """Solve self · x = rhs for a square nonsingular matrix."""
        if self.rows != self.cols:
            raise DimensionError("solve needs a square matrix.")
        rhs = [to_rational(x) for x in rhs]
        if len(rhs) != self.rows:
            raise DimensionError("Right-hand side has the wrong length.")
        m = [row + [rhs[i]] for i, row in enumerate(self.tolist())]
        n = self.rows
        for c in range(n):
            pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
            if pivot is None:
                raise NonGenericError("Singular matrix in solve.")
            m[c], m[pivot] = m[pivot], m[c]
            p = m[c][c]
            m[c] = [x / p for x in m[c]]
            for r in range(n):
                if r != c and m[r][c] != 0:
                    f = m[r][c]
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return [m[i][n] for i in range(n)]

    # ---------------------------------------------------------------------
    # Comparison / serialization
    # ---------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.tolist() == other.tolist()

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.tolist()))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(rational_str(x) for x in row) + "]" for row in self.tolist())
        return f"RatMatrix([{body}])"

    def to_json(self):
        return [[rational_str(x) for x in row] for row in self.tolist()]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
            raise InputFormatError("A matrix is a list of rows.")
        return cls(data)


def _row_echelon(m):
    """
    In-place row echelon form of a list-of-lists of Fractions.

    Returns:
    - m: the reduced rows
    - pivots: list of pivot columns
    - swaps: number of row swaps performed
    """
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    pivots = []
    swaps = 0
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r >= n_rows:
            break
        i_row = next((r for r in range(piv_r, n_rows) if m[r][piv_c] != 0), None)
        if i_row is None:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
            swaps += 1
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            if fr == 0:
                continue
            frp = fr / fp
            for c in range(piv_c, n_cols):
                m[r][c] -= m[piv_r][c] * frp
        pivots.append(piv_c)
        piv_r += 1
    return m, pivots, swaps


def determinant(M) -> Fraction:
    if not isinstance(M, RatMatrix):
        M = RatMatrix(M)
    if M.rows != M.cols:
        raise DimensionError(f"Determinant of a non-square {M.rows}x{M.cols} matrix.")
    m, pivots, swaps = _row_echelon(M.tolist())
    if len(pivots) < M.rows:
        return Fraction(0)
    det = Fraction(-1 if swaps % 2 else 1)
    for i in range(M.rows):
        det *= m[i][i]
    return det


def plucker(M: RatMatrix, I) -> Fraction:
    """
    The Plücker coordinate Δ_I of an a×n matrix.

    Parameters
    ----------
    M : RatMatrix
        a×n representative.
    I : sequence of int
        Strictly ascending 1-based column indices, |I| = a.
    """
    I = list(I)
    if len(I) != M.rows:
        raise PluckerIndexError(f"Index set {I} must have size {M.rows}.")
    if any(i < 1 or i > M.cols for i in I):
        raise PluckerIndexError(f"Index set {I} leaves 1..{M.cols}.")
    if len(set(I)) != len(I):
        raise PluckerIndexError(f"Index set {I} repeats an index.")
    if any(x >= y for x, y in zip(I, I[1:])):
        raise PluckerIndexError(f"Index set {I} is not ascending.")
    return determinant(M.select_columns([i - 1 for i in I]))


def sorted_plucker(M: RatMatrix, indices) -> Fraction:
    """Δ of a cyclic index set: reduce mod n, then sort ascending."""
    return plucker(M, sorted(wrap_index(i, M.cols) for i in indices))


def all_minors_nonzero(M: RatMatrix) -> bool:
    return all(plucker(M, I) != 0 for I in combinations(range(1, M.cols + 1), M.rows))


def totally_positive_matrix(a: int, ts) -> RatMatrix:
    """Vandermonde columns (1, t, t², ...), totally positive for 0 < t_1 < ... < t_n."""
    ts = [to_rational(t) for t in ts]
    if any(t <= 0 for t in ts) or any(s >= t for s, t in zip(ts, ts[1:])):
        raise ParameterError("Need 0 < t_1 < ... < t_n for a totally positive matrix.")
    return RatMatrix.from_columns([[t ** r for r in range(a)] for t in ts])


def random_generic_matrix(a: int, n: int, seed: int = 0, positive: bool = False) -> RatMatrix:
    """
    Sample an a×n rational matrix all of whose maximal minors are nonzero.

    Parameters
    ----------
    a, n : int
        Shape, 1 <= a < n.
    seed : int
        Seed for numpy's default generator; equal seeds give equal matrices.
    positive : bool
        Return a totally positive Vandermonde matrix instead.
    """
    if a < 1 or a >= n:
        raise ParameterError(f"Need 1 <= a < n, got a={a}, n={n}.")
    rng = np.random.default_rng(seed)
    if positive:
        ts = sorted(int(t) for t in rng.choice(np.arange(1, 4 * n + 1), size=n, replace=False))
        return totally_positive_matrix(a, ts)
    for attempt in range(1, RESAMPLE_CAP + 1):
        nums = rng.integers(-9, 10, size=(a, n))
        dens = rng.integers(1, 6, size=(a, n))
        M = RatMatrix([[Fraction(int(nums[i, j]), int(dens[i, j])) for j in range(n)] for i in range(a)])
        if all_minors_nonzero(M):
            logger.debug("random_generic_matrix(%d, %d, seed=%s) accepted after %d attempt(s)", a, n, seed, attempt)
            return M
    raise NonGenericError(f"No generic {a}x{n} matrix after {RESAMPLE_CAP} attempts (seed={seed}).")


def random_sl_matrix(a: int, seed: int = 0) -> RatMatrix:
    """A random determinant-1 matrix: unit lower times unit upper triangular."""
    rng = np.random.default_rng(seed)
    lower = [[1 if i == j else (Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 4))) if i > j else 0)
              for j in range(a)] for i in range(a)]
    upper = [[1 if i == j else (Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 4))) if i < j else 0)
              for j in range(a)] for i in range(a)]
    return RatMatrix(lower) @ RatMatrix(upper)
