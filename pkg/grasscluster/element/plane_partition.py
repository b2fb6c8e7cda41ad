# --------------------------------------------------
# Plane partitions in an a×b×c box and their piecewise-linear toggles.
#
#   * PlanePartition           ― a×b array, weakly decreasing rows and columns
#   * toggle / eta / eta_frames
#   * enumerate_partitions     ― P(a,b,c) in lexicographic row-major order
#   * macmahon                 ― Σ q^{|π|}, by enumeration and by product
#   * GTPattern, gt_pattern, gt_weight
#
# Entry indices (i, j) are 1-based as in π_{i,j}. The bound c is a parameter
# of the dynamics, never stored on the partition.
# --------------------------------------------------

import logging
from collections import Counter

import numpy as np

from grasscluster.element.element import Element
from grasscluster.element.polynomial import IntPolynomial, quantum_integer
from grasscluster.errors import (
    InputFormatError,
    InternalConsistencyError,
    InvariantViolationError,
    ParameterError,
)

logger = logging.getLogger(__name__)


class PlanePartition(Element):
    """
    An a×b matrix of non-negative integers, weakly decreasing in rows and columns.
    """

    def __init__(self, entries):
        rows = [list(row) for row in entries]
        if not rows or not rows[0]:
            raise InvariantViolationError("A plane partition needs a >= 1 rows and b >= 1 columns.")
        if any(len(row) != len(rows[0]) for row in rows):
            raise InvariantViolationError("All rows of a plane partition must have the same length.")
        for row in rows:
            for x in row:
                if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                    raise InvariantViolationError(f"Entries must be integers, got {x!r}.")
        array = np.array(rows, dtype=np.int64)
        if (array < 0).any():
            raise InvariantViolationError("Entries must be non-negative.")
        if (np.diff(array, axis=1) > 0).any() or (np.diff(array, axis=0) > 0).any():
            raise InvariantViolationError("Entries must weakly decrease along rows and columns.")
        array.setflags(write=False)
        self.entries = array

    @classmethod
    def _trusted(cls, flat, a: int, b: int) -> "PlanePartition":
        """Build from a flat row-major tuple already known to be valid."""
        obj = cls.__new__(cls)
        array = np.array(flat, dtype=np.int64).reshape(a, b)
        array.setflags(write=False)
        obj.entries = array
        return obj

    @classmethod
    def zero(cls, a: int, b: int) -> "PlanePartition":
        return cls([[0] * b for _ in range(a)])

    # ---------------------------------------------------------------------
    # Accessors
    # ---------------------------------------------------------------------

    @property
    def a(self) -> int:
        return self.entries.shape[0]

    @property
    def b(self) -> int:
        return self.entries.shape[1]

    def __getitem__(self, index) -> int:
        i, j = index
        if not (1 <= i <= self.a and 1 <= j <= self.b):
            raise ParameterError(f"Entry ({i},{j}) outside the {self.a}x{self.b} grid.")
        return int(self.entries[i - 1, j - 1])

    def entry(self, i: int, j: int, c: int) -> int:
        """π_{i,j} with the box convention π_{0,j} = π_{i,0} = c, π_{a+1,j} = π_{i,b+1} = 0."""
        if i == 0 or j == 0:
            return c
        if i == self.a + 1 or j == self.b + 1:
            return 0
        return self[i, j]

    def size(self) -> int:
        return int(self.entries.sum())

    def fits(self, c: int) -> bool:
        return int(self.entries[0, 0]) <= c

    def check_box(self, c: int) -> None:
        if c < 0:
            raise ParameterError(f"The bound c must be >= 0, got {c}.")
        if not self.fits(c):
            raise InvariantViolationError(f"π_(1,1) = {self.entries[0, 0]} exceeds c = {c}.")

    def flat(self) -> tuple:
        return tuple(int(x) for x in self.entries.ravel())

    def tolist(self) -> list:
        return self.entries.tolist()

    # ---------------------------------------------------------------------
    # Dynamics
    # ---------------------------------------------------------------------

    def toggle(self, i: int, j: int, c: int) -> "PlanePartition":
        """
        τ_{i,j}: replace π_{i,j} by max(π_{i,j+1}, π_{i+1,j}) + min(π_{i−1,j}, π_{i,j−1}) − π_{i,j}.
        """
        self.check_box(c)
        if not (1 <= i <= self.a and 1 <= j <= self.b):
            raise ParameterError(f"Toggle position ({i},{j}) outside the {self.a}x{self.b} grid.")
        new_value = (max(self.entry(i, j + 1, c), self.entry(i + 1, j, c))
                     + min(self.entry(i - 1, j, c), self.entry(i, j - 1, c))
                     - self[i, j])
        rows = self.tolist()
        rows[i - 1][j - 1] = new_value
        return PlanePartition(rows)

    def eta(self, c: int) -> "PlanePartition":
        """η = ν_b ∘ … ∘ ν_1 with ν_j = τ_{1,j} ∘ … ∘ τ_{a,j}."""
        self.check_box(c)
        return PlanePartition._trusted(eta_flat(self.flat(), self.a, self.b, c), self.a, self.b)

    def eta_frames(self, c: int) -> list:
        """Every intermediate partition of η, one per toggle, in application order."""
        frames = []
        current = self
        for j in range(1, self.b + 1):
            for i in range(self.a, 0, -1):
                current = current.toggle(i, j, c)
                frames.append(current)
        return frames

    def eta_power(self, d: int, c: int) -> "PlanePartition":
        self.check_box(c)
        flat = self.flat()
        for _ in range(d):
            flat = eta_flat(flat, self.a, self.b, c)
        return PlanePartition._trusted(flat, self.a, self.b)

    def orbit(self, c: int) -> list:
        """The η-orbit starting at self."""
        self.check_box(c)
        start = self.flat()
        orbit = [start]
        current = eta_flat(start, self.a, self.b, c)
        while current != start:
            orbit.append(current)
            current = eta_flat(current, self.a, self.b, c)
        return [PlanePartition._trusted(f, self.a, self.b) for f in orbit]

    # ---------------------------------------------------------------------
    # Comparison / serialization
    # ---------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PlanePartition):
            return NotImplemented
        return self.entries.shape == other.entries.shape and np.array_equal(self.entries, other.entries)

    def __lt__(self, other):
        return self.flat() < other.flat()

    def __hash__(self):
        return hash((self.a, self.b, self.flat()))

    def __repr__(self):
        return f"PlanePartition({self.tolist()})"

    def to_json(self):
        return {"a": self.a, "b": self.b, "entries": self.tolist()}

    def to_csv_row(self) -> list:
        return list(self.flat())

    @classmethod
    def from_json(cls, data):
        if isinstance(data, list):
            return cls(data)
        try:
            partition = cls(data["entries"])
        except (KeyError, TypeError) as exc:
            raise InputFormatError(f"Malformed plane partition JSON: {exc}")
        if ("a" in data and data["a"] != partition.a) or ("b" in data and data["b"] != partition.b):
            raise InputFormatError("Declared a, b do not match the entries.")
        return partition


def eta_flat(flat, a: int, b: int, c: int) -> tuple:
    """η on a flat row-major tuple; no validation, used by the enumeration-wide scans."""
    x = list(flat)
    for j in range(b):
        for i in range(a - 1, -1, -1):
            idx = i * b + j
            right = x[idx + 1] if j + 1 < b else 0
            below = x[idx + b] if i + 1 < a else 0
            above = x[idx - b] if i > 0 else c
            left = x[idx - 1] if j > 0 else c
            x[idx] = max(right, below) + min(above, left) - x[idx]
    return tuple(x)


def toggle(pi: PlanePartition, i: int, j: int, c: int) -> PlanePartition:
    return pi.toggle(i, j, c)


def eta(pi: PlanePartition, c: int) -> PlanePartition:
    return pi.eta(c)


# ---------------------------------------------------------------------
# Enumeration and MacMahon's formula
# ---------------------------------------------------------------------

def _check_box_parameters(a: int, b: int, c: int) -> None:
    if a < 1 or b < 1 or c < 0:
        raise ParameterError(f"Need a, b >= 1 and c >= 0, got ({a}, {b}, {c}).")


def enumerate_flat(a: int, b: int, c: int):
    """Yield P(a,b,c) as flat row-major tuples in lexicographic order."""
    _check_box_parameters(a, b, c)
    total = a * b
    current = [0] * total

    def fill(idx):
        if idx == total:
            yield tuple(current)
            return
        i, j = divmod(idx, b)
        bound = c
        if i > 0:
            bound = min(bound, current[idx - b])
        if j > 0:
            bound = min(bound, current[idx - 1])
        for value in range(bound + 1):
            current[idx] = value
            yield from fill(idx + 1)

    yield from fill(0)


def enumerate_partitions(a: int, b: int, c: int):
    """Each element of P(a,b,c) exactly once, lexicographic in row-major entries."""
    for flat in enumerate_flat(a, b, c):
        yield PlanePartition._trusted(flat, a, b)


def macmahon_by_enumeration(a: int, b: int, c: int) -> IntPolynomial:
    sizes = Counter(sum(flat) for flat in enumerate_flat(a, b, c))
    degree = max(sizes)
    return IntPolynomial([sizes.get(k, 0) for k in range(degree + 1)])


def macmahon_by_product(a: int, b: int, c: int) -> IntPolynomial:
    """∏_{i,j,k} [i+j+k−1]_q / [i+j+k−2]_q, multiplied out then divided exactly."""
    _check_box_parameters(a, b, c)
    numerator = IntPolynomial([1])
    denominator = IntPolynomial([1])
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                numerator = numerator * quantum_integer(i + j + k - 1)
                denominator = denominator * quantum_integer(i + j + k - 2)
    return numerator.exact_div(denominator)


def macmahon(a: int, b: int, c: int) -> IntPolynomial:
    """MacMahon's generating polynomial, computed both ways; they must agree."""
    by_enumeration = macmahon_by_enumeration(a, b, c)
    by_product = macmahon_by_product(a, b, c)
    if by_enumeration != by_product:
        raise InternalConsistencyError(
            f"MacMahon mismatch for ({a},{b},{c}): {by_enumeration!r} vs {by_product!r}")
    logger.debug("macmahon(%d, %d, %d) = %r", a, b, c, by_product)
    return by_product


# ---------------------------------------------------------------------
# Gelfand-Tsetlin patterns
# ---------------------------------------------------------------------

class GTPattern(Element):
    """
    Upper triangular n×n integer array (row r holds columns r..n) with
    non-increasing rows and columns.
    """

    def __init__(self, rows):
        rows = [list(row) for row in rows]
        n = len(rows)
        for r, row in enumerate(rows):
            if len(row) != n - r:
                raise InvariantViolationError(f"Row {r + 1} of a GT pattern must have {n - r} entries.")
            if any(x < y for x, y in zip(row, row[1:])):
                raise InvariantViolationError(f"Row {r + 1} of the GT pattern increases.")
        for r in range(1, n):
            for s in range(r, n):
                if rows[r][s - r] > rows[r - 1][s - r + 1]:
                    raise InvariantViolationError(f"Column {s + 1} of the GT pattern increases.")
        self.rows = [tuple(int(x) for x in row) for row in rows]
        self.n = n

    def __getitem__(self, index) -> int:
        """Λ[r][s] with 1-based r <= s."""
        r, s = index
        if not (1 <= r <= s <= self.n):
            raise ParameterError(f"({r},{s}) is outside the triangle.")
        return self.rows[r - 1][s - r]

    def diagonal_sums(self) -> list:
        return diagonal_sums(self.rows)

    def weight(self) -> tuple:
        return triangle_weight(self.rows)

    def __eq__(self, other):
        if not isinstance(other, GTPattern):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(tuple(self.rows))

    def __repr__(self):
        return f"GTPattern({self.rows})"

    def to_json(self):
        return [list(row) for row in self.rows]

    @classmethod
    def from_json(cls, data):
        return cls(data)


def gt_rows(l00: int, grid, a: int, b: int) -> list:
    """
    The triangle for a plane-partition-shaped grid: row r <= a is
    (l00, …, l00, grid[r][1], …, grid[r][b]) over columns r..n; rows > a vanish.
    """
    n = a + b
    rows = []
    for r in range(1, n + 1):
        if r <= a:
            rows.append([l00] * (a - r + 1) + [grid[r - 1][s] for s in range(b)])
        else:
            rows.append([0] * (n - r + 1))
    return rows


def gt_pattern(pi: PlanePartition, c: int) -> GTPattern:
    pi.check_box(c)
    return GTPattern(gt_rows(c, pi.tolist(), pi.a, pi.b))


def gt_weight(pattern: GTPattern) -> tuple:
    """wt(Λ) = (δ_1, δ_2 − δ_1, …, δ_n − δ_{n−1})."""
    return pattern.weight()


def diagonal_sums(rows) -> list:
    """δ_i = Σ_{k=1}^{i} Λ[k][n−i+k] for i = 1..n, on raw triangle rows."""
    n = len(rows)
    return [sum(rows[k - 1][(n - i + k) - k] for k in range(1, i + 1)) for i in range(1, n + 1)]


def triangle_weight(rows) -> tuple:
    deltas = diagonal_sums(rows)
    return tuple(d - p for d, p in zip(deltas, [0] + deltas[:-1]))
