# --------------------------------------------------
# Tropical points in the Q_{a,n} chart (min-plus convention).
#
# The public API:
#
#   * TropicalPoint, GZVector
#   * trop_mutate_x(pt, k)
#   * gz_from_x(pt) / x_from_gz(l)
#   * trop_potential(l), trop_monodromy(l), trop_weight(pt)
#   * bijection(pi, c) / inverse_bijection(l)
#   * trop_rotate(pt, method)      ― ρ-mutation and the l-recursion, cross-checked
#   * cone_members(a, b, c)        ― brute-force search of the box [0, c]^{ab}
#   * padic_valuation(q, p)        ― the valuation used to compare with rational seeds
# --------------------------------------------------

import logging
from fractions import Fraction
from itertools import product

import numpy as np
from sympy import multiplicity

from grasscluster.element.element import Element
from grasscluster.element.matrix import to_rational
from grasscluster.element.plane_partition import PlanePartition, gt_rows, triangle_weight
from grasscluster.element.quiver import (
    Grid,
    Quiver,
    check_parameters,
    grid_vertices,
    parse_vertex,
    rho_sequence,
    rotation_permutation,
    standard_quiver,
)
from grasscluster.element.seed import XSeed
from grasscluster.errors import (
    InputFormatError,
    InternalConsistencyError,
    MutationAtFrozenError,
    NotInConeError,
    ParameterError,
    VertexNotFoundError,
)
from grasscluster.space.confspace import f_set

logger = logging.getLogger(__name__)

ROTATE_METHODS = ("mutation", "recursion", "both")


class TropicalPoint(Element):
    """Integer coordinates x_v on the vertices of one quiver chart."""

    def __init__(self, quiver: Quiver, x):
        x = dict(x)
        if set(x) != set(quiver.vertices):
            raise VertexNotFoundError("Tropical coordinates do not match the chart's vertices.")
        for v, value in x.items():
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise InputFormatError(f"Tropical coordinate at {v} must be an integer, got {value!r}")
        self.quiver = quiver
        self.x = {v: int(value) for v, value in x.items()}

    @property
    def a(self) -> int:
        return self.quiver.a

    @property
    def n(self) -> int:
        return self.quiver.n

    def __getitem__(self, v) -> int:
        try:
            return self.x[v]
        except KeyError:
            raise VertexNotFoundError(f"{v} is not a vertex of the chart.")

    def mutate(self, k) -> "TropicalPoint":
        """
        x′_k = −x_k and x′_i = x_i + ε_{ik}·min(0, sgn(ε_{ik})·x_k).
        """
        Q = self.quiver
        if k not in Q.index:
            raise VertexNotFoundError(f"{k} is not a vertex of the chart.")
        if k in Q.frozen:
            raise MutationAtFrozenError(f"Cannot mutate at frozen vertex {k}.")
        xk = self.x[k]
        x = {}
        for i in Q.vertices:
            if i == k:
                x[i] = -xk
                continue
            e = Q.epsilon(i, k)
            x[i] = self.x[i] + e * min(0, (1 if e > 0 else -1) * xk) if e else self.x[i]
        return TropicalPoint(Q.mutate(k), x)

    def mutate_sequence(self, ks) -> "TropicalPoint":
        pt = self
        for k in ks:
            pt = pt.mutate(k)
        return pt

    def relabel(self, mapping) -> "TropicalPoint":
        return TropicalPoint(self.quiver.relabel(mapping), {mapping.get(v, v): x for v, x in self.x.items()})

    def in_standard_chart(self) -> bool:
        if self.a is None or self.n is None:
            return False
        return self.quiver == standard_quiver(self.a, self.n)

    def __eq__(self, other):
        if not isinstance(other, TropicalPoint):
            return NotImplemented
        return self.quiver == other.quiver and self.x == other.x

    def __hash__(self):
        return hash(tuple(sorted((str(v), x) for v, x in self.x.items())))

    def __repr__(self):
        body = ", ".join(f"{v}: {x}" for v, x in self.x.items())
        return f"TropicalPoint({{{body}}})"

    def to_json(self):
        data = {"chart": f"Q_{{{self.a},{self.n}}}", "x": {str(v): self.x[v] for v in self.quiver.vertices}}
        if not self.in_standard_chart():
            data["quiver"] = self.quiver.to_json()
        return data

    @classmethod
    def from_json(cls, data):
        try:
            if "quiver" in data:
                quiver = Quiver.from_json(data["quiver"])
            else:
                a, n = (int(t) for t in data["chart"].strip()[3:-1].split(","))
                quiver = standard_quiver(a, n)
            x = {parse_vertex(k): v for k, v in data["x"].items()}
        except (KeyError, AttributeError, TypeError, ValueError) as exc:
            raise InputFormatError(f"Malformed tropical point JSON: {exc}")
        return cls(quiver, x)


class GZVector(Element):
    """
    Tropical Gelfand-Zetlin coordinates: l_{0,0} and an a×b integer grid.

    l(i, j) is 1-based; indices past the last row or column read as 0.
    """

    def __init__(self, l00: int, grid):
        grid = np.array(grid, dtype=np.int64)
        if grid.ndim != 2 or grid.size == 0:
            raise InputFormatError("A GZ grid is a non-empty list of equal-length rows.")
        grid.setflags(write=False)
        self.l00 = int(l00)
        self.grid = grid

    @property
    def a(self) -> int:
        return self.grid.shape[0]

    @property
    def b(self) -> int:
        return self.grid.shape[1]

    def __call__(self, i: int, j: int) -> int:
        if (i, j) == (0, 0):
            return self.l00
        if i > self.a or j > self.b:
            return 0
        if i < 1 or j < 1:
            raise ParameterError(f"l({i},{j}) is not a GZ coordinate.")
        return int(self.grid[i - 1, j - 1])

    def tolist(self) -> list:
        return self.grid.tolist()

    def __eq__(self, other):
        if not isinstance(other, GZVector):
            return NotImplemented
        return self.l00 == other.l00 and np.array_equal(self.grid, other.grid)

    def __hash__(self):
        return hash((self.l00, self.grid.tobytes(), self.grid.shape))

    def __repr__(self):
        return f"GZVector(l00={self.l00}, grid={self.tolist()})"

    def to_json(self):
        return {"l00": self.l00, "grid": self.tolist()}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(data["l00"], data["grid"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputFormatError(f"Malformed GZ vector JSON: {exc}")


# ---------------------------------------------------------------------
# Mutation and the GZ change of coordinates
# ---------------------------------------------------------------------

def trop_mutate_x(pt: TropicalPoint, k) -> TropicalPoint:
    return pt.mutate(k)


def _check_standard(pt: TropicalPoint) -> None:
    if not pt.in_standard_chart():
        raise ParameterError("GZ coordinates are defined in the Q_{a,n} chart only.")


def gz_from_x(pt: TropicalPoint) -> GZVector:
    """l_{i,j} = Σ_{k>=i, l>=j} x_{k,l}, l_{0,0} = x_{0,0} + l_{1,1}."""
    _check_standard(pt)
    a, n = pt.a, pt.n
    b = n - a
    x = np.array([[pt[Grid(i, j)] for j in range(1, b + 1)] for i in range(1, a + 1)], dtype=np.int64)
    # suffix sums over both axes
    grid = np.flip(np.cumsum(np.cumsum(np.flip(x), axis=0), axis=1))
    return GZVector(pt[Grid(0, 0)] + int(grid[0, 0]), grid)


def x_from_gz(l: GZVector) -> TropicalPoint:
    """x_{i,j} = l_{i,j} + l_{i+1,j+1} − l_{i+1,j} − l_{i,j+1}, x_{0,0} = l_{0,0} − l_{1,1}."""
    a, b = l.a, l.b
    x = {Grid(0, 0): l.l00 - l(1, 1)}
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            x[Grid(i, j)] = l(i, j) + l(i + 1, j + 1) - l(i + 1, j) - l(i, j + 1)
    return TropicalPoint(standard_quiver(a, a + b), x)


# ---------------------------------------------------------------------
# Potential, monodromy and weight
# ---------------------------------------------------------------------

def potential_terms(l: GZVector) -> list:
    a, b = l.a, l.b
    terms = [l.l00 - l(1, 1), l(a, b)]
    terms += [l(i, j) - l(i + 1, j) for i in range(1, a) for j in range(1, b + 1)]
    terms += [l(i, j) - l(i, j + 1) for i in range(1, a + 1) for j in range(1, b)]
    return terms


def trop_potential(l: GZVector) -> int:
    return min(potential_terms(l))


def trop_monodromy(l: GZVector) -> int:
    return l.l00


def trop_weight_by_diagonals(l: GZVector) -> tuple:
    return triangle_weight(gt_rows(l.l00, l.tolist(), l.a, l.b))


def trop_weight_by_f_sets(pt: TropicalPoint) -> tuple:
    _check_standard(pt)
    return tuple(sum(pt[v] for v in f_set(pt.a, pt.n, k)) for k in range(1, pt.n + 1))


def trop_weight(pt: TropicalPoint) -> tuple:
    """M^t from the GZ triangle diagonals, checked against the F_k sums."""
    by_diagonals = trop_weight_by_diagonals(gz_from_x(pt))
    by_f_sets = trop_weight_by_f_sets(pt)
    if by_diagonals != by_f_sets:
        raise InternalConsistencyError(f"Tropical weights disagree: {by_diagonals} vs {by_f_sets}")
    return by_diagonals


# ---------------------------------------------------------------------
# Plane partitions ↔ the cone 𝒲^t >= 0
# ---------------------------------------------------------------------

def bijection(pi: PlanePartition, c: int) -> GZVector:
    pi.check_box(c)
    return GZVector(c, pi.tolist())


def inverse_bijection(l: GZVector) -> PlanePartition:
    """The plane partition read off the grid; l_{0,0} is the box height."""
    if trop_potential(l) < 0:
        raise NotInConeError(f"{l} violates the tropical potential inequalities.")
    return PlanePartition(l.tolist())


def partition_point(pi: PlanePartition, c: int) -> TropicalPoint:
    return x_from_gz(bijection(pi, c))


def cone_members(a: int, b: int, c: int):
    """Every GZ vector with l_{0,0} = c, grid in [0, c]^{ab} and 𝒲^t >= 0, lexicographically."""
    check_parameters(a, a + b)
    if c < 0:
        raise ParameterError(f"Need c >= 0, got {c}.")
    for flat in product(range(c + 1), repeat=a * b):
        l = GZVector(c, np.array(flat, dtype=np.int64).reshape(a, b))
        if trop_potential(l) >= 0:
            yield l


# ---------------------------------------------------------------------
# Rotation
# ---------------------------------------------------------------------

def trop_rotate_gz(l: GZVector) -> GZVector:
    """
    l′_{i,j} = min(l′_{i,j−1}, l_{i−1,j}) + max(l′_{i+1,j}, l_{i,j+1}) − l_{i,j},
    columns left to right, each column bottom to top.

    Neighbours outside the a×b grid drop out of the min and the max. The
    min over no neighbours (at (1,1)) is l_{0,0}; the max over none (at
    (a,b)) is 0. On the cone 𝒲^t >= 0 this agrees with padding the grid
    by l_{0,0} above and left and by 0 below and right.
    """
    a, b = l.a, l.b
    old = l.grid
    new = np.zeros((a, b), dtype=np.int64)
    for j in range(b):
        for i in range(a - 1, -1, -1):
            left_up = ([new[i, j - 1]] if j > 0 else []) + ([old[i - 1, j]] if i > 0 else [])
            down_right = ([new[i + 1, j]] if i < a - 1 else []) + ([old[i, j + 1]] if j < b - 1 else [])
            low = min(left_up) if left_up else l.l00
            high = max(down_right) if down_right else 0
            new[i, j] = low + high - old[i, j]
    return GZVector(l.l00, new)


def _rotate_by_mutation(pt: TropicalPoint) -> TropicalPoint:
    a, n = pt.a, pt.n
    moved = pt.mutate_sequence(rho_sequence(a, n)).relabel(rotation_permutation(a, n))
    Q = standard_quiver(a, n)
    if moved.quiver != Q:
        raise InternalConsistencyError("ρ did not return to the Q_{a,n} chart.")
    return TropicalPoint(Q, moved.x)


def _rotate_by_recursion(pt: TropicalPoint) -> TropicalPoint:
    return x_from_gz(trop_rotate_gz(gz_from_x(pt)))


def trop_rotate(pt: TropicalPoint, method: str = "both") -> TropicalPoint:
    """
    The tropical rotation R^t in the Q_{a,n} chart.

    Parameters
    ----------
    pt : TropicalPoint
        Point in the Q_{a,n} chart.
    method : str
        "mutation" (tropical X-mutation along ρ, then the frozen relabelling),
        "recursion" (the l-recursion on GZ coordinates) or "both", which runs
        the two and raises InternalConsistencyError when they differ.
    """
    if method not in ROTATE_METHODS:
        raise ParameterError(f"method must be one of {ROTATE_METHODS}, got {method!r}")
    _check_standard(pt)
    if method == "mutation":
        return _rotate_by_mutation(pt)
    if method == "recursion":
        return _rotate_by_recursion(pt)
    by_mutation = _rotate_by_mutation(pt)
    by_recursion = _rotate_by_recursion(pt)
    if by_mutation != by_recursion:
        raise InternalConsistencyError(f"trop_rotate disagrees on {pt}: {by_mutation} vs {by_recursion}")
    return by_recursion


def random_tropical_point(a: int, n: int, seed: int = 0, bound: int = 10) -> TropicalPoint:
    """Uniform integer coordinates in [−bound, bound] on the Q_{a,n} chart."""
    check_parameters(a, n)
    rng = np.random.default_rng(seed)
    vertices = grid_vertices(a, n)
    values = rng.integers(-bound, bound + 1, size=len(vertices))
    return TropicalPoint(standard_quiver(a, n), {v: int(x) for v, x in zip(vertices, values)})


# ---------------------------------------------------------------------
# Valuations
# ---------------------------------------------------------------------

def padic_valuation(value, p: int) -> int:
    """ord_p of a nonzero rational."""
    value = to_rational(value)
    if value == 0:
        raise ParameterError("The valuation of 0 is not an integer.")
    return multiplicity(p, abs(value.numerator)) - multiplicity(p, value.denominator)


def rational_seed(pt: TropicalPoint, p: int) -> XSeed:
    """The X-seed with X_v = p^{x_v}."""
    return XSeed(pt.quiver, {v: Fraction(p) ** x for v, x in pt.x.items()})


def valuation_point(seed: XSeed, p: int) -> TropicalPoint:
    return TropicalPoint(seed.quiver, {v: padic_valuation(x, p) for v, x in seed.values.items()})


__all__ = [
    "TropicalPoint", "GZVector", "trop_mutate_x", "gz_from_x", "x_from_gz",
    "trop_potential", "trop_monodromy", "trop_weight", "bijection", "inverse_bijection",
    "partition_point", "cone_members", "trop_rotate", "trop_rotate_gz",
    "random_tropical_point", "padic_valuation", "rational_seed", "valuation_point",
]
