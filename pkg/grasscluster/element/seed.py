# This file contains value-level cluster seeds: exact A- and X-values on quiver vertices
import logging
from fractions import Fraction

from grasscluster.element.element import Element
from grasscluster.element.matrix import rational_str, to_rational
from grasscluster.element.quiver import Grid, Quiver, check_parameters, grid_vertices, parse_vertex
from grasscluster.errors import (
    DegenerateSeedError,
    InputFormatError,
    MutationAtFrozenError,
    ParameterError,
    VertexNotFoundError,
)

logger = logging.getLogger(__name__)


class Seed(Element):
    """
    Manage a quiver together with one nonzero rational per vertex.
    Subclasses decide how values transform under mutation.
    """

    def __init__(self, quiver: Quiver, values):
        self.quiver = quiver
        values = {v: to_rational(x) for v, x in dict(values).items()}
        if set(values) != set(quiver.vertices):
            missing = set(quiver.vertices) - set(values)
            extra = set(values) - set(quiver.vertices)
            raise VertexNotFoundError(f"Seed values do not match the vertices (missing {missing}, extra {extra}).")
        for v, x in values.items():
            if x == 0:
                raise DegenerateSeedError(f"Seed value at {v} is zero.")
        self.values = values

    def __getitem__(self, v) -> Fraction:
        try:
            return self.values[v]
        except KeyError:
            raise VertexNotFoundError(f"{v} is not a vertex of the seed.")

    def _check_mutable(self, k):
        if k not in self.quiver.index:
            raise VertexNotFoundError(f"{k} is not a vertex of the seed.")
        if k in self.quiver.frozen:
            raise MutationAtFrozenError(f"Cannot mutate at frozen vertex {k}.")

    def mutate(self, k) -> "Seed":
        raise NotImplementedError

    def mutate_sequence(self, ks) -> "Seed":
        seed = self
        for k in ks:
            seed = seed.mutate(k)
        return seed

    def relabel(self, mapping) -> "Seed":
        return type(self)(self.quiver.relabel(mapping), {mapping.get(v, v): x for v, x in self.values.items()})

    def product(self, vertices=None) -> Fraction:
        vertices = self.quiver.vertices if vertices is None else vertices
        result = Fraction(1)
        for v in vertices:
            result *= self[v]
        return result

    def __eq__(self, other):
        if not isinstance(other, Seed) or type(self) is not type(other):
            return NotImplemented
        return self.quiver == other.quiver and self.values == other.values

    def __hash__(self):
        return hash((type(self).__name__, self.quiver))

    def __repr__(self):
        body = ", ".join(f"{v}: {rational_str(x)}" for v, x in self.values.items())
        return f"{type(self).__name__}({{{body}}})"

    def to_json(self):
        data = self.quiver.to_json()
        data["values"] = {str(v): rational_str(self.values[v]) for v in self.quiver.vertices}
        return data

    @classmethod
    def from_json(cls, data):
        quiver = Quiver.from_json(data)
        try:
            values = {parse_vertex(k): x for k, x in data["values"].items()}
        except (KeyError, AttributeError) as exc:
            raise InputFormatError(f"Malformed seed JSON: {exc}")
        return cls(quiver, values)


class ASeed(Seed):
    """K_2 cluster: A-values with the exchange relation."""

    def mutate(self, k) -> "ASeed":
        """
        A′_k = (∏_j A_j^{[ε_{jk}]_+} + ∏_j A_j^{[−ε_{jk}]_+}) / A_k, others unchanged.
        """
        self._check_mutable(k)
        Q = self.quiver
        plus = Fraction(1)
        minus = Fraction(1)
        for j in Q.vertices:
            e = Q.epsilon(j, k)
            if e > 0:
                plus *= self.values[j] ** e
            elif e < 0:
                minus *= self.values[j] ** (-e)
        new_value = (plus + minus) / self.values[k]
        if new_value == 0:
            raise DegenerateSeedError(f"Mutation at {k} produced zero.")
        values = dict(self.values)
        values[k] = new_value
        return ASeed(Q.mutate(k), values)

    def p_map(self) -> "XSeed":
        """X_g = ∏_f A_f^{ε_{fg}} on every vertex g."""
        Q = self.quiver
        values = {}
        for g in Q.vertices:
            x = Fraction(1)
            for f in Q.vertices:
                e = Q.epsilon(f, g)
                if e:
                    x *= self.values[f] ** e
            values[g] = x
        return XSeed(Q, values)


class XSeed(Seed):
    """Poisson cluster: X-values."""

    def mutate(self, k) -> "XSeed":
        """
        X′_k = 1/X_k and X′_i = X_i (1 + X_k^{sgn ε_{ik}})^{ε_{ik}} for i != k.
        """
        self._check_mutable(k)
        Q = self.quiver
        xk = self.values[k]
        values = {}
        for i in Q.vertices:
            if i == k:
                values[i] = 1 / xk
                continue
            e = Q.epsilon(i, k)
            if e == 0:
                values[i] = self.values[i]
                continue
            base = 1 + (xk if e > 0 else 1 / xk)
            if base == 0:
                raise DegenerateSeedError(f"1 + X_{k}^(±1) vanishes while mutating at {k}.")
            values[i] = self.values[i] * base ** e
        return XSeed(Q.mutate(k), values)


def mutate_a(seed: ASeed, k) -> ASeed:
    return seed.mutate(k)


def mutate_x(seed: XSeed, k) -> XSeed:
    return seed.mutate(k)


def p_map(seed: ASeed) -> XSeed:
    return seed.p_map()


# ---------------------------------------------------------------------
# Plücker labels of Q_{a,n}
# ---------------------------------------------------------------------

def plucker_label(a: int, n: int, v) -> tuple:
    """
    The a-subset I(i,j) attached to a grid vertex:
    {b−j+1, …, b−j+i} ∪ {b+i+1, …, n}, and I(0,0) = {b+1, …, n}.
    """
    b = check_parameters(a, n)
    if not isinstance(v, Grid):
        raise ParameterError(f"Only grid vertices carry Plücker labels, got {v}.")
    if v == Grid(0, 0):
        return tuple(range(b + 1, n + 1))
    i, j = v.i, v.j
    if not (1 <= i <= a and 1 <= j <= b):
        raise ParameterError(f"{v} is not a vertex of Q_({a},{n}).")
    return tuple(sorted(set(range(b - j + 1, b - j + i + 1)) | set(range(b + i + 1, n + 1))))


def rotated_label(a: int, n: int, v) -> tuple:
    """I′(i,j): every index of I(i,j) lowered by one mod n, sorted."""
    return tuple(sorted((x - 2) % n + 1 for x in plucker_label(a, n, v)))


def all_labels(a: int, n: int) -> dict:
    return {v: plucker_label(a, n, v) for v in grid_vertices(a, n)}


__all__ = [
    "Seed", "ASeed", "XSeed", "mutate_a", "mutate_x", "p_map",
    "plucker_label", "rotated_label", "all_labels",
]
