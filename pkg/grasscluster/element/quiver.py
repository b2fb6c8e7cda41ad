# --------------------------------------------------
# Quivers with frozen vertices and their mutations.
#
# The public API:
#
#   * Quiver                      ― vertices, frozen flags and exchange matrix ε
#   * standard_quiver(a, n)       ― Q_{a,n}
#   * extended_quiver(a, n)       ― Q̃_{a,n} (one primed vertex per frozen vertex)
#   * rho_sequence(a, n)          ― the mutation sequence realizing rotation
#   * rotation_permutation(a, n)  ― computed relabelling ρQ → Q
#   * optimized_quiver(a, n, i)   ― ρ^{n-i}Q, optimized at frozen vertex i
#
# Convention: ε_{fg} = #{g → f} − #{f → g}.
# --------------------------------------------------

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice

import networkx as nx
import numpy as np
from networkx.algorithms import isomorphism

from grasscluster.element.element import Element, data_path
from grasscluster.element.matrix import RatMatrix
from grasscluster.errors import (
    DimensionError,
    InputFormatError,
    MutationAtFrozenError,
    ParameterError,
    VertexNotFoundError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Grid:
    """Grid vertex (i, j); (0, 0) is the special top-left vertex."""
    i: int
    j: int

    def __str__(self):
        return f"({self.i},{self.j})"


@dataclass(frozen=True, order=True)
class Primed:
    """The extra frozen vertex i′ of an extended quiver."""
    i: int

    def __str__(self):
        return f"{self.i}'"


_GRID_RE = re.compile(r"^\(\s*(\d+)\s*,\s*(\d+)\s*\)$")
_PRIMED_RE = re.compile(r"^(\d+)'$")


def vertex_str(v) -> str:
    return str(v)


def parse_vertex(text):
    """Read "(i,j)" as Grid, "i'" as Primed; any other string stays a plain label."""
    if not isinstance(text, str):
        raise InputFormatError(f"Vertex ids are strings, got {text!r}")
    text = text.strip()
    match = _GRID_RE.match(text)
    if match:
        return Grid(int(match.group(1)), int(match.group(2)))
    match = _PRIMED_RE.match(text)
    if match:
        return Primed(int(match.group(1)))
    if not text:
        raise InputFormatError("Empty vertex id.")
    return text


def check_parameters(a: int, n: int) -> int:
    """Validate 1 <= a < n and return b = n - a."""
    if not isinstance(a, (int, np.integer)) or not isinstance(n, (int, np.integer)):
        raise ParameterError("a and n must be integers.")
    if a < 1 or a >= n:
        raise ParameterError(f"Need 1 <= a < n, got a={a}, n={n}.")
    return n - a


class Quiver(Element):
    """
    A quiver stored through its skew-symmetric exchange matrix.

    Vertices keep the order they were given in; every other operation
    addresses them by label. The matrix is a read-only integer array.
    """

    def __init__(self, vertices, frozen, eps, a=None, n=None):
        self.vertices = tuple(vertices)
        assert len(set(self.vertices)) == len(self.vertices), "Duplicate vertex ids."
        self.index = {v: k for k, v in enumerate(self.vertices)}
        frozen = frozenset(frozen)
        for v in frozen:
            if v not in self.index:
                raise VertexNotFoundError(f"Frozen vertex {v} is not a vertex.")
        self.frozen = frozen
        matrix = np.array(eps, dtype=np.int64).reshape(len(self.vertices), len(self.vertices))
        if not np.array_equal(matrix, -matrix.T):
            raise ParameterError("Exchange matrix must be skew-symmetric.")
        matrix.setflags(write=False)
        self._eps = matrix
        self.a = a
        self.n = n

    @classmethod
    def from_arrows(cls, vertices, frozen, arrows, a=None, n=None) -> "Quiver":
        """Build a quiver from (tail, head) arrows; opposite arrows cancel."""
        vertices = list(vertices)
        index = {v: k for k, v in enumerate(vertices)}
        eps = np.zeros((len(vertices), len(vertices)), dtype=np.int64)
        for arrow in arrows:
            tail, head = arrow[0], arrow[1]
            mult = arrow[2] if len(arrow) > 2 else 1
            assert tail != head, "Loops are not allowed."
            if tail not in index or head not in index:
                raise VertexNotFoundError(f"Arrow {tail}->{head} uses an unknown vertex.")
            eps[index[head], index[tail]] += mult
            eps[index[tail], index[head]] -= mult
        return cls(vertices, frozen, eps, a=a, n=n)

    # ---------------------------------------------------------------------
    # Accessors
    # ---------------------------------------------------------------------

    @property
    def matrix(self) -> np.ndarray:
        return self._eps

    def _idx(self, v) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise VertexNotFoundError(f"{v} is not a vertex of the quiver.")

    def epsilon(self, f, g) -> int:
        return int(self._eps[self._idx(f), self._idx(g)])

    def is_frozen(self, v) -> bool:
        self._idx(v)
        return v in self.frozen

    @property
    def unfrozen(self) -> list:
        return [v for v in self.vertices if v not in self.frozen]

    @property
    def frozen_vertices(self) -> list:
        return [v for v in self.vertices if v in self.frozen]

    def arrows(self) -> list:
        """All arrows as (tail, head, multiplicity)."""
        result = []
        for u in self.vertices:
            for v in self.vertices:
                m = int(self._eps[self.index[v], self.index[u]])
                if m > 0:
                    result.append((u, v, m))
        return result

    def __len__(self):
        return len(self.vertices)

    # ---------------------------------------------------------------------
    # Mutation
    # ---------------------------------------------------------------------

    def mutate(self, k) -> "Quiver":
        """
        Mutate at the unfrozen vertex k by the matrix rule

            ε′_{ij} = −ε_{ij}                                    if k ∈ {i, j}
            ε′_{ij} = ε_{ij} + sgn(ε_{ik})·max(ε_{ik}ε_{kj}, 0)   otherwise.

        Frozen pairs follow the same rule.
        """
        kk = self._idx(k)
        if k in self.frozen:
            raise MutationAtFrozenError(f"Cannot mutate at frozen vertex {k}.")
        B = self._eps
        col = B[:, kk]
        row = B[kk, :]
        Bp = B + np.sign(col)[:, None] * np.maximum(np.outer(col, row), 0)
        Bp[kk, :] = -B[kk, :]
        Bp[:, kk] = -B[:, kk]
        return Quiver(self.vertices, self.frozen, Bp, a=self.a, n=self.n)

    def mutate_sequence(self, ks) -> "Quiver":
        Q = self
        for k in ks:
            Q = Q.mutate(k)
        return Q

    # ---------------------------------------------------------------------
    # Checks
    # ---------------------------------------------------------------------

    def is_optimized(self, i) -> bool:
        """True iff ε_{ki} >= 0 for every unfrozen k (all arrows at i point away from i)."""
        ii = self._idx(i)
        if i not in self.frozen:
            raise ParameterError(f"is_optimized needs a frozen vertex, {i} is unfrozen.")
        return all(self._eps[self.index[k], ii] >= 0 for k in self.unfrozen)

    def uf_rank(self) -> int:
        """Rank over Q of ε restricted to all vertices × unfrozen vertices."""
        cols = [self.index[v] for v in self.unfrozen]
        if not cols:
            return 0
        return RatMatrix(self._eps[:, cols].tolist()).rank()

    # ---------------------------------------------------------------------
    # Relabelling / comparison
    # ---------------------------------------------------------------------

    def relabel(self, mapping) -> "Quiver":
        """Rename vertices; vertices missing from mapping keep their label."""
        new_vertices = [mapping.get(v, v) for v in self.vertices]
        if len(set(new_vertices)) != len(new_vertices):
            raise ParameterError("Relabelling is not injective.")
        new_frozen = {mapping.get(v, v) for v in self.frozen}
        return Quiver(new_vertices, new_frozen, self._eps, a=self.a, n=self.n)

    def subquiver(self, vertices) -> "Quiver":
        vertices = list(vertices)
        idx = [self._idx(v) for v in vertices]
        eps = self._eps[np.ix_(idx, idx)]
        return Quiver(vertices, [v for v in vertices if v in self.frozen], eps, a=self.a, n=self.n)

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        if set(self.vertices) != set(other.vertices) or self.frozen != other.frozen:
            return False
        perm = [other.index[v] for v in self.vertices]
        return np.array_equal(self._eps, other._eps[np.ix_(perm, perm)])

    def __hash__(self):
        return hash((frozenset(self.vertices), self.frozen))

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.frozen)} frozen, {len(self.arrows())} arrows)"

    def to_networkx(self) -> nx.DiGraph:
        """
        Directed graph with one edge per arrow; the multiplicity is the edge weight.

        Node attribute "key" pins unfrozen vertices to themselves and lets
        frozen (resp. primed) vertices match any frozen (resp. primed) vertex.
        """
        G = nx.DiGraph()
        for v in self.vertices:
            if v not in self.frozen:
                key = ("unfrozen", str(v))
            elif isinstance(v, Primed):
                key = ("primed",)
            else:
                key = ("frozen",)
            G.add_node(v, key=key)
        for u, v, m in self.arrows():
            G.add_edge(u, v, weight=m)
        return G

    # ---------------------------------------------------------------------
    # Serialization
    # ---------------------------------------------------------------------

    def to_json(self):
        return {
            "a": self.a,
            "n": self.n,
            "vertices": [{"id": str(v), "frozen": v in self.frozen} for v in self.vertices],
            "eps": self._eps.tolist(),
        }

    @classmethod
    def from_json(cls, data):
        try:
            vertices = [parse_vertex(item["id"]) for item in data["vertices"]]
            frozen = [v for v, item in zip(vertices, data["vertices"]) if item.get("frozen", False)]
            eps = data["eps"]
        except (KeyError, TypeError) as exc:
            raise InputFormatError(f"Malformed quiver JSON: {exc}")
        if len(eps) != len(vertices) or any(len(row) != len(vertices) for row in eps):
            raise DimensionError("eps must be a square matrix over the vertex list.")
        return cls(vertices, frozen, eps, a=data.get("a"), n=data.get("n"))

    @classmethod
    def parse(cls, filename):
        """
        Read a quiver from the data directory.

        JSON files use the to_json layout. Text files list one vertex per
        line (prefixed with * when frozen) followed by arrow lines "(A, B)".
        """
        if not str(filename).endswith(".txt"):
            return super().parse(filename)
        filepath = data_path(filename)
        vertices, frozen, arrows = [], [], []
        with open(filepath, "r") as file:
            for line in file:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if line[0] == '(' and ',' in line and not _GRID_RE.match(line):  # arrow
                    names = [parse_vertex(x) for x in line[1:-1].split(", ")]
                    if len(names) != 2:
                        raise InputFormatError(f"Bad arrow line {line!r} in {filename}")
                    arrows.append((names[0], names[1]))
                elif line[0] == '*':  # frozen vertex
                    v = parse_vertex(line[1:])
                    vertices.append(v)
                    frozen.append(v)
                else:  # vertex
                    vertices.append(parse_vertex(line))
        return cls.from_arrows(vertices, frozen, arrows)


# ---------------------------------------------------------------------
# The standard quivers
# ---------------------------------------------------------------------

def frozen_vertex(a: int, n: int, i: int) -> Grid:
    """Grid vertex carrying the frozen label i (1 <= i <= n)."""
    b = check_parameters(a, n)
    if i < 1 or i > n:
        raise ParameterError(f"Frozen labels run over 1..{n}, got {i}.")
    if i <= a:
        return Grid(i, b)
    if i < n:
        return Grid(a, n - i)
    return Grid(0, 0)


def frozen_index(a: int, n: int, v) -> int:
    """Inverse of frozen_vertex."""
    for i in range(1, n + 1):
        if frozen_vertex(a, n, i) == v:
            return i
    raise ParameterError(f"{v} is not a frozen vertex of Q_({a},{n}).")


def grid_vertices(a: int, n: int) -> list:
    b = check_parameters(a, n)
    return [Grid(0, 0)] + [Grid(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]


@lru_cache(maxsize=None)
def standard_quiver(a: int, n: int) -> Quiver:
    """
    The quiver Q_{a,n} on {(0,0)} ∪ {(i,j): 1<=i<=a, 1<=j<=b}.

    Arrows: (i,j−1)→(i,j) for i < a, (i−1,j)→(i,j), (i+1,j+1)→(i,j),
    (0,0)→(1,1) and (a,1)→(0,0). Frozen: (0,0), the last column and the
    last row.
    """
    b = check_parameters(a, n)
    vertices = grid_vertices(a, n)
    frozen = [Grid(0, 0)] + [Grid(i, b) for i in range(1, a + 1)] + [Grid(a, j) for j in range(1, b)]
    arrows = []
    for i in range(1, a):
        for j in range(2, b + 1):
            arrows.append((Grid(i, j - 1), Grid(i, j)))
    for i in range(2, a + 1):
        for j in range(1, b + 1):
            arrows.append((Grid(i - 1, j), Grid(i, j)))
    for i in range(1, a):
        for j in range(1, b):
            arrows.append((Grid(i + 1, j + 1), Grid(i, j)))
    arrows.append((Grid(0, 0), Grid(1, 1)))
    arrows.append((Grid(a, 1), Grid(0, 0)))
    logger.debug("standard_quiver(%d, %d): %d vertices, %d arrow entries", a, n, len(vertices), len(arrows))
    return Quiver.from_arrows(vertices, set(frozen), arrows, a=a, n=n)


@lru_cache(maxsize=None)
def extended_quiver(a: int, n: int) -> Quiver:
    """Q_{a,n} plus a frozen vertex i′ and an arrow i → i′ for every frozen label i."""
    Q = standard_quiver(a, n)
    vertices = list(Q.vertices) + [Primed(i) for i in range(1, n + 1)]
    arrows = [(u, v, m) for u, v, m in Q.arrows()]
    arrows += [(frozen_vertex(a, n, i), Primed(i)) for i in range(1, n + 1)]
    frozen = set(Q.frozen) | {Primed(i) for i in range(1, n + 1)}
    return Quiver.from_arrows(vertices, frozen, arrows, a=a, n=n)


def rho_sequence(a: int, n: int) -> list:
    """μ_{(a−1,1)}, …, μ_{(1,1)}, μ_{(a−1,2)}, …, μ_{(1,b−1)} in application order."""
    b = check_parameters(a, n)
    return [Grid(i, j) for j in range(1, b) for i in range(a - 1, 0, -1)]


# ---------------------------------------------------------------------
# Rotation isomorphism
# ---------------------------------------------------------------------

def isomorphisms(source: Quiver, target: Quiver):
    """
    Iterate over vertex bijections source → target that fix every unfrozen
    vertex, send frozen to frozen and primed to primed, and carry ε to ε.
    """
    matcher = isomorphism.DiGraphMatcher(
        source.to_networkx(),
        target.to_networkx(),
        node_match=isomorphism.categorical_node_match("key", None),
        edge_match=isomorphism.numerical_edge_match("weight", 1),
    )
    return matcher.isomorphisms_iter()


def _shift_candidate(a: int, n: int, extended: bool) -> dict:
    mapping = {frozen_vertex(a, n, i): frozen_vertex(a, n, i % n + 1) for i in range(1, n + 1)}
    if extended:
        mapping.update({Primed(i): Primed(i % n + 1) for i in range(1, n + 1)})
    return mapping


def rotation_permutation(a: int, n: int, extended: bool = False) -> dict:
    """
    The relabelling σ with σ(ρQ) = Q, fixing unfrozen vertices.

    When the isomorphism is not unique the one shifting frozen labels
    i ↦ i+1 is preferred.
    """
    return dict(_rotation_search(a, n, extended))


@lru_cache(maxsize=None)
def _rotation_search(a: int, n: int, extended: bool) -> tuple:
    Q = extended_quiver(a, n) if extended else standard_quiver(a, n)
    rotated = Q.mutate_sequence(rho_sequence(a, n))
    found = list(islice(isomorphisms(rotated, Q), 2))
    if not found:
        raise ParameterError(f"rho(Q) is not isomorphic to Q for a={a}, n={n}.")
    if len(found) == 1:
        sigma = found[0]
        logger.debug("rotation_permutation(%d, %d): unique isomorphism", a, n)
    else:
        shift = _shift_candidate(a, n, extended)
        if rotated.relabel(shift) == Q:
            sigma = {v: shift.get(v, v) for v in rotated.vertices}
            logger.debug("rotation_permutation(%d, %d): several isomorphisms, took the label shift", a, n)
        else:
            sigma = found[0]
            logger.debug("rotation_permutation(%d, %d): several isomorphisms, shift invalid, took the first", a, n)
    return tuple(sigma.items())


def rotate_quiver(a: int, n: int, extended: bool = False) -> Quiver:
    """ρQ relabelled by the rotation permutation; equals Q."""
    Q = extended_quiver(a, n) if extended else standard_quiver(a, n)
    return Q.mutate_sequence(rho_sequence(a, n)).relabel(rotation_permutation(a, n, extended))


def optimized_quiver(a: int, n: int, i: int) -> Quiver:
    """ρ^{n−i}Q_{a,n} without relabelling; optimized at frozen vertex i."""
    Q = standard_quiver(a, n)
    frozen_vertex(a, n, i)
    seq = rho_sequence(a, n)
    for _ in range((n - i) % n):
        Q = Q.mutate_sequence(seq)
    return Q
