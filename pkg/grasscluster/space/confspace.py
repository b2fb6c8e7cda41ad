# --------------------------------------------------
# Decorated configurations (V, λ) and their cluster coordinates.
#
# A configuration is one lifted representative: an a×n matrix with
# columns v_1..v_n and scaling factors λ_1..λ_n. The isomorphism φ acts by
#
#     φ(v_{i+1}) = λ_i v_i            (i != n)
#     φ(v_1)     = (−1)^{a−1} λ_n v_n
#
# Everything below is computed exactly, and the same quantity is usually
# reachable two ways (geometric determinant ratio vs. cluster monomial);
# the checks at the bottom compare them.
# --------------------------------------------------

import logging
from fractions import Fraction
from functools import cached_property

import numpy as np

from grasscluster.element.element import Element
from grasscluster.element.matrix import (
    RatMatrix,
    cyclic_window,
    determinant,
    random_generic_matrix,
    rational_str,
    sorted_plucker,
    to_rational,
    wrap_index,
)
from grasscluster.element.quiver import (
    Grid,
    Primed,
    check_parameters,
    extended_quiver,
    grid_vertices,
    rho_sequence,
    rotation_permutation,
    standard_quiver,
)
from grasscluster.element.seed import ASeed, XSeed, plucker_label
from grasscluster.errors import (
    DimensionError,
    InputFormatError,
    NonGenericError,
    ParameterError,
)

logger = logging.getLogger(__name__)


class DecoratedConfiguration(Element):
    """
    A point of the decorated configuration space, stored as (V, λ).

    Every cyclic window of a consecutive columns must be independent and
    every λ_i nonzero.
    """

    def __init__(self, a: int, n: int, V: RatMatrix, lam):
        check_parameters(a, n)
        if not isinstance(V, RatMatrix):
            V = RatMatrix(V)
        if V.shape != (a, n):
            raise DimensionError(f"V must be {a}x{n}, got {V.rows}x{V.cols}.")
        lam = tuple(to_rational(x) for x in lam)
        if len(lam) != n:
            raise DimensionError(f"Need {n} scaling factors, got {len(lam)}.")
        if any(x == 0 for x in lam):
            raise NonGenericError("Scaling factors must be nonzero.")
        self.a = a
        self.n = n
        self.V = V
        self.lam = lam
        for i in range(1, n + 1):
            if self.window_det(i) == 0:
                raise NonGenericError(f"Columns {cyclic_window(i - a + 1, i, n)} are dependent.")

    # ---------------------------------------------------------------------
    # Basic pieces
    # ---------------------------------------------------------------------

    @property
    def b(self) -> int:
        return self.n - self.a

    @property
    def sign(self) -> int:
        """(−1)^{a−1}, the twist carried by φ(v_1)."""
        return -1 if self.a % 2 == 0 else 1

    def lam_at(self, i: int) -> Fraction:
        return self.lam[wrap_index(i, self.n) - 1]

    def v(self, i: int) -> tuple:
        return self.V.column(wrap_index(i, self.n) - 1)

    def phi_image(self, i: int) -> tuple:
        """φ(v_{i+1}): λ_i v_i, with the extra sign when i ≡ n."""
        i = wrap_index(i, self.n)
        scale = self.lam_at(i) * (self.sign if i == self.n else 1)
        return tuple(scale * x for x in self.v(i))

    def phi_of(self, k: int) -> tuple:
        """φ(v_k)."""
        return self.phi_image(k - 1)

    def _det(self, columns) -> Fraction:
        return determinant(RatMatrix.from_columns(columns))

    def window_det(self, i: int) -> Fraction:
        """det(v_{i−a+1}, …, v_i) with columns in the written cyclic order."""
        return self._det([self.v(k) for k in range(i - self.a + 1, i + 1)])

    def minor(self, indices) -> Fraction:
        """Δ on a cyclic index set, sorted ascending after reduction mod n."""
        return sorted_plucker(self.V, indices)

    # ---------------------------------------------------------------------
    # Boundary functions and potential
    # ---------------------------------------------------------------------

    def theta_geometric(self, i: int) -> Fraction:
        """ϑ_i = det(φ(v_{i−a+1}), v_{i−a+2}, …, v_i) / det(v_{i−a+1}, …, v_i)."""
        den = self.window_det(i)
        if den == 0:
            raise NonGenericError(f"Window ending at {i} is dependent.")
        start = i - self.a + 1
        num = self._det([self.phi_of(start)] + [self.v(k) for k in range(start + 1, i + 1)])
        return num / den

    def potential(self) -> Fraction:
        return sum((self.theta_geometric(i) for i in range(1, self.n + 1)), Fraction(0))

    def theta_cluster(self, i: int) -> Fraction:
        """ϑ_i as the rectangle sum in the X-coordinates of Q_{a,n}."""
        a, b, n = self.a, self.b, self.n
        i = wrap_index(i, n)
        X = self.x_values
        if i == n:
            return X[Grid(0, 0)]
        if i == a:
            return X[Grid(a, b)]
        total = Fraction(0)
        if i < a:
            # row i, from column j to b
            for j in range(1, b + 1):
                term = Fraction(1)
                for l in range(j, b + 1):
                    term *= X[Grid(i, l)]
                total += term
        else:
            # column n−i, from row j to a
            col = n - i
            for j in range(1, a + 1):
                term = Fraction(1)
                for k in range(j, a + 1):
                    term *= X[Grid(k, col)]
                total += term
        return total

    def potential_cluster(self) -> Fraction:
        return sum((self.theta_cluster(i) for i in range(1, self.n + 1)), Fraction(0))

    def potential_gz(self) -> Fraction:
        """𝒲 = L_00/L_11 + L_ab + Σ L_{i,j}/L_{i+1,j} + Σ L_{i,j}/L_{i,j+1}."""
        a, b = self.a, self.b
        L = self.gz_values
        total = L[Grid(0, 0)] / L[Grid(1, 1)] + L[Grid(a, b)]
        for i in range(1, a):
            for j in range(1, b + 1):
                total += L[Grid(i, j)] / L[Grid(i + 1, j)]
        for j in range(1, b):
            for i in range(1, a + 1):
                total += L[Grid(i, j)] / L[Grid(i, j + 1)]
        return total

    # ---------------------------------------------------------------------
    # Cluster coordinates
    # ---------------------------------------------------------------------

    def a_value(self, vertex) -> Fraction:
        """A_{(i,j)} = Δ_{I(i,j)}; A_{i′} = λ_{i−a} Δ_{{i−a..i−1}} / Δ_{{i−a+1..i}}."""
        a, n = self.a, self.n
        if isinstance(vertex, Primed):
            i = vertex.i
            num = self.minor(range(i - a, i))
            den = self.minor(range(i - a + 1, i + 1))
            if den == 0:
                raise NonGenericError(f"Vanishing minor at primed vertex {vertex}.")
            return self.lam_at(i - a) * num / den
        value = self.minor(plucker_label(a, n, vertex))
        if value == 0:
            raise NonGenericError(f"Vanishing Plücker coordinate at {vertex}.")
        return value

    def grassmannian_seed(self) -> ASeed:
        """A-seed on the extended quiver Q̃_{a,n}."""
        Q = extended_quiver(self.a, self.n)
        return ASeed(Q, {v: self.a_value(v) for v in Q.vertices})

    @cached_property
    def x_values(self) -> dict:
        """X_g = ∏_{f} A_f^{ε̃_{fg}} for every grid vertex g (frozen included)."""
        xs = self.grassmannian_seed().p_map()
        return {v: xs[v] for v in grid_vertices(self.a, self.n)}

    def x_value(self, g) -> Fraction:
        if isinstance(g, tuple):
            g = Grid(*g)
        try:
            return self.x_values[g]
        except KeyError:
            raise ParameterError(f"{g} is not a grid vertex of Q_({self.a},{self.n}).")

    def x_seed(self) -> XSeed:
        return XSeed(standard_quiver(self.a, self.n), self.x_values)

    def frozen_x_closed_form(self, i: int) -> Fraction:
        """
        Frozen X-values with an unambiguous closed form:
        i = n: λ_b Δ_{{b,b+2..n}} / Δ_{{b+1..n}};  i = a: λ_n Δ_{{2..a,n}} / Δ_{{1..a}}.
        """
        a, b, n = self.a, self.b, self.n
        if i == n:
            return self.lam_at(b) * self.minor([b] + list(range(b + 2, n + 1))) / self.minor(range(b + 1, n + 1))
        if i == a:
            return self.lam_at(n) * self.minor(list(range(2, a + 1)) + [n]) / self.minor(range(1, a + 1))
        raise ParameterError(f"No sign-unambiguous closed form for frozen vertex {i}.")

    def monodromy(self) -> Fraction:
        """P = ∏ λ_i."""
        result = Fraction(1)
        for x in self.lam:
            result *= x
        return result

    def weight(self, k: int) -> Fraction:
        """M_k = det(φ(v_{k−a+1}), …, φ(v_k)) / det(v_{k−a+1}, …, v_k)."""
        den = self.window_det(k)
        if den == 0:
            raise NonGenericError(f"Window ending at {k} is dependent.")
        num = self._det([self.phi_of(m) for m in range(k - self.a + 1, k + 1)])
        return num / den

    def weights(self) -> list:
        return [self.weight(k) for k in range(1, self.n + 1)]

    @cached_property
    def gz_values(self) -> dict:
        """L_{i,j} = ∏_{k>=i, l>=j} X_{k,l}; L_{0,0} is the product over all vertices."""
        a, b = self.a, self.b
        X = self.x_values
        L = {}
        for i in range(a, 0, -1):
            for j in range(b, 0, -1):
                value = X[Grid(i, j)]
                value *= L.get(Grid(i + 1, j), 1) * L.get(Grid(i, j + 1), 1)
                value /= L.get(Grid(i + 1, j + 1), 1)
                L[Grid(i, j)] = value
        L[Grid(0, 0)] = X[Grid(0, 0)] * L[Grid(1, 1)]
        return L

    def gz_value(self, vertex) -> Fraction:
        if isinstance(vertex, tuple):
            vertex = Grid(*vertex)
        try:
            return self.gz_values[vertex]
        except KeyError:
            raise ParameterError(f"{vertex} has no Gelfand-Zetlin coordinate.")

    def lexp_value(self, vertex) -> Fraction:
        """(A_{i−1,j−1} / A_{i,j}) · ∏_{k=i−a}^{b−j} λ_k, with A_{i,0} = A_{0,j} = A_{0,0}."""
        i, j = vertex.i, vertex.j
        previous = Grid(i - 1, j - 1) if i > 1 and j > 1 else Grid(0, 0)
        value = self.a_value(previous) / self.a_value(vertex)
        for k in range(i - self.a, self.b - j + 1):
            value *= self.lam_at(k)
        return value

    # ---------------------------------------------------------------------
    # Symmetries
    # ---------------------------------------------------------------------

    def rotate(self) -> "DecoratedConfiguration":
        """R: columns ((−1)^{a−1} v_n, v_1, …, v_{n−1}) and λ′_k = λ_{k−1}."""
        columns = [tuple(self.sign * x for x in self.v(self.n))] + [self.v(k) for k in range(1, self.n)]
        lam = [self.lam_at(k - 1) for k in range(1, self.n + 1)]
        return DecoratedConfiguration(self.a, self.n, RatMatrix.from_columns(columns), lam)

    def rotate_power(self, k: int) -> "DecoratedConfiguration":
        cfg = self
        for _ in range(k % self.n):
            cfg = cfg.rotate()
        return cfg

    def act_sl(self, g: RatMatrix) -> "DecoratedConfiguration":
        """Left multiplication of V by g (any invertible a×a matrix)."""
        return DecoratedConfiguration(self.a, self.n, g @ self.V, self.lam)

    def phi_matrices(self) -> list:
        """
        Φ_1, …, Φ_n with U_{i−1} = Φ_i U_i, where U_i stacks u_i, …, u_{i−a+1}
        and u_n = v_n, u_{k−1} = φ(u_k). Their product is (−1)^{a−1} P · Id.
        """
        a, n = self.a, self.n
        u = {n: self.v(n)}
        coef = Fraction(1)
        for k in range(n, 1 - a, -1):
            # u_k = coef · v_k
            idx = wrap_index(k, n)
            coef *= self.lam_at(idx - 1) * (self.sign if idx == 1 else 1)
            u[k - 1] = tuple(coef * x for x in self.v(k - 1))
        matrices = []
        for i in range(1, n + 1):
            basis = RatMatrix.from_columns([u[i - r] for r in range(a)])
            coeffs = basis.solve(u[i - a])
            rows = [[1 if c == r + 1 else 0 for c in range(a)] for r in range(a - 1)]
            rows.append(coeffs)
            matrices.append(RatMatrix(rows))
        return matrices

    def rw_potential(self) -> Fraction:
        """
        𝒲_q = q·Δ_{{1,b+1..n−1}}/Δ_{{b+1..n}} + Σ_{i=1}^{n−1} Δ_{{i−a+1..i−1,i+1}}/Δ_{{i−a+1..i}}
        on the orbit matrix W = (u, φ(u), …, φ^{n−1}(u)), u = v_{b−a}, q = P.
        """
        a, b, n = self.a, self.b, self.n
        W = self.orbit_matrix(b - a)
        q = self.monodromy()
        total = q * sorted_plucker(W, [1] + list(range(b + 1, n))) / sorted_plucker(W, range(b + 1, n + 1))
        for i in range(1, n):
            num = sorted_plucker(W, list(range(i - a + 1, i)) + [i + 1])
            den = sorted_plucker(W, range(i - a + 1, i + 1))
            total += num / den
        return total

    def orbit_matrix(self, start: int) -> RatMatrix:
        """Columns w_k = φ^{k−1}(v_start), k = 1..n."""
        idx = wrap_index(start, self.n)
        scale = Fraction(1)
        columns = []
        for _ in range(self.n):
            columns.append(tuple(scale * x for x in self.v(idx)))
            scale *= self.lam_at(idx - 1) * (self.sign if idx == 1 else 1)
            idx = wrap_index(idx - 1, self.n)
        return RatMatrix.from_columns(columns)

    def gz_recursion(self) -> dict:
        """
        L′ = L∘R by the birational toggle, in η order:
        L′_{i,j} = S_{i,j} · H_{i,j} / L_{i,j}, where
        S = L′_{i,j−1} + L_{i−1,j} and H = 1 / (1/L′_{i+1,j} + 1/L_{i,j+1}).
        Neighbours outside the a×b grid are left out of S and H; when both are
        missing S = P (at (1,1)) and H = 1 (at (a,b)).
        """
        a, b = self.a, self.b
        P = self.monodromy()
        L = self.gz_values
        new = {}
        for j in range(1, b + 1):
            for i in range(a, 0, -1):
                left_up = [new[Grid(i, j - 1)]] if j > 1 else []
                left_up += [L[Grid(i - 1, j)]] if i > 1 else []
                down_right = [new[Grid(i + 1, j)]] if i < a else []
                down_right += [L[Grid(i, j + 1)]] if j < b else []
                s = sum(left_up, Fraction(0)) if left_up else P
                h = Fraction(1)
                if down_right:
                    inverse = sum((1 / x for x in down_right), Fraction(0))
                    if inverse == 0:
                        raise NonGenericError(f"Vanishing sum in the L recursion at ({i},{j}).")
                    h = 1 / inverse
                if L[Grid(i, j)] == 0:
                    raise NonGenericError(f"Vanishing denominator in the L recursion at ({i},{j}).")
                new[Grid(i, j)] = s * h / L[Grid(i, j)]
        new[Grid(0, 0)] = P
        return new

    # ---------------------------------------------------------------------
    # Comparison / serialization
    # ---------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, DecoratedConfiguration):
            return NotImplemented
        return (self.a, self.n, self.V, self.lam) == (other.a, other.n, other.V, other.lam)

    def __hash__(self):
        return hash((self.a, self.n, self.V, self.lam))

    def __repr__(self):
        return f"DecoratedConfiguration(a={self.a}, n={self.n}, lambda={[rational_str(x) for x in self.lam]})"

    def to_json(self):
        return {
            "a": self.a,
            "n": self.n,
            "V": self.V.to_json(),
            "lambda": [rational_str(x) for x in self.lam],
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data["a"]), int(data["n"]), RatMatrix.from_json(data["V"]), data["lambda"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputFormatError(f"Malformed configuration JSON: {exc}")


# ---------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------

def random_configuration(a: int, n: int, seed: int = 0, positive: bool = False) -> DecoratedConfiguration:
    """Generic configuration: all maximal minors nonzero, λ random nonzero rationals (positive if asked)."""
    V = random_generic_matrix(a, n, seed=seed, positive=positive)
    rng = np.random.default_rng([seed, n, a])
    nums = rng.integers(1, 10, size=n)
    dens = rng.integers(1, 6, size=n)
    signs = np.ones(n, dtype=int) if positive else rng.choice([-1, 1], size=n)
    lam = [Fraction(int(s * x), int(d)) for s, x, d in zip(signs, nums, dens)]
    return DecoratedConfiguration(a, n, V, lam)


# ---------------------------------------------------------------------
# Rotation matrix C_a
# ---------------------------------------------------------------------

def twisted_rotation_matrix(a: int, n: int) -> RatMatrix:
    """C_a: e_i ↦ e_{i−1} (i != 1), e_1 ↦ (−1)^{a−1} e_n."""
    check_parameters(a, n)
    sign = -1 if a % 2 == 0 else 1
    rows = [[0] * n for _ in range(n)]
    for i in range(2, n + 1):
        rows[i - 2][i - 1] = 1
    rows[n - 1][0] = sign
    return RatMatrix(rows)


def apply_c(obj):
    """C_a acting on a configuration (= rotate) or on an a×n representative (right multiplication)."""
    if isinstance(obj, DecoratedConfiguration):
        return obj.rotate()
    if isinstance(obj, RatMatrix):
        return obj @ twisted_rotation_matrix(obj.rows, obj.cols)
    raise ParameterError(f"C_a acts on configurations and matrices, not {type(obj).__name__}.")


# ---------------------------------------------------------------------
# F_k sets
# ---------------------------------------------------------------------

def f_set(a: int, n: int, k: int) -> frozenset:
    """Vertices whose Plücker label contains k, from the staircase description."""
    b = check_parameters(a, n)
    if not 1 <= k <= n:
        raise ParameterError(f"k must lie in 1..{n}, got {k}.")
    cells = set()
    if k <= b:
        for i in range(1, a + 1):
            for j in range(b - k + 1, min(b, i + b - k) + 1):
                cells.add(Grid(i, j))
    else:
        cells.add(Grid(0, 0))
        for i in range(1, a + 1):
            for j in range(1, b + 1):
                if i <= k - b - 1 or i >= k - b + j:
                    cells.add(Grid(i, j))
    return frozenset(cells)


def f_set_by_membership(a: int, n: int, k: int) -> frozenset:
    return frozenset(v for v in grid_vertices(a, n) if k in plucker_label(a, n, v))


# ---------------------------------------------------------------------
# Rotation as mutation
# ---------------------------------------------------------------------

def rotated_x_seed(cfg: DecoratedConfiguration) -> XSeed:
    """The X-seed of cfg mutated along ρ, relabelled onto Q_{a,n}."""
    seed = cfg.x_seed().mutate_sequence(rho_sequence(cfg.a, cfg.n))
    return seed.relabel(rotation_permutation(cfg.a, cfg.n))


# ---------------------------------------------------------------------
# Identity suite
# ---------------------------------------------------------------------

def identity_checks(cfg: DecoratedConfiguration) -> dict:
    """
    Every exact identity a configuration should satisfy, name -> bool.
    """
    a, b, n = cfg.a, cfg.b, cfg.n
    P = cfg.monodromy()
    X = cfg.x_values
    checks = {}

    product_x = Fraction(1)
    for value in X.values():
        product_x *= value
    checks["casimir"] = P == product_x

    geometric = cfg.potential()
    checks["potential_cluster"] = geometric == cfg.potential_cluster()
    checks["potential_gz"] = geometric == cfg.potential_gz()
    checks["potential_rw"] = geometric == cfg.rw_potential()
    checks["theta_rectangles"] = all(cfg.theta_geometric(i) == cfg.theta_cluster(i) for i in range(1, n + 1))

    checks["monodromy_gz"] = cfg.gz_value(Grid(0, 0)) == P
    checks["lexp"] = all(cfg.gz_value(v) == cfg.lexp_value(v)
                         for v in grid_vertices(a, n) if v != Grid(0, 0))

    weights_ok = True
    for k in range(1, n + 1):
        expected = Fraction(1)
        for v in f_set(a, n, k):
            expected *= X[v]
        weights_ok = weights_ok and cfg.weight(k) == expected
    checks["weights"] = weights_ok
    product_m = Fraction(1)
    for m in cfg.weights():
        product_m *= m
    checks["weights_product"] = product_m == P ** a

    product_phi = RatMatrix.identity(a)
    for phi in cfg.phi_matrices():
        product_phi = product_phi @ phi
    checks["phi_product"] = product_phi == RatMatrix.identity(a).scale(cfg.sign * P)

    checks["frozen_x"] = (cfg.frozen_x_closed_form(n) == X[Grid(0, 0)]
                          and cfg.frozen_x_closed_form(a) == X[Grid(a, b)])

    rotated = cfg.rotate()
    mutated = rotated_x_seed(cfg)
    checks["rotation_mutation"] = all(rotated.x_value(v) == mutated[v] for v in grid_vertices(a, n))
    checks["rotation_recursion"] = rotated.gz_values == cfg.gz_recursion()
    moved = apply_c(cfg.V)
    checks["c_pullback"] = all(
        sorted_plucker(moved, plucker_label(a, n, v)) == cfg.minor([x - 1 for x in plucker_label(a, n, v)])
        for v in grid_vertices(a, n))
    logger.debug("identity_checks(a=%d, n=%d): %s", a, n, checks)
    return checks


__all__ = [
    "DecoratedConfiguration", "random_configuration", "twisted_rotation_matrix", "apply_c",
    "f_set", "f_set_by_membership", "rotated_x_seed", "identity_checks",
]
