# --------------------------------------------------
# The cyclic rotation R of a decorated configuration ↔ the mutation
# sequence ρ on its X-seed followed by the frozen relabelling σ.
#
# The public API surfaced by `RotationToMutationCorrespondence` is:
#
#   * source_to_target()      ― vertex g of Q_{a,n} ↦ vertex of ρQ it becomes under σ⁻¹
#   * forward(g)              ― (ρ-mutated X-seed relabelled by σ)[g]
#   * backward(g)             ― X_g of the rotated configuration
#   * test_correspondence()   ― σ is a quiver isomorphism, values agree,
#                               L′ = L∘R through the GZ recursion
# --------------------------------------------------

from fractions import Fraction

from grasscluster.correspondence.correspondence import Correspondence
from grasscluster.element.quiver import grid_vertices, rho_sequence, rotation_permutation, standard_quiver
from grasscluster.space.confspace import DecoratedConfiguration, rotated_x_seed


class RotationToMutationCorrespondence(Correspondence):
    """Source: a configuration's X-seed on Q_{a,n}. Target: the X-values of its rotation."""

    def __init__(self, cfg: DecoratedConfiguration, debug: bool = False):
        super().__init__(cfg.x_seed(), cfg.rotate(), debug)
        self.cfg = cfg
        self.sigma = rotation_permutation(cfg.a, cfg.n)
        self._mutated = None

    @property
    def mutated(self):
        if self._mutated is None:
            self._mutated = rotated_x_seed(self.cfg)
        return self._mutated

    def source_to_target(self) -> None:
        inverse = {v: u for u, v in self.sigma.items()}
        for g in grid_vertices(self.cfg.a, self.cfg.n):
            self.add_source_to_target_by_pair(g, inverse.get(g, g))
        moved = {g: t for g, ts in self.source_to_target_dict.items() for t in ts if t != g}
        self._debug_print(f"σ moves {len(moved)} vertex label(s): {moved}")

    def forward(self, g) -> Fraction:
        return self.mutated[g]

    def backward(self, g) -> Fraction:
        return self.target.x_value(g)

    def test_correspondence(self) -> tuple:
        """(σ maps ρQ onto Q, every X-value agrees, the GZ recursion gives L∘R)."""
        a, n = self.cfg.a, self.cfg.n
        if not self.source_to_target_dict:
            self.source_to_target()
        moved_quiver = standard_quiver(a, n).mutate_sequence(rho_sequence(a, n)).relabel(self.sigma)
        isomorphic = moved_quiver == standard_quiver(a, n)
        self._debug_print(f"σ(ρQ) = Q: {isomorphic}")

        values_agree = True
        for g in grid_vertices(a, n):
            if self.forward(g) != self.backward(g):
                self._debug_print(f"  X_{g}: mutation gives {self.forward(g)}, rotation gives {self.backward(g)}")
                values_agree = False
        self._debug_print(f"X-values agree: {values_agree}")

        recursion = self.cfg.gz_recursion() == self.target.gz_values
        self._debug_print(f"GZ recursion matches rotation: {recursion}")
        return isomorphic, values_agree, recursion
