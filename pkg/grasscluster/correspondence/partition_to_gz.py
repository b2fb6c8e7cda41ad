# --------------------------------------------------
# Plane partitions in an a×b×c box ↔ integral points of the tropical cone
# 𝒲^t >= 0 with l_{0,0} = c.
#
# The public API surfaced by `PartitionToGZCorrespondence` is:
#
#   * source_to_target()      ― pair every π ∈ P(a,b,c) with its GZ vector
#   * forward(pi)             ― π ↦ l
#   * backward(l)             ― l ↦ π (NotInConeError outside the cone)
#   * test_correspondence()   ― image = cone, round trip, η = R^t pointwise
# --------------------------------------------------

from grasscluster.correspondence.correspondence import Correspondence
from grasscluster.element.plane_partition import PlanePartition, _check_box_parameters, enumerate_partitions
from grasscluster.space.tropical import (
    GZVector,
    bijection,
    cone_members,
    inverse_bijection,
    partition_point,
    trop_rotate,
)


class PartitionToGZCorrespondence(Correspondence):
    """P(a,b,c) → Q(a,b,c), with the toggle sequence η on one side and the tropical rotation on the other."""

    def __init__(self, a: int, b: int, c: int, debug: bool = False):
        """
        Parameters
        ----------
        a, b, c : int
            Box dimensions; P(a,b,c) is the source, the integral cone points
            with l_{0,0} = c the target.
        debug : bool, optional
            If True, trace every pairing through the module logger.
        """
        _check_box_parameters(a, b, c)
        super().__init__(list(enumerate_partitions(a, b, c)), None, debug)
        self.a, self.b, self.c = a, b, c

    def source_to_target(self) -> None:
        self._debug_print(f"Pairing {len(self.source)} plane partition(s) of the {self.a}x{self.b}x{self.c} box.")
        for pi in self.source:
            l = self.forward(pi)
            self.add_source_to_target_by_pair(pi, l)
            self._debug_print(f"  {pi.tolist()} -> {l.tolist()}")
        self.target = [l for targets in self.source_to_target_dict.values() for l in targets]

    def forward(self, pi: PlanePartition) -> GZVector:
        return bijection(pi, self.c)

    def backward(self, l: GZVector) -> PlanePartition:
        return inverse_bijection(l)

    def test_correspondence(self) -> tuple:
        """(image is the whole cone, backward∘forward = id, η matches the tropical rotation)."""
        if not self.source_to_target_dict:
            self.source_to_target()
        image = set(self.target)
        cone = set(cone_members(self.a, self.b, self.c))
        onto = image == cone
        self._debug_print(f"image {len(image)} vs cone {len(cone)}: {onto}")

        round_trip = all(self.backward(self.forward(pi)) == pi for pi in self.source)
        self._debug_print(f"round trip: {round_trip}")

        equivariant = True
        for pi in self.source:
            rotated = trop_rotate(partition_point(pi, self.c), method="both")
            if rotated != partition_point(pi.eta(self.c), self.c):
                self._debug_print(f"  η and R^t disagree at {pi.tolist()}")
                equivariant = False
                break
        self._debug_print(f"equivariance: {equivariant}")
        return onto, round_trip, equivariant
