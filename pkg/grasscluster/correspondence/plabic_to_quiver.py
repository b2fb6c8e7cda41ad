# --------------------------------------------------
# Faces of a reduced plabic graph ↔ vertices of its quiver, with the
# dominating set of each face read as a Plücker coordinate.
#
# The public API surfaced by `PlabicToQuiverCorrespondence` is:
#
#   * source_to_target()      ― face ↦ quiver vertex
#   * forward(face)           ― the quiver vertex of a face
#   * backward(v)             ― the face of a quiver vertex
#   * exchange_holds(f, M)    ― Plücker exchange of the square move at f
#   * test_correspondence()   ― vertex bijection, |I(f)| = a, distinct sets,
#                               exchange at every square face, ρ schedule
# --------------------------------------------------

from grasscluster.correspondence.correspondence import Correspondence
from grasscluster.element.matrix import RatMatrix, plucker, random_generic_matrix
from grasscluster.element.plabic.plabic_graph import (
    PlabicGraph,
    quiver_of,
    rho_schedule_labels,
    square_move,
)
from grasscluster.element.seed import rotated_label
from grasscluster.errors import MoveNotApplicableError


class PlabicToQuiverCorrespondence(Correspondence):

    def __init__(self, graph: PlabicGraph, debug: bool = False):
        super().__init__(graph, quiver_of(graph), debug)

    def source_to_target(self) -> None:
        for face, label in self.source.face_names().items():
            self.add_source_to_target_by_pair(face, label)
            self._debug_print(f"  {label}: I = {sorted(self.source.dominating_sets[face])}")

    def forward(self, face):
        return self.source.face_name(face)

    def backward(self, v):
        return self.source.find_face(v)

    def exchange_holds(self, f, M: RatMatrix) -> bool:
        """
        Δ_{I(f)} Δ_{I(f′)} = ∏ over in-neighbors + ∏ over out-neighbors,
        where f′ is f after the square move.
        """
        G, Q = self.source, self.target
        moved = square_move(G, f)
        before = plucker(M, sorted(G.dominating_sets[G.find_face(f)]))
        after = plucker(M, sorted(moved.dominating_sets[moved.find_face(f)]))
        incoming = outgoing = 1
        for v in Q.vertices:
            m = Q.epsilon(f, v)
            delta = plucker(M, sorted(G.dominating_sets[G.find_face(v)]))
            if m > 0:
                incoming *= delta ** m
            elif m < 0:
                outgoing *= delta ** (-m)
        holds = before * after == incoming + outgoing
        self._debug_print(f"exchange at {f}: {holds}")
        return holds

    def square_faces(self) -> list:
        """Quiver vertices where square_move applies."""
        result = []
        for v in self.target.unfrozen:
            try:
                square_move(self.source, v)
            except MoveNotApplicableError:
                continue
            result.append(v)
        return result

    def test_correspondence(self, seed: int = 0) -> tuple:
        """
        (faces ↔ quiver vertices, every |I(f)| = a, sets pairwise distinct,
        exchange relation at every square face on a random point of 𝒢r(a,n),
        ρ schedule on dominating sets ends at the rotated labels).
        """
        G = self.source
        if not self.source_to_target_dict:
            self.source_to_target()
        bijective = set(self.target_to_source()) == set(self.target.vertices)
        sets = list(G.dominating_sets.values())
        sizes = all(len(s) == G.a for s in sets)
        distinct = len(set(sets)) == len(sets)
        self._debug_print(f"bijective={bijective} sizes={sizes} distinct={distinct}")

        M = random_generic_matrix(G.a, G.n, seed)
        exchange = all(self.exchange_holds(f, M) for f in self.square_faces())

        labels, _ = rho_schedule_labels(G.a, G.n)
        schedule = all(labels[v] == rotated_label(G.a, G.n, v) for v in self.target.unfrozen
                       if v in labels)
        self._debug_print(f"exchange={exchange} schedule={schedule}")
        return bijective, sizes, distinct, exchange, schedule
