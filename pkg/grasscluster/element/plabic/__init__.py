from .plabic_graph import (
    Face,
    PlabicGraph,
    bivalent_whites,
    contract_expand,
    face_names,
    faces,
    is_reduced,
    label_mutation,
    outer_face,
    quiver_of,
    rho_schedule_labels,
    square_move,
    standard_graph,
)
from .strand import Strand, dominating_sets, strand_permutation, strands
