# this file introduces users to PlabicGraph, strands and square moves

from grasscluster.element import Grid
from grasscluster.element.plabic import (
    bivalent_whites,
    contract_expand,
    quiver_of,
    square_move,
    standard_graph,
    strand_permutation,
)


def main():
    G = standard_graph(3, 7)
    print(G)

    # Faces are named by the quiver vertex they carry; the dominating set is the Plücker label
    for face in G.faces:
        print(f"  {G.face_name(face)}: {sorted(G.dominating_sets[face])}" + (" (boundary)" if face.is_boundary else ""))

    # Trip permutation of the standard graph shifts by a
    print("strand permutation:", strand_permutation(G))

    # The dual quiver is the standard quiver; a square move is a mutation
    Q = quiver_of(G)
    moved = square_move(G, Grid(1, 1))
    print("square move at (1,1) mutates the quiver:", quiver_of(moved) == Q.mutate(Grid(1, 1)))

    # Contraction-expansion at a bivalent white vertex leaves the quiver alone
    w = bivalent_whites(G)[0]
    print(f"contract-expand at {w} keeps the quiver:", quiver_of(contract_expand(G, w)) == Q)

    # Graphviz output
    print(G.to_dot())


if __name__ == "__main__":
    main()
