# this file introduces users to Quiver and the rotation by mutation

from grasscluster.element import Grid, standard_quiver, extended_quiver, rho_sequence
from grasscluster.element.quiver import rotation_permutation, vertex_str


def main():
    Q = standard_quiver(3, 6)
    print("Q_{3,6} has", len(Q), "vertices,", len(Q.frozen_vertices), "frozen")
    for tail, head, mult in Q.arrows():
        print(f"  {vertex_str(tail)} -> {vertex_str(head)}" + (f" x{mult}" if mult > 1 else ""))

    # Mutation is an involution at every unfrozen vertex
    k = Grid(1, 1)
    assert Q.mutate(k).mutate(k) == Q
    print("epsilon((1,2), (1,1)) before and after mutating at (1,1):",
          Q.epsilon(Grid(1, 2), k), Q.mutate(k).epsilon(Grid(1, 2), k))

    # rho is a fixed sequence of mutations; a relabelling of frozen vertices undoes it
    sequence = rho_sequence(3, 6)
    print("rho:", ", ".join(vertex_str(v) for v in sequence))
    sigma = rotation_permutation(3, 6)
    print("sigma moves:", {vertex_str(u): vertex_str(v) for u, v in sigma.items() if u != v})
    print("sigma(rho Q) == Q:", Q.mutate_sequence(sequence).relabel(sigma) == Q)

    # The extended quiver carries one primed frozen vertex per boundary label
    E = extended_quiver(3, 6)
    print("extended quiver:", len(E), "vertices, unfrozen rank", E.uf_rank())


if __name__ == "__main__":
    main()
