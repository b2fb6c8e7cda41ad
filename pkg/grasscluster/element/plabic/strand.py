# --------------------------------------------------
# Zig-zag strands of a plabic graph.
#
# A strand enters at a marked boundary point and follows the rules of the
# road: at a white vertex it leaves along the next edge clockwise from the
# one it came in on, at a black vertex along the next edge counterclockwise.
# Along every edge it runs on the left of its direction of travel, so the
# face to the left of each traversed half-edge lies on its left.
#
#   * trace_strand(G, k)        ― the strand starting at marked point k
#   * strands(G)                ― all n boundary strands
#   * strand_permutation(G)     ― k ↦ endpoint of strand k
#   * faces_left_of(G, strand)  ― faces on the left of a strand
#   * dominating_sets(G)        ― face ↦ {k : face is left of strand k}
#   * reducedness_problems(G)   ― reasons G fails to be reduced (empty if reduced)
# --------------------------------------------------

import logging
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from grasscluster.element.color import VertexColor
from grasscluster.errors import ReducednessError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Strand:
    source: int
    target: int
    half_edges: tuple

    @property
    def edges(self) -> list:
        return [frozenset(h) for h in self.half_edges]

    @property
    def nodes(self) -> tuple:
        return tuple(u for u, _ in self.half_edges) + (self.half_edges[-1][1],)

    def __len__(self):
        return len(self.half_edges)


def trace_strand(G, k: int) -> Strand:
    start = G.boundary_node(k)
    prev, cur = start, G.inner_neighbor(start)
    path = [(prev, cur)]
    limit = 2 * G.edge_count()
    while G.is_internal(cur):
        if G.color(cur) is VertexColor.WHITE:
            nxt = G.cw(cur, prev)
        else:
            nxt = G.ccw(cur, prev)
        prev, cur = cur, nxt
        path.append((prev, cur))
        if len(path) > limit:
            raise ReducednessError(f"Strand {k} does not return to the boundary.")
    return Strand(k, G.boundary_position(cur), tuple(path))


def strands(G) -> dict:
    return {k: trace_strand(G, k) for k in range(1, G.n + 1)}


def strand_permutation(G) -> dict:
    return {k: s.target for k, s in strands(G).items()}


def faces_left_of(G, strand: Strand) -> frozenset:
    """Flood the dual graph from the faces bordering the strand on its left, never crossing its edges."""
    used = set(strand.edges)
    left = {G.left_face(u, v) for u, v in strand.half_edges}
    right = {G.left_face(v, u) for u, v in strand.half_edges}
    if left & right:
        raise ReducednessError(f"Strand {strand.source} has a face on both of its sides.")

    neighbors = defaultdict(set)
    for edge, (f, g) in G.dual_edges().items():
        if edge not in used:
            neighbors[f].add(g)
            neighbors[g].add(f)

    region, frontier = set(left), list(left)
    while frontier:
        f = frontier.pop()
        for g in neighbors[f] - region:
            region.add(g)
            frontier.append(g)
    if region & right:
        raise ReducednessError(f"Strand {strand.source} does not split the disk in two.")
    return frozenset(region)


def dominating_sets(G) -> dict:
    """face ↦ frozenset of strand labels having that face on their left."""
    membership = defaultdict(set)
    for k, strand in strands(G).items():
        for face in faces_left_of(G, strand):
            membership[face].add(k)
    return {face: frozenset(membership[face]) for face in G.faces}


def _bad_double_crossings(first: Strand, second: Strand) -> list:
    pos_first = {e: k for k, e in enumerate(first.edges)}
    pos_second = {e: k for k, e in enumerate(second.edges)}
    common = sorted(set(pos_first) & set(pos_second), key=pos_first.get)
    return [
        (e, f) for e, f in combinations(common, 2)
        if pos_second[e] < pos_second[f]
    ]


def reducedness_problems(G) -> list:
    """Closed strands, self-crossings, parallel bigons and a wrong strand permutation, as messages."""
    problems = []
    try:
        traced = strands(G)
    except ReducednessError as exc:
        return [str(exc)]

    covered = {h for s in traced.values() for h in s.half_edges}
    missing = set(G.half_edges()) - covered
    if missing:
        problems.append(f"{len(missing)} half-edge(s) lie on closed strands.")

    for k, s in traced.items():
        if len(set(s.edges)) != len(s.edges):
            problems.append(f"Strand {k} crosses itself.")

    for s, t in combinations(traced.values(), 2):
        if _bad_double_crossings(s, t):
            problems.append(f"Strands {s.source} and {t.source} form a parallel bigon.")

    wrong = {k: s.target for k, s in traced.items() if s.target != (k + G.a - 1) % G.n + 1}
    if wrong:
        problems.append(f"Strands do not follow i ↦ i+{G.a}: {wrong}")

    logger.debug("reducedness check on %r: %d problem(s)", G, len(problems))
    return problems


__all__ = [
    "Strand", "trace_strand", "strands", "strand_permutation",
    "faces_left_of", "dominating_sets", "reducedness_problems",
]
