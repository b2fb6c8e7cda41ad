# --------------------------------------------------
# Plabic graphs in a disk with n marked boundary points.
#
# The public API:
#
#   * PlabicGraph                 ― a bicolored planar graph with a rotation system
#   * standard_graph(a, n)        ― Γ_{a,n}, whose face quiver is Q_{a,n}
#   * faces(G), outer_face(G)     ― faces of the disk / the face outside it
#   * quiver_of(G)                ― the face quiver, faces named by dominating set
#   * square_move(G, f)           ― square move at a square face
#   * contract_expand(G, w)       ― contraction-expansion through a bivalent white vertex
#   * label_mutation(Q, labels, k) and rho_schedule_labels(a, n)
#                                 ― the same moves read on dominating sets only
#
# Orientation: positions are read with the y axis pointing up, "cw" is
# clockwise in that picture. The boundary circle is stored inside the
# embedding as a cycle p1, m1, p2, m2, ..., pn, mn, so every face of the
# disk is a bounded face of the embedding and the marked points run clockwise.
# --------------------------------------------------

import logging
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from grasscluster.element.color import (
    BOUNDARY_FILL,
    FROZEN_FACE,
    MUTABLE_FACE,
    VertexColor,
    to_hex,
)
from grasscluster.element.element import Element
from grasscluster.element.plabic.plabic_utils import (
    arc_index,
    arc_node,
    boundary_index,
    boundary_node,
    centroid,
    fresh_ids,
    replace_run,
    rotation_from_positions,
    standard_layout,
)
from grasscluster.element.plabic.strand import dominating_sets, reducedness_problems, strands
from grasscluster.element.quiver import (
    Grid,
    Quiver,
    check_parameters,
    grid_vertices,
    parse_vertex,
    rho_sequence,
    standard_quiver,
)
from grasscluster.element.seed import all_labels, plucker_label
from grasscluster.errors import (
    InputFormatError,
    InternalConsistencyError,
    InvariantViolationError,
    MoveNotApplicableError,
    MutationAtFrozenError,
    ReducednessError,
    VertexNotFoundError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Face:
    """A face, as the closed walk of half-edges that keeps it on the left."""
    half_edges: tuple
    kind: str  # "internal", "boundary" or "outer"

    @property
    def vertices(self) -> tuple:
        return tuple(u for u, _ in self.half_edges)

    @property
    def is_boundary(self) -> bool:
        return self.kind == "boundary"

    def __len__(self):
        return len(self.half_edges)

    def __repr__(self):
        return f"Face({self.kind}: {' '.join(self.vertices)})"


def _canonical_cycle(cycle: list) -> tuple:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:] + cycle[:k])


def set_label(subset) -> str:
    return "{" + ",".join(str(x) for x in sorted(subset)) + "}"


class PlabicGraph(Element):
    """
    A plabic graph of type (a, n).

    `rotation` maps every internal vertex to its neighbors in clockwise
    order; marked boundary points appear only as neighbors. `names` maps
    dominating sets to quiver vertex labels and follows faces through moves.
    """

    def __init__(self, a: int, n: int, rotation, colors, positions=None, names=None):
        check_parameters(a, n)
        self.a = a
        self.n = n
        self.rotation = {v: tuple(nbrs) for v, nbrs in rotation.items()}
        self.colors = {v: colors[v] for v in self.rotation}
        self.positions = dict(positions or {})
        self.names = dict(names or {})
        self._inner = {}
        self._validate()
        self.embedding = nx.PlanarEmbedding()
        self.embedding.set_data(self._embedding_data())
        try:
            self.embedding.check_structure()
        except nx.NetworkXException as exc:
            raise InvariantViolationError(f"Rotation system is not a planar embedding: {exc}")

    # ---------------------------------------------------------------------
    # Validation and embedding
    # ---------------------------------------------------------------------

    def _validate(self):
        for v, nbrs in self.rotation.items():
            if len(set(nbrs)) != len(nbrs):
                raise InvariantViolationError(f"Vertex {v} has a repeated neighbor.")
            if self.colors[v] is VertexColor.BLACK and len(nbrs) != 3:
                raise InvariantViolationError(f"Black vertex {v} has degree {len(nbrs)}, not 3.")
            for u in nbrs:
                k = boundary_index(u)
                if k is not None:
                    if not 1 <= k <= self.n:
                        raise InvariantViolationError(f"{v} is joined to unknown marked point {u}.")
                    if u in self._inner:
                        raise InvariantViolationError(f"Marked point {u} has more than one edge.")
                    self._inner[u] = v
                elif u not in self.rotation:
                    raise VertexNotFoundError(f"{v} is joined to unknown vertex {u}.")
                elif v not in self.rotation[u]:
                    raise InvariantViolationError(f"Edge {v}-{u} is missing its reverse.")
                elif self.colors[u] is self.colors[v]:
                    raise InvariantViolationError(f"Edge {v}-{u} joins two {self.colors[v].value} vertices.")
        missing = [k for k in range(1, self.n + 1) if boundary_node(k) not in self._inner]
        if missing:
            raise InvariantViolationError(f"Marked points {missing} have no edge.")

    def _embedding_data(self) -> dict:
        data = dict(self.rotation)
        for k in range(1, self.n + 1):
            prev_arc = arc_node((k - 2) % self.n + 1)
            data[boundary_node(k)] = [prev_arc, arc_node(k), self._inner[boundary_node(k)]]
            data[arc_node(k)] = [boundary_node(k), boundary_node(k % self.n + 1)]
        return {v: list(nbrs) for v, nbrs in data.items()}

    # ---------------------------------------------------------------------
    # Local structure
    # ---------------------------------------------------------------------

    @staticmethod
    def boundary_node(k: int) -> str:
        return boundary_node(k)

    @staticmethod
    def boundary_position(node) -> int:
        return boundary_index(node)

    def is_internal(self, v) -> bool:
        return v in self.rotation

    def color(self, v) -> VertexColor:
        return self.colors[v]

    def inner_neighbor(self, p):
        return self._inner[p]

    def cw(self, v, u):
        """Neighbor after u in clockwise order around v."""
        return self.embedding[v][u]["cw"]

    def ccw(self, v, u):
        return self.embedding[v][u]["ccw"]

    def degree(self, v) -> int:
        return len(self.rotation[v])

    @property
    def black_vertices(self) -> list:
        return sorted(v for v, c in self.colors.items() if c is VertexColor.BLACK)

    @property
    def white_vertices(self) -> list:
        return sorted(v for v, c in self.colors.items() if c is VertexColor.WHITE)

    def edges(self) -> list:
        """Edges of the graph (boundary circle excluded) as sorted pairs."""
        result = set()
        for v, nbrs in self.rotation.items():
            for u in nbrs:
                result.add(tuple(sorted((u, v))))
        return sorted(result)

    def edge_count(self) -> int:
        return len(self.edges())

    def half_edges(self) -> list:
        return [h for u, v in self.edges() for h in ((u, v), (v, u))]

    # ---------------------------------------------------------------------
    # Faces
    # ---------------------------------------------------------------------

    @cached_property
    def _face_index(self) -> dict:
        index = {}
        for start in self.embedding.edges():
            if start in index:
                continue
            cycle = []
            u, v = start
            while (u, v) not in cycle:
                cycle.append((u, v))
                u, v = v, self.cw(v, u)
            if all(arc_index(x) is not None or arc_index(y) is not None for x, y in cycle):
                kind = "outer"
            elif any(arc_index(x) is not None for x, _ in cycle):
                kind = "boundary"
            else:
                kind = "internal"
            face = Face(_canonical_cycle(cycle), kind)
            for h in cycle:
                index[h] = face
        return index

    @cached_property
    def faces(self) -> list:
        """Faces of the disk, outer face excluded, in a stable order."""
        unique = {f for f in self._face_index.values() if f.kind != "outer"}
        return sorted(unique, key=lambda f: f.half_edges)

    @cached_property
    def outer_face(self) -> Face:
        return self._face_index[(boundary_node(1), arc_node(1))]

    def left_face(self, u, v) -> Face:
        return self._face_index[(u, v)]

    def boundary_face(self, k: int) -> Face:
        """The face touching the boundary circle between marked points k and k+1."""
        return self._face_index[(arc_node(k), boundary_node(k))]

    def dual_edges(self) -> dict:
        """Each graph edge ↦ the two faces it separates."""
        return {frozenset((u, v)): (self.left_face(u, v), self.left_face(v, u)) for u, v in self.edges()}

    # ---------------------------------------------------------------------
    # Strands and names
    # ---------------------------------------------------------------------

    @cached_property
    def strands(self) -> dict:
        return strands(self)

    @cached_property
    def dominating_sets(self) -> dict:
        return dominating_sets(self)

    def face_name(self, face: Face):
        subset = self.dominating_sets[face]
        return self.names.get(subset, set_label(subset))

    def face_names(self) -> dict:
        return {face: self.face_name(face) for face in self.faces}

    def find_face(self, key) -> Face:
        """A face by quiver label or by dominating set."""
        for face in self.faces:
            subset = self.dominating_sets[face]
            if self.face_name(face) == key:
                return face
            if isinstance(key, (tuple, list, set, frozenset)) and subset == frozenset(key):
                return face
        raise VertexNotFoundError(f"No face named {key}.")

    def __repr__(self):
        return f"PlabicGraph(a={self.a}, n={self.n}, {len(self.rotation)} vertices, {self.edge_count()} edges)"

    # ---------------------------------------------------------------------
    # Export
    # ---------------------------------------------------------------------

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        for v in self.rotation:
            G.add_node(v, color=self.colors[v].value, pos=self.positions.get(v))
        for k in range(1, self.n + 1):
            G.add_node(boundary_node(k), color="boundary", pos=self.positions.get(boundary_node(k)))
        G.add_edges_from(self.edges())
        return G

    def to_dot(self) -> str:
        lines = [
            "graph plabic {",
            '  node [shape=circle, style=filled, label="", width=0.15];',
        ]

        def pos_attr(point):
            return f', pos="{point[0]:.3f},{point[1]:.3f}!"' if point else ""

        for v in sorted(self.rotation):
            lines.append(f'  "{v}" [fillcolor="{to_hex(self.colors[v].rgb)}"{pos_attr(self.positions.get(v))}];')
        for k in range(1, self.n + 1):
            p = boundary_node(k)
            lines.append(
                f'  "{p}" [shape=plaintext, label="{k}", fillcolor="{to_hex(BOUNDARY_FILL)}"'
                f"{pos_attr(self.positions.get(p))}];"
            )
        for u, v in self.edges():
            lines.append(f'  "{u}" -- "{v}";')
        for face in self.faces:
            color = FROZEN_FACE if face.is_boundary else MUTABLE_FACE
            where = centroid(self.positions, [v for v in face.vertices if v in self.rotation])
            lines.append(
                f'  "face {self.face_name(face)}" [shape=plaintext, style="", '
                f'label="{self.face_name(face)}", fontcolor="{to_hex(color)}"{pos_attr(where)}];'
            )
        lines.append("}")
        return "\n".join(lines)

    def to_json(self):
        return {
            "a": self.a,
            "n": self.n,
            "vertices": [
                {
                    "id": v,
                    "color": self.colors[v].value,
                    "rotation": list(self.rotation[v]),
                    **({"pos": list(self.positions[v])} if v in self.positions else {}),
                }
                for v in sorted(self.rotation)
            ],
            "boundary": {
                boundary_node(k): list(self.positions[boundary_node(k)])
                for k in range(1, self.n + 1) if boundary_node(k) in self.positions
            },
            "names": [{"set": sorted(s), "label": str(label)} for s, label in self.names.items()],
        }

    @classmethod
    def from_json(cls, data):
        try:
            rotation = {item["id"]: item["rotation"] for item in data["vertices"]}
            colors = {item["id"]: VertexColor.parse(item["color"]) for item in data["vertices"]}
            positions = {item["id"]: tuple(item["pos"]) for item in data["vertices"] if "pos" in item}
            positions.update({p: tuple(xy) for p, xy in data.get("boundary", {}).items()})
            names = {frozenset(item["set"]): parse_vertex(item["label"]) for item in data.get("names", [])}
            return cls(int(data["a"]), int(data["n"]), rotation, colors, positions, names)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputFormatError(f"Malformed plabic graph JSON: {exc}")


# ---------------------------------------------------------------------
# Constructors and queries
# ---------------------------------------------------------------------

def standard_graph(a: int, n: int) -> PlabicGraph:
    """Γ_{a,n}, with faces named by the grid vertices of Q_{a,n}."""
    adjacency, colors, positions = standard_layout(a, n)
    rotation = rotation_from_positions(adjacency, positions, colors)
    names = {frozenset(plucker_label(a, n, v)): v for v in grid_vertices(a, n)}
    G = PlabicGraph(a, n, rotation, colors, positions, names)
    logger.debug("standard_graph(%d, %d): %r", a, n, G)
    return G


def faces(G: PlabicGraph) -> list:
    return list(G.faces)


def outer_face(G: PlabicGraph) -> Face:
    return G.outer_face


def is_reduced(G: PlabicGraph) -> bool:
    return not reducedness_problems(G)


def face_names(G: PlabicGraph) -> dict:
    return G.face_names()


def _label_key(label):
    if isinstance(label, Grid):
        return (0, label.i, label.j, "")
    return (1, 0, 0, str(label))


def quiver_of(G: PlabicGraph) -> Quiver:
    """
    Clockwise 3-cycle of faces around every black vertex, opposite arrows
    cancelled, boundary faces frozen.
    """
    problems = reducedness_problems(G)
    if problems:
        raise ReducednessError("; ".join(problems))
    names = G.face_names()
    arrows = []
    for v in G.black_vertices:
        around = [G.left_face(v, u) for u in G.rotation[v]]
        for t in range(3):
            tail, head = around[t], around[(t + 1) % 3]
            if tail == head:
                raise InternalConsistencyError(f"Face {names[tail]} meets black vertex {v} twice.")
            arrows.append((names[tail], names[head]))
    vertices = sorted(names.values(), key=_label_key)
    frozen = {names[f] for f in G.faces if f.is_boundary}
    return Quiver.from_arrows(vertices, frozen, arrows, a=G.a, n=G.n)


# ---------------------------------------------------------------------
# Moves
# ---------------------------------------------------------------------

def _moved(G: PlabicGraph, rotation, colors, new_vertices) -> PlabicGraph:
    positions = {v: xy for v, xy in G.positions.items() if v in rotation or boundary_index(v) is not None}
    for v in new_vertices:
        where = centroid(G.positions, rotation[v])
        if where is not None:
            positions[v] = where
    return PlabicGraph(G.a, G.n, rotation, colors, positions, G.names)


def square_move(G: PlabicGraph, f) -> PlabicGraph:
    """
    Square move at the square face f (a quiver label or a dominating set).

    The face must be a 4-cycle black, white, black, white whose white
    corners have degree at least 3 and whose black corners each have a
    third neighbor that is an internal white vertex off the square. The two
    black vertices are replaced by two new ones on the other diagonal; the
    face keeps its name and its dominating set is exchanged.
    """
    face = G.find_face(f)
    if face.kind != "internal" or len(face) != 4:
        raise MoveNotApplicableError(f"Face {G.face_name(face)} is not an internal square.")
    corners = list(face.vertices)
    if G.color(corners[0]) is not VertexColor.BLACK:
        corners = corners[1:] + corners[:1]
    b1, wb, b2, wa = corners
    expected = (VertexColor.BLACK, VertexColor.WHITE) * 2
    if tuple(G.color(v) for v in corners) != expected or b1 == b2:
        raise MoveNotApplicableError(f"Face {G.face_name(face)} does not alternate colors.")
    wc, wd = G.cw(b1, wb), G.cw(b2, wa)
    if wa == wb or min(G.degree(wa), G.degree(wb)) < 3:
        raise MoveNotApplicableError(f"White corners of {G.face_name(face)} need degree at least 3.")
    for w in (wc, wd):
        if not G.is_internal(w) or w in (wa, wb):
            raise MoveNotApplicableError(f"Face {G.face_name(face)} has a leg {w} that is not an internal white vertex.")
    if wc == wd:
        raise MoveNotApplicableError(f"Both legs of {G.face_name(face)} end at {wc}.")

    old_set = G.dominating_sets[face]
    n1, n2 = fresh_ids(G.rotation, VertexColor.BLACK, 2)
    rotation = {v: nbrs for v, nbrs in G.rotation.items() if v not in (b1, b2)}
    colors = {v: c for v, c in G.colors.items() if v not in (b1, b2)}
    rotation[n1] = (wc, wa, wd)
    rotation[n2] = (wb, wc, wd)
    colors[n1] = colors[n2] = VertexColor.BLACK
    rotation[wa] = replace_run(rotation[wa], (b2, b1), (n1,))
    rotation[wb] = replace_run(rotation[wb], (b1, b2), (n2,))
    rotation[wc] = replace_run(rotation[wc], (b1,), (n1, n2))
    rotation[wd] = replace_run(rotation[wd], (b2,), (n2, n1))

    H = _moved(G, rotation, colors, (n1, n2))
    new_set = H.dominating_sets[H.left_face(wc, n2)]
    if old_set in H.names:
        H.names[new_set] = H.names.pop(old_set)
    logger.debug("square_move at %s: %s -> %s", G.face_name(face), sorted(old_set), sorted(new_set))
    return H


def contract_expand(G: PlabicGraph, w) -> PlabicGraph:
    """
    Contraction-expansion: the bivalent white vertex w between black vertices x and y
    is re-paired, turning the I-shape x–w–y sideways. Faces and their
    dominating sets do not change.
    """
    if not G.is_internal(w) or G.color(w) is not VertexColor.WHITE or G.degree(w) != 2:
        raise MoveNotApplicableError(f"{w} is not a bivalent white vertex.")
    left, right = G.rotation[w]
    if not (G.is_internal(left) and G.is_internal(right)):
        raise MoveNotApplicableError(f"{w} touches the boundary.")
    x1 = G.cw(left, w)
    x2 = G.cw(left, x1)
    y1 = G.cw(right, w)
    y2 = G.cw(right, y1)
    if y2 == x1 or x2 == y1:
        raise MoveNotApplicableError(f"Moving through {w} would double an edge.")

    lower, upper = fresh_ids(G.rotation, VertexColor.BLACK, 2)
    rotation = {v: nbrs for v, nbrs in G.rotation.items() if v not in (left, right)}
    colors = {v: c for v, c in G.colors.items() if v not in (left, right)}
    rotation[lower] = (w, y2, x1)
    rotation[upper] = (w, x2, y1)
    colors[lower] = colors[upper] = VertexColor.BLACK
    rotation[w] = (lower, upper)
    for leg, old, new in ((x1, left, lower), (x2, left, upper), (y1, right, upper), (y2, right, lower)):
        if G.is_internal(leg):
            rotation[leg] = replace_run(rotation[leg], (old,), (new,))
    logger.debug("contract_expand at %s: %s,%s -> %s,%s", w, left, right, lower, upper)
    return _moved(G, rotation, colors, (lower, upper))


def bivalent_whites(G: PlabicGraph) -> list:
    """White vertices where contract_expand applies."""
    return [
        w for w in G.white_vertices
        if G.degree(w) == 2 and all(G.is_internal(u) for u in G.rotation[w])
    ]


# ---------------------------------------------------------------------
# Moves on dominating sets
# ---------------------------------------------------------------------

def label_mutation(Q: Quiver, labels: dict, k) -> tuple:
    """
    New dominating set at k after a square move: with neighbor sets
    J∪{k,l}, J∪{j,k}, J∪{i,j}, J∪{i,l} and I(k) = J∪{i,k}, the result is
    J∪{j,l}, i.e. (union of the four) minus (I(k) minus their intersection).
    """
    if Q.is_frozen(k):
        raise MutationAtFrozenError(f"Cannot move at frozen face {k}.")
    row = {v: Q.epsilon(k, v) for v in Q.vertices if Q.epsilon(k, v) != 0}
    incoming = [v for v, m in row.items() if m == 1]
    outgoing = [v for v, m in row.items() if m == -1]
    if len(incoming) != 2 or len(outgoing) != 2 or len(row) != 4:
        raise MoveNotApplicableError(f"Face {k} is not a square: arrows {row}.")
    neighbor_sets = [frozenset(labels[v]) for v in incoming + outgoing]
    union = frozenset().union(*neighbor_sets)
    common = frozenset.intersection(*neighbor_sets)
    current = frozenset(labels[k])
    result = union - (current - common)
    if len(result) != len(current) or result == current:
        raise MoveNotApplicableError(f"Neighbor sets of {k} do not form an exchange square.")
    return tuple(sorted(result))


def rho_schedule_labels(a: int, n: int):
    """Run the rotation mutation sequence on Γ_{a,n}'s dominating sets; returns (labels, quiver)."""
    Q = standard_quiver(a, n)
    labels = all_labels(a, n)
    for k in rho_sequence(a, n):
        labels[k] = label_mutation(Q, labels, k)
        Q = Q.mutate(k)
    return labels, Q


__all__ = [
    "Face", "PlabicGraph", "standard_graph", "faces", "outer_face", "is_reduced",
    "face_names", "quiver_of", "square_move", "contract_expand", "bivalent_whites",
    "label_mutation", "rho_schedule_labels", "set_label",
]
