import re
from collections import defaultdict

import numpy as np

from grasscluster.element.color import VertexColor
from grasscluster.element.quiver import check_parameters

_BOUNDARY_RE = re.compile(r"^p(\d+)$")
_ARC_RE = re.compile(r"^m(\d+)$")
_INTERNAL_RE = re.compile(r"^[wb](\d+)$")


def boundary_node(k: int) -> str:
    """Node id of marked boundary point k."""
    return f"p{k}"


def arc_node(k: int) -> str:
    """Node id on the boundary circle between marked points k and k+1."""
    return f"m{k}"


def boundary_index(node):
    match = _BOUNDARY_RE.match(node)
    return int(match.group(1)) if match else None


def arc_index(node):
    match = _ARC_RE.match(node)
    return int(match.group(1)) if match else None


def fresh_ids(existing, color: VertexColor, count: int) -> list:
    """count unused ids for new vertices of the given color."""
    used = [int(m.group(1)) for m in map(_INTERNAL_RE.match, existing) if m]
    start = max(used, default=-1) + 1
    prefix = "w" if color is VertexColor.WHITE else "b"
    return [f"{prefix}{start + k}" for k in range(count)]


def rotation_from_positions(adjacency, positions, centers) -> dict:
    """Clockwise neighbor order around every center, read off straight-line positions."""
    rotation = {}
    for v in centers:
        nbrs = list(adjacency[v])
        x, y = positions[v]
        offsets = np.array([positions[u] for u in nbrs], dtype=float) - (x, y)
        angles = np.arctan2(offsets[:, 1], offsets[:, 0])
        rotation[v] = tuple(nbrs[k] for k in np.argsort(-angles, kind="stable"))
    return rotation


def centroid(positions, nodes):
    points = [positions[v] for v in nodes if v in positions]
    if not points:
        return None
    return tuple(float(c) for c in np.mean(np.array(points, dtype=float), axis=0))


def rotate_to(cyclic, first) -> tuple:
    k = cyclic.index(first)
    return tuple(cyclic[k:]) + tuple(cyclic[:k])


def replace_run(cyclic, run, replacement) -> tuple:
    """Swap a run of consecutive entries (clockwise) of a cyclic order for replacement."""
    rotated = rotate_to(cyclic, run[0])
    assert tuple(rotated[:len(run)]) == tuple(run), f"{run} is not consecutive in {cyclic}"
    return tuple(replacement) + rotated[len(run):]


def standard_layout(a: int, n: int):
    """
    Adjacency, colors and positions of the standard plabic graph Γ_{a,n}.

    One white vertex sits on top, joined to marked point 1 and to the b black
    vertices of the first row. Below it come a−1 zig-zag rows; in row r the
    white vertex (r,j) sits at (j, a−1−r) and the black vertex (r,j) half a
    unit up and right of it. Marked points 2..a end the rows on the right,
    a+1..n hang below the last row, numbered clockwise.
    """
    b = check_parameters(a, n)
    adjacency = defaultdict(list)
    colors = {}
    positions = {}

    def link(u, v):
        adjacency[u].append(v)
        adjacency[v].append(u)

    top = "w0"
    colors[top] = VertexColor.WHITE

    if a == 1:
        positions[top] = (0.0, 0.0)
        for k in range(1, n + 1):
            angle = np.pi / 2 - 2 * np.pi * (k - 1) / n
            positions[boundary_node(k)] = (float(np.cos(angle)), float(np.sin(angle)))
            link(top, boundary_node(k))
        return adjacency, colors, positions

    def white(r, j):
        return f"w{(r - 1) * b + j}"

    def black(r, j):
        return f"b{(r - 1) * b + j}"

    positions[top] = ((b + 2) / 2, a - 0.5)
    positions[boundary_node(1)] = (b + 1.0, a - 0.5)
    link(top, boundary_node(1))

    for r in range(1, a):
        for j in range(1, b + 1):
            colors[white(r, j)] = VertexColor.WHITE
            colors[black(r, j)] = VertexColor.BLACK
            positions[white(r, j)] = (float(j), float(a - 1 - r))
            positions[black(r, j)] = (j + 0.5, a - 0.5 - r)
            link(top if r == 1 else white(r - 1, j), black(r, j))
            link(black(r, j), white(r, j))
            if j < b:
                link(black(r, j), white(r, j + 1))
        positions[boundary_node(r + 1)] = (b + 1.0, float(a - 1 - r))
        link(black(r, b), boundary_node(r + 1))

    for j in range(1, b + 1):
        positions[boundary_node(n + 1 - j)] = (j + 0.5, -0.5)
        link(white(a - 1, j), boundary_node(n + 1 - j))

    return adjacency, colors, positions
