"""Doubling a diagram through a colorful face, and the any-n entry point.

A face is colorful if it has length 2n and contains two antipodal vertices.
Splitting such a face with two new edges joins the graph to a mirrored copy
carrying the new element n+1, exactly doubling the face count.  Iterating
from the largest power-of-two build at or below the target dimension yields
a diagram for every n >= 8.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bases import DEFAULT_CAP
from .builder import BuildError, build_venn_dual
from .hypercube import MAX_DIMENSION
from .plane_graph import Face, PlaneDualGraph, trace_faces


class DoublingError(ValueError):
    """The graph cannot be doubled (typically: no colorful face)."""


@dataclass(frozen=True)
class ColorfulFace:
    """A length-2n face with an antipodal vertex pair on it."""

    index: int
    face: Face
    vertex: int
    antipode: int


def _colorful_vertex(face: Face, n: int) -> int | None:
    """Lexicographically smallest vertex of the face whose antipode is also on it."""
    if len(face) != 2 * n:
        return None
    verts = face.vertices
    if len(set(verts)) != len(verts):
        return None
    full = (1 << n) - 1
    members = set(verts)
    for v in sorted(members):
        if (v ^ full) in members:
            return v
    return None


def find_colorful_face(g: PlaneDualGraph) -> ColorfulFace | None:
    """A colorful face of the graph, preferring the designated outer face."""
    faces = trace_faces(g)
    outer = g.outer_face_index()
    order = [outer] + [i for i in range(len(faces)) if i != outer]
    full = (1 << g.n) - 1
    for idx in order:
        v = _colorful_vertex(faces[idx], g.n)
        if v is not None:
            return ColorfulFace(index=idx, face=faces[idx], vertex=v, antipode=v ^ full)
    return None


def _insert_after(lst: list[int], anchor: int, item: int) -> None:
    lst.insert(lst.index(anchor) + 1, item)


def double(g: PlaneDualGraph) -> PlaneDualGraph:
    """An (n+1)-dimensional dual with exactly twice as many faces.

    The second copy carries element n+1 on every vertex and is mirrored (all
    rotations reversed); the copies are joined by two edges at an antipodal
    pair on a colorful face.  The new graph again has a colorful outer face,
    so doubling can be iterated.
    """
    cf = find_colorful_face(g)
    if cf is None:
        raise DoublingError("graph has no colorful face")
    n = g.n
    if n + 1 > MAX_DIMENSION:
        raise DoublingError(f"doubling past dimension {MAX_DIMENSION} is unsupported")
    bit = 1 << n

    rotation: dict[int, list[int]] = {}
    for v, nbrs in g.rotation.items():
        rotation[v] = list(nbrs)
        rotation[v | bit] = [u | bit for u in reversed(nbrs)]

    verts = cf.face.vertices
    length = len(verts)
    i = verts.index(cf.vertex)
    j = verts.index(cf.antipode)
    # Each new edge sits in the face corner it splits: after the walk
    # predecessor in the original copy, after the walk successor's image in
    # the mirrored copy.
    _insert_after(rotation[cf.vertex], verts[(i - 1) % length], cf.vertex | bit)
    _insert_after(rotation[cf.antipode], verts[(j - 1) % length], cf.antipode | bit)
    _insert_after(rotation[cf.vertex | bit], verts[(i + 1) % length] | bit, cf.vertex)
    _insert_after(rotation[cf.antipode | bit], verts[(j + 1) % length] | bit, cf.antipode)

    construction = None
    if g.construction is not None:
        construction = (g.construction[0], g.construction[1] + 1)
    out = PlaneDualGraph(
        n=n + 1,
        rotation=rotation,
        outer_edge=(cf.vertex, cf.vertex | bit),
        construction=construction,
        layout=None,
    )
    before = len(trace_faces(g))
    after = len(trace_faces(out))
    if after != 2 * before:
        raise DoublingError(f"doubling produced {after} faces, expected {2 * before}")
    return out


def build_venn(n_total: int, cap: int = DEFAULT_CAP, tie_break: str = "earlier") -> PlaneDualGraph:
    """Dual graph of an n-Venn diagram for any n >= 8.

    Builds the largest power-of-two instance at or below n and doubles the
    remaining m = n - 2^k times.
    """
    if n_total < 8:
        raise BuildError(f"need n >= 8, got {n_total}")
    if n_total > cap:
        raise BuildError(f"n={n_total} exceeds the materialization cap {cap}")
    k = n_total.bit_length() - 1
    m = n_total - (1 << k)
    g, _trace = build_venn_dual(k, tie_break=tie_break, cap=cap)
    for _ in range(m):
        g = double(g)
    return g
