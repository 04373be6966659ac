import pytest

from minvenn.builder import BuildError
from minvenn.doubling import DoublingError, build_venn, double, find_colorful_face
from minvenn.plane_graph import PlaneDualGraph, crossing_count, trace_faces
from minvenn.verify import verify_graph


def test_colorful_face_of_base_build(dual8):
    g, _ = dual8
    cf = find_colorful_face(g)
    assert cf is not None
    assert cf.index == g.outer_face_index()
    assert cf.vertex == 0 and cf.antipode == 255
    assert len(cf.face) == 16


def test_short_faces_are_not_colorful(dual16):
    g, _ = dual16
    from minvenn.doubling import _colorful_vertex

    short = next(f for f in trace_faces(g) if len(f) == 6)
    assert _colorful_vertex(short, g.n) is None


def test_double_counts(dual8):
    g, _ = dual8
    d = double(g)
    assert d.n == 9
    assert crossing_count(d) == 80
    assert d.vertex_count == 2 * g.vertex_count
    assert d.edge_count == 2 * g.edge_count + 2
    assert d.construction == (3, 1)
    assert verify_graph(d).passed


def test_double_keeps_a_colorful_face(dual8):
    g, _ = dual8
    d = double(g)
    cf = find_colorful_face(d)
    assert cf is not None
    full9 = (1 << 9) - 1
    assert cf.vertex ^ cf.antipode == full9
    members = set(cf.face.vertices)
    assert cf.vertex in members and cf.antipode in members


def test_colorful_face_halves_are_permutations(dual8):
    g, _ = dual8
    cf = find_colorful_face(g)
    verts = cf.face.vertices
    i, j = verts.index(cf.vertex), verts.index(cf.antipode)
    flips = cf.face.flips
    length = len(flips)
    half1 = [flips[(i + t) % length] for t in range((j - i) % length)]
    half2 = [flips[(j + t) % length] for t in range((i - j) % length)]
    assert sorted(half1) == list(range(1, 9))
    assert sorted(half2) == list(range(1, 9))


def test_double_through_non_outer_colorful_face(dual8):
    # re-root the outer designation onto a short face; the scan must fall back
    # to another colorful face and doubling must still work
    g, _ = dual8
    faces = trace_faces(g)
    short = next(f for f in faces if len(f) == 10)
    rerooted = PlaneDualGraph(
        n=g.n,
        rotation=g.rotation,
        outer_edge=(short.vertices[0], short.vertices[1]),
        construction=g.construction,
        layout=g.layout,
    )
    cf = find_colorful_face(rerooted)
    assert cf is not None
    assert len(cf.face) == 16
    assert cf.index != rerooted.outer_face_index()
    d = double(rerooted)
    assert crossing_count(d) == 80
    assert verify_graph(d).passed


def test_double_without_colorful_face():
    # a plain 6-cycle in Q_4 has no face of length 2n = 8
    walk = [0b0000, 0b0001, 0b0011, 0b0111, 0b0110, 0b0100]
    rotation = {
        v: [walk[(i + 1) % 6], walk[(i - 1) % 6]] for i, v in enumerate(walk)
    }
    g = PlaneDualGraph(n=4, rotation=rotation, outer_edge=(walk[0], walk[1]))
    assert find_colorful_face(g) is None
    with pytest.raises(DoublingError):
        double(g)


def test_chain_matches_table(doubling_chain):
    want = {9: 80, 10: 160, 11: 320, 12: 640, 13: 1280, 14: 2560, 15: 5120}
    for n, crossings in want.items():
        g = doubling_chain[n]
        assert crossing_count(g) == crossings
        assert g.construction == (3, n - 8)


def test_build_venn_entry_point():
    g = build_venn(10)
    assert g.n == 10
    assert crossing_count(g) == 160
    assert g.construction == (3, 2)


def test_build_venn_guards():
    with pytest.raises(BuildError):
        build_venn(7)
    with pytest.raises(BuildError):
        build_venn(17)
    build_venn(8)  # lower edge of the valid range
