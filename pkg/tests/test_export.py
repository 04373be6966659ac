import json
import xml.etree.ElementTree as ET

import pytest

from minvenn.bases import ring_prefixes
from minvenn.builder import partition_preview_graph
from minvenn.export import (
    RenderError,
    dump_json,
    from_json,
    render_dual_svg,
    render_primal_svg,
    to_dot,
    to_json,
)
from minvenn.plane_graph import PlaneDualGraph


def _single_ring_graph(n):
    ring = ring_prefixes(n)
    two_n = 2 * n
    rotation = {
        v: [ring[(i + 1) % two_n], ring[(i - 1) % two_n]] for i, v in enumerate(ring)
    }
    return PlaneDualGraph(n=n, rotation=rotation, outer_edge=(ring[0], ring[1]))


def test_round_trip_base_build(dual8):
    g, trace = dual8
    doc = to_json(g, trace=trace)
    assert doc["crossings"] == 40
    assert doc["construction"] == {"k": 3, "m": 0}
    g2 = from_json(doc)
    assert g2 == g
    assert to_json(g2) == to_json(g)
    # serialized text is stable too
    assert dump_json(to_json(g)) == dump_json(to_json(g2))


def test_rebuild_produces_identical_document():
    from minvenn.builder import build_venn_dual

    g1, t1 = build_venn_dual(3)
    g2, t2 = build_venn_dual(3)
    assert dump_json(to_json(g1, trace=t1)) == dump_json(to_json(g2, trace=t2))


def test_round_trip_doubled(doubling_chain):
    g = doubling_chain[9]
    doc = to_json(g)
    assert doc["crossings"] == 80
    assert doc["layout_hint"] is None
    assert from_json(doc) == g


def test_from_json_rejects_tampered_rotation(dual8):
    g, _ = dual8
    doc = json.loads(dump_json(to_json(g)))
    victim = next(iter(doc["rotation"]))
    doc["rotation"][victim] = doc["rotation"][victim][:-1]
    with pytest.raises(ValueError):
        from_json(doc)


def test_from_json_rejects_tampered_faces(dual8):
    g, _ = dual8
    doc = to_json(g)
    doc["faces"] = doc["faces"][::-1]
    with pytest.raises(ValueError):
        from_json(doc)


def test_to_dot_single_ring():
    g = _single_ring_graph(4)
    dot = to_dot(g)
    lines = dot.splitlines()
    node_lines = [l for l in lines if "--" not in l and "label" in l]
    edge_lines = [l for l in lines if "--" in l]
    assert len(node_lines) == 8
    assert len(edge_lines) == 8
    for l in edge_lines:
        label = int(l.split('label="')[1].split('"')[0])
        assert 1 <= label <= 4


def test_to_dot_base_build(dual8):
    g, _ = dual8
    dot = to_dot(g)
    assert len([l for l in dot.splitlines() if "--" not in l and "label" in l]) == 256


def test_render_dual_svg(dual8):
    g, _ = dual8
    svg = render_dual_svg(g)
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    assert svg.count("<circle") == 256
    assert svg.count("<line") == 294


def test_render_dual_preview_two_rings():
    svg = render_dual_svg(partition_preview_graph(2))
    ET.fromstring(svg)
    assert svg.count("<circle") == 16
    assert svg.count("<line") == 16


def test_render_dual_requires_layout(doubling_chain):
    with pytest.raises(RenderError):
        render_dual_svg(doubling_chain[9])


def test_render_primal_svg(dual8):
    g, _ = dual8
    svg = render_primal_svg(g)
    ET.fromstring(svg)
    assert svg.count("<path") == 8  # one closed polyline per curve
    assert svg.count('fill="white" stroke="black"') == 40  # one bubble per crossing


def test_render_primal_refuses_unverified():
    with pytest.raises(RenderError):
        render_primal_svg(partition_preview_graph(2))
