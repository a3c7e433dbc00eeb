"""Tests for the one-vertex triangulation type and its validation."""
import json

import pytest

from curvelab.errors import InvalidGenusError, MalformedInputError
from curvelab.surface import (Triangulation, build_standard_surface,
                              euler_characteristic, validate)


@pytest.mark.parametrize("genus", [1, 2, 3, 4, 7])
def test_standard_counts(genus):
    surf = build_standard_surface(genus)
    assert surf.num_triangles == 4 * genus - 2
    assert surf.num_edges == 6 * genus - 3
    assert surf.vertex_count() == 1
    assert euler_characteristic(surf) == 2 - 2 * genus
    assert validate(surf).ok


def test_torus_tables_frozen():
    surf = build_standard_surface(1)
    assert surf.partner == [4, 5, 3, 2, 0, 1]
    assert surf.edge_of_slot == [0, 1, 2, 2, 0, 1]
    assert surf.slots_of_edge == [(0, 4), (1, 5), (3, 2)]
    assert surf.side_labels == {0: ("a1", "a"), 1: ("b1", "b")}


def test_partner_is_involution_without_fixed_points():
    for genus in (1, 2, 3):
        surf = build_standard_surface(genus)
        for s in range(3 * surf.num_triangles):
            assert surf.partner[s] != s
            assert surf.partner[surf.partner[s]] == s
            e = surf.edge_of_slot[s]
            assert s in surf.slots_of_edge[e]
        # exactly one slot of each edge is the a-side
        for sa, sb in surf.slots_of_edge:
            assert surf.is_slot_a(sa)
            assert not surf.is_slot_a(sb)


def test_vertex_link_visits_every_corner_once():
    for genus in (1, 2, 3):
        surf = build_standard_surface(genus)
        link = surf.vertex_link()
        assert len(link) == 3 * surf.num_triangles
        assert len(set(link)) == len(link)


def test_generator_labels():
    for genus in (1, 2, 3):
        surf = build_standard_surface(genus)
        names = sorted(nm for nm, _ in surf.side_labels.values())
        expect = sorted([f"a{i+1}" for i in range(genus)]
                        + [f"b{i+1}" for i in range(genus)])
        assert names == expect


def test_invalid_genus_rejected():
    with pytest.raises(InvalidGenusError):
        build_standard_surface(0)
    with pytest.raises(InvalidGenusError):
        build_standard_surface(-2)


def test_json_roundtrip_and_stability():
    for genus in (1, 2, 3):
        surf = build_standard_surface(genus)
        blob = surf.to_json()
        again = Triangulation.from_json_dict(json.loads(blob))
        assert again.partner == surf.partner
        assert again.edge_of_slot == surf.edge_of_slot
        assert again.genus == surf.genus
        # serialization is byte-stable
        assert again.to_json() == blob


def test_json_rejects_bad_payloads():
    surf = build_standard_surface(1)
    data = surf.to_json_dict()
    with pytest.raises(MalformedInputError):
        Triangulation.from_json_dict({**data, "format": "curve-lab/999"})
    broken = {**data, "triangles": [[9, 9, 9] for _ in data["triangles"]]}
    with pytest.raises(MalformedInputError):
        Triangulation.from_json_dict(broken)
    with pytest.raises(MalformedInputError):
        Triangulation.from_json_dict({"format": "curve-lab/1"})


def test_gluing_must_pair_every_slot_exactly_once():
    with pytest.raises(MalformedInputError):
        Triangulation(1, 2, [(0, 1, True), (0, 2, True), (3, 4, True)])
    with pytest.raises(MalformedInputError):
        Triangulation(1, 2, [(0, 1, True), (2, 3, True)])
    with pytest.raises(MalformedInputError):
        Triangulation(1, 2, [(0, 1, True), (2, 3, True), (4, 99, True)])


def test_validate_flags_orientation_slip():
    surf = build_standard_surface(2)
    rows = [list(r) for r in surf.gluing]
    rows[0][2] = False
    slipped = Triangulation(2, surf.num_triangles,
                            [tuple(r) for r in rows])
    report = validate(slipped)
    assert not report.ok
    assert not report.orientable


def test_validate_flags_multiple_vertices():
    # doubled triangle: a sphere with three vertices
    sphere = Triangulation(0, 2, [(0, 5, True), (1, 4, True), (2, 3, True)])
    report = validate(sphere)
    assert not report.one_vertex
    assert not report.ok
