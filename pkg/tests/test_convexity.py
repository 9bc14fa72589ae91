import json

import pytest

from homcat.convexity import (
    check_acyclic,
    check_axiom_convex,
    cone_chain_homotopy,
    cone_from_json,
    first_vertex_cone,
    product_cone,
    search_cone,
    verify_cone,
)
from homcat.cosimplicial import finset_cosimplicial, sset_cosimplicial
from homcat.errors import InvalidDiagram
from homcat.fincat import FinSet
from homcat.nerve import nerve
from homcat.sset import TruncSSetCategory


@pytest.mark.parametrize("m", range(4))
def test_first_vertex_cone_on_simplices(sset_F, m):
    X = sset_F.category.representable(m)
    cone = first_vertex_cone(sset_F, X)
    assert verify_cone(sset_F, cone).passed
    assert cone_chain_homotopy(sset_F, cone).passed
    assert check_acyclic(cone.nerve, cone).passed


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1)])
def test_product_cones(sset_F, a, b):
    C = sset_F.category
    cx, cy = first_vertex_cone(sset_F, C.representable(a)), first_vertex_cone(sset_F, C.representable(b))
    pc = product_cone(sset_F, cx, cy)
    assert verify_cone(sset_F, pc).passed
    assert cone_chain_homotopy(sset_F, pc).passed
    assert check_acyclic(pc.nerve).passed
    assert pc.maps == first_vertex_cone(sset_F, pc.obj, pc.nerve).maps


def test_broken_cone_rejected(sset_F):
    cone = first_vertex_cone(sset_F, sset_F.category.representable(1))
    maps = list(cone.maps)
    maps[0] = tuple(reversed(maps[0]))
    cone.maps = maps
    assert not verify_cone(sset_F, cone).passed


def test_circle_has_no_cone():
    C = TruncSSetCategory(2)
    F = sset_cosimplicial(C)
    S = C.boundary(2)
    assert search_cone(F, S) is None
    rep = check_acyclic(nerve(F, S))
    assert not rep.passed and rep.witness["nonzero"][0]["degree"] == 1


def test_search_agrees_on_simplex():
    C = TruncSSetCategory(2)
    F = sset_cosimplicial(C)
    cone = search_cone(F, C.representable(1))
    assert cone is not None and verify_cone(F, cone).passed


def test_axiom_convex_instances(sset_F, finset_F, lattice_F):
    for F in (sset_F, finset_F, lattice_F):
        assert check_axiom_convex(F).passed


def test_finset_cones():
    F = finset_cosimplicial(FinSet(3), 3)
    for X in (1, 2, 3):
        cone = first_vertex_cone(F, X)
        assert verify_cone(F, cone).passed and cone_chain_homotopy(F, cone).passed


def test_cone_file_roundtrip(sset_F):
    cone = first_vertex_cone(sset_F, sset_F.category.representable(1))
    data = json.loads(json.dumps(cone.to_json()))
    again = cone_from_json(cone.nerve, data)
    assert list(again.maps) == list(cone.maps)
    assert again.apex == cone.apex
    with pytest.raises(InvalidDiagram):
        cone_from_json(cone.nerve, {"maps": {"-1": {"*": "0"}}})
