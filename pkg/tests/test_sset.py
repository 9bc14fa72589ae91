import pytest

from homcat.errors import InvalidDiagram, LevelMismatch
from homcat.fincat import Diagram, verify_category_laws
from homcat.sset import (
    TruncSimplicialSet,
    TruncSSetCategory,
    boundary,
    colimit_of,
    compose_maps,
    disjoint_union,
    enumerate_maps,
    free_completion,
    identity_map,
    make_map,
    map_from_vertices,
    point,
    product,
    representable,
)
from oracles import monotone_count, surjection_count


@pytest.mark.parametrize("m", range(4))
def test_representable_counts(m):
    D = representable(m, 3)
    assert D.counts == tuple(monotone_count(n, m) for n in range(4))
    assert D.validate().passed


@pytest.mark.parametrize("m", [1, 2, 3])
def test_boundary_counts(m):
    B = boundary(m, 3)
    assert B.counts == tuple(monotone_count(n, m) - surjection_count(n, m) for n in range(4))
    assert B.validate().passed


def test_nondegenerate_simplices_of_representable():
    D = representable(2, 3)
    assert [len(D.nondegenerate(n)) for n in range(4)] == [3, 3, 1, 0]


def test_product_is_degreewise():
    P, p1, p2 = product(representable(1, 3), representable(2, 3))
    assert P.counts == tuple(a * b for a, b in zip(representable(1, 3).counts, representable(2, 3).counts))
    assert P.validate().passed and p1.is_valid() and p2.is_valid()
    # nondegenerate top simplices of the prism: 3 triangles-times-edge 3-simplices
    assert len(P.nondegenerate(3)) == 3


def test_hom_from_representable_is_yoneda():
    for m in range(3):
        for n in range(3):
            maps = enumerate_maps(representable(m, 3), representable(n, 3))
            assert len(maps) == monotone_count(m, n)


def test_maps_compose_and_validate():
    D1, D2 = representable(1, 3), representable(2, 3)
    f = map_from_vertices(D1, D2, [0, 2])
    g = map_from_vertices(D2, D1, [0, 0, 1])
    gf = compose_maps(g, f)
    assert gf.components[0] == (0, 1)
    assert compose_maps(identity_map(D2), f) == f
    with pytest.raises(InvalidDiagram):
        make_map(D1, D2, [(0, 1), (0,) * D1.counts[1], (0,) * D1.counts[2], (0,) * D1.counts[3]])


def test_colimit_glues_edges_into_circle():
    D0, D1 = point(3), representable(1, 3)
    ends = enumerate_maps(D0, D1)
    D = Diagram((D1, D0, D0), ((1, 0, ends[0]), (2, 0, ends[1]), (1, 0, ends[1])))
    c = colimit_of(D)
    assert c.apex.counts[0] == 1 and len(c.apex.nondegenerate(1)) == 1


def test_disjoint_union_counts():
    U, legs = disjoint_union(point(3), representable(1, 3))
    assert U.counts == tuple(a + b for a, b in zip(point(3).counts, representable(1, 3).counts))
    assert all(l.is_valid() for l in legs)


def test_free_completion_matches_representable():
    D = representable(2, 3)
    # keep only nondegenerate simplices of Delta[2]
    keep = [D.nondegenerate(n) for n in range(3)]
    idx = [{x: k for k, x in enumerate(l)} for l in keep]
    faces = [()] + [[[idx[n - 1][D.faces[n][i][x]] for x in keep[n]] for i in range(n + 1)] for n in (1, 2)]
    semi = TruncSimplicialSet(2, [len(k) for k in keep], faces)
    full = free_completion(semi, 3)
    assert full.counts == D.counts
    assert full.validate().passed


def test_json_roundtrip(torus):
    again = TruncSimplicialSet.from_json(torus.to_json())
    assert again.counts == torus.counts and again.faces == torus.faces
    assert again.degeneracies == torus.degeneracies


def test_malformed_json_rejected():
    with pytest.raises(InvalidDiagram):
        TruncSimplicialSet.from_json({"level": 1, "simplices": [["v"], ["e"]], "faces": {"(1,0)": {"e": "w"}}})
    with pytest.raises(LevelMismatch):
        TruncSimplicialSet.from_json({"level": 0, "simplices": [["v"], ["e"]]})


def test_category_laws_and_products():
    C = TruncSSetCategory(2)
    assert verify_category_laws(C).passed
    w = C.product(C.representable(1), C.representable(1))
    assert C.verify_product(w)
    assert C.find_terminal() is C.point()
