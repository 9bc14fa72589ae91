import pytest

from homcat.complexes import (
    AttachmentInstruction,
    CellComplexDiagram,
    attach_handle,
    boundary_sphere,
    build_cw,
    colim_cell_complex,
    load_recipe,
    parse_recipe,
)
from homcat.cosimplicial import finset_cosimplicial, sset_cosimplicial
from homcat.errors import InvalidDiagram
from homcat.fincat import FinSet
from homcat.homology import betti_numbers, chain_complex, chain_map, homology, induced_homology_map
from homcat.sset import TruncSSetCategory
from oracles import betti_oracle


@pytest.fixture(scope="module")
def F():
    return sset_cosimplicial(TruncSSetCategory(3))


def edge(tag):
    return AttachmentInstruction(1, {"0": {"0": "0", "1": "0"}}, tag)


def test_spheres(F):
    C = F.category
    S0 = boundary_sphere(F, 0)
    assert S0.obj.counts[0] == 2 and betti_numbers(chain_complex(S0.obj)) == (2, 0, 0)
    S1 = boundary_sphere(F, 1)
    assert betti_numbers(chain_complex(S1.obj), 1) == (1, 1)
    assert C.find_isomorphism(S1.obj, C.boundary(2)) is not None
    S2 = boundary_sphere(F, 2)
    assert betti_numbers(chain_complex(S2.obj)) == (1, 0, 1) == betti_oracle(S2.obj)
    assert boundary_sphere(F, 1) is S1


@pytest.mark.parametrize("k", [1, 2])
def test_disk_kills_sphere_class(F, k):
    S = boundary_sphere(F, k)
    CS = chain_complex(S.obj, reduced=True)
    CD = chain_complex(F.cells[k + 1], reduced=True)
    M = induced_homology_map(chain_map(S.inclusion, reduced=True), homology(CS, k), homology(CD, k))
    assert not homology(CS, k).is_zero and M.is_zero()


def test_sphere_beyond_level(F):
    with pytest.raises(InvalidDiagram):
        boundary_sphere(F, 3)


def test_circle_from_one_handle(F):
    a = attach_handle(F, F.cells[0], edge("e"))
    assert betti_numbers(chain_complex(a.obj), 1) == (1, 1)
    assert a.base_leg.is_valid() and a.disk_leg.is_valid()


def test_attach_along_own_boundary_gives_disk(F):
    C = F.category
    S = boundary_sphere(F, 1)
    a = attach_handle(F, S.obj, AttachmentInstruction(2, C.identity(S.obj), "D"))
    assert C.find_isomorphism(a.obj, F.cells[2]) is not None
    assert homology(chain_complex(a.obj), 1).is_zero


def test_bad_alpha_rejected(F):
    with pytest.raises(InvalidDiagram):
        attach_handle(F, F.cells[0], AttachmentInstruction(1, {"0": {"0": "0"}}, "e"))
    with pytest.raises(InvalidDiagram):
        attach_handle(F, F.cells[0], AttachmentInstruction(1, {"0": {"0": "0", "1": "nope"}}, "e"))


def test_build_cw_recipes(F, data_dir):
    tor = build_cw(F, load_recipe(data_dir / "torus_cw.json"))
    assert [betti_numbers(chain_complex(X)) for X in tor.skeleta] == [
        (1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 3, 0), (1, 2, 0), (1, 2, 1)
    ]
    kl = build_cw(F, load_recipe(data_dir / "klein_cw.json"))
    H1 = homology(chain_complex(kl.obj), 1)
    assert (H1.betti, H1.torsion) == (1, [2])
    disk = build_cw(F, load_recipe(data_dir / "disk_cw.json"))
    assert betti_numbers(chain_complex(disk.obj)) == (1, 0, 0)


@pytest.mark.parametrize("recipe", ["torus_cw.json", "klein_cw.json", "disk_cw.json"])
def test_skeleton_homology_stabilizes(F, data_dir, recipe):
    cells = load_recipe(data_dir / recipe)
    cw = build_cw(F, cells)
    # the k-skeleton is the last stage before the first cell of dimension k+1
    skel = {0: cw.skeleta[0]}
    for instr, stage in zip(cells, cw.skeleta[1:]):
        skel[instr.k] = stage
    for k in sorted(skel):
        if k + 1 not in skel:
            continue
        lo, hi = chain_complex(skel[k]), chain_complex(skel[k + 1])
        for n in range(k):
            assert homology(lo, n).to_json() == homology(hi, n).to_json()
        assert homology(lo, k).betti >= homology(hi, k).betti


def test_empty_recipe_is_start(F):
    cw = build_cw(F, [])
    assert cw.obj is F.cells[0] and cw.skeleta == [F.cells[0]]


def test_cell_complex_diagrams(F):
    C = F.category
    single = colim_cell_complex(F, CellComplexDiagram((0,)))
    assert C.find_isomorphism(single.obj, F.cells[0]) is not None
    edge_diag = CellComplexDiagram((0, 0, 1), ((0, 2, 0), (1, 2, 1)))
    cx = colim_cell_complex(F, edge_diag)
    assert C.find_isomorphism(cx.obj, F.cells[1]) is not None and cx.dimension == 1
    loop = colim_cell_complex(F, CellComplexDiagram((0, 1), ((0, 1, 0), (0, 1, 1))))
    assert betti_numbers(chain_complex(loop.obj), 1) == (1, 1)
    # three vertices, three edges: vertex j of the triangle sits in the edges omitting the others
    tri = CellComplexDiagram(
        (0, 0, 0, 1, 1, 1),
        ((1, 3, 1), (2, 3, 0), (0, 4, 1), (2, 4, 0), (0, 5, 1), (1, 5, 0)),
    )
    cx = colim_cell_complex(F, tri)
    assert C.find_isomorphism(cx.obj, boundary_sphere(F, 1).obj) is not None


def test_invalid_cell_diagrams(F):
    with pytest.raises(InvalidDiagram):
        colim_cell_complex(F, CellComplexDiagram((0, 2), ((0, 1, 0),)))
    with pytest.raises(InvalidDiagram):
        colim_cell_complex(F, CellComplexDiagram((0, 1), ((0, 1, 5),)))


def test_recipe_parsing():
    assert parse_recipe([{"k": 0}])[0].k == 0
    with pytest.raises(InvalidDiagram):
        parse_recipe({"cells": [{"alpha": {}}]})
    with pytest.raises(InvalidDiagram):
        parse_recipe([{"k": 1}])


def test_finset_sphere():
    G = finset_cosimplicial(FinSet(3), 2)
    S = boundary_sphere(G, 1)
    assert S.obj == 3 and G.category.inverse(S.inclusion) is not None
