import pytest

from homcat.cosimplicial import (
    CosimplicialObject,
    boundary_substitution,
    check_axiom_1_2,
    check_axiom_join,
    check_axiom_swap,
    cosimplicial_from_json,
    verify_functoriality,
)
from homcat.errors import InvalidDiagram, MissingMorphism
from homcat.fincat import Function


def statuses(F):
    return [r.status for r in check_axiom_1_2(F)] + [check_axiom_swap(F).status, check_axiom_join(F).status]


def test_functoriality_of_builtins(sset_F, finset_F, lattice_F):
    for F in (sset_F, finset_F, lattice_F):
        assert verify_functoriality(F).passed


def test_broken_face_detected(finset_F):
    faces = dict(finset_F.faces)
    faces[(2, 0)] = faces[(2, 1)]
    G = CosimplicialObject(finset_F.category, 2, finset_F.cells, faces, finset_F.degeneracies)
    rep = verify_functoriality(G)
    assert not rep.passed and "d_" in rep.witness["identity"]


def test_finset_axioms(finset_F):
    assert statuses(finset_F) == ["pass", "pass", "pass", "fail"]
    rep = check_axiom_join(finset_F)
    assert rep.witness["apex_size"] == 3


def test_finset_swap_is_involution(finset_F):
    rep = check_axiom_swap(finset_F)
    assert rep.witness["involutive"]
    w = rep.data
    C = finset_F.category
    assert C.compose(w, finset_F.face(1, 0)) == finset_F.face(1, 1)
    assert C.compose(w, finset_F.face(1, 1)) == finset_F.face(1, 0)


def test_sset_axioms(sset_F):
    assert statuses(sset_F) == ["pass", "pass", "fail", "fail"]
    # the pushout of two edges along a vertex is a path of two edges
    assert check_axiom_join(sset_F).witness["apex_counts"] == [3, 5, 7, 9]


def test_lattice_axioms(lattice_F):
    assert statuses(lattice_F) == ["pass"] * 4


def test_fold_join_only(fold_F):
    assert statuses(fold_F) == ["fail", "fail", "fail", "pass"]
    rep = check_axiom_join(fold_F)
    assert rep.witness["legs_into_F(1)"] == ["idI", "a", "t"]


def test_missing_generators(fold_F):
    with pytest.raises(MissingMorphism):
        fold_F.degeneracy(0, 0)


def test_wrongly_typed_face_rejected(finset_F):
    with pytest.raises(InvalidDiagram):
        CosimplicialObject(finset_F.category, 1, [1, 2], {(1, 0): Function(1, 3, (0,))})


def test_json_reader_diagnostics(lattice_F):
    with pytest.raises(InvalidDiagram):
        cosimplicial_from_json(lattice_F.category, {"level": 1, "cells": ["top", "nope"], "faces": {}})
    with pytest.raises(InvalidDiagram):
        cosimplicial_from_json(lattice_F.category, {"level": 1, "cells": ["top", "top"], "faces": {"1-0": "top"}})


def test_truncation(sset_F):
    G = sset_F.truncated(2)
    assert G.level == 2 and verify_functoriality(G).passed


def test_boundary_substitution_stays_functorial(sset_F):
    G = boundary_substitution(sset_F, 2)
    assert verify_functoriality(G).passed
    assert not G.has_degeneracies
    assert G.cells[2].name == "dDelta[2]"
