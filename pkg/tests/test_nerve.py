import pytest

from homcat.nerve import base_transform, check_base_naturality, nerve, nerve_map, yoneda_check
from homcat.sset import TruncSSetCategory


def test_finset_nerve_counts(finset_F):
    C = finset_F.category
    for X in C.objects():
        N = nerve(finset_F, X)
        assert N.counts == tuple(X ** (n + 1) for n in range(finset_F.level + 1))
        assert N.validate().passed


def test_yoneda_on_corpus(sset_F, torus, klein):
    C = sset_F.category
    objs = [C.point(), C.representable(1), C.representable(2), C.representable(3), C.boundary(2), C.boundary(3), torus, klein]
    for X in objs:
        N = nerve(sset_F, X)
        assert N.counts == X.counts
        assert yoneda_check(sset_F, X, N).passed


def test_base_naturality(sset_F, finset_F):
    for F in (sset_F, finset_F):
        X = F.cells[1]
        N = nerve(F, X)
        assert len(base_transform(F, N)) == F.level
        assert check_base_naturality(F, N).passed


def test_nerve_map_is_simplicial(finset_F):
    C = finset_F.category
    for f in C.hom(2, 3):
        assert nerve_map(finset_F, f).is_valid()
