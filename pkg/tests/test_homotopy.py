import pytest

from homcat.errors import AxiomUnavailable, CompositionIllDefined, PreconditionFailed
from homcat.fincat import Function
from homcat.homotopy import HomotopyClasses, HomotopyContext, QuotientCategory


@pytest.fixture(scope="module")
def fin(finset_F):
    return HomotopyContext(finset_F)


@pytest.fixture(scope="module")
def ss(sset_F):
    return HomotopyContext(sset_F)


def test_lambda_maps_finset(fin):
    lam = fin.lambda_maps(2)
    # X x F(1) = 2 x 2 with pairs (x, e) at index 2x + e; lambda_0 hits e = 1, lambda_1 hits e = 0
    assert lam.lam0 == Function(2, 4, (1, 3)) and lam.lam1 == Function(2, 4, (0, 2))
    for n in range(3):
        assert fin.check_lambda_naturality(3, n).passed


def test_finset_single_class(fin):
    for X in (1, 2, 3):
        for Y in (1, 2, 3):
            cls = fin.homotopy_classes(X, Y)
            assert len(cls.classes) == 1
            assert cls.raw_is_equivalence and cls.raw_symmetric()


def test_reflexivity_everywhere(fin, ss, sset_F):
    C = sset_F.category
    for X in C.objects():
        for Y in C.objects():
            for f in C.hom(X, Y):
                h = ss.constant_homotopy(f)
                assert ss.is_homotopy(h.H, f, f)
    for f in fin.C.hom(2, 3):
        assert fin.is_homotopy(fin.constant_homotopy(f).H, f, f)


def test_reverse_in_finset(fin):
    C = fin.C
    f, g = C.hom(2, 2)[0], C.hom(2, 2)[3]
    h = fin.homotopic(f, g)
    r = fin.reverse_homotopy(h)
    assert (r.f, r.g) == (g, f)


def test_concat_blocked_in_finset(fin):
    C = fin.C
    f = C.hom(1, 2)[0]
    h = fin.constant_homotopy(f)
    with pytest.raises(AxiomUnavailable) as exc:
        fin.concat_homotopy(h, h)
    assert exc.value.axiom == 4


def test_sset_one_directional(ss, sset_F):
    C = sset_F.category
    v0, v1 = C.hom(C.point(), C.representable(1))
    assert ss.homotopic(v1, v0) is not None
    assert ss.homotopic(v0, v1) is None
    cls = ss.homotopy_classes(C.point(), C.representable(1))
    assert not cls.raw_is_equivalence and not cls.raw_symmetric()
    assert cls.classes == [[0, 1]]
    with pytest.raises(AxiomUnavailable) as exc:
        ss.reverse_homotopy(ss.homotopic(v1, v0))
    assert exc.value.axiom == 3


def test_composition_with_homotopies(ss, sset_F):
    C = sset_F.category
    v0, v1 = C.hom(C.point(), C.representable(1))
    h = ss.homotopic(v1, v0)
    for k in C.hom(C.representable(1), C.representable(2)):
        hk = ss.post_compose(k, h)
        assert ss.is_homotopy(hk.H, hk.f, hk.g)
    for k in C.hom(C.point(), C.point()):
        hk = ss.pre_compose(h, k)
        assert (hk.f, hk.g) == (v1, v0)


def test_non_homotopy_rejected(ss, sset_F):
    C = sset_F.category
    v0, v1 = C.hom(C.point(), C.representable(1))
    H = ss.homotopic(v1, v0).H
    with pytest.raises(PreconditionFailed):
        ss.make(H, v0, v1)


def test_contractible_and_equivalences(fin, ss, sset_F):
    C = sset_F.category
    assert fin.is_contractible(3) is not None
    assert ss.is_contractible(C.representable(1)) is not None
    assert ss.is_contractible(C.representable(2)) is not None
    assert ss.is_contractible(C.boundary(2)) is None
    assert fin.find_homotopy_equivalence(1, 2) is not None
    assert ss.find_homotopy_equivalence(C.point(), C.boundary(2)) is None


def test_quotient_category_finset(fin):
    Q = fin.homotopy_category([1, 2, 3])
    assert all(len(Q.hom(a, b)) == 1 for a in (1, 2, 3) for b in (1, 2, 3))
    f = Q.hom(1, 2)[0]
    assert Q.compose(Q.identity(2), f) == f


def test_lattice_homotopy_category(lattice_F):
    hc = HomotopyContext(lattice_F)
    for X in lattice_F.category.objects():
        for Y in lattice_F.category.objects():
            cls = hc.homotopy_classes(X, Y)
            assert cls.raw_is_equivalence
    Q = hc.homotopy_category()
    assert len(Q.objects()) == 4
    h = hc.constant_homotopy(lattice_F.category.identity("a"))
    glued = hc.concat_homotopy(h, h)
    assert glued.f == glued.g == h.f


def test_quotient_rejects_non_congruence(fin):
    C = fin.C
    objs = [1, 2]
    parts = {(a, b): fin.homotopy_classes(a, b) for a in objs for b in objs}
    # on 2 -> 2 lump {id, swap} together while 1 -> 2 keeps the two points apart
    p = parts[(2, 2)]
    parts[(2, 2)] = HomotopyClasses(2, 2, p.homs, [[0, 3], [1, 2]], p.raw, False)
    p = parts[(1, 2)]
    parts[(1, 2)] = HomotopyClasses(1, 2, p.homs, [[0], [1]], p.raw, False)
    with pytest.raises(CompositionIllDefined):
        QuotientCategory(C, objs, parts)
