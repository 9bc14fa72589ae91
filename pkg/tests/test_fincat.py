from itertools import product

import pytest

from homcat.errors import CompositionMismatch, MissingMorphism, ProductNotFound, ResourceLimitExceeded
from homcat.fincat import Budget, Diagram, FinSet, Function, TableCategory, verify_category_laws
from homcat.report import CheckReport


def brute_functions(a, b):
    return [Function(a, b, v) for v in product(range(b), repeat=a)]


def test_finset_homs_are_all_functions():
    C = FinSet(3)
    for a in C.objects():
        for b in C.objects():
            assert sorted(C.hom(a, b)) == sorted(brute_functions(a, b))


def test_finset_category_laws():
    rep = verify_category_laws(FinSet(3))
    assert rep.passed and rep.checked > 0


def test_finset_terminal_and_products():
    C = FinSet(3)
    assert C.find_terminal() == 1
    assert not C.is_terminal(2)
    w = C.product(1, 3)
    assert w.apex == 3 and C.verify_product(w)
    w = C.product(2, 1)
    assert C.verify_product(w)
    # the pairing is the unique factorization
    f, g = Function(2, 2, (1, 0)), Function(2, 1, (0, 0))
    u = C.pairing(f, g, w)
    assert C.compose(w.proj1, u) == f and C.compose(w.proj2, u) == g


def test_canonical_product_beyond_test_range(fold_F):
    assert FinSet(2).product(2, 2).apex == 4
    # the fold category has no product of its two objects
    with pytest.raises(ProductNotFound):
        fold_F.category.product("P", "I")


def test_finset_pushout_of_endpoints():
    C = FinSet(3)
    d0, d1 = Function(1, 2, (1,)), Function(1, 2, (0,))
    D = Diagram((2, 1, 2), ((1, 0, d0), (1, 2, d1)))
    c = C.colimit(D)
    assert c.apex == 3
    assert C.verify_colimit(D, c)


def lattice_data():
    objs = ["0", "1"]
    return objs, [
        {"id": "id0", "src": "0", "dst": "0"},
        {"id": "id1", "src": "1", "dst": "1"},
        {"id": "u", "src": "0", "dst": "1"},
    ]


def test_table_category_validation():
    objs, morphisms = lattice_data()
    C = TableCategory(objs, morphisms, [], {"0": "id0", "1": "id1"})
    assert verify_category_laws(C).passed
    assert C.find_terminal() == "1"
    bad = morphisms + [{"id": "v", "src": "1", "dst": "0"}]
    with pytest.raises(MissingMorphism):
        TableCategory(objs, bad, [], {"0": "id0", "1": "id1"})
    with pytest.raises(CompositionMismatch):
        TableCategory(objs, bad, [["v", "u", "u"], ["u", "v", "id1"]], {"0": "id0", "1": "id1"})


def test_mutated_table_fails_laws(fold_F):
    C = fold_F.category
    assert verify_category_laws(C).passed
    broken = C.with_entry("t", "t", "idI")
    rep = verify_category_laws(broken)
    assert not rep.passed


def test_table_json_roundtrip(lattice_F):
    C = lattice_F.category
    again = TableCategory.from_json(C.to_json())
    assert again.to_json() == C.to_json()


def test_lattice_meets_are_products(lattice_F):
    C = lattice_F.category
    assert C.product("a", "b").apex == "bot"
    assert C.product("top", "a").apex == "a"


def test_budget_enforced():
    b = Budget(3)
    b.spend(3)
    with pytest.raises(ResourceLimitExceeded):
        b.spend()
    C = FinSet(3, bound=5)
    with pytest.raises(ResourceLimitExceeded):
        verify_category_laws(C)


def test_isomorphisms_and_automorphisms():
    C = FinSet(3)
    assert len(C.automorphisms(3)) == 6
    assert C.find_isomorphism(2, 3) is None
    f = Function(2, 2, (1, 0))
    assert C.inverse(f) == f


def test_check_report_truthiness():
    assert CheckReport(True) and not CheckReport(False)
