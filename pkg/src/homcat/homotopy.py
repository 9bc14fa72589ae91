"""Homotopies ``H: X x F(1) -> Y`` and everything decided by searching for them.

Endpoint convention: ``lambda_0`` uses ``F(d_{1,0})`` and picks out ``f``;
``lambda_1`` uses ``F(d_{1,1})`` and picks out ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .cosimplicial import CosimplicialObject, check_axiom_join
from .errors import (
    AxiomUnavailable,
    CompositionIllDefined,
    CompositionMismatch,
    FactorizationNotUnique,
    PreconditionFailed,
)
from .fincat import FiniteCategory, ProductWitness, _UnionFind
from .report import CheckReport


@dataclass(frozen=True)
class LambdaPair:
    lam0: Any
    lam1: Any
    product: ProductWitness


@dataclass(frozen=True)
class Homotopy:
    f: Any
    g: Any
    H: Any
    product: ProductWitness


class HomotopyContext:
    """Caches the endpoint inclusions and axiom witnesses for one ``F``."""

    def __init__(self, F: CosimplicialObject):
        self.F = F
        self.C = F.category
        self._lambdas: dict = {}
        self._swap = None
        self._swap_done = False
        self._join = None
        self._join_done = False

    # -- endpoint inclusions ------------------------------------------------

    def lambda_maps(self, X) -> LambdaPair:
        if X in self._lambdas:
            return self._lambdas[X]
        C, F = self.C, self.F
        one = F.cells[0]
        if not C.is_terminal(one):
            raise AxiomUnavailable(2, "F(0) is not terminal; endpoint inclusions undefined")
        w = C.product(X, F.cells[1])
        bang = C.hom(X, one)[0]
        idx = C.identity(X)
        lams = []
        for j in (0, 1):
            lam = C.pairing(idx, C.compose(F.face(1, j), bang), w)
            # same map routed through X ~ X x 1 and id x F(d_{1,j})
            via_unit = C.compose(C.product_of_morphisms(idx, F.face(1, j)), C.pairing(idx, bang, C.product(X, one)))
            if lam != via_unit:
                raise PreconditionFailed("endpoint inclusion depends on the route through X x 1")
            lams.append(lam)
        pair = LambdaPair(lams[0], lams[1], w)
        self._lambdas[X] = pair
        return pair

    def check_lambda_naturality(self, X, n: int) -> CheckReport:
        """``lambda^X_j o sigma = (sigma x id) o lambda^{F(n)}_j`` for every ``sigma: F(n) -> X``."""
        C, F = self.C, self.F
        lx, lc = self.lambda_maps(X), self.lambda_maps(F.cells[n])
        idF1 = C.identity(F.cells[1])
        checked = 0
        for sigma in C.hom(F.cells[n], X):
            prod = C.product_of_morphisms(sigma, idF1)
            for lam_x, lam_c in ((lx.lam0, lc.lam0), (lx.lam1, lc.lam1)):
                checked += 1
                if C.compose(lam_x, sigma) != C.compose(prod, lam_c):
                    return CheckReport(False, checked, {"sigma": C.describe_morphism(sigma)})
        return CheckReport(True, checked)

    # -- homotopies ---------------------------------------------------------

    def _typed(self, H, f, g):
        C = self.C
        X, Y = C.source(f), C.target(f)
        if C.source(g) != X or C.target(g) != Y:
            raise CompositionMismatch("f and g are not parallel")
        lam = self.lambda_maps(X)
        if C.source(H) != lam.product.apex or C.target(H) != Y:
            raise CompositionMismatch("H is not a morphism X x F(1) -> Y")
        return lam

    def is_homotopy(self, H, f, g) -> bool:
        lam = self._typed(H, f, g)
        return self.C.compose(H, lam.lam0) == f and self.C.compose(H, lam.lam1) == g

    def make(self, H, f, g) -> Homotopy:
        if not self.is_homotopy(H, f, g):
            raise PreconditionFailed("H does not restrict to f and g")
        return Homotopy(f, g, H, self.lambda_maps(self.C.source(f)).product)

    def endpoints(self, H, X) -> tuple:
        lam = self.lambda_maps(X)
        return self.C.compose(H, lam.lam0), self.C.compose(H, lam.lam1)

    def constant_homotopy(self, f) -> Homotopy:
        w = self.lambda_maps(self.C.source(f)).product
        return self.make(self.C.compose(f, w.proj1), f, f)

    def swap(self):
        """An automorphism of ``F(1)`` exchanging both endpoint faces."""
        if not self._swap_done:
            C, F = self.C, self.F
            d0, d1 = F.face(1, 0), F.face(1, 1)
            self._swap = next(
                (w for w in C.automorphisms(F.cells[1]) if C.compose(w, d0) == d1 and C.compose(w, d1) == d0), None
            )
            self._swap_done = True
        if self._swap is None:
            raise AxiomUnavailable(3, "axiom-3-unavailable: no swap automorphism of F(1)")
        return self._swap

    def reverse_homotopy(self, h: Homotopy) -> Homotopy:
        C = self.C
        X = C.source(h.f)
        flip = C.product_of_morphisms(C.identity(X), self.swap())
        return self.make(C.compose(h.H, flip), h.g, h.f)

    def join_legs(self):
        if not self._join_done:
            rep = check_axiom_join(self.F)
            self._join = rep.data if rep.passed else None
            self._join_done = True
        if self._join is None:
            raise AxiomUnavailable(4, "axiom-4-unavailable: the endpoint pushout is not F(1)")
        return self._join

    def concat_homotopy(self, h1: Homotopy, h2: Homotopy) -> Homotopy:
        """Glue ``h1: f => g`` and ``h2: g => h`` through the endpoint pushout."""
        C = self.C
        if h1.g != h2.f:
            raise PreconditionFailed("homotopies do not share the middle morphism")
        left, center, right = self.join_legs()
        X = C.source(h1.f)
        idx = C.identity(X)
        via_left = C.product_of_morphisms(idx, left)
        via_right = C.product_of_morphisms(idx, right)
        # the cocone: h2 on the left copy, h1 on the right copy
        found = [
            K
            for K in C.hom(h1.product.apex, C.target(h1.f))
            if C.compose(K, via_left) == h2.H and C.compose(K, via_right) == h1.H
        ]
        if len(found) != 1:
            raise FactorizationNotUnique(f"{len(found)} factorizations of the glued homotopy")
        return self.make(found[0], h1.f, h2.g)

    def post_compose(self, k, h: Homotopy) -> Homotopy:
        C = self.C
        return self.make(C.compose(k, h.H), C.compose(k, h.f), C.compose(k, h.g))

    def pre_compose(self, h: Homotopy, k) -> Homotopy:
        C = self.C
        kx = C.product_of_morphisms(k, C.identity(self.F.cells[1]))
        return self.make(C.compose(h.H, kx), C.compose(h.f, k), C.compose(h.g, k))

    # -- relation -------------------------------------------------------------

    def homotopic(self, f, g) -> Homotopy | None:
        C = self.C
        lam = self.lambda_maps(C.source(f))
        for H in C.hom(lam.product.apex, C.target(f)):
            if C.compose(H, lam.lam0) == f and C.compose(H, lam.lam1) == g:
                return Homotopy(f, g, H, lam.product)
        return None

    def homotopy_classes(self, X, Y) -> "HomotopyClasses":
        C = self.C
        homs = C.hom(X, Y)
        pos = {m: k for k, m in enumerate(homs)}
        lam = self.lambda_maps(X)
        raw: set[tuple[int, int]] = set()
        witnesses: dict[tuple[int, int], Any] = {}
        for H in C.hom(lam.product.apex, Y):
            a, b = pos[C.compose(H, lam.lam0)], pos[C.compose(H, lam.lam1)]
            if (a, b) not in raw:
                raw.add((a, b))
                witnesses[(a, b)] = H
        uf = _UnionFind(len(homs))
        for a, b in raw:
            uf.union(a, b)
        groups: dict[int, list[int]] = {}
        for k in range(len(homs)):
            groups.setdefault(uf.find(k), []).append(k)
        classes = sorted(groups.values())
        closure = {(a, b) for cls in classes for a in cls for b in cls}
        return HomotopyClasses(X, Y, list(homs), classes, raw, raw == closure, witnesses)

    def homotopy_category(self, objects: Sequence | None = None) -> "QuotientCategory":
        objs = list(objects) if objects is not None else self.C.objects()
        parts = {(a, b): self.homotopy_classes(a, b) for a in objs for b in objs}
        return QuotientCategory(self.C, objs, parts)

    def is_homotopy_equivalence(self, f):
        """Some ``g`` with both composites homotopic (up to closure) to identities."""
        C = self.C
        A, B = C.source(f), C.target(f)
        ca, cb = self.homotopy_classes(A, A), self.homotopy_classes(B, B)
        for g in C.hom(B, A):
            if ca.same(C.compose(g, f), C.identity(A)) and cb.same(C.compose(f, g), C.identity(B)):
                return g
        return None

    def find_homotopy_equivalence(self, A, B):
        for f in self.C.hom(A, B):
            g = self.is_homotopy_equivalence(f)
            if g is not None:
                return f, g
        return None

    def is_contractible(self, X):
        """A point ``p: 1 -> X`` with ``id_X`` homotopic to ``p o !``; else ``None``."""
        C = self.C
        one = C.find_terminal()
        if one is None:
            raise AxiomUnavailable(1, "no terminal object")
        cls = self.homotopy_classes(X, X)
        bang = C.hom(X, one)[0]
        for p in C.hom(one, X):
            if cls.same(C.identity(X), C.compose(p, bang)):
                return p
        return None


@dataclass
class HomotopyClasses:
    source: Any
    target: Any
    homs: list
    classes: list[list[int]]
    raw: set
    raw_is_equivalence: bool
    witnesses: dict = field(default_factory=dict, repr=False)

    def class_of(self, m) -> int:
        k = self.homs.index(m)
        return next(c for c, cls in enumerate(self.classes) if k in cls)

    def same(self, a, b) -> bool:
        return self.class_of(a) == self.class_of(b)

    def raw_symmetric(self) -> bool:
        return all((b, a) in self.raw for a, b in self.raw)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


@dataclass(frozen=True, order=True)
class HomotopyClass:
    src_index: int
    dst_index: int
    index: int


class QuotientCategory(FiniteCategory):
    """Same objects; morphisms are homotopy classes composed through representatives.

    Construction fails with :class:`CompositionIllDefined` if the class of a
    composite depends on the representatives chosen.
    """

    def __init__(self, C: FiniteCategory, objects: list, parts: dict):
        super().__init__(C.bound)
        self.base = C
        self._objects = objects
        self.parts = parts
        self._table: dict = {}
        n = len(objects)
        for a in range(n):
            for b in range(n):
                pab = parts[(objects[a], objects[b])]
                for c in range(n):
                    pbc = parts[(objects[b], objects[c])]
                    pac = parts[(objects[a], objects[c])]
                    pos_ac = {m: k for k, m in enumerate(pac.homs)}
                    cls_ac = {k: ci for ci, cls in enumerate(pac.classes) for k in cls}
                    for i, P in enumerate(pab.classes):
                        for j, Q in enumerate(pbc.classes):
                            seen = set()
                            for p in P:
                                for q in Q:
                                    seen.add(cls_ac[pos_ac[C.compose(pbc.homs[q], pab.homs[p])]])
                            if len(seen) != 1:
                                raise CompositionIllDefined(
                                    "class of a composite depends on representatives",
                                    {"objects": [C.describe_object(objects[x]) for x in (a, b, c)], "classes": [i, j]},
                                )
                            self._table[(HomotopyClass(b, c, j), HomotopyClass(a, b, i))] = HomotopyClass(a, c, seen.pop())

    def objects(self) -> list:
        return list(self._objects)

    def _index(self, a) -> int:
        return next(k for k, o in enumerate(self._objects) if o is a or o == a)

    def hom(self, a, b) -> list:
        ia, ib = self._index(a), self._index(b)
        return [HomotopyClass(ia, ib, k) for k in range(len(self.parts[(a, b)].classes))]

    def compose(self, g: HomotopyClass, f: HomotopyClass) -> HomotopyClass:
        if f.dst_index != g.src_index:
            raise CompositionMismatch("classes are not composable")
        return self._table[(g, f)]

    def identity(self, a) -> HomotopyClass:
        ia = self._index(a)
        part = self.parts[(a, a)]
        return HomotopyClass(ia, ia, part.class_of(self.base.identity(a)))

    def source(self, f: HomotopyClass):
        return self._objects[f.src_index]

    def target(self, f: HomotopyClass):
        return self._objects[f.dst_index]

    def representative(self, f: HomotopyClass):
        part = self.parts[(self.source(f), self.target(f))]
        return part.homs[part.classes[f.index][0]]

