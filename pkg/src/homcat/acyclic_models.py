"""The natural chain homotopy between the two endpoint inclusions.

``P^X_n: C_n(X) -> C_{n+1}(X x F(1))`` is fixed on the model objects
``F(n)`` by solving one boundary equation per degree, then transported to
every ``X`` along ``sigma x id`` for ``sigma: F(n) -> X``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .cosimplicial import AxiomReport, CosimplicialObject, check_axiom_1_2, check_axiom_join, check_axiom_swap
from .convexity import check_acyclic, check_axiom_convex
from .errors import (
    AxiomUnavailable,
    BoundaryNotNilpotent,
    HomcatError,
    LevelMismatch,
    NotACycle,
    PreconditionFailed,
    Unsolvable,
)
from .homology import (
    ChainComplex,
    chain_complex,
    chain_map,
    check_chain_map,
    homology,
    homology_map_equal,
    induced_homology_map,
)
from .homotopy import Homotopy, HomotopyContext
from .matrix import IntegerMatrix
from .nerve import nerve, nerve_map
from .report import CheckReport
from .snf import solve_boundary


class ObjectData:
    """Nerve, chains and endpoint chain maps of one object ``X``."""

    def __init__(self, hc: HomotopyContext, X):
        F, C = hc.F, hc.C
        self.X = X
        self.N = nerve(F, X)
        self.chains = chain_complex(self.N)
        lam = hc.lambda_maps(X)
        self.product = lam.product
        self.NP = nerve(F, lam.product.apex)
        self.pchains = chain_complex(self.NP)
        self.index_p = [{s: k for k, s in enumerate(lvl)} for lvl in self.NP.data]
        self.lam0 = chain_map(nerve_map(F, lam.lam0, self.N, self.NP))
        self.lam1 = chain_map(nerve_map(F, lam.lam1, self.N, self.NP))


@dataclass
class PrismFamily:
    """Model chains ``betas[n]`` (keyed by simplices of ``F(n) x F(1)``) and transported matrices."""

    hc: HomotopyContext
    n_max: int
    betas: list[dict]
    solves: list[dict] = field(default_factory=list)
    _objects: dict = field(default_factory=dict, repr=False)
    _matrices: dict = field(default_factory=dict, repr=False)

    @property
    def F(self) -> CosimplicialObject:
        return self.hc.F

    def data(self, X) -> ObjectData:
        if X not in self._objects:
            self._objects[X] = ObjectData(self.hc, X)
        return self._objects[X]

    def matrix(self, X, n: int) -> IntegerMatrix:
        """``P^X_n`` as a matrix ``C_{n+1}(X x F(1)) <- C_n(X)``."""
        if not 0 <= n <= self.n_max:
            raise LevelMismatch(f"prism degree {n} outside 0..{self.n_max}")
        key = (X, n)
        if key not in self._matrices:
            C, F = self.hc.C, self.F
            d = self.data(X)
            M = IntegerMatrix(d.pchains.rank(n + 1), d.chains.rank(n))
            idF1 = C.identity(F.cells[1])
            for col, sigma in enumerate(d.N.data[n]):
                push = C.product_of_morphisms(sigma, idF1)
                for tau, c in self.betas[n].items():
                    M.data[d.index_p[n + 1][C.compose(push, tau)]][col] += c
            self._matrices[key] = M
        return self._matrices[key]

    def with_beta(self, n: int, beta: dict) -> "PrismFamily":
        betas = list(self.betas)
        betas[n] = dict(beta)
        return PrismFamily(self.hc, self.n_max, betas, self.solves)

    def to_json(self) -> dict:
        C = self.hc.C
        out = []
        for n, beta in enumerate(self.betas):
            d = self.data(self.F.cells[n])
            labels = d.NP.labels[n + 1]
            out.append({"degree": n, "beta": {labels[d.index_p[n + 1][t]]: c for t, c in beta.items()}})
        return {"n_max": self.n_max, "models": out, "solves": self.solves}


def _vector_to_chain(NP, n: int, vec: Sequence[int]) -> dict:
    return {NP.data[n][k]: c for k, c in enumerate(vec) if c}


def build_P(F: CosimplicialObject, n_max: int, hc: HomotopyContext | None = None) -> PrismFamily:
    """Construct ``P`` degree by degree on the model objects.

    Raises :class:`Unsolvable` when a model product has a cycle that does not
    bound, i.e. when the cells are not acyclic enough.
    """
    hc = hc or HomotopyContext(F)
    C = F.category
    if n_max + 1 > F.level:
        raise LevelMismatch(f"prism degree {n_max} needs chains up to degree {n_max + 1} > {F.level}")
    if not C.is_terminal(F.cells[0]):
        raise PreconditionFailed("F(0) must be terminal")
    fam = PrismFamily(hc, n_max, [])
    # degree 0: minus the 1-simplex F(1) ~ F(0) x F(1), so that dP_0 = lambda_1 - lambda_0
    d0 = fam.data(F.cells[0])
    iota = C.pairing(C.hom(F.cells[1], F.cells[0])[0], C.identity(F.cells[1]), d0.product)
    fam.betas.append({iota: -1})
    fam.solves.append({"degree": 0, "rule": "base"})
    for n in range(1, n_max + 1):
        model = F.cells[n]
        d = fam.data(model)
        ident = d.N.data[n].index(C.identity(model))
        e = [0] * d.chains.rank(n)
        e[ident] = 1
        q = [a - b for a, b in zip(d.lam1[n].apply(e), d.lam0[n].apply(e))]
        correction = fam.matrix(model, n - 1).apply(d.chains.boundary(n).apply(e))
        q = [a - b for a, b in zip(q, correction)]
        if any(d.pchains.boundary(n).apply(q)):
            raise NotACycle(f"Q_{n}(Id) is not a cycle")
        try:
            beta = solve_boundary(d.pchains.boundary(n + 1), q, d.pchains.smith(n + 1))
        except Unsolvable as exc:
            raise Unsolvable(f"degree {n}: {exc}", witness={"degree": n, **(exc.witness or {})}) from None
        if d.pchains.boundary(n + 1).apply(beta) != q:
            raise BoundaryNotNilpotent("solver returned a wrong preimage")
        fam.betas.append(_vector_to_chain(d.NP, n + 1, beta))
        fam.solves.append({"degree": n, "rule": "solve", "Q_is_cycle": True, "support": sum(1 for c in beta if c)})
    return fam


def verify_prism(P: PrismFamily, X, n: int) -> CheckReport:
    """``lambda_1 - lambda_0 = dP + Pd`` and transport from the model, on every generator."""
    C, F = P.hc.C, P.F
    d = P.data(X)
    lhs = d.lam1[n] - d.lam0[n]
    rhs = d.pchains.boundary(n + 1) @ P.matrix(X, n)
    if n >= 1:
        rhs = rhs + P.matrix(X, n - 1) @ d.chains.boundary(n)
    if lhs != rhs:
        bad = next(j for j in range(lhs.cols) if lhs.column(j) != rhs.column(j))
        return CheckReport(False, 1, {"identity": "cross", "degree": n, "generator": d.N.labels[n][bad]})
    # naturality: P^X(sigma) = Chain(sigma x id)(P^{F(n)}(Id))
    model = F.cells[n]
    dm = P.data(model)
    col = dm.N.data[n].index(C.identity(model))
    model_chain = P.matrix(model, n).column(col)
    idF1 = C.identity(F.cells[1])
    checked = 1
    for j, sigma in enumerate(d.N.data[n]):
        push = C.product_of_morphisms(sigma, idF1)
        img = [0] * d.pchains.rank(n + 1)
        for k, c in enumerate(model_chain):
            if c:
                img[d.index_p[n + 1][C.compose(push, dm.NP.data[n + 1][k])]] += c
        checked += 1
        if img != P.matrix(X, n).column(j):
            return CheckReport(False, checked, {"identity": "naturality", "degree": n, "generator": d.N.labels[n][j]})
    return CheckReport(True, checked)


def verify_prism_naturality(P: PrismFamily, h, n: int) -> CheckReport:
    """``P^Y Chain(h) = Chain(h x id) P^X`` for ``h: X -> Y``."""
    C, F = P.hc.C, P.F
    X, Y = C.source(h), C.target(h)
    dx, dy = P.data(X), P.data(Y)
    ch = chain_map(nerve_map(F, h, dx.N, dy.N))
    hx = C.product_of_morphisms(h, C.identity(F.cells[1]))
    chx = chain_map(nerve_map(F, hx, dx.NP, dy.NP))
    ok = P.matrix(Y, n) @ ch[n] == chx[n + 1] @ P.matrix(X, n)
    return CheckReport(ok, 1, None if ok else {"degree": n})


def verify_homotopy_invariance(P: PrismFamily, h: Homotopy) -> CheckReport:
    """Equal induced maps on homology for the two ends of ``h``."""
    hc, C, F = P.hc, P.hc.C, P.F
    if not hc.is_homotopy(h.H, h.f, h.g):
        raise PreconditionFailed("H does not restrict to f and g")
    X, Y = C.source(h.f), C.target(h.f)
    dx, dy = P.data(X), P.data(Y)
    NY = dy.N
    cf = chain_map(nerve_map(F, h.f, dx.N, NY))
    cg = chain_map(nerve_map(F, h.g, dx.N, NY))
    cH = chain_map(nerve_map(F, h.H, dx.NP, NY))
    L = F.level
    for n in range(L + 1):
        if cH[n] @ dx.lam0[n] != cf[n] or cH[n] @ dx.lam1[n] != cg[n]:
            return CheckReport(False, n, {"stage": "endpoint factorization", "degree": n})
    checked = 0
    D = {n: cH[n + 1] @ P.matrix(X, n) for n in range(P.n_max + 1)}
    for n in range(P.n_max + 1):
        rhs = dy.chains.boundary(n + 1) @ D[n]
        if n >= 1:
            rhs = rhs + D[n - 1] @ dx.chains.boundary(n)
        checked += 1
        if cg[n] - cf[n] != rhs:
            return CheckReport(False, checked, {"stage": "chain homotopy", "degree": n})
    degrees = []
    for n in range(min(P.n_max, L - 1) + 1):
        HX, HY = homology(dx.chains, n), homology(dy.chains, n)
        mf, mg = induced_homology_map(cf, HX, HY), induced_homology_map(cg, HX, HY)
        checked += 1
        equal = homology_map_equal(mf, mg, HY)
        degrees.append({"degree": n, "equal": equal, "map": mf.tolist()})
        if not equal:
            return CheckReport(False, checked, {"stage": "homology", "degrees": degrees})
    return CheckReport(True, checked, {"degrees": degrees})


# -- end-to-end report -------------------------------------------------------


def _status(ok: bool | None) -> str:
    return "pass" if ok else ("fail" if ok is not None else "not-checkable")


def theorem1_pipeline(F: CosimplicialObject, objects: Sequence | None = None, n_max: int | None = None) -> dict:
    """Run every stage that its preconditions allow and report each outcome."""
    C = F.category
    objs = list(objects) if objects is not None else C.objects()
    n_max = F.level - 1 if n_max is None else n_max
    report: dict[str, Any] = {"format": "homcat.theorem1/1", "instance": F.name, "level": F.level}
    names = [C.describe_object(X) for X in objs]

    # claim i: homology exists with no hypotheses
    homs = {}
    ok_i = True
    for X, name in zip(objs, names):
        try:
            cx = chain_complex(nerve(F, X))
            homs[name] = [homology(cx, n).to_json() for n in range(F.level)]
        except HomcatError as exc:
            ok_i = False
            homs[name] = str(exc)
    report["claim_i"] = {"status": _status(ok_i), "homology": homs}

    axioms = check_axiom_1_2(F, objs) + [check_axiom_swap(F), check_axiom_join(F)]
    a5 = check_axiom_convex(F)
    axioms.append(a5)
    report["axioms"] = {a.axiom: a.to_json() for a in axioms}
    ax = {a.axiom: a.passed for a in axioms}

    # P1: the terminal cell is acyclic
    p = {}
    if ax["A2"]:
        p["P1"] = _status(check_acyclic(nerve(F, F.cells[0])).passed)
    else:
        p["P1"] = "not-checkable"
    p["P2"] = _status(all(check_acyclic(nerve(F, F.cells[n])).passed for n in range(F.level)))

    # claim ii: the homotopy relation
    ii: dict[str, Any] = {}
    pairs: list[Homotopy] = []
    if ax["A1"] and ax["A2"]:
        hc = HomotopyContext(F)
        refl = all(hc.is_homotopy(hc.constant_homotopy(f).H, f, f) for X in objs for Y in objs for f in C.hom(X, Y))
        symmetric, transitive = True, True
        for X in objs:
            for Y in objs:
                cls = hc.homotopy_classes(X, Y)
                symmetric &= cls.raw_symmetric()
                transitive &= cls.raw_is_equivalence
                for (a, b), H in sorted(cls.witnesses.items()):
                    pairs.append(Homotopy(cls.homs[a], cls.homs[b], H, hc.lambda_maps(X).product))
        ii = {"reflexive": refl, "symmetric": symmetric, "transitive_closure_is_raw": transitive}
        if ax["A3"]:
            ii["reverse_constructed"] = all(hc.reverse_homotopy(h) is not None for h in pairs)
        if ax["A4"]:
            try:
                ii["homotopy_category"] = len(hc.homotopy_category(objs).objects())
            except HomcatError as exc:
                ii["homotopy_category"] = f"failed: {exc}"
        ok_ii = refl and (symmetric or not ax["A3"]) and (transitive or not ax["A4"])
        status = "pass" if ok_ii and ax["A3"] and ax["A4"] else ("partial" if ok_ii else "fail")
        report["claim_ii"] = {"status": status, **ii}
    else:
        hc = None
        report["claim_ii"] = {"status": "not-checkable"}

    # claim iii: invariance through the prism
    if hc is not None and a5.passed:
        try:
            P = build_P(F, n_max, hc)
            prism_ok = all(verify_prism(P, X, n).passed for X in objs for n in range(n_max + 1))
            inv = [verify_homotopy_invariance(P, h) for h in pairs]
            p["P5"] = _status(prism_ok)
            p["P4"] = _status(all(
                homology_map_equal(
                    induced_homology_map(P.data(X).lam0, homology(P.data(X).chains, n), homology(P.data(X).pchains, n)),
                    induced_homology_map(P.data(X).lam1, homology(P.data(X).chains, n), homology(P.data(X).pchains, n)),
                    homology(P.data(X).pchains, n),
                )
                for X in objs
                for n in range(min(n_max, F.level - 1) + 1)
            ))
            p["P3"] = _status(all(r.passed for r in inv))
            report["claim_iii"] = {
                "status": _status(prism_ok and all(r.passed for r in inv)),
                "prism": P.to_json(),
                "homotopies_checked": len(inv),
            }
        except Unsolvable as exc:
            report["claim_iii"] = {"status": "fail", "error": f"solve-unsolvable: {exc}"}
    else:
        report["claim_iii"] = {"status": "not-checkable", "reason": "axiom 5 or the endpoint inclusions are unavailable"}
    report["properties"] = p
    report["objects"] = names
    return report
