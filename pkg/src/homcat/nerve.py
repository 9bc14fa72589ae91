"""The nerve of an object along a cosimplicial object, and the Base maps.

``nerve(F, X)`` has the morphisms ``F(n) -> X`` as its degree-``n`` simplices
and acts on them by precomposition with the face (and degeneracy) images.
"""

from __future__ import annotations

from .cosimplicial import CosimplicialObject
from .errors import CompositionMismatch, UnsupportedObject
from .report import CheckReport
from .simplex import identity
from .sset import SimplicialMap, TruncSimplicialSet, TruncSSetCategory, _label_of


def _simplex_label(C, s, n: int, k: int) -> str:
    desc = C.describe_morphism(s)
    return desc if isinstance(desc, str) else f"{n}:{k}"


def nerve(F: CosimplicialObject, X, name: str = "") -> TruncSimplicialSet:
    C = F.category
    L = F.level
    simplices = [list(C.hom(F.cells[n], X)) for n in range(L + 1)]
    index = [{s: k for k, s in enumerate(lvl)} for lvl in simplices]
    faces = [()] + [
        [[index[n - 1][C.compose(s, F.face(n, i))] for s in simplices[n]] for i in range(n + 1)]
        for n in range(1, L + 1)
    ]
    degs = None
    if F.has_degeneracies:
        degs = [
            [[index[n + 1][C.compose(s, F.degeneracy(n, i))] for s in simplices[n]] for i in range(n + 1)]
            for n in range(L)
        ]
    labels = [[_simplex_label(C, s, n, k) for k, s in enumerate(lvl)] for n, lvl in enumerate(simplices)]
    return TruncSimplicialSet(
        L, [len(l) for l in simplices], faces, degs, labels, name or f"N({C.describe_object(X)})", simplices
    )


def _index(N: TruncSimplicialSet) -> list[dict]:
    cache = getattr(N, "_morphism_index", None)
    if cache is None:
        cache = [{s: k for k, s in enumerate(lvl)} for lvl in N.data]
        N._morphism_index = cache
    return cache


def nerve_map(F: CosimplicialObject, f, NX: TruncSimplicialSet | None = None, NY: TruncSimplicialSet | None = None) -> SimplicialMap:
    """Postcomposition with ``f: X -> Y`` on nerves."""
    C = F.category
    NX = NX or nerve(F, C.source(f))
    NY = NY or nerve(F, C.target(f))
    if NX.data[0] and C.target(NX.data[0][0]) != C.source(f):
        raise CompositionMismatch("source nerve does not belong to the source of f")
    idx = _index(NY)
    comps = tuple(tuple(idx[n][C.compose(f, s)] for s in NX.data[n]) for n in range(F.level + 1))
    return SimplicialMap(NX, NY, comps)


def base_transform(F: CosimplicialObject, N: TruncSimplicialSet) -> list[tuple[int, ...]]:
    """``Base_n: N_{n+1} -> N_n``, precomposition with ``F(d_{n+1,0})``, for ``n < level``."""
    C = F.category
    idx = _index(N)
    return [tuple(idx[n][C.compose(s, F.face(n + 1, 0))] for s in N.data[n + 1]) for n in range(F.level)]


def check_base_naturality(F: CosimplicialObject, N: TruncSimplicialSet) -> CheckReport:
    """``Base_{n-1}(d_{i+1} x) = d_i(Base_n x)`` for every ``x`` in degree ``n+1``."""
    base = base_transform(F, N)
    checked = 0
    for n in range(1, F.level):
        for i in range(n + 1):
            for x in range(N.counts[n + 1]):
                checked += 1
                lhs = base[n - 1][N.faces[n + 1][i + 1][x]]
                rhs = N.faces[n][i][base[n][x]]
                if lhs != rhs:
                    return CheckReport(False, checked, {"n": n, "i": i, "simplex": N.labels[n + 1][x]})
    return CheckReport(True, checked)


def yoneda_check(F: CosimplicialObject, X: TruncSimplicialSet, N: TruncSimplicialSet | None = None) -> CheckReport:
    """For representable cells: evaluation at the top simplex is a face-compatible bijection."""
    C = F.category
    if not isinstance(C, TruncSSetCategory):
        raise UnsupportedObject("the Yoneda check needs the simplicial-set instance")
    N = N or nerve(F, X)
    evals = []
    for n in range(F.level + 1):
        if _label_of(identity(n)) not in F.cells[n].labels[n]:
            return CheckReport(False, n, {"degree": n, "reason": "cell has no top simplex"})
        top = F.cells[n].index_of(n, _label_of(identity(n)))
        ev = [s.components[n][top] for s in N.data[n]]
        if sorted(ev) != list(range(X.counts[n])):
            return CheckReport(False, n, {"degree": n, "reason": "not a bijection", "nerve": len(ev), "object": X.counts[n]})
        evals.append(ev)
    checked = 0
    for n in range(1, F.level + 1):
        for i in range(n + 1):
            for s in range(N.counts[n]):
                checked += 1
                if evals[n - 1][N.faces[n][i][s]] != X.faces[n][i][evals[n][s]]:
                    return CheckReport(False, checked, {"degree": n, "face": i, "simplex": N.labels[n][s]})
    return CheckReport(True, checked, data=evals)
