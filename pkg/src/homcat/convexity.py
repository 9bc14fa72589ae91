"""Cone families on nerves and the convexity checks built on them.

A cone family on ``X`` sends each ``sigma: F(n) -> X`` to ``Cone(sigma):
F(n+1) -> X`` whose zeroth face is ``sigma`` and whose other faces are cones
on the faces of ``sigma``.  In degree 0 those other faces collapse to one
fixed apex vertex, which also serves as the augmentation section.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from .cosimplicial import AxiomReport, CosimplicialObject
from .errors import ConeNotVerified, InvalidDiagram, LevelMismatch, UnsupportedObject
from .fincat import Budget, FinSet, Function
from .homology import chain_complex, homology
from .matrix import IntegerMatrix
from .nerve import nerve, yoneda_check
from .report import CheckReport
from .simplex import MonotoneMap
from .sset import TruncSimplicialSet, TruncSSetCategory


@dataclass
class ConeFamily:
    """``maps[n][x]`` is the index of ``Cone_n(x)`` in degree ``n+1`` of ``nerve``."""

    nerve: TruncSimplicialSet
    apex: int
    maps: list[tuple[int, ...]]
    obj: Any = None
    method: str = ""

    def to_json(self) -> dict:
        N = self.nerve
        out = {"-1": {"*": N.labels[0][self.apex]}}
        for n, m in enumerate(self.maps):
            out[str(n)] = {N.labels[n][x]: N.labels[n + 1][y] for x, y in enumerate(m)}
        return {"object": N.name, "maps": out}


def verify_cone(F: CosimplicialObject, cone: ConeFamily) -> CheckReport:
    """Zeroth face returns the input; the other faces are cones on faces."""
    N = cone.nerve
    L = F.level
    if len(cone.maps) != L or N.level != L:
        raise LevelMismatch(f"cone family has {len(cone.maps)} degrees, expected {L}")
    checked = 0
    for n in range(L):
        cn = cone.maps[n]
        if len(cn) != N.counts[n]:
            raise LevelMismatch(f"cone map in degree {n} has the wrong size")
        for x in range(N.counts[n]):
            y = cn[x]
            checked += 1
            if N.faces[n + 1][0][y] != x:
                return CheckReport(False, checked, {"degree": n, "simplex": N.labels[n][x], "rule": "zeroth face"})
            if n == 0:
                if N.faces[1][1][y] != cone.apex:
                    return CheckReport(False, checked, {"degree": 0, "simplex": N.labels[0][x], "rule": "apex"})
                continue
            for i in range(n + 1):
                checked += 1
                if N.faces[n + 1][i + 1][y] != cone.maps[n - 1][N.faces[n][i][x]]:
                    return CheckReport(
                        False, checked, {"degree": n, "simplex": N.labels[n][x], "rule": f"face {i + 1}"}
                    )
    return CheckReport(True, checked)


def _from_simplex_rule(F, X, N, rule: Callable[[int, int], int], apex: int, method: str) -> ConeFamily:
    """Transport a cone rule on the simplices of ``X`` through the Yoneda bijection."""
    rep = yoneda_check(F, X, N)
    if not rep.passed:
        raise UnsupportedObject(f"nerve of {X.name} is not identified with its simplices")
    evals = rep.data
    back = [{v: k for k, v in enumerate(ev)} for ev in evals]
    maps = [tuple(back[n + 1][rule(n, evals[n][s])] for s in range(N.counts[n])) for n in range(F.level)]
    return ConeFamily(N, back[0][apex], maps, X, method)


def first_vertex_cone(F: CosimplicialObject, X, N: TruncSimplicialSet | None = None) -> ConeFamily:
    """Prepend the first vertex.

    On ``Delta[m]`` a simplex is a monotone map and its cone starts at 0; on
    products of representables the rule acts in each coordinate; in finite
    sets the cone of ``sigma`` is ``(0, sigma(0), ..., sigma(n))``.
    """
    C = F.category
    N = N or nerve(F, X)
    if isinstance(C, FinSet):
        index = [{s: k for k, s in enumerate(lvl)} for lvl in N.data]
        maps = [
            tuple(index[n + 1][Function(n + 2, X, (0,) + s.values)] for s in N.data[n]) for n in range(F.level)
        ]
        return ConeFamily(N, index[0][Function(1, X, (0,))], maps, X, "first-vertex")
    if isinstance(C, TruncSSetCategory):
        rule = _simplex_cone_rule(C, X)
        return _from_simplex_rule(F, X, N, rule, _apex_of(C, X), "first-vertex")
    raise UnsupportedObject("first-vertex cones exist for finite sets and products of representables")


def _factors(C: TruncSSetCategory, X) -> list[int] | None:
    """``[m1, m2, ...]`` when ``X`` is (an iterated product of) representables."""
    for key, obj in C._cache.items():
        if key[0] == "rep" and obj is X:
            return [key[1]]
    pair = C._product_of.get(X)
    if pair is None:
        return None
    a, b = _factors(C, pair[0]), _factors(C, pair[1])
    return None if a is None or b is None else a + b


def _apex_of(C, X) -> int:
    if _factors(C, X) is None:
        raise UnsupportedObject(f"{X.name} is not a product of representables")
    return 0  # (0, 0, ...) is the first vertex in every ordering used here


def _simplex_cone_rule(C: TruncSSetCategory, X) -> Callable[[int, int], int]:
    fac = _factors(C, X)
    if fac is None:
        raise UnsupportedObject(f"{X.name} is not a product of representables")
    if len(fac) == 1:
        index = [{phi: k for k, phi in enumerate(lvl)} for lvl in X.data]

        def rule(n, x):
            phi = X.data[n][x]
            return index[n + 1][MonotoneMap(n + 1, phi.target, (0,) + phi.image)]

        return rule
    a, b = C._product_of[X]
    ra, rb = _simplex_cone_rule(C, a), _simplex_cone_rule(C, b)

    def rule(n, x):
        ya, yb = divmod(x, b.counts[n])
        return ra(n, ya) * b.counts[n + 1] + rb(n, yb)

    return rule


def product_cone(F: CosimplicialObject, cone_x: ConeFamily, cone_y: ConeFamily, N: TruncSimplicialSet | None = None) -> ConeFamily:
    """``Cone(<a, b>) = <Cone(a), Cone(b)>`` on ``X x Y``."""
    C = F.category
    w = C.product(cone_x.obj, cone_y.obj)
    N = N or nerve(F, w.apex)
    NX, NY = cone_x.nerve, cone_y.nerve
    ix = [{s: k for k, s in enumerate(l)} for l in NX.data]
    iy = [{s: k for k, s in enumerate(l)} for l in NY.data]
    ip = [{s: k for k, s in enumerate(l)} for l in N.data]
    maps = []
    for n in range(F.level):
        row = []
        for s in N.data[n]:
            a = ix[n][C.compose(w.proj1, s)]
            b = iy[n][C.compose(w.proj2, s)]
            ca, cb = NX.data[n + 1][cone_x.maps[n][a]], NY.data[n + 1][cone_y.maps[n][b]]
            row.append(ip[n + 1][C.pairing(ca, cb, w)])
        maps.append(tuple(row))
    apex = ip[0][C.pairing(NX.data[0][cone_x.apex], NY.data[0][cone_y.apex], w)]
    return ConeFamily(N, apex, maps, w.apex, f"product({cone_x.method},{cone_y.method})")


def search_cone(F: CosimplicialObject, X, N: TruncSimplicialSet | None = None, budget: Budget | None = None) -> ConeFamily | None:
    """Exhaustive backtracking for a cone family; ``None`` when none exists."""
    N = N or nerve(F, X)
    budget = budget or F.category.budget()
    L = F.level
    maps: list[tuple] = []

    def options(n, apex):
        idx = N.face_index(n + 1)
        out = []
        for x in range(N.counts[n]):
            if n == 0:
                key_rest = (apex,)
            else:
                key_rest = tuple(maps[n - 1][N.faces[n][i][x]] for i in range(n + 1))
            cand = idx.get((x,) + key_rest, [])
            if not cand:
                return None
            out.append(cand)
        return out

    def rec(n, apex):
        if n == L:
            return True
        opts = options(n, apex)
        if opts is None:
            return False
        for choice in itertools.product(*opts):
            budget.spend()
            maps.append(choice)
            if rec(n + 1, apex):
                return True
            maps.pop()
        return False

    for apex in range(N.counts[0]):
        maps.clear()
        if rec(0, apex):
            return ConeFamily(N, apex, list(maps), X, "search")
    return None


def cone_matrices(cone: ConeFamily) -> dict[int, IntegerMatrix]:
    """Linear extension ``K_n: C_n -> C_{n+1}``; ``K_{-1}`` picks the apex."""
    N = cone.nerve
    out = {-1: IntegerMatrix(N.counts[0], 1)}
    out[-1].data[cone.apex][0] = 1
    for n, m in enumerate(cone.maps):
        K = IntegerMatrix(N.counts[n + 1], N.counts[n])
        for x, y in enumerate(m):
            K.data[y][x] = 1
        out[n] = K
    return out


def cone_chain_homotopy(F: CosimplicialObject, cone: ConeFamily) -> CheckReport:
    """``d K + K d = Id`` on the augmented complex, degrees ``-1..level-1``."""
    if not verify_cone(F, cone).passed:
        raise ConeNotVerified("cone family fails its set-level identities")
    N = cone.nerve
    C = chain_complex(N, reduced=True)
    K = cone_matrices(cone)
    checked = 0
    for n in range(-1, F.level):
        size = C.rank(n)
        lhs = C.boundary(n + 1) @ K[n]
        if n >= 0:
            prev = K[n - 1] @ C.boundary(n)
            lhs = lhs + prev
        checked += 1
        if lhs != IntegerMatrix.identity(size):
            return CheckReport(False, checked, {"degree": n})
    return CheckReport(True, checked, data=K)


def check_acyclic(S: TruncSimplicialSet, cone: ConeFamily | None = None) -> CheckReport:
    """Reduced homology vanishes below the truncation degree.

    With a cone, every cycle basis vector ``z`` is also checked to satisfy
    ``d K z = z`` (an explicit bounding chain).
    """
    C = chain_complex(S, reduced=True)
    nonzero = [homology(C, n).to_json() for n in range(S.level) if not homology(C, n).is_zero]
    witness: dict = {"nonzero": nonzero}
    if nonzero:
        return CheckReport(False, S.level, witness)
    if cone is not None:
        K = cone_matrices(cone)
        checked = 0
        for n in range(S.level):
            dec = C.smith(n)
            for j in range(dec.rank, C.rank(n)):
                z = dec.V_column(j)
                checked += 1
                if C.boundary(n + 1).apply(K[n].apply(z)) != z:
                    return CheckReport(False, checked, {"degree": n, "cycle": z, "reason": "cone does not bound"})
        witness["cycles_bounded"] = checked
    return CheckReport(True, S.level, witness)


def default_cone(F: CosimplicialObject, X, N: TruncSimplicialSet | None = None) -> ConeFamily | None:
    N = N or nerve(F, X)
    try:
        return first_vertex_cone(F, X, N)
    except UnsupportedObject:
        return search_cone(F, X, N)


def check_axiom_convex(F: CosimplicialObject, provider: Callable | None = None) -> AxiomReport:
    """Every cell below the top degree carries a verified cone family."""
    provider = provider or default_cone
    C = F.category
    cells = []
    for n in range(F.level):
        X = F.cells[n]
        N = nerve(F, X)
        cone = provider(F, X, N)
        if cone is None:
            return AxiomReport("A5", "fail", {"cells": cells, "failed_cell": n}, f"no cone family on F({n})")
        rep = verify_cone(F, cone)
        if not rep.passed:
            return AxiomReport("A5", "fail", {"cells": cells, "failed_cell": n, "witness": rep.witness}, f"cone on F({n}) fails")
        cells.append({"cell": n, "object": C.describe_object(X), "method": cone.method, "checked": rep.checked})
    return AxiomReport("A5", "pass", {"cells": cells})


def cone_from_json(N: TruncSimplicialSet, data: dict, obj=None) -> ConeFamily:
    try:
        raw = data["maps"]
        index = [{l: k for k, l in enumerate(lvl)} for lvl in N.labels]
        apex = index[0][raw["-1"]["*"]]
        maps = []
        for n in range(N.level):
            table = raw[str(n)]
            maps.append(tuple(index[n + 1][table[l]] for l in N.labels[n]))
    except KeyError as exc:
        raise InvalidDiagram(f"cone file: missing entry {exc}") from None
    return ConeFamily(N, apex, maps, obj, "file")


def load_cone(N: TruncSimplicialSet, path: str | Path, obj=None) -> ConeFamily:
    with open(path) as fh:
        return cone_from_json(N, json.load(fh), obj)
