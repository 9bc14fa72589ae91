"""Truncated cosimplicial objects ``F: Delta -> C`` and checkers for the
structural requirements on them (terminal cell, products, swap, join)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from .errors import ColimitNotFound, InvalidDiagram, LevelMismatch, MissingMorphism, ProductNotFound
from .fincat import Diagram, FiniteCategory, FinSet, Function, TableCategory
from .simplex import compose as compose_monotone
from .simplex import degeneracy_map, evaluate_word, face_map, simplicial_identity_instances
from .sset import SimplicialMap, TruncSSetCategory, compose_maps


class CosimplicialObject:
    """Cells ``F(0..level)`` with the images of the face and degeneracy generators."""

    def __init__(
        self,
        category: FiniteCategory,
        level: int,
        cells: Sequence,
        faces: dict[tuple[int, int], Any],
        degeneracies: dict[tuple[int, int], Any] | None = None,
        name: str = "",
    ):
        if level < 1:
            raise LevelMismatch("a cosimplicial object needs level >= 1")
        if len(cells) != level + 1:
            raise LevelMismatch(f"{len(cells)} cells for level {level}")
        self.category = category
        self.level = level
        self.cells = list(cells)
        self.faces = dict(faces)
        self.degeneracies = dict(degeneracies) if degeneracies else None
        self.name = name
        C = category
        for (n, i), m in self.faces.items():
            if not (1 <= n <= level and 0 <= i <= n):
                raise InvalidDiagram(f"face index ({n},{i}) outside the truncation")
            if C.source(m) != self.cells[n - 1] or C.target(m) != self.cells[n]:
                raise InvalidDiagram(f"F(d_{n},{i}) is not a morphism F({n - 1}) -> F({n})")
        for (n, i), m in (self.degeneracies or {}).items():
            if not (0 <= n < level and 0 <= i <= n):
                raise InvalidDiagram(f"degeneracy index ({n},{i}) outside the truncation")
            if C.source(m) != self.cells[n + 1] or C.target(m) != self.cells[n]:
                raise InvalidDiagram(f"F(s_{n},{i}) is not a morphism F({n + 1}) -> F({n})")

    def __repr__(self):
        return f"CosimplicialObject({self.name or '?'}, level={self.level})"

    def cell(self, n: int):
        return self.cells[n]

    def face(self, n: int, i: int):
        try:
            return self.faces[(n, i)]
        except KeyError:
            raise MissingMorphism(f"F(d_{n},{i}) not supplied") from None

    def degeneracy(self, n: int, i: int):
        if not self.degeneracies or (n, i) not in self.degeneracies:
            raise MissingMorphism(f"F(s_{n},{i}) not supplied")
        return self.degeneracies[(n, i)]

    @property
    def has_degeneracies(self) -> bool:
        return self.degeneracies is not None

    def truncated(self, level: int) -> "CosimplicialObject":
        if not 1 <= level <= self.level:
            raise LevelMismatch(f"cannot truncate level {self.level} to {level}")
        faces = {k: v for k, v in self.faces.items() if k[0] <= level}
        degs = {k: v for k, v in (self.degeneracies or {}).items() if k[0] < level} or None
        return CosimplicialObject(self.category, level, self.cells[: level + 1], faces, degs, self.name)

    def replace_cell(self, n: int, cell, faces_in: dict, faces_out: dict | None = None, name: str = "") -> "CosimplicialObject":
        """A copy with ``F(n)`` swapped out; degeneracies are dropped."""
        cells = list(self.cells)
        cells[n] = cell
        faces = dict(self.faces)
        faces.update(faces_in)
        faces.update(faces_out or {})
        return CosimplicialObject(self.category, self.level, cells, faces, None, name or f"{self.name}[F({n}) replaced]")


@dataclass
class FunctorialityReport:
    passed: bool
    checked: int
    witness: dict | None = None


def verify_functoriality(F: CosimplicialObject) -> FunctorialityReport:
    """Every simplicial identity inside the truncation must hold in ``C``."""
    C = F.category
    checked = 0
    for ident in simplicial_identity_instances(F.level):
        uses_s = any(k == "s" for k, _, _ in ident.lhs + ident.rhs)
        if uses_s and not F.has_degeneracies:
            continue
        args = (ident.source, F.face, F.degeneracy, C.compose, lambda n: C.identity(F.cells[n]))
        lhs, rhs = evaluate_word(ident.lhs, *args), evaluate_word(ident.rhs, *args)
        checked += 1
        if lhs != rhs:
            return FunctorialityReport(
                False,
                checked,
                {"identity": ident.describe(), "lhs": C.describe_morphism(lhs), "rhs": C.describe_morphism(rhs)},
            )
    return FunctorialityReport(True, checked)


# -- builders --------------------------------------------------------------


def finset_cosimplicial(C: FinSet, level: int = 2) -> CosimplicialObject:
    """``F(n) = {0..n}`` with the face and degeneracy functions themselves."""
    faces = {(n, i): Function(n, n + 1, face_map(n, i).image) for n in range(1, level + 1) for i in range(n + 1)}
    degs = {(n, i): Function(n + 2, n + 1, degeneracy_map(n, i).image) for n in range(level) for i in range(n + 1)}
    return CosimplicialObject(C, level, [n + 1 for n in range(level + 1)], faces, degs, "finset")


def postcomposition_map(C: TruncSSetCategory, phi) -> SimplicialMap:
    """The map ``Delta[m] -> Delta[n]`` induced by a monotone ``phi: [m] -> [n]``."""
    src, dst = C.representable(phi.source), C.representable(phi.target)
    index = [{s: k for k, s in enumerate(lvl)} for lvl in dst.data]
    comps = tuple(tuple(index[k][compose_monotone(phi, s)] for s in src.data[k]) for k in range(C.level + 1))
    return SimplicialMap(src, dst, comps)


def sset_cosimplicial(C: TruncSSetCategory, level: int | None = None) -> CosimplicialObject:
    """``F(n) = Delta[n]``, the Yoneda image of the simplex category."""
    level = C.level if level is None else level
    if level > C.level:
        raise LevelMismatch("cosimplicial level exceeds the simplicial truncation")
    faces = {(n, i): postcomposition_map(C, face_map(n, i)) for n in range(1, level + 1) for i in range(n + 1)}
    degs = {(n, i): postcomposition_map(C, degeneracy_map(n, i)) for n in range(level) for i in range(n + 1)}
    return CosimplicialObject(C, level, [C.representable(n) for n in range(level + 1)], faces, degs, "sset")


def monotone_restriction(source, target) -> SimplicialMap:
    """Inclusion between two sub-objects of representables sharing simplex data."""
    index = [{s: k for k, s in enumerate(lvl)} for lvl in target.data]
    return SimplicialMap(source, target, tuple(tuple(index[k][s] for s in lvl) for k, lvl in enumerate(source.data)))


def boundary_substitution(F: CosimplicialObject, n: int) -> CosimplicialObject:
    """Replace ``F(n) = Delta[n]`` by ``dDelta[n]`` in the simplicial-set instance.

    Incoming faces factor through the boundary; outgoing faces are restricted.
    The result is still functorial but its cell ``F(n)`` is not acyclic.
    """
    C = F.category
    if not isinstance(C, TruncSSetCategory) or not 1 <= n <= F.level:
        raise InvalidDiagram("boundary substitution needs the simplicial-set instance and 1 <= n <= level")
    sub = C.boundary(n)
    C.register(sub)
    incl = monotone_restriction(sub, F.cells[n])
    faces_in = {}
    for i in range(n + 1):
        d = F.face(n, i)
        index = [{s: k for k, s in enumerate(lvl)} for lvl in sub.data]
        comps = tuple(
            tuple(index[k][F.cells[n].data[k][v]] for v in comp) for k, comp in enumerate(d.components)
        )
        faces_in[(n, i)] = SimplicialMap(F.cells[n - 1], sub, comps)
    faces_out = {(n + 1, i): compose_maps(F.face(n + 1, i), incl) for i in range(n + 2) if n < F.level}
    return F.replace_cell(n, sub, faces_in, faces_out, f"{F.name}[F({n})=dDelta[{n}]]")


def cosimplicial_from_json(C: TableCategory, data: dict, name: str = "") -> CosimplicialObject:
    try:
        level = int(data["level"])
        cells = list(data["cells"])
        raw_faces = data["faces"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidDiagram(f"cosimplicial file: missing or malformed field ({exc})") from None

    def parse(table):
        out = {}
        for key, mid in table.items():
            try:
                n, i = (int(v) for v in key.strip("() ").split(","))
            except ValueError:
                raise InvalidDiagram(f"cosimplicial file: bad index key {key!r}") from None
            out[(n, i)] = C.morphism(mid)
        return out

    for c in cells:
        if c not in C.objects():
            raise InvalidDiagram(f"cosimplicial file: unknown cell object {c!r}")
    degs = parse(data["degeneracies"]) if data.get("degeneracies") else None
    return CosimplicialObject(C, level, cells, parse(raw_faces), degs, name or data.get("name", ""))


def load_cosimplicial(C: TableCategory, path: str | Path) -> CosimplicialObject:
    path = Path(path)
    with open(path) as fh:
        return cosimplicial_from_json(C, json.load(fh), path.stem)


# -- axiom checks ---------------------------------------------------------------


@dataclass
class AxiomReport:
    """Outcome of one structural check; ``status`` is pass, fail or not-checkable."""

    axiom: str
    status: str
    witness: dict = field(default_factory=dict)
    detail: str = ""
    data: Any = field(default=None, repr=False, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "status": self.status, "detail": self.detail, "witness": self.witness}


def check_axiom_1_2(F: CosimplicialObject, test_objects: Sequence | None = None) -> list[AxiomReport]:
    """Terminal object plus products ``F(n) x X``; then ``F(0)`` terminal."""
    C = F.category
    objs = list(test_objects) if test_objects is not None else C.objects()
    t = C.find_terminal()
    if t is None:
        a1 = AxiomReport("A1", "fail", {}, "no terminal object among the test objects")
    else:
        missing = None
        checked = 0
        for n, cell in enumerate(F.cells):
            for X in objs:
                try:
                    C.product(cell, X)
                except ProductNotFound:
                    missing = (n, C.describe_object(X))
                    break
                checked += 1
            if missing:
                break
        if missing:
            a1 = AxiomReport("A1", "fail", {"terminal": C.describe_object(t), "missing_product": list(missing)}, "a product is missing")
        else:
            a1 = AxiomReport("A1", "pass", {"terminal": C.describe_object(t), "products_verified": checked})
    if C.is_terminal(F.cells[0]):
        a2 = AxiomReport("A2", "pass", {"F(0)": C.describe_object(F.cells[0])})
    else:
        counts = {C.describe_object(X): len(C.hom(X, F.cells[0])) for X in objs}
        a2 = AxiomReport("A2", "fail", {"hom_counts_into_F(0)": counts}, "F(0) is not terminal")
    return [a1, a2]


def check_axiom_swap(F: CosimplicialObject) -> AxiomReport:
    """An automorphism of ``F(1)`` exchanging the two endpoint faces."""
    C = F.category
    d0, d1 = F.face(1, 0), F.face(1, 1)
    autos = C.automorphisms(F.cells[1])
    for w in autos:
        inv = C.inverse(w)
        if C.compose(w, d0) == d1 and C.compose(inv, d1) == d0:
            involutive = C.compose(w, w) == C.identity(F.cells[1])
            return AxiomReport(
                "A3",
                "pass",
                {"swap": C.describe_morphism(w), "inverse": C.describe_morphism(inv), "involutive": involutive},
                data=w,
            )
    return AxiomReport("A3", "fail", {"automorphisms_checked": len(autos)}, "no automorphism of F(1) exchanges the endpoints")


def join_diagram(F: CosimplicialObject) -> Diagram:
    """``F(1) <- F(0) -> F(1)``: the left copy via d_{1,0}, the right via d_{1,1}."""
    return Diagram(
        (F.cells[1], F.cells[0], F.cells[1]),
        ((1, 0, F.face(1, 0)), (1, 2, F.face(1, 1))),
        ("left", "center", "right"),
    )


def check_axiom_join(F: CosimplicialObject) -> AxiomReport:
    """The pushout of the two endpoint faces must be ``F(1)`` again.

    On success ``data`` holds the cocone legs (left, center, right) into
    ``F(1)`` itself, ready for concatenating homotopies.
    """
    C = F.category
    D = join_diagram(F)
    try:
        colim = C.colimit(D)
    except ColimitNotFound as exc:
        return AxiomReport("A4", "fail", {}, f"colimit-not-found: {exc}")
    witness: dict = {
        "apex": C.describe_object(colim.apex),
        "left": C.describe_morphism(colim.legs[0]),
        "center": C.describe_morphism(colim.legs[1]),
        "right": C.describe_morphism(colim.legs[2]),
    }
    if isinstance(colim.apex, int):
        witness["apex_size"] = colim.apex
    elif hasattr(colim.apex, "counts"):
        witness["apex_counts"] = list(colim.apex.counts)
    iso = C.find_isomorphism(colim.apex, F.cells[1])
    if iso is None:
        return AxiomReport("A4", "fail", witness, "the pushout is not isomorphic to F(1)", data=colim)
    legs = tuple(C.compose(iso, leg) for leg in colim.legs)
    witness.update(
        {"iso": C.describe_morphism(iso), "legs_into_F(1)": [C.describe_morphism(l) for l in legs]}
    )
    return AxiomReport("A4", "pass", witness, data=legs)
