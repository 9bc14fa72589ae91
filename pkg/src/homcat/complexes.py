"""Spheres, handle attachment and cell complexes built from the cells ``F(k)``.

All colimits go through ``category.colimit``, so every returned object comes
with a cocone that passed the universal-property scan over the test objects.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from .cosimplicial import CosimplicialObject
from .errors import InvalidDiagram
from .fincat import Cocone, Diagram
from .sset import SimplicialMap, TruncSimplicialSet, make_map


@dataclass(frozen=True)
class CellComplexDiagram:
    """Nodes carry a level ``l`` (cell ``F(l)``); an edge ``(s, t, j)`` is ``F(d_{l+1,j})``."""

    levels: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...] = ()
    names: tuple[str, ...] | None = None

    @property
    def dimension(self) -> int:
        return max(self.levels, default=-1)

    def validate(self, F: CosimplicialObject) -> None:
        for l in self.levels:
            if not 0 <= l <= F.level:
                raise InvalidDiagram(f"node level {l} outside 0..{F.level}")
        for s, t, j in self.edges:
            if not (0 <= s < len(self.levels) and 0 <= t < len(self.levels)):
                raise InvalidDiagram(f"edge {s}->{t} outside the node range")
            if self.levels[t] != self.levels[s] + 1:
                raise InvalidDiagram(f"edge {s}->{t} does not join consecutive levels")
            if not 0 <= j <= self.levels[t]:
                raise InvalidDiagram(f"face index {j} invalid for level {self.levels[t]}")

    def diagram(self, F: CosimplicialObject) -> Diagram:
        self.validate(F)
        return Diagram(
            tuple(F.cells[l] for l in self.levels),
            tuple((s, t, F.face(self.levels[t], j)) for s, t, j in self.edges),
            self.names,
        )


@dataclass
class CellComplex:
    obj: Any
    cocone: Cocone
    dimension: int


def colim_cell_complex(F: CosimplicialObject, phi: CellComplexDiagram) -> CellComplex:
    C = F.category
    c = C.colimit(phi.diagram(F))
    return CellComplex(c.apex, c, phi.dimension)


def sphere_diagram(k: int) -> CellComplexDiagram:
    """The faces of ``[k+1]`` of dimension ``k`` glued along their common ``(k-1)``-faces.

    Node ``i`` (``0 <= i <= k+1``) is the face omitting vertex ``i``; for
    ``k >= 1`` each pair ``i < j`` adds a node for the face omitting both.
    """
    if k < 0:
        raise InvalidDiagram("sphere dimension must be >= 0")
    levels = [k] * (k + 2)
    names = [f"d{i}" for i in range(k + 2)]
    edges = []
    if k >= 1:
        for i in range(k + 2):
            for j in range(i + 1, k + 2):
                node = len(levels)
                levels.append(k - 1)
                names.append(f"d{i}d{j}")
                edges.append((node, i, j - 1))
                edges.append((node, j, i))
    return CellComplexDiagram(tuple(levels), tuple(edges), tuple(names))


def _sphere_legs(F: CosimplicialObject, phi: CellComplexDiagram, k: int) -> tuple:
    """The cocone over the sphere diagram with apex ``F(k+1)``."""
    C = F.category
    legs = [F.face(k + 1, i) for i in range(k + 2)]
    for s, t, j in phi.edges[::2]:
        legs.append(C.compose(legs[t], F.face(k, j)))
    return tuple(legs)


def relabeled(S: TruncSimplicialSet, labels, name: str) -> TruncSimplicialSet:
    """The same simplicial set under new labels (a new object)."""
    return TruncSimplicialSet(S.level, S.counts, S.faces, S.degeneracies, labels, name)


def _retarget(m: SimplicialMap, T: TruncSimplicialSet) -> SimplicialMap:
    return SimplicialMap(m.source, T, m.components)


def _resource(m: SimplicialMap, T: TruncSimplicialSet) -> SimplicialMap:
    return SimplicialMap(T, m.target, m.components)


@dataclass
class Sphere:
    obj: Any
    inclusion: Any
    cocone: Cocone
    k: int


def boundary_sphere(F: CosimplicialObject, k: int) -> Sphere:
    """``S^k`` as a colimit of ``k``-cells, with its inclusion into ``F(k+1)``.

    Simplicial-set spheres are relabeled by their images in ``F(k+1)``.
    Results are memoized per ``F`` so attaching maps can name the same object.
    """
    memo = F.__dict__.setdefault("_spheres", {})
    if k not in memo:
        memo[k] = _boundary_sphere(F, k)
    return memo[k]


def _boundary_sphere(F: CosimplicialObject, k: int) -> Sphere:
    if k + 1 > F.level:
        raise InvalidDiagram(f"S^{k} needs the cell F({k + 1}) beyond level {F.level}")
    C = F.category
    phi = sphere_diagram(k)
    cx = colim_cell_complex(F, phi)
    incl = C.factor_through(phi.diagram(F), cx.cocone, _sphere_legs(F, phi, k))
    S = cx.obj
    if not isinstance(S, TruncSimplicialSet) or any(len(set(c)) != len(c) for c in incl.components):
        return Sphere(S, incl, cx.cocone, k)
    disk = F.cells[k + 1]
    labels = [[disk.labels[n][y] for y in incl.components[n]] for n in range(S.level + 1)]
    T = relabeled(S, labels, f"S^{k}")
    return Sphere(T, _resource(incl, T), Cocone(T, tuple(_retarget(l, T) for l in cx.cocone.legs)), k)


# -- handles -----------------------------------------------------------------


@dataclass(frozen=True)
class AttachmentInstruction:
    """Attach ``F(k)`` along ``alpha: S^{k-1} -> X``.

    ``alpha`` is a morphism, or for simplicial sets a dict
    ``{degree: {sphere label: target label}}`` on nondegenerate simplices.
    """

    k: int
    alpha: Any = None
    tag: str = ""


@dataclass
class Attachment:
    obj: Any
    base_leg: Any
    disk_leg: Any
    sphere: Sphere | None


def map_from_labels(S: TruncSimplicialSet, X: TruncSimplicialSet, spec: dict) -> SimplicialMap:
    """Extend label assignments on nondegenerate simplices to a simplicial map."""
    comps: list[list[int]] = []
    for n in range(S.level + 1):
        table = spec.get(str(n), spec.get(n, {}))
        deg = S.degenerate_witness(n)
        row = []
        for x in range(S.counts[n]):
            label = S.labels[n][x]
            if label in table:
                try:
                    row.append(X.index_of(n, table[label]))
                except ValueError:
                    raise InvalidDiagram(f"alpha: no simplex {table[label]!r} in degree {n} of the target") from None
            elif deg[x] is not None:
                j, z = deg[x]
                row.append(X.degeneracy(n - 1, j, comps[n - 1][z]))
            else:
                raise InvalidDiagram(f"alpha: no image for nondegenerate simplex {label!r} in degree {n}")
        comps.append(row)
    return make_map(S, X, comps)


def attach_handle(F: CosimplicialObject, X, instr: AttachmentInstruction) -> Attachment:
    """The pushout ``X + F(k)`` glued along ``alpha``; ``k = 0`` adds a free point."""
    C, k = F.category, instr.k
    tag = instr.tag or f"e{k}"
    if not 0 <= k <= F.level:
        raise InvalidDiagram(f"handle dimension {k} outside 0..{F.level}")
    disk = F.cells[k]
    if k == 0:
        sphere = None
        D = Diagram((X, disk), (), ("base", tag))
    else:
        sphere = boundary_sphere(F, k - 1)
        alpha = instr.alpha
        if isinstance(alpha, dict):
            alpha = map_from_labels(sphere.obj, X, alpha)
        if alpha is None or C.source(alpha) is not sphere.obj or C.target(alpha) is not X:
            raise InvalidDiagram(f"attaching map is not a morphism S^{k - 1} -> X")
        D = Diagram((X, sphere.obj, disk), ((1, 0, alpha), (1, 2, sphere.inclusion)), ("base", "sphere", tag))
    c = C.colimit(D)
    base_leg, disk_leg = c.legs[0], c.legs[-1]
    P = c.apex
    if isinstance(P, TruncSimplicialSet):
        labels = [[""] * P.counts[n] for n in range(P.level + 1)]
        for n in range(P.level + 1):
            for x, y in enumerate(disk_leg.components[n]):
                labels[n][y] = f"{tag}:{disk.labels[n][x]}"
            for x, y in enumerate(base_leg.components[n]):
                labels[n][y] = X.labels[n][x]
        T = relabeled(P, labels, f"{X.name}+{tag}")
        base_leg, disk_leg = _retarget(base_leg, T), _retarget(disk_leg, T)
        P = T
    return Attachment(P, base_leg, disk_leg, sphere)


@dataclass
class CWComplex:
    obj: Any
    skeleta: list
    attachments: list[Attachment]


def build_cw(F: CosimplicialObject, instructions: Sequence[AttachmentInstruction], start=None) -> CWComplex:
    """Fold :func:`attach_handle` over the instructions, keeping every stage."""
    X = F.cells[0] if start is None else start
    skeleta, done = [X], []
    for t, instr in enumerate(instructions):
        step = attach_handle(F, X, instr if instr.tag else AttachmentInstruction(instr.k, instr.alpha, f"e{t}"))
        X = step.obj
        skeleta.append(X)
        done.append(step)
    return CWComplex(X, skeleta, done)


def parse_recipe(data) -> list[AttachmentInstruction]:
    """A CW recipe: a list of ``{"k", "alpha", "tag"?}`` or ``{"cells": [...]}``."""
    cells = data.get("cells") if isinstance(data, dict) else data
    if not isinstance(cells, list):
        raise InvalidDiagram("recipe: expected a list of cells")
    out = []
    for pos, cell in enumerate(cells):
        if not isinstance(cell, dict) or "k" not in cell:
            raise InvalidDiagram(f"recipe: cell {pos} lacks field 'k'")
        try:
            k = int(cell["k"])
        except (TypeError, ValueError):
            raise InvalidDiagram(f"recipe: cell {pos} has a non-integer 'k'") from None
        if k > 0 and not isinstance(cell.get("alpha"), dict):
            raise InvalidDiagram(f"recipe: cell {pos} needs an 'alpha' table")
        out.append(AttachmentInstruction(k, cell.get("alpha"), str(cell.get("tag", ""))))
    return out


def load_recipe(path: str | Path) -> list[AttachmentInstruction]:
    with open(path) as fh:
        return parse_recipe(json.load(fh))
