"""Truncated simplicial sets, simplicial maps, and the category they form.

Simplices in degree ``n`` are the integers ``0..count(n)-1``; ``labels`` keep
human-readable names for file I/O.  Degeneracies are optional: without them
the object is semi-simplicial and maps only need to commute with faces.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterator, Sequence

from .errors import CompositionMismatch, DegeneraciesMissing, InvalidDiagram, LevelMismatch
from .fincat import DEFAULT_BOUND, Budget, Cocone, Diagram, FiniteCategory, ProductWitness, _UnionFind
from .simplex import (
    MonotoneMap,
    all_monotone_maps,
    compose,
    degeneracy_map,
    epi_mono_factorize,
    face_map,
    identity,
    injective_part,
    simplicial_identity_instances,
    surjective_part,
)


class TruncSimplicialSet:
    """Simplicial set truncated at ``level``.

    ``faces[n][i][x]`` is ``d_i x`` for ``x`` in degree ``n >= 1``;
    ``degeneracies[n][i][x]`` is ``s_i x`` for ``x`` in degree ``n < level``.
    Equality is identity: two separately built copies are isomorphic, not equal.
    """

    def __init__(
        self,
        level: int,
        counts: Sequence[int],
        faces: Sequence[Sequence[Sequence[int]]],
        degeneracies: Sequence[Sequence[Sequence[int]]] | None = None,
        labels: Sequence[Sequence[str]] | None = None,
        name: str = "",
        data: Sequence[Sequence[Any]] | None = None,
    ):
        if level < 0 or len(counts) != level + 1:
            raise LevelMismatch(f"expected {level + 1} simplex counts, got {len(counts)}")
        self.level = level
        self.counts = tuple(counts)
        self.faces = [()] + [tuple(tuple(f) for f in faces[n]) for n in range(1, level + 1)]
        self.degeneracies = (
            None if degeneracies is None else [tuple(tuple(s) for s in degeneracies[n]) for n in range(level)]
        )
        self.labels = [tuple(l) for l in labels] if labels is not None else [
            tuple(str(x) for x in range(c)) for c in counts
        ]
        self.name = name
        self.data = data
        self._face_index: dict[int, dict] = {}
        self._degenerate: dict[int, list] = {}
        self._check_shapes()

    def _check_shapes(self):
        for n in range(1, self.level + 1):
            if len(self.faces[n]) != n + 1:
                raise LevelMismatch(f"degree {n} needs {n + 1} face maps")
            for f in self.faces[n]:
                if len(f) != self.counts[n] or any(not 0 <= v < self.counts[n - 1] for v in f):
                    raise InvalidDiagram(f"malformed face map in degree {n}")
        if self.degeneracies is not None:
            for n in range(self.level):
                if len(self.degeneracies[n]) != n + 1:
                    raise LevelMismatch(f"degree {n} needs {n + 1} degeneracy maps")
                for s in self.degeneracies[n]:
                    if len(s) != self.counts[n] or any(not 0 <= v < self.counts[n + 1] for v in s):
                        raise InvalidDiagram(f"malformed degeneracy map in degree {n}")

    def __repr__(self):
        return f"TruncSimplicialSet({self.name or '?'}, counts={self.counts})"

    @property
    def has_degeneracies(self) -> bool:
        return self.degeneracies is not None

    def count(self, n: int) -> int:
        return self.counts[n]

    def face(self, n: int, i: int, x: int) -> int:
        return self.faces[n][i][x]

    def degeneracy(self, n: int, i: int, x: int) -> int:
        if self.degeneracies is None:
            raise DegeneraciesMissing(f"{self.name or 'object'} has no degeneracies")
        return self.degeneracies[n][i][x]

    def face_tuple(self, n: int, x: int) -> tuple[int, ...]:
        return tuple(self.faces[n][i][x] for i in range(n + 1))

    def face_index(self, n: int) -> dict:
        """Degree-``n`` simplices grouped by their face tuple."""
        if n not in self._face_index:
            idx: dict = {}
            for x in range(self.counts[n]):
                idx.setdefault(self.face_tuple(n, x) if n else (), []).append(x)
            self._face_index[n] = idx
        return self._face_index[n]

    def degenerate_witness(self, n: int) -> list:
        """For each degree-``n`` simplex, ``(j, z)`` with ``x = s_j z``, or ``None``."""
        if n not in self._degenerate:
            out: list = [None] * self.counts[n]
            if self.degeneracies is not None and n >= 1:
                for j in range(n):
                    for z, x in enumerate(self.degeneracies[n - 1][j]):
                        if out[x] is None:
                            out[x] = (j, z)
            self._degenerate[n] = out
        return self._degenerate[n]

    def nondegenerate(self, n: int) -> list[int]:
        return [x for x, w in enumerate(self.degenerate_witness(n)) if w is None]

    def act(self, x: int, word: Sequence[tuple[str, int, int]]) -> int:
        """Right action of a generator word, listed outermost first."""
        for kind, n, i in word:
            x = self.faces[n][i][x] if kind == "d" else self.degeneracy(n, i, x)
        return x

    def act_map(self, x: int, phi: MonotoneMap) -> int:
        """``x . phi`` for ``x`` in degree ``phi.target``."""
        fac = epi_mono_factorize(phi)
        word = [("d", n, i) for n, i in fac.faces] + [("s", n, i) for n, i in fac.degeneracies]
        return self.act(x, word)

    def validate(self) -> "IdentityCheck":
        """Check the contravariant simplicial identities among the stored maps."""
        checked = 0
        for ident in simplicial_identity_instances(self.level):
            if self.degeneracies is None and any(k == "s" for k, _, _ in ident.lhs + ident.rhs):
                continue
            top = (ident.lhs[0][1]) if ident.lhs else ident.source
            for x in range(self.counts[top]):
                checked += 1
                if self.act(x, ident.lhs) != self.act(x, ident.rhs):
                    return IdentityCheck(False, checked, {"identity": ident.describe(), "simplex": self.labels[top][x]})
        return IdentityCheck(True, checked)

    def label(self, n: int, x: int) -> str:
        return self.labels[n][x]

    def index_of(self, n: int, label: str) -> int:
        return self.labels[n].index(label)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "level": self.level,
            "simplices": [list(l) for l in self.labels],
            "faces": {
                f"({n},{i})": {self.labels[n][x]: self.labels[n - 1][y] for x, y in enumerate(self.faces[n][i])}
                for n in range(1, self.level + 1)
                for i in range(n + 1)
            },
        }
        if self.degeneracies is not None:
            out["degeneracies"] = {
                f"({n},{i})": {self.labels[n][x]: self.labels[n + 1][y] for x, y in enumerate(self.degeneracies[n][i])}
                for n in range(self.level)
                for i in range(n + 1)
            }
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> "TruncSimplicialSet":
        try:
            level = int(data["level"])
            simplices = [[str(s) for s in lvl] for lvl in data["simplices"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidDiagram(f"simplicial set file: bad 'level' or 'simplices' ({exc})") from None
        while len(simplices) < level + 1:
            simplices.append([])
        if len(simplices) != level + 1:
            raise LevelMismatch(f"{len(simplices)} simplex lists for level {level}")
        index = [{s: k for k, s in enumerate(lvl)} for lvl in simplices]

        def table(key, n, i, shift):
            try:
                mapping = data[key][f"({n},{i})"]
            except KeyError:
                if not simplices[n]:
                    return []
                raise InvalidDiagram(f"simplicial set file: missing {key} entry ({n},{i})") from None
            try:
                return [index[n + shift][str(mapping[s])] for s in simplices[n]]
            except KeyError as exc:
                raise InvalidDiagram(f"simplicial set file: {key} ({n},{i}) refers to unknown simplex {exc}") from None

        faces = [()] + [[table("faces", n, i, -1) for i in range(n + 1)] for n in range(1, level + 1)]
        degs = None
        if data.get("degeneracies"):
            degs = [[table("degeneracies", n, i, 1) for i in range(n + 1)] for n in range(level)]
        return cls(level, [len(l) for l in simplices], faces, degs, simplices, name or data.get("name", ""))

    @classmethod
    def load(cls, path: str | Path) -> "TruncSimplicialSet":
        path = Path(path)
        with open(path) as fh:
            return cls.from_json(json.load(fh), path.stem)


@dataclass
class IdentityCheck:
    passed: bool
    checked: int
    witness: dict | None = None


@dataclass(frozen=True)
class SimplicialMap:
    """Levelwise components ``components[n][x]``."""

    source: TruncSimplicialSet
    target: TruncSimplicialSet
    components: tuple[tuple[int, ...], ...]

    def __call__(self, n: int, x: int) -> int:
        return self.components[n][x]

    def __repr__(self):
        return f"SimplicialMap({self.source.name}->{self.target.name}, {self.components})"

    def is_valid(self) -> bool:
        X, Y = self.source, self.target
        if X.level != Y.level or len(self.components) != X.level + 1:
            return False
        for n in range(X.level + 1):
            comp = self.components[n]
            if len(comp) != X.counts[n] or any(not 0 <= v < Y.counts[n] for v in comp):
                return False
            if n:
                for i in range(n + 1):
                    if any(Y.faces[n][i][comp[x]] != self.components[n - 1][X.faces[n][i][x]] for x in range(X.counts[n])):
                        return False
        if X.has_degeneracies and Y.has_degeneracies:
            for n in range(X.level):
                for i in range(n + 1):
                    if any(
                        Y.degeneracies[n][i][self.components[n][x]] != self.components[n + 1][X.degeneracies[n][i][x]]
                        for x in range(X.counts[n])
                    ):
                        return False
        return True


def identity_map(X: TruncSimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, tuple(tuple(range(c)) for c in X.counts))


def compose_maps(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    if f.target is not g.source:
        raise CompositionMismatch(f"cannot compose {g.source.name} <- {f.target.name}")
    return SimplicialMap(
        f.source, g.target, tuple(tuple(gc[v] for v in fc) for gc, fc in zip(g.components, f.components))
    )


def make_map(source: TruncSimplicialSet, target: TruncSimplicialSet, components) -> SimplicialMap:
    m = SimplicialMap(source, target, tuple(tuple(c) for c in components))
    if not m.is_valid():
        raise InvalidDiagram(f"components do not define a simplicial map {source.name} -> {target.name}")
    return m


def map_from_vertices(source, target, vertex_images: Sequence[int]) -> SimplicialMap:
    """The unique map with given vertex values, when simplices are determined by vertices."""
    maps = [m for m in enumerate_maps(source, target) if m.components[0] == tuple(vertex_images)]
    if len(maps) != 1:
        raise InvalidDiagram(f"{len(maps)} simplicial maps with vertex values {tuple(vertex_images)}")
    return maps[0]


def enumerate_maps(X: TruncSimplicialSet, Y: TruncSimplicialSet, budget: Budget | None = None) -> list[SimplicialMap]:
    """All simplicial maps ``X -> Y`` in canonical (levelwise lexicographic) order."""
    if X.level != Y.level:
        raise LevelMismatch(f"levels {X.level} and {Y.level} differ")
    budget = budget or Budget(DEFAULT_BOUND)
    use_degs = X.has_degeneracies and Y.has_degeneracies
    L = X.level
    out: list[SimplicialMap] = []
    comps: list[tuple] = []

    def level_options(n):
        prev = comps[n - 1] if n else None
        opts = []
        witness = X.degenerate_witness(n) if use_degs else [None] * X.counts[n]
        idx = Y.face_index(n)
        for x in range(X.counts[n]):
            if n == 0:
                cand = list(range(Y.counts[0]))
            else:
                key = tuple(prev[X.faces[n][i][x]] for i in range(n + 1))
                cand = idx.get(key, [])
                if witness[x] is not None:
                    j, z = witness[x]
                    forced = Y.degeneracies[n - 1][j][prev[z]]
                    cand = [forced] if forced in cand else []
            if not cand:
                return None
            opts.append(cand)
        return opts

    def check_degs(n, comp):
        # degeneracies landing in degree n from degree n-1
        if not use_degs or n == 0:
            return True
        prev = comps[n - 1]
        for i in range(n):
            s_x, s_y = X.degeneracies[n - 1][i], Y.degeneracies[n - 1][i]
            for z in range(X.counts[n - 1]):
                if comp[s_x[z]] != s_y[prev[z]]:
                    return False
        return True

    def rec(n):
        if n > L:
            out.append(SimplicialMap(X, Y, tuple(comps)))
            return
        opts = level_options(n)
        if opts is None:
            return
        for comp in itertools.product(*opts):
            budget.spend()
            if check_degs(n, comp):
                comps.append(comp)
                rec(n + 1)
                comps.pop()

    rec(0)
    return out


# -- builders ---------------------------------------------------------------


def _label_of(phi: MonotoneMap) -> str:
    sep = "" if phi.target < 10 else ","
    return sep.join(str(v) for v in phi.image)


def _from_monotone(m: int, level: int, keep, name: str) -> TruncSimplicialSet:
    simplices = [[phi for phi in all_monotone_maps(n, m) if keep(phi)] for n in range(level + 1)]
    index = [{phi: k for k, phi in enumerate(lvl)} for lvl in simplices]
    faces = [()] + [
        [[index[n - 1][compose(phi, face_map(n, i))] for phi in simplices[n]] for i in range(n + 1)]
        for n in range(1, level + 1)
    ]
    degs = [[[index[n + 1][compose(phi, degeneracy_map(n, i))] for phi in simplices[n]] for i in range(n + 1)] for n in range(level)]
    labels = [[_label_of(phi) for phi in lvl] for lvl in simplices]
    return TruncSimplicialSet(level, [len(l) for l in simplices], faces, degs, labels, name, simplices)


def representable(m: int, level: int) -> TruncSimplicialSet:
    """``Delta[m]``: degree-``n`` simplices are the monotone maps ``[n] -> [m]``."""
    return _from_monotone(m, level, lambda phi: True, f"Delta[{m}]")


def boundary(m: int, level: int) -> TruncSimplicialSet:
    """``dDelta[m]``: the non-surjective monotone maps into ``[m]``."""
    return _from_monotone(m, level, lambda phi: not phi.is_surjective(), f"dDelta[{m}]")


def point(level: int) -> TruncSimplicialSet:
    return representable(0, level)


def product(X: TruncSimplicialSet, Y: TruncSimplicialSet) -> tuple[TruncSimplicialSet, SimplicialMap, SimplicialMap]:
    """Degreewise cartesian product; the pair ``(x, y)`` has index ``x*|Y_n| + y``."""
    if X.level != Y.level:
        raise LevelMismatch("product of different truncation levels")
    L = X.level
    counts = [X.counts[n] * Y.counts[n] for n in range(L + 1)]

    def pairmap(fx, fy, n_src, n_dst):
        cy = Y.counts[n_dst]
        return [fx[x] * cy + fy[y] for x in range(X.counts[n_src]) for y in range(Y.counts[n_src])]

    faces = [()] + [[pairmap(X.faces[n][i], Y.faces[n][i], n, n - 1) for i in range(n + 1)] for n in range(1, L + 1)]
    degs = None
    if X.has_degeneracies and Y.has_degeneracies:
        degs = [[pairmap(X.degeneracies[n][i], Y.degeneracies[n][i], n, n + 1) for i in range(n + 1)] for n in range(L)]
    labels = [[f"({a},{b})" for a in X.labels[n] for b in Y.labels[n]] for n in range(L + 1)]
    P = TruncSimplicialSet(L, counts, faces, degs, labels, f"{X.name}x{Y.name}")
    p1 = SimplicialMap(P, X, tuple(tuple(e // Y.counts[n] for e in range(counts[n])) for n in range(L + 1)))
    p2 = SimplicialMap(P, Y, tuple(tuple(e % Y.counts[n] for e in range(counts[n])) for n in range(L + 1)))
    return P, p1, p2


def colimit_of(D: Diagram) -> Cocone:
    """Degreewise quotient of the disjoint union by the diagram's edges."""
    nodes = D.nodes
    if not nodes:
        raise InvalidDiagram("empty diagram")
    L = nodes[0].level
    if any(N.level != L for N in nodes):
        raise LevelMismatch("diagram nodes have different levels")
    use_degs = all(N.has_degeneracies for N in nodes)
    offsets = [list(itertools.accumulate((N.counts[n] for N in nodes), initial=0)) for n in range(L + 1)]
    classes, cls_of = [], []
    for n in range(L + 1):
        uf = _UnionFind(offsets[n][-1])
        for s, t, m in D.edges:
            for x in range(nodes[s].counts[n]):
                uf.union(offsets[n][s] + x, offsets[n][t] + m.components[n][x])
        roots = sorted({uf.find(e) for e in range(offsets[n][-1])})
        label = {r: k for k, r in enumerate(roots)}
        cls_of.append([label[uf.find(e)] for e in range(offsets[n][-1])])
        classes.append(roots)

    def locate(n, e):
        k = max(j for j in range(len(nodes)) if offsets[n][j] <= e and nodes[j].counts[n] > e - offsets[n][j])
        return k, e - offsets[n][k]

    def structure(n, i, shift, get):
        out = []
        for r in classes[n]:
            k, x = locate(n, r)
            out.append(cls_of[n + shift][offsets[n + shift][k] + get(nodes[k], x)])
        return out

    faces = [()] + [
        [structure(n, i, -1, lambda N, x, n=n, i=i: N.faces[n][i][x]) for i in range(n + 1)] for n in range(1, L + 1)
    ]
    degs = None
    if use_degs:
        degs = [[structure(n, i, 1, lambda N, x, n=n, i=i: N.degeneracies[n][i][x]) for i in range(n + 1)] for n in range(L)]
    labels = []
    for n in range(L + 1):
        lvl = []
        for r in classes[n]:
            k, x = locate(n, r)
            lvl.append(nodes[k].labels[n][x] if len(nodes) == 1 else f"{D.node_name(k)}:{nodes[k].labels[n][x]}")
        labels.append(lvl)
    apex = TruncSimplicialSet(L, [len(c) for c in classes], faces, degs, labels, "colim")
    legs = tuple(
        SimplicialMap(N, apex, tuple(tuple(cls_of[n][offsets[n][k] + x] for x in range(N.counts[n])) for n in range(L + 1)))
        for k, N in enumerate(nodes)
    )
    # well-definedness: the quotient structure maps must agree on every member
    for leg in legs:
        if not leg.is_valid():
            raise InvalidDiagram("diagram edges are not simplicial maps; quotient ill-defined")
    return Cocone(apex, legs)


def disjoint_union(*parts: TruncSimplicialSet, name: str = "") -> tuple[TruncSimplicialSet, tuple[SimplicialMap, ...]]:
    c = colimit_of(Diagram(tuple(parts), (), tuple(p.name or str(k) for k, p in enumerate(parts))))
    c.apex.name = name or "+".join(p.name for p in parts)
    return c.apex, c.legs


def free_completion(S: TruncSimplicialSet, level: int | None = None, name: str | None = None) -> TruncSimplicialSet:
    """Add degeneracies freely to a semi-simplicial set.

    Degree-``n`` simplices become pairs ``(sigma, x)`` with ``sigma: [n] ->> [k]``
    surjective and ``x`` a degree-``k`` simplex of ``S``; the given simplices
    are those with ``sigma`` the identity.
    """
    L = S.level if level is None else level
    if L < S.level and any(S.counts[n] for n in range(L + 1, S.level + 1)):
        raise LevelMismatch("completion level below the top nonempty degree")
    top = min(L, S.level)
    simplices = []
    for n in range(L + 1):
        lvl = []
        for k in range(min(n, top) + 1):
            for sigma in all_monotone_maps(n, k):
                if sigma.is_surjective():
                    lvl.extend((sigma, x) for x in range(S.counts[k]))
        simplices.append(lvl)
    index = [{s: j for j, s in enumerate(lvl)} for lvl in simplices]

    def restrict(x, k, delta):
        # x . delta for injective delta into [k]
        fac = epi_mono_factorize(delta)
        return S.act(x, [("d", n, i) for n, i in fac.faces])

    def act(n, simplex, phi):
        sigma, x = simplex
        comp = compose(sigma, phi)
        epi, mono = surjective_part(comp), injective_part(comp)
        return index[phi.source][(epi, restrict(x, sigma.target, mono))]

    faces = [()] + [[[act(n, s, face_map(n, i)) for s in simplices[n]] for i in range(n + 1)] for n in range(1, L + 1)]
    degs = [[[act(n, s, degeneracy_map(n, i)) for s in simplices[n]] for i in range(n + 1)] for n in range(L)]

    def label(n, s):
        sigma, x = s
        base = S.labels[sigma.target][x]
        if sigma == identity(sigma.target):
            return base
        return f"{base}.s{''.join(str(v) for v in sigma.image)}"

    labels = [[label(n, s) for s in lvl] for n, lvl in enumerate(simplices)]
    return TruncSimplicialSet(L, [len(l) for l in simplices], faces, degs, labels, name or S.name, simplices)


def ensure_degeneracies(S: TruncSimplicialSet) -> TruncSimplicialSet:
    return S if S.has_degeneracies else free_completion(S)


# -- the category -------------------------------------------------------------


class TruncSSetCategory(FiniteCategory):
    """Simplicial sets truncated at ``level``; morphisms are all simplicial maps.

    Objects are compared by identity, so constructions are memoized to keep
    ``representable(1)`` (and friends) a single object.
    """

    def __init__(self, level: int = 3, test_objects: Sequence[TruncSimplicialSet] | None = None, bound: int = DEFAULT_BOUND):
        super().__init__(bound)
        if level < 1:
            raise LevelMismatch("truncation level must be at least 1")
        self.level = level
        self._cache: dict = {}
        self._homs: dict = {}
        self._product_of: dict = {}
        self._tests: list = []
        if test_objects is None:
            test_objects = [self.point(), self.representable(1), self.representable(2), self.boundary(2)]
        for X in test_objects:
            self.register(X)

    def register(self, X: TruncSimplicialSet) -> TruncSimplicialSet:
        if X.level != self.level:
            raise LevelMismatch(f"object at level {X.level} in a level-{self.level} category")
        if not any(X is T for T in self._tests):
            self._tests.append(X)
        return X

    def _memo(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def representable(self, m: int) -> TruncSimplicialSet:
        return self._memo(("rep", m), lambda: representable(m, self.level))

    def boundary(self, m: int) -> TruncSimplicialSet:
        return self._memo(("bdry", m), lambda: boundary(m, self.level))

    def point(self) -> TruncSimplicialSet:
        return self.representable(0)

    def objects(self) -> list:
        return list(self._tests)

    def hom(self, a: TruncSimplicialSet, b: TruncSimplicialSet) -> list:
        key = (a, b)
        if key not in self._homs:
            self._homs[key] = enumerate_maps(a, b, self.budget())
        return self._homs[key]

    def compose(self, g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
        return compose_maps(g, f)

    def identity(self, a: TruncSimplicialSet) -> SimplicialMap:
        return self._memo(("id", a), lambda: identity_map(a))

    def source(self, f: SimplicialMap):
        return f.source

    def target(self, f: SimplicialMap):
        return f.target

    def describe_object(self, a: TruncSimplicialSet) -> str:
        return a.name or repr(a)

    def describe_morphism(self, f: SimplicialMap) -> Any:
        return {
            "source": f.source.name,
            "target": f.target.name,
            "components": [
                {f.source.labels[n][x]: f.target.labels[n][y] for x, y in enumerate(c)} for n, c in enumerate(f.components)
            ],
        }

    def terminal_candidates(self) -> list:
        return [self.point()]

    def canonical_product(self, a, b) -> ProductWitness:
        P, p1, p2 = product(a, b)
        self._product_of[P] = (a, b)
        return ProductWitness(a, b, P, p1, p2)

    def pairing(self, f: SimplicialMap, g: SimplicialMap, w: ProductWitness | None = None) -> SimplicialMap:
        w = w or self.product(f.target, g.target)
        if self._product_of.get(w.apex) != (f.target, g.target) or f.source is not g.source:
            return super().pairing(f, g, w)
        Y = g.target
        comps = tuple(
            tuple(a * Y.counts[n] + b for a, b in zip(fc, gc)) for n, (fc, gc) in enumerate(zip(f.components, g.components))
        )
        return SimplicialMap(f.source, w.apex, comps)

    def canonical_colimit(self, D: Diagram) -> Cocone:
        return colimit_of(D)
