"""Categories with finite, enumerable hom-sets.

Limits and colimits are never trusted: a candidate (built canonically when
the instance knows how, found by search otherwise) is accepted only after an
exhaustive scan of its universal property against the category's test
objects.
"""

from __future__ import annotations

import itertools
import json
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Hashable, Iterable, Iterator, Sequence

from .errors import (
    ColimitNotFound,
    CompositionMismatch,
    FactorizationNotUnique,
    InvalidDiagram,
    MissingMorphism,
    ProductNotFound,
    ResourceLimitExceeded,
)

DEFAULT_BOUND = 10**7


class Budget:
    """Counts elementary checks and aborts once ``bound`` is exceeded."""

    __slots__ = ("bound", "spent")

    def __init__(self, bound: int = DEFAULT_BOUND):
        self.bound = bound
        self.spent = 0

    def spend(self, n: int = 1) -> None:
        self.spent += n
        if self.spent > self.bound:
            raise ResourceLimitExceeded(f"more than {self.bound} checks")


@dataclass(frozen=True)
class ProductWitness:
    left: Any
    right: Any
    apex: Any
    proj1: Any
    proj2: Any


@dataclass(frozen=True)
class Diagram:
    """Finite diagram: ``nodes`` are objects, ``edges`` are ``(src, dst, morphism)``."""

    nodes: tuple
    edges: tuple = ()
    names: tuple | None = None

    def node_name(self, k: int) -> str:
        return self.names[k] if self.names else str(k)


@dataclass(frozen=True)
class Cocone:
    apex: Any
    legs: tuple


@dataclass
class LawReport:
    passed: bool
    checked: int
    witness: dict | None = None


class FiniteCategory(ABC):
    """A category whose hom-sets are finite lists in a canonical order.

    ``objects()`` is the test set against which universal properties are
    scanned; instances may still accept objects outside it (products and
    colimits are built on demand).
    """

    def __init__(self, bound: int = DEFAULT_BOUND):
        self.bound = bound
        self._products: dict = {}

    # -- primitives -----------------------------------------------------

    @abstractmethod
    def objects(self) -> list: ...

    @abstractmethod
    def hom(self, a, b) -> list: ...

    @abstractmethod
    def compose(self, g, f): ...

    @abstractmethod
    def identity(self, a): ...

    @abstractmethod
    def source(self, f): ...

    @abstractmethod
    def target(self, f): ...

    def describe_object(self, a) -> str:
        return str(a)

    def describe_morphism(self, f) -> Any:
        return str(f)

    def budget(self) -> Budget:
        return Budget(self.bound)

    def compose_all(self, *maps):
        """``compose_all(h, g, f) == h o g o f``."""
        result = maps[-1]
        for m in reversed(maps[:-1]):
            result = self.compose(m, result)
        return result

    # -- terminal -------------------------------------------------------

    def terminal_candidates(self) -> list:
        return self.objects()

    def is_terminal(self, t, budget: Budget | None = None) -> bool:
        budget = budget or self.budget()
        for a in self.objects() + [t]:
            budget.spend()
            if len(self.hom(a, t)) != 1:
                return False
        return True

    def find_terminal(self):
        budget = self.budget()
        for t in self.terminal_candidates():
            if self.is_terminal(t, budget):
                return t
        return None

    def terminal(self):
        t = self.find_terminal()
        if t is None:
            raise ProductNotFound("no terminal object")
        return t

    def terminal_map(self, x):
        (m,) = self.hom(x, self.terminal())
        return m

    # -- products -------------------------------------------------------

    def canonical_product(self, a, b) -> ProductWitness | None:
        return None

    def verify_product(self, w: ProductWitness, budget: Budget | None = None) -> bool:
        """Check that ``h -> (p1 h, p2 h)`` is a bijection for every test object."""
        budget = budget or self.budget()
        if self.source(w.proj1) != w.apex or self.source(w.proj2) != w.apex:
            return False
        if self.target(w.proj1) != w.left or self.target(w.proj2) != w.right:
            return False
        for x in self.objects():
            homs = self.hom(x, w.apex)
            expected = len(self.hom(x, w.left)) * len(self.hom(x, w.right))
            budget.spend(len(homs) + 1)
            if len(homs) != expected:
                return False
            seen = {(self.compose(w.proj1, h), self.compose(w.proj2, h)) for h in homs}
            if len(seen) != expected:
                return False
        return True

    def search_product(self, a, b, budget: Budget) -> ProductWitness | None:
        for p in self.objects():
            for p1 in self.hom(p, a):
                for p2 in self.hom(p, b):
                    w = ProductWitness(a, b, p, p1, p2)
                    if self.verify_product(w, budget):
                        return w
        return None

    def product(self, a, b) -> ProductWitness:
        key = (a, b)
        if key in self._products:
            return self._products[key]
        budget = self.budget()
        w = self.canonical_product(a, b)
        if w is not None and not self.verify_product(w, budget):
            w = None
        if w is None:
            w = self.search_product(a, b, budget)
        if w is None:
            raise ProductNotFound(f"no product of {self.describe_object(a)} and {self.describe_object(b)}")
        self._products[key] = w
        return w

    def pairing(self, f, g, w: ProductWitness | None = None):
        """The unique ``h`` with ``proj1 h = f`` and ``proj2 h = g``."""
        if self.source(f) != self.source(g):
            raise CompositionMismatch("pairing needs a common source")
        w = w or self.product(self.target(f), self.target(g))
        found = [
            h
            for h in self.hom(self.source(f), w.apex)
            if self.compose(w.proj1, h) == f and self.compose(w.proj2, h) == g
        ]
        if len(found) != 1:
            raise ProductNotFound(f"pairing has {len(found)} candidates")
        return found[0]

    def product_of_morphisms(self, f, g):
        """``f x g`` between the chosen products of sources and of targets."""
        ws = self.product(self.source(f), self.source(g))
        wt = self.product(self.target(f), self.target(g))
        return self.pairing(self.compose(f, ws.proj1), self.compose(g, ws.proj2), wt)

    def unit_iso(self, x):
        """The canonical ``x -> x * 1``, i.e. ``<id, !>``."""
        return self.pairing(self.identity(x), self.terminal_map(x), self.product(x, self.terminal()))

    # -- colimits -------------------------------------------------------

    def check_diagram(self, D: Diagram) -> None:
        for s, t, m in D.edges:
            if not (0 <= s < len(D.nodes) and 0 <= t < len(D.nodes)):
                raise InvalidDiagram(f"edge {s}->{t} outside the node range")
            if self.source(m) != D.nodes[s] or self.target(m) != D.nodes[t]:
                raise InvalidDiagram(f"edge {s}->{t} is not typed by its endpoints")

    def cocones(self, D: Diagram, x, budget: Budget | None = None) -> Iterator[tuple]:
        """Every cocone over ``D`` with apex ``x``, as leg tuples, in canonical order."""
        budget = budget or self.budget()
        n = len(D.nodes)
        options = [self.hom(D.nodes[k], x) for k in range(n)]
        # edges checkable once both endpoints are fixed
        checks: list[list] = [[] for _ in range(n)]
        for s, t, m in D.edges:
            checks[max(s, t)].append((s, t, m))
        legs: list = [None] * n

        def rec(k):
            if k == n:
                yield tuple(legs)
                return
            for leg in options[k]:
                budget.spend()
                legs[k] = leg
                if all(self.compose(legs[t], m) == legs[s] for s, t, m in checks[k]):
                    yield from rec(k + 1)
            legs[k] = None

        yield from rec(0)

    def is_cocone(self, D: Diagram, c: Cocone) -> bool:
        return all(self.compose(c.legs[t], m) == c.legs[s] for s, t, m in D.edges)

    def verify_colimit(self, D: Diagram, c: Cocone, budget: Budget | None = None) -> bool:
        """Check that ``u -> (u o leg)`` is a bijection onto cocones for every test object."""
        budget = budget or self.budget()
        if not self.is_cocone(D, c):
            return False
        for x in self.objects():
            homs = self.hom(c.apex, x)
            budget.spend(len(homs))
            images = {tuple(self.compose(u, leg) for leg in c.legs) for u in homs}
            if len(images) != len(homs):
                return False
            count = 0
            for _ in self.cocones(D, x, budget):
                count += 1
                if count > len(homs):
                    return False
            if count != len(homs):
                return False
        return True

    def canonical_colimit(self, D: Diagram) -> Cocone | None:
        return None

    def search_colimit(self, D: Diagram, budget: Budget) -> Cocone | None:
        for x in self.objects():
            for legs in self.cocones(D, x, budget):
                c = Cocone(x, legs)
                if self.verify_colimit(D, c, budget):
                    return c
        return None

    def colimit(self, D: Diagram) -> Cocone:
        self.check_diagram(D)
        budget = self.budget()
        c = self.canonical_colimit(D)
        if c is not None and not self.verify_colimit(D, c, budget):
            c = None
        if c is None:
            c = self.search_colimit(D, budget)
        if c is None:
            raise ColimitNotFound("no colimiting cocone among the test objects")
        return c

    def factor_through(self, D: Diagram, colim: Cocone, legs: Sequence):
        """The unique ``u: colim.apex -> x`` with ``u o colim.legs[k] == legs[k]``."""
        x = self.target(legs[0])
        found = [u for u in self.hom(colim.apex, x) if all(self.compose(u, l) == m for l, m in zip(colim.legs, legs))]
        if len(found) != 1:
            raise FactorizationNotUnique(f"{len(found)} factorizations through the colimit")
        return found[0]

    # -- isomorphisms ---------------------------------------------------

    def inverse(self, f):
        a, b = self.source(f), self.target(f)
        ia, ib = self.identity(a), self.identity(b)
        for g in self.hom(b, a):
            if self.compose(g, f) == ia and self.compose(f, g) == ib:
                return g
        return None

    def find_isomorphism(self, a, b):
        for f in self.hom(a, b):
            if self.inverse(f) is not None:
                return f
        return None

    def automorphisms(self, a) -> list:
        return [f for f in self.hom(a, a) if self.inverse(f) is not None]


def verify_category_laws(C: FiniteCategory, objects: Sequence | None = None) -> LawReport:
    """Identity and associativity laws on every enumerable instance."""
    objs = list(objects) if objects is not None else C.objects()
    budget = C.budget()
    checked = 0
    homs = {(a, b): C.hom(a, b) for a in objs for b in objs}
    for (a, b), fs in homs.items():
        ia, ib = C.identity(a), C.identity(b)
        for f in fs:
            checked += 1
            budget.spend()
            if C.compose(ib, f) != f or C.compose(f, ia) != f:
                return LawReport(False, checked, {"law": "identity", "f": C.describe_morphism(f)})
    for a, b, c, d in itertools.product(objs, repeat=4):
        fs, gs, hs = homs[(a, b)], homs[(b, c)], homs[(c, d)]
        if not (fs and gs and hs):
            continue
        gf = {(g, f): C.compose(g, f) for g in gs for f in fs}
        for h in hs:
            hg = {g: C.compose(h, g) for g in gs}
            for (g, f), comp in gf.items():
                checked += 1
                budget.spend()
                if C.compose(h, comp) != C.compose(hg[g], f):
                    return LawReport(
                        False,
                        checked,
                        {
                            "law": "associativity",
                            "h": C.describe_morphism(h),
                            "g": C.describe_morphism(g),
                            "f": C.describe_morphism(f),
                        },
                    )
    return LawReport(True, checked)


# -- finite sets ----------------------------------------------------------


@dataclass(frozen=True, order=True)
class Function:
    """A function ``{0..source-1} -> {0..target-1}`` stored by its values."""

    source: int
    target: int
    values: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.values[x]

    def __repr__(self):
        return f"Function({self.source}->{self.target}, {self.values})"


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the smaller index as representative
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


class FinSet(FiniteCategory):
    """Nonempty finite sets ``{0..m-1}``; test objects are sizes ``1..k``."""

    def __init__(self, k: int = 3, bound: int = DEFAULT_BOUND):
        super().__init__(bound)
        if k < 1:
            raise ValueError("FinSet needs k >= 1")
        self.k = k
        self._homs: dict = {}

    def objects(self) -> list:
        return list(range(1, self.k + 1))

    def hom(self, a: int, b: int) -> list:
        key = (a, b)
        if key not in self._homs:
            self._homs[key] = [Function(a, b, v) for v in itertools.product(range(b), repeat=a)]
        return self._homs[key]

    def compose(self, g: Function, f: Function) -> Function:
        if f.target != g.source:
            raise CompositionMismatch(f"cannot compose {g} after {f}")
        return Function(f.source, g.target, tuple(g.values[v] for v in f.values))

    def identity(self, a: int) -> Function:
        return Function(a, a, tuple(range(a)))

    def source(self, f: Function) -> int:
        return f.source

    def target(self, f: Function) -> int:
        return f.target

    def describe_morphism(self, f: Function) -> Any:
        return {"source": f.source, "target": f.target, "values": list(f.values)}

    def terminal_candidates(self) -> list:
        return [1]

    def canonical_product(self, a: int, b: int) -> ProductWitness:
        # pair (i, j) is encoded as i*b + j
        p = a * b
        return ProductWitness(
            a, b, p, Function(p, a, tuple(e // b for e in range(p))), Function(p, b, tuple(e % b for e in range(p)))
        )

    def pairing(self, f: Function, g: Function, w: ProductWitness | None = None) -> Function:
        w = w or self.product(f.target, g.target)
        if w.apex != f.target * g.target or f.source != g.source:
            return super().pairing(f, g, w)
        return Function(f.source, w.apex, tuple(x * g.target + y for x, y in zip(f.values, g.values)))

    def canonical_colimit(self, D: Diagram) -> Cocone:
        offsets = list(itertools.accumulate((n for n in D.nodes), initial=0))
        uf = _UnionFind(offsets[-1])
        for s, t, m in D.edges:
            for x in range(D.nodes[s]):
                uf.union(offsets[s] + x, offsets[t] + m.values[x])
        roots = sorted({uf.find(e) for e in range(offsets[-1])})
        label = {r: i for i, r in enumerate(roots)}
        apex = len(roots)
        legs = tuple(
            Function(n, apex, tuple(label[uf.find(offsets[k] + x)] for x in range(n))) for k, n in enumerate(D.nodes)
        )
        return Cocone(apex, legs)


# -- explicit tables --------------------------------------------------------


@dataclass(frozen=True, order=True)
class TableMorphism:
    id: str
    src: str
    dst: str

    def __repr__(self):
        return self.id


class TableCategory(FiniteCategory):
    """A category given by an explicit composition table."""

    def __init__(self, objects, morphisms, compose_table, identities, bound: int = DEFAULT_BOUND, name: str = "table"):
        super().__init__(bound)
        self.name = name
        self._objects = list(objects)
        self._morphisms: dict[str, TableMorphism] = {}
        for m in morphisms:
            if m["src"] not in self._objects or m["dst"] not in self._objects:
                raise InvalidDiagram(f"morphism {m['id']} has an unknown endpoint")
            if m["id"] in self._morphisms:
                raise InvalidDiagram(f"duplicate morphism id {m['id']}")
            self._morphisms[m["id"]] = TableMorphism(m["id"], m["src"], m["dst"])
        self._ids: dict[str, TableMorphism] = {}
        for obj in self._objects:
            if obj not in identities:
                raise MissingMorphism(f"no identity for object {obj}")
            self._ids[obj] = self.morphism(identities[obj])
        self._homs: dict[tuple, list] = {(a, b): [] for a in self._objects for b in self._objects}
        for m in self._morphisms.values():
            self._homs[(m.src, m.dst)].append(m)
        self._table: dict[tuple[str, str], str] = {}
        for g, f, gf in compose_table:
            for mid in (g, f, gf):
                self.morphism(mid)
            self._table[(g, f)] = gf
        # identities compose trivially even when the table omits them
        for m in self._morphisms.values():
            self._table.setdefault((self._ids[m.dst].id, m.id), m.id)
            self._table.setdefault((m.id, self._ids[m.src].id), m.id)
        for f in self._morphisms.values():
            for g in (h for b in self._objects for h in self._homs[(f.dst, b)]):
                if (g.id, f.id) not in self._table:
                    raise MissingMorphism(f"composition {g.id} o {f.id} missing from the table")
                gf = self.morphism(self._table[(g.id, f.id)])
                if gf.src != f.src or gf.dst != g.dst:
                    raise CompositionMismatch(f"{g.id} o {f.id} = {gf.id} has the wrong endpoints")

    def morphism(self, mid: str) -> TableMorphism:
        try:
            return self._morphisms[mid]
        except KeyError:
            raise MissingMorphism(f"unknown morphism {mid}") from None

    def objects(self) -> list:
        return list(self._objects)

    def hom(self, a, b) -> list:
        return self._homs[(a, b)]

    def compose(self, g: TableMorphism, f: TableMorphism) -> TableMorphism:
        if f.dst != g.src:
            raise CompositionMismatch(f"cannot compose {g.id} after {f.id}")
        return self._morphisms[self._table[(g.id, f.id)]]

    def identity(self, a) -> TableMorphism:
        return self._ids[a]

    def source(self, f: TableMorphism):
        return f.src

    def target(self, f: TableMorphism):
        return f.dst

    def describe_morphism(self, f: TableMorphism) -> str:
        return f.id

    def with_entry(self, g: str, f: str, gf: str) -> "TableCategory":
        """A copy with one composition entry overwritten (for mutation tests)."""
        table = dict(self._table)
        table[(g, f)] = gf
        return TableCategory(
            self._objects,
            [{"id": m.id, "src": m.src, "dst": m.dst} for m in self._morphisms.values()],
            [[a, b, c] for (a, b), c in table.items()],
            {o: i.id for o, i in self._ids.items()},
            self.bound,
            self.name,
        )

    def to_json(self) -> dict:
        return {
            "objects": list(self._objects),
            "morphisms": [{"id": m.id, "src": m.src, "dst": m.dst} for m in self._morphisms.values()],
            "compose": [[g, f, gf] for (g, f), gf in sorted(self._table.items())],
            "identities": {o: i.id for o, i in self._ids.items()},
        }

    @classmethod
    def from_json(cls, data: dict, bound: int = DEFAULT_BOUND, name: str = "table") -> "TableCategory":
        for key in ("objects", "morphisms", "identities"):
            if key not in data:
                raise InvalidDiagram(f"table category file lacks field '{key}'")
        return cls(data["objects"], data["morphisms"], data.get("compose", []), data["identities"], bound, name)

    @classmethod
    def load(cls, path: str | Path, bound: int = DEFAULT_BOUND) -> "TableCategory":
        path = Path(path)
        with open(path) as fh:
            return cls.from_json(json.load(fh), bound, path.stem)
