"""Exact combinatorics of the simplex category.

The object ``[n] = {0, ..., n}`` is represented by the integer ``n``; a
morphism is a :class:`MonotoneMap` storing its image tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from .errors import CompositionMismatch, IndexOutOfRange


@dataclass(frozen=True, order=True)
class MonotoneMap:
    """Order-preserving map ``[source] -> [target]``."""

    source: int
    target: int
    image: tuple[int, ...]

    def __post_init__(self):
        if self.source < 0 or self.target < 0:
            raise ValueError("simplex objects are non-negative")
        if len(self.image) != self.source + 1:
            raise ValueError(f"image {self.image} has wrong length for [{self.source}]")
        prev = 0
        for v in self.image:
            if v < prev or v > self.target:
                raise ValueError(f"image {self.image} is not monotone into [{self.target}]")
            prev = v

    def __call__(self, j: int) -> int:
        return self.image[j]

    def is_injective(self) -> bool:
        return len(set(self.image)) == len(self.image)

    def is_surjective(self) -> bool:
        return set(self.image) == set(range(self.target + 1))

    def __repr__(self):
        return f"MonotoneMap([{self.source}]->[{self.target}], {self.image})"


def identity(n: int) -> MonotoneMap:
    return MonotoneMap(n, n, tuple(range(n + 1)))


def face_map(n: int, i: int) -> MonotoneMap:
    """``d_{n,i}: [n-1] -> [n]``, the injection skipping ``i``."""
    if n < 1 or not 0 <= i <= n:
        raise IndexOutOfRange(f"face d_{{{n},{i}}} needs n >= 1 and 0 <= i <= n")
    return MonotoneMap(n - 1, n, tuple(j if j < i else j + 1 for j in range(n)))


def degeneracy_map(n: int, i: int) -> MonotoneMap:
    """``s_{n,i}: [n+1] -> [n]``, the surjection hitting ``i`` twice."""
    if n < 0 or not 0 <= i <= n:
        raise IndexOutOfRange(f"degeneracy s_{{{n},{i}}} needs 0 <= i <= n")
    return MonotoneMap(n + 1, n, tuple(j if j <= i else j - 1 for j in range(n + 2)))


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """``g o f``."""
    if f.target != g.source:
        raise CompositionMismatch(f"cannot compose {g} after {f}")
    return MonotoneMap(f.source, g.target, tuple(g.image[v] for v in f.image))


def all_monotone_maps(m: int, n: int) -> list[MonotoneMap]:
    """Every order-preserving map ``[m] -> [n]`` in lexicographic order."""
    return [MonotoneMap(m, n, img) for img in combinations_with_replacement(range(n + 1), m + 1)]


# -- simplicial identities --------------------------------------------------

# A generator is ("d", n, i) or ("s", n, i); a word lists generators
# outermost first, so ("d",2,0), ("d",1,0) means d_{2,0} o d_{1,0}.
Generator = tuple[str, int, int]


@dataclass(frozen=True)
class SimplicialIdentity:
    family: str
    source: int
    lhs: tuple[Generator, ...]
    rhs: tuple[Generator, ...]

    def objects(self) -> set[int]:
        objs = {self.source}
        for kind, n, _ in self.lhs + self.rhs:
            objs.update((n - 1, n) if kind == "d" else (n + 1, n))
        return objs

    def describe(self) -> str:
        def word(w):
            if not w:
                return f"id_[{self.source}]"
            return " o ".join(f"{k}_{{{n},{i}}}" for k, n, i in w)

        return f"{word(self.lhs)} = {word(self.rhs)}"


def simplicial_identity_instances(n_max: int) -> Iterator[SimplicialIdentity]:
    """All instances of the five identity families living inside ``[0..n_max]``."""
    # face-face: d_{n+1,j} d_{n,i} = d_{n+1,i} d_{n,j-1}, i < j
    for n in range(1, n_max):
        for j in range(n + 2):
            for i in range(j):
                yield SimplicialIdentity(
                    "dd", n - 1, (("d", n + 1, j), ("d", n, i)), (("d", n + 1, i), ("d", n, j - 1))
                )
    for n in range(0, n_max):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = (("s", n, j), ("d", n + 1, i))
                if i < j:
                    yield SimplicialIdentity("sd<", n, lhs, (("d", n, i), ("s", n - 1, j - 1)))
                elif i in (j, j + 1):
                    yield SimplicialIdentity("sd=", n, lhs, ())
                else:
                    yield SimplicialIdentity("sd>", n, lhs, (("d", n, i - 1), ("s", n - 1, j)))
    # degeneracy-degeneracy: s_{n,j} s_{n+1,i} = s_{n,i} s_{n+1,j+1}, i <= j
    for n in range(0, n_max - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                yield SimplicialIdentity(
                    "ss", n + 2, (("s", n, j), ("s", n + 1, i)), (("s", n, i), ("s", n + 1, j + 1))
                )


def evaluate_word(word, source, face, degeneracy, compose_fn, identity_fn):
    """Compose a generator word using caller-supplied generator images."""
    if not word:
        return identity_fn(source)
    maps = [face(n, i) if kind == "d" else degeneracy(n, i) for kind, n, i in word]
    result = maps[-1]
    for m in reversed(maps[:-1]):
        result = compose_fn(m, result)
    return result


@dataclass
class IdentityReport:
    passed: bool
    checked: int
    witness: dict | None = None


def verify_simplicial_identities(
    n_max: int,
    face: Callable[[int, int], MonotoneMap] = face_map,
    degeneracy: Callable[[int, int], MonotoneMap] = degeneracy_map,
) -> IdentityReport:
    """Exhaustively check the identities by composing image tuples.

    ``face``/``degeneracy`` may be replaced to test corrupted generator tables.
    """
    checked = 0
    for ident in simplicial_identity_instances(n_max):
        lhs = evaluate_word(ident.lhs, ident.source, face, degeneracy, compose, identity)
        rhs = evaluate_word(ident.rhs, ident.source, face, degeneracy, compose, identity)
        checked += 1
        if lhs != rhs:
            return IdentityReport(
                False,
                checked,
                {"family": ident.family, "identity": ident.describe(), "lhs": lhs.image, "rhs": rhs.image},
            )
    return IdentityReport(True, checked)


# -- factorisation ------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """``f = faces[0] o ... o faces[-1] o degeneracies[0] o ... o degeneracies[-1]``.

    Each entry is ``(n, i)``; degeneracy indices increase and face indices
    decrease along the word.
    """

    source: int
    degeneracies: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, int], ...]

    def compose(self) -> MonotoneMap:
        word = tuple(("d", n, i) for n, i in self.faces) + tuple(("s", n, i) for n, i in self.degeneracies)
        return evaluate_word(word, self.source, face_map, degeneracy_map, compose, identity)


def epi_mono_factorize(f: MonotoneMap) -> Factorization:
    img = f.image
    repeats = [j for j in range(f.source) if img[j] == img[j + 1]]
    k = f.source - len(repeats)
    degeneracies = tuple((k + p, j) for p, j in enumerate(repeats))
    hit = set(img)
    missing = [c for c in range(f.target + 1) if c not in hit]
    faces = tuple((f.target - p, c) for p, c in enumerate(reversed(missing)))
    return Factorization(f.source, degeneracies, faces)


def surjective_part(f: MonotoneMap) -> MonotoneMap:
    """The epi factor ``[m] ->> [k]`` of ``f``."""
    values = sorted(set(f.image))
    rank = {v: r for r, v in enumerate(values)}
    return MonotoneMap(f.source, len(values) - 1, tuple(rank[v] for v in f.image))


def injective_part(f: MonotoneMap) -> MonotoneMap:
    """The mono factor ``[k] >-> [n]`` of ``f``."""
    values = sorted(set(f.image))
    return MonotoneMap(len(values) - 1, f.target, tuple(values))
