"""Integer chain complexes of simplicial sets and their homology.

Homology in degree ``n`` is presented from two Smith decompositions: the one
of ``d_n`` gives a basis of cycles, and the one of the boundary image written
in that basis gives invariant factors and generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .errors import BoundaryNotNilpotent, DegeneraciesMissing, DegreeOutOfRange, DimensionMismatch, NotACycle
from .matrix import IntegerMatrix
from .report import CheckReport
from .snf import SmithDecomposition, smith_decomposition
from .sset import SimplicialMap, TruncSimplicialSet


def parse_coeff(spec: str | int | None) -> int | None:
    """``"Z"`` or ``None`` gives integers; ``"Zmod:m"`` or ``m`` gives ``Z/m``."""
    if spec is None or spec == "Z" or spec == 0:
        return None
    if isinstance(spec, int):
        m = spec
    elif isinstance(spec, str) and spec.startswith("Zmod:"):
        m = int(spec[5:])
    else:
        raise ValueError(f"unknown coefficient spec {spec!r}")
    if m < 2:
        raise ValueError("modulus must be at least 2")
    return m


class ChainComplex:
    """``C_0 <- C_1 <- ... <- C_level`` with optional augmentation ``C_0 -> Z``.

    ``boundary(n)`` maps degree ``n`` to ``n-1``; with ``reduced`` set,
    ``boundary(0)`` is the augmentation (a row of ones).
    """

    def __init__(
        self,
        level: int,
        ranks: Sequence[int],
        boundaries: dict[int, IntegerMatrix],
        coeff: int | None = None,
        reduced: bool = False,
        generators: Sequence[Sequence[str]] | None = None,
    ):
        self.level = level
        self.ranks = list(ranks)
        self._boundaries = dict(boundaries)
        self.coeff = coeff
        self.reduced = reduced
        self.generators = generators
        self._snf: dict[int, SmithDecomposition] = {}
        for n in range(1, level + 1):
            d = self._boundaries[n]
            if d.shape != (self.ranks[n - 1], self.ranks[n]):
                raise DimensionMismatch(f"boundary {n} has shape {d.shape}")
        for n in range(1 if reduced else 2, level + 1):
            if not (self.boundary(n - 1) @ self.boundary(n)).is_zero():
                raise BoundaryNotNilpotent(f"boundary {n - 1} o boundary {n} is nonzero")

    def rank(self, n: int) -> int:
        if n == -1:
            return 1 if self.reduced else 0
        if 0 <= n <= self.level:
            return self.ranks[n]
        return 0

    def boundary(self, n: int) -> IntegerMatrix:
        if n == 0:
            if self.reduced:
                return IntegerMatrix(1, self.ranks[0], [[1] * self.ranks[0]])
            return IntegerMatrix(0, self.ranks[0])
        if 1 <= n <= self.level:
            return self._boundaries[n]
        if n == self.level + 1:
            return IntegerMatrix(self.ranks[self.level], 0)
        raise DegreeOutOfRange(f"no boundary in degree {n}")

    def smith(self, n: int) -> SmithDecomposition:
        if n not in self._snf:
            self._snf[n] = smith_decomposition(self.boundary(n))
        return self._snf[n]

    def with_options(self, coeff: int | None = None, reduced: bool | None = None) -> "ChainComplex":
        return ChainComplex(
            self.level,
            self.ranks,
            self._boundaries,
            coeff,
            self.reduced if reduced is None else reduced,
            self.generators,
        )


def chain_complex(S: TruncSimplicialSet, coeff: str | int | None = None, reduced: bool = False) -> ChainComplex:
    """Unnormalized chains: every simplex is a generator."""
    L = S.level
    boundaries = {}
    for n in range(1, L + 1):
        d = IntegerMatrix(S.counts[n - 1], S.counts[n])
        for i in range(n + 1):
            sign = -1 if i % 2 else 1
            for x, y in enumerate(S.faces[n][i]):
                d.data[y][x] += sign
        boundaries[n] = d
    return ChainComplex(L, S.counts, boundaries, parse_coeff(coeff), reduced, S.labels)


def normalized_chains(S: TruncSimplicialSet, coeff: str | int | None = None, reduced: bool = False) -> ChainComplex:
    """Chains on nondegenerate simplices, degenerate faces dropped."""
    if not S.has_degeneracies:
        raise DegeneraciesMissing("normalized chains need degeneracies")
    L = S.level
    nd = [S.nondegenerate(n) for n in range(L + 1)]
    pos = [{x: k for k, x in enumerate(lvl)} for lvl in nd]
    boundaries = {}
    for n in range(1, L + 1):
        d = IntegerMatrix(len(nd[n - 1]), len(nd[n]))
        for i in range(n + 1):
            sign = -1 if i % 2 else 1
            for col, x in enumerate(nd[n]):
                y = S.faces[n][i][x]
                if y in pos[n - 1]:
                    d.data[pos[n - 1][y]][col] += sign
        boundaries[n] = d
    labels = [[S.labels[n][x] for x in lvl] for n, lvl in enumerate(nd)]
    return ChainComplex(L, [len(l) for l in nd], boundaries, parse_coeff(coeff), reduced, labels)


@dataclass
class HomologyPresentation:
    """``H_n = Z^betti + sum Z/t`` with explicit cycle representatives.

    ``generators`` lists ``(cycle, order)`` pairs: order 0 for free
    generators (listed first), order ``t >= 2`` for torsion.  With ``Z/m``
    coefficients the group is reported through ``torsion`` only and carries no
    representatives.
    """

    degree: int
    betti: int
    torsion: list[int]
    valid: bool
    coeff: int | None = None
    reduced: bool = False
    generators: list[tuple[list[int], int]] = field(default_factory=list)
    _kernel_rank: int = field(default=0, repr=False)
    _cycle_dec: SmithDecomposition | None = field(default=None, repr=False)
    _quot_dec: SmithDecomposition | None = field(default=None, repr=False)
    _free_slots: list[int] = field(default_factory=list, repr=False)
    _torsion_slots: list[int] = field(default_factory=list, repr=False)

    @property
    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    @property
    def orders(self) -> list[int]:
        return [o for _, o in self.generators]

    def coordinates(self, z: Sequence[int]) -> list[int]:
        """Class of the cycle ``z`` in generator coordinates (torsion entries reduced)."""
        if self._cycle_dec is None:
            raise NotACycle("presentation carries no coordinate data")
        dec = self._cycle_dec
        w = dec.apply_Vinv(list(z))
        if any(w[i] for i in range(dec.rank)):
            raise NotACycle("vector is not a cycle")
        c = self._quot_dec.apply_U(w[dec.rank :])
        out = [c[i] for i in self._free_slots]
        out += [c[i] % self._quot_dec.diagonal[i] for i in self._torsion_slots]
        return out

    def to_json(self) -> dict:
        out = {"degree": self.degree, "betti": self.betti, "torsion": list(self.torsion), "valid": self.valid}
        if self.coeff:
            out["coeff"] = f"Zmod:{self.coeff}"
        return out


def _integral_homology(C: ChainComplex, n: int) -> HomologyPresentation:
    dec = C.smith(n)
    r = dec.rank
    k = C.rank(n) - r
    valid = n <= C.level - 1
    upper = C.boundary(n + 1)
    if k == 0:
        return HomologyPresentation(n, 0, [], valid, None, C.reduced, [], 0, dec, smith_decomposition(IntegerMatrix(0, upper.cols)))
    # boundary images expressed in the cycle basis (last k columns of V)
    A = IntegerMatrix(k, upper.cols)
    cols = [[upper.data[i][j] for i in range(upper.rows)] for j in range(upper.cols)]
    for j, col in enumerate(cols):
        w = dec.apply_Vinv(col)
        if any(w[i] for i in range(r)):
            raise BoundaryNotNilpotent(f"image of boundary {n + 1} is not made of cycles")
        for i in range(k):
            A.data[i][j] = w[r + i]
    qdec = smith_decomposition(A)
    diag = qdec.diagonal
    Uinv = qdec.Uinv_matrix()
    free_slots = list(range(len(diag), k))
    torsion_slots = [i for i, d in enumerate(diag) if d > 1]
    generators = []
    for i in free_slots + torsion_slots:
        coeffs = [0] * r + [Uinv.data[row][i] for row in range(k)]
        z = dec.apply_V(coeffs)
        generators.append((z, 0 if i in free_slots else diag[i]))
    d = C.boundary(n)
    for z, _ in generators:
        if any(d.apply(z)):
            raise NotACycle(f"representative in degree {n} is not a cycle")
    return HomologyPresentation(
        n,
        len(free_slots),
        [diag[i] for i in torsion_slots],
        valid,
        None,
        C.reduced,
        generators,
        k,
        dec,
        qdec,
        free_slots,
        torsion_slots,
    )


def _cyclic_normal_form(orders: list[int]) -> list[int]:
    """Invariant factors of a sum of cyclic groups (order 1 summands dropped)."""
    orders = [o for o in orders if o > 1]
    if not orders:
        return []
    qdec = smith_decomposition(IntegerMatrix.diagonal(len(orders), len(orders), orders), transforms=False)
    return [d for d in qdec.diagonal if d > 1]


def homology(C: ChainComplex, n: int) -> HomologyPresentation:
    """``H_n = Z_n / B_n``; degree ``level`` is flagged invalid (boundaries unknown)."""
    if not 0 <= n <= C.level:
        raise DegreeOutOfRange(f"degree {n} outside 0..{C.level}")
    H = _integral_homology(C, n)
    if C.coeff is None:
        return H
    m = C.coeff
    # universal coefficients: H_n(Z) (x) Z/m  +  Tor(H_{n-1}(Z), Z/m)
    parts = [m] * H.betti + [gcd(t, m) for t in H.torsion]
    if n >= 1:
        parts += [gcd(t, m) for t in _integral_homology(C, n - 1).torsion]
    return HomologyPresentation(n, 0, _cyclic_normal_form(parts), H.valid, m, C.reduced)


def homology_all(C: ChainComplex) -> list[HomologyPresentation]:
    return [homology(C, n) for n in range(C.level + 1)]


def homology_report(C: ChainComplex, degrees: Sequence[int] | None = None) -> list[dict]:
    degrees = range(C.level) if degrees is None else degrees
    return [homology(C, n).to_json() for n in degrees]


def betti_numbers(C: ChainComplex, top: int | None = None) -> tuple[int, ...]:
    top = C.level - 1 if top is None else top
    return tuple(homology(C, n).betti for n in range(top + 1))


# -- maps -----------------------------------------------------------------------


def chain_map(f: SimplicialMap, reduced: bool = False) -> dict[int, IntegerMatrix]:
    """Matrices of ``f`` on chains, one 1 per column; degree -1 when reduced."""
    out = {}
    for n, comp in enumerate(f.components):
        M = IntegerMatrix(f.target.counts[n], f.source.counts[n])
        for x, y in enumerate(comp):
            M.data[y][x] = 1
        out[n] = M
    if reduced:
        out[-1] = IntegerMatrix.identity(1)
    return out


def check_chain_map(maps: dict[int, IntegerMatrix], CX: ChainComplex, CY: ChainComplex) -> CheckReport:
    """``d f = f d`` in every degree where both sides are defined."""
    checked = 0
    for n in range(0 if CX.reduced else 1, CX.level + 1):
        lhs = CY.boundary(n) @ maps[n]
        rhs = maps[n - 1] @ CX.boundary(n) if n >= 1 else CX.boundary(0)
        checked += 1
        if lhs != rhs:
            return CheckReport(False, checked, {"degree": n})
    return CheckReport(True, checked)


def induced_homology_map(maps: dict[int, IntegerMatrix] | IntegerMatrix, HX: HomologyPresentation, HY: HomologyPresentation) -> IntegerMatrix:
    """Matrix of ``H_n(f)`` in generator coordinates (columns: source generators)."""
    M = maps[HX.degree] if isinstance(maps, dict) else maps
    cols = [HY.coordinates(M.apply(z)) for z, _ in HX.generators]
    return IntegerMatrix.from_columns(cols, len(HY.generators)) if cols else IntegerMatrix(len(HY.generators), 0)


def is_identity_on_homology(M: IntegerMatrix, H: HomologyPresentation) -> bool:
    if M.shape != (len(H.generators), len(H.generators)):
        return False
    for i in range(M.rows):
        for j in range(M.cols):
            want = 1 if i == j else 0
            o = H.generators[i][1]
            v = M.data[i][j]
            if (o and (v - want) % o) or (not o and v != want):
                return False
    return True


def homology_map_equal(A: IntegerMatrix, B: IntegerMatrix, H: HomologyPresentation) -> bool:
    """Equality of two maps into ``H``, reading torsion rows modulo their order."""
    if A.shape != B.shape:
        return False
    for i in range(A.rows):
        o = H.generators[i][1]
        for j in range(A.cols):
            d = A.data[i][j] - B.data[i][j]
            if (o and d % o) or (not o and d):
                return False
    return True


def check_retract_obstruction(f: SimplicialMap, g: SimplicialMap, n: int, reduced: bool = True) -> CheckReport:
    """Compare ``H_n(g) H_n(f)`` with the identity of ``H_n(X)``.

    ``obstructed`` means ``H_n(X) != 0`` and ``H_n(Y) = 0``: then the composite
    factors through zero and ``g`` cannot be a retraction.  ``violation``
    would mean the composite is nevertheless the identity (never expected).
    """
    X, Y = f.source, f.target
    CX, CY = chain_complex(X, reduced=reduced), chain_complex(Y, reduced=reduced)
    HX, HY = homology(CX, n), homology(CY, n)
    Hf = induced_homology_map(chain_map(f, reduced), HX, HY)
    Hg = induced_homology_map(chain_map(g, reduced), HY, HX)
    composite = Hg @ Hf if Hf.cols else IntegerMatrix(Hg.rows, 0)
    is_id = is_identity_on_homology(composite, HX)
    obstructed = not HX.is_zero and HY.is_zero
    witness = {
        "degree": n,
        "source_homology": HX.to_json(),
        "target_homology": HY.to_json(),
        "composite": composite.tolist(),
        "composite_is_identity": is_id,
        "obstructed": obstructed,
        "violation": obstructed and is_id,
    }
    return CheckReport(not (obstructed and is_id), 1, witness)
