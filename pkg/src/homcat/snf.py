"""Smith normal form over the integers, with exact change-of-basis matrices.

Elimination works on sparse rows (dicts) because boundary matrices are
sparse and can be wide; transforms are tracked together with their inverses
so that kernels, images and class coordinates can be read off without any
further inversion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionMismatch, Unsolvable
from .matrix import IntegerMatrix

SparseRows = list[dict[int, int]]


def _sparse(m: IntegerMatrix) -> SparseRows:
    return [{j: v for j, v in enumerate(r) if v} for r in m.data]


def _eye(n: int) -> SparseRows:
    return [{i: 1} for i in range(n)]


def _axpy(dst: dict[int, int], src: dict[int, int], c: int) -> None:
    """dst += c * src, dropping zeros."""
    for k, v in src.items():
        nv = dst.get(k, 0) + c * v
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)


@dataclass
class SmithDecomposition:
    """``U @ M @ V == S`` with ``S = diag(diagonal) padded by zeros``.

    ``U`` and ``Vinv`` are stored as sparse rows, ``V`` and ``Uinv`` as sparse
    columns; all four are ``None`` when transforms were not requested.
    """

    rows: int
    cols: int
    diagonal: list[int]
    U: SparseRows | None = None
    Uinv_cols: SparseRows | None = None
    V_cols: SparseRows | None = None
    Vinv: SparseRows | None = None
    _dense: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def S(self) -> IntegerMatrix:
        return IntegerMatrix.diagonal(self.rows, self.cols, self.diagonal)

    def _rows_to_dense(self, rows: SparseRows, n_cols: int) -> IntegerMatrix:
        m = IntegerMatrix(len(rows), n_cols)
        for i, r in enumerate(rows):
            for j, v in r.items():
                m.data[i][j] = v
        return m

    def _cols_to_dense(self, cols: SparseRows, n_rows: int) -> IntegerMatrix:
        m = IntegerMatrix(n_rows, len(cols))
        for j, c in enumerate(cols):
            for i, v in c.items():
                m.data[i][j] = v
        return m

    def U_matrix(self) -> IntegerMatrix:
        return self._rows_to_dense(self.U, self.rows)

    def Uinv_matrix(self) -> IntegerMatrix:
        return self._cols_to_dense(self.Uinv_cols, self.rows)

    def V_matrix(self) -> IntegerMatrix:
        return self._cols_to_dense(self.V_cols, self.cols)

    def Vinv_matrix(self) -> IntegerMatrix:
        return self._rows_to_dense(self.Vinv, self.cols)

    def apply_U(self, vector: Sequence[int]) -> list[int]:
        return [sum(v * vector[k] for k, v in row.items()) for row in self.U]

    def apply_Vinv(self, vector: Sequence[int]) -> list[int]:
        return [sum(v * vector[k] for k, v in row.items()) for row in self.Vinv]

    def V_column(self, j: int) -> list[int]:
        col = [0] * self.cols
        for i, v in self.V_cols[j].items():
            col[i] = v
        return col

    def apply_V(self, vector: Sequence[int]) -> list[int]:
        out = [0] * self.cols
        for j, y in enumerate(vector):
            if y:
                for i, v in self.V_cols[j].items():
                    out[i] += y * v
        return out


def smith_decomposition(M: IntegerMatrix, transforms: bool = True) -> SmithDecomposition:
    """Diagonalise ``M`` by unimodular row and column operations."""
    m, n = M.rows, M.cols
    A = _sparse(M)
    if transforms:
        U, Uinv, V, Vinv = _eye(m), _eye(m), _eye(n), _eye(n)

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        if transforms:
            U[i], U[k] = U[k], U[i]
            Uinv[i], Uinv[k] = Uinv[k], Uinv[i]

    def swap_cols(j, k):
        for r in A:
            a, b = r.pop(j, 0), r.pop(k, 0)
            if a:
                r[k] = a
            if b:
                r[j] = b
        if transforms:
            V[j], V[k] = V[k], V[j]
            Vinv[j], Vinv[k] = Vinv[k], Vinv[j]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        _axpy(A[dst], A[src], c)
        if transforms:
            _axpy(U[dst], U[src], c)
            _axpy(Uinv[src], Uinv[dst], -c)

    def add_col(dst, src, c):
        # col_dst += c * col_src
        for r in A:
            v = r.get(src)
            if v:
                nv = r.get(dst, 0) + c * v
                if nv:
                    r[dst] = nv
                else:
                    r.pop(dst, None)
        if transforms:
            _axpy(V[dst], V[src], c)
            _axpy(Vinv[src], Vinv[dst], -c)

    def negate_row(i):
        for k in A[i]:
            A[i][k] = -A[i][k]
        if transforms:
            for k in U[i]:
                U[i][k] = -U[i][k]
            for k in Uinv[i]:
                Uinv[i][k] = -Uinv[i][k]

    diagonal = []
    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j, v in A[i].items():
                if j >= t and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            swap_rows(pi, t)
        if pj != t:
            swap_cols(pj, t)
        while True:
            # clear column t below the pivot
            i = t + 1
            while i < m:
                v = A[i].get(t)
                if v:
                    p = A[t][t]
                    add_row(i, t, -(v // p))
                    if A[i].get(t):
                        swap_rows(i, t)
                        i = t + 1
                        continue
                i += 1
            # clear row t right of the pivot; column t is now zero off the pivot
            dirty = False
            for j in sorted(k for k in A[t] if k > t):
                v = A[t].get(j)
                if not v:
                    continue
                p = A[t][t]
                add_col(j, t, -(v // p))
                if A[t].get(j):
                    swap_cols(j, t)
                    dirty = True
                    break
            if dirty:
                continue
            p = A[t][t]
            offender = None
            for i in range(t + 1, m):
                if any(v % p for j, v in A[i].items() if j > t):
                    offender = i
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if A[t][t] < 0:
            negate_row(t)
        diagonal.append(A[t][t])

    dec = SmithDecomposition(m, n, diagonal)
    if transforms:
        dec.U, dec.Uinv_cols, dec.V_cols, dec.Vinv = U, Uinv, V, Vinv
    return dec


def smith_normal_form(M: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Return ``(U, S, V)`` with ``U @ M @ V == S`` and ``U``, ``V`` unimodular."""
    dec = smith_decomposition(M)
    return dec.U_matrix(), dec.S(), dec.V_matrix()


def invariant_factors(M: IntegerMatrix) -> list[int]:
    return smith_decomposition(M, transforms=False).diagonal


def rank(M: IntegerMatrix) -> int:
    return smith_decomposition(M, transforms=False).rank


def integer_kernel(M: IntegerMatrix, dec: SmithDecomposition | None = None) -> list[list[int]]:
    """A lattice basis of ``{x : M x = 0}``."""
    dec = dec or smith_decomposition(M)
    return [dec.V_column(j) for j in range(dec.rank, M.cols)]


def solve_boundary(D: IntegerMatrix, b: Sequence[int], dec: SmithDecomposition | None = None) -> list[int]:
    """Some integer ``x`` with ``D x = b``; raises :class:`Unsolvable` otherwise."""
    if len(b) != D.rows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {D.rows} rows")
    dec = dec or smith_decomposition(D)
    c = dec.apply_U(list(b))
    y = [0] * D.cols
    for i, d in enumerate(dec.diagonal):
        if c[i] % d:
            raise Unsolvable(f"{d} does not divide {c[i]} in row {i}", witness={"row": i, "divisor": d, "value": c[i]})
        y[i] = c[i] // d
    for i in range(dec.rank, D.rows):
        if c[i]:
            raise Unsolvable(f"nonzero coordinate {c[i]} outside the image (row {i})", witness={"row": i, "value": c[i]})
    return dec.apply_V(y)
