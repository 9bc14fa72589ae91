"""Dense arbitrary-precision integer matrices."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatch


class IntegerMatrix:
    """A ``rows x cols`` grid of Python ints, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: list[list[int]] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimension")
        self.rows = rows
        self.cols = cols
        if data is None:
            data = [[0] * cols for _ in range(rows)]
        elif len(data) != rows or any(len(r) != cols for r in data):
            raise DimensionMismatch(f"entry grid does not match {rows}x{cols}")
        self.data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = [list(map(int, r)) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        m = cls(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    @classmethod
    def diagonal(cls, rows: int, cols: int, diag: Iterable[int]) -> "IntegerMatrix":
        m = cls(rows, cols)
        for i, d in enumerate(diag):
            m.data[i][i] = d
        return m

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntegerMatrix":
        m = cls(rows, len(columns))
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise DimensionMismatch("column length mismatch")
            for i, v in enumerate(col):
                m.data[i][j] = v
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def __setitem__(self, idx, value):
        i, j = idx
        self.data[i][j] = value

    def row(self, i: int) -> list[int]:
        return list(self.data[i])

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.data]

    def copy(self) -> "IntegerMatrix":
        return IntegerMatrix(self.rows, self.cols, [list(r) for r in self.data])

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, [list(c) for c in zip(*self.data)] if self.rows else [[] for _ in range(self.cols)])

    def __eq__(self, other):
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(map(tuple, self.data))))

    def _check_same(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        self._check_same(other)
        return IntegerMatrix(self.rows, self.cols, [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        self._check_same(other)
        return IntegerMatrix(self.rows, self.cols, [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self) -> "IntegerMatrix":
        return IntegerMatrix(self.rows, self.cols, [[-a for a in r] for r in self.data])

    def scale(self, c: int) -> "IntegerMatrix":
        return IntegerMatrix(self.rows, self.cols, [[c * a for a in r] for r in self.data])

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        out = [[0] * other.cols for _ in range(self.rows)]
        odata = other.data
        for i, row in enumerate(self.data):
            acc = out[i]
            for k, a in enumerate(row):
                if a:
                    for j, b in enumerate(odata[k]):
                        if b:
                            acc[j] += a * b
        return IntegerMatrix(self.rows, other.cols, out)

    def apply(self, vector: Sequence[int]) -> list[int]:
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.shape} matrix")
        nz = [(k, v) for k, v in enumerate(vector) if v]
        return [sum(row[k] * v for k, v in nz) for row in self.data]

    def is_zero(self) -> bool:
        return all(not v for r in self.data for v in r)

    def reduce_mod(self, m: int) -> "IntegerMatrix":
        return IntegerMatrix(self.rows, self.cols, [[v % m for v in r] for r in self.data])

    def determinant(self) -> int:
        """Exact determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of non-square matrix")
        n = self.rows
        a = [list(r) for r in self.data]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k]), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def to_text(self) -> str:
        """Dense row-major dump: a header line then one row per line."""
        lines = [f"{self.rows} {self.cols}"]
        lines.extend(" ".join(str(v) for v in r) for r in self.data)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "IntegerMatrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        rows, cols = map(int, lines[0].split())
        data = [list(map(int, ln.split())) for ln in lines[1 : rows + 1]]
        if rows and cols == 0:
            data = [[] for _ in range(rows)]
        return cls(rows, cols, data)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def __repr__(self):
        return f"IntegerMatrix({self.rows}x{self.cols}, {self.data})"
