"""Reference computations that share no code with the package."""

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

import sympy
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors


def rational_rank(rows) -> int:
    """Rank over Q by plain Gaussian elimination on fractions."""
    m = [[Fraction(v) for v in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                c = m[i][col] / m[rank][col]
                m[i] = [a - c * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def rank_mod_p(rows, p: int) -> int:
    m = [[v % p for v in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [v * inv % p for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                c = m[i][col]
                m[i] = [(a - c * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def raw_boundaries(S):
    """Alternating-sum boundary matrices built directly from the face tables."""
    out = {}
    for n in range(1, S.level + 1):
        rows = [[0] * S.counts[n] for _ in range(S.counts[n - 1])]
        for i in range(n + 1):
            for x, y in enumerate(S.faces[n][i]):
                rows[y][x] += (-1) ** i
        out[n] = rows
    return out


def _rank(rows, p=None):
    if not rows or not rows[0]:
        return 0
    return rational_rank(rows) if p is None else rank_mod_p(rows, p)


def betti_oracle(S, p=None):
    """Betti numbers (over Q or F_p) in degrees 0..level-1."""
    d = raw_boundaries(S)
    out = []
    for n in range(S.level):
        rk_out = _rank(d[n], p) if n >= 1 else 0
        rk_in = _rank(d[n + 1], p)
        out.append(S.counts[n] - rk_out - rk_in)
    return tuple(out)


def torsion_oracle(S, n):
    """Torsion of H_n from the sympy invariant factors of the incoming boundary."""
    rows = raw_boundaries(S)[n + 1]
    if not rows or not rows[0]:
        return []
    facs = sympy_invariant_factors(sympy.Matrix(rows), domain=sympy.ZZ)
    return sorted(int(abs(f)) for f in facs if abs(f) > 1)


def sympy_factors(rows):
    if not rows or not rows[0]:
        return []
    return [int(abs(f)) for f in sympy_invariant_factors(sympy.Matrix(rows), domain=sympy.ZZ) if f != 0]


def monotone_count(m: int, n: int) -> int:
    """Order-preserving maps [m] -> [n]: multisets of size m+1 from n+1 values."""
    return comb(n + m + 1, m + 1)


def monotone_maps(m: int, n: int):
    return [tuple(c) for c in combinations_with_replacement(range(n + 1), m + 1)]


def surjection_count(m: int, k: int) -> int:
    """Monotone surjections [m] ->> [k]: choose k break points among m gaps."""
    return comb(m, k)
