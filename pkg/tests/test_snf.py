import random
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from homcat.errors import DimensionMismatch, Unsolvable
from homcat.matrix import IntegerMatrix
from homcat.snf import integer_kernel, invariant_factors, rank, smith_decomposition, smith_normal_form, solve_boundary
from oracles import rational_rank, sympy_factors

small = st.integers(-6, 6)


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = [[draw(small) for _ in range(c)] for _ in range(r)]
    return IntegerMatrix(r, c, rows) if r and c else IntegerMatrix(r, c)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_against_sympy(M):
    U, S, V = smith_normal_form(M)
    assert U @ M @ V == S
    if M.rows and M.cols:
        assert abs(U.determinant()) == 1 and abs(V.determinant()) == 1
    diag = [S[i, i] for i in range(min(M.rows, M.cols))]
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert [S[i, j] for i in range(S.rows) for j in range(S.cols) if i != j] == [0] * (S.rows * S.cols - len(diag))
    assert nz == sympy_factors(M.tolist())
    assert rank(M) == (rational_rank(M.tolist()) if M.rows and M.cols else 0)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_inverse_transforms(M):
    dec = smith_decomposition(M)
    assert dec.U_matrix() @ dec.Uinv_matrix() == IntegerMatrix.identity(M.rows)
    assert dec.V_matrix() @ dec.Vinv_matrix() == IntegerMatrix.identity(M.cols)


def test_known_example():
    assert invariant_factors(IntegerMatrix.from_rows([[2, 4], [6, 8]])) == [2, 4]
    assert invariant_factors(IntegerMatrix.from_rows([[0, 0], [0, 0]])) == []


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_kernel_is_full_integer_kernel(M):
    K = integer_kernel(M)
    assert all(not any(M.apply(v)) for v in K)
    assert len(K) == M.cols - rank(M)
    if K:
        # a primitive lattice basis extends to a unimodular matrix: its maximal minors have gcd 1
        B = sympy.Matrix([list(v) for v in K]).T
        minors = [B.extract(list(rows), list(range(B.cols))).det() for rows in combinations(range(B.rows), B.cols)]
        assert sympy.gcd_list(minors) == 1


def test_solve_boundary_roundtrip():
    rng = random.Random(7)
    for _ in range(200):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        D = IntegerMatrix.from_rows([[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)])
        x = [rng.randint(-4, 4) for _ in range(c)]
        b = D.apply(x)
        y = solve_boundary(D, b)
        assert D.apply(y) == b


def test_solve_boundary_failures():
    D = IntegerMatrix.from_rows([[2]])
    with pytest.raises(Unsolvable) as exc:
        solve_boundary(D, [1])
    assert exc.value.witness["divisor"] == 2
    with pytest.raises(Unsolvable):
        solve_boundary(IntegerMatrix.from_rows([[1], [1]]), [1, 0])
    with pytest.raises(DimensionMismatch):
        solve_boundary(D, [1, 2])


def test_large_entries_stay_exact():
    M = IntegerMatrix.from_rows([[10**30, 3], [7, 10**25 + 1]])
    U, S, V = smith_normal_form(M)
    assert U @ M @ V == S
    assert S[0, 0] * S[1, 1] == abs(M.determinant())
