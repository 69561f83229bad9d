from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import strategies as st

from jacobson_drazin.exact_linalg import RatMatrix

J2 = RatMatrix.from_rows([[0, 1], [0, 0]])

REF_A = RatMatrix.from_rows([[0, 0, 1, 1], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]])
REF_BC = RatMatrix.from_rows([[1, 0, 1, 0], [0, 1, 0, 1], [1, 1, 1, 0], [0, 0, 0, 1]])
REF_D = RatMatrix.from_rows([[1, 1, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])


def small_rationals(bound: int = 3):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


def matrices(rows: int, cols: int, bound: int = 3, integral: bool = False):
    elem = st.integers(-bound, bound).map(Fraction) if integral else small_rationals(bound)
    return st.lists(elem, min_size=rows * cols, max_size=rows * cols).map(lambda xs: RatMatrix(rows, cols, xs))


def square_matrices(max_dim: int = 4, bound: int = 3, integral: bool = False):
    return st.integers(1, max_dim).flatmap(lambda k: matrices(k, k, bound, integral))


def sparse_square_matrices(max_dim: int = 5):
    """Matrices with many zeros, which makes singular and nilpotent structure common."""
    entry = st.sampled_from([0, 0, 0, 0, 1, -1, 2]).map(Fraction)
    return st.integers(1, max_dim).flatmap(
        lambda k: st.lists(entry, min_size=k * k, max_size=k * k).map(lambda xs: RatMatrix(k, k, xs))
    )


def to_sympy(A: RatMatrix) -> sympy.Matrix:
    return sympy.Matrix(A.rows, A.cols, [sympy.Rational(x.numerator, x.denominator) for x in A.entries])


def from_sympy(M: sympy.Matrix) -> RatMatrix:
    return RatMatrix(M.rows, M.cols, [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in M])


def cline_drazin(A: RatMatrix) -> RatMatrix:
    """Independent Drazin oracle: Cline's iterated full-rank factorization, in sympy.

    A = B1 C1, C1 B1 = B2 C2, ... until C_k B_k is invertible (or zero);
    then A^D = B1..Bk (C_k B_k)^(-k-1) C_k..C1.
    """
    M = to_sympy(A)
    n = M.rows
    if M.rank() == n:
        return from_sympy(M.inv())
    Bs, Cs = [], []
    cur = M
    while True:
        r = cur.rank()
        if r == 0:
            return RatMatrix.zeros(n)
        R, pivots = cur.rref()
        B = cur.extract(list(range(cur.rows)), list(pivots))
        C = R.extract(list(range(r)), list(range(cur.cols)))
        Bs.append(B)
        Cs.append(C)
        cur = C * B
        if cur.rank() == cur.rows:
            k = len(Bs)
            left = sympy.eye(n)
            for B in Bs:
                left = left * B
            right = sympy.eye(Cs[-1].rows)
            for C in reversed(Cs):
                right = right * C
            return from_sympy(left * cur.inv() ** (k + 1) * right)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
