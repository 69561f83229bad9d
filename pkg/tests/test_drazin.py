from __future__ import annotations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobson_drazin.drazin import (
    core_nilpotent,
    drazin_axioms,
    drazin_index,
    drazin_inverse,
    spectral_idempotent,
    spectral_idempotent_at_one,
)
from jacobson_drazin.exact_linalg import (
    RatMatrix,
    RatPoly,
    block_diag,
    char_poly,
    commutant_basis,
    companion,
    inverse,
    is_nilpotent,
    jordan_block,
    mat_pow,
    rank,
)

from conftest import J2, REF_A, REF_BC, cline_drazin, from_sympy, sparse_square_matrices, square_matrices, to_sympy

I2 = RatMatrix.identity(2)
ALPHA = RatMatrix.identity(4) - REF_A @ REF_BC


def test_index_examples():
    assert drazin_index(RatMatrix.identity(3)) == 0
    assert drazin_index(J2) == 2
    # rank(alpha) = rank(alpha^2) = 3
    assert rank(ALPHA) == 3 and rank(ALPHA @ ALPHA) == 3
    assert drazin_index(ALPHA) == 1


def test_core_nilpotent_diagonal():
    dec = core_nilpotent(RatMatrix.diag(2, 0))
    assert dec.index == 1
    assert dec.core == RatMatrix.from_rows([[2]])
    assert dec.nil == RatMatrix.from_rows([[0]])


def test_core_nilpotent_block_diagonal():
    A = block_diag(RatMatrix.identity(1), jordan_block(2))
    dec = core_nilpotent(A)
    assert dec.index == 2
    assert dec.core == RatMatrix.identity(1)
    # J2(0) up to a change of basis: nilpotent, rank 1
    assert dec.nil.shape == (2, 2) and is_nilpotent(dec.nil) and rank(dec.nil) == 1


def test_core_recovered_from_conjugated_blocks():
    f = RatPoly([1, 1, 1])
    S = RatMatrix.from_rows([[1, 2, 0, 1], [0, 1, 1, 0], [0, 0, 1, 3], [0, 0, 0, 1]])
    A = S @ block_diag(companion(f), jordan_block(2)) @ inverse(S)
    dec = core_nilpotent(A)
    assert dec.index == 2
    assert char_poly(dec.core) == f
    assert dec.reconstruct() == A


def test_drazin_examples():
    assert drazin_inverse(I2) == I2
    assert drazin_inverse(J2) == RatMatrix.zeros(2)
    assert drazin_inverse(RatMatrix.diag(2, 0)) == RatMatrix.diag("1/2", 0)


def test_spectral_idempotent_examples():
    assert spectral_idempotent(RatMatrix.identity(3)) == RatMatrix.identity(3)
    assert spectral_idempotent(J2) == RatMatrix.zeros(2)
    A = RatMatrix.from_rows([[1, 0, 1], [0, 1, 0], [0, 0, 0]])
    e = spectral_idempotent(A)
    assert e @ e == e
    assert is_nilpotent(A @ (RatMatrix.identity(3) - e))
    assert e == drazin_inverse(A) @ A


def test_spectral_idempotent_at_one_examples():
    assert spectral_idempotent_at_one(I2) == I2
    assert spectral_idempotent_at_one(RatMatrix.zeros(2)) == RatMatrix.zeros(2)
    p = spectral_idempotent_at_one(ALPHA)
    assert p @ p == p
    assert mat_pow(ALPHA - p, 4).is_zero()
    assert p == RatMatrix.from_rows([[0, -1, -1, -2], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])


def test_idempotent_at_one_matches_jordan_projection():
    Ps, Js = to_sympy(ALPHA).jordan_form()
    mask = sympy.diag(*[1 if Js[i, i] == 1 else 0 for i in range(4)])
    assert spectral_idempotent_at_one(ALPHA) == from_sympy(Ps * mask * Ps.inv())


@settings(max_examples=80, deadline=None)
@given(st.one_of(square_matrices(5), sparse_square_matrices(6)))
def test_matches_cline_oracle(A):
    assert drazin_inverse(A) == cline_drazin(A)


@settings(max_examples=80, deadline=None)
@given(st.one_of(square_matrices(6, bound=5, integral=True), sparse_square_matrices(6)))
def test_decomposition_invariants(A):
    dec = core_nilpotent(A)
    k = dec.index
    assert k <= A.rows
    assert rank(mat_pow(A, k)) == rank(mat_pow(A, k + 1))
    assert dec.reconstruct() == A
    assert dec.basis @ dec.basis_inv == RatMatrix.identity(A.rows)
    assert dec.core.rows == rank(mat_pow(A, k))
    assert dec.core.rows == 0 or rank(dec.core) == dec.core.rows
    assert is_nilpotent(dec.nil) if dec.nil.rows else True
    assert all(drazin_axioms(A).values())


@settings(max_examples=40, deadline=None)
@given(sparse_square_matrices(5))
def test_double_commutant_membership(A):
    basis = commutant_basis(A)
    AD = drazin_inverse(A)
    p = spectral_idempotent_at_one(A)
    assert all(AD @ Y == Y @ AD for Y in basis)
    assert all(p @ Y == Y @ p for Y in basis)
    assert p @ p == p and p @ A == A @ p


@settings(max_examples=40, deadline=None)
@given(sparse_square_matrices(5), st.integers(1, 4))
def test_drazin_of_power(A, n):
    assert drazin_inverse(mat_pow(A, n)) == mat_pow(drazin_inverse(A), n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_invertible_input_gives_inverse(n):
    A = RatMatrix.from_rows([[2, 1], [1, 1]]) ** n
    assert drazin_index(A) == 0
    assert drazin_inverse(A) == inverse(A)
