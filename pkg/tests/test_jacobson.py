from __future__ import annotations

import json
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobson_drazin.exact_linalg import (
    DimensionError,
    RatMatrix,
    commutant_basis,
    inverse,
    is_invertible,
    is_nilpotent,
    mat_pow,
)
from jacobson_drazin.gnsd import NotGnsd, gnsd_check, is_gnsd
from jacobson_drazin.instance_gen import GenConfig, Structure, gen_transfer_pair
from jacobson_drazin.jacobson import (
    REQUIRED_VERDICTS,
    block_embed,
    embedding_blocks,
    lower_c,
    power_transfer,
    transfer_witness,
)

from conftest import J2, matrices

K2 = RatMatrix.from_rows([[0, 0], [1, 0]])


def test_lower_c_small_n():
    a = RatMatrix.from_rows([[1, 2], [0, 1]])
    b = RatMatrix.from_rows([[0, 1], [3, 1]])
    assert lower_c(a, b, 1) == b
    assert lower_c(a, b, 2) == 2 * b - b @ a @ b


def test_lower_c_jordan_pair():
    c = lower_c(J2, K2, 1)
    assert c == K2
    I = RatMatrix.identity(2)
    assert I - J2 @ c == RatMatrix.diag(0, 1)
    assert I - c @ J2 == RatMatrix.diag(1, 0)


def brute_lower_c(a, b, n):
    """Literal transcription of the binomial sum, term by term."""
    total = RatMatrix.zeros(b.rows, b.cols)
    for i in range(1, n + 1):
        total = total + b @ mat_pow(a @ b, i - 1) * ((-1) ** (i - 1) * comb(n, i))
    return total


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda k: st.integers(1, 4).flatmap(lambda l: st.tuples(matrices(k, l, integral=True), matrices(l, k, integral=True)))
    ),
    st.integers(1, 4),
)
def test_lower_c_identities_rectangular(pair, n):
    a, b = pair
    c = lower_c(a, b, n)
    assert c == brute_lower_c(a, b, n)
    assert RatMatrix.identity(a.rows) - a @ c == mat_pow(RatMatrix.identity(a.rows) - a @ b, n)
    assert RatMatrix.identity(b.rows) - c @ a == mat_pow(RatMatrix.identity(b.rows) - b @ a, n)


def test_lower_c_rejects_mismatch():
    with pytest.raises(DimensionError):
        lower_c(RatMatrix.zeros(2, 3), RatMatrix.zeros(2, 3), 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_transfer_zero_pair(n):
    Z = RatMatrix.zeros(2)
    I = RatMatrix.identity(2)
    cert = transfer_witness(Z, Z, n)
    assert cert.alpha == I and cert.beta == I
    assert cert.p == I and cert.u == I
    assert cert.q == Z
    assert cert.ok


def test_transfer_jordan_pair():
    cert = transfer_witness(J2, K2, 1)
    assert cert.alpha == RatMatrix.diag(0, 1)
    assert cert.p == RatMatrix.diag(0, 1)
    assert cert.u == RatMatrix.identity(2)
    assert cert.q == RatMatrix.diag(0, 1)
    assert cert.beta - (RatMatrix.identity(2) - cert.q) == RatMatrix.zeros(2)
    assert all(cert.verdicts[k] for k in REQUIRED_VERDICTS)


def test_transfer_precondition():
    a = RatMatrix.identity(2)
    b = RatMatrix.diag(-1, 0)  # I - ab = diag(2, 1): eigenvalue 2
    with pytest.raises(NotGnsd):
        transfer_witness(a, b, 2)


def test_transfer_rejects_rectangular():
    with pytest.raises(DimensionError):
        transfer_witness(RatMatrix.zeros(2, 3), RatMatrix.zeros(3, 2), 1)


def test_certificate_json_keys():
    a, b = gen_transfer_pair(GenConfig(seed=3, dim=3, n=2))
    obj = json.loads(transfer_witness(a, b, 2).to_json())
    for key in ("alpha", "beta", "c", "p", "u", "q", "r"):
        assert set(obj[key]) == {"rows", "cols", "entries"}
    assert set(REQUIRED_VERDICTS) <= set(obj["verdicts"])
    assert all(obj["verdicts"].values())


def _independent_checks(a, b, n, cert):
    """Recheck the certificate from its matrices alone."""
    k = a.rows
    I = RatMatrix.identity(k)
    alpha, beta, c, p, u, q, r = cert.alpha, cert.beta, cert.c, cert.p, cert.u, cert.q, cert.r
    assert alpha == mat_pow(I - a @ b, n) == I - a @ c
    assert beta == mat_pow(I - b @ a, n) == I - c @ a
    assert p @ p == p and is_nilpotent(alpha - p)
    assert is_invertible(u)
    assert q @ q == q
    assert all(q @ y == y @ q for y in commutant_basis(I - c @ a))
    assert r @ c == alpha - p
    assert beta - (I - q) == c @ r and is_nilpotent(c @ r)
    assert is_invertible(I - a @ (I - c @ a) @ c @ (I - p) @ inverse(u))
    # I - q witnesses gnsD of I - ba for exponent n
    assert is_gnsd(I - b @ a, n)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(2, 4), st.integers(1, 4))
def test_fuzzed_certificates(seed, dim, n):
    a, b = gen_transfer_pair(GenConfig(seed=seed, dim=dim, n=n))
    cert = transfer_witness(a, b, n)
    _independent_checks(a, b, n, cert)
    # the construction is symmetric in the two factors
    assert transfer_witness(b, a, n).ok


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 4), st.integers(1, 3), st.sampled_from(list(Structure)))
def test_symmetry_of_success(seed, dim, n, structure):
    a, b = gen_transfer_pair(GenConfig(seed=seed, dim=dim, n=n, structure=structure))

    def succeeds(x, y):
        try:
            transfer_witness(x, y, n)
        except NotGnsd:
            return False
        return True

    assert succeeds(a, b) == succeeds(b, a)


def test_transferred_idempotent_is_spectral():
    # for matrices the idempotent is unique, so I - q must be the spectral idempotent of beta
    for seed in range(10):
        a, b = gen_transfer_pair(GenConfig(seed=seed, dim=4, n=3))
        cert = transfer_witness(a, b, 3)
        assert cert.transferred_idempotent == gnsd_check(RatMatrix.identity(4) - b @ a, 3).idempotent_e


# -- powers and rectangular factors -----------------------------------------

def test_power_transfer_m_one():
    a, b = gen_transfer_pair(GenConfig(seed=11, dim=3, n=2))
    report = power_transfer(a, b, 1, 2)
    assert report.identities_hold and report.left and report.right


@pytest.mark.parametrize("m, n", [(1, 1), (2, 3), (3, 2)])
def test_power_transfer_commuting_nilpotents(m, n):
    a = RatMatrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    b = a @ a
    report = power_transfer(a, b, m, n)
    assert report.ok and report.left and report.right


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 3), st.integers(1, 3), st.sampled_from(list(Structure)))
def test_power_transfer_fuzzed(seed, m, n, structure):
    a, b = gen_transfer_pair(GenConfig(seed=seed, dim=4, n=n, structure=structure))
    assert power_transfer(a, b, m, n).ok


def test_block_embed_zero():
    A = RatMatrix.zeros(2, 3)
    B = RatMatrix.zeros(3, 2)
    report = block_embed(A, B, 2)
    assert report.ok and report.left and report.right


def test_block_embed_eigenvalue_two():
    A = RatMatrix.from_rows([[1, 0]])
    B = RatMatrix.from_rows([[1], [0]])
    assert A @ B == RatMatrix.from_rows([[1]])
    assert B @ A == RatMatrix.from_rows([[1, 0], [0, 0]])
    report = block_embed(A, B, 2)
    assert report.identities_hold
    assert report.left is False and report.right is False


def test_block_embed_minus_one():
    A = RatMatrix.from_rows([[-2, 0]])
    B = RatMatrix.from_rows([[1], [0]])
    report = block_embed(A, B, 2)
    assert RatMatrix.identity(1) + A @ B == RatMatrix.from_rows([[-1]])
    assert RatMatrix.identity(2) + B @ A == RatMatrix.diag(-1, 1)
    assert report.ok and report.left and report.right
    assert report.identities["embedded_certificate"]


def test_embedding_blocks_shapes():
    A = RatMatrix.from_rows([[1, 2, 3]])
    B = RatMatrix.from_rows([[1], [0], [2]])
    C, D = embedding_blocks(A, B)
    assert C.shape == D.shape == (4, 4)
    with pytest.raises(DimensionError):
        embedding_blocks(A, A)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(1, 3).flatmap(
        lambda k: st.integers(1, 3).flatmap(lambda l: st.tuples(matrices(k, l, bound=2, integral=True), matrices(l, k, bound=2, integral=True)))
    ),
    st.integers(1, 3),
)
def test_block_embed_random(pair, n):
    A, B = pair
    assert block_embed(A, B, n).ok
