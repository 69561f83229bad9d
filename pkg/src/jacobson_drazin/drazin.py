"""Core-nilpotent decomposition and the Drazin inverse.

For a square ``A`` of index ``k`` the space splits as ``col(A^k) + null(A^k)``,
both ``A``-invariant.  In a basis adapted to that splitting ``A`` is
``blockdiag(C, N)`` with ``C`` invertible and ``N`` nilpotent, and the Drazin
inverse is ``S blockdiag(C^-1, 0) S^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_linalg import (
    DimensionError,
    RatMatrix,
    block_diag,
    column_space_basis,
    inverse,
    is_nilpotent,
    mat_pow,
    null_space_basis,
    rank,
)


@dataclass(frozen=True)
class CoreNilpotentDecomposition:
    """``basis^-1 @ A @ basis == blockdiag(core, nil)``."""

    index: int
    basis: RatMatrix
    basis_inv: RatMatrix
    core: RatMatrix
    nil: RatMatrix

    @property
    def core_dim(self) -> int:
        return self.core.rows

    def reconstruct(self) -> RatMatrix:
        return self.basis @ block_diag(self.core, self.nil) @ self.basis_inv


def _require_square(A: RatMatrix) -> None:
    if not A.is_square():
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")


def drazin_index(A: RatMatrix) -> int:
    """Smallest ``i >= 0`` with ``rank(A^i) == rank(A^(i+1))``."""
    _require_square(A)
    power = RatMatrix.identity(A.rows)
    r_prev = A.rows
    i = 0
    while True:
        power = power @ A
        r = rank(power)
        if r == r_prev:
            return i
        r_prev = r
        i += 1


def core_nilpotent(A: RatMatrix) -> CoreNilpotentDecomposition:
    _require_square(A)
    k = drazin_index(A)
    Ak = mat_pow(A, k)
    cols = column_space_basis(Ak)
    nulls = null_space_basis(Ak)
    S = RatMatrix.from_columns(cols + nulls, nrows=A.rows)
    S_inv = inverse(S)
    T = S_inv @ A @ S
    r = len(cols)
    n = A.rows
    core = T.submatrix(0, r, 0, r)
    nil = T.submatrix(r, n, r, n)
    # both subspaces are A-invariant, so the off-diagonal blocks vanish
    assert T.submatrix(0, r, r, n).is_zero() and T.submatrix(r, n, 0, r).is_zero()
    return CoreNilpotentDecomposition(index=k, basis=S, basis_inv=S_inv, core=core, nil=nil)


def drazin_from_decomposition(dec: CoreNilpotentDecomposition) -> RatMatrix:
    zero = RatMatrix.zeros(dec.nil.rows)
    return dec.basis @ block_diag(inverse(dec.core), zero) @ dec.basis_inv


def drazin_inverse(A: RatMatrix) -> RatMatrix:
    """The Drazin inverse ``A^D``.

    >>> drazin_inverse(RatMatrix.diag(2, 0))
    RatMatrix([[1/2, 0], [0, 0]])
    """
    return drazin_from_decomposition(core_nilpotent(A))


def spectral_idempotent(A: RatMatrix) -> RatMatrix:
    """``A @ A^D``: projection onto the core part along the generalized null space."""
    return A @ drazin_inverse(A)


def spectral_idempotent_at_one(A: RatMatrix) -> RatMatrix:
    """Projection onto the generalized eigenspace of ``A`` for eigenvalue 1.

    Computed as ``I - B B^D`` with ``B = I - A``.  When every eigenvalue of
    ``A`` is 0 or 1, ``A - p`` is nilpotent.
    """
    _require_square(A)
    ident = RatMatrix.identity(A.rows)
    return ident - spectral_idempotent(ident - A)


def drazin_axioms(A: RatMatrix, AD: RatMatrix | None = None, k: int | None = None) -> dict[str, bool]:
    """Check the defining identities of the Drazin inverse exactly."""
    if AD is None:
        AD = drazin_inverse(A)
    if k is None:
        k = drazin_index(A)
    Ak = mat_pow(A, k)
    return {
        "xax_eq_x": AD @ A @ AD == AD,
        "commutes": A @ AD == AD @ A,
        "power_identity": Ak @ A @ AD == Ak,
        "residual_nilpotent": is_nilpotent(A - A @ A @ AD),
    }
