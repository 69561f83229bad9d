"""Generalized n-strongly Drazin (gnsD) invertibility of rational matrices.

Three independent deciders are provided:

* :func:`gnsd_check` builds the witness ``(x, e) = (A^D, A A^D)`` and tests
  whether ``A^n - e`` is nilpotent;
* :func:`gnsd_check_spectral` works purely on the characteristic polynomial:
  every nonzero eigenvalue must be an n-th root of unity;
* :func:`gnsd_check_poly` tests whether ``A - A^(n+1)`` is nilpotent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .drazin import core_nilpotent, drazin_from_decomposition
from .exact_linalg import (
    DimensionError,
    RatMatrix,
    RatPoly,
    char_poly,
    is_nilpotent,
    mat_pow,
    nilpotency_degree,
    poly_divmod,
    poly_gcd,
)


@dataclass(frozen=True)
class GnsdWitness:
    inverse_x: RatMatrix
    idempotent_e: RatMatrix
    n: int
    nilpotency_degree: int

    def check(self, A: RatMatrix) -> dict[str, bool]:
        """Re-verify the defining identities against ``A``."""
        x, e = self.inverse_x, self.idempotent_e
        return {
            "e_idempotent": e @ e == e,
            "xax_eq_x": x @ A @ x == x,
            "ax_eq_e": A @ x == e,
            "xa_eq_e": x @ A == e,
            "defect_nilpotent": is_nilpotent(mat_pow(A, self.n) - e),
        }


class NotGnsd(Exception):
    """``A^n - e`` is not nilpotent; ``evidence`` is the nonzero ``(A^n - e)^dim``."""

    def __init__(self, n: int, power: int, evidence: RatMatrix):
        super().__init__(f"not generalized {n}-strongly Drazin invertible: (A^{n} - e)^{power} != 0")
        self.n = n
        self.power = power
        self.evidence = evidence


def _validate(A: RatMatrix, n: int) -> None:
    if not A.is_square():
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")
    if n < 1:
        raise ValueError("n must be at least 1")


def gnsd_check(A: RatMatrix, n: int) -> GnsdWitness:
    """Return a witness, or raise :class:`NotGnsd` with refutation evidence."""
    _validate(A, n)
    dec = core_nilpotent(A)
    x = drazin_from_decomposition(dec)
    e = A @ x
    defect = mat_pow(A, n) - e
    degree = nilpotency_degree(defect)
    if degree is None:
        k = A.rows
        raise NotGnsd(n, k, mat_pow(defect, k))
    return GnsdWitness(inverse_x=x, idempotent_e=e, n=n, nilpotency_degree=degree)


def is_gnsd(A: RatMatrix, n: int) -> bool:
    try:
        gnsd_check(A, n)
    except NotGnsd:
        return False
    return True


def gnsd_check_spectral(A: RatMatrix, n: int) -> bool:
    """Decide gnsD from the characteristic polynomial alone.

    Strip the factor ``x^m`` to get ``g`` with ``g(0) != 0``, then repeatedly
    divide ``g`` by ``gcd(g, x^n - 1)``; the answer is true iff this reaches a
    constant.
    """
    _validate(A, n)
    g = char_poly(A)
    coeffs = list(g.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    g = RatPoly(coeffs)
    target = RatPoly.x_power(n) - RatPoly([1])
    while not g.is_constant():
        h = poly_gcd(g, target)
        if h.is_constant():
            return False
        g = poly_divmod(g, h)[0]
    return True


def gnsd_check_poly(A: RatMatrix, n: int) -> bool:
    """True iff ``A - A^(n+1)`` is nilpotent."""
    _validate(A, n)
    return is_nilpotent(A - mat_pow(A, n + 1))


def gsd_check(A: RatMatrix) -> bool:
    """Generalized strongly Drazin invertibility: the ``n = 1`` case."""
    return is_gnsd(A, 1)


def oracle_verdicts(A: RatMatrix, n: int) -> dict[str, bool]:
    return {
        "witness": is_gnsd(A, n),
        "spectral": gnsd_check_spectral(A, n),
        "poly": gnsd_check_poly(A, n),
    }
