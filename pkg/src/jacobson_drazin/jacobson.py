"""Transferring gnsD invertibility from ``I - ab`` to ``I - ba``.

:func:`transfer_witness` starts from a gnsD witness for ``I - ab`` and builds
an idempotent ``I - q`` with ``(I - ba)^n - (I - q)`` nilpotent, recording
every intermediate identity as a named verdict.  :func:`power_transfer` and
:func:`block_embed` cover powers ``(I - ab)^m`` and rectangular factors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb

from .drazin import spectral_idempotent_at_one
from .exact_linalg import (
    DimensionError,
    NotInvertible,
    RatMatrix,
    block_diag,
    block_matrix,
    commutant_basis,
    commutes_with_all,
    inverse,
    is_invertible,
    is_nilpotent,
    mat_pow,
)
from .gnsd import NotGnsd, gnsd_check, is_gnsd

REQUIRED_VERDICTS = (
    "q_idempotent",
    "q_double_commutant",
    "beta_defect_nilpotent",
    "rc_equals_alpha_minus_p",
    "u_invertible",
    "intermediate_unit",
)


class InternalContradiction(AssertionError):
    """A verdict that must hold for every valid input came out false."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


def lower_c(a: RatMatrix, b: RatMatrix, n: int) -> RatMatrix:
    """``c = sum_{i=1..n} (-1)^(i-1) C(n,i) b (ab)^(i-1)``.

    Satisfies ``I - ac = (I - ab)^n`` and ``I - ca = (I - ba)^n``; ``a`` may be
    ``k x l`` and ``b`` ``l x k``.
    """
    if a.cols != b.rows or a.rows != b.cols:
        raise DimensionError(f"a {a.shape} and b {b.shape} are not a conformable pair")
    if n < 1:
        raise ValueError("n must be at least 1")
    ab = a @ b
    acc = b
    total = b * n
    for i in range(2, n + 1):
        acc = acc @ ab
        total = total + acc * ((-1) ** (i - 1) * comb(n, i))
    return total


@dataclass(frozen=True)
class TransferCertificate:
    n: int
    a: RatMatrix
    b: RatMatrix
    alpha: RatMatrix
    beta: RatMatrix
    c: RatMatrix
    p: RatMatrix
    u: RatMatrix
    q: RatMatrix
    r: RatMatrix
    verdicts: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    @property
    def transferred_idempotent(self) -> RatMatrix:
        """``I - q``, the idempotent witnessing gnsD of ``I - ba``."""
        return RatMatrix.identity(self.q.rows) - self.q

    def to_json_obj(self) -> dict:
        obj = {"n": self.n}
        for name in ("a", "b", "alpha", "beta", "c", "p", "u", "q", "r"):
            obj[name] = getattr(self, name).to_json_obj()
        obj["verdicts"] = dict(self.verdicts)
        obj["all_verdicts_true"] = self.ok
        return obj

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_json_obj(), **kwargs)


def _require_square_pair(a: RatMatrix, b: RatMatrix) -> None:
    if not (a.is_square() and b.is_square() and a.shape == b.shape):
        raise DimensionError(f"expected square matrices of equal size, got {a.shape} and {b.shape}")


def transfer_witness(a: RatMatrix, b: RatMatrix, n: int, *, strict: bool = True) -> TransferCertificate:
    """Build and verify the gnsD witness for ``I - ba`` from one for ``I - ab``.

    Raises :class:`NotGnsd` when ``I - ab`` is not gnsD.  With ``strict`` a
    false verdict raises :class:`InternalContradiction` (the certificate is
    attached); otherwise the certificate is returned as is.
    """
    _require_square_pair(a, b)
    k = a.rows
    I = RatMatrix.identity(k)
    gnsd_check(I - a @ b, n)

    alpha = mat_pow(I - a @ b, n)
    beta = mat_pow(I - b @ a, n)
    c = lower_c(a, b, n)
    p = spectral_idempotent_at_one(alpha)
    u = I - (I - p) @ alpha

    verdicts: dict[str, bool] = {}
    verdicts["alpha_identity"] = alpha == I - a @ c
    verdicts["beta_identity"] = beta == I - c @ a
    verdicts["p_idempotent"] = p @ p == p
    verdicts["p_double_commutant"] = commutes_with_all(p, commutant_basis(alpha))
    verdicts["alpha_minus_p_nilpotent"] = is_nilpotent(alpha - p)

    try:
        u_inv = inverse(u)
    except NotInvertible:
        verdicts["u_invertible"] = False
        cert = TransferCertificate(n, a, b, alpha, beta, c, p, u, RatMatrix.zeros(k), RatMatrix.zeros(k), verdicts)
        for key in REQUIRED_VERDICTS:
            verdicts.setdefault(key, False)
        if strict:
            raise InternalContradiction("I - (I - p) alpha is singular", cert)
        return cert
    verdicts["u_invertible"] = u @ u_inv == I and u_inv @ u == I

    q = c @ (I - p) @ u_inv @ a
    r = ((I - p) @ u_inv - I) @ a
    rc = r @ c
    cr = c @ r

    verdicts["q_idempotent"] = q @ q == q
    verdicts["q_double_commutant"] = commutes_with_all(q, commutant_basis(I - c @ a))
    verdicts["rc_equals_alpha_minus_p"] = rc == alpha - p
    rc_nil = is_nilpotent(rc)
    cr_nil = is_nilpotent(cr)
    verdicts["rc_cr_nilpotency_agree"] = rc_nil == cr_nil
    verdicts["beta_defect_nilpotent"] = beta - (I - q) == cr and cr_nil
    verdicts["intermediate_unit"] = is_invertible(I - a @ (I - c @ a) @ c @ (I - p) @ u_inv)

    cert = TransferCertificate(n, a, b, alpha, beta, c, p, u, q, r, verdicts)
    if strict and not cert.ok:
        failed = [key for key, val in verdicts.items() if not val]
        raise InternalContradiction(f"transfer verdicts failed: {', '.join(failed)}", cert)
    return cert


@dataclass(frozen=True)
class EquivalenceReport:
    """Exact identities checked for an instance plus the two gnsD verdicts.

    ``implication_only`` marks reports where only ``left => right`` is claimed.
    """

    kind: str
    n: int
    inputs: dict[str, RatMatrix]
    identities: dict[str, bool]
    left: bool
    right: bool
    implication_only: bool = False
    extra: dict = field(default_factory=dict)

    @property
    def identities_hold(self) -> bool:
        return all(self.identities.values())

    @property
    def equivalent(self) -> bool:
        return self.left == self.right

    @property
    def claim_holds(self) -> bool:
        """The gnsD relation the instance is supposed to satisfy."""
        return (not self.left or self.right) if self.implication_only else self.equivalent

    @property
    def ok(self) -> bool:
        return self.identities_hold and self.claim_holds

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "inputs": {name: M.to_json_obj() for name, M in self.inputs.items()},
            "identities": dict(self.identities),
            "left_gnsd": self.left,
            "right_gnsd": self.right,
            "relation": "implication" if self.implication_only else "equivalence",
            "claim_holds": self.claim_holds,
            "ok": self.ok,
            **self.extra,
        }


def telescope(x: RatMatrix, m: int) -> RatMatrix:
    """``I + x + ... + x^(m-1)``."""
    ident = RatMatrix.identity(x.rows)
    total = RatMatrix.zeros(x.rows)
    power = ident
    for _ in range(m):
        total = total + power
        power = power @ x
    return total


def power_transfer(a: RatMatrix, b: RatMatrix, m: int, n: int) -> EquivalenceReport:
    """Compare gnsD of ``(I - ab)^m`` and ``(I - ba)^m`` after checking the telescoping identities."""
    _require_square_pair(a, b)
    if m < 1 or n < 1:
        raise ValueError("m and n must be at least 1")
    I = RatMatrix.identity(a.rows)
    left_m = mat_pow(I - a @ b, m)
    right_m = mat_pow(I - b @ a, m)
    identities = {
        "left_telescope": left_m == I - a @ telescope(I - b @ a, m) @ b,
        "right_telescope": right_m == I - b @ telescope(I - a @ b, m) @ a,
    }
    return EquivalenceReport(
        kind="power_transfer",
        n=n,
        inputs={"a": a, "b": b},
        identities=identities,
        left=is_gnsd(left_m, n),
        right=is_gnsd(right_m, n),
        extra={"m": m},
    )


def embedding_blocks(A: RatMatrix, B: RatMatrix) -> tuple[RatMatrix, RatMatrix]:
    """Square matrices ``C = [[0, 0], [A, 0]]`` and ``D = [[0, B], [0, 0]]`` of size ``k + l``."""
    k, l = A.shape
    if B.shape != (l, k):
        raise DimensionError(f"A {A.shape} and B {B.shape} are not a conformable pair")
    C = block_matrix([[RatMatrix.zeros(l, l), RatMatrix.zeros(l, k)], [A, RatMatrix.zeros(k, k)]])
    D = block_matrix([[RatMatrix.zeros(l, l), B], [RatMatrix.zeros(k, l), RatMatrix.zeros(k, k)]])
    return C, D


def block_embed(A: RatMatrix, B: RatMatrix, n: int, *, certify: bool = True) -> EquivalenceReport:
    """Compare gnsD of ``I_k + AB`` and ``I_l + BA`` through a square embedding.

    When ``certify`` is set and the left side is gnsD, the embedded square pair
    ``(C, -D)`` is also run through :func:`transfer_witness`.
    """
    k, l = A.shape
    C, D = embedding_blocks(A, B)
    Im = RatMatrix.identity(k + l)
    Ik, Il = RatMatrix.identity(k), RatMatrix.identity(l)
    left = Ik + A @ B
    right = Il + B @ A
    identities = {
        "cd_block_form": Im + C @ D == block_diag(Il, left),
        "dc_block_form": Im + D @ C == block_diag(right, Ik),
    }
    left_ok = is_gnsd(left, n)
    right_ok = is_gnsd(right, n)
    extra: dict = {}
    if certify and left_ok:
        cert = transfer_witness(C, -D, n, strict=False)
        identities["embedded_certificate"] = cert.ok
        extra["embedded_verdicts"] = cert.verdicts
    return EquivalenceReport(
        kind="block_embed",
        n=n,
        inputs={"A": A, "B": B},
        identities=identities,
        left=left_ok,
        right=right_ok,
        extra=extra,
    )
