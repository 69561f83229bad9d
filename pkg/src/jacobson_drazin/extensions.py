"""Transfers under constraints on four matrices ``a, b, c, d``.

* :func:`two_sided_transfer`: ``acd = dbd`` and ``dba = aca`` give
  ``I - ac`` gnsD iff ``I - bd`` gnsD.
* :func:`triple_transfer`: ``aba = aca`` (the case ``d = a``).
* :func:`one_sided_transfer`: ``acd = dbd`` and ``bdb = bac`` give only
  ``I - ac`` gnsD implies ``I - bd`` gnsD; the converse is recorded as data.
* :func:`reference_example`: a fixed 4x4 quadruple satisfying the first
  constraint set but not the last.
"""

from __future__ import annotations

from .exact_linalg import DimensionError, RatMatrix, is_invertible, mat_pow
from .gnsd import gsd_check, is_gnsd
from .jacobson import EquivalenceReport, InternalContradiction, lower_c


class ConstraintViolated(ValueError):
    """A required product identity fails; both sides are attached."""

    def __init__(self, name: str, lhs: RatMatrix, rhs: RatMatrix):
        super().__init__(f"constraint {name} violated")
        self.name = name
        self.lhs = lhs
        self.rhs = rhs


def _require_square(*mats: RatMatrix) -> None:
    shape = mats[0].shape
    if not mats[0].is_square() or any(M.shape != shape for M in mats):
        raise DimensionError("expected square matrices of equal size, got " + ", ".join(str(M.shape) for M in mats))


def _enforce(name: str, lhs: RatMatrix, rhs: RatMatrix) -> None:
    if lhs != rhs:
        raise ConstraintViolated(name, lhs, rhs)


def power_gsd_equivalence(A: RatMatrix, n: int) -> bool:
    """Whether "A is gnsD for n" agrees with "A^n is generalized strongly Drazin"."""
    return is_gnsd(A, n) == gsd_check(mat_pow(A, n))


def binomial_primes(a: RatMatrix, c: RatMatrix, b: RatMatrix, d: RatMatrix, n: int) -> tuple[RatMatrix, RatMatrix]:
    """``c' = sum (-1)^(i-1) C(n,i) c (ac)^(i-1)`` and ``b' = sum (-1)^(i-1) C(n,i) (bd)^(i-1) b``.

    Then ``(I - ac)^n = I - a c'`` and ``(I - bd)^n = I - b' d``.
    """
    _require_square(a, b, c, d)
    # (bd)^(i-1) b == b (db)^(i-1)
    return lower_c(a, c, n), lower_c(d, b, n)


def _prime_identities(a, b, c, d, n) -> tuple[RatMatrix, RatMatrix, dict[str, bool]]:
    cp, bp = binomial_primes(a, c, b, d, n)
    I = RatMatrix.identity(a.rows)
    identities = {
        "alpha_identity": mat_pow(I - a @ c, n) == I - a @ cp,
        "beta_identity": mat_pow(I - b @ d, n) == I - bp @ d,
    }
    return cp, bp, identities


def two_sided_transfer(a: RatMatrix, b: RatMatrix, c: RatMatrix, d: RatMatrix, n: int) -> EquivalenceReport:
    """Requires ``acd = dbd`` and ``dba = aca``; reports gnsD of ``I - ac`` and ``I - bd``."""
    _require_square(a, b, c, d)
    _enforce("acd = dbd", a @ c @ d, d @ b @ d)
    _enforce("dba = aca", d @ b @ a, a @ c @ a)
    cp, bp, identities = _prime_identities(a, b, c, d, n)
    identities["ac'd = db'd"] = a @ cp @ d == d @ bp @ d
    identities["db'a = ac'a"] = d @ bp @ a == a @ cp @ a
    I = RatMatrix.identity(a.rows)
    return EquivalenceReport(
        kind="two_sided_transfer",
        n=n,
        inputs={"a": a, "b": b, "c": c, "d": d},
        identities=identities,
        left=is_gnsd(I - a @ c, n),
        right=is_gnsd(I - b @ d, n),
    )


def triple_transfer(a: RatMatrix, b: RatMatrix, c: RatMatrix, n: int) -> EquivalenceReport:
    """Requires ``aba = aca``; reports gnsD of ``I - ac`` and ``I - ba``.

    When ``a`` is invertible the constraint forces ``b = c``; the report flags
    that as ``degenerate``.
    """
    _require_square(a, b, c)
    _enforce("aba = aca", a @ b @ a, a @ c @ a)
    inner = two_sided_transfer(a, b, c, a, n)
    return EquivalenceReport(
        kind="triple_transfer",
        n=n,
        inputs={"a": a, "b": b, "c": c},
        identities=inner.identities,
        left=inner.left,
        right=inner.right,
        extra={"degenerate": is_invertible(a), "b_equals_c": b == c},
    )


def one_sided_transfer(a: RatMatrix, b: RatMatrix, c: RatMatrix, d: RatMatrix, n: int) -> EquivalenceReport:
    """Requires ``acd = dbd`` and ``bdb = bac``; claims only ``I - ac`` gnsD => ``I - bd`` gnsD."""
    _require_square(a, b, c, d)
    _enforce("acd = dbd", a @ c @ d, d @ b @ d)
    _enforce("bdb = bac", b @ d @ b, b @ a @ c)
    cp, bp, identities = _prime_identities(a, b, c, d, n)
    identities["ac'd = db'd"] = a @ cp @ d == d @ bp @ d
    identities["b'db' = b'ac'"] = bp @ d @ bp == bp @ a @ cp
    I = RatMatrix.identity(a.rows)
    left = is_gnsd(I - a @ c, n)
    right = is_gnsd(I - b @ d, n)
    return EquivalenceReport(
        kind="one_sided_transfer",
        n=n,
        inputs={"a": a, "b": b, "c": c, "d": d},
        identities=identities,
        left=left,
        right=right,
        implication_only=True,
        extra={"converse_holds": (not right) or left},
    )


REFERENCE_A = RatMatrix.from_rows([[0, 0, 1, 1], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]])
REFERENCE_B = RatMatrix.from_rows([[1, 0, 1, 0], [0, 1, 0, 1], [1, 1, 1, 0], [0, 0, 0, 1]])
REFERENCE_C = REFERENCE_B
REFERENCE_D = RatMatrix.from_rows([[1, 1, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
PRINTED_I_MINUS_AC = RatMatrix.from_rows([[0, -1, -1, -1], [0, 1, 0, -1], [0, 0, 1, 0], [0, 0, 0, 1]])
PRINTED_I_MINUS_BD = RatMatrix.from_rows([[0, -1, 0, -1], [0, 1, 0, 0], [-1, -1, 1, -1], [0, 0, 0, 1]])


def reference_example(*, check: bool = False) -> dict:
    """Recompute every claim about the fixed 4x4 quadruple.

    Returns a JSON-ready report; with ``check`` a false claim raises
    :class:`InternalContradiction` naming it.
    """
    a, b, c, d = REFERENCE_A, REFERENCE_B, REFERENCE_C, REFERENCE_D
    I = RatMatrix.identity(4)
    i_ac = I - a @ c
    i_bd = I - b @ d
    bdb, bac = b @ d @ b, b @ a @ c
    claims = {
        "acd = dbd": a @ c @ d == d @ b @ d,
        "dba = aca": d @ b @ a == a @ c @ a,
        "bdb != bac": bdb != bac,
        "I - ac matches printed matrix": i_ac == PRINTED_I_MINUS_AC,
        "I - bd matches printed matrix": i_bd == PRINTED_I_MINUS_BD,
        "I - ac is gnsD for n = 1": is_gnsd(i_ac, 1),
        "I - bd is gnsD for n = 1": is_gnsd(i_bd, 1),
    }
    report = {
        "kind": "reference_example",
        "inputs": {name: M.to_json_obj() for name, M in zip("abcd", (a, b, c, d))},
        "claims": claims,
        "evidence": {
            "bdb": bdb.to_json_obj(),
            "bac": bac.to_json_obj(),
            "I - ac": i_ac.to_json_obj(),
            "I - bd": i_bd.to_json_obj(),
        },
        "failed": [name for name, ok in claims.items() if not ok],
        "ok": all(claims.values()),
    }
    if check and not report["ok"]:
        raise InternalContradiction("reference example claims failed: " + ", ".join(report["failed"]), report)
    return report
