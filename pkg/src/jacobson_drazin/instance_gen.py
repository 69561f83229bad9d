"""Seeded generation of structured test instances.

Every generator takes a :class:`GenConfig` and draws from its own
``random.Random(seed)``, so identical configs give identical output.
Conjugations use integer unimodular matrices, which keeps inverses integral.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable

from .exact_linalg import (
    RatMatrix,
    block_diag,
    block_matrix,
    companion,
    cyclotomic,
    hstack,
    inverse,
    is_invertible,
    jordan_block,
    null_space_basis,
    solve,
)


class Structure(enum.Enum):
    GNSD_TRUE = "GnsdTrue"
    GNSD_FALSE = "GnsdFalse"
    UNCONSTRAINED = "Unconstrained"


class GenerationExhausted(RuntimeError):
    """No valid instance was found within the resample budget."""


@dataclass(frozen=True)
class GenConfig:
    seed: int
    dim: int
    n: int = 1
    entry_bound: int = 5
    structure: Structure = Structure.GNSD_TRUE
    resample_budget: int = 100

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.dim < 1 or self.n < 1 or self.entry_bound < 1:
            raise ValueError("dim, n and entry_bound must all be at least 1")

    def rng(self, stream: str = "") -> random.Random:
        # string seeds hash deterministically (sha512) in the random module
        return random.Random(f"{self.seed}:{self.dim}:{self.n}:{self.entry_bound}:{self.structure.value}:{stream}")


# ---------------------------------------------------------------------------
# primitives

def random_integer_matrix(rng: random.Random, rows: int, cols: int, bound: int) -> RatMatrix:
    return RatMatrix(rows, cols, [rng.randint(-bound, bound) for _ in range(rows * cols)])


def random_rational_matrix(rng: random.Random, rows: int, cols: int, bound: int) -> RatMatrix:
    return RatMatrix(rows, cols, [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(rows * cols)])


def random_unimodular(rng: random.Random, dim: int, steps: int | None = None, mult_bound: int = 2) -> tuple[RatMatrix, RatMatrix]:
    """Integer matrix with determinant +-1 and its (integral) inverse."""
    rows = [[int(i == j) for j in range(dim)] for i in range(dim)]
    if dim > 1:
        for _ in range(steps if steps is not None else 2 * dim):
            i, j = rng.sample(range(dim), 2)
            if rng.random() < 0.2:
                rows[i], rows[j] = rows[j], rows[i]
            else:
                f = rng.choice([m for m in range(-mult_bound, mult_bound + 1) if m])
                rows[i] = [x + f * y for x, y in zip(rows[i], rows[j])]
    S = RatMatrix.from_rows(rows)
    return S, inverse(S)


def random_invertible_integer(rng: random.Random, dim: int, bound: int) -> RatMatrix:
    while True:
        M = random_integer_matrix(rng, dim, dim, bound)
        if is_invertible(M):
            return M


def random_low_rank(rng: random.Random, dim: int, bound: int, rank: int | None = None) -> RatMatrix:
    r = rank if rank is not None else rng.randint(1, max(1, dim - 1))
    return random_integer_matrix(rng, dim, r, bound) @ random_integer_matrix(rng, r, dim, min(bound, 2))


def random_matrix(rng: random.Random, dim: int, bound: int, singular_prob: float = 0.5) -> RatMatrix:
    if dim > 1 and rng.random() < singular_prob:
        return random_low_rank(rng, dim, bound)
    return random_integer_matrix(rng, dim, dim, bound)


def linear_map_matrix(f: Callable[[RatMatrix], RatMatrix], dim: int) -> RatMatrix:
    """Matrix of the linear map ``f`` on dim x dim matrices, in row-major ``vec`` coordinates."""
    columns = []
    for i in range(dim):
        for j in range(dim):
            E = RatMatrix(dim, dim, [int(r == i and s == j) for r in range(dim) for s in range(dim)])
            columns.append(f(E).entries)
    return RatMatrix.from_columns(columns)


def random_solution(rng: random.Random, system: RatMatrix, rhs, dim: int, coef_bound: int = 2) -> RatMatrix | None:
    """Random element of ``{X : system @ vec(X) = rhs}``, or ``None`` if empty."""
    particular = solve(system, rhs)
    if particular is None:
        return None
    x = list(particular)
    for v in null_space_basis(system):
        coef = rng.randint(-coef_bound, coef_bound)
        if coef:
            x = [xi + coef * vi for xi, vi in zip(x, v)]
    return RatMatrix(dim, dim, x)


# ---------------------------------------------------------------------------
# gnsD matrices

def cyclotomic_divisors(n: int) -> list:
    """Irreducible rational factors of ``x^n - 1`` (one per divisor of ``n``)."""
    return [cyclotomic(d) for d in range(1, n + 1) if n % d == 0]


def _spectral_blocks(rng: random.Random, dim: int, n: int, bound: int) -> list[RatMatrix]:
    factors = cyclotomic_divisors(n)
    blocks: list[RatMatrix] = []
    left = dim
    while left:
        options = ["nil"] + [f for f in factors if f.degree <= left]
        choice = rng.choice(options)
        if choice == "nil":
            size = rng.randint(1, min(left, 3))
            blocks.append(jordan_block(size))
        else:
            C = companion(choice)
            m = C.rows
            if 2 * m <= left and rng.random() < 0.3:
                # repeated factor with a non-semisimple coupling
                K = random_integer_matrix(rng, m, m, 1)
                blocks.append(RatMatrix.from_rows([r1 + r2 for r1, r2 in zip(C.to_rows(), K.to_rows())]
                                                  + [(Fraction(0),) * m + r for r in C.to_rows()]))
            else:
                blocks.append(C)
        left -= blocks[-1].rows
    return blocks


def _couple(rng: random.Random, T: RatMatrix, sizes: list[int], bound: int) -> RatMatrix:
    """Fill strictly block-upper entries at random; the spectrum is unchanged."""
    rows = [list(r) for r in T.to_rows()]
    starts = [sum(sizes[:i]) for i in range(len(sizes))]
    for bi, (s0, sz) in enumerate(zip(starts, sizes)):
        for i in range(s0, s0 + sz):
            for j in range(s0 + sz, T.cols):
                if rng.random() < 0.3:
                    rows[i][j] = Fraction(rng.randint(-bound, bound))
    return RatMatrix.from_rows(rows)


def gen_gnsd_matrix(cfg: GenConfig) -> RatMatrix:
    """Matrix whose gnsD status (for ``cfg.n``) is fixed by ``cfg.structure``.

    ``GnsdTrue``: nonzero eigenvalues are n-th roots of unity.  ``GnsdFalse``:
    additionally one eigenvalue 2.  ``Unconstrained``: random rational entries.
    """
    rng = cfg.rng("gnsd")
    if cfg.structure is Structure.UNCONSTRAINED:
        return random_rational_matrix(rng, cfg.dim, cfg.dim, cfg.entry_bound)
    if cfg.structure is Structure.GNSD_FALSE:
        blocks = [RatMatrix.from_rows([[2]])]
        if cfg.dim > 1:
            blocks += _spectral_blocks(rng, cfg.dim - 1, cfg.n, cfg.entry_bound)
        rng.shuffle(blocks)
    else:
        blocks = _spectral_blocks(rng, cfg.dim, cfg.n, cfg.entry_bound)
    T = _couple(rng, block_diag(*blocks), [B.rows for B in blocks], 1)
    S, S_inv = random_unimodular(rng, cfg.dim)
    return S @ T @ S_inv


def gen_transfer_pair(cfg: GenConfig, *, identity_a: bool = False) -> tuple[RatMatrix, RatMatrix]:
    """``(a, b)`` with ``I - ab`` equal to a generated matrix of the configured structure."""
    rng = cfg.rng("pair")
    M = gen_gnsd_matrix(cfg)
    I = RatMatrix.identity(cfg.dim)
    if identity_a:
        return I, I - M
    a = random_invertible_integer(rng, cfg.dim, cfg.entry_bound)
    return a, inverse(a) @ (I - M)


def gen_mixed_matrix(cfg: GenConfig) -> RatMatrix:
    """One of the three structures, chosen by the seed."""
    rng = cfg.rng("mixed")
    structure = rng.choice(list(Structure))
    return gen_gnsd_matrix(replace(cfg, structure=structure))


def gen_square_pair(cfg: GenConfig) -> tuple[RatMatrix, RatMatrix]:
    """Pairs for the ``AB`` / ``BA`` nilpotency comparison, mixing nilpotent and generic products."""
    rng = cfg.rng("square_pair")
    dim, bound = cfg.dim, cfg.entry_bound
    kind = rng.choice(["random", "conjugate", "rank"])
    if kind == "random":
        return random_matrix(rng, dim, bound), random_matrix(rng, dim, bound)
    nil_size = rng.randint(1, dim)
    N = _couple(rng, block_diag(*_nil_blocks(rng, nil_size)), [1] * nil_size, 1)
    if kind == "conjugate" or nil_size == dim:
        # AB = padded N, a nilpotent
        padded = block_diag(N, random_integer_matrix(rng, dim - nil_size, dim - nil_size, bound))
        if nil_size < dim and rng.random() < 0.5:
            padded = block_diag(N, RatMatrix.zeros(dim - nil_size))
        A = random_invertible_integer(rng, dim, bound)
        return A, inverse(A) @ padded
    # A = U diag(I_r, 0) V and B = V^-1 [[N, X], [Y, Z]] U^-1: AB and BA are both nilpotent
    r = nil_size
    U, U_inv = random_unimodular(rng, dim)
    V, V_inv = random_unimodular(rng, dim)
    P = block_diag(RatMatrix.identity(r), RatMatrix.zeros(dim - r))
    X = random_integer_matrix(rng, r, dim - r, bound)
    Y = random_integer_matrix(rng, dim - r, r, bound)
    Z = random_integer_matrix(rng, dim - r, dim - r, bound)
    inner = block_matrix([[N, X], [Y, Z]])
    return U @ P @ V, V_inv @ inner @ U_inv


def _nil_blocks(rng: random.Random, size: int) -> list[RatMatrix]:
    blocks = []
    while size:
        s = rng.randint(1, size)
        blocks.append(jordan_block(s))
        size -= s
    return blocks


def gen_rectangular_pair(cfg: GenConfig, k: int, l: int) -> tuple[RatMatrix, RatMatrix]:
    """``A`` (k x l), ``B`` (l x k); half the draws make ``I_k + AB`` (or ``I_l + BA``) gnsD."""
    rng = cfg.rng("rect")
    bound = cfg.entry_bound
    if rng.random() < 0.5:
        return random_integer_matrix(rng, k, l, bound), random_integer_matrix(rng, l, k, bound)
    small, big = min(k, l), max(k, l)
    M = gen_gnsd_matrix(replace(cfg, dim=small, structure=Structure.GNSD_TRUE))
    # X (small x big) = [x0 | R] with x0 invertible; Y (big x small) solves X Y = M - I
    x0 = random_invertible_integer(rng, small, bound)
    R = random_integer_matrix(rng, small, big - small, bound)
    Y_bot = random_integer_matrix(rng, big - small, small, bound)
    Y_top = inverse(x0) @ (M - RatMatrix.identity(small) - R @ Y_bot)
    X = hstack(x0, R) if big > small else x0
    Y = block_matrix([[Y_top], [Y_bot]]) if big > small else Y_top
    return (X, Y) if k <= l else (Y, X)


# ---------------------------------------------------------------------------
# constrained tuples

def gen_triple(cfg: GenConfig) -> tuple[RatMatrix, RatMatrix, RatMatrix]:
    """``(a, b, c)`` with ``aba = aca``: ``c = b + z`` for ``z`` in the kernel of ``z -> aza``."""
    rng = cfg.rng("triple")
    dim, bound = cfg.dim, cfg.entry_bound
    if dim > 1 and rng.random() < 0.4:
        a, b = _singular_gnsd_factor(rng, cfg)
    else:
        a = random_matrix(rng, dim, bound, singular_prob=0.85)
        b = random_integer_matrix(rng, dim, dim, bound)
    system = linear_map_matrix(lambda z: a @ z @ a, dim)
    z = random_solution(rng, system, [0] * dim * dim, dim)
    return a, b, b + z


def _singular_gnsd_factor(rng: random.Random, cfg: GenConfig) -> tuple[RatMatrix, RatMatrix]:
    """Singular ``a`` and some ``b`` with ``I - ba`` gnsD.

    ``a = U diag(I_r, 0) V``; ``I - ba = V^-1 [[M11, 0], [M21, I]] V`` with
    ``M11`` gnsD, which forces the last columns of ``(I - ba) V^-1`` to vanish.
    """
    dim, bound = cfg.dim, cfg.entry_bound
    r = rng.randint(1, dim - 1)
    U, U_inv = random_unimodular(rng, dim)
    V, V_inv = random_unimodular(rng, dim)
    a = U @ block_diag(RatMatrix.identity(r), RatMatrix.zeros(dim - r)) @ V
    M11 = gen_gnsd_matrix(replace(cfg, seed=rng.getrandbits(64), dim=r, structure=Structure.GNSD_TRUE))
    M21 = random_integer_matrix(rng, dim - r, r, bound)
    M = V_inv @ block_matrix([[M11, RatMatrix.zeros(r, dim - r)], [M21, RatMatrix.identity(dim - r)]]) @ V
    B1 = ((RatMatrix.identity(dim) - M) @ V_inv).submatrix(0, dim, 0, r)
    Q = random_integer_matrix(rng, dim, dim - r, bound)
    return a, hstack(B1, Q) @ U_inv


def gen_two_sided_quad(cfg: GenConfig) -> tuple[RatMatrix, RatMatrix, RatMatrix, RatMatrix]:
    """``(a, b, c, d)`` with ``acd = dbd`` and ``dba = aca``, solving for ``b``."""
    rng = cfg.rng("two_sided")
    dim, bound = cfg.dim, cfg.entry_bound
    for _ in range(cfg.resample_budget):
        strategy = rng.choice(["factor", "factor_gnsd", "free"])
        if strategy == "free":
            a, c, d = (random_matrix(rng, dim, bound, 0.8) for _ in range(3))
        else:
            a = random_matrix(rng, dim, bound, 0.0 if strategy == "factor_gnsd" else 0.6)
            w, _ = random_unimodular(rng, dim)
            d = a @ w
            if strategy == "factor_gnsd" and is_invertible(a):
                M = gen_gnsd_matrix(replace(cfg, seed=rng.getrandbits(64), structure=Structure.GNSD_TRUE))
                c = inverse(a) @ (RatMatrix.identity(dim) - M)
            else:
                c = random_integer_matrix(rng, dim, dim, bound)
        system = _stack(linear_map_matrix(lambda x: d @ x @ d, dim), linear_map_matrix(lambda x: d @ x @ a, dim))
        rhs = (a @ c @ d).entries + (a @ c @ a).entries
        b = random_solution(rng, system, rhs, dim)
        if b is not None:
            return a, b, c, d
    raise GenerationExhausted(f"no consistent quadruple after {cfg.resample_budget} draws")


def gen_one_sided_quad(cfg: GenConfig) -> tuple[RatMatrix, RatMatrix, RatMatrix, RatMatrix]:
    """``(a, b, c, d)`` with ``acd = dbd`` and ``bdb = bac``, solving for ``c``."""
    rng = cfg.rng("one_sided")
    dim, bound = cfg.dim, cfg.entry_bound
    for _ in range(cfg.resample_budget):
        strategy = rng.choice(["factor", "factor_gnsd", "free"])
        if strategy == "free":
            a, b, d = (random_matrix(rng, dim, bound, 0.8) for _ in range(3))
        else:
            a = random_matrix(rng, dim, bound, 0.0 if strategy == "factor_gnsd" else 0.6)
            if strategy == "factor_gnsd" and is_invertible(a):
                w, w_inv = random_unimodular(rng, dim)
                M = gen_gnsd_matrix(replace(cfg, seed=rng.getrandbits(64), structure=Structure.GNSD_TRUE))
                # c = w b solves both constraints and I - ac = M
                b = w_inv @ inverse(a) @ (RatMatrix.identity(dim) - M)
            else:
                w = random_matrix(rng, dim, bound, 0.3)
                b = random_integer_matrix(rng, dim, dim, bound)
            d = a @ w
        system = _stack(linear_map_matrix(lambda x: a @ x @ d, dim), linear_map_matrix(lambda x: b @ a @ x, dim))
        rhs = (d @ b @ d).entries + (b @ d @ b).entries
        c = random_solution(rng, system, rhs, dim)
        if c is not None:
            return a, b, c, d
    raise GenerationExhausted(f"no consistent quadruple after {cfg.resample_budget} draws")


def _stack(top: RatMatrix, bottom: RatMatrix) -> RatMatrix:
    return RatMatrix.from_rows(top.to_rows() + bottom.to_rows())
