"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` values (always in lowest terms with a
positive denominator).  :class:`RatMatrix` is an immutable dense matrix and
:class:`RatPoly` a univariate polynomial with rational coefficients.

Example:
    >>> J = RatMatrix.from_rows([[0, 1], [0, 0]])
    >>> mat_pow(J, 2).is_zero()
    True
    >>> rank(J)
    1
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


class NotInvertible(ArithmeticError):
    """Raised by :func:`inverse` for a singular matrix; carries its rank."""

    def __init__(self, rank: int):
        super().__init__(f"matrix is singular (rank {rank})")
        self.rank = rank


class MatrixFormatError(ValueError):
    """Malformed matrix document; the message names the offending field."""


def to_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; surrounding whitespace is tolerated."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RatMatrix:
    """Immutable dense matrix of exact rationals.

    Supports ``+``, ``-``, ``@`` (matrix product), ``*`` by a scalar and exact
    equality.  Entries are stored as a tuple of row tuples.
    """

    __slots__ = ("_data", "rows", "cols", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        flat = [to_rational(v) for v in entries]
        if rows < 0 or cols < 0:
            raise DimensionError("negative dimension")
        if len(flat) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(flat)}")
        self.rows = rows
        self.cols = cols
        self._data = tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows))
        self._hash = None

    @classmethod
    def _raw(cls, data: tuple, cols: int) -> RatMatrix:
        # trusted constructor: data is a tuple of tuples of Fractions
        obj = object.__new__(cls)
        obj._data = data
        obj.rows = len(data)
        obj.cols = cols
        obj._hash = None
        return obj

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> RatMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls._raw(tuple(tuple(to_rational(v) for v in r) for r in rows), ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> RatMatrix:
        if not columns:
            if nrows is None:
                raise DimensionError("cannot infer row count of an empty column list")
            return cls.zeros(nrows, 0)
        return cls.from_rows(list(zip(*columns)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> RatMatrix:
        cols = rows if cols is None else cols
        return cls._raw(tuple((_ZERO,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls._raw(tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def diag(cls, *values) -> RatMatrix:
        n = len(values)
        vals = [to_rational(v) for v in values]
        return cls._raw(tuple(tuple(vals[i] if i == j else _ZERO for j in range(n)) for i in range(n)), n)

    # -- access ---------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Row-major flat tuple of entries."""
        return tuple(x for row in self._data for x in row)

    def to_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._data

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._data)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._data[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def transpose(self) -> RatMatrix:
        if self.rows == 0:
            return RatMatrix.zeros(self.cols, 0)
        return RatMatrix._raw(tuple(zip(*self._data)), self.rows)

    T = property(transpose)

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> RatMatrix:
        return RatMatrix._raw(tuple(row[c0:c1] for row in self._data[r0:r1]), c1 - c0)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: RatMatrix) -> RatMatrix:
        return mat_add(self, other)

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        return mat_sub(self, other)

    def __neg__(self) -> RatMatrix:
        return mat_scale(self, -1)

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        return mat_mul(self, other)

    def __mul__(self, scalar) -> RatMatrix:
        if isinstance(scalar, RatMatrix):
            return NotImplemented
        return mat_scale(self, scalar)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> RatMatrix:
        return mat_pow(self, m)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_rational(x) for x in row) + "]" for row in self._data)
        return f"RatMatrix([{body}])"

    def pretty(self) -> str:
        cells = [[format_rational(x) for x in row] for row in self._data]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)

    # -- serialization --------------------------------------------------
    def to_json_obj(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_rational(x) for x in row] for row in self._data],
        }

    @classmethod
    def from_json_obj(cls, obj) -> RatMatrix:
        return matrix_from_json_obj(obj)


def matrix_from_json_obj(obj) -> RatMatrix:
    """Build a matrix from the ``{"rows", "cols", "entries"}`` document."""
    if not isinstance(obj, dict):
        raise MatrixFormatError("matrix document must be a JSON object")
    for key in ("rows", "cols", "entries"):
        if key not in obj:
            raise MatrixFormatError(f"missing field {key!r}")
    rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    for key, val in (("rows", rows), ("cols", cols)):
        if not isinstance(val, int) or isinstance(val, bool) or val < 0:
            raise MatrixFormatError(f"field {key!r} must be a non-negative integer, got {val!r}")
    if not isinstance(entries, list) or len(entries) != rows:
        raise MatrixFormatError(f"field 'entries' must be a list of {rows} rows")
    data = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise MatrixFormatError(f"entries[{i}] must be a list of {cols} entries")
        parsed = []
        for j, val in enumerate(row):
            try:
                if isinstance(val, str):
                    parsed.append(parse_rational(val))
                elif isinstance(val, int) and not isinstance(val, bool):
                    parsed.append(Fraction(val))
                else:
                    raise ValueError(f"expected a string 'p/q' or 'p', got {val!r}")
            except ValueError as exc:
                raise MatrixFormatError(f"entries[{i}][{j}]: {exc}") from None
        data.append(tuple(parsed))
    return RatMatrix._raw(tuple(data), cols)


def loads_matrix(text: str) -> RatMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return matrix_from_json_obj(obj)


def dumps_matrix(A: RatMatrix, **kwargs) -> str:
    return json.dumps(A.to_json_obj(), **kwargs)


# ---------------------------------------------------------------------------
# ring operations

def _check_same_shape(A: RatMatrix, B: RatMatrix) -> None:
    if A.shape != B.shape:
        raise DimensionError(f"shape mismatch {A.shape} vs {B.shape}")


def mat_add(A: RatMatrix, B: RatMatrix) -> RatMatrix:
    _check_same_shape(A, B)
    return RatMatrix._raw(tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(A._data, B._data)), A.cols)


def mat_sub(A: RatMatrix, B: RatMatrix) -> RatMatrix:
    _check_same_shape(A, B)
    return RatMatrix._raw(tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(A._data, B._data)), A.cols)


def mat_scale(A: RatMatrix, s) -> RatMatrix:
    s = to_rational(s)
    return RatMatrix._raw(tuple(tuple(s * x for x in row) for row in A._data), A.cols)


def mat_mul(A: RatMatrix, B: RatMatrix) -> RatMatrix:
    if A.cols != B.rows:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    bcols = tuple(zip(*B._data)) if B.rows else tuple(() for _ in range(B.cols))
    out = []
    for row in A._data:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append(tuple(sum((x * col[k] for k, x in nz), _ZERO) for col in bcols))
    return RatMatrix._raw(tuple(out), B.cols)


def mat_pow(A: RatMatrix, m: int) -> RatMatrix:
    """``A**m`` by repeated squaring; ``A**0`` is the identity."""
    if not A.is_square():
        raise DimensionError("matrix power needs a square matrix")
    if m < 0:
        raise ValueError("negative exponent")
    result = RatMatrix.identity(A.rows)
    base = A
    while m:
        if m & 1:
            result = result @ base
        m >>= 1
        if m:
            base = base @ base
    return result


def block_diag(*blocks: RatMatrix) -> RatMatrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    rows = []
    c0 = 0
    for b in blocks:
        for row in b._data:
            rows.append((_ZERO,) * c0 + row + (_ZERO,) * (m - c0 - b.cols))
        c0 += b.cols
    return RatMatrix._raw(tuple(rows), m) if n else RatMatrix.zeros(0, m)


def block_matrix(blocks: Sequence[Sequence[RatMatrix]]) -> RatMatrix:
    """Assemble a 2-D grid of conformable blocks."""
    rows = []
    for brow in blocks:
        height = brow[0].rows
        if any(b.rows != height for b in brow):
            raise DimensionError("blocks in a row must share their height")
        for i in range(height):
            rows.append(sum((b._data[i] for b in brow), ()))
    cols = sum(b.cols for b in blocks[0])
    if any(len(r) != cols for r in rows):
        raise DimensionError("block columns do not line up")
    return RatMatrix._raw(tuple(rows), cols)


def hstack(*mats: RatMatrix) -> RatMatrix:
    return block_matrix([list(mats)])


def vec(A: RatMatrix) -> tuple[Fraction, ...]:
    return A.entries


def unvec(values: Sequence[Fraction], rows: int, cols: int) -> RatMatrix:
    return RatMatrix(rows, cols, values)


# ---------------------------------------------------------------------------
# elimination

def _rref_rows(data: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    M = [list(r) for r in data]
    pivots: list[int] = []
    r = 0
    nrows = len(M)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        prow = M[r]
        for i in range(nrows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], prow)]
        pivots.append(c)
        r += 1
    return M, pivots


def rref(A: RatMatrix) -> RatMatrix:
    """Reduced row echelon form."""
    M, _ = _rref_rows(A._data, A.cols)
    return RatMatrix._raw(tuple(tuple(r) for r in M), A.cols)


def pivot_columns(A: RatMatrix) -> list[int]:
    return _rref_rows(A._data, A.cols)[1]


def rank(A: RatMatrix) -> int:
    return len(pivot_columns(A))


def null_space_basis(A: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of ``{v : A v = 0}`` as column tuples, one per free variable."""
    M, pivots = _rref_rows(A._data, A.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(A.cols):
        if free in pivot_set:
            continue
        v = [_ZERO] * A.cols
        v[free] = _ONE
        for r, pc in enumerate(pivots):
            v[pc] = -M[r][free]
        basis.append(tuple(v))
    return basis


def column_space_basis(A: RatMatrix) -> list[tuple[Fraction, ...]]:
    """The pivot columns of ``A`` (a basis of its column space)."""
    return [A.column(j) for j in pivot_columns(A)]


def solve(A: RatMatrix, rhs: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
    """A particular solution of ``A x = rhs``, or ``None`` if inconsistent."""
    if len(rhs) != A.rows:
        raise DimensionError("right-hand side length mismatch")
    aug = [row + (to_rational(b),) for row, b in zip(A._data, rhs)]
    M, pivots = _rref_rows(aug, A.cols + 1)
    if pivots and pivots[-1] == A.cols:
        return None
    x = [_ZERO] * A.cols
    for r, pc in enumerate(pivots):
        x[pc] = M[r][A.cols]
    return tuple(x)


def inverse(A: RatMatrix) -> RatMatrix:
    """Exact inverse; raises :class:`NotInvertible` carrying the rank."""
    if not A.is_square():
        raise DimensionError("inverse needs a square matrix")
    n = A.rows
    ident = RatMatrix.identity(n)._data
    aug = [row + irow for row, irow in zip(A._data, ident)]
    M, pivots = _rref_rows(aug, 2 * n)
    left = [p for p in pivots if p < n]
    if len(left) < n:
        raise NotInvertible(len(left))
    return RatMatrix._raw(tuple(tuple(r[n:]) for r in M), n)


def is_invertible(A: RatMatrix) -> bool:
    return A.is_square() and rank(A) == A.rows


def det(A: RatMatrix) -> Fraction:
    if not A.is_square():
        raise DimensionError("determinant needs a square matrix")
    M = [list(r) for r in A._data]
    n = len(M)
    d = _ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return _ZERO
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = -d
        d *= M[c][c]
        inv = 1 / M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return d


def is_nilpotent(A: RatMatrix) -> bool:
    """True iff ``A**k == 0`` where ``k`` is the dimension."""
    if not A.is_square():
        raise DimensionError("nilpotency needs a square matrix")
    return mat_pow(A, A.rows).is_zero()


def nilpotency_degree(A: RatMatrix) -> int | None:
    """Smallest ``m >= 1`` with ``A**m == 0``, or ``None`` if not nilpotent."""
    if not is_nilpotent(A):
        return None
    P = A
    m = 1
    while not P.is_zero():
        P = P @ A
        m += 1
    return m


def commutes(X: RatMatrix, Y: RatMatrix) -> bool:
    return X @ Y == Y @ X


def commutant_basis(X: RatMatrix) -> list[RatMatrix]:
    """Basis of ``{Y : XY = YX}`` obtained from the k^2 x k^2 linear system."""
    if not X.is_square():
        raise DimensionError("commutant needs a square matrix")
    k = X.rows
    # row (i, j) of the system: sum_l X[i,l] Y[l,j] - Y[i,l] X[l,j]
    system = []
    for i in range(k):
        for j in range(k):
            row = [_ZERO] * (k * k)
            for l in range(k):
                row[l * k + j] += X[i, l]
                row[i * k + l] -= X[l, j]
            system.append(tuple(row))
    L = RatMatrix._raw(tuple(system), k * k)
    return [RatMatrix(k, k, v) for v in null_space_basis(L)]


def commutes_with_all(Y: RatMatrix, basis: Iterable[RatMatrix]) -> bool:
    return all(commutes(Y, Z) for Z in basis)


def is_linearly_independent(mats: Sequence[RatMatrix]) -> bool:
    if not mats:
        return True
    return rank(RatMatrix.from_columns([M.entries for M in mats])) == len(mats)


# ---------------------------------------------------------------------------
# polynomials

class RatPoly:
    """Polynomial with rational coefficients, lowest degree first.

    >>> RatPoly([-1, 0, 1]) // RatPoly([-1, 1])
    RatPoly([1, 1])
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_rational(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def x_power(cls, n: int) -> RatPoly:
        return cls([0] * n + [1])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def monic(self) -> RatPoly:
        if self.is_zero():
            return self
        lc = self.leading
        return RatPoly(c / lc for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: RatPoly) -> RatPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (_ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (_ZERO,) * (n - len(other.coeffs))
        return RatPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> RatPoly:
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other: RatPoly) -> RatPoly:
        return self + (-other)

    def __mul__(self, other: RatPoly) -> RatPoly:
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return RatPoly(out)

    def __floordiv__(self, other: RatPoly) -> RatPoly:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: RatPoly) -> RatPoly:
        return poly_divmod(self, other)[1]

    def __call__(self, x):
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, A: RatMatrix) -> RatMatrix:
        """Horner evaluation at a square matrix."""
        n = A.rows
        acc = RatMatrix.zeros(n)
        ident = RatMatrix.identity(n)
        for c in reversed(self.coeffs):
            acc = acc @ A + ident * c
        return acc

    def __repr__(self) -> str:
        return "RatPoly([" + ", ".join(format_rational(c) for c in self.coeffs) + "])"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            coef = "" if (mag == 1 and i > 0) else format_rational(mag)
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, coef + mono))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out


def poly_divmod(f: RatPoly, g: RatPoly) -> tuple[RatPoly, RatPoly]:
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    dg = g.degree
    lc = g.leading
    if f.degree < dg:
        return RatPoly(), f
    quot = [_ZERO] * (f.degree - dg + 1)
    for k in range(f.degree - dg, -1, -1):
        coef = rem[k + dg] / lc
        quot[k] = coef
        if coef:
            for j, gc in enumerate(g.coeffs):
                rem[k + j] -= coef * gc
    return RatPoly(quot), RatPoly(rem[:dg])


def poly_gcd(f: RatPoly, g: RatPoly) -> RatPoly:
    """Monic gcd by the Euclidean algorithm (``gcd(0, 0) = 0``)."""
    while not g.is_zero():
        f, g = g, poly_divmod(f, g)[1]
    return f.monic()


def char_poly(A: RatMatrix) -> RatPoly:
    """``det(xI - A)`` by the Faddeev-LeVerrier recurrence.

    With ``M_0 = 0``, ``c_n = 1``: ``M_k = A M_{k-1} + c_{n-k+1} I`` and
    ``c_{n-k} = -tr(A M_k) / k``.  All divisions are exact over Q.
    """
    if not A.is_square():
        raise DimensionError("characteristic polynomial needs a square matrix")
    n = A.rows
    ident = RatMatrix.identity(n)
    coeffs = [_ZERO] * (n + 1)
    coeffs[n] = _ONE
    M = RatMatrix.zeros(n)
    for k in range(1, n + 1):
        M = A @ M + ident * coeffs[n - k + 1]
        AM = A @ M
        coeffs[n - k] = -sum((AM[i, i] for i in range(n)), _ZERO) / k
    return RatPoly(coeffs)


def companion(f: RatPoly) -> RatMatrix:
    """Companion matrix of monic-normalized ``f`` (subdiagonal ones, last column ``-c``)."""
    f = f.monic()
    m = f.degree
    if m < 1:
        raise ValueError("companion matrix needs a polynomial of degree >= 1")
    rows = [[_ZERO] * m for _ in range(m)]
    for i in range(1, m):
        rows[i][i - 1] = _ONE
    for i in range(m):
        rows[i][m - 1] = -f.coeffs[i]
    return RatMatrix.from_rows(rows)


def cyclotomic(d: int) -> RatPoly:
    """The d-th cyclotomic polynomial, by dividing out proper divisors."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    f = RatPoly.x_power(d) - RatPoly([1])
    for e in range(1, d):
        if d % e == 0:
            f = poly_divmod(f, cyclotomic(e))[0]
    return f


def jordan_block(size: int, eigenvalue=0) -> RatMatrix:
    lam = to_rational(eigenvalue)
    return RatMatrix.from_rows([[lam if i == j else (_ONE if j == i + 1 else _ZERO) for j in range(size)] for i in range(size)])
