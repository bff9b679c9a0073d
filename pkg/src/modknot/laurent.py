"""Exact arithmetic in Z[t, 1/t]: Laurent polynomials, matrices over them,
polynomials in a second variable ``s`` and fraction-free determinants.

Coefficients are Python ints, so nothing overflows.  Values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DimensionMismatch, NotDivisible


class LaurentPoly:
    """Element of Z[t, 1/t] stored as a dense ascending coefficient tuple.

    ``coeffs[i]`` is the coefficient of ``t**(min_exp + i)``.  The stored
    form is canonical: no zero at either end, and the zero polynomial is
    ``coeffs == ()`` with ``min_exp == 0``.
    """

    __slots__ = ("min_exp", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), min_exp: int = 0):
        c = [int(x) for x in coeffs]
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        hi = len(c)
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "coeffs", ())
            object.__setattr__(self, "min_exp", 0)
        else:
            object.__setattr__(self, "coeffs", tuple(c[lo:hi]))
            object.__setattr__(self, "min_exp", min_exp + lo)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> "LaurentPoly":
        return cls((coeff,), exp)

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls((c,), 0)

    @classmethod
    def from_dict(cls, terms: dict) -> "LaurentPoly":
        """Build from ``{exponent: coefficient}``."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    @staticmethod
    def coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        return NotImplemented

    # -- basic queries ------------------------------------------------------

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1 if self.coeffs else 0

    @property
    def span(self) -> int:
        """max_exp - min_exp; the degree once the lowest power is divided out."""
        return len(self.coeffs) - 1 if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def coeff(self, e: int) -> int:
        i = e - self.min_exp
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def terms(self) -> dict:
        return {self.min_exp + i: c for i, c in enumerate(self.coeffs) if c}

    def l1_norm(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_exp, self.coeffs))

    # -- ring operations ----------------------------------------------------

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.min_exp)

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs, self.min_exp - lo):
            out[i] += c
        for i, c in enumerate(other.coeffs, other.min_exp - lo):
            out[i] += c
        return LaurentPoly(out, lo)

    __radd__ = __add__

    def __sub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly([c * other for c in self.coeffs], self.min_exp)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LaurentPoly()
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, bj in enumerate(b):
            if bj:
                for i, ai in enumerate(a):
                    out[i + j] += ai * bj
        return LaurentPoly(out, self.min_exp + other.min_exp)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial() or abs(self.coeffs[0]) != 1:
                raise NotDivisible(f"{self} is not a unit")
            c = self.coeffs[0]
            return LaurentPoly.monomial(c ** (-k), self.min_exp * k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.min_exp + k)

    def invert_variable(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        return LaurentPoly(reversed(self.coeffs), -self.max_exp)

    def __call__(self, x):
        """Evaluate at an int or Fraction (exact)."""
        if not self.coeffs:
            return 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.min_exp >= 0:
            return acc * x ** self.min_exp
        return acc * Fraction(1, 1) / Fraction(x) ** (-self.min_exp)

    # -- division -----------------------------------------------------------

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        return lp_div_exact(self, other)

    def __truediv__(self, other):
        other = LaurentPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return lp_div_exact(self, other)

    def __floordiv__(self, other):
        return self.__truediv__(other)

    # -- Kronecker packing ----------------------------------------------------

    def pack(self, bits: int) -> int:
        """Value at t = 2**bits of the polynomial part (requires min_exp >= 0)."""
        if not self.coeffs:
            return 0
        if self.min_exp < 0:
            raise ValueError("pack needs non-negative exponents")
        v = 0
        for c in reversed(self.coeffs):
            v = (v << bits) + c
        return v << (bits * self.min_exp)

    @classmethod
    def unpack(cls, value: int, bits: int) -> "LaurentPoly":
        """Inverse of ``pack`` for coefficients of absolute value < 2**(bits-1)."""
        mask = (1 << bits) - 1
        half = 1 << (bits - 1)
        out = []
        while value:
            r = value & mask
            if r >= half:
                r -= 1 << bits
            out.append(r)
            value = (value - r) >> bits
        return cls(out, 0)

    # -- display ------------------------------------------------------------

    def __repr__(self):
        return f"LaurentPoly({list(self.coeffs)!r}, min_exp={self.min_exp})"

    def __str__(self):
        return format_poly(self.terms())


def format_poly(terms: dict, var: str = "t") -> str:
    """Render ``{exp: coeff}`` highest power first, e.g. ``t^2 - t + 1``."""
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mon = var if e == 1 else f"{var}^{e}"
            body = mon if a == 1 else f"{a}*{mon}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.monomial(1, 1)
T_INV = LaurentPoly.monomial(1, -1)


def is_canonical(p: LaurentPoly) -> bool:
    """Normalization audit: the stored representation is the canonical one."""
    if not p.coeffs:
        return p.min_exp == 0
    return p.coeffs[0] != 0 and p.coeffs[-1] != 0


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return q with q*b == a, or raise NotDivisible."""
    if not b.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a.coeffs:
        return ZERO
    bc = b.coeffs
    if len(bc) == 1:
        d = bc[0]
        q = []
        for c in a.coeffs:
            if c % d:
                raise NotDivisible(f"{a} is not divisible by {b}")
            q.append(c // d)
        return LaurentPoly(q, a.min_exp - b.min_exp)
    # both polynomial parts have non-zero constant terms, so Laurent
    # divisibility is ordinary divisibility in Z[t]
    rem = list(a.coeffs)
    nb = len(bc)
    nq = len(rem) - nb + 1
    if nq <= 0:
        raise NotDivisible(f"{a} is not divisible by {b}")
    lead = bc[-1]
    q = [0] * nq
    for k in range(nq - 1, -1, -1):
        c = rem[k + nb - 1]
        if c:
            if c % lead:
                raise NotDivisible(f"{a} is not divisible by {b}")
            f = c // lead
            q[k] = f
            for i, bi in enumerate(bc):
                rem[k + i] -= f * bi
    if any(rem):
        raise NotDivisible(f"{a} is not divisible by {b}")
    return LaurentPoly(q, a.min_exp - b.min_exp)


def q_cyclotomic_bracket(n: int) -> LaurentPoly:
    """[n]_t = 1 + t + ... + t^(n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return LaurentPoly([1] * n)


# -- matrices ----------------------------------------------------------------


class LaurentMatrix:
    """Dense matrix over Z[t, 1/t]; ``entries`` is row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[LaurentPoly]):
        entries = tuple(LaurentPoly.coerce(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "LaurentMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "LaurentMatrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    @property
    def shape(self):
        return self.rows, self.cols

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return LaurentMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return LaurentMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __matmul__(self, other):
        return mat_mul(self, other)

    def map(self, f: Callable) -> "LaurentMatrix":
        return LaurentMatrix(self.rows, self.cols, [f(e) for e in self.entries])

    def evaluate(self, x) -> list:
        """Entrywise evaluation at t = x, as a list of rows."""
        return [[e(x) for e in self.row(i)] for i in range(self.rows)]

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(self.cols, self.rows,
                             [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in r) for r in self.to_rows())
        return f"LaurentMatrix({self.rows}x{self.cols}: [{body}])"


def mat_mul(a: LaurentMatrix, b: LaurentMatrix) -> LaurentMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    out = []
    brows = b.to_rows()
    for i in range(a.rows):
        acc = [ZERO] * b.cols
        for k, aik in enumerate(a.row(i)):
            if aik:
                for j, bkj in enumerate(brows[k]):
                    if bkj:
                        acc[j] = acc[j] + aik * bkj
        out.extend(acc)
    return LaurentMatrix(a.rows, b.cols, out)


def _bareiss(a: list, exact_div: Callable) -> object:
    """Fraction-free Gaussian elimination on a square list-of-lists (mutated).

    Works over any integral domain whose elements support ``*``, ``-`` and
    truthiness-as-nonzero; ``exact_div`` performs the exact divisions.
    """
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        piv = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                v = rowi[j] * piv
                if aik and rowk[j]:
                    v = v - aik * rowk[j]
                rowi[j] = v if prev is None else exact_div(v, prev)
        prev = piv
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def _clear_negative_exponents(m: LaurentMatrix):
    """Scale rows by powers of t so every exponent is >= 0."""
    rows = []
    total = 0
    for r in m.to_rows():
        lo = min((e.min_exp for e in r if e), default=0)
        s = -lo if lo < 0 else 0
        total += s
        rows.append([e.shift(s) for e in r])
    return rows, total


def mat_det(m: LaurentMatrix) -> LaurentPoly:
    """Determinant by Bareiss elimination over Z[t] with exact division."""
    if m.rows != m.cols:
        raise DimensionMismatch(f"determinant of a non-square {m.shape} matrix")
    rows, total = _clear_negative_exponents(m)
    det = _bareiss(rows, lp_div_exact)
    det = LaurentPoly.coerce(det) if not isinstance(det, LaurentPoly) else det
    return det.shift(-total)


def _int_exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise NotDivisible("non-exact integer division inside Bareiss")
    return q


def mat_det_packed(m: LaurentMatrix) -> LaurentPoly:
    """Same determinant as ``mat_det``, with polynomials packed into big ints.

    Every entry is evaluated at t = 2**bits, where 2**(bits-1) exceeds the
    product over rows of the row's total coefficient mass.  That product
    bounds the coefficients of every minor, so each Bareiss intermediate
    (itself a minor) stays exactly recoverable and the integer elimination
    mirrors the polynomial one.
    """
    if m.rows != m.cols:
        raise DimensionMismatch(f"determinant of a non-square {m.shape} matrix")
    if m.rows == 0:
        return ONE
    rows, total = _clear_negative_exponents(m)
    bound = 1
    for r in rows:
        bound *= max(1, sum(e.l1_norm() for e in r))
    bits = bound.bit_length() + 2
    packed = [[e.pack(bits) for e in r] for r in rows]
    det = _bareiss(packed, _int_exact_div)
    return LaurentPoly.unpack(det, bits).shift(-total)


# -- polynomials in s over Z[t, 1/t] -------------------------------------------


class BivariatePoly:
    """Polynomial in ``s`` with Laurent-polynomial coefficients in ``t``.

    ``terms`` maps s-exponent to a non-zero LaurentPoly.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        object.__setattr__(self, "terms", {k: v for k, v in (terms or {}).items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePoly is immutable")

    @classmethod
    def s(cls) -> "BivariatePoly":
        return cls({1: ONE})

    @classmethod
    def const(cls, p) -> "BivariatePoly":
        return cls({0: LaurentPoly.coerce(p)})

    @property
    def degree(self) -> int:
        return max(self.terms) if self.terms else -1

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __neg__(self):
        return BivariatePoly({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return BivariatePoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return BivariatePoly({k: v * other for k, v in self.terms.items()})
        out: dict = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                p = a * b
                out[i + j] = out[i + j] + p if i + j in out else p
        return BivariatePoly(out)

    __rmul__ = __mul__

    def coeff(self, k: int) -> LaurentPoly:
        return self.terms.get(k, ZERO)

    def at_s(self, x: int) -> LaurentPoly:
        acc = ZERO
        for k, v in self.terms.items():
            acc = acc + v * (x ** k)
        return acc

    def div_exact(self, other: "BivariatePoly") -> "BivariatePoly":
        """Exact long division in s; leading coefficients divide exactly."""
        if not other.terms:
            raise ZeroDivisionError("division by zero")
        rem = dict(self.terms)
        db = other.degree
        lead = other.terms[db]
        q: dict = {}
        while rem:
            dr = max(rem)
            if dr < db:
                raise NotDivisible("non-zero remainder in s")
            f = lp_div_exact(rem[dr], lead)
            q[dr - db] = f
            for k, v in other.terms.items():
                key = dr - db + k
                nv = rem.get(key, ZERO) - f * v
                if nv:
                    rem[key] = nv
                else:
                    rem.pop(key, None)
        return BivariatePoly(q)

    def __repr__(self):
        inner = " + ".join(f"({v})*s^{k}" for k, v in sorted(self.terms.items(), reverse=True))
        return f"BivariatePoly({inner or '0'})"


def char_matrix(m: LaurentMatrix) -> list:
    """The matrix s*I - m with BivariatePoly entries."""
    if m.rows != m.cols:
        raise DimensionMismatch("characteristic matrix of a non-square matrix")
    out = []
    for i in range(m.rows):
        row = []
        for j in range(m.cols):
            e = BivariatePoly.const(-m[i, j])
            if i == j:
                e = e + BivariatePoly.s()
            row.append(e)
        out.append(row)
    return out


def bivar_det(m: Sequence[Sequence[BivariatePoly]]) -> BivariatePoly:
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionMismatch("bivariate determinant of a non-square matrix")
    rows = [list(r) for r in m]
    if n == 0:
        return BivariatePoly.const(1)
    det = _bareiss(rows, lambda a, b: a.div_exact(b))
    return det
