"""Indefinite binary quadratic forms, real quadratic surds and their
periodic continued fractions.

All arithmetic is exact; floors of surds use ``math.isqrt``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple, Sequence

from .errors import NotIndefinite, OddPeriod, ParseError


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


class QuadraticForm(NamedTuple):
    """a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return discriminant(self)

    @classmethod
    def parse(cls, text: str) -> "QuadraticForm":
        try:
            a, b, c = (int(x) for x in text.split(","))
        except ValueError:
            raise ParseError(f"expected 'a,b,c', got {text!r}") from None
        return cls(a, b, c)

    def __str__(self):
        terms = []
        for coef, mon in ((self.a, "x^2"), (self.b, "xy"), (self.c, "y^2")):
            if coef == 0:
                continue
            sign = "-" if coef < 0 else "+"
            mag = "" if abs(coef) == 1 else str(abs(coef))
            terms.append((sign, mag + mon))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


def discriminant(q: QuadraticForm) -> int:
    return q.b * q.b - 4 * q.a * q.c


@dataclass(frozen=True)
class QuadraticSurd:
    """The real number (P + sqrt(D)) / Q, with Q dividing D - P^2.

    Equality compares values, so differently scaled triples of the same
    number are equal.  ``reduced()`` gives the smallest-integer display form.
    """

    P: int
    D: int
    Q: int

    def __post_init__(self):
        if self.D <= 0 or is_square(self.D):
            raise NotIndefinite(f"D = {self.D} must be positive and non-square")
        if self.Q == 0:
            raise ZeroDivisionError("Q must be non-zero")
        if (self.D - self.P * self.P) % self.Q:
            raise ValueError("Q must divide D - P^2; use QuadraticSurd.make")

    @classmethod
    def make(cls, P: int, D: int, Q: int) -> "QuadraticSurd":
        """Build (P + sqrt(D))/Q, rescaling so that Q | D - P^2."""
        if Q == 0:
            raise ZeroDivisionError("Q must be non-zero")
        if (D - P * P) % Q:
            k = abs(Q)
            P, D, Q = P * k, D * k * k, Q * k
        return cls(P, D, Q)

    def _key(self):
        return Fraction(self.P, self.Q), Fraction(self.D, self.Q * self.Q), self.Q > 0

    def __eq__(self, other):
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def floor(self) -> int:
        s = isqrt(self.D)
        if self.Q > 0:
            return (self.P + s) // self.Q
        # sqrt(D) is irrational, so the value is never an integer
        return -((self.P + s) // -self.Q) - 1

    def conjugate(self) -> "QuadraticSurd":
        """(P - sqrt(D))/Q, written as (-P + sqrt(D))/(-Q)."""
        return QuadraticSurd(-self.P, self.D, -self.Q)

    def reduced(self) -> tuple:
        """(P, D, Q) divided by the largest g with g | P, g | Q, g^2 | D."""
        P, D, Q = self.P, self.D, self.Q
        g = gcd(P, Q)
        best = 1
        d = 1
        while d * d <= g:
            if g % d == 0:
                for h in (d, g // d):
                    if h > best and D % (h * h) == 0:
                        best = h
            d += 1
        return P // best, D // (best * best), Q // best

    def __float__(self):
        return (self.P + self.D ** 0.5) / self.Q

    def __str__(self):
        P, D, Q = self.reduced()
        return f"({P} + sqrt({D}))/{Q}"


@dataclass(frozen=True)
class PeriodicCF:
    """[a_1, ..., a_k, overline(c_1, ..., c_m)]."""

    preperiod: tuple
    period: tuple

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))

    def terms(self, n: int) -> list:
        """First n partial quotients."""
        out = list(self.preperiod[:n])
        i = 0
        while len(out) < n:
            out.append(self.period[i % len(self.period)])
            i += 1
        return out

    def __str__(self):
        head = ", ".join(str(a) for a in self.preperiod)
        body = ", ".join(str(c) for c in self.period)
        return f"[{head}{'; ' if head else ''}({body})]"


class Sl2Matrix(NamedTuple):
    """(a b; c d) with ad - bc = 1."""

    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, o: "Sl2Matrix") -> "Sl2Matrix":
        return Sl2Matrix(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                         self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d


IDENTITY = Sl2Matrix(1, 0, 0, 1)


def principal_root(q: QuadraticForm) -> QuadraticSurd:
    """w_Q = (-b + sqrt(D)) / (2a)."""
    D = discriminant(q)
    if D <= 0 or is_square(D):
        raise NotIndefinite(f"discriminant {D} of {tuple(q)} is not a positive non-square")
    if q.a == 0:
        raise NotIndefinite("a = 0")
    return QuadraticSurd.make(-q.b, D, 2 * q.a)


def cf_expand(w: QuadraticSurd, even: bool = True) -> PeriodicCF:
    """Continued fraction of a quadratic surd.

    With ``even=False`` the minimal preperiod and minimal period are
    returned.  Otherwise an odd minimal period is doubled and an odd
    preperiod takes over the first period term, so both lengths are even.
    """
    P, D, Q = w.P, w.D, w.Q
    s = isqrt(D)
    seen: dict = {}
    terms = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(terms)
        if Q > 0:
            a = (P + s) // Q
        else:
            a = -((P + s) // -Q) - 1
        terms.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    start = seen[(P, Q)]
    pre, per = terms[:start], terms[start:]
    if not even:
        return PeriodicCF(pre, per)
    if len(per) % 2:
        per = per + per
    if len(pre) % 2:
        pre = pre + [per[0]]
        per = per[1:] + per[:1]
    return PeriodicCF(pre, per)


def _check_period(period: Sequence[int]) -> tuple:
    period = tuple(int(c) for c in period)
    if len(period) % 2:
        raise OddPeriod(f"period {period} has odd length")
    if any(c < 1 for c in period):
        raise ValueError("period entries must be positive")
    return period


def tv_product(period: Sequence[int]) -> Sl2Matrix:
    """T^c1 V^c2 T^c3 ... V^c2l with T = (1 1; 0 1), V = (1 0; 1 1)."""
    period = _check_period(period)
    m = IDENTITY
    for i, c in enumerate(period):
        m = m @ (Sl2Matrix(1, c, 0, 1) if i % 2 == 0 else Sl2Matrix(1, 0, c, 1))
    return m


def surd_from_period(period: Sequence[int]) -> QuadraticSurd:
    """The purely periodic surd [overline(c_1, ..., c_2l)]."""
    period = _check_period(period)
    if not period:
        raise OddPeriod("empty period")
    g = tv_product(period)
    # attracting fixed point of x -> (ax + b)/(cx + d)
    return QuadraticSurd.make(g.a - g.d, (g.d - g.a) ** 2 + 4 * g.b * g.c, 2 * g.c)


def form_from_period(period: Sequence[int]) -> QuadraticForm:
    period = _check_period(period)
    if not period:
        raise OddPeriod("empty period")
    g = tv_product(period)
    return QuadraticForm(g.c, g.d - g.a, -g.b)
