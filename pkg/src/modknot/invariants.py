"""Rademacher symbol, linking with the trefoil, and a class-number formula."""

from __future__ import annotations

from typing import Sequence

from .errors import BadPrime, NotDivisibleBy3, OddPeriod
from .quad import QuadraticSurd, cf_expand
from .words import period_from_word


def rademacher(period: Sequence[int]) -> int:
    """Alternating sum c_1 - c_2 + c_3 - ... of an even period."""
    if len(period) % 2:
        raise OddPeriod(f"period {tuple(period)} has odd length")
    return sum(c if i % 2 == 0 else -c for i, c in enumerate(period))


def linking_with_trefoil(w: str) -> int:
    """Linking number of the modular knot of w with the trefoil; #L - #R."""
    return rademacher(period_from_word(w))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _check_prime(p: int):
    if p <= 3 or p % 4 != 3 or not _is_prime(p):
        raise BadPrime(f"need a prime p > 3 with p = 3 mod 4, got {p}")


def sqrt_period(p: int) -> tuple:
    """Period (c_1, ..., c_2l) of sqrt(p) = [c_0; overline(c_1, ..., c_2l)]."""
    cf = cf_expand(QuadraticSurd(0, p, 1), even=False)
    if len(cf.period) % 2:
        raise OddPeriod(f"sqrt({p}) has an odd period")
    return cf.period


def sqrt_word(p: int) -> str:
    """L^c2 R^c3 ... L^c2l R^c1 built from the period of sqrt(p)."""
    c = sqrt_period(p)
    rot = c[1:] + c[:1]
    return "".join(("L" if i % 2 == 0 else "R") * x for i, x in enumerate(rot))


def hz_class_number(p: int) -> int:
    """h(-p) as (1/3) sum_j (-1)^j c_j over the period of sqrt(p).

    Valid when Q(sqrt(p)) has class number 1 in the wide sense; the caller
    vouches for that.  A sum not divisible by 3 means the hypothesis fails.
    """
    _check_prime(p)
    c = sqrt_period(p)
    total = sum(x if j % 2 == 0 else -x for j, x in enumerate(c, 1))
    if total % 3:
        raise NotDivisibleBy3(f"alternating sum {total} for p = {p} is not divisible by 3")
    return total // 3
