"""Alexander polynomials of closed braids.

The production route is det(I - reduced Burau) / [n]_t, with the
determinant taken by fraction-free elimination over Z[t, 1/t].
``alexander_unreduced_check`` recomputes the same polynomial from the
full Burau matrix through det(sI - B), as an independent check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .braid import (Braid, LorenzSpec, braid_permutation, cycles, exponent_sum,
                    lorenz_braid, modular_braid)
from .burau import FULL, REDUCED, burau
from .errors import NotAKnot, NotDivisible, OddDegree, PrecondViolated
from .laurent import (ONE, T, LaurentMatrix, LaurentPoly, BivariatePoly, bivar_det,
                      char_matrix, format_poly, lp_div_exact, mat_det,
                      q_cyclotomic_bracket)

# largest strand count accepted by the bivariate cross-check
UNREDUCED_MAX_STRANDS = 12


@dataclass(frozen=True)
class AlexanderPoly:
    """Normalized Alexander polynomial; ``coeffs[k]`` multiplies t^k."""

    coeffs: tuple

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "AlexanderPoly":
        """Multiply by the unit +-t^k that puts the lowest term at t^0 with a
        positive coefficient."""
        if p.is_zero():
            return cls(())
        c = p.coeffs
        if c[0] < 0:
            c = tuple(-x for x in c)
        return cls(c)

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_reciprocal(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def at_one(self) -> int:
        return sum(self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data) -> "AlexanderPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["coeffs"]))

    def __str__(self):
        return format_poly({k: c for k, c in enumerate(self.coeffs) if c})


def _require_knot(b: Braid):
    k = len(cycles(braid_permutation(b)))
    if k != 1:
        raise NotAKnot(f"closure of the braid has {k} components")


def alexander_raw(b: Braid, det=mat_det) -> LaurentPoly:
    """det(I - reduced Burau(b)) / [n]_t before normalization.

    ``det`` may be swapped for ``mat_det_packed``, which gives the same
    result faster on large braids.
    """
    _require_knot(b)
    n = b.strands
    if n == 1:
        return ONE
    m = LaurentMatrix.identity(n - 1) - burau(b, REDUCED)
    return lp_div_exact(det(m), q_cyclotomic_bracket(n))


def alexander(b: Braid, det=mat_det) -> AlexanderPoly:
    p = AlexanderPoly.from_laurent(alexander_raw(b, det))
    if not p.is_reciprocal():
        raise NotDivisible(f"non-reciprocal result {p}; computation is inconsistent")
    return p


def alexander_of_spec(spec: LorenzSpec) -> AlexanderPoly:
    return alexander(lorenz_braid(spec))


def alexander_of_word(w: str) -> AlexanderPoly:
    return alexander(modular_braid(w))


def alexander_unreduced_check(b: Braid, max_strands: int = UNREDUCED_MAX_STRANDS) -> AlexanderPoly:
    """Same polynomial from det(sI - B(b)) / (s - 1) at s = 1, over [n]_t."""
    _require_knot(b)
    n = b.strands
    if n > max_strands:
        raise PrecondViolated(f"{n} strands exceeds the cross-check bound {max_strands}")
    chi = bivar_det(char_matrix(burau(b, FULL)))
    s_minus_1 = BivariatePoly.s() - BivariatePoly.const(ONE)
    q = chi.div_exact(s_minus_1).at_s(1)
    return AlexanderPoly.from_laurent(lp_div_exact(q, q_cyclotomic_bracket(n)))


def alexander_degree_formula(spec: LorenzSpec) -> int:
    """sum_j P_j q_j - (P_r + Q_r) + 1."""
    return spec.crossings() - spec.strands + 1


def genus(p: AlexanderPoly) -> int:
    if p.degree % 2:
        raise OddDegree(f"degree {p.degree} is odd")
    return max(p.degree, 0) // 2


def symmetry_defect(b: Braid) -> bool:
    """Check D(1/t) == (-t)^(n - 1 - e) D(t) for the raw quotient D, where e is
    the exponent sum, and that e - n + 1 is even."""
    raw = alexander_raw(b)
    k = b.strands - 1 - exponent_sum(b)
    unit = LaurentPoly.monomial(-1 if k % 2 else 1, k)
    return raw.invert_variable() == unit * raw and k % 2 == 0


# -- closed forms -------------------------------------------------------------


def _mono(e: int, c: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(c, e)


def _one_minus(e: int) -> LaurentPoly:
    return ONE - _mono(e)


def torus_alexander(p: int, q: int) -> AlexanderPoly:
    """(1 - t)(1 - t^pq) / ((1 - t^p)(1 - t^q))."""
    num = _one_minus(1) * _one_minus(p * q)
    return AlexanderPoly.from_laurent(lp_div_exact(num, _one_minus(p) * _one_minus(q)))


def family_a_spec(n: int) -> LorenzSpec:
    return LorenzSpec.of(2, n, 3, 4, n + 2, 2)


def family_a_word(n: int) -> str:
    """L^(m+1) R^(m+1) L R^(m+1) L R L R L^m R with m = n/2 + 1."""
    m = n // 2 + 1
    return "L" * (m + 1) + "R" * (m + 1) + "L" + "R" * (m + 1) + "LRLR" + "L" * m + "R"


def family_A_oracle(n: int) -> AlexanderPoly:
    """Closed form for the Lorenz knots L(2,n; 3,4; n+2,2), n even."""
    if n < 2 or n % 2:
        raise PrecondViolated(f"n must be even and >= 2, got {n}")
    terms = [(0, 1), (1, 1), (2, -1), (3, -1), (5, 1), (9, -1), (10, 1),
             (n + 6, 1), (n + 10, -1), (n + 11, 1), (n + 13, 1), (n + 14, -1), (n + 18, 1),
             (2 * n + 14, 1), (2 * n + 15, -1), (2 * n + 19, 1), (2 * n + 21, -1),
             (2 * n + 22, -1), (2 * n + 23, 1), (2 * n + 24, 1)]
    num = LaurentPoly()
    for e, c in terms:
        num = num + _mono(e, c)
    return AlexanderPoly.from_laurent(lp_div_exact(num, (ONE + T) * (ONE + T)))


def family_b_spec(n: int) -> LorenzSpec:
    return LorenzSpec.of(n, n, n + 1, 2 * n)


def family_b_word(n: int) -> str:
    """(LLR)^n (LR)^n R."""
    return "LLR" * n + "LR" * n + "R"


def _geometric(exps) -> LaurentPoly:
    out = LaurentPoly()
    for e in exps:
        out = out + _mono(e)
    return out


def family_B_oracle(n: int) -> AlexanderPoly:
    """Closed form for the Lorenz knots L(n,n; n+1,2n)."""
    if n < 1:
        raise PrecondViolated(f"n must be positive, got {n}")
    s1 = _geometric(3 * n * j for j in range(1, n))
    s2 = _geometric((3 * n + 1) * j - n for j in range(1, n))
    inner = _one_minus(n * (5 * n + 1)) + _one_minus(n * (2 * n + 1)) * s1 \
        - _one_minus(2 * n * (n + 1)) * s2
    num = _one_minus(1) * inner
    den = _one_minus(2 * n + 1) * _one_minus(2 * n)
    return AlexanderPoly.from_laurent(lp_div_exact(num, den))


def family_B_product_form(n: int) -> AlexanderPoly:
    """The same polynomial from the factored expression
    (1-t)/(1-t^n) * (X~ Y - X Y~) / ((1-t^(2n+1))(1-t^(2n)))."""
    x = _one_minus(n * (5 * n + 1)) - _one_minus(n) * _geometric(
        2 * n * n + (3 * n + 1) * j for j in range(1, n))
    y = _one_minus(n * (5 * n + 1)) - _one_minus(n) * _geometric(
        2 * n * n + (3 * j + 1) * n for j in range(1, n))
    xt = _one_minus(n * (2 * n + 1))
    yt = _one_minus(2 * n * (n + 1))
    num = _one_minus(1) * (xt * y - x * yt)
    den = _one_minus(n) * _one_minus(2 * n + 1) * _one_minus(2 * n)
    return AlexanderPoly.from_laurent(lp_div_exact(num, den))
