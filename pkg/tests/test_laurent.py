import pytest
from hypothesis import given, strategies as st

from modknot.errors import DimensionMismatch, NotDivisible
from modknot.laurent import (ONE, T, T_INV, ZERO, BivariatePoly, LaurentMatrix, LaurentPoly,
                             bivar_det, char_matrix, is_canonical, lp_div_exact, lp_mul,
                             mat_det, mat_det_packed, mat_mul, q_cyclotomic_bracket)

polys = st.builds(LaurentPoly, st.lists(st.integers(-5, 5), max_size=5), st.integers(-3, 3))
nonzero_polys = polys.filter(bool)


def mat_of(n, entries=polys):
    return st.lists(entries, min_size=n * n, max_size=n * n).map(lambda e: LaurentMatrix(n, n, e))


def P(d):
    return LaurentPoly.from_dict(d)


B1 = LaurentMatrix.from_rows([[1 - T, T], [ONE, ZERO]])
B1_INV = LaurentMatrix.from_rows([[ZERO, ONE], [T_INV, 1 - T_INV]])


class TestLaurentPoly:
    def test_canonical_zero(self):
        z = LaurentPoly([0, 0], 5)
        assert z.coeffs == () and z.min_exp == 0
        assert not z

    def test_trims_both_ends(self):
        p = LaurentPoly([0, 1, 2, 0], -2)
        assert p.coeffs == (1, 2) and p.min_exp == -1

    def test_str(self):
        assert str(P({2: 1, 1: -1, 0: 1})) == "t^2 - t + 1"
        assert str(P({3: 2})) == "2*t^3"
        assert str(ZERO) == "0"

    def test_int_equality(self):
        assert ONE == 1 and ZERO == 0 and T != 1

    def test_pow_and_unit_inverse(self):
        assert T ** -1 == T_INV
        assert (-T) ** 3 == -(T ** 3)
        with pytest.raises(NotDivisible):
            (1 + T) ** -1

    def test_evaluate(self):
        assert P({2: 1, 1: -1, 0: 1})(2) == 3
        assert T_INV(2) == pytest.approx(0.5)

    def test_invert_variable(self):
        assert (T + 2 * T ** 3).invert_variable() == T_INV + 2 * T ** -3

    @given(polys, st.integers(0, 30))
    def test_pack_roundtrip(self, p, extra):
        # balanced digits need 2^(bits-1) > every |coefficient|
        p = p.shift(-p.min_exp)
        bits = max([abs(c) for c in p.coeffs] + [1]).bit_length() + 1 + extra
        assert LaurentPoly.unpack(p.pack(bits), bits) == p


class TestArith:
    def test_mul_examples(self):
        assert lp_mul(1 - T, 1 + T) == 1 - T ** 2
        assert lp_mul(P({2: 1, 1: -1, 0: 1}), 1 + T) == 1 + T ** 3
        assert lp_mul(T_INV, T) == ONE

    def test_div_examples(self):
        tref = P({2: 1, 1: -1, 0: 1})
        assert lp_div_exact(1 + T ** 3, 1 + T) == tref
        assert lp_div_exact(tref, tref) == ONE
        with pytest.raises(NotDivisible):
            lp_div_exact(1 + T, 1 - T)

    def test_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            lp_div_exact(ONE, ZERO)

    def test_bracket(self):
        assert q_cyclotomic_bracket(1) == ONE
        assert q_cyclotomic_bracket(2) == 1 + T
        assert q_cyclotomic_bracket(5) == P({k: 1 for k in range(5)})

    @given(polys, nonzero_polys)
    def test_div_inverts_mul(self, a, b):
        assert lp_div_exact(lp_mul(a, b), b) == a

    @given(polys, polys, polys)
    def test_ring_laws_and_canonical(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        for x in (a + b, a - b, a * b, a.shift(2), -a):
            assert is_canonical(x)


class TestMatrices:
    def test_identity_product(self):
        m = LaurentMatrix.from_rows([[T, 1 - T, ONE], [ZERO, T ** 2, T_INV], [ONE, ONE, 2 * T]])
        assert mat_mul(LaurentMatrix.identity(3), m) == m

    def test_inverse_pair(self):
        assert mat_mul(B1, B1_INV) == LaurentMatrix.identity(2)

    def test_square(self):
        expect = LaurentMatrix.from_rows([[(1 - T) ** 2 + T, (1 - T) * T], [1 - T, T]])
        assert mat_mul(B1, B1) == expect

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            mat_mul(LaurentMatrix.identity(2), LaurentMatrix.identity(3))
        with pytest.raises(DimensionMismatch):
            mat_det(LaurentMatrix.zeros(2, 3))

    def test_det_examples(self):
        assert mat_det(B1) == -T
        assert mat_det(LaurentMatrix.identity(4)) == ONE
        assert mat_det(B1_INV) == -T_INV

    @given(mat_of(3), mat_of(3))
    def test_det_multiplicative(self, a, b):
        assert mat_det(a @ b) == mat_det(a) * mat_det(b)

    @given(st.integers(1, 5).flatmap(mat_of))
    def test_packed_matches_bareiss(self, m):
        assert mat_det_packed(m) == mat_det(m)

    def test_det_singular(self):
        m = LaurentMatrix.from_rows([[1 + T, T], [2 + 2 * T, 2 * T]])
        assert mat_det(m) == ZERO and mat_det_packed(m) == ZERO


class TestBivariate:
    def test_two_by_two(self):
        s = BivariatePoly.s()
        one = BivariatePoly.const(ONE)
        expect = (s - one) * (s + BivariatePoly.const(T))
        assert bivar_det(char_matrix(B1)) == expect

    def test_one_by_one(self):
        assert bivar_det(char_matrix(LaurentMatrix.identity(1))) == \
            BivariatePoly.s() - BivariatePoly.const(ONE)

    @given(st.integers(1, 4).flatmap(lambda n: mat_of(n, st.builds(
        LaurentPoly, st.lists(st.integers(-3, 3), max_size=3), st.integers(-1, 1)))))
    def test_at_one_matches_univariate(self, m):
        n = m.rows
        assert bivar_det(char_matrix(m)).at_s(1) == mat_det(LaurentMatrix.identity(n) - m)

    def test_div_exact(self):
        s = BivariatePoly.s()
        a = s * s + BivariatePoly.const(T) * s
        assert a.div_exact(s) == s + BivariatePoly.const(T)
