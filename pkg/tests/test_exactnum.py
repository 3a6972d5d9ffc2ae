import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from wittzeta.exactnum import (
    NotDivisibleError,
    Polynomial,
    ValuationContext,
    deflate,
    eval_at,
    inverse_root_multiplicity,
    is_prime,
    newton_slopes,
    ord_p,
    power_sums,
    reciprocal_twist,
    scale_roots,
    slope_multiplicities,
    tensor_poly,
)

F = Fraction
F5 = ValuationContext(5, 1)

nonzero_rationals = st.builds(
    F,
    st.integers(-9, 9).filter(lambda n: n != 0),
    st.integers(1, 9),
)
root_lists = st.lists(nonzero_rationals, min_size=0, max_size=4)


def poly_of(*coeffs):
    return Polynomial([F(c) for c in coeffs])


class TestOrdP:
    def test_factor_exponent(self):
        assert ord_p(F(5, 4), 5) == 1

    def test_zero_is_infinite(self):
        assert ord_p(0, 5) == math.inf

    def test_unit(self):
        assert ord_p(F(9, 4), 5) == 0

    def test_denominator(self):
        assert ord_p(F(3, 25), 5) == -2

    @given(nonzero_rationals, nonzero_rationals)
    def test_multiplicative(self, x, y):
        assert ord_p(x * y, 5) == ord_p(x, 5) + ord_p(y, 5)

    def test_context_checks_primality(self):
        with pytest.raises(ValueError):
            ValuationContext(4, 1)
        with pytest.raises(ValueError):
            ValuationContext(5, 0)

    def test_ord_q_normalization(self):
        ctx = ValuationContext(5, 2)
        assert ctx.q == 25
        assert ctx.ord_q(25) == 1
        assert ctx.ord_q(5) == F(1, 2)

    def test_is_prime_small(self):
        assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


class TestPolynomialBasics:
    def test_requires_unit_constant_term(self):
        with pytest.raises(ValueError):
            Polynomial([2, 1])
        with pytest.raises(ValueError):
            Polynomial([])

    def test_trims_trailing_zeros(self):
        assert poly_of(1, 3, 0, 0) == poly_of(1, 3)
        assert poly_of(1, 3, 0, 0).degree == 1

    def test_multiplication(self):
        assert poly_of(1, -1) * poly_of(1, -5) == poly_of(1, -6, 5)

    def test_power(self):
        assert poly_of(1, -1) ** 2 == poly_of(1, -2, 1)
        assert poly_of(1, -1) ** 0 == Polynomial.one()

    def test_from_inverse_roots(self):
        assert Polynomial.from_inverse_roots([1, 5]) == poly_of(1, -6, 5)
        assert Polynomial.from_inverse_roots([]) == Polynomial.one()

    def test_str(self):
        assert str(poly_of(1, 3, 5)) == "1 + 3t + 5t^2"
        assert str(poly_of(1, F(-1, 5))) == "1 - (1/5)t"


class TestEvalAt:
    def test_hand_sum(self):
        assert eval_at(poly_of(1, 3, 5), 1) == 9

    def test_root(self):
        assert eval_at(poly_of(1, -5), F(1, 5)) == 0

    def test_normalization_at_zero(self):
        assert eval_at(poly_of(1, 7, -2, 9), 0) == 1


class TestNewtonSlopes:
    def test_ordinary_quadratic(self):
        # points (0,0),(1,0),(2,1): exactly one 5-adic unit root
        assert newton_slopes(poly_of(1, 3, 5), F5) == (0, 1)

    def test_supersingular_quadratic(self):
        assert newton_slopes(poly_of(1, 0, 5), F5) == (F(1, 2), F(1, 2))

    def test_linear(self):
        assert newton_slopes(poly_of(1, -1), F5) == (0,)

    def test_zero_coefficient_skipped(self):
        # 1 + 25t^2 + 5t^4: hull (0,0)-(2,2)-(4,1)? no: lower hull is
        # (0,0)-(4,1), giving four slopes 1/4
        assert newton_slopes(poly_of(1, 0, 25, 0, 5), F5) == (F(1, 4),) * 4

    def test_extension_field_normalization(self):
        ctx = ValuationContext(5, 2)
        assert newton_slopes(poly_of(1, -5), ctx) == (F(1, 2),)

    @given(root_lists)
    def test_known_root_oracle(self, roots):
        # slopes of prod(1 - a t) must be the multiset of ord_q(a)
        P = Polynomial.from_inverse_roots(roots)
        expected = tuple(sorted(F(ord_p(a, 5)) for a in roots))
        assert newton_slopes(P, F5) == expected

    @given(root_lists)
    def test_slope_sum_is_leading_valuation(self, roots):
        P = Polynomial.from_inverse_roots(roots)
        d = P.degree
        total = sum(newton_slopes(P, F5), F(0))
        assert total == ord_p(P.coefficient(d), 5) if d else total == 0

    def test_multiplicity_aggregation(self):
        assert slope_multiplicities(poly_of(1, 0, 5), F5) == ((F(1, 2), 2),)
        assert slope_multiplicities(poly_of(1, 3, 5), F5) == ((0, 1), (1, 1))


class TestInverseRootMultiplicity:
    def test_simple_root(self):
        assert inverse_root_multiplicity(poly_of(1, -5), 5) == 1

    def test_double_root(self):
        assert inverse_root_multiplicity(poly_of(1, -1) ** 2, 1) == 2

    def test_nonroot(self):
        assert inverse_root_multiplicity(poly_of(1, 3, 5), 1) == 0

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            inverse_root_multiplicity(poly_of(1, -1), 0)


class TestDeflate:
    def test_removes_factor(self):
        P = poly_of(1, -1) * poly_of(1, -5)
        assert deflate(P, 5, 1) == poly_of(1, -1)

    def test_identity_at_zero(self):
        P = poly_of(1, 3, 5)
        assert deflate(P, 7, 0) == P

    def test_full_deflation(self):
        assert deflate(poly_of(1, -1) ** 2, 1, 2) == Polynomial.one()

    def test_not_divisible(self):
        with pytest.raises(NotDivisibleError):
            deflate(poly_of(1, -5), 5, 2)

    @given(root_lists, st.integers(0, 4))
    def test_roundtrip_with_multiplication(self, roots, extra):
        # plant the root 3/2 exactly `extra` times, deflate it back out
        v = F(3, 2)
        P = Polynomial.from_inverse_roots(roots) * poly_of(1, -v) ** extra
        base = Polynomial.from_inverse_roots(roots)
        m = inverse_root_multiplicity(base, v)
        assert inverse_root_multiplicity(P, v) == m + extra
        assert deflate(P, v, extra) * poly_of(1, -v) ** extra == P


class TestPowerSums:
    def test_quadratic(self):
        assert power_sums(poly_of(1, 3, 5), 2) == [-3, -1]

    def test_geometric(self):
        q = 7
        assert power_sums(poly_of(1, -q), 3) == [q, q ** 2, q ** 3]

    def test_empty_root_set(self):
        assert power_sums(Polynomial.one(), 2) == [0, 0]

    @given(st.lists(nonzero_rationals, min_size=0, max_size=6))
    @settings(max_examples=40, deadline=None)
    def test_trace_oracle(self, roots):
        P = Polynomial.from_inverse_roots(roots)
        assert power_sums(P, 5) == helpers.trace_power_sums(P, 5)

    @given(root_lists)
    def test_direct_root_powers(self, roots):
        P = Polynomial.from_inverse_roots(roots)
        for n, s in enumerate(power_sums(P, 4), start=1):
            assert s == sum((a ** n for a in roots), F(0))


class TestScaleRoots:
    def test_scalar(self):
        assert scale_roots(poly_of(1, -1), 5) == poly_of(1, -5)

    def test_identity(self):
        P = poly_of(1, 3, 5)
        assert scale_roots(P, 1) == P

    def test_fractional(self):
        assert scale_roots(poly_of(1, 3, 5), F(1, 5)) == poly_of(1, F(3, 5), F(1, 5))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            scale_roots(poly_of(1, -1), 0)

    @given(root_lists, nonzero_rationals)
    def test_scales_the_root_multiset(self, roots, c):
        P = Polynomial.from_inverse_roots(roots)
        assert scale_roots(P, c) == Polynomial.from_inverse_roots(
            [c * a for a in roots]
        )


class TestReciprocalTwist:
    def test_weil_fixed_point(self):
        P = poly_of(1, 3, 5)
        assert reciprocal_twist(P, 5) == P

    def test_linear(self):
        assert reciprocal_twist(poly_of(1, -1), 7) == poly_of(1, -7)
        assert reciprocal_twist(poly_of(1, -7), 7) == poly_of(1, -1)

    @given(root_lists, nonzero_rationals)
    def test_involution(self, roots, c):
        P = Polynomial.from_inverse_roots(roots)
        assert reciprocal_twist(reciprocal_twist(P, c), c) == P

    @given(root_lists, nonzero_rationals)
    def test_maps_root_multiset(self, roots, c):
        P = Polynomial.from_inverse_roots(roots)
        assert reciprocal_twist(P, c) == Polynomial.from_inverse_roots(
            [c / a for a in roots]
        )


class TestTensorPoly:
    def test_two_linears(self):
        assert tensor_poly(poly_of(1, -2), poly_of(1, -3)) == poly_of(1, -6)

    def test_identity_root(self):
        Q = poly_of(1, 3, 5)
        assert tensor_poly(poly_of(1, -1), Q) == Q

    def test_unit_polynomial(self):
        assert tensor_poly(Polynomial.one(), poly_of(1, 3, 5)) == Polynomial.one()

    def test_product_against_hand_factorization(self):
        P = poly_of(1, -1) * poly_of(1, -5)
        expected = poly_of(1, -5) * poly_of(1, -25)
        assert tensor_poly(P, poly_of(1, -5)) == expected

    @given(root_lists, root_lists)
    @settings(max_examples=40, deadline=None)
    def test_known_root_oracle(self, aroots, broots):
        P = Polynomial.from_inverse_roots(aroots)
        Q = Polynomial.from_inverse_roots(broots)
        expected = Polynomial.from_inverse_roots(
            [a * b for a in aroots for b in broots]
        )
        assert tensor_poly(P, Q) == expected

    def test_matrix_interpolation_oracle(self):
        P = poly_of(1, 3, 5)
        Q = poly_of(1, -2, 0, 4)
        assert tensor_poly(P, Q) == helpers.tensor_by_matrices(P, Q)

    @given(root_lists, root_lists)
    @settings(max_examples=30, deadline=None)
    def test_commutative(self, aroots, broots):
        P = Polynomial.from_inverse_roots(aroots)
        Q = Polynomial.from_inverse_roots(broots)
        assert tensor_poly(P, Q) == tensor_poly(Q, P)

    def test_associative(self):
        P, Q, R = poly_of(1, -2), poly_of(1, 1, 3), poly_of(1, -1, 0, 2)
        assert tensor_poly(tensor_poly(P, Q), R) == tensor_poly(P, tensor_poly(Q, R))
