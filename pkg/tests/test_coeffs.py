from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skeinlab.coeffs import (
    CyclotomicScalar,
    GenericQ,
    LaurentPoly,
    RationalFunction,
    Rationals,
    ZetaField,
    cyclotomic_invert,
    cyclotomic_polynomial,
    field_from_tag,
    root_spec,
    specialize,
    specialize_scalar,
)
from skeinlab.errors import FourDividesOrderError


def test_root_spec_examples():
    assert (root_spec(6).m, root_spec(6).epsilon) == (3, -1)
    assert (root_spec(5).m, root_spec(5).epsilon) == (5, 1)
    assert (root_spec(2).m, root_spec(2).epsilon) == (1, -1)
    assert (root_spec(1).m, root_spec(1).epsilon) == (1, 1)


def test_root_spec_rejects_multiples_of_four():
    for n in (4, 8, 12, 20):
        with pytest.raises(FourDividesOrderError):
            root_spec(n)
    with pytest.raises(ValueError):
        root_spec(0)


def test_root_spec_epsilon_matches_specialization():
    for n in range(1, 31):
        if n % 4 == 0:
            continue
        spec = root_spec(n)
        val = specialize(LaurentPoly.q_power(spec.m**2), spec)
        assert val.as_fraction() == spec.epsilon


def test_specialize_examples():
    assert specialize(LaurentPoly.q_power(6), root_spec(5)) == CyclotomicScalar.zeta_power(5, 1)
    assert specialize(LaurentPoly({2: 1, -2: 1}), root_spec(2)).as_fraction() == 2
    assert not specialize(LaurentPoly({2: 1, 1: 1, 0: 1}), root_spec(3))


def test_cyclotomic_inverse_examples():
    one = CyclotomicScalar.one(3)
    assert cyclotomic_invert(one) == one
    z = CyclotomicScalar.zeta_power(3, 1)
    assert cyclotomic_invert(z) == CyclotomicScalar(3, [-1, -1])  # zeta^2 = -1 - zeta
    x = one + z
    assert x * cyclotomic_invert(x) == one
    with pytest.raises(ZeroDivisionError):
        cyclotomic_invert(CyclotomicScalar.zero(3))


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(2) == [1, 1]
    assert cyclotomic_polynomial(3) == [1, 1, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


def _cyclo(n):
    deg = len(cyclotomic_polynomial(n)) - 1
    return st.builds(
        lambda cs: CyclotomicScalar(n, cs),
        st.lists(st.fractions(min_value=-3, max_value=3), min_size=deg, max_size=deg),
    )


@settings(max_examples=60, deadline=None)
@given(_cyclo(5), _cyclo(5), _cyclo(5))
def test_cyclotomic_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    if a:
        assert a * a.inv() == CyclotomicScalar.one(5)


def _laurent():
    return st.builds(
        lambda terms: LaurentPoly(dict(terms)),
        st.lists(
            st.tuples(st.integers(-4, 4), st.fractions(min_value=-3, max_value=3)),
            max_size=4,
        ),
    )


@settings(max_examples=60, deadline=None)
@given(_laurent(), _laurent(), _laurent())
def test_rational_function_field_axioms(pa, pb, pc):
    a, b, c = RationalFunction(pa), RationalFunction(pb, LaurentPoly({0: 1, 1: 1})), RationalFunction(pc)
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if a:
        assert a * a.inv() == RationalFunction(1)
    assert a - a == RationalFunction(0)


@settings(max_examples=60, deadline=None)
@given(_laurent(), _laurent())
def test_specialize_is_ring_homomorphism(a, b):
    spec = root_spec(7)
    assert specialize(a * b, spec) == specialize(a, spec) * specialize(b, spec)
    assert specialize(a + b, spec) == specialize(a, spec) + specialize(b, spec)


def test_rational_function_normal_form():
    q = LaurentPoly.q_power
    r = RationalFunction(q(1) - q(0), q(2) - q(0))  # (q-1)/(q^2-1) = 1/(q+1)
    assert r.num == LaurentPoly.one()
    assert r.den == LaurentPoly({1: 1, 0: 1})
    # denominator normalized monic with lowest exponent zero
    r2 = RationalFunction(LaurentPoly({0: 1}), LaurentPoly({-1: 2, 0: 2}))
    assert r2.den.min_exp() == 0
    assert r2.den.terms[max(r2.den.terms)] == 1


def test_field_tags_round_trip():
    for tag in ("generic", "rationals", "rationals(q=-1)", "zeta:5"):
        field = field_from_tag(tag)
        assert field_from_tag(field.tag) == field


def test_laurent_json_round_trip():
    p = LaurentPoly({3: Fraction(1, 2), -2: -1})
    assert LaurentPoly.from_json(p.to_json()) == p
    z = CyclotomicScalar(5, [1, Fraction(2, 3), 0, -1])
    assert CyclotomicScalar.from_json(z.to_json()) == z


def test_specialize_scalar_into_zeta():
    f = ZetaField(5)
    x = RationalFunction(LaurentPoly.q_power(7))
    assert specialize_scalar(x, f) == f.q_power(7)


def test_delta_values():
    assert GenericQ().delta() == RationalFunction(LaurentPoly({2: -1, -2: -1}))
    assert Rationals(-1).delta() == -2
    assert ZetaField(3).delta().as_fraction() == 1  # -(zeta^2 + zeta) = 1
