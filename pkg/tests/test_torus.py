from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skeinlab.chebyshev import cheb_expand_power
from skeinlab.coeffs import GenericQ, Rationals, ZetaField, root_spec
from skeinlab.errors import FieldMismatchError, SkeinError
from skeinlab.torus import TorusSkein, commutator, is_central, normalize_label, thread_torus, torus_mul

F = GenericQ()


def curve(field, p, q):
    return TorusSkein.curve(field, p, q)


def test_normalize_label():
    assert normalize_label(-1, 2) == (1, -2)
    assert normalize_label(0, -3) == (0, 3)
    assert normalize_label(2, 5) == (2, 5)


def test_longitude_squared():
    got = torus_mul(curve(F, 1, 0), curve(F, 1, 0))
    expected = TorusSkein(F, {(2, 0): F.one(), (0, 0): F.from_int(2)})
    assert got == expected


def test_longitude_times_meridian():
    got = torus_mul(curve(F, 1, 0), curve(F, 0, 1))
    expected = TorusSkein(F, {(1, 1): F.q_power(1), (1, -1): F.q_power(-1)})
    assert got == expected


def test_unit():
    a = TorusSkein(F, {(2, 3): F.q_power(2), (0, 0): F.one()})
    assert torus_mul(a, TorusSkein.empty(F)) == a
    assert torus_mul(TorusSkein.empty(F), a) == a


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        torus_mul(curve(F, 1, 0), curve(ZetaField(5), 1, 0))


def test_self_commutator_vanishes():
    assert not commutator(curve(F, 1, 0), curve(F, 1, 0))


def test_generic_commutator_nonzero():
    c = commutator(curve(F, 1, 0), curve(F, 0, 1))
    assert c
    expected = TorusSkein(
        F,
        {(1, 1): F.q_power(1) - F.q_power(-1), (1, -1): F.q_power(-1) - F.q_power(1)},
    )
    assert c == expected


def test_threaded_commutator_vanishes_at_root():
    spec = root_spec(6)
    eps = Rationals(Fraction(spec.epsilon))
    threaded = thread_torus(curve(eps, 1, 1), spec)
    field = ZetaField(6)
    assert not commutator(threaded, curve(field, 0, 1))
    assert is_central(threaded, 6)


def test_is_central_examples():
    assert is_central(TorusSkein.empty(F), 6)
    assert not is_central(curve(F, 1, 0), 2)
    with pytest.raises(ValueError):
        is_central(TorusSkein.empty(F), 0)


def test_thread_torus_examples():
    spec = root_spec(6)  # m = 3
    eps = Rationals(Fraction(spec.epsilon))
    assert thread_torus(curve(eps, 1, 0), spec) == curve(ZetaField(6), 3, 0)
    assert thread_torus(curve(eps, 2, 0), spec) == curve(ZetaField(6), 6, 0)
    assert thread_torus(TorusSkein.empty(eps), spec) == TorusSkein.empty(ZetaField(6))


def test_thread_torus_epsilon_mismatch():
    spec = root_spec(6)  # epsilon = -1
    wrong = Rationals(Fraction(1))
    with pytest.raises(SkeinError):
        thread_torus(TorusSkein.curve(wrong, 1, 0), spec)


def test_power_matches_chebyshev_expansion():
    # (p,q)^(*k) agrees with the T-basis expansion of x^k on a primitive curve
    p, q = 1, 2
    for k in range(1, 6):
        power = TorusSkein.empty(F)
        for _ in range(k):
            power = torus_mul(power, curve(F, p, q))
        weights = cheb_expand_power(k)
        expected = TorusSkein(
            F,
            {
                ((j * p, j * q) if j else (0, 0)): F.from_fraction(w * (2 if j == 0 else 1))
                for j, w in weights.items()
            },
        )
        assert power == expected


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(-5, 5), st.integers(-5, 5)).filter(lambda t: t != (0, 0)),
        min_size=3,
        max_size=3,
    )
)
def test_associativity_property(labels):
    for field in (F, ZetaField(5)):
        a, b, c = (curve(field, *lab) for lab in labels)
        assert torus_mul(torus_mul(a, b), c) == torus_mul(a, torus_mul(b, c))


def test_json_round_trip():
    a = TorusSkein(F, {(1, 2): F.q_power(3), (0, 0): F.from_int(-1)})
    assert TorusSkein.from_json(a.to_json()) == a
