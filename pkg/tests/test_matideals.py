import random
from fractions import Fraction

import pytest

from skeinlab.errors import SkeinError
from skeinlab.linalg import in_span
from skeinlab.matideals import (
    FinAlg,
    MatIdeal,
    random_instance,
    row_space,
    verify_lr_quotient,
)

QQ_ALG = FinAlg.univariate([Fraction(0), Fraction(1)])  # Q itself
ONE = (Fraction(1),)
ZERO = (Fraction(0),)


def test_finalg_verification_rejects_bad_structure():
    # non-commutative structure constants
    mult = [[(1, 0), (0, 1)], [(1, 1), (0, 1)]]
    with pytest.raises(SkeinError):
        FinAlg(2, mult, (1, 0))


def test_univariate_algebra():
    dual = FinAlg.univariate([0, 0, 1])  # Q[t]/(t^2)
    t = dual.basis_vec(1)
    assert dual.mul(t, t) == dual.zero()
    assert dual.mul(dual.unit, t) == t


def test_product_algebra():
    a = FinAlg.univariate([0, 1])
    b = FinAlg.univariate([0, 0, 1])
    prod = FinAlg.product(a, b)
    assert prod.dim == 3
    e_a = (Fraction(1), Fraction(0), Fraction(0))
    e_b0 = (Fraction(0), Fraction(1), Fraction(0))
    assert prod.mul(e_a, e_b0) == prod.zero()


def test_row_space_examples():
    e11 = [[ONE, ZERO], [ZERO, ZERO]]
    L = MatIdeal("left", QQ_ALG, 2, [e11])
    assert [list(v) for v in row_space(L)] == [[1, 0]]
    empty = MatIdeal("left", QQ_ALG, 2, [])
    assert row_space(empty) == []
    with pytest.raises(SkeinError):
        row_space(MatIdeal("right", QQ_ALG, 2, [e11]))


def test_row_space_with_nilpotents():
    dual = FinAlg.univariate([0, 0, 1])
    t = dual.basis_vec(1)
    z = dual.zero()
    t_e12 = [[z, t], [z, z]]
    L = MatIdeal("left", dual, 2, [t_e12])
    basis = row_space(L)
    assert len(basis) == 1  # t * (t e_2) dies


def test_e11_quotient():
    e11 = [[ONE, ZERO], [ZERO, ZERO]]
    L = MatIdeal("left", QQ_ALG, 2, [e11])
    R = MatIdeal("right", QQ_ALG, 2, [e11])
    assert verify_lr_quotient(L, R) == (1, 1, True)


def test_zero_ideals():
    L = MatIdeal("left", QQ_ALG, 3, [])
    R = MatIdeal("right", QQ_ALG, 3, [])
    assert verify_lr_quotient(L, R) == (9, 9, True)
    dual = FinAlg.univariate([0, 0, 1])
    L2 = MatIdeal("left", dual, 2, [])
    R2 = MatIdeal("right", dual, 2, [])
    assert verify_lr_quotient(L2, R2) == (8, 8, True)


def test_row_space_identity():
    # A^n (x)_A V(L) = completed L, as ground-field dimensions plus row
    # containment of every completed matrix
    rng = random.Random(77)
    for seed in range(8):
        algebra, n, L, _ = random_instance(seed)
        completed = L.completed_basis()
        v = row_space(L)
        assert len(completed) == n * len(v)
        d = algebra.dim
        for flat in completed:
            for i in range(n):
                row_vec = flat[i * n * d : (i + 1) * n * d]
                if any(row_vec) and v:
                    assert in_span(row_vec, v)


@pytest.mark.parametrize("seed", range(12))
def test_randomized_quotients_agree(seed):
    algebra, n, L, R = random_instance(seed)
    dl, dr, eq = verify_lr_quotient(L, R)
    assert eq, (seed, dl, dr)
