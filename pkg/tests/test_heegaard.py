import pytest

from skeinlab.coeffs import GenericQ, ZetaField
from skeinlab.errors import SkeinError, StabilizationError
from skeinlab.heegaard import GluingMatrix, dim_K_q, lens_module

F = GenericQ()


def test_gluing_matrix_validation():
    with pytest.raises(SkeinError):
        GluingMatrix((2, 0), (0, 2))
    with pytest.raises(SkeinError):
        GluingMatrix.lens(4, 2)
    g = GluingMatrix.lens(5, 1)
    p, q = g.meridian
    r, s = g.longitude
    assert (p, q) == (5, 1) and p * s - q * r == 1


def test_s3_dimension_one_everywhere():
    for field in (F, ZetaField(2), ZetaField(3), ZetaField(7), ZetaField(10)):
        rep = lens_module(1, 0, field)
        assert rep.stabilized and rep.dimension == 1, rep


def test_rp3():
    rep = lens_module(2, 1, F)
    assert rep.stabilized and rep.dimension == 2


def test_small_lens_dims():
    assert dim_K_q(3, 1) == 2
    assert dim_K_q(4, 1) == 3
    assert dim_K_q(5, 1) == 3


def test_s1_times_s2():
    assert dim_K_q(0, 1) == 1


def test_report_shape():
    rep = lens_module(2, 1, F)
    data = rep.to_json()
    assert data["p"] == 2 and data["stabilized"] is True
    assert len(data["dims_by_truncation"]) == 3
    assert len(data["basis"]) == rep.dimension
    assert rep.dims[rep.truncation] == rep.dimension


def test_unstable_flag_is_honest():
    # a too-small truncation may disagree across the three windows; if it
    # does, the flag must say so and dims must expose the disagreement
    rep = lens_module(7, 1, F, truncation=4)
    if not rep.stabilized:
        assert len(set(rep.dims.values())) > 1
    else:
        assert len(set(rep.dims.values())) == 1


def test_stabilization_error_when_budget_exhausted():
    with pytest.raises(StabilizationError):
        dim_K_q(7, 1, max_truncation=3)


def test_lens_at_root_of_unity():
    # at zeta_3 the RP^3 dimension need not match the generic one, but the
    # pipeline must still stabilize
    rep = lens_module(2, 1, ZetaField(3))
    assert rep.stabilized
    assert rep.dimension >= 1
