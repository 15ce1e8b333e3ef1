import warnings

import pytest
from hypothesis import given, strategies as st

from symsquare.curve_model import (
    BrillNoetherWarning,
    CurveProfile,
    DivisorData,
    PencilData,
    canonical,
    clifford_admissible,
    residual,
    riemann_roch_complete,
)


@pytest.mark.parametrize(
    "g, degree, h0, h1",
    [
        (4, 6, 3, 0),  # non-canonical degree 6 divisor
        (4, 6, 4, 1),  # canonical divisor
        (4, 0, 1, 4),  # trivial sheaf
    ],
)
def test_riemann_roch_complete(g, degree, h0, h1):
    D = riemann_roch_complete(g, degree, h0)
    assert D.h1 == h1
    assert D.h0 - D.h1 == degree - g + 1


def test_riemann_roch_rejects_below_floor():
    with pytest.raises(ValueError, match="floor"):
        riemann_roch_complete(4, 10, 6)
    with pytest.raises(ValueError):
        riemann_roch_complete(4, 3, -1)


def test_divisor_invariants():
    with pytest.raises(ValueError, match="Riemann-Roch"):
        DivisorData(4, 6, 3, 1)
    with pytest.raises(ValueError, match="negative degree"):
        DivisorData(4, -1, 1, 5)
    with pytest.raises(ValueError, match="2g - 2"):
        DivisorData(4, 7, 5, 1)


def test_clifford_examples():
    assert clifford_admissible(4, 3, 2)
    assert not clifford_admissible(5, 8, 5, strict=True)
    assert clifford_admissible(5, 8, 5)
    # plane quintic carries a g^2_5
    assert clifford_admissible(6, 5, 3)


def test_residual_examples():
    assert residual(4, canonical(4)) == DivisorData(4, 0, 1, 4)
    # residual of the g^2_5 on a genus 5 curve is the g^1_3
    assert residual(5, DivisorData(5, 5, 3, 2)) == DivisorData(5, 3, 2, 3)
    # the g^2_5 of a plane quintic is half-canonical
    assert residual(6, DivisorData(6, 5, 3, 3)) == DivisorData(6, 5, 3, 3)


def test_residual_rejects_genus_mismatch():
    with pytest.raises(ValueError):
        residual(5, canonical(4))


@st.composite
def divisors(draw):
    g = draw(st.integers(0, 40))
    degree = draw(st.integers(-5, 4 * g + 5))
    floor = max(0, degree - g + 1)
    if degree < 0:
        h0 = 0
    elif degree > 2 * g - 2:
        h0 = floor
    else:
        h0 = draw(st.integers(floor, degree + 1))
    return riemann_roch_complete(g, degree, h0)


@given(divisors())
def test_residual_is_involution(D):
    assert residual(D.g, residual(D.g, D)) == D


@given(divisors())
def test_riemann_roch_identity(D):
    assert D.h0 - D.h1 == D.degree - D.g + 1


@given(st.integers(0, 60), st.integers(1, 40), st.booleans())
def test_clifford_monotone_in_h0(degree, h0, strict):
    if clifford_admissible(30, degree, h0, strict):
        assert clifford_admissible(30, degree, h0 - 1, strict)


def test_pencil_fields():
    L = PencilData(7, h0_L=2, base_degree=2)
    assert L.moving_degree == 5 and L.r == 1
    with pytest.raises(ValueError):
        PencilData(2)
    with pytest.raises(ValueError):
        PencilData(5, h0_L=1)
    with pytest.raises(ValueError):
        PencilData(5, base_degree=6)
    with pytest.raises(ValueError, match="base_point_free"):
        PencilData(5, base_degree=1, base_point_free=True)


def test_profile_rejects_clifford_violation():
    with pytest.raises(ValueError, match="Clifford"):
        CurveProfile(4, pencils=(PencilData(3, h0_L=4),))


def test_profile_rejects_riemann_roch_violation():
    with pytest.raises(ValueError, match="floor"):
        CurveProfile(4, pencils=(PencilData(12, h0_L=2),))


def test_brill_noether_warning_does_not_reject():
    with pytest.warns(BrillNoetherWarning):
        CurveProfile(8, pencils=(PencilData(3),))


def test_general_pencil_no_warning():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        CurveProfile(6, pencils=(PencilData(4),))


@pytest.mark.filterwarnings("ignore::symsquare.curve_model.BrillNoetherWarning")
def test_profile_validation_deterministic():
    def outcome():
        try:
            CurveProfile(5, pencils=(PencilData(5, h0_L=3), PencilData(4)))
            return "ok"
        except ValueError as exc:
            return str(exc)

    assert len({outcome() for _ in range(5)}) == 1


def test_theorem_hypotheses():
    with pytest.raises(ValueError, match="hyperelliptic"):
        CurveProfile(5, hyperelliptic=True).require_theorem_hypotheses()
    with pytest.raises(ValueError, match="genus 3"):
        CurveProfile(3).require_theorem_hypotheses()
