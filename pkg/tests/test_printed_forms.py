import math

import pytest
from hypothesis import given, strategies as st

from lorentz_conchoid.dual import DualScalar
from lorentz_conchoid.errors import DegenerateConfiguration, SingularAtPsiZero
from lorentz_conchoid.minkowski import Vec3L
from lorentz_conchoid.motion import MotionConfig, OrbitSpec, frame_at, orbit_point
from lorentz_conchoid.printed_forms import (A_of, CaseParams, g_coords_printed, g_psi0_printed,
                                            g_sigma0_printed, v2_closed_form_printed,
                                            v2_parts_printed, x_parts_printed,
                                            y_case_v1_sigma0_printed, y_case_v3_printed,
                                            y_coords_printed)


def close(a, b, tol=1e-12):
    return all(abs(x - y) <= tol for x, y in zip(a, b))


def test_A_uses_tanh_of_sigma():
    c = CaseParams(psi=0.4, sigma=0.9)
    assert A_of(c) == pytest.approx(math.sinh(0.4) ** 2 + math.tanh(0.9) ** 2, rel=1e-15)
    with pytest.raises(DegenerateConfiguration):
        A_of(CaseParams())


def test_case_params_replace():
    c = CaseParams(psi=1.0).replace(lam=2.0)
    assert (c.psi, c.lam, c.a) == (1.0, 2.0, 1.0)


def test_orbit_formula_with_p_zero_is_v3():
    q = 0.7
    c = CaseParams(psi=0.6, sigma=0.8, q=q, a=1 / math.sinh(q))
    x, _ = x_parts_printed(c)
    assert close(x, (0, math.sinh(0.6), math.cosh(0.6)))


def test_orbit_formula_with_q_zero_mirrors_v1():
    # the expansion flips the first two components of v1
    p = 0.7
    c = CaseParams(psi=0.6, sigma=0.8, p=p, a=1 / math.sinh(p))
    x, _ = x_parts_printed(c)
    v1 = frame_at(MotionConfig(0.8), 0.6).v1.re
    assert close(x, (-v1.c1, -v1.c2, v1.c3))


def test_congruence_formula_with_p_zero():
    q = 0.5
    c = CaseParams(psi=0.9, psi_star=0.3, sigma=0.4, q=q, a=1 / math.sinh(q), lam=1.7)
    assert close(y_coords_printed(c), (0.3, 1.7 * math.sinh(0.9), 1.7 * math.cosh(0.9)))
    assert close(y_case_v3_printed(c), y_coords_printed(c))


def test_v1_sigma0_special_form_values():
    c = CaseParams(psi=0.7, psi_star=0.4, sigma_star=0.3, lam=1.1)
    y = y_case_v1_sigma0_printed(c)
    want = (0.4, -0.3 - 1.1 * math.cosh(0.7), 0.3 / math.tanh(0.7) + 1.1 * math.sinh(0.7))
    assert close(y, want, 1e-15)
    with pytest.raises(SingularAtPsiZero):
        y_case_v1_sigma0_printed(c.replace(psi=0.0))


def test_v2_parts_at_rest():
    v, vs = v2_parts_printed(CaseParams(psi=0.0, sigma=0.8))
    assert close(v, (0, -1, 0), 1e-15)
    assert close(vs, (0, 0, 0))


@given(st.floats(-2, 2), st.floats(-1.5, 1.5).filter(lambda s: abs(s) > 0.05))
def test_v2_dual_part_vanishes_without_offsets(psi, sigma):
    _, vs = v2_parts_printed(CaseParams(psi=psi, sigma=sigma))
    assert vs == Vec3L(0, 0, 0)


@given(st.floats(-2, 2), st.floats(-1, 1), st.floats(0.05, 1.5), st.floats(-1, 1))
def test_v2_real_part_matches_frame(psi, ps, sigma, ss):
    v, _ = v2_parts_printed(CaseParams(psi=psi, psi_star=ps, sigma=sigma, sigma_star=ss))
    pose = frame_at(MotionConfig(DualScalar(sigma, ss)), DualScalar(psi, ps))
    assert close(v, pose.v2.re, 1e-12)


def test_v2_closed_form_sinh_reading_matches_frame():
    c = CaseParams(psi=0.8, psi_star=0.2, sigma=0.5, sigma_star=-0.3)
    pose = frame_at(MotionConfig(DualScalar(0.5, -0.3)), DualScalar(0.8, 0.2))
    fixed = v2_closed_form_printed(c, sinh_reading=True)
    assert close(list(fixed.re) + list(fixed.du), list(pose.v2.re) + list(pose.v2.du))
    literal = v2_closed_form_printed(c)
    assert not close(literal.re, pose.v2.re, 1e-6)


def test_g_sigma0_special_form_values():
    g = g_sigma0_printed(CaseParams(psi=0.6, sigma_star=0.2, u=1.5))
    assert close(g, (1.5, -0.2, -0.2 / math.tanh(0.6)), 1e-15)


def test_g_general_form_at_sigma0_loses_the_offset():
    # the general expansion has no sigma* term left in g2 when sigma = 0
    g = g_coords_printed(CaseParams(psi=0.6, sigma_star=0.2, u=1.5))
    assert g.c2 == 0.0


def test_g_psi0_form():
    g = g_psi0_printed(CaseParams(psi_star=0.5, sigma=0.7, u=1.2))
    assert close(g, (0.5, 1.2, 0.5 * math.tanh(0.7)))
