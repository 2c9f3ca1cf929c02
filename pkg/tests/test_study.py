import pytest
from hypothesis import given, strategies as st

from lorentz_conchoid.dual_lorentz import DualVec3, is_on_H2
from lorentz_conchoid.errors import DegenerateConfiguration, NotOnH2, NotTimelike
from lorentz_conchoid.minkowski import E1, E3, ZERO3, Vec3L, euclid_norm, l_cross, l_inner
from lorentz_conchoid.study import (dual_to_line, line_from_point_direction, line_to_dual,
                                    point_at, ruling_point)

from strategies import timelike, vecs


def test_line_through_origin():
    line = line_from_point_direction(ZERO3, E3)
    assert line.direction == E3 and line.moment == ZERO3
    a = line_to_dual(line)
    assert a.re == E3 and a.du == ZERO3


def test_moment_of_offset_line():
    line = line_from_point_direction(E1, E3)
    assert line.moment == Vec3L(0, 1, 0)
    assert line_to_dual(line) == DualVec3(E3, Vec3L(0, 1, 0))


def test_point_parallel_to_direction_has_no_moment():
    assert line_from_point_direction(Vec3L(0, 0, 7), E3).moment == ZERO3


def test_direction_is_normalized():
    line = line_from_point_direction(ZERO3, Vec3L(0, 0, 5))
    assert line.direction == E3


def test_rejects_non_timelike_directions():
    for bad in (Vec3L(1, 0, 0), Vec3L(1, 0, 1), ZERO3):
        with pytest.raises(NotTimelike):
            line_from_point_direction(ZERO3, bad)


def test_dual_to_line():
    line = dual_to_line(DualVec3(E3, Vec3L(0, 1, 0)))
    assert line.direction == E3 and line.moment == Vec3L(0, 1, 0)
    with pytest.raises(NotOnH2):
        dual_to_line(DualVec3(E1))


def test_point_at_examples():
    assert point_at(DualVec3(E3), 3) == Vec3L(0, 0, 3)
    a = DualVec3(E3, Vec3L(0, 1, 0))
    assert point_at(a, 0) == Vec3L(1, 0, 0)
    assert point_at(a, 2) == Vec3L(1, 0, 2)
    with pytest.raises(NotOnH2):
        point_at(DualVec3(E1), 0)


def test_ruling_point_spacelike_line():
    # spacelike line through (0, 0, 2) along e1
    m = Vec3L(0, 0, 2)
    a = DualVec3(E1, l_cross(m, E1))
    assert ruling_point(a, 0) == m
    # the sign applies to the whole expression, so λ runs against e1 here
    assert ruling_point(a, 1.5) == m - E1 * 1.5


def test_ruling_point_agrees_with_point_at_on_H2():
    a = DualVec3(E3, Vec3L(0, 1, 0))
    assert ruling_point(a, 0.7) == point_at(a, 0.7)


def test_ruling_point_rejects_null_lines():
    with pytest.raises(DegenerateConfiguration):
        ruling_point(DualVec3(Vec3L(1, 0, 1)), 0)


@given(vecs, timelike(), st.floats(-3, 3))
def test_round_trip(m, direction, lam):
    line = line_from_point_direction(m, direction)
    a = line_to_dual(line)
    assert is_on_H2(a, 1e-9)
    back = dual_to_line(a)
    assert back.direction == line.direction and back.moment == line.moment
    p = point_at(a, lam)
    scale = max(1.0, euclid_norm(m)) * max(1.0, euclid_norm(line.direction)) ** 3
    # p lies on the line: (p - m) is parallel to the direction
    assert euclid_norm(l_cross(p - m, line.direction)) <= 1e-12 * scale * max(1.0, abs(lam))
    # p reproduces the moment
    assert euclid_norm(l_cross(p, line.direction) - line.moment) <= 1e-12 * scale * max(1.0, abs(lam))
    # λ = 0 gives the foot of the perpendicular
    assert abs(l_inner(point_at(a, 0.0), line.direction)) <= 1e-12 * scale
