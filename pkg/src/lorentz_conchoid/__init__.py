"""Dual Lorentzian vector algebra and the dual hyperbolic conchoidal motion."""

from .dual import DualScalar
from .dual_lorentz import DualMatrix3, DualVec3, dl_cross, dl_inner, triple_product
from .minkowski import CausalClass, Vec3L, classify, l_cross, l_inner, l_norm
from .motion import FramePose, MotionConfig, OrbitSpec, c_axis, frame_at, orbit_point
from .study import DirectedTimelikeLine, dual_to_line, line_from_point_direction, line_to_dual, point_at

__version__ = "0.1.0"

__all__ = [
    "CausalClass", "DirectedTimelikeLine", "DualMatrix3", "DualScalar", "DualVec3",
    "FramePose", "MotionConfig", "OrbitSpec", "Vec3L", "c_axis", "classify", "dl_cross",
    "dl_inner", "dual_to_line", "frame_at", "l_cross", "l_inner", "l_norm",
    "line_from_point_direction", "line_to_dual", "orbit_point", "point_at", "triple_product",
]
