from hypothesis import strategies as st

from lorentz_conchoid.dual import DualScalar
from lorentz_conchoid.dual_lorentz import DualVec3
from lorentz_conchoid.minkowski import Vec3L

reals = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False, allow_infinity=False)
duals = st.builds(DualScalar, reals, reals)
vecs = st.builds(Vec3L, reals, reals, reals)
dvecs = st.builds(DualVec3, vecs, vecs)


@st.composite
def timelike(draw):
    x = draw(st.floats(-3, 3))
    y = draw(st.floats(-3, 3))
    extra = draw(st.floats(0.1, 3))
    sign = draw(st.sampled_from((1.0, -1.0)))
    return Vec3L(x, y, sign * ((x * x + y * y) ** 0.5 + extra))
