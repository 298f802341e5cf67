import math

import numpy as np
from hypothesis import strategies as st

from blochgate.spinors import BlochAngles


def random_angles(rng):
    """Uniform point on the sphere."""
    u, v = rng.random(2)
    return BlochAngles(math.acos(1 - 2 * u), 2 * math.pi * v)


angles = st.builds(
    BlochAngles,
    st.floats(0.0, math.pi),
    st.floats(0.0, 2 * math.pi, exclude_max=True),
)

unit_vectors = st.tuples(
    st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1)
).filter(lambda v: np.linalg.norm(v) > 0.1).map(lambda v: np.asarray(v) / np.linalg.norm(v))
