import numpy as np
import pytest

from unruh_pair import SimConfig, XState, coefficients


@pytest.fixture
def rng():
    return np.random.default_rng(20230817)


def random_x_state(rng) -> XState:
    """Valid random X state: Dirichlet populations, positivity-bounded coherences."""
    p = rng.dirichlet(np.ones(4))
    u_as, u_ge = rng.uniform(0, 1, size=2)
    ph_as, ph_ge = rng.uniform(0, 2 * np.pi, size=2)
    return XState(
        p_gg=p[0], p_ee=p[1], p_aa=p[2], p_ss=p[3],
        c_as=u_as * np.sqrt(p[2] * p[3]) * np.exp(1j * ph_as),
        c_ge=u_ge * np.sqrt(p[0] * p[1]) * np.exp(1j * ph_ge),
    )


def random_coefficients(rng, include_interaction=True):
    """Coefficients at a random physical parameter point."""
    alpha = float(10.0 ** rng.uniform(-2, 1.3))
    ell = float(10.0 ** rng.uniform(-1.3, 1.7))
    return coefficients(
        SimConfig(accel_ratio=alpha, separation=ell,
                  include_interaction=include_interaction)
    )


# parameter grid shared by the oracle-equivalence and dominance tests
GRID_ACCEL = (0.1, 1.0, 10.0)
GRID_SEP = (0.3, 3.0, 30.0)
