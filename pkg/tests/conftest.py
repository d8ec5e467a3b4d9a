import numpy as np
import pytest

from gsslink.constellation import GssParameters, build_pm16qam
from gsslink.fiberlink import FiberConfig, ImpairmentConfig


@pytest.fixture(scope='session')
def pm16qam():
    return build_pm16qam()


@pytest.fixture
def gss_params():
    # four distinct radii, angles spread so no two points or swaps coincide
    angles = np.pi / 4 + 0.02 * np.arange(8)[:, np.newaxis] + np.array([0.0, 0.1, -0.1])
    return GssParameters(8, 4, np.array([0.4, 0.6, 0.8, 1.0]), angles)


@pytest.fixture
def linear_fiber():
    """Short dispersive span without the Kerr term; one step is exact."""
    return FiberConfig(gamma=0.0, span_length=10.0, steps_per_span=1)


@pytest.fixture
def quiet_impairments():
    return ImpairmentConfig(tx_osnr_db=None, rx_noise_power_dbm=None)
