import importlib

import numpy as np
import pytest


def _kernel_params():
    params = [pytest.param("tripartite_ppt._pykernels", id="python")]
    params.append(pytest.param("tripartite_ppt._ckernels", id="cython"))
    return params


@pytest.fixture(params=_kernel_params())
def kernels(request):
    try:
        return importlib.import_module(request.param)
    except ImportError:
        pytest.skip("compiled kernels not built")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_hermitian(rng, n, scale=1.0):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * 0.5 * (g + g.conj().T)


def bell_projector():
    v = np.zeros(4, dtype=complex)
    v[0] = v[3] = 1 / np.sqrt(2)
    return np.outer(v, v.conj())
