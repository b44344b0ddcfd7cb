import os
import subprocess
import sys

import numpy as np
import pytest

from relspin import linalg

from conftest import random_hermitian


@pytest.fixture(params=linalg.available_backends())
def backend(request):
    previous = linalg.BACKEND
    linalg.set_backend(request.param)
    yield request.param
    linalg.set_backend(previous)


@pytest.mark.parametrize("n", [2, 4, 8])
def test_backend_accuracy(backend, rng, n):
    for _ in range(10):
        m = random_hermitian(rng, n)
        w, v = linalg.hermitian_eig(m)
        assert np.all(np.diff(w) <= 0)
        assert np.abs((v * w) @ v.conj().T - m).max() < 1e-12 * max(1.0, np.abs(m).max())
        assert np.abs(v.conj().T @ v - np.eye(n)).max() < 1e-13


def test_backends_agree(rng):
    if len(linalg.available_backends()) < 2:
        pytest.skip("compiled kernel not built")
    previous = linalg.BACKEND
    try:
        for _ in range(20):
            m = random_hermitian(rng, 4)
            out = {}
            for name in linalg.available_backends():
                linalg.set_backend(name)
                out[name] = linalg.hermitian_eig(m)[0]
            np.testing.assert_allclose(out["cython"], out["python"], atol=1e-13)
    finally:
        linalg.set_backend(previous)


def test_compiled_backend_is_default_when_built():
    if "cython" in linalg.available_backends() and not os.environ.get("RELSPIN_PURE_PYTHON"):
        assert linalg.BACKEND == "cython"


def test_env_var_forces_fallback():
    code = "import relspin.linalg as L; print(L.BACKEND)"
    env = dict(os.environ, RELSPIN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        linalg.set_backend("fortran")
