import numpy as np
import pytest

from rindler_atom import kernels

BACKENDS = kernels.available_backends()
cython_only = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")


def test_backend_selected():
    assert kernels.BACKEND in BACKENDS


@cython_only
@pytest.mark.parametrize("k, j", [(1, 0), (3, 7), (5, 40), (3, 62)])
def test_laguerre_agrees(k, j):
    x = np.linspace(0, 60, 301)
    np.testing.assert_allclose(BACKENDS["cython"].laguerre(k, j, x), BACKENDS["python"].laguerre(k, j, x),
                               rtol=1e-12, atol=1e-300)


@cython_only
@pytest.mark.parametrize("n, l", [(1, 0), (2, 1), (7, 3), (30, 1), (64, 20)])
def test_radial_agrees(n, l):
    r = np.linspace(0, 200, 400).reshape(20, 20)
    c = BACKENDS["cython"].radial_values(n, l, r)
    p = BACKENDS["python"].radial_values(n, l, r)
    assert c.shape == r.shape
    np.testing.assert_allclose(c, p, rtol=1e-12, atol=1e-300)
    assert BACKENDS["cython"].radial_norm(n, l) == pytest.approx(BACKENDS["python"].radial_norm(n, l), rel=1e-14)


@cython_only
def test_plane_density_agrees():
    ns = np.array([1, 2, 2, 3, 4, 9])
    ls = np.array([0, 0, 1, 2, 1, 3])
    cs = np.array([0.9, 0.1, -0.3, 0.05, 0.2, 0.01])
    xs = np.linspace(-6, 6, 33)
    zs = np.linspace(6, -6, 31)
    np.testing.assert_allclose(BACKENDS["cython"].plane_density(ns, ls, cs, xs, zs),
                               BACKENDS["python"].plane_density(ns, ls, cs, xs, zs), rtol=1e-11, atol=1e-300)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_legendre(name):
    from scipy.special import eval_legendre
    x = np.linspace(-1, 1, 21)
    for l in range(9):
        np.testing.assert_allclose(BACKENDS[name].legendre(l, x), eval_legendre(l, x), atol=1e-14)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_plane_density_origin(name):
    # R_nl(0) = 0 for l > 0, so the arbitrary angle used at r = 0 is harmless
    out = BACKENDS[name].plane_density(np.array([1, 2]), np.array([0, 1]), np.array([1.0, 1.0]),
                                       np.array([0.0]), np.array([0.0]))
    assert out[0, 0] == pytest.approx(1 / np.pi)


def test_env_forces_fallback():
    import os
    import subprocess
    import sys
    env = {**os.environ, "RINDLER_ATOM_PURE_PYTHON": "1"}
    out = subprocess.run([sys.executable, "-c", "from rindler_atom import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
