"""Shared random generators for the test suite."""

import numpy as np

from threefold.hilbert import KMatrix, KVector, scalar_from_coeffs


def random_kvector(system, n, rng):
    return KVector(system, rng.standard_normal((n, system.dim)))


def random_kmatrix(system, rows, cols, rng):
    return KMatrix(system, rng.standard_normal((rows, cols, system.dim)))


def random_scalar(system, rng):
    return scalar_from_coeffs(system, rng.standard_normal(system.dim))


def random_self_adjoint(system, n, rng):
    x = random_kmatrix(system, n, n, rng)
    return x + x.adjoint()


def random_skew_adjoint(system, n, rng):
    x = random_kmatrix(system, n, n, rng)
    return x - x.adjoint()


def random_unitary_complex(n, rng):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))
