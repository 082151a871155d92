"""Independent floating-point value of the single-valued integral

    iint (dz/(z-a) - dz/(z-1)) ^ dlog zbar = -2i iint g(z) / zbar dx dy,
    g(z) = 1/(z-a) - 1/(z-1).

The plane is split by a smooth partition of unity: a disc patch around each
of 1 and a in local polar coordinates (where the Jacobian cancels the
1/|z - p| singularity), and the rest in polar coordinates about 0 with
rho = R/s beyond radius R.
"""
from __future__ import annotations

import math

import numpy as np

from ..numeric.cubature import cubature


def _smooth_step(x):
    """0 for x <= 0, 1 for x >= 1, C^infinity in between."""
    x = np.clip(x, 0.0, 1.0)
    f = np.where(x > 0, np.exp(-1.0 / np.where(x > 0, x, 1.0)), 0.0)
    g = np.where(x < 1, np.exp(-1.0 / np.where(x < 1, 1 - x, 1.0)), 0.0)
    return f / (f + g)


def _bump(dist, radius):
    """1 inside ``radius/2``, 0 outside ``radius``."""
    return 1.0 - _smooth_step(2 * dist / radius - 1)


def i2_quadrature(a: complex, tol: float = 1e-9, max_subdivisions: int = 4000) -> complex:
    a = complex(a)
    if a in (0, 1):
        raise ValueError("a must differ from 0 and 1")
    poles = [1 + 0j, a]
    delta = 0.45 * min(abs(a - 1), abs(a), 1.0)
    radius_out = 2.0 * max(abs(a), 1.0)

    def g(z):
        return 1 / (z - a) - 1 / (z - 1)

    def chi(z, skip=None):
        out = np.zeros(z.shape)
        for k, p in enumerate(poles):
            if k != skip:
                out = out + _bump(np.abs(z - p), delta)
        return out

    total = 0j

    # patches around the poles: z = p + rho e^{i phi}, dA = rho drho dphi
    for k, p in enumerate(poles):
        def patch(pts, p=p, k=k):
            rho, phi = pts
            z = p + rho * np.exp(1j * phi)
            return _bump(rho, delta) * g(z) * rho / np.conj(z)
        total += cubature(patch, [0.0, 0.0], [delta, 2 * math.pi], tol=tol,
                          max_subdivisions=max_subdivisions).value

    # remainder about 0 on rho < R: rho/zbar = e^{i phi} is bounded
    def inner(pts):
        rho, phi = pts
        z = rho * np.exp(1j * phi)
        return (1 - chi(z)) * g(z) * np.exp(1j * phi)
    total += cubature(inner, [0.0, 0.0], [radius_out, 2 * math.pi], tol=tol,
                      max_subdivisions=max_subdivisions).value

    # rho = R/s, s in (0, 1]: drho = R/s^2 ds
    def outer(pts):
        s, phi = pts
        rho = radius_out / s
        z = rho * np.exp(1j * phi)
        return g(z) * np.exp(1j * phi) * radius_out / s ** 2
    total += cubature(outer, [0.0, 0.0], [1.0, 2 * math.pi], tol=tol,
                      max_subdivisions=max_subdivisions).value
    return -2j * total
