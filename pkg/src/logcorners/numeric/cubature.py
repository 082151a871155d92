"""Adaptive tensor-product Gauss-Kronrod cubature on boxes.

Each box is integrated with the tensor 15-point Kronrod rule; the embedded
7-point Gauss rule gives an error estimate per axis, and the box with the
largest estimate is bisected along its worst axis.  Node placement depends
only on the box list, so results are reproducible run to run.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

import numpy as np

# 15-point Kronrod abscissae (non-negative half) and weights, with the
# 7-point Gauss weights on the odd-indexed abscissae.
_XK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XK[:-1], _XK[::-1]])           # 15 nodes on [-1, 1]
KRONROD = np.concatenate([_WK[:-1], _WK[::-1]])
GAUSS = np.zeros(15)
_g_idx = [1, 3, 5, 7]
for _i, _w in zip(_g_idx, _WG):
    GAUSS[_i] = _w
    GAUSS[14 - _i] = _w


@dataclass
class CubatureResult:
    value: complex
    error: float
    evaluations: int
    converged: bool


def _rule(f, lo: np.ndarray, hi: np.ndarray):
    """Kronrod estimate and per-axis Gauss-vs-Kronrod differences on one box."""
    d = lo.size
    half = (hi - lo) / 2
    mid = (hi + lo) / 2
    grids = np.meshgrid(*[mid[k] + half[k] * NODES for k in range(d)], indexing="ij")
    pts = np.stack([g.ravel() for g in grids])
    vals = np.asarray(f(pts), dtype=complex).reshape((15,) * d)
    vol = float(np.prod(half))
    full = vals
    for k in range(d):
        full = np.tensordot(full, KRONROD, axes=([0], [0]))
    kron = complex(full) * vol
    errs = np.zeros(d)
    for j in range(d):
        acc = vals
        for k in range(d):
            acc = np.tensordot(acc, GAUSS if k == j else KRONROD, axes=([0], [0]))
        errs[j] = abs(complex(acc) * vol - kron)
    return kron, errs, vals.size


def cubature(f, lower, upper, tol: float = 1e-10, abs_tol: float = 1e-14,
             max_subdivisions: int = 2000) -> CubatureResult:
    """Integrate ``f`` over the box ``[lower, upper]``.

    ``f`` receives an array of shape ``(d, N)`` and returns ``N`` values.
    Stops once the summed error estimate is below
    ``max(abs_tol, tol * |value|)`` or after ``max_subdivisions`` splits.
    """
    lo = np.atleast_1d(np.asarray(lower, dtype=float))
    hi = np.atleast_1d(np.asarray(upper, dtype=float))
    if lo.shape != hi.shape:
        raise ValueError("bounds have different dimensions")
    if lo.size == 0:
        return CubatureResult(complex(np.asarray(f(np.zeros((0, 1))))[0]), 0.0, 1, True)
    counter = itertools.count()
    value, errs, n = _rule(f, lo, hi)
    heap = [(-errs.sum(), next(counter), lo, hi, value, errs)]
    total, total_err, evals = value, errs.sum(), n
    splits = 0
    while total_err > max(abs_tol, tol * abs(total)) and splits < max_subdivisions:
        _, _, blo, bhi, bval, berrs = heapq.heappop(heap)
        axis = int(np.argmax(berrs))
        cut = (blo[axis] + bhi[axis]) / 2
        left_hi = bhi.copy()
        left_hi[axis] = cut
        right_lo = blo.copy()
        right_lo[axis] = cut
        total -= bval
        total_err -= berrs.sum()
        for a, b in ((blo, left_hi), (right_lo, bhi)):
            v, e, n = _rule(f, a, b)
            evals += n
            total += v
            total_err += e.sum()
            heapq.heappush(heap, (-e.sum(), next(counter), a, b, v, e))
        splits += 1
    # re-sum in a fixed order to avoid drift from the running updates
    boxes = sorted(heap, key=lambda item: item[1])
    total = sum((item[4] for item in boxes), 0j)
    total_err = float(sum(item[5].sum() for item in boxes))
    converged = total_err <= max(abs_tol, tol * abs(total))
    return CubatureResult(total, total_err, evals, converged)
