"""Numerical-range boundary tracing by the support-function rotation method.

For each sweep angle theta the Hermitian part of e^{-i*theta}A is
diagonalized; its top eigenvector x gives a boundary support point
p = <Ax, x> and the support value h(theta) = lambda_max.  A nearly
degenerate top eigenvalue signals a flat face, in which case the
compression of A to the top eigenspace is diagonalized and every
eigenvector contributes a support point (the face endpoints among
them).

Angle batches are solved as one stacked Hermitian eigenproblem, so
sweeps of tens of thousands of angles stay cheap.  Optional adaptive
refinement bisects sweep wedges, breadth-first in batches, until the
exact outer bound - the distance from the support-line apex to the
chord of adjacent support points - drops below a target, which
certifies W(A) within that distance of the assembled polygon.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import cgeom
from .errors import InputError
from .linalg import as_matrix, frob

# Relative gap under which the top eigenvalue counts as degenerate.
DEGENERACY_GAP = 1e-10
# Guards for adaptive refinement.
REFINE_MAX_DEPTH = 48
REFINE_MIN_WEDGE = 1e-9


@dataclass(frozen=True)
class NRangeBoundary:
    """Support data of a numerical-range boundary sweep.

    angles are ascending in [0, 2*pi), repeated where a flat face
    emitted several support points; hull is the convex hull of all
    support points.
    """

    angles: np.ndarray
    support_points: np.ndarray
    support_values: np.ndarray
    hull: cgeom.ConvexPolygon


def _thread_cap() -> int:
    raw = os.environ.get("SRG_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _rotated_hermitian_parts(a: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Stack of H_theta = (e^{-i theta} A + e^{i theta} A*)/2."""
    ph = np.exp(-1j * thetas)
    stack = ph[:, None, None] * a[None, :, :]
    return (stack + np.conj(np.swapaxes(stack, 1, 2))) / 2.0


def _degenerate_face(a: np.ndarray, theta: float, h: float,
                     w: np.ndarray, v: np.ndarray, gap_tol: float) -> list[complex]:
    """All support points of a flat face, ordered along the face.

    The face is resolved by diagonalizing the skew part of the
    compression of A to the near-top eigenspace; ordering follows the
    imaginary part of e^{-i*theta} p.
    """
    sel = np.nonzero(w >= w[-1] - gap_tol)[0]
    sub = v[:, sel]
    ph = complex(math.cos(theta), -math.sin(theta))
    comp = sub.conj().T @ a @ sub
    skew = (ph * comp - np.conj(ph) * comp.conj().T) / 2j
    skew = (skew + skew.conj().T) / 2.0
    _, u = np.linalg.eigh(skew)
    pts = []
    for j in range(u.shape[1]):
        x = sub @ u[:, j]
        pts.append(complex(np.vdot(x, a @ x)))
    return pts


def _faces_batch(a: np.ndarray, thetas: np.ndarray, gap_tol: float):
    """[(h(theta), [face points...])] for a batch of angles."""
    thetas = np.asarray(thetas, dtype=np.float64)
    if thetas.size == 0:
        return []
    w, v = np.linalg.eigh(_rotated_hermitian_parts(a, thetas))
    n = a.shape[0]
    h = w[:, -1]
    top = v[:, :, -1]
    points = np.einsum("ki,ij,kj->k", np.conj(top), a, top)
    out = []
    for k in range(thetas.size):
        if n == 1 or h[k] - w[k, -2] >= gap_tol:
            out.append((float(h[k]), [complex(points[k])]))
        else:
            out.append((float(h[k]),
                        _degenerate_face(a, float(thetas[k]), float(h[k]),
                                         w[k], v[k], gap_tol)))
    return out


def _faces(a: np.ndarray, thetas, gap_tol: float):
    """Batch evaluation, optionally split across SRG_THREADS threads."""
    thetas = np.asarray(thetas, dtype=np.float64)
    cap = _thread_cap()
    if cap <= 1 or thetas.size < 4 * cap:
        return _faces_batch(a, thetas, gap_tol)
    chunks = np.array_split(thetas, cap)
    with ThreadPoolExecutor(max_workers=cap) as ex:
        parts = list(ex.map(lambda t: _faces_batch(a, t, gap_tol), chunks))
    return [face for part in parts for face in part]


def _apex_chord_bound(ta: float, ha: float, pa: complex,
                      tb: float, hb: float, pb: complex) -> float:
    """Exact outer bound for the sweep wedge (ta, tb).

    The support lines at the two angles intersect at an apex; any
    boundary inside the wedge lies in the triangle (pa, apex, pb), so
    its distance from the chord is at most the apex's.
    """
    det = math.sin(tb - ta)
    if abs(det) < 1e-15:
        return 0.0
    qx = (ha * math.sin(tb) - hb * math.sin(ta)) / det
    qy = (hb * math.cos(ta) - ha * math.cos(tb)) / det
    return cgeom._dist_point_segment(complex(qx, qy), pa, pb)


def nrange_boundary(a, num_angles: int = 720,
                    refine_tol: float | None = None) -> NRangeBoundary:
    """Trace the boundary of W(A) with a uniform angle sweep.

    With refine_tol set, wedges between consecutive angles are bisected
    (breadth-first, batched) until the apex-to-chord bound is below it,
    so the true numerical range lies within refine_tol of the returned
    hull; the hull itself always lies inside W(A) up to eigensolver
    noise.
    """
    m = as_matrix(a, square=True)
    if num_angles < 8:
        raise InputError("num_angles must be at least 8")
    gap_tol = DEGENERACY_GAP * frob(m)
    thetas = 2.0 * math.pi * np.arange(num_angles) / num_angles
    faces = _faces(m, thetas, gap_tol)
    entries = [(float(t), h, pts) for t, (h, pts) in zip(thetas, faces)]

    if refine_tol is not None:
        # Wedges carry extended (non-wrapped) angles so the wraparound
        # wedge between the last and first sweep angles stays ordered.
        wedges = []
        for k in range(num_angles):
            ta, ha, pts_a = entries[k]
            if k + 1 < num_angles:
                tb, hb, pts_b = entries[k + 1]
            else:
                t0, hb, pts_b = entries[0]
                tb = t0 + 2.0 * math.pi
            wedges.append((ta, ha, pts_a[-1], tb, hb, pts_b[0], REFINE_MAX_DEPTH))
        while wedges:
            needy = [wdg for wdg in wedges
                     if wdg[6] > 0
                     and wdg[3] - wdg[0] > REFINE_MIN_WEDGE
                     and _apex_chord_bound(*wdg[:6]) > refine_tol]
            if not needy:
                break
            mids = np.array([0.5 * (wdg[0] + wdg[3]) for wdg in needy])
            mid_faces = _faces(m, np.mod(mids, 2.0 * math.pi), gap_tol)
            wedges = []
            for (ta, ha, pa, tb, hb, pb, depth), tm, (hm, pts) in zip(
                    needy, mids, mid_faces):
                entries.append((float(tm % (2.0 * math.pi)), hm, pts))
                wedges.append((ta, ha, pa, float(tm), hm, pts[0], depth - 1))
                wedges.append((float(tm), hm, pts[-1], tb, hb, pb, depth - 1))
        entries.sort(key=lambda e: e[0])

    angles, points, values = [], [], []
    for t, h, pts in entries:
        for p in pts:
            angles.append(t)
            points.append(p)
            values.append(h)
    hull = cgeom.convex_hull_2d(points)
    return NRangeBoundary(
        angles=np.array(angles, dtype=np.float64),
        support_points=np.array(points, dtype=np.complex128),
        support_values=np.array(values, dtype=np.float64),
        hull=hull,
    )


def support_values(a, thetas) -> np.ndarray:
    """Support function h(theta) = lambda_max(Re(e^{-i*theta}A)) on a grid."""
    m = as_matrix(a, square=True)
    thetas = np.asarray(thetas, dtype=np.float64)
    if thetas.size == 0:
        return np.empty(0)
    return np.linalg.eigvalsh(_rotated_hermitian_parts(m, thetas))[:, -1]


def nrange_contains(a, z, tol: float = 1e-9, num_angles: int = 720) -> bool:
    """Support-function membership test for z in W(A).

    Errs outward only: the sampled support lines bound a convex outer
    approximation of W(A), so False answers are certified.
    """
    if num_angles < 8:
        raise InputError("num_angles must be at least 8")
    z = complex(z)
    thetas = 2.0 * math.pi * np.arange(num_angles) / num_angles
    h = support_values(a, thetas)
    projections = z.real * np.cos(thetas) + z.imag * np.sin(thetas)
    return bool(np.all(projections <= h + tol))
