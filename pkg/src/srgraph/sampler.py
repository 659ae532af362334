"""Brute-force SRG sampling straight from the definition.

Each random unit vector x contributes the conjugate pair

    (|Tx| / |x|) * exp(+/- i * arccos(Re<Tx, x> / (|Tx| |x|)))

(the single point 0 when Tx = 0).  Samples validate computed regions:
they must land inside a filled region, or on the curve of a
boundary-only region, up to tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import cgeom
from .cgeom import ExtComplex
from .errors import InputError
from .linalg import as_matrix

# Fixed, portable PRNG so failures reproduce across platforms.
GENERATOR = "pcg64"


def sample_srg(t, field: str = "complex", count: int = 10000, seed: int = 1) -> list[ExtComplex]:
    """Sample the SRG of T from its definition; deterministic per seed.

    Unit vectors are normalized standard Gaussians over the requested
    field.  Each draw yields the conjugate pair (upper first); a zero
    output vector yields the single point 0.
    """
    m = as_matrix(t, square=True)
    if count < 1:
        raise InputError("count must be at least 1")
    if field not in ("real", "complex"):
        raise InputError("field must be 'real' or 'complex'")
    if field == "real" and np.max(np.abs(m.imag)) != 0.0:
        raise InputError("real-field sampling requires a matrix with real entries")
    n = m.shape[0]
    rng = np.random.Generator(np.random.PCG64(seed))
    if field == "real":
        x = rng.standard_normal((count, n)).astype(np.complex128)
    else:
        x = rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n))
    nx = np.linalg.norm(x, axis=1)
    while np.any(nx == 0.0):  # probability ~0, but keep the math total
        bad = np.nonzero(nx == 0.0)[0]
        if field == "real":
            x[bad] = rng.standard_normal((bad.size, n)).astype(np.complex128)
        else:
            x[bad] = rng.standard_normal((bad.size, n)) + 1j * rng.standard_normal((bad.size, n))
        nx = np.linalg.norm(x, axis=1)
    y = x @ m.T
    ny = np.linalg.norm(y, axis=1)
    # The defining angle is arccos(Re<y,x> / (|y||x|)), clamped against
    # round-off.  It is evaluated through the half-angle identity
    # tan(theta/2) = |v - u| / |v + u| for the normalized vectors,
    # which is the same angle in exact arithmetic but stays accurate
    # at both ends of [0, pi] (a raw arccos turns a 1-ulp defect in
    # the cosine into ~1e-8 of angle).
    angles = np.zeros(count)
    nonzero = ny > 0.0
    if np.any(nonzero):
        un = x[nonzero] / nx[nonzero, None]
        vn = y[nonzero] / ny[nonzero, None]
        diff = np.linalg.norm(vn - un, axis=1)
        summ = np.linalg.norm(vn + un, axis=1)
        angles[nonzero] = 2.0 * np.arctan2(diff, summ)
    samples: list[ExtComplex] = []
    for i in range(count):
        if ny[i] == 0.0:
            samples.append(0j)
            continue
        ratio = ny[i] / nx[i]
        angle = angles[i]
        upper = ratio * complex(math.cos(angle), math.sin(angle))
        samples.append(upper)
        samples.append(upper.conjugate())
    return samples


@dataclass(frozen=True)
class SampleReport:
    """Aggregate of a containment check over sampled SRG points.

    max_violation is the largest disk-side distance beyond tolerance
    among non-contained samples (0 when everything is contained);
    worst_point is the sample achieving it.
    """

    total: int
    contained: int
    max_violation: float
    worst_point: ExtComplex | None
    generator: str = GENERATOR


def check_containment(samples, region: cgeom.SrgRegion, tol: float = 1e-7) -> SampleReport:
    """Check every sample against a region; boundary-only regions test
    distance to the boundary curve instead of interior membership.

    Bulk decisions come from certified locator bounds; samples the
    bounds cannot settle are re-measured exactly, so every decision
    and the reported violation are exact.
    """
    samples = list(samples)
    ws = np.array([cgeom.bk_forward(z) for z in samples], dtype=np.complex128)
    locator = cgeom.PolygonLocator(region.disk_hull)
    _, signed_ub, boundary_ub = locator.query(ws)
    if region.boundary_only:
        certain_in = boundary_ub <= tol
    else:
        certain_in = signed_ub <= tol
    contained = int(np.count_nonzero(certain_in))
    unresolved = np.nonzero(~certain_in)[0]
    max_violation = 0.0
    worst: ExtComplex | None = None
    if unresolved.size:
        exact = locator.exact(ws[unresolved])
        if region.boundary_only:
            exact = np.abs(exact)
        for pos, d in zip(unresolved, exact):
            if d <= tol:
                contained += 1
            elif d > max_violation:
                max_violation = float(d)
                worst = samples[int(pos)]
    return SampleReport(
        total=len(samples),
        contained=contained,
        max_violation=max_violation,
        worst_point=worst,
        generator=GENERATOR,
    )
