"""SRG of a dense matrix operator via its graph compression.

The graph of T normalizes with S = (I + T*T)^(-1/2), and the bounded
operator

    V = S (-I - iT - iT* + T*T) S

satisfies f(srg(T)) = W(V): tracing the numerical range of V and
mapping back through the disk inverse yields the SRG.  Real matrices
of size 2 are special: their real-field SRG is only the boundary of
the complex-field region, so those results carry a boundary_only flag.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import cgeom
from .errors import IllConditionedError, InputError
from .linalg import as_matrix, general_eig, inv_sqrt_hpd
from .nrange import nrange_boundary, support_values

# Condition-number ceiling for user-supplied similarity transforms;
# beyond this S T S^-1 has no double-precision accuracy left.
COND_LIMIT = 1e12
# Default outer-approximation bound requested from the angle sweep: the
# true region lies within this distance of the returned polygon.
DEFAULT_REFINE_TOL = 1e-8


@dataclass(frozen=True)
class SrgOptions:
    """Knobs for the SRG sweep.

    refine_tol bounds how far the true disk-side region may extend
    beyond the returned polygon (None disables adaptive refinement);
    spacing is the disk-side arc spacing of the emitted branch points.
    """

    num_angles: int = 720
    field: str = "complex"
    tol: float = 1e-9
    refine_tol: float | None = DEFAULT_REFINE_TOL
    spacing: float = cgeom.EDGE_SPACING

    def __post_init__(self):
        if self.num_angles < 8:
            raise InputError("num_angles must be at least 8")
        if self.field not in ("real", "complex"):
            raise InputError("field must be 'real' or 'complex'")
        if not self.tol > 0:
            raise InputError("tol must be positive")


@dataclass(frozen=True)
class VOperator:
    """The graph compression V together with the normalizer S used."""

    v: np.ndarray
    s_factor: np.ndarray


def build_v(t) -> VOperator:
    """Graph compression of T: V = S(-I - iT - iT* + T*T)S.

    S is the Hermitian inverse square root of I + T*T, so that the
    columns of [S; TS] are orthonormal and W(V) = f(srg(T)) lies in
    the closed unit disk.
    """
    m = as_matrix(t, square=True)
    n = m.shape[0]
    eye = np.eye(n, dtype=np.complex128)
    gram = eye + m.conj().T @ m
    s = inv_sqrt_hpd(gram)
    core = -eye - 1j * m - 1j * m.conj().T + m.conj().T @ m
    v = s @ core @ s
    return VOperator(v=v, s_factor=s)


def srg_complex(t, opts: SrgOptions | None = None) -> cgeom.SrgRegion:
    """SRG of T over the complex field.

    The disk-side hull is the traced numerical range of V; the plane
    branches come from mapping its boundary back through the disk
    inverse.  Matrices are bounded, so the region never contains
    infinity.
    """
    opts = opts or SrgOptions()
    vop = build_v(t)
    nb = nrange_boundary(vop.v, num_angles=opts.num_angles, refine_tol=opts.refine_tol)
    return cgeom.region_from_disk_hull(
        nb.hull, contains_infinity=False, boundary_only=False, spacing=opts.spacing
    )


def srg_real(t, opts: SrgOptions | None = None) -> cgeom.SrgRegion:
    """SRG of a real matrix over the real field.

    For a 2x2 real matrix the real-field SRG is exactly the boundary
    of the complex-field region (boundary_only = True); for every
    other size it fills the same region as the complex case.
    """
    m = as_matrix(t, square=True)
    if np.max(np.abs(m.imag)) != 0.0:
        raise InputError("srg_real requires a matrix with real entries")
    region = srg_complex(m, opts)
    if m.shape[0] == 2:
        return dataclasses.replace(region, boundary_only=True)
    return region


def hull_bk_spectrum(t) -> cgeom.SrgRegion:
    """Hyperbolic hull of the spectrum, hull_bk(eigenvalues of T).

    Eigenvalues are always taken over the complex field, also for real
    input.  For normal T this region equals the full SRG.
    """
    eigs = general_eig(t)
    return cgeom.hull_bk([complex(ev) for ev in eigs])


def similarity_scaled_srg(t, s, opts: SrgOptions | None = None) -> cgeom.SrgRegion:
    """SRG of T under the scaled metric induced by S: srg(S T S^-1)."""
    m = as_matrix(t, square=True)
    sm = as_matrix(s, square=True)
    if sm.shape != m.shape:
        raise InputError("similarity transform must match the operator's shape")
    cond = float(np.linalg.cond(sm))
    if not math.isfinite(cond) or cond >= COND_LIMIT:
        raise IllConditionedError(
            f"similarity transform condition number {cond:.3e} exceeds {COND_LIMIT:.0e}"
        )
    # Right division (S T) S^-1 without forming the inverse explicitly.
    scaled = np.linalg.solve(sm.T, (sm @ m).T).T
    return srg_complex(scaled, opts)


def gamma_scaling_demo(t, gammas, opts: SrgOptions | None = None):
    """Shrink the SRG toward the spectral hull with S = diag(g, g^2, ...)Q.

    Q comes from a complex Schur triangularization, so Q T Q* is upper
    triangular and the diagonal scaling damps its strictly-upper part
    by 1/g and more.  Returns [(gamma, hausdorff)] where hausdorff is
    the distance between the scaled SRG's disk hull and the planar
    hull of the mapped eigenvalues; it tends to zero as gamma grows.
    """
    m = as_matrix(t, square=True)
    gam = [float(g) for g in gammas]
    if not gam:
        raise InputError("gammas must be non-empty")
    if any(not (g > 0) for g in gam):
        raise InputError("gammas must be positive")
    if any(b <= a for a, b in zip(gam, gam[1:])):
        raise InputError("gammas must be strictly ascending")
    n = m.shape[0]
    _, z = scipy.linalg.schur(m, output="complex")
    q = z.conj().T
    target = cgeom.convex_hull_2d([cgeom.bk_forward(complex(ev)) for ev in general_eig(m)])
    out = []
    for g in gam:
        scale = np.diag([g ** (k + 1) for k in range(n)]).astype(np.complex128)
        region = similarity_scaled_srg(m, scale @ q, opts)
        out.append((g, cgeom.polygon_hausdorff(region.disk_hull, target)))
    return out


@dataclass(frozen=True)
class SpectrumReport:
    """Per-eigenvalue containment margins of f(eigenvalue) in W(V).

    margin > 0 means strictly inside the sampled support lines; an
    eigenvalue counts as contained when margin >= -tol.
    """

    eigenvalues: tuple[complex, ...]
    margins: tuple[float, ...]
    contained: tuple[bool, ...]
    tol: float

    @property
    def all_contained(self) -> bool:
        return all(self.contained)

    @property
    def worst_margin(self) -> float:
        return min(self.margins)


def spectrum_check(t, opts: SrgOptions | None = None) -> SpectrumReport:
    """Verify that every eigenvalue's disk image lies in W(V).

    Failures are reported, not raised: the report carries one margin
    per eigenvalue (minimum slack over the sampled support lines).
    """
    opts = opts or SrgOptions()
    vop = build_v(t)
    eigs = [complex(ev) for ev in general_eig(t)]
    thetas = [2.0 * math.pi * k / opts.num_angles for k in range(opts.num_angles)]
    h = support_values(vop.v, thetas)
    cos = np.cos(thetas)
    sin = np.sin(thetas)
    margins = []
    flags = []
    for ev in eigs:
        w = cgeom.bk_forward(ev)
        margin = float(np.min(h - (w.real * cos + w.imag * sin)))
        margins.append(margin)
        flags.append(margin >= -opts.tol)
    return SpectrumReport(
        eigenvalues=tuple(eigs),
        margins=tuple(margins),
        contained=tuple(flags),
        tol=opts.tol,
    )
