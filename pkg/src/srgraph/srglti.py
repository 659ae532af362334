"""SRG of the multiplication operator of a scalar rational transfer function.

h(omega) = b(i*omega)/a(i*omega) acts by multiplication on frequency
components; its graph normalizes through a spectral factor s with

    |s(omega)|^2 * (1 + |h(omega)|^2) = 1,

obtained by factoring a*~a + b*~b into c*~c with Hurwitz c (~ is the
paraconjugate).  Each frequency then contributes the single disk point

    |s|^2 * (|h|^2 - 1 - 2i*Re h) = f(h(omega)),

evaluated pole-safely from the raw coefficients, and the SRG is the
hyperbolic hull of these points over a frequency grid that includes
omega = infinity and any imaginary-axis poles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import cgeom
from .cgeom import INFINITY, ExtComplex
from .errors import FactorizationDegenerateError, InputError, NumericalError
from .linalg import poly_roots

# Relative half-plane tolerance when classifying roots of the factored
# even polynomial; companion-matrix roots at these degrees are accurate
# to ~1e-10, so 1e-8 separates the axis safely.
AXIS_TOL = 1e-8


def _coeff_tuple(coeffs, what: str) -> tuple[complex, ...]:
    arr = [complex(c) for c in coeffs]
    if not arr:
        raise InputError(f"{what} must have at least one coefficient")
    if any(not (math.isfinite(c.real) and math.isfinite(c.imag)) for c in arr):
        raise InputError(f"{what} coefficients must be finite")
    while len(arr) > 1 and arr[0] == 0:
        arr.pop(0)
    return tuple(arr)


@dataclass(frozen=True)
class RationalTF:
    """Scalar rational transfer function, coefficients leading first.

    num/den are stored trimmed of leading zeros; the zero numerator is
    allowed (the zero transfer function), a zero denominator is not.
    """

    num: tuple[complex, ...]
    den: tuple[complex, ...]

    @property
    def degree_num(self) -> int:
        if self.is_zero:
            return -1
        return len(self.num) - 1

    @property
    def degree_den(self) -> int:
        return len(self.den) - 1

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.num)


def rational_tf(num, den) -> RationalTF:
    """Validate and trim coefficient lists into a RationalTF."""
    num_t = _coeff_tuple(num, "numerator")
    den_t = _coeff_tuple(den, "denominator")
    if all(c == 0 for c in den_t):
        raise InputError("denominator must not be the zero polynomial")
    return RationalTF(num=num_t, den=den_t)


def _paraconjugate(coeffs: np.ndarray) -> np.ndarray:
    """p~(s) = conj-coefficients of p evaluated at -s, leading first."""
    out = np.conj(np.asarray(coeffs, dtype=np.complex128))
    length = len(out)
    for idx in range(length):
        power = length - 1 - idx
        if power % 2:
            out[idx] = -out[idx]
    return out


@dataclass(frozen=True)
class SpectralFactor:
    """Stable factor s = s_num/s_den with |s|^2 (1 + |h|^2) = 1.

    s_num is the denominator of h; s_den is Hurwitz (all roots in the
    open left half-plane) with a positive real gain fixed at a
    reference frequency.
    """

    s_num: tuple[complex, ...]
    s_den: tuple[complex, ...]


def spectral_factorize(tf: RationalTF) -> SpectralFactor:
    """Factor a~a + b~b = c~c with Hurwitz c; return s = a/c.

    The even polynomial a~a + b~b is nonnegative on the imaginary axis
    and its roots come in (r, -conj(r)) pairs; c collects the open
    left-half-plane roots, scaled by the positive constant that makes
    |c|^2 = |a|^2 + |b|^2 at a reference frequency.  A root on the
    axis itself means a and b share an imaginary-axis zero, which has
    no stable factorization.

    Both coefficient arrays of the result are divided by the modulus
    of the denominator's leading coefficient, so s_den depends only on
    the function h itself: rescaling num and den by a common constant
    leaves s_den unchanged and moves only a unimodular factor onto
    s_num.
    """
    a = np.asarray(tf.den, dtype=np.complex128)
    b = np.asarray(tf.num, dtype=np.complex128)
    norm = abs(complex(tf.den[0]))
    m = max(tf.degree_den, tf.degree_num if not tf.is_zero else 0)
    if m == 0:
        gain = math.hypot(abs(a[0]), abs(b[0]))
        if gain == 0.0:
            raise FactorizationDegenerateError("transfer function has no finite gain")
        return SpectralFactor(
            s_num=tuple(complex(x) / norm for x in tf.den),
            s_den=(complex(gain / norm),),
        )

    p = np.polyadd(np.polymul(a, _paraconjugate(a)), np.polymul(b, _paraconjugate(b)))
    roots = poly_roots(p)
    lhp = []
    for r in roots:
        r = complex(r)
        if abs(r.real) <= AXIS_TOL * max(1.0, abs(r)):
            raise FactorizationDegenerateError(
                "numerator and denominator share an imaginary-axis zero "
                f"near s = {r:.6g}; no stable spectral factor exists"
            )
        if r.real < 0:
            lhp.append(r)
    if len(lhp) != m:
        raise NumericalError(
            f"spectral factor degree bookkeeping failed: expected {m} stable "
            f"roots, found {len(lhp)}"
        )
    c_monic = np.poly(np.array(lhp, dtype=np.complex128))

    # Fix the positive gain at omega = 0, falling back to nearby
    # frequencies if the reference value degenerates there.
    p_scale = float(np.max(np.abs(a)) ** 2 + np.max(np.abs(b)) ** 2)
    c_scale = float(np.max(np.abs(c_monic)) ** 2)
    candidates = [0.0]
    for k in range(1, 2 * m + 6):
        candidates.extend((0.5 * k, -0.5 * k))
    gain2 = None
    for w0 in candidates:
        s0 = 1j * w0
        pv = abs(np.polyval(a, s0)) ** 2 + abs(np.polyval(b, s0)) ** 2
        cv = abs(np.polyval(c_monic, s0)) ** 2
        if pv > 1e-12 * p_scale and cv > 1e-12 * c_scale:
            gain2 = pv / cv
            break
    if gain2 is None:
        raise NumericalError("could not normalize the spectral factor gain")
    c_arr = (math.sqrt(gain2) / norm) * c_monic
    if all(x.imag == 0 for x in tf.num) and all(x.imag == 0 for x in tf.den):
        # Real data gives a conjugate-symmetric stable root set, so the
        # factor is real up to root-finder round-off; drop the dust.
        if float(np.max(np.abs(c_arr.imag))) <= 1e-9 * float(np.max(np.abs(c_arr))):
            c_arr = c_arr.real.astype(np.complex128)
    c = tuple(complex(x) for x in c_arr)
    return SpectralFactor(
        s_num=tuple(complex(x) / norm for x in tf.den), s_den=c
    )


def _freq_is_infinite(omega) -> bool:
    if cgeom.is_infinity(omega):
        return True
    try:
        return math.isinf(float(omega))
    except (TypeError, ValueError):
        return False


def _pole_tol(coeffs: tuple[complex, ...], omega: float) -> float:
    scale = max(abs(c) for c in coeffs)
    return 1e-12 * scale * max(1.0, abs(omega)) ** (len(coeffs) - 1)


def tf_value(tf: RationalTF, omega) -> ExtComplex:
    """h(omega) as an extended complex number.

    Imaginary-axis poles return infinity; omega = infinity follows the
    degree rules (infinity if the numerator degree is larger, 0 if
    smaller, the leading-coefficient ratio if equal).
    """
    if _freq_is_infinite(omega):
        q, deg_p = tf.degree_num, tf.degree_den
        if q > deg_p:
            return INFINITY
        if q < deg_p:
            return 0j
        return complex(tf.num[0] / tf.den[0])
    w = float(omega)
    s = 1j * w
    av = complex(np.polyval(np.asarray(tf.den), s))
    if abs(av) <= _pole_tol(tf.den, w):
        return INFINITY
    return complex(np.polyval(np.asarray(tf.num), s)) / av


def lti_disk_point(tf: RationalTF, factor: SpectralFactor, omega) -> complex:
    """The disk point f(h(omega)), evaluated pole-safely.

    Uses |s|^2 (|h|^2 - 1 - 2i Re h) with every |h| expanded into raw
    numerator/denominator values, so imaginary-axis poles land exactly
    on f(infinity) = 1 instead of overflowing.
    """
    if _freq_is_infinite(omega):
        return cgeom.bk_forward(tf_value(tf, INFINITY))
    w = float(omega)
    s = 1j * w
    av = complex(np.polyval(np.asarray(tf.den), s))
    bv = complex(np.polyval(np.asarray(tf.num), s))
    if abs(av) <= _pole_tol(tf.den, w):
        return complex(1.0, 0.0)
    cv = complex(np.polyval(np.asarray(factor.s_den), s))
    numerator = (abs(bv) ** 2 - abs(av) ** 2) - 2j * (np.conj(av) * bv).real
    return cgeom.clamp_disk(numerator / abs(cv) ** 2)


@dataclass(frozen=True)
class FreqGrid:
    """Finite ascending deduplicated frequencies, plus an infinity flag."""

    omegas: tuple[float, ...]
    include_infinity: bool


def freq_grid(omegas, include_infinity: bool = True) -> FreqGrid:
    """Sort, deduplicate, and validate a frequency list."""
    vals = [float(w) for w in omegas]
    if not vals:
        raise InputError("frequency grid must be non-empty")
    if any(not math.isfinite(w) for w in vals):
        raise InputError("grid frequencies must be finite; infinity is a flag")
    return FreqGrid(omegas=tuple(sorted(set(vals))), include_infinity=bool(include_infinity))


def _axis_poles(tf: RationalTF) -> list[float]:
    if len(tf.den) < 2:
        return []
    poles = []
    for r in poly_roots(np.asarray(tf.den)):
        r = complex(r)
        if abs(r.real) <= AXIS_TOL * max(1.0, abs(r)):
            poles.append(float(r.imag))
    return sorted(set(poles))


def default_grid(tf: RationalTF, n: int = 512) -> FreqGrid:
    """Projective frequency grid: tan-spaced to cover all magnitudes.

    omega_k = tan(pi (2k - n) / (2n + 2)) for k = 0..n, plus infinity;
    imaginary-axis poles of h are inserted exactly, with symmetric
    neighborhoods so the curve's approach to them is sampled.
    """
    if n < 16:
        raise InputError("default grid needs n >= 16")
    omegas = [math.tan(math.pi * (2 * k - n) / (2 * n + 2)) for k in range(n + 1)]
    for wp in _axis_poles(tf):
        omegas.append(wp)
        for delta in (1e-2, 1e-3, 1e-4):
            step = delta * max(1.0, abs(wp))
            omegas.extend((wp - step, wp + step))
    return freq_grid(omegas, include_infinity=True)


@dataclass(frozen=True)
class LtiSrg:
    """SRG of a transfer function plus the raw data behind it.

    region is the SRG proper; curve is the frequency response
    h(omega) over the same grid (the spectrum of the multiplication
    operator, useful for plotting); disk_points are the mapped grid
    points whose hull is the region's disk side.
    """

    region: cgeom.SrgRegion
    omegas: tuple[ExtComplex, ...]
    disk_points: tuple[complex, ...]
    curve: tuple[ExtComplex, ...]
    factor: SpectralFactor


def lti_srg(tf: RationalTF, grid: FreqGrid | None = None,
            factor: SpectralFactor | None = None) -> LtiSrg:
    """SRG of the multiplication operator of h over a frequency grid.

    The operator is normal, so the SRG is the hyperbolic hull of the
    frequency-response curve: disk side = convex hull of the per-omega
    disk points.  Infinity joins the grid whenever the function is
    improper or has an imaginary-axis pole, regardless of the grid
    flag.
    """
    if grid is None:
        grid = default_grid(tf)
    if factor is None:
        factor = spectral_factorize(tf)
    improper = tf.degree_num > tf.degree_den
    with_inf = grid.include_infinity or improper or bool(_axis_poles(tf))
    omegas: list[ExtComplex] = list(grid.omegas)
    if with_inf:
        omegas.append(INFINITY)
    disk_points = [lti_disk_point(tf, factor, w) for w in omegas]
    curve = [tf_value(tf, w) for w in omegas]
    hull = cgeom.convex_hull_2d(disk_points)
    region = cgeom.region_from_disk_hull(hull)
    return LtiSrg(
        region=region,
        omegas=tuple(omegas),
        disk_points=tuple(disk_points),
        curve=tuple(curve),
        factor=factor,
    )
