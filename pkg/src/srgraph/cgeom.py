"""Geometry of the extended complex plane and the Beltrami-Klein disk model.

The forward map

    f(z) = 1 - 2*(1 + i*Re z) / (1 + |z|^2),        f(infinity) = 1

sends the extended complex plane onto the closed unit disk.  It only
sees Re z and |z|^2, so conjugate points collapse to the same disk
point bit-for-bit.  Generalized circles centered on the real axis map
to chords, which is what turns hyperbolic convex hulls into ordinary
planar hulls: hull_bk(s) = g(hull(f(s))) with g the set-valued inverse

    g(w) = {(Im w +/- i*sqrt(1 - |w|^2)) / (Re w - 1)},   g(1) = {infinity}.

Everything here is pure and immutable; regions are plain dataclasses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import InputError, OutOfDiskError

# Clamp tolerance for points nominally inside the closed unit disk;
# eigensolve round-off pushes support points marginally outside.
EPS_DISK = 1e-9
# Cross-product tolerance for pruning collinear hull vertices.
COLLINEAR_TOL = 1e-12
# Disk points closer than this to 1 are treated as the image of infinity.
INF_TOL = 1e-12
# Spacing used when densifying polygon edges into boundary walks.
EDGE_SPACING = 1.0 / 128.0


class Infinity:
    """The unique point at infinity of the extended complex plane."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = Infinity()

ExtComplex = Union[complex, Infinity]


def is_infinity(z) -> bool:
    """True iff z is the point at infinity."""
    return isinstance(z, Infinity)


def as_finite_complex(z) -> complex:
    """Coerce to a finite complex number, rejecting NaN and float infinities."""
    w = complex(z)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise InputError(f"expected a finite complex value, got {w!r}")
    return w


def ext_conjugate(z: ExtComplex) -> ExtComplex:
    """Complex conjugate on the extended plane; infinity is self-conjugate."""
    if is_infinity(z):
        return INFINITY
    return complex(z).conjugate()


def clamp_disk(w, eps: float = EPS_DISK) -> complex:
    """Clamp a nominal disk point so |w| <= 1, rejecting |w| > 1 + eps."""
    w = as_finite_complex(w)
    r = abs(w)
    if r > 1.0 + eps:
        raise OutOfDiskError(f"|w| = {r!r} exceeds the unit disk beyond tolerance {eps}")
    if r > 1.0:
        return w / r
    return w


def bk_forward(z: ExtComplex) -> complex:
    """Map a point of the extended complex plane into the closed unit disk.

    f(z) = 1 - 2*(1 + i*Re z)/(1 + |z|^2) and f(infinity) = 1.  The
    components only involve Re z and |z|^2, so f(z) == f(conj(z))
    exactly.  |f(z)| <= 1 holds analytically; round-off excursions are
    clamped radially.
    """
    if is_infinity(z):
        return complex(1.0, 0.0)
    z = as_finite_complex(z)
    d = 1.0 + (z.real * z.real + z.imag * z.imag)
    w = complex(1.0 - 2.0 / d, -2.0 * z.real / d)
    r = abs(w)
    if r > 1.0:
        w = w / r
    return w


def bk_inverse(w) -> tuple[ExtComplex, ExtComplex]:
    """Return the conjugate pair of preimages (upper, lower) of a disk point.

    The first element carries the non-negative-imaginary representative;
    the second is its conjugate.  g(1) = {infinity}, returned as the
    pair (INFINITY, INFINITY).  1 - |w|^2 is clamped to [0, inf) before
    the square root.
    """
    w = clamp_disk(w)
    if abs(w - 1.0) <= INF_TOL:
        return (INFINITY, INFINITY)
    denom = 1.0 - w.real  # > 0 away from w = 1
    rad = 1.0 - (w.real * w.real + w.imag * w.imag)
    if rad < 0.0:
        rad = 0.0
    s = math.sqrt(rad)
    upper = complex(-w.imag / denom, s / denom)
    return (upper, upper.conjugate())


# ---------------------------------------------------------------------------
# Planar convex hulls (monotone chain)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConvexPolygon:
    """A convex polygon given by counter-clockwise vertices.

    May degenerate to a segment (2 vertices) or a point (1 vertex).
    Vertices start at the lexicographically smallest point.
    """

    vertices: tuple[complex, ...]

    def __post_init__(self):
        if len(self.vertices) == 0:
            raise InputError("a polygon needs at least one vertex")


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def convex_hull_2d(points: Iterable[complex]) -> ConvexPolygon:
    """Monotone-chain convex hull of finite planar points.

    A vertex is pruned as collinear when its perpendicular distance to
    the chord joining its neighbours is at most COLLINEAR_TOL, scaled
    linearly for data outside the unit box so the test stays meaningful
    at any magnitude.  Using a distance (not raw cross-product) test
    keeps the pruning error bounded independently of how densely the
    boundary was sampled.
    """
    pts = [as_finite_complex(p) for p in points]
    if not pts:
        raise InputError("convex_hull_2d needs at least one point")
    pts = sorted(set(pts), key=lambda p: (p.real, p.imag))
    if len(pts) == 1:
        return ConvexPolygon((pts[0],))
    scale = max(1.0, max(max(abs(p.real), abs(p.imag)) for p in pts))
    tol = COLLINEAR_TOL * scale

    lower: list[complex] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= tol * abs(
            p - lower[-2]
        ):
            lower.pop()
        lower.append(p)
    upper: list[complex] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= tol * abs(
            p - upper[-2]
        ):
            upper.pop()
        upper.append(p)
    verts = lower[:-1] + upper[:-1]
    if len(verts) < 2:
        # All points coincide up to the pruning tolerance.
        return ConvexPolygon((pts[0], pts[-1]) if pts[0] != pts[-1] else (pts[0],))
    return ConvexPolygon(tuple(verts))


def polygon_area(poly: ConvexPolygon) -> float:
    """Shoelace area; zero for degenerate polygons."""
    v = poly.vertices
    if len(v) < 3:
        return 0.0
    s = 0.0
    for i in range(len(v)):
        a, b = v[i], v[(i + 1) % len(v)]
        s += a.real * b.imag - b.real * a.imag
    return 0.5 * s


def _dist_point_segment(p: complex, a: complex, b: complex) -> float:
    ab = b - a
    denom = ab.real * ab.real + ab.imag * ab.imag
    if denom == 0.0:
        return abs(p - a)
    t = ((p.real - a.real) * ab.real + (p.imag - a.imag) * ab.imag) / denom
    t = min(1.0, max(0.0, t))
    return abs(p - (a + t * ab))


def polygon_signed_distance(poly: ConvexPolygon, w) -> float:
    """Signed distance to the polygon: negative inside, zero on the boundary.

    For non-degenerate polygons this is the maximum over edges of the
    signed distance to the edge line (exact inside; a lower bound of
    the Euclidean distance outside, near corners).  Degenerate
    polygons give the plain distance to the point or segment.
    """
    w = as_finite_complex(w)
    v = poly.vertices
    if len(v) == 1:
        return abs(w - v[0])
    if len(v) == 2:
        return _dist_point_segment(w, v[0], v[1])
    best = -math.inf
    for i in range(len(v)):
        a, b = v[i], v[(i + 1) % len(v)]
        ex, ey = b.real - a.real, b.imag - a.imag
        ln = math.hypot(ex, ey)
        if ln == 0.0:
            continue
        # Outward normal of a CCW edge is (ey, -ex)/|e|.
        d = ((w.real - a.real) * ey - (w.imag - a.imag) * ex) / ln
        if d > best:
            best = d
    return best


def polygon_distance(poly: ConvexPolygon, w) -> float:
    """Euclidean distance to the polygon as a set (zero inside)."""
    w = as_finite_complex(w)
    v = poly.vertices
    if len(v) == 1:
        return abs(w - v[0])
    if len(v) == 2:
        return _dist_point_segment(w, v[0], v[1])
    if polygon_signed_distance(poly, w) <= 0.0:
        return 0.0
    return min(_dist_point_segment(w, v[i], v[(i + 1) % len(v)]) for i in range(len(v)))


def polygon_hausdorff(p: ConvexPolygon, q: ConvexPolygon) -> float:
    """Hausdorff distance between two convex polygons (as filled sets).

    The distance-to-a-convex-set function is convex, so its maximum
    over a polytope is attained at a vertex; checking vertices both
    ways is exact.
    """
    d1 = max(polygon_distance(q, v) for v in p.vertices)
    d2 = max(polygon_distance(p, v) for v in q.vertices)
    return max(d1, d2)


class PolygonLocator:
    """Fast certified distance queries against a fixed convex polygon.

    Each query point is located in its angular sector around an
    interior anchor (O(log V) via binary search), which identifies the
    boundary edge the anchor ray exits through.  That edge gives an
    exact inside/outside decision plus certified lower/upper distance
    bounds; the rare queries whose bounds straddle a caller's
    tolerance can be resolved with the exact O(V) computation.
    Polygons where the sector structure cannot be validated fall back
    to exact answers for every query.
    """

    def __init__(self, poly: ConvexPolygon):
        self.poly = poly
        v = np.asarray(poly.vertices, dtype=np.complex128)
        self._v = v
        self._direct = True
        if len(v) < 3:
            return
        c = complex(v.mean())
        ang = np.angle(v - c)
        order = np.argsort(ang, kind="stable")
        count = len(v)
        # CCW vertices around an interior anchor sort by a pure
        # rotation; anything else means the polygon is unusable here.
        if not np.array_equal(np.mod(order - order[0], count), np.arange(count)):
            return
        ov = v[order]
        oang = ang[order]
        if np.any(np.diff(oang) <= 0.0):
            return
        nxt = np.roll(ov, -1)
        edges = nxt - ov
        lens = np.abs(edges)
        if np.any(lens == 0.0):
            return
        normals = -1j * edges / lens
        if np.max(np.real(np.conj(normals) * (c - ov))) >= 0.0:
            return
        self._direct = False
        self._c = c
        self._oang = oang
        self._oa = ov
        self._ob = nxt
        self._n = normals

    def query(self, ws):
        """Certified per-point bounds, vectorized.

        Returns (signed_lb, signed_ub, boundary_ub): bounds on the
        signed distance (negative strictly inside) and an upper bound
        on the distance to the polygon boundary.  All three are
        rigorous; signs of signed_lb/signed_ub agree with the exact
        inside/outside decision.
        """
        ws = np.asarray(ws, dtype=np.complex128).ravel()
        if self._direct:
            d = self.exact(ws)
            return d, d.copy(), np.abs(d)
        rel = ws - self._c
        beta = np.angle(rel)
        idx = np.searchsorted(self._oang, beta, side="right") - 1
        idx[idx < 0] = len(self._oang) - 1
        a = self._oa[idx]
        b = self._ob[idx]
        n = self._n[idx]
        # Support gap in the located edge's normal direction: its sign
        # is the exact in/out decision, its value a signed lower bound.
        dot = np.real(np.conj(n) * (ws - a))
        # Distance to the located edge segment: a true boundary point.
        e = b - a
        t = np.clip(np.real(np.conj(e) * (ws - a)) / np.abs(e) ** 2, 0.0, 1.0)
        seg = np.abs(ws - (a + t * e))
        # The anchor ray exits the boundary through this edge.
        rho = np.abs(rel)
        safe = np.where(rho > 0.0, rho, 1.0)
        u = np.where(rho > 0.0, rel / safe, 1.0 + 0.0j)
        un = np.real(np.conj(n) * u)
        texit = np.real(np.conj(n) * (a - self._c)) / np.maximum(un, 1e-300)
        ray = np.abs(rho - texit)
        boundary_ub = np.minimum(seg, ray)
        signed_lb = np.maximum(dot, -boundary_ub)
        signed_ub = np.where(dot > 0.0, boundary_ub, 0.0)
        return signed_lb, signed_ub, boundary_ub

    def exact(self, ws) -> np.ndarray:
        """Exact signed distances (negative inside), O(V) per point."""
        ws = np.asarray(ws, dtype=np.complex128).ravel()
        v = self._v
        if len(v) == 1:
            return np.abs(ws - v[0])
        if len(v) == 2:
            e = v[1] - v[0]
            t = np.clip(np.real(np.conj(e) * (ws - v[0])) / np.abs(e) ** 2, 0.0, 1.0)
            return np.abs(ws - (v[0] + t * e))
        nxt = np.roll(v, -1)
        edges = nxt - v
        lens = np.abs(edges)
        keep = lens > 0.0
        a = v[keep]
        e = edges[keep]
        ln = lens[keep]
        n = -1j * e / ln
        out = np.empty(ws.shape, dtype=np.float64)
        for i, w in enumerate(ws):
            dots = np.real(np.conj(n) * (w - a))
            d = float(np.max(dots))
            if d > 0.0:
                t = np.clip(np.real(np.conj(e) * (w - a)) / ln**2, 0.0, 1.0)
                d = float(np.min(np.abs(w - (a + t * e))))
            out[i] = d
        return out


def polygon_boundary_points(poly: ConvexPolygon, spacing: float = EDGE_SPACING) -> list[complex]:
    """CCW boundary walk with edges densified to at most `spacing` steps.

    Degenerate polygons traverse once (no return leg), so a segment
    yields points from one endpoint to the other.
    """
    v = poly.vertices
    if len(v) == 1:
        return [v[0]]
    if len(v) == 2:
        edges = [(v[0], v[1])]
        closed = False
    else:
        edges = [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]
        closed = True
    out: list[complex] = []
    for a, b in edges:
        n = max(1, int(math.ceil(abs(b - a) / spacing)))
        for k in range(n):
            out.append(a + (b - a) * (k / n))
    if not closed:
        out.append(edges[-1][1])
    return out


# ---------------------------------------------------------------------------
# SRG regions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SrgRegion:
    """An SRG result: disk-side hull plus the two conjugate plane branches.

    `boundary_only` marks the 2-dimensional real-graph case where the
    SRG is the boundary curve alone; the disk_hull is still the filled
    hull so containment queries stay meaningful.
    """

    disk_hull: ConvexPolygon
    upper_branch: tuple[ExtComplex, ...]
    lower_branch: tuple[ExtComplex, ...]
    contains_infinity: bool
    boundary_only: bool


def region_from_disk_hull(
    hull: ConvexPolygon,
    *,
    contains_infinity: bool | None = None,
    boundary_only: bool = False,
    spacing: float = EDGE_SPACING,
) -> SrgRegion:
    """Build an SrgRegion from a disk-side hull by mapping its boundary back.

    The upper branch keeps the non-negative-imaginary representative of
    each boundary point; the lower branch is its elementwise conjugate.
    When `contains_infinity` is None it is derived from whether the
    hull touches the point 1 within EPS_DISK.
    """
    if contains_infinity is None:
        contains_infinity = polygon_distance(hull, complex(1.0, 0.0)) <= EPS_DISK
    upper = tuple(bk_inverse(w)[0] for w in polygon_boundary_points(hull, spacing))
    lower = tuple(ext_conjugate(u) for u in upper)
    return SrgRegion(hull, upper, lower, bool(contains_infinity), bool(boundary_only))


def hull_bk(points: Sequence[ExtComplex], *, spacing: float = EDGE_SPACING) -> SrgRegion:
    """Hyperbolic convex hull g(hull(f(points))) as an SrgRegion."""
    pts = list(points)
    if not pts:
        raise InputError("hull_bk needs at least one point")
    has_inf = any(is_infinity(p) for p in pts)
    hull = convex_hull_2d([bk_forward(p) for p in pts])
    touches_one = polygon_distance(hull, complex(1.0, 0.0)) <= EPS_DISK
    return region_from_disk_hull(
        hull, contains_infinity=has_inf or touches_one, spacing=spacing
    )


def region_signed_distance(region: SrgRegion, z: ExtComplex) -> float:
    """Disk-side signed distance of f(z) to the region's hull.

    Negative means strictly inside.  For boundary-only regions the
    result is the absolute distance to the hull boundary, so small
    values mean "on the curve".
    """
    w = bk_forward(z)
    d = polygon_signed_distance(region.disk_hull, w)
    if d > 0.0:
        d = polygon_distance(region.disk_hull, w)
    if region.boundary_only:
        return abs(d)
    return d


def region_contains(region: SrgRegion, z: ExtComplex, tol: float = 1e-9) -> bool:
    """True iff f(z) lies inside or within tol of the region's disk hull.

    Infinity is handled through its image f(infinity) = 1.  For
    boundary-only regions this tests distance to the boundary curve.
    """
    return region_signed_distance(region, z) <= tol
