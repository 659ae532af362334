"""Acceptance suite: one test per deliverable criterion.

Each test states its tolerance inline and asserts its runtime budget,
so `pytest -v` reads as a pass/fail line per criterion.
"""

import math
import time

import numpy as np

import oracles
from conftest import rand_complex, rand_normal_matrix, rand_unitary
from srgraph import (
    PolygonLocator,
    bk_forward,
    build_v,
    check_containment,
    cli,
    convex_hull_2d,
    gamma_scaling_demo,
    general_eig,
    hull_bk_spectrum,
    nrange_boundary,
    nrange_contains,
    polygon_area,
    polygon_distance,
    polygon_hausdorff,
    rational_tf,
    sample_srg,
    spectral_factorize,
    srg_complex,
    srg_real,
)
from srgraph.srglti import default_grid, lti_disk_point, tf_value
from srgraph.cgeom import is_infinity
from srgraph.srgmatrix import SrgOptions

SHIFT = np.array([[0.0, 1.0], [0.0, 0.0]])

# Library warm-up on a tiny unrelated problem: the first calls into the
# dense eigensolvers pay one-off initialization costs (thread pools,
# lazy module loading) that would otherwise be charged to whichever
# timed criterion runs first.
_warm = np.random.default_rng(0).normal(size=(3, 3))
nrange_boundary(_warm + 1j * _warm.T, num_angles=8, refine_tol=None)
srg_real(_warm[:2, :2], SrgOptions(num_angles=16, field="real", refine_tol=None))
sample_srg(_warm, field="real", count=8, seed=0)
del _warm


def test_criterion_01_nilpotent_ellipse_boundary():
    # Support points of W(V) satisfy the two-focus ellipse equation to
    # 1e-8; the real-field region is boundary-only and 1e4 sampled SRG
    # points lie within 1e-6 of that boundary.  Budget: 1 s.
    t0 = time.monotonic()
    vop = build_v(SHIFT)
    nb = nrange_boundary(vop.v, num_angles=720, refine_tol=1e-8)
    worst = max(abs(oracles.ellipse_residual(complex(p))) for p in nb.support_points)
    assert worst <= 1e-8

    region = srg_real(SHIFT)
    assert region.boundary_only
    samples = sample_srg(SHIFT, field="real", count=10000, seed=1)
    report = check_containment(samples, region, tol=1e-6)
    assert report.contained == report.total
    assert time.monotonic() - t0 < 1.0


def test_criterion_02_trivial_fixed_points():
    # W(V) collapses to the single mapped point for 0, I, and lambda*I,
    # each to 1e-12.  Budget: 1 s.
    t0 = time.monotonic()
    cases = [
        (np.zeros((3, 3)), -1.0 + 0j),
        (np.eye(3), -1j),
        ((1.7 - 0.4j) * np.eye(4), bk_forward(1.7 - 0.4j)),
    ]
    for t, target in cases:
        nb = nrange_boundary(build_v(t).v, num_angles=90)
        assert max(abs(complex(p) - target) for p in nb.support_points) <= 1e-12
    assert time.monotonic() - t0 < 1.0


def test_criterion_03_normal_operator_tightness():
    # 50 random normal matrices (unitary-conjugated diagonals, n <= 8):
    # Hausdorff(disk hull of srg, hull of mapped eigenvalues) <= 1e-6.
    # Budget: 30 s.
    t0 = time.monotonic()
    rng = np.random.default_rng(1003)
    for trial in range(50):
        n = 2 + trial % 7  # cycles n through 2..8
        t, eigs = rand_normal_matrix(rng, n)
        region = srg_complex(t)
        target = convex_hull_2d([bk_forward(complex(e)) for e in eigs])
        assert polygon_hausdorff(region.disk_hull, target) <= 1e-6
    assert time.monotonic() - t0 < 30.0


def test_criterion_04_spectral_containment():
    # 100 random complex matrices (n <= 6): every eigenvalue's disk
    # image passes the support-line membership test at tol 1e-7.
    # Budget: 60 s.
    t0 = time.monotonic()
    rng = np.random.default_rng(1004)
    for trial in range(100):
        n = 2 + trial % 5  # cycles n through 2..6
        t = rand_complex(rng, n)
        v = build_v(t).v
        for ev in general_eig(t):
            assert nrange_contains(v, bk_forward(complex(ev)), 1e-7)
    assert time.monotonic() - t0 < 60.0


def test_criterion_05_oracle_containment():
    # 25 random complex matrices (n <= 6), 1e4 sampled SRG points each:
    # containment check reports contained == total at tol 1e-7.
    # Budget: 60 s.
    t0 = time.monotonic()
    rng = np.random.default_rng(1005)
    for trial in range(25):
        n = 2 + trial % 5
        t = rand_complex(rng, n)
        region = srg_complex(t)
        samples = sample_srg(t, field="complex", count=10000, seed=100 + trial)
        report = check_containment(samples, region, tol=1e-7)
        assert report.contained == report.total
    assert time.monotonic() - t0 < 60.0


def test_criterion_06_benchmark_matrix_reproduction():
    # The printed 4x4 matrix: spectrum matches the closed forms
    # {1, 1+2^(1/3), 1+2^(1/3) e^(+-2 pi i/3)} to 1e-9, and the
    # inclusion chain srg >= spectral hull >= spectrum holds at 1e-7.
    # Budget: 5 s.
    t0 = time.monotonic()
    eigs = [complex(e) for e in general_eig(oracles.FIG_MATRIX)]
    remaining = list(eigs)
    for want in oracles.FIG_MATRIX_EIGS:
        got = min(remaining, key=lambda z: abs(z - complex(want)))
        assert abs(got - complex(want)) <= 1e-9
        remaining.remove(got)

    region = srg_complex(oracles.FIG_MATRIX)
    spec = hull_bk_spectrum(oracles.FIG_MATRIX)
    # spectrum inside the spectral hull, and both inside the srg.
    for ev in eigs:
        w = bk_forward(ev)
        assert polygon_distance(spec.disk_hull, w) <= 1e-7
        assert polygon_distance(region.disk_hull, w) <= 1e-7
    for w in spec.disk_hull.vertices:
        assert polygon_distance(region.disk_hull, w) <= 1e-7
    assert time.monotonic() - t0 < 5.0


def test_criterion_07_spectral_factor_and_point_identity():
    # h = 2/(iw+1)^2: s_den = (1, sqrt(2+2 sqrt 5), sqrt 5) to 1e-9 per
    # coefficient; the disk point equals f(h(w)) to 1e-10 across a
    # 512-point grid.  Budget: 2 s.
    t0 = time.monotonic()
    tf = rational_tf([2.0], [1.0, 2.0, 1.0])
    factor = spectral_factorize(tf)
    assert len(factor.s_den) == 3
    for got, want in zip(factor.s_den, oracles.FACTOR_DEN_RADICALS):
        assert abs(got - want) <= 1e-9
    for w in default_grid(tf, 512).omegas:
        h = tf_value(tf, w)
        if is_infinity(h):
            continue
        assert abs(lti_disk_point(tf, factor, w) - bk_forward(complex(h))) <= 1e-10
    assert time.monotonic() - t0 < 2.0


def test_criterion_08_real_field_dichotomy():
    # 20 random real 2x2: every real-field sample lies within 1e-6 of
    # the boundary curve.  20 random real 4x4: samples contained, and
    # when the region has area > 1e-2 at least one sample is interior
    # by margin > 1e-3.  Budget: 60 s.
    t0 = time.monotonic()
    rng = np.random.default_rng(1008)
    for trial in range(20):
        t = rng.normal(size=(2, 2))
        region = srg_real(t)
        assert region.boundary_only
        samples = sample_srg(t, field="real", count=10000, seed=200 + trial)
        report = check_containment(samples, region, tol=1e-6)
        assert report.contained == report.total
    for trial in range(20):
        t = rng.normal(size=(4, 4))
        region = srg_real(t)
        assert not region.boundary_only
        samples = sample_srg(t, field="real", count=10000, seed=300 + trial)
        report = check_containment(samples, region, tol=1e-7)
        assert report.contained == report.total
        if polygon_area(region.disk_hull) > 1e-2:
            locator = PolygonLocator(region.disk_hull)
            ws = np.array(
                [bk_forward(complex(s)) for s in samples], dtype=np.complex128
            )
            lb, ub, _ = locator.query(ws)
            # ub is a certified upper bound on the signed distance, so a
            # value below -1e-3 proves an interior sample with that
            # margin; otherwise settle the best candidate exactly.
            if float(np.min(ub)) >= -1e-3:
                best = ws[int(np.argmin(lb))]
                assert float(locator.exact([best])[0]) < -1e-3
    assert time.monotonic() - t0 < 60.0


def test_criterion_09_gamma_scaling_convergence():
    # Graded similarity scalings shrink the SRG of [[1,1],[0,1]] toward
    # its spectral hull: distances strictly decrease over gamma in
    # {1, 10, 100} and end at or below 0.02.  Budget: 5 s.
    t0 = time.monotonic()
    out = gamma_scaling_demo(np.array([[1.0, 1.0], [0.0, 1.0]]), [1.0, 10.0, 100.0])
    dists = [d for _, d in out]
    assert dists[0] > dists[1] > dists[2]
    assert dists[2] <= 0.02
    assert time.monotonic() - t0 < 5.0


def test_criterion_10_cli_determinism(tmp_path):
    # Identical inputs and seeds produce byte-identical CSV and SVG
    # outputs across repeated CLI invocations.
    fig = tmp_path / "fig.json"
    import json

    fig.write_text(
        json.dumps({"n": 4, "re": oracles.FIG_MATRIX.real.tolist()})
    )
    tf = tmp_path / "tf.json"
    tf.write_text(json.dumps({"num_re": [2.0], "den_re": [1.0, 2.0, 1.0]}))

    invocations = [
        ["matrix", "--input", str(fig), "--angles", "128", "--spectrum"],
        ["matrix", "--input", str(fig), "--angles", "128", "--format", "svg",
         "--spectrum"],
        ["lti", "--tf", str(tf), "--grid", "128"],
        ["lti", "--tf", str(tf), "--grid", "128", "--format", "svg"],
        ["nrange", "--input", str(fig), "--angles", "128"],
    ]
    for k, argv in enumerate(invocations):
        blobs = []
        for attempt in ("a", "b"):
            dest = tmp_path / f"out{k}{attempt}"
            code = cli.main(argv + ["--out", str(dest)])
            assert code == 0
            blobs.append(dest.read_bytes())
        assert blobs[0] == blobs[1]
