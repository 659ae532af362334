"""Command-line front end: subcommands matrix, lti, and nrange.

Inputs are JSON files (real/imaginary parts as separate arrays, so no
complex-literal parsing is needed); outputs are CSV boundary data with
the fixed header ``kind,theta,re,im,branch`` or a self-contained SVG
figure.  Exit codes: 0 success, 1 input/parse errors, 2 numerical
failures, 3 validation (--check) failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import __version__, cgeom, sampler, svgfig
from .cgeom import is_infinity
from .errors import InputError, NumericalError
from .linalg import general_eig
from .nrange import nrange_boundary
from .srglti import default_grid, lti_srg, rational_tf, spectral_factorize
from .srgmatrix import SrgOptions, hull_bk_spectrum, srg_complex, srg_real

CSV_HEADER = "kind,theta,re,im,branch"


# ---------------------------------------------------------------------------
# Input files
# ---------------------------------------------------------------------------


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _as_real_array(value, what: str) -> np.ndarray:
    try:
        arr = np.asarray(value, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{what} must be a numeric array") from exc
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{what} must contain only finite numbers")
    return arr


def load_matrix_file(path: str) -> tuple[np.ndarray, str]:
    """Read a matrix JSON file; returns (matrix, field)."""
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InputError("matrix file must be a JSON object")
    try:
        n = int(data["n"])
        re = _as_real_array(data["re"], "re")
    except KeyError as exc:
        raise InputError(f"matrix file is missing the {exc.args[0]!r} entry") from exc
    if re.shape != (n, n):
        raise InputError(f"re must be a {n}x{n} array")
    if "im" in data and data["im"] is not None:
        im = _as_real_array(data["im"], "im")
        if im.shape != (n, n):
            raise InputError(f"im must be a {n}x{n} array")
    else:
        im = np.zeros((n, n))
    field = data.get("field", "complex")
    if field not in ("real", "complex"):
        raise InputError("field must be 'real' or 'complex'")
    if field == "real" and np.any(im != 0.0):
        raise InputError("field 'real' requires im to be absent or all zero")
    return re + 1j * im, field


def load_tf_file(path: str):
    """Read a transfer-function JSON file; returns a RationalTF."""
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InputError("transfer-function file must be a JSON object")
    try:
        num_re = _as_real_array(data["num_re"], "num_re").ravel()
        den_re = _as_real_array(data["den_re"], "den_re").ravel()
    except KeyError as exc:
        raise InputError(f"tf file is missing the {exc.args[0]!r} entry") from exc

    def _combine(re_part, key):
        if key in data and data[key] is not None:
            im_part = _as_real_array(data[key], key).ravel()
            if im_part.shape != re_part.shape:
                raise InputError(f"{key} must match its real part in length")
            return re_part + 1j * im_part
        return re_part.astype(np.complex128)

    num = _combine(num_re, "num_im")
    den = _combine(den_re, "den_im")
    return rational_tf(num.tolist(), den.tolist())


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------


def _write_text(path: str, text: str) -> None:
    """Write atomically (temp file + rename); '-' streams to stdout."""
    if path == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".srg-", dir=directory, text=True)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fmt17(x: float) -> str:
    return format(float(x), ".17g")


def _csv_text(rows) -> str:
    """Render rows (kind, theta, value-or-None, branch) sorted by theta
    then branch; infinite values become kind=infinity marker rows with
    empty re/im, never float infinities."""
    entries = []
    for kind, theta, value, branch in rows:
        if value is None or is_infinity(value):
            entries.append((float(theta), branch, "infinity", math.inf, math.inf, "", ""))
        else:
            z = complex(value)
            entries.append(
                (float(theta), branch, kind, z.real, z.imag, _fmt17(z.real), _fmt17(z.imag))
            )
    entries.sort(key=lambda e: (e[0], e[1], e[2], e[3], e[4]))
    lines = [CSV_HEADER]
    for theta, branch, kind, _, _, re_s, im_s in entries:
        lines.append(f"{kind},{_fmt17(theta)},{re_s},{im_s},{branch}")
    return "\n".join(lines) + "\n"


def _region_rows(region: cgeom.SrgRegion):
    rows = []
    count = max(1, len(region.upper_branch))
    for j, (up, lo) in enumerate(zip(region.upper_branch, region.lower_branch)):
        theta = 2.0 * math.pi * j / count
        rows.append(("srg", theta, up, "upper"))
        rows.append(("srg", theta, lo, "lower"))
    return rows


def _finite_runs(points):
    """Split a point sequence into runs of finite values."""
    runs, current = [], []
    for p in points:
        if is_infinity(p):
            if len(current) >= 2:
                runs.append(current)
            current = []
        else:
            current.append(complex(p))
    if len(current) >= 2:
        runs.append(current)
    return runs


def _region_outline(region: cgeom.SrgRegion) -> list[complex]:
    pts = [complex(p) for p in region.upper_branch if not is_infinity(p)]
    pts.extend(complex(p) for p in reversed(region.lower_branch) if not is_infinity(p))
    return pts


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_srg_matrix(args) -> int:
    matrix, field = load_matrix_file(args.input)
    opts = SrgOptions(num_angles=args.angles, field=field)
    region = srg_real(matrix, opts) if field == "real" else srg_complex(matrix, opts)

    if args.format == "csv":
        rows = _region_rows(region)
        if args.spectrum:
            for ev in general_eig(matrix):
                rows.append(("spectrum", 0.0, complex(ev), ""))
        text = _csv_text(rows)
    else:
        fig = svgfig.SvgFigure(title="srg")
        fig.add_polygon(_region_outline(region), fill=svgfig.REGION_FILL,
                        stroke=svgfig.REGION_EDGE)
        if args.spectrum:
            spec_region = hull_bk_spectrum(matrix)
            fig.add_polygon(_region_outline(spec_region), fill=svgfig.HULL_FILL,
                            stroke=svgfig.HULL_EDGE, opacity=0.9)
            for ev in general_eig(matrix):
                fig.add_dot(complex(ev))
        text = fig.render()
    _write_text(args.out, text)

    if args.check:
        samples = sampler.sample_srg(matrix, field=field, count=args.samples,
                                     seed=args.seed)
        report = sampler.check_containment(samples, region, tol=1e-7)
        print(
            f"check: contained {report.contained}/{report.total} "
            f"(max violation {report.max_violation:.3e}, prng {report.generator})",
            file=sys.stderr,
        )
        if report.contained != report.total:
            return 3
    return 0


def cmd_srg_lti(args) -> int:
    tf = load_tf_file(args.tf)
    factor = spectral_factorize(tf)
    if args.emit_factor:
        s_num = " ".join(_fmt17(c.real) + ("" if c.imag == 0 else f"{c.imag:+.17g}j")
                         for c in factor.s_num)
        s_den = " ".join(_fmt17(c.real) + ("" if c.imag == 0 else f"{c.imag:+.17g}j")
                         for c in factor.s_den)
        print(f"s_num: {s_num}", file=sys.stderr)
        print(f"s_den: {s_den}", file=sys.stderr)
    result = lti_srg(tf, default_grid(tf, args.grid), factor=factor)

    if args.format == "csv":
        rows = _region_rows(result.region)
        count = max(1, len(result.curve))
        for j, h in enumerate(result.curve):
            rows.append(("curve", 2.0 * math.pi * j / count, h, ""))
        text = _csv_text(rows)
    else:
        fig = svgfig.SvgFigure(title="srg-lti")
        fig.add_polygon(_region_outline(result.region), fill=svgfig.HULL_FILL,
                        stroke=svgfig.HULL_EDGE, opacity=0.9)
        for run in _finite_runs(result.curve):
            fig.add_polyline(run)
        text = fig.render()
    _write_text(args.out, text)
    return 0


def cmd_nrange(args) -> int:
    matrix, _ = load_matrix_file(args.input)
    boundary = nrange_boundary(matrix, num_angles=args.angles)
    if args.format == "csv":
        rows = [
            ("support", float(theta), complex(point), "")
            for theta, point in zip(boundary.angles, boundary.support_points)
        ]
        text = _csv_text(rows)
    else:
        fig = svgfig.SvgFigure(title="nrange")
        verts = list(boundary.hull.vertices)
        fig.add_polygon(verts, fill=svgfig.HULL_FILL, stroke=svgfig.HULL_EDGE,
                        opacity=0.9)
        pts = [complex(p) for p in boundary.support_points]
        if len(pts) >= 2:
            fig.add_polyline(pts + pts[:1], stroke=svgfig.CURVE_COLOR,
                             stroke_width=1.0)
        else:
            fig.add_dot(pts[0])
        text = fig.render()
    _write_text(args.out, text)
    return 0


# ---------------------------------------------------------------------------
# Parser and dispatch
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srg",
        description="Scaled relative graphs of matrices and rational "
                    "transfer functions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    matrix = sub.add_parser("matrix", help="SRG of a dense matrix")
    matrix.add_argument("--version", action="version", version=f"srg {__version__}")
    matrix.add_argument("--input", required=True, help="matrix JSON file")
    matrix.add_argument("--angles", type=int, default=720)
    matrix.add_argument("--out", default="-", help="output path, or - for stdout")
    matrix.add_argument("--format", choices=("csv", "svg"), default="csv")
    matrix.add_argument("--spectrum", action="store_true",
                        help="overlay the spectral hull and eigenvalues")
    matrix.add_argument("--check", action="store_true",
                        help="validate against direct SRG sampling")
    matrix.add_argument("--samples", type=int, default=10000)
    matrix.add_argument("--seed", type=int, default=1)
    matrix.set_defaults(func=cmd_srg_matrix)

    lti = sub.add_parser("lti", help="SRG of a rational transfer function")
    lti.add_argument("--version", action="version", version=f"srg {__version__}")
    lti.add_argument("--tf", required=True, help="transfer-function JSON file")
    lti.add_argument("--grid", type=int, default=512)
    lti.add_argument("--out", default="-", help="output path, or - for stdout")
    lti.add_argument("--format", choices=("csv", "svg"), default="csv")
    lti.add_argument("--emit-factor", action="store_true",
                     help="print the spectral factor coefficients to stderr")
    lti.set_defaults(func=cmd_srg_lti)

    nra = sub.add_parser("nrange", help="numerical-range boundary of a matrix")
    nra.add_argument("--version", action="version", version=f"srg {__version__}")
    nra.add_argument("--input", required=True, help="matrix JSON file")
    nra.add_argument("--angles", type=int, default=720)
    nra.add_argument("--out", default="-", help="output path, or - for stdout")
    nra.add_argument("--format", choices=("csv", "svg"), default="csv")
    nra.set_defaults(func=cmd_nrange)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; keep 2 reserved for numerical
        # failures and report bad invocations as input errors instead.
        if exc.code not in (0, None):
            raise SystemExit(1) from None
        raise
    try:
        return args.func(args)
    except BrokenPipeError:
        # Reader closed the pipe (e.g. piping --out - into head); exit
        # quietly without tripping another pipe error during shutdown.
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 1
    except (InputError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NumericalError, np.linalg.LinAlgError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
