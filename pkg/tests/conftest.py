from __future__ import annotations

import contextlib
import io
import json
import sys

import numpy as np
import pytest

from srgraph import cli


def rand_complex(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


def rand_real(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.normal(size=(n, n))


def rand_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(rand_complex(rng, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def rand_normal_matrix(rng: np.random.Generator, n: int):
    """Normal matrix with a known spectrum (diagonal conjugated by a
    random unitary); returns (matrix, eigenvalues)."""
    eigs = rng.normal(size=n) + 1j * rng.normal(size=n)
    q = rand_unitary(rng, n)
    return q @ np.diag(eigs) @ q.conj().T, eigs


@pytest.fixture
def run_cli(capsys):
    """Invoke the command line in-process; returns (code, stdout, stderr)."""

    def _run(argv):
        try:
            code = cli.main(argv)
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 0
        out = capsys.readouterr()
        return code, out.out, out.err

    return _run


@pytest.fixture
def matrix_file(tmp_path):
    def _write(name, re, im=None, field=None, n=None, extra=None):
        re = np.asarray(re, dtype=float)
        payload = {"n": int(re.shape[0]) if n is None else n, "re": re.tolist()}
        if im is not None:
            payload["im"] = np.asarray(im, dtype=float).tolist()
        if field is not None:
            payload["field"] = field
        if extra:
            payload.update(extra)
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)

    return _write


@pytest.fixture
def tf_file(tmp_path):
    def _write(name, num_re, den_re, num_im=None, den_im=None):
        payload = {"num_re": list(num_re), "den_re": list(den_re)}
        if num_im is not None:
            payload["num_im"] = list(num_im)
        if den_im is not None:
            payload["den_im"] = list(den_im)
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)

    return _write
