#!/usr/bin/env python3
"""Freeze reference values from numpy/LAPACK into tests/data/oracles.json.

Run once; the output is committed and read by the unit tests.
"""
import json
import pathlib

import numpy as np

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "oracles.json"


def to_pairs(m):
    return [[float(z.real), float(z.imag)] for z in m.reshape(-1)]


def random_unitary(rng, n):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def planted(rng, n, plus, minus):
    d = np.zeros(n)
    d[:plus] = rng.uniform(0.25, 2.0, plus)
    d[plus:plus + minus] = -rng.uniform(0.25, 2.0, minus)
    u = random_unitary(rng, n)
    return u @ np.diag(d) @ u.conj().T


def main():
    rng = np.random.default_rng(20240611)
    cases = []
    for idx in range(40):
        n = int(rng.integers(1, 13))
        if idx % 4 == 3:
            plus = int(rng.integers(0, n + 1))
            minus = int(rng.integers(0, n - plus + 1))
            a = planted(rng, n, plus, minus)
        else:
            g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            a = (g + g.conj().T) / 2
        a = (a + a.conj().T) / 2
        b = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        b = (b + b.conj().T) / 2
        w = np.linalg.eigvalsh(a)[::-1]
        thresh = 1e-8 * max(1.0, np.linalg.norm(a))
        aba = a @ b @ a
        cases.append({
            "a": {"n": n, "entries": to_pairs(a)},
            "b": {"n": n, "entries": to_pairs(b)},
            "eigenvalues": [float(x) for x in w],
            "abs_det": float(abs(np.linalg.det(a))) if idx % 4 != 3 else None,
            "inertia": [int((w > thresh).sum()), int((w < -thresh).sum()), int((abs(w) <= thresh).sum())],
            "aba": {"n": n, "entries": to_pairs((aba + aba.conj().T) / 2)},
        })
    OUT.write_text(json.dumps({"generator": "numpy.linalg", "cases": cases}, indent=1) + "\n")


if __name__ == "__main__":
    main()
