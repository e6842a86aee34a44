"""Toeplitz operators with polyanalytic polynomial symbols on the Bergman space.

Thin wrappers over the compiled _polytoep module: symbols go in as dicts or
JSON strings, reports come back as dicts.
"""

import json

import _polytoep
from _polytoep import AnalysisError, selftest

__all__ = ["AnalysisError", "analyze", "kernel_probe", "selftest", "truncate", "symbol"]


def _as_json(sym):
    return sym if isinstance(sym, str) else json.dumps(sym)


def symbol(n, coeffs):
    """Build the symbol dict for sum_i a_i(z) * conj(z)^i.

    `coeffs` lists the polynomials a_0..a_n, each as ascending coefficients;
    a coefficient may be a number, an exact string like "1/3", or an
    [re, im] pair.
    """
    return {"n": n, "coeffs": [list(c) for c in coeffs]}


def analyze(sym, backend="exact", truncate_sizes=()):
    """Run the full analysis; returns the report as a dict."""
    return json.loads(_polytoep.analyze_json(_as_json(sym), backend, list(truncate_sizes)))


def truncate(sym, size):
    """Finite section in the normalized monomial basis, as a complex ndarray."""
    return _polytoep.truncate(_as_json(sym), size)


def kernel_probe(sym, sizes):
    """Smallest singular values across growing sections plus the decay estimate."""
    return _polytoep.kernel_probe(_as_json(sym), list(sizes))
