"""Exact verification of the co-Higgs determinant classification on P^2.

Thin dict-level wrappers around the compiled module: structured data crosses
the extension boundary as JSON text, and scalars stay exact strings such as
"1/2+3/4 i" throughout.
"""

import json

try:
    from . import _cohiggs as _core
except ImportError:  # development layout: extension built next to the package
    import _cohiggs as _core

__all__ = [
    "schwarz_info",
    "determinant",
    "canonical",
    "integrable",
    "verify",
    "complete_square",
    "decompose_linear_product",
]


def schwarz_info(k):
    """Chern data, splitting type and h^1(End_0) of the k-th bundle (k != 3)."""
    return json.loads(_core.info_json(k))


def determinant(document):
    """Determinant triple, structured form and image point of a field document."""
    return json.loads(_core.det_json(json.dumps(document)))


def canonical(document):
    """Canonical form of a section, (q, C) pair, or field document."""
    return json.loads(_core.canon_json(json.dumps(document)))


def integrable(document):
    """True when the field's local component matrices commute on every chart."""
    return _core.integrable_json(json.dumps(document))


def verify(theorem, trials=100, seed=42, jobs=1):
    """Run one theorem suite; returns the verification report as a dict."""
    return json.loads(_core.verify_json(theorem, trials, seed, jobs))


def verify_report_text(theorem, trials=100, seed=42, jobs=1):
    """The raw JSON report text (byte-deterministic for fixed arguments)."""
    return _core.verify_json(theorem, trials, seed, jobs)


def complete_square(poly):
    """s = lambda^2 + mu decomposition of a degree <= 2 polynomial document."""
    return json.loads(_core.complete_square_json(json.dumps(poly)))


def decompose_linear_product(poly):
    """s = lambda^2 + mu * mu' decomposition with all parts of degree <= 1."""
    return json.loads(_core.decompose_linear_product_json(json.dumps(poly)))
