"""Cut locus, normal-ray lengths and the distance-function symmetry criterion for planar domains."""

import json

from . import _core
from ._core import ConfigError, Curve, Error, InapplicableError

__all__ = ["ConfigError", "Curve", "Error", "InapplicableError", "catalog", "load_shape", "report", "run_cli"]


def catalog():
    """Shape types with their parameter schema and an example object."""
    return json.loads(_core.catalog_json())


def load_shape(shape):
    """Curve from a shape object (dict) or its JSON text."""
    text = shape if isinstance(shape, str) else json.dumps(shape)
    return Curve.from_json(text)


def report(shape, samples=2048, tol=0.0):
    """Symmetry report for a shape object, dict or Curve."""
    curve = shape if isinstance(shape, Curve) else load_shape(shape)
    return json.loads(curve.report_json(samples, tol))


def run_cli(*args):
    """Runs the command line tool in-process and returns (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
