"""Edge-ordered Ramsey toolkit: Python bindings over the C++ core."""

import json as _json

from ._eoram import *  # noqa: F401,F403
from ._eoram import _verify_certificate, _run_experiment


def verify_certificate(certificate):
    """Check a certificate given as a dict or JSON string; returns (ok, detail)."""
    text = certificate if isinstance(certificate, str) else _json.dumps(certificate)
    return _verify_certificate(text)


def run_experiment(name, threads=1, seed=0):
    """Run a named acceptance experiment and return its summary as a dict."""
    result = _json.loads(_run_experiment(name, threads, seed))
    return result
