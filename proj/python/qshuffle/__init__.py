"""Exact q-shuffle algebra computations over finite fields."""

import json

from ._core import (
    ParseError,
    ehat,
    goss,
    oracle,
    phi,
    phi_inv,
    pi_hat,
    properties,
    run,
    shuffle,
    thakur,
    zeta,
    zeta_json,
    verify_json,
)


def verify(prop, q, weight_cap, threads=0):
    """Run a property sweep and return the report as a dict."""
    return json.loads(verify_json(prop, q, weight_cap, threads))


def zeta_series(index, q, precision):
    """The series {valuation, coeffs, precision} of zeta(index) in 1/theta."""
    return json.loads(zeta_json(list(index), q, precision))


__all__ = [
    "ParseError",
    "ehat",
    "goss",
    "oracle",
    "phi",
    "phi_inv",
    "pi_hat",
    "properties",
    "run",
    "shuffle",
    "thakur",
    "verify",
    "zeta",
    "zeta_series",
]
