"""Cyclic self-orthogonal and self-dual codes over Z/p^m."""

import json

from ._core import (
    ZpmError,
    cardinality,
    classify_type,
    counts,
    describe,
    dual_profile,
    enumerate_codes,
    euclidean_weight,
    factor,
    gamma_delta,
    is_self_dual,
    is_self_orthogonal,
    nontrivial_exists,
    run_cli,
)


def verify(p, m, n):
    """Brute-force crosscheck of every code of length n over Z/p^m, as a dict."""
    from ._core import verify_json

    return json.loads(verify_json(p, m, n))


__all__ = [
    "ZpmError",
    "cardinality",
    "classify_type",
    "counts",
    "describe",
    "dual_profile",
    "enumerate_codes",
    "euclidean_weight",
    "factor",
    "gamma_delta",
    "is_self_dual",
    "is_self_orthogonal",
    "nontrivial_exists",
    "run_cli",
    "verify",
]
