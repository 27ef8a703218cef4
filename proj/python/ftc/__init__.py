"""Invariants of finite tensor categories given by fusion data or Hopf algebras."""

import json

from . import _ftc
from ._ftc import DEFAULT_SEED, InfiniteGroupError, SchemaError, SplittingError, field_spec

__all__ = [
    "DEFAULT_SEED",
    "InfiniteGroupError",
    "SchemaError",
    "SplittingError",
    "certify",
    "field_spec",
    "gen",
    "invariants",
    "lambda_group",
    "validate",
]


def _text(data):
    return data if isinstance(data, str) else json.dumps(data)


def validate(data):
    """Report {"kind", "valid", "violations"} for fusion or Hopf data."""
    return json.loads(_ftc.validate(_text(data)))


def lambda_group(data, char_p=0, field=""):
    """Invariant factors, order and lambda table of fusion data."""
    return json.loads(_ftc.lambda_group(_text(data), char_p, field))


def gen(kind, field, group="", n=0, q=0):
    """A built-in Hopf algebra as a dict."""
    return json.loads(_ftc.gen(kind, field, group, n, json.dumps(q)))


def invariants(data, seed=DEFAULT_SEED):
    """Grouplike counts, center dimension, simple dimensions and fusion data."""
    return json.loads(_ftc.invariants(_text(data), seed))


def certify(data, instance="", seed=DEFAULT_SEED):
    """Certificate dict; byte-stable as JSON for a fixed seed."""
    return json.loads(_ftc.certify(_text(data), instance, seed))
