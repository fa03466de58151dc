"""Exact recovery of hidden binary sequences from edit, DTW and Frechet distance oracles."""

import json
from fractions import Fraction

from . import _core
from ._core import DomainError, Error, ParseError, UnsupportedAlphabet, query_cap, suite_ids

__all__ = [
    "DomainError",
    "Error",
    "ParseError",
    "UnsupportedAlphabet",
    "distance",
    "dtw_via_mss",
    "normalize",
    "query_cap",
    "recover",
    "strategies",
    "suite_ids",
    "table",
    "verify",
]


def normalize(text):
    """Canonical text form of a sequence such as "0,1/2,1" or "0110"."""
    return _core.normalize(text)


def distance(kind, x, y):
    """Exact distance as a Fraction. kind is "edit", "dtw", "dtw2", ... or "frechet"."""
    return Fraction(_core.distance(kind, x, y))


def dtw_via_mss(x, y):
    return _core.dtw_via_mss(x, y)


def strategies():
    return json.loads(_core.strategies_json())


def recover(strategy, hidden, n, transcript=False):
    """Runs one strategy against a hidden sequence and returns its report as a dict."""
    return json.loads(_core.recover_json(strategy, hidden, n, transcript))


def table(n):
    return json.loads(_core.table_json(n))


def verify(suite, **config):
    """Runs a verification suite; keyword arguments override suite parameters."""
    return json.loads(_core.verify_json(suite, {k: str(v) for k, v in config.items()}))
