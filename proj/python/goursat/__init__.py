"""Subgroups of finite direct products via Goursat chains.

The command functions mirror the ``goursat`` tool: each returns a decoded JSON
object (or DOT text for ``lattice(..., dot=True)``) and raises
``CommandError`` on a nonzero exit code.
"""

import json

from . import _core
from ._core import CapExceeded, ParseError, TheoremViolation, canonical, subgroups, subgroups_bruteforce

__all__ = [
    "CapExceeded",
    "CommandError",
    "ParseError",
    "TheoremViolation",
    "canonical",
    "classify",
    "decompose",
    "enumerate_subgroups",
    "lattice",
    "subgroups",
    "subgroups_bruteforce",
    "verify",
]


class CommandError(RuntimeError):
    def __init__(self, exit_code, message):
        super().__init__(message)
        self.exit_code = exit_code


def _unwrap(result, raw=False):
    code, out, err = result
    if code != 0:
        raise CommandError(code, err or out)
    return out if raw else json.loads(out)


def enumerate_subgroups(expr, max_order=0, verify=False):
    return _unwrap(_core.enumerate(expr, max_order, verify))


def decompose(expr, gens, max_order=0):
    return _unwrap(_core.decompose(expr, gens, max_order))


def classify(expr, gens, max_order=0):
    return _unwrap(_core.classify(expr, gens, max_order))


def lattice(expr, dot=False, max_order=0):
    return _unwrap(_core.lattice(expr, dot, max_order), raw=dot)


def verify(expr, max_order=0):
    return _unwrap(_core.verify(expr, max_order))
