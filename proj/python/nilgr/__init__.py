"""Exact nilpotent-orbit and twisted Schubert-cell computations."""

import json
from fractions import Fraction

from . import _nilgr
from ._nilgr import Error, InvalidInput, MembershipError, NotNilpotent, cli, fiber_profile, orbits, small_weights

__all__ = [
    "Error",
    "InvalidInput",
    "MembershipError",
    "NotNilpotent",
    "cell_of",
    "cli",
    "duality",
    "fiber_profile",
    "iota",
    "orbits",
    "pi",
    "sigma_fixed",
    "small_weights",
    "verify_table",
    "witness",
]


def _q(s):
    return Fraction(s)


def _matrix_in(rows):
    return [[str(Fraction(v)) for v in row] for row in rows]


def _matrix_out(rows):
    return [[_q(v) for v in row] for row in rows]


def _laurent_in(coeffs):
    """coeffs maps exponent -> square matrix (nested lists of ints, Fractions or "p/q")."""
    mats = {int(e): _matrix_in(a) for e, a in coeffs.items()}
    m = len(next(iter(mats.values()))) if mats else 0
    return json.dumps({"m": m, "coeffs": {str(e): a for e, a in sorted(mats.items())}})


def _laurent_out(text):
    data = json.loads(text)
    return {int(e): _matrix_out(a) for e, a in data["coeffs"].items()}


def cell_of(case, rank, coeffs):
    return tuple(_nilgr.cell_of_json(case, rank, _laurent_in(coeffs)))


def sigma_fixed(case, rank, coeffs):
    return _nilgr.sigma_fixed_json(case, rank, _laurent_in(coeffs))


def pi(coeffs):
    return _matrix_out(json.loads(_nilgr.pi_json(_laurent_in(coeffs))))


def iota(coeffs):
    return _laurent_out(_nilgr.iota_json(_laurent_in(coeffs)))


def witness(case, rank, lambda_, orbit, branch=""):
    return _laurent_out(_nilgr.witness_json(case, rank, list(lambda_), branch, orbit))


def verify_table(case, rank, seed=0, conjugates=20):
    return json.loads(_nilgr.verify_table_json(case, rank, seed, conjugates))


def duality(n):
    return json.loads(_nilgr.duality_json(n))
