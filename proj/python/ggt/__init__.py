"""Python access to the ggt core: orbits, prime pairs, tame parameters,
Weyl group orders and the command line front end."""

import json

from . import _ggt
from ._ggt import (
    BoundExceeded,
    DomainError,
    Overflow,
    SearchExhausted,
    VerificationFailure,
    g2_admissible,
    is_prime,
    mult_order,
    run_cli,
    uniqueness_scan,
)

__version__ = "0.1.0"


def orbit(tau, q):
    return json.loads(_ggt.orbit(tau, q))


def find_pq(n, ell, t, d, conductor_bound=None, ceiling=1_000_000):
    return json.loads(_ggt.find_pq(n, ell, t, d, conductor_bound, ceiling))


def validate_certificate(cert):
    return json.loads(_ggt.validate_certificate(json.dumps(cert)))


def tame_parameter(q, p, n):
    return json.loads(_ggt.tame_parameter(q, p, n))


def weyl_orders(rs, mode="exact", seed=20240607, samples=1_000_000):
    return json.loads(_ggt.weyl_orders(rs, mode, seed, samples))


def order_table(seed=20240607, samples=1_000_000):
    return json.loads(_ggt.order_table(seed, samples))


def almost_minuscule(rs):
    return json.loads(_ggt.almost_minuscule(rs))


def char_poly_shape(eigs):
    return json.loads(_ggt.char_poly_shape(list(eigs)))


def cli(*args):
    """Run a CLI command; returns (exit code, decoded JSON report or None)."""
    code, out, err = run_cli(list(args))
    return code, (json.loads(out) if out.strip().startswith("{") else None)
