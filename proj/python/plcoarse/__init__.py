"""Exact PL homeomorphism groups of the interval, line and circle.

Rationals are ``fractions.Fraction``. Maps are ``PLMap`` values built from
breakpoint lists and a carrier name (``"interval"``, ``"line"``, ``"circle"``).
Structured results (certificates, witnesses, Zappa-Szep data) come back as
plain dicts decoded from the library's JSON formats.
"""

import json

from . import _core
from ._core import (
    FiniteGroup,
    PLMap,
    PlcError,
    compose,
    cyclic_group,
    d_inf,
    d_product,
    d_star,
    d_sum,
    decompose,
    derivative,
    direct_product,
    gen_random,
    generated_subgroup,
    hat,
    homotopy,
    invert,
    psi,
    restrict,
    rotation,
    suites,
    symmetric_group,
    translation,
    trivial_group,
    word_metric,
)

__all__ = [
    "FiniteGroup",
    "PLMap",
    "PlcError",
    "compose",
    "cyclic_group",
    "d_inf",
    "d_product",
    "d_star",
    "d_sum",
    "decompose",
    "derivative",
    "direct_product",
    "factorize",
    "gen_random",
    "generated_subgroup",
    "hat",
    "homotopy",
    "invert",
    "max_formula",
    "psi",
    "qi_check",
    "qi_witness",
    "restrict",
    "rotation",
    "run_suite",
    "suites",
    "symmetric_group",
    "translation",
    "trivial_group",
    "word_metric",
    "zs_build",
    "zs_decompose",
]


def factorize(f, delta):
    """Telescoping factorization certificate of ``f`` at step size ``delta``."""
    return json.loads(_core.factorize_json(f, delta))


def qi_witness(g):
    return json.loads(_core.qi_witness_json(g))


def qi_check(f, g):
    return json.loads(_core.qi_check_json(f, g))


def zs_decompose(group, h, k):
    """Split ``group`` as H·K; ``h`` and ``k`` are lists of element labels."""
    return json.loads(_core.zs_decompose_json(group, list(h), list(k)))


def zs_build(zsdata):
    """Rebuild the external product from decomposition data."""
    return _core.zs_build(json.dumps(zsdata))


def max_formula(zsdata, s, t):
    """Return ``(status, reason)`` for the word-metric max formula."""
    return _core.max_formula(json.dumps(zsdata), list(s), list(t))


def run_suite(name, count=100, seed=1, threads=1):
    """Run a property suite; returns ``(passed, failed)``."""
    return _core.run_suite(name, count, seed, threads)
