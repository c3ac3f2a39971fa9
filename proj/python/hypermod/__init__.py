"""Exact certification of hypergeometric, modular and 1/pi identities.

Reports come back as plain dicts with the same layout as the command-line JSON.
"""

import json
import os
from fractions import Fraction
from pathlib import Path

_data = Path(__file__).with_name("data") / "catalog.json"
if _data.exists():
    os.environ.setdefault("HYPERMOD_CATALOG", str(_data))

from . import _hypermod  # noqa: E402

__all__ = [
    "catalog", "series_coeffs", "expand_entry", "verify_group", "verify_clausen", "verify_zs",
    "fit_ode", "q_identities", "verify_q_identity", "pi_reference", "verify_pi_formula",
    "verify_equivalence", "run_criterion",
]


def catalog():
    return json.loads(_hypermod.catalog_json())


def series_coeffs(series, count):
    return [Fraction(c) for c in _hypermod.series_coeffs(series, count)]


def expand_entry(entry, order):
    return [Fraction(c) for c in _hypermod.expand_entry(entry, order)]


def verify_group(group, order=0, jobs=0):
    return json.loads(_hypermod.verify_group(group, order, jobs))


def verify_clausen(level, order=60):
    return json.loads(_hypermod.verify_clausen(level, order))


def verify_zs(case, order=60):
    return json.loads(_hypermod.verify_zs(case, order))


def fit_ode(entry, terms=50, max_order=2, max_degree=6):
    return json.loads(_hypermod.fit_ode(entry, terms, max_order, max_degree))


def q_identities():
    return list(_hypermod.q_identities())


def verify_q_identity(ident, order=0):
    return json.loads(_hypermod.verify_q_identity(ident, order))


def pi_reference(digits):
    return _hypermod.pi_reference(digits)


def verify_pi_formula(case, digits=0):
    return json.loads(_hypermod.verify_pi_formula(case, digits))


def verify_equivalence(case, digits=50):
    return json.loads(_hypermod.verify_equivalence(case, digits))


def run_criterion(k, jobs=0):
    return json.loads(_hypermod.run_criterion(k, jobs))
