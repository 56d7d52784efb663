"""Weil heights, Mahler measures, relative invariants and explicit height lower bounds."""

import json
from fractions import Fraction

from . import _core

__all__ = [
    "bound",
    "height",
    "is_irreducible",
    "kronecker_test",
    "mahler_measure",
    "power_minpoly",
    "rank",
    "verify",
    "weil_height",
]

SCHEMA = "relheight/1"


def _coeffs(coeffs):
    return [str(int(c)) for c in coeffs]


def mahler_measure(coeffs, precision=128):
    """Enclosure (lo, hi) of M(p) as decimal strings; coeffs ascending."""
    return _core.mahler_measure(_coeffs(coeffs), precision)


def weil_height(minpoly, precision=128):
    return _core.weil_height(_coeffs(minpoly), precision)


def kronecker_test(coeffs):
    return _core.kronecker_test(_coeffs(coeffs))


def is_irreducible(coeffs):
    return _core.is_irreducible(_coeffs(coeffs))


def power_minpoly(minpoly, k):
    return [int(c) for c in _core.power_minpoly(_coeffs(minpoly), k)]


def _entries(entries):
    lines = []
    for i, e in enumerate(entries):
        if isinstance(e, dict):
            d = dict(e)
            d["coeffs"] = [int(c) for c in d["coeffs"]]
        else:
            d = {"name": f"entry{i}", "coeffs": [int(c) for c in e]}
        lines.append(json.dumps(d))
    return "\n".join(lines) + "\n"


def _run(command, entries, precision, eps, cad, bound, base, strict, jobs):
    base_spec = None if base is None else json.dumps([int(c) for c in base])
    res = json.loads(
        _core.run(command, _entries(entries), precision, str(Fraction(eps)), str(Fraction(cad)), bound, base_spec,
                  strict, jobs))
    records = [json.loads(line) for line in res["output"].splitlines()]
    return records[:-1], records[-1], res["exit_code"]


def height(entries, precision=128, jobs=1):
    """Height records for entries (dicts in corpus form, or coefficient lists)."""
    return _run("height", entries, precision, "1/2", "1", 4, None, False, jobs)[0]


def rank(entries, base=None, bound=4, precision=128, jobs=1):
    return _run("rank", entries, precision, "1/2", "1", bound, base, False, jobs)[0]


def verify(entries, base=None, eps="1/2", cad=1, strict_unconditional=False, precision=128, jobs=1):
    """Returns (records, summary, exit_code)."""
    return _run("verify", entries, precision, eps, cad, 4, base, strict_unconditional, jobs)


def bound(theorem, precision=128, eps="1/2", cad=1, **params):
    """Bound reports for theorem in {1, 2, 'voutier', 'corollary'}."""
    return json.loads(
        _core.bound(str(theorem), {k: str(v) for k, v in params.items()}, precision, str(Fraction(eps)),
                    str(Fraction(cad))))
