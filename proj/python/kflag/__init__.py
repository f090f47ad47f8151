"""K-theoretic Schubert calculus on flag varieties G/P.

Words are 1-based tuples of simple reflection indices; () is the identity.
Weights are tuples of fundamental-weight coordinates.
"""

import json as _json

from . import _core
from ._core import BoundExceeded, ConfigError, Error, IntegrityError

__all__ = [
    "BoundExceeded",
    "ConfigError",
    "Error",
    "IntegrityError",
    "Flag",
    "run",
    "describe",
    "constants",
    "line_coeffs",
    "richardson",
    "verify",
]


def _job(command, type=None, rank=None, cartan=None, **options):
    job = {"command": command}
    if cartan is not None:
        job["cartan"] = [list(row) for row in cartan]
    if type is not None:
        job["type"] = type
    if rank is not None:
        job["rank"] = rank
    for key, value in options.items():
        if value is None:
            continue
        job[key] = list(value) if isinstance(value, (tuple, list)) else value
    return job


def run(command, **options):
    """Runs a CLI command in process. Returns (exit_code, parsed output, warnings)."""
    code, text, warnings = _core.run(_json.dumps(_job(command, **options)))
    if options.get("format", "json") == "json":
        return code, _json.loads(text), list(warnings)
    return code, text, list(warnings)


def _doc(command, **options):
    return run(command, **options)[1]


def describe(type=None, rank=None, cartan=None, parabolic=None):
    return _doc("describe", type=type, rank=rank, cartan=cartan, parabolic=parabolic)


def constants(u, v, type=None, rank=None, cartan=None, parabolic=None, cache_dir=None):
    command = "parabolic-constants" if parabolic else "constants"
    return _doc(command, type=type, rank=rank, cartan=cartan, parabolic=parabolic, u=u, v=v, cache_dir=cache_dir)


def line_coeffs(v, weight, type=None, rank=None, cartan=None, cache_dir=None):
    return _doc("line-coeffs", type=type, rank=rank, cartan=cartan, v=v, **{"lambda": weight}, cache_dir=cache_dir)


def richardson(u, v, type=None, rank=None, cartan=None, cache_dir=None):
    return _doc("richardson", type=type, rank=rank, cartan=cartan, u=u, v=v, cache_dir=cache_dir)


def verify(which="all", type=None, rank=None, cartan=None, parabolic=None, jobs=1, cache_dir=None):
    """Returns (ok, report)."""
    code, doc, _ = run("verify", type=type, rank=rank, cartan=cartan, parabolic=parabolic, which=which,
                       jobs=jobs, cache_dir=cache_dir)
    return code == _core.EXIT_OK, doc


class Flag:
    """G/B for one root datum, with the Schubert classes computed once."""

    def __init__(self, type=None, rank=None, cartan=None, cache_dir=None, max_weyl=None):
        job = _job("describe", type=type, rank=rank, cartan=cartan, cache_dir=cache_dir, max_weyl=max_weyl)
        self._flag = _core.Flag(_json.dumps(job))

    rank = property(lambda self: self._flag.rank)
    weyl_order = property(lambda self: self._flag.weyl_order)
    dim = property(lambda self: self._flag.dim)
    label = property(lambda self: self._flag.label)
    warnings = property(lambda self: self._flag.warnings)

    def elements(self):
        return self._flag.elements()

    def structure_constants(self, u, v):
        """{w: c} with [O_u][O_v] = sum_w c [O_w]."""
        return dict(self._flag.structure_constants(list(u), list(v)))

    def line_bundle_coeffs(self, v, weight):
        """{w: c} with [L(weight)][O_v] = sum_w c [O_w]."""
        return dict(self._flag.line_bundle_coeffs(list(v), list(weight)))

    def richardson_class(self, u, v):
        """Class of X^u cap X_v in the Schubert basis."""
        return dict(self._flag.richardson_class(list(u), list(v)))

    def euler_characteristic(self, weight):
        return self._flag.euler_characteristic(list(weight))

    def schubert_euler_characteristics(self):
        return self._flag.schubert_euler_characteristics()
