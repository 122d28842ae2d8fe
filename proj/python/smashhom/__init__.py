"""Graded Hochschild (co)homology of S(V)#G for finite matrix groups.

Thin wrapper over the C++ engine. Every function takes a group spec, either
``"catalog:NAME"`` or the path of a group file (JSON with cyclotomic literal
entries), and returns the machine report as a dict. Series coefficients are
exact integers.
"""

import json

from smashhom._core import (  # noqa: F401
    EngineError,
    SchemaError,
    catalog_names,
    render_table,
    run_command,
)

__all__ = [
    "catalog_names",
    "render_table",
    "homology",
    "cohomology",
    "twisted_homology",
    "duality",
    "oracle_check",
    "bar_check",
    "catalog",
    "SchemaError",
    "EngineError",
]


def _run(command, group="", **kwargs):
    report, exit_code = run_command(command, group, **kwargs)
    out = json.loads(report)
    out["exit_code"] = exit_code
    return out


def homology(group, trunc=8, per_class=False, double=False, jobs=1):
    """Poincare series of H_n(S(V)#G), rows indexed by homological degree."""
    return _run("homology", group, trunc=trunc, per_class=per_class, double=double, jobs=jobs)


def cohomology(group, trunc=8, per_class=False, double=False, jobs=1):
    """Poincare series of H^n(S(V)#G); row n starts at internal degree -n."""
    return _run("cohomology", group, trunc=trunc, per_class=per_class, double=double, jobs=jobs)


def twisted_homology(group, trunc=8, per_class=False, double=False, jobs=1):
    """Homology with coefficients twisted by det^-1."""
    return _run(
        "twisted-homology", group, trunc=trunc, per_class=per_class, double=double, jobs=jobs
    )


def duality(group, trunc=-1, double=False, jobs=1):
    """Compare cohomology with shifted (twisted and untwisted) homology."""
    return _run("duality", group, trunc=trunc, double=double, jobs=jobs)


def oracle_check(group, trunc=4, double=False, jobs=1):
    """Closed-form series against the brute-force Koszul complexes."""
    return _run("oracle-check", group, trunc=trunc, double=double, jobs=jobs)


def bar_check(group, nmax=2, dmax=3, double=False, jobs=1):
    """Normalized bar complex against the conjugacy-class decomposition."""
    return _run("bar-check", group, bar_nmax=nmax, bar_dmax=dmax, double=double, jobs=jobs)


def catalog():
    """The built-in groups with their basic invariants."""
    return _run("catalog")["catalog"]
