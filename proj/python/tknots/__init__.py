"""Shadow and local biquandle invariants of classical links and surface-links.

The heavy lifting lives in the C++ extension ``tknots._core``. ``run`` mirrors
the command-line tool; the thin helpers below it cover the common calls.
"""

import json
import os

from . import _core
from ._core import (
    HorizontalTribracket,
    ShadowBiquandle,
    TknotsError,
    alexander,
    corresponding_tribracket,
    dihedral,
    dihedral_tribracket,
    mochizuki_value,
    smith_normal_form,
)

__all__ = [
    "HorizontalTribracket", "ShadowBiquandle", "TknotsError", "alexander",
    "corresponding_tribracket", "dihedral", "dihedral_tribracket", "mochizuki_value",
    "smith_normal_form", "structure", "tribracket", "run", "check", "homology",
    "colorings", "invariant", "compare", "mochizuki", "verify",
]


def _source(value):
    """(path, inline JSON text) for a path or an already-decoded document."""
    if value is None:
        return "", None
    if isinstance(value, (str, os.PathLike)):
        return os.fspath(value), None
    if isinstance(value, (ShadowBiquandle, HorizontalTribracket)):
        return "", value.to_json()
    return "", json.dumps(value)


def structure(doc):
    """ShadowBiquandle from a dict or a JSON file."""
    path, text = _source(doc)
    if text is None:
        with open(path) as f:
            text = f.read()
    return _core.structure_from_json(text)


def tribracket(doc):
    path, text = _source(doc)
    if text is None:
        with open(path) as f:
            text = f.read()
    return _core.tribracket_from_json(text)


def run(subcommand, structure=None, diagram=None, *, cocycle=None, theory="sb", degree=2,
        mod=0, form="sb", n=3, transported=False, classes=True, jobs=1):
    """Run one CLI subcommand in-process. Returns (report, exit_status)."""
    spath, stext = _source(structure)
    dpath, dtext = _source(diagram)
    if cocycle is None or isinstance(cocycle, (str, os.PathLike)):
        cspec, ctext = os.fspath(cocycle) if cocycle is not None else "", None
    else:
        cspec, ctext = "", json.dumps(cocycle)
    text, status = _core.run(subcommand, spath, stext, dpath, dtext, cspec, ctext, theory,
                             degree, mod, form, n, transported, classes, jobs)
    return json.loads(text), status


def _checked(subcommand, *args, **kwargs):
    report, status = run(subcommand, *args, **kwargs)
    if "error" in report:
        raise TknotsError(report["error"]["code"], report["error"]["message"])
    return report


def check(structure):
    return _checked("check", structure)


def homology(structure, theory="sb", degree=2, mod=0, jobs=1):
    return _checked("homology", structure, theory=theory, degree=degree, mod=mod, jobs=jobs)


def colorings(diagram, structure, theory="sb", jobs=1):
    return _checked("colorings", structure, diagram, theory=theory, jobs=jobs)


def invariant(diagram, structure, cocycle, theory="sb", classes=True, jobs=1):
    return _checked("invariant", structure, diagram, cocycle=cocycle, theory=theory,
                    classes=classes, jobs=jobs)


def compare(diagram, structure, cocycle=None, jobs=1):
    return _checked("compare", structure, diagram, cocycle=cocycle, jobs=jobs)


def mochizuki(n=3, degree=2, form="sb", transported=False):
    return _checked("mochizuki", n=n, degree=degree, form=form, transported=transported)


def verify(jobs=1):
    return _checked("verify", jobs=jobs)
