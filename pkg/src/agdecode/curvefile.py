"""JSON curve files: loading with full validation, and the bundled fixtures."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .code import check_assumption1
from .curve import Curve, FunElem
from .errors import CurveError, InvariantError, Issue
from .field import GF, FieldError
from .local import Place, check_place

__all__ = ["CurveData", "load_curve", "parse_curve", "curve_to_dict", "BUNDLED"]

BUNDLED = ("klein", "hermitian4")


@dataclass
class CurveData:
    name: str
    curve: Curve
    places: list
    f: FunElem


def _poly(terms, where, issues):
    out = {}
    if not isinstance(terms, list):
        issues.append(Issue("format", where, "expected a list of {e, c} terms"))
        return out
    for k, t in enumerate(terms):
        try:
            e, c = tuple(int(x) for x in t["e"]), int(t["c"])
        except (KeyError, TypeError, ValueError):
            issues.append(Issue("format", f"{where}[{k}]", "term needs integer 'e' list and 'c'"))
            continue
        if any(x < 0 for x in e):
            issues.append(Issue("format", f"{where}[{k}]", "negative exponent"))
            continue
        out[e] = c
    return out


def parse_curve(data: dict) -> CurveData:
    """Build and validate a curve from its JSON object; raises CurveError listing every issue."""
    issues = []
    name = str(data.get("name", ""))
    missing = [k for k in ("field", "weights", "ideal_basis", "genus", "places", "f") if k not in data]
    if missing:
        raise CurveError([Issue("format", "file", f"missing keys {missing}")])
    fd = data["field"]
    try:
        F = GF(int(fd["p"]), int(fd["e"]), tuple(int(c) for c in fd["modulus"]))
    except (FieldError, KeyError, TypeError, ValueError) as exc:
        raise CurveError([Issue("field-modulus", "field", str(exc))]) from None
    basis = [_poly(b, f"ideal_basis[{k}]", issues) for k, b in enumerate(data["ideal_basis"])]
    fpoly = _poly(data["f"], "f", issues)
    if issues:
        raise CurveError(issues)
    try:
        curve = Curve(F, data["weights"], basis, int(data["genus"]), name)
    except CurveError as exc:
        raise CurveError(exc.issues) from None
    places = []
    for k, pd in enumerate(data["places"]):
        where = f"places[{k}]"
        try:
            P = Place(tuple(int(c) for c in pd["coords"]), int(pd.get("lp", 1)))
        except (KeyError, TypeError, ValueError):
            issues.append(Issue("format", where, "place needs integer 'coords' and 'lp'"))
            continue
        found = check_place(curve, P, where)
        issues.extend(found)
        places.append(P)
    try:
        f = curve.normal_form(fpoly)
    except InvariantError as exc:  # pragma: no cover - normal_form always lands in the footprint
        issues.append(Issue("format", "f", str(exc)))
        raise CurveError(issues) from None
    if not issues:
        report = check_assumption1(curve, places, f)
        if not report:
            issues.append(Issue("assumption-1", "f",
                                "Assumption 1 fails: " + "; ".join(report.reasons)))
    if issues:
        raise CurveError(issues)
    return CurveData(name, curve, places, f)


def _resolve(path) -> str:
    p = Path(path)
    if p.exists():
        return p.read_text()
    stem = p.name[:-5] if p.name.endswith(".json") else p.name
    if stem in BUNDLED and p.parent == Path("."):
        return resources.files(__package__).joinpath("curves", f"{stem}.json").read_text()
    raise FileNotFoundError(f"no curve file {path}")


def load_curve(path) -> CurveData:
    """Load a curve file; bare names 'klein' / 'hermitian4' (with or without .json) use the bundled fixtures."""
    text = _resolve(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CurveError([Issue("format", str(path), f"invalid JSON: {exc}")]) from None
    return parse_curve(data)


def _terms(poly: dict) -> list:
    return [{"e": list(e), "c": c} for e, c in sorted(poly.items())]


def curve_to_dict(cd: CurveData) -> dict:
    c = cd.curve
    return {
        "name": cd.name,
        "field": {"p": c.field.p, "e": c.field.e, "modulus": list(c.field.modulus)},
        "weights": list(c.weights),
        "genus": c.genus,
        "ideal_basis": [_terms(g) for g in c.ideal_basis],
        "f": _terms(cd.f.terms()),
        "places": [{"coords": list(P.coords), "lp": P.lp} for P in cd.places],
    }
