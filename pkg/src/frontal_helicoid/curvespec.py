"""JSON curve-spec files and the bundled example curves.

A spec is a JSON object::

    {"name": "...", "kind": 1, "lambda": 1.0, "domain": [-2, 2],
     "x1": "...", "x2": "...", "a": "...", "b": "..."}

with the four component functions written in the expression language of
:mod:`frontal_helicoid.exprdsl`.
"""
import json
import os
from dataclasses import dataclass
from importlib import resources

from .helicoid import HelicoidalSurface, Kind
from .legendre import LegendreCurve

REQUIRED = ("name", "kind", "lambda", "domain", "x1", "x2", "a", "b")


class SpecError(ValueError):
    """Malformed curve spec (missing keys, wrong types)."""


@dataclass(frozen=True)
class CurveSpec:
    name: str
    kind: Kind
    lam: float
    domain: tuple
    x1: str
    x2: str
    a: str
    b: str
    description: str = ""

    @classmethod
    def from_dict(cls, d):
        if not isinstance(d, dict):
            raise SpecError("curve spec must be a JSON object")
        missing = [k for k in REQUIRED if k not in d]
        if missing:
            raise SpecError(f"curve spec is missing {', '.join(missing)}")
        for k in ("name", "x1", "x2", "a", "b"):
            if not isinstance(d[k], str):
                raise SpecError(f"{k!r} must be a string")
        if d["kind"] not in (1, 2):
            raise SpecError("'kind' must be 1 or 2")
        lam = d["lambda"]
        if isinstance(lam, bool) or not isinstance(lam, (int, float)) or lam == 0:
            raise SpecError("'lambda' must be a non-zero number")
        dom = d["domain"]
        if (not isinstance(dom, list) or len(dom) != 2
                or not all(isinstance(t, (int, float)) and not isinstance(t, bool) for t in dom)
                or not dom[0] < dom[1]):
            raise SpecError("'domain' must be [u_min, u_max] with u_min < u_max")
        return cls(d["name"], Kind(d["kind"]), float(lam), (float(dom[0]), float(dom[1])),
                   d["x1"], d["x2"], d["a"], d["b"], str(d.get("description", "")))

    def curve(self):
        return LegendreCurve(self.x1, self.x2, self.a, self.b, self.domain, self.name)

    def surface(self):
        return HelicoidalSurface(self.curve(), self.lam, self.kind, self.name)


def bundled_names():
    files = resources.files(__package__).joinpath("curves")
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def bundled_text(name):
    if name.endswith(".json"):
        name = name[:-5]
    if name not in bundled_names():
        raise FileNotFoundError(f"no bundled curve named {name!r}")
    return resources.files(__package__).joinpath("curves").joinpath(name + ".json").read_text("utf-8")


def read_spec_text(source):
    """Text of a spec given a file path or a bundled name.

    A path that does not exist falls back to the bundled curve with the same
    base name, so ``examples/example-5.1.json`` works from any directory.
    """
    source = os.fspath(source)
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    base = os.path.basename(source)
    try:
        return bundled_text(base)
    except FileNotFoundError:
        raise FileNotFoundError(f"{source}: no such file or bundled curve") from None


def load_spec(source):
    try:
        data = json.loads(read_spec_text(source))
    except json.JSONDecodeError as exc:
        raise SpecError(f"{source}: invalid JSON ({exc})") from exc
    return CurveSpec.from_dict(data)


def load_surface(source):
    return load_spec(source).surface()
