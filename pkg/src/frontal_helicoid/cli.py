"""Command-line interface: ``frontal-helicoid <command> --input SPEC ...``.

SPEC is a curve-spec JSON file or the name of a bundled curve (see
``frontal-helicoid list``).  Reports go to stdout as JSON with sorted keys.

Exit codes: 0 success, 1 usage/parse/IO error, 2 curve validation failure,
3 delta != 1 where a lightcone frame is needed, 4 disagreement between
independent computations (classification routes, or identity residuals
above tolerance in ``verify``).
"""
import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .curvespec import SpecError, bundled_names, load_spec
from .errors import (CurveValidationError, DeltaNotOneError, DomainError,
                     NotSingularError, ParseError)
from .legendre import DEFAULT_SAMPLES, validate
from .meshio import (default_v_range, export_causal_csv, export_csv, export_obj,
                     sample_mesh, singular_locus, write_text_atomic)
from .singularity import (DEFAULT_GRID, classify_surface, det_identity_check,
                          table_oracle_residual)
from .tolerance import default_tolerance

SCHEMA = "frontal-helicoid/1"
EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_DELTA, EXIT_DISAGREE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def dump(obj, stream=None):
    text = json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n"
    (stream or sys.stdout).write(text)
    return text


def _tolerance(args):
    tol = default_tolerance()
    if getattr(args, "tol", None) is not None:
        tol = tol.with_rel(args.tol)
    return tol


def _envelope(spec, tol, **extra):
    out = {
        "schema": SCHEMA,
        "tool_version": __version__,
        "curve": spec.name,
        "kind": int(spec.kind),
        "lambda": spec.lam,
        "tolerance": {"abs": tol.abs_tol, "rel": tol.rel_tol},
    }
    out.update(extra)
    return out


def _validated_surface(spec, tol, samples=DEFAULT_SAMPLES):
    surface = spec.surface()
    report = validate(surface.curve, samples, tol)
    report.raise_for_failure()
    return surface, report


# -- commands -----------------------------------------------------------------

def cmd_validate(args):
    spec = load_spec(args.input)
    tol = _tolerance(args)
    report = validate(spec.curve(), args.samples, tol)
    dump(_envelope(spec, tol, validation=report.to_dict(), delta=report.delta))
    return EXIT_OK if report.ok else EXIT_INVALID


def classification_report(spec, grid, tol):
    surface, vrep = _validated_surface(spec, tol)
    reports, suspects = classify_surface(surface, grid, tol)
    entries = [r.to_dict() for r in reports]
    return _envelope(
        spec, tol, delta=vrep.delta, grid=grid,
        singular_points=entries,
        suspected_tangent_roots=[{"u": t.u, "abs_beta": t.abs_beta} for t in suspects],
        all_agree=all(e["agree"] for e in entries),
    )


def cmd_classify(args):
    spec = load_spec(args.input)
    report = classification_report(spec, args.grid, _tolerance(args))
    text = dump(report)
    if args.out:
        write_text_atomic(args.out, text)
    return EXIT_OK if report["all_agree"] else EXIT_DISAGREE


def _v_range(args, kind):
    lo, hi = default_v_range(kind)
    return (lo if args.vmin is None else args.vmin, hi if args.vmax is None else args.vmax)


def _sidecar(path, suffix):
    root, _ = os.path.splitext(path)
    return root + suffix


def cmd_mesh(args):
    spec = load_spec(args.input)
    tol = _tolerance(args)
    surface, _ = _validated_surface(spec, tol)
    mesh = sample_mesh(surface, None, _v_range(args, spec.kind), args.nu, args.nv, tol)
    export_obj(mesh, args.out)
    tags = _sidecar(args.out, ".causal.csv")
    export_causal_csv(mesh, tags)
    counts = {}
    for t in mesh.causal:
        counts[t.value] = counts.get(t.value, 0) + 1
    dump(_envelope(spec, tol, obj=args.out, causal_csv=tags, vertices=len(mesh.vertices),
                   faces=len(mesh.faces), causal_counts=counts))
    return EXIT_OK


def cmd_locus(args):
    spec = load_spec(args.input)
    tol = _tolerance(args)
    surface, _ = _validated_surface(spec, tol)
    locus = singular_locus(surface, args.u0, _v_range(args, spec.kind), args.n, tol=tol)
    if args.out.lower().endswith(".obj"):
        export_obj(locus, args.out)
    else:
        export_csv(locus, args.out)
    dump(_envelope(spec, tol, out=args.out, u0=locus.u0, type=locus.cusp_type,
                   samples=len(locus.v)))
    return EXIT_OK


def cmd_invariants(args):
    spec = load_spec(args.input)
    tol = _tolerance(args)
    surface, vrep = _validated_surface(spec, tol)
    inv = surface.basic_invariants(args.u, args.v).as_dict()
    closed = surface.basic_invariants_closed_form(args.u, args.v).as_dict()
    res = surface.frame_residuals(args.u, args.v)
    dump(_envelope(
        spec, tol, delta=vrep.delta, u=args.u, v=args.v,
        invariants={k: float(x) for k, x in inv.items()},
        invariants_closed_form={k: float(x) for k, x in closed.items()},
        max_invariant_difference=max(abs(inv[k] - closed[k]) for k in inv),
        frame_residuals=[float(r) for r in res],
        frame_invariants={k: float(x) for k, x in surface.frame_invariants(args.u, args.v).items()},
        wedge_residual=float(surface.wedge_residual(args.u, args.v)),
    ))
    return EXIT_OK


def cmd_verify(args):
    spec = load_spec(args.input)
    tol = _tolerance(args)
    surface, _ = _validated_surface(spec, tol)
    rng = np.random.default_rng(args.seed)
    us = np.sort(rng.uniform(*spec.domain, args.points))
    det_res = [float(det_identity_check(surface, u)) for u in us]
    tab_res = [float(table_oracle_residual(surface, u).max()) for u in us]
    worst_det, worst_tab = max(det_res), max(tab_res)
    passed = bool(worst_det < args.threshold and worst_tab < args.threshold)
    dump(_envelope(spec, tol, points=args.points, seed=args.seed, threshold=args.threshold,
                   max_det_identity_residual=worst_det,
                   max_table_oracle_residual=worst_tab,
                   worst_u={"det_identity": float(us[int(np.argmax(det_res))]),
                            "table_oracle": float(us[int(np.argmax(tab_res))])},
                   passed=passed))
    return EXIT_OK if passed else EXIT_DISAGREE


def cmd_list(args):
    dump({"schema": SCHEMA, "bundled_curves": bundled_names()})
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="frontal-helicoid",
                description="Helicoidal surfaces from non-lightlike frontals in Minkowski 3-space.",
                epilog="FRONTAL_TOL overrides the default relative tolerance (1e-9).")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def command(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.set_defaults(func=fn)
        if name != "list":
            sp.add_argument("--input", "-i", required=True,
                            help="curve-spec JSON file or bundled curve name")
            sp.add_argument("--tol", type=float, help="relative zero-test tolerance")
        return sp

    sp = command("validate", cmd_validate, "check that (gamma, nu) is a non-lightlike Legendre curve")
    sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)

    sp = command("classify", cmd_classify, "find and classify the singular points")
    sp.add_argument("--grid", type=int, default=DEFAULT_GRID)
    sp.add_argument("--out", help="also write the JSON report here")

    vhelp = "default: [-pi, pi] for type 1 (one turn), [-2, 2] for type 2"
    sp = command("mesh", cmd_mesh, "write an OBJ mesh plus a causal-tag CSV sidecar")
    sp.add_argument("--nu", type=int, default=64)
    sp.add_argument("--nv", type=int, default=64)
    sp.add_argument("--vmin", type=float, help=vhelp)
    sp.add_argument("--vmax", type=float, help=vhelp)
    sp.add_argument("--out", required=True, help="OBJ path; tags go to <stem>.causal.csv")

    sp = command("locus", cmd_locus, "write the singular curve {u = u0} as CSV (or OBJ)")
    sp.add_argument("--u0", type=float, required=True)
    sp.add_argument("--n", type=int, default=64)
    sp.add_argument("--vmin", type=float, help=vhelp)
    sp.add_argument("--vmax", type=float, help=vhelp)
    sp.add_argument("--out", required=True)

    sp = command("invariants", cmd_invariants, "basic invariants and frame residuals (delta = 1 only)")
    sp.add_argument("--u", type=float, required=True)
    sp.add_argument("--v", type=float, default=0.0)

    sp = command("verify", cmd_verify, "determinant identities and table/oracle agreement at random points")
    sp.add_argument("--points", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threshold", type=float, default=1e-8)

    command("list", cmd_list, "list the bundled curve specs")
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        src = exc.source or ""
        print(f"parse error at offset {exc.offset}: expected {exc.expected}, found {exc.found}",
              file=sys.stderr)
        if src:
            print(f"  {src}\n  {' ' * exc.offset}^", file=sys.stderr)
        return EXIT_USAGE
    except CurveValidationError as exc:
        print(f"validation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DeltaNotOneError as exc:
        print(f"hypothesis violated: lightcone frames require delta = 1 "
              f"(nu timelike, a^2 - b^2 = 1). {exc}", file=sys.stderr)
        return EXIT_DELTA
    except (SpecError, DomainError, NotSingularError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
