"""Command-line front end.

Subcommands: ``roots`` (root list with lengths and duals), ``isotropy``
(residue classes), ``pi2`` (homotopy basis, sphere coordinates, rigidity,
fundamental groups), ``verify`` (exhaustive theorem survey over a grid),
``figure`` (rank-2 SVG class pictures).

Simple roots are addressed by 1-based indices in the fixed per-family
numbering (see docs/index-tables.md).  Exit codes: 0 success, 1 survey
violation, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .errors import FlagtopError
from .figures import render_figure
from .homotopy import (
    GroupPreset,
    pi1_report,
    pi2_basis,
    rigidity_report,
    sphere_class,
)
from .isotropy import residue_classes
from .roots import RootSystem, build_root_system, parse_kind
from .survey import DEFAULT_FAMILIES, SurveyConfig, run_survey
from .weyl import ThetaSubset, in_isotropy


def _parse_theta(system: RootSystem, text: str) -> ThetaSubset:
    text = text.strip()
    if not text:
        return ThetaSubset.of(system, ())
    try:
        indices = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise FlagtopError(f"cannot parse theta {text!r}: expected comma-separated indices") from None
    return ThetaSubset.of(system, indices)


def _emit(args, payload: dict, table: str) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = table
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _root_row(system: RootSystem, root) -> dict:
    return {
        "coords": list(root),
        "height": sum(root),
        "length2": str(system.length2(root)),
        "length_class": system.length_class(root).value,
        "dual": [str(c) for c in system.dual_coords(root)],
    }


def cmd_roots(args) -> int:
    system = build_root_system(parse_kind(args.kind))
    all_roots = list(system.positive_roots) + [
        tuple(-c for c in r) for r in system.positive_roots
    ]
    payload = {
        "schema": "flagtop/roots-v1",
        "system": system.as_dict(),
        "roots": [_root_row(system, r) for r in all_roots],
    }
    header = f"{system.kind}: {len(system.roots)} roots, {len(system.positive_roots)} positive\n"
    rows = [
        f"  {str(r):<18} height {sum(r):>3}  {system.length_class(r).value:<6} "
        f"len2 {str(system.length2(r)):<4} dual {tuple(str(c) for c in system.dual_coords(r))}"
        for r in system.positive_roots
    ]
    _emit(args, payload, header + "\n".join(rows) + "\n")
    return 0


def cmd_isotropy(args) -> int:
    system = build_root_system(parse_kind(args.kind))
    theta = _parse_theta(system, args.theta)
    decomposition = residue_classes(system, theta, method=args.method)
    payload = {"schema": "flagtop/isotropy-v1", "kind": str(system.kind)}
    payload.update(decomposition.as_dict())
    k = len(decomposition.nonzero_classes)
    lines = [f"{system.kind}, theta {theta.display()}: {k} nonzero classes (k = {k})"]
    for cls in decomposition.classes:
        tag = "zero " if cls.is_zero_class else ""
        lengths = "/".join(sorted(lc.value for lc in cls.lengths_present)) or "-"
        lines.append(f"  {tag}class {cls.representative}: size {cls.size}, lengths {lengths}")
        lines.append("    members " + " ".join(str(m) for m in cls.members))
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


def cmd_pi2(args) -> int:
    system = build_root_system(parse_kind(args.kind))
    theta = _parse_theta(system, args.theta)
    reports = rigidity_report(system, theta)
    payload: dict = {
        "schema": "flagtop/pi2-v1",
        "kind": str(system.kind),
        "theta": sorted(theta.indices),
        "classes": [r.as_dict() for r in reports],
        "pi2_rank": None,
        "basis": None,
        "pi1": None,
    }
    lines = [f"{system.kind}, theta {theta.display()}"]
    if system.is_reduced:
        basis = pi2_basis(system, theta)
        payload["pi2_rank"] = len(basis)
        payload["basis"] = [list(b) for b in basis]
        pi1 = pi1_report(system, theta, GroupPreset(args.group))
        payload["pi1"] = pi1.as_dict()
        lines.append(f"  pi2 rank {len(basis)}, basis " + " ".join(str(b) for b in basis))
        lines.append(
            f"  pi1(U) = {pi1.pi1_u} ({args.group}), pi1(U_theta) = {pi1.pi1_u_theta}, "
            f"boundary image {pi1.boundary_image}, surjective {pi1.boundary_surjective}"
        )
    else:
        lines.append("  nonreduced system: combinatorial classes only, sphere data formal")
    for report in reports:
        cls = report.class_ref
        lines.append(
            f"  class {cls.representative}: size {cls.size}, "
            f"transitive {report.w_theta_transitive}, rigid {report.theta_rigid}"
            + (f", witness {report.witness}" if report.witness else "")
        )
    if args.spheres:
        sphere_rows = []
        for root in system.positive_roots:
            if in_isotropy(system, theta, root):
                continue
            cls = sphere_class(system, theta, root)
            sphere_rows.append(cls.as_dict())
            lines.append(f"  sphere {root}: coords {tuple(cls.coords)}")
        payload["spheres"] = sphere_rows
    _emit(args, payload, "\n".join(lines) + "\n")
    return 0


def cmd_verify(args) -> int:
    families = tuple(tok for tok in args.families.split(",") if tok.strip())
    thetas: tuple[tuple[int, ...], ...] = ()
    theta_mode = "all_subsets"
    if args.theta is not None:
        theta_mode = "listed"
        thetas = (tuple(int(t) for t in args.theta.replace(",", " ").split()),) if args.theta.strip() else ((),)
    jobs = args.jobs
    env_jobs = os.environ.get("FLAGTOP_JOBS")
    if env_jobs:
        jobs = int(env_jobs)
    config = SurveyConfig(
        families=families,
        max_rank=args.max_rank,
        theta_mode=theta_mode,
        thetas=thetas,
        output=args.output,
        fmt=args.format,
        jobs=jobs,
    )
    started = time.monotonic()
    report = run_survey(config)
    elapsed = time.monotonic() - started
    payload = report.as_dict()
    lines = [
        f"instances {len(report.results)}, nonzero classes {report.total_classes}, "
        f"max word length {report.max_word_length}, violations {len(report.violations)}"
    ]
    for violation in report.violations:
        lines.append(f"  VIOLATION [{violation.check}] {violation.instance}: {violation.detail}")
    _emit(args, payload, "\n".join(lines) + "\n")
    print(f"verify: {len(report.results)} instances in {elapsed:.2f}s", file=sys.stderr)
    return 1 if report.violations else 0


def cmd_figure(args) -> int:
    system = build_root_system(parse_kind(args.kind))
    theta = _parse_theta(system, args.theta)
    svg = render_figure(system, theta, dual=args.dual)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(svg)
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagtop",
        description="Exact root-system combinatorics of flag manifolds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_roots = sub.add_parser("roots", help="list roots with lengths and duals")
    p_roots.add_argument("kind", help="root system kind, e.g. A3, B2, G2, BC2")
    p_roots.add_argument("--format", choices=("table", "json"), default="table")
    p_roots.add_argument("--output", default=None, help="write to file instead of stdout")
    p_roots.set_defaults(func=cmd_roots)

    p_iso = sub.add_parser("isotropy", help="residue classes modulo the isotropy lattice")
    p_iso.add_argument("kind")
    p_iso.add_argument("--theta", default="", help="comma-separated 1-based simple indices")
    p_iso.add_argument("--method", choices=("coefficient", "lattice"), default="coefficient")
    p_iso.add_argument("--format", choices=("table", "json"), default="table")
    p_iso.add_argument("--output", default=None)
    p_iso.set_defaults(func=cmd_isotropy)

    p_pi2 = sub.add_parser("pi2", help="second homotopy basis, rigidity and pi1 quotients")
    p_pi2.add_argument("kind")
    p_pi2.add_argument("--theta", default="")
    p_pi2.add_argument("--spheres", action="store_true", help="per-root homotopy coordinates")
    p_pi2.add_argument(
        "--group",
        choices=tuple(p.value for p in GroupPreset),
        default=GroupPreset.SIMPLY_CONNECTED.value,
    )
    p_pi2.add_argument("--format", choices=("table", "json"), default="table")
    p_pi2.add_argument("--output", default=None)
    p_pi2.set_defaults(func=cmd_pi2)

    p_verify = sub.add_parser("verify", help="run the exhaustive verification survey")
    p_verify.add_argument("--families", default=",".join(DEFAULT_FAMILIES))
    p_verify.add_argument("--max-rank", type=int, default=4)
    p_verify.add_argument(
        "--theta",
        default=None,
        help="restrict to one theta (comma-separated indices); default all subsets",
    )
    p_verify.add_argument("--output", default=None)
    p_verify.add_argument("--format", choices=("table", "json"), default="table")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)

    p_fig = sub.add_parser("figure", help="rank-2 SVG figure of residue classes")
    p_fig.add_argument("kind")
    p_fig.add_argument("--theta", default="")
    p_fig.add_argument("--dual", action="store_true", help="draw the dual system instead")
    p_fig.add_argument("--out", required=True, help="output SVG path")
    p_fig.set_defaults(func=cmd_figure)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FlagtopError as exc:
        print(f"flagtop: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
