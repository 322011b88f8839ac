"""Command line interface.

Exit codes:
  0   success (classify: both cylinders exist; tiger: certified)
  10  classify: no anticanonical cylinder, but some polarization has one
  20  classify: no cylinder for any polarization; tiger: nothing to build
  30  tiger/sweep: construction discrepancy (an unobstructed decomposition
      or a spec no case covers)
  2   unreadable or malformed spec file
  3   well-formed file describing an invalid surface spec
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .classify import classify
from .lattice import InvalidSpec, SurfaceSpec, enumerate_specs
from .specio import (
    SpecFileError,
    certificate_document,
    parse_spec_text,
    render_document,
    verdict_document,
)
from .tigers import NoCaseApplies, build_tiger

EXIT_OK = 0
EXIT_NO_ANTICANONICAL = 10
EXIT_NO_CYLINDER = 20
EXIT_DISCREPANCY = 30
EXIT_BAD_FILE = 2
EXIT_BAD_SPEC = 3


def _load_spec(path: str) -> SurfaceSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse_spec_text(text)


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_classify(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    verdict = classify(spec)
    _write_output(render_document(verdict_document(spec, verdict)), args.out)
    if verdict.anticanonical_cylinder:
        return EXIT_OK
    if verdict.h_polar_cylinder:
        return EXIT_NO_ANTICANONICAL
    return EXIT_NO_CYLINDER


def _cmd_tiger(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    verdict = classify(spec)
    if not verdict.anticanonical_cylinder:
        sys.stderr.write(
            f"{spec}: no anticanonical cylinder "
            f"({verdict.anticanonical_reason}); nothing to build\n"
        )
        return EXIT_NO_CYLINDER
    trace = (lambda line: sys.stderr.write(line + "\n")) if args.trace else None
    try:
        cert = build_tiger(spec, trace=trace)
    except NoCaseApplies as exc:
        sys.stderr.write(f"discrepancy: {exc}\n")
        return EXIT_DISCREPANCY
    _write_output(render_document(certificate_document(cert)), args.out)
    if cert.status != "certified":
        sys.stderr.write(
            f"{spec}: {sum(1 for o in cert.decompositions if o.obstruction is None)} "
            "decomposition(s) carry no obstruction\n"
        )
        return EXIT_DISCREPANCY
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    lines = []
    failures = 0
    for spec in enumerate_specs():
        verdict = classify(spec)
        head = (
            f"degree {spec.degree} {spec.singularity_label}: "
            f"anticanonical={'yes' if verdict.anticanonical_cylinder else 'no'} "
            f"polar={'yes' if verdict.h_polar_cylinder else 'no'}"
        )
        if not verdict.anticanonical_cylinder:
            lines.append(head)
            continue
        try:
            cert = build_tiger(spec)
        except NoCaseApplies as exc:
            failures += 1
            lines.append(f"{head} DISCREPANCY: {exc}")
            continue
        if cert.status != "certified":
            failures += 1
            lines.append(f"{head} case={cert.case_id} DISCREPANCY: unobstructed split")
            continue
        lines.append(f"{head} case={cert.case_id} ratio={cert.ratio} certified")
    summary = f"{len(lines)} specs, {failures} discrepancies"
    lines.append(summary)
    _write_output("\n".join(lines) + "\n", args.out)
    return EXIT_DISCREPANCY if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dpcyl",
        description="Cylinder classification and tiger certificates for "
        "singular del Pezzo surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", help="decide cylinder existence for one spec"
    )
    p_classify.add_argument("--spec", required=True, help="path to a spec file")
    p_classify.add_argument("--out", help="write the JSON verdict here instead of stdout")
    p_classify.set_defaults(func=_cmd_classify)

    p_tiger = sub.add_parser(
        "tiger", help="build the non-log-canonical certificate for one spec"
    )
    p_tiger.add_argument("--spec", required=True, help="path to a spec file")
    p_tiger.add_argument("--out", help="write the JSON certificate here instead of stdout")
    p_tiger.add_argument(
        "--trace", action="store_true",
        help="echo every derivation step to stderr",
    )
    p_tiger.set_defaults(func=_cmd_tiger)

    p_sweep = sub.add_parser(
        "sweep", help="classify and certify every valid spec"
    )
    p_sweep.add_argument("--out", help="write the report here instead of stdout")
    p_sweep.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecFileError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BAD_FILE
    except InvalidSpec as exc:
        sys.stderr.write(f"error: invalid spec: {exc}\n")
        return EXIT_BAD_SPEC


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
