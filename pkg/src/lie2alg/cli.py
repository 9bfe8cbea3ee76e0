"""Command line interface.

Subcommands::

    check FILE          run the checker matching the document kind
    ss FILE [-o OUT]    skew-symmetrize a structure document
    cohomology FILE     cocycle/coboundary/quotient dimensions (--ce adds the
                        Chevalley-Eilenberg side and the exact sequence)
    classify FILE       skeletal model and classifying data of a structure
    mc FILE             Maurer-Cartan residual (--twist -o OUT writes the twist)
    inner-sym FILE      symmetry two-term structure of a Maurer-Cartan element

Exit codes: 0 success / all identities hold, 1 a mathematical violation was
found, 2 malformed input.  Output is deterministic: identical input files
produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

import numpy as np

from . import cohom, defo, documents, el2, exactla as xla, morph, skew
from .documents import MCProblem, ParseError, ParsedDocument
from .report import CheckReport

PASS, VIOLATION, INPUT_ERROR = 0, 1, 2


def _load(path: str) -> ParsedDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return documents.parse(text)


def _emit(out: Optional[str], text: str) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report_exit(report: CheckReport, max_violations: int) -> int:
    print(report.render(max_per_equation=max_violations))
    return PASS if report.passed else VIOLATION


def _gamma_from_args(graded: defo.GradedL3Algebra, text: Optional[str]) -> np.ndarray:
    if text is None:
        return xla.zeros(graded.dim(1))
    entries = [s for s in text.split(",") if s.strip() != ""]
    if len(entries) != graded.dim(1):
        raise ParseError(
            f"--gamma needs {graded.dim(1)} comma-separated rationals, got {len(entries)}"
        )
    return xla.vector([e.strip() for e in entries])


def cmd_check(args) -> int:
    parsed = _load(args.file)
    kind, obj = parsed.kind, parsed.obj
    if kind in ("complex", "lie_algebra", "leibniz_algebra", "representation"):
        # axioms were enforced while constructing the domain object
        print("pass")
        return PASS
    if kind == "el2":
        return _report_exit(el2.check_el2(obj), args.max_violations)
    if kind == "morphism":
        return _report_exit(morph.check_morphism(obj), args.max_violations)
    if kind == "two_morphism":
        return _report_exit(morph.check_2morphism(obj), args.max_violations)
    if kind == "cocycle_pair":
        ok, report = cohom.is_cocycle(obj.module.algebra, obj.module, obj.pair)
        return _report_exit(report, args.max_violations)
    if kind == "graded_l3":
        return _report_exit(defo.check_graded(obj), args.max_violations)
    if kind == "mc_problem":
        report = defo.check_graded(obj.graded)
        residual = defo.mc_residual(obj.graded, obj.gamma)
        report.notes.append(
            "maurer-cartan residual: "
            + ("zero" if xla.is_zero(residual) else "(" + ", ".join(xla.rat_str(x) for x in residual) + ")")
        )
        return _report_exit(report, args.max_violations)
    raise ParseError(f"no checker for kind {kind!r}")  # pragma: no cover


def cmd_ss(args) -> int:
    parsed = _load(args.file)
    if parsed.kind != "el2":
        raise ParseError(f"ss expects an el2 document, got {parsed.kind!r}")
    try:
        result = skew.skew_symmetrize(parsed.obj)
    except el2.InvalidStructureError as exc:
        print(f"input fails validation: {exc}")
        return VIOLATION
    flavor = "strict" if el2.is_strict(result) else "semistrict"
    print(f"skew-symmetrized structure is {flavor}")
    name = parsed.metadata.get("name", "")
    _emit(args.output, documents.serialize(result, name=f"ss({name})" if name else "ss"))
    return PASS


def _representation_from(parsed: ParsedDocument) -> cohom.RepresentationFD:
    if parsed.kind == "representation":
        return parsed.obj
    if parsed.kind == "lie_algebra":
        g = parsed.obj
        return el2.RepresentationFD(g, 1, xla.zeros(1, g.dim, 1))
    raise ParseError(
        f"cohomology expects a representation or lie_algebra document, got {parsed.kind!r}"
    )


def cmd_cohomology(args) -> int:
    rep = _representation_from(_load(args.file))
    g = rep.algebra
    space = cohom.hl3(g, rep)
    print(f"dim ZL3 = {space.cocycles.dim}")
    print(f"dim BL3 = {space.coboundaries.dim}")
    print(f"dim HL3 = {space.dim}")
    for k, pair in enumerate(space.representatives):
        s_txt = ", ".join(xla.rat_str(x) for x in pair.s.reshape(-1))
        j_txt = ", ".join(xla.rat_str(x) for x in pair.j.reshape(-1))
        print(f"representative {k}: s = ({s_txt}) j = ({j_txt})")
    if args.ce:
        ce = cohom.ce_h3(g, rep)
        print(f"dim H3 = {ce.dim}")
        for k, phi in enumerate(ce.representatives):
            txt = ", ".join(xla.rat_str(x) for x in phi.reshape(-1))
            print(f"H3 representative {k}: ({txt})")
        if space.dim:
            print("ss map on HL3 representatives (columns) in H3 coordinates:")
            for k, pair in enumerate(space.representatives):
                coords = cohom.ce_class_coordinates(ce, cohom.ss_class(g, rep, pair), g, rep)
                txt = ", ".join(xla.rat_str(x) for x in coords)
                print(f"  ss[rep {k}] = ({txt})")
        seq = cohom.exact_sequence_report(g, rep)
        print(seq.render())
        return PASS if seq.passed else VIOLATION
    return PASS


def cmd_classify(args) -> int:
    parsed = _load(args.file)
    if parsed.kind != "el2":
        raise ParseError(f"classify expects an el2 document, got {parsed.kind!r}")
    verdict = el2.check_el2(parsed.obj)
    if not verdict.passed:
        print(verdict.render(args.max_violations))
        return VIOLATION
    try:
        skeletal, inclusion = cohom.transfer_to_skeletal(parsed.obj)
    except cohom.TransferError as exc:
        print(f"transfer failed: {exc}")
        return VIOLATION
    g, m, pair = cohom.extract_class(skeletal)
    print(f"algebra dimension: {g.dim}")
    print("structure constants: (" + ", ".join(xla.rat_str(x) for x in g.c.reshape(-1)) + ")")
    print(f"module dimension: {m.dim}")
    print("action tensor: (" + ", ".join(xla.rat_str(x) for x in m.rho.reshape(-1)) + ")")
    print("class representative s: (" + ", ".join(xla.rat_str(x) for x in pair.s.reshape(-1)) + ")")
    print("class representative j: (" + ", ".join(xla.rat_str(x) for x in pair.j.reshape(-1)) + ")")
    cert_morphism = morph.check_morphism(inclusion).passed
    cert_equiv = morph.is_equivalence(inclusion)
    print(f"equivalence certificate: morphism axioms {'pass' if cert_morphism else 'FAIL'}, "
          f"quasi-isomorphism {'yes' if cert_equiv else 'NO'}")
    if args.output:
        _emit(args.output, documents.serialize(skeletal, name="skeletal model"))
    return PASS if cert_morphism and cert_equiv else VIOLATION


def _graded_and_gamma(args) -> tuple[defo.GradedL3Algebra, np.ndarray]:
    parsed = _load(args.file)
    if parsed.kind == "mc_problem":
        problem: MCProblem = parsed.obj
        if args.gamma is not None:
            raise ParseError("--gamma conflicts with an mc_problem document")
        return problem.graded, problem.gamma
    if parsed.kind == "graded_l3":
        return parsed.obj, _gamma_from_args(parsed.obj, args.gamma)
    raise ParseError(f"expected a graded_l3 or mc_problem document, got {parsed.kind!r}")


def cmd_mc(args) -> int:
    graded, gamma = _graded_and_gamma(args)
    residual = defo.mc_residual(graded, gamma)
    if xla.is_zero(residual):
        print("maurer-cartan residual: zero")
        if args.twist:
            twisted = defo.twist(graded, gamma)
            _emit(args.output, documents.serialize(twisted, name="twisted structure"))
        return PASS
    print("maurer-cartan residual: (" + ", ".join(xla.rat_str(x) for x in residual) + ")")
    return VIOLATION


def cmd_inner_sym(args) -> int:
    graded, gamma = _graded_and_gamma(args)
    try:
        if args.n == 2:
            algebra = defo.inner_symmetries_n2(graded, gamma)
            report = CheckReport()
        else:
            report = defo.theorem_n3_report(graded, gamma)
            algebra = defo.inner_symmetries_n3(graded, gamma).algebra
    except (defo.MaurerCartanError, defo.DegreeError, el2.InvalidStructureError) as exc:
        print(f"construction failed: {exc}")
        return VIOLATION
    if not report.passed:
        print(report.render(args.max_violations))
        return VIOLATION
    print("all construction identities hold")
    if args.skew:
        algebra = skew.skew_symmetrize(algebra)
        print("skew-symmetrized: "
              + ("strict" if el2.is_strict(algebra) else "semistrict"))
    _emit(args.output, documents.serialize(algebra, name="symmetry structure"))
    return PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lie2alg",
        description="Exact computations with weak Lie 2-algebras.",
    )
    parser.add_argument(
        "--threads", type=int, default=1, metavar="N",
        help="cap on worker parallelism (all checks are pure; execution is "
             "sequential and never exceeds the cap)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the checker matching the document kind")
    p.add_argument("file")
    p.add_argument("--max-violations", type=int, default=20, metavar="N",
                   help="residuals printed per identity (default 20)")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("ss", help="skew-symmetrize a structure document")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=cmd_ss)

    p = sub.add_parser("cohomology", help="cocycle pair cohomology of an algebra with module")
    p.add_argument("file", help="representation document (or lie_algebra; trivial module assumed)")
    p.add_argument("--ce", action="store_true",
                   help="also compute the Chevalley-Eilenberg side and the exact sequence")
    p.set_defaults(fn=cmd_cohomology)

    p = sub.add_parser("classify", help="skeletal model and classifying data")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None, help="write the skeletal model document")
    p.add_argument("--max-violations", type=int, default=20)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("mc", help="Maurer-Cartan residual, optionally writing the twist")
    p.add_argument("file", help="mc_problem document, or graded_l3 with --gamma")
    p.add_argument("--gamma", default=None, metavar="Q,Q,...",
                   help="degree-1 element as comma-separated rationals")
    p.add_argument("--twist", action="store_true", help="write the twisted structure when the residual is zero")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=cmd_mc)

    p = sub.add_parser("inner-sym", help="symmetry two-term structure of a Maurer-Cartan element")
    p.add_argument("file", help="mc_problem document, or graded_l3 with --gamma")
    p.add_argument("--gamma", default=None, metavar="Q,Q,...")
    p.add_argument("--n", type=int, choices=(2, 3), default=3)
    p.add_argument("--skew", action="store_true", help="also skew-symmetrize the result")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--max-violations", type=int, default=20)
    p.set_defaults(fn=cmd_inner_sym)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    from .dkcore import ChainMapError, CompositionError

    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.fn(args)
    except (ParseError, xla.ShapeError, CompositionError, ChainMapError, defo.DegreeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (
        el2.InvalidStructureError,
        el2.PairingError,
        cohom.CocycleError,
        cohom.TransferError,
        defo.MaurerCartanError,
    ) as exc:
        print(f"structure violation: {exc}")
        return VIOLATION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
