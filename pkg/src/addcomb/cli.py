"""Command line front end.

Exit codes: 0 = success / all checks passed, 1 = a lemma check found a
counterexample (an implementation bug by definition), 2 = bad configuration
or a budget violation.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .bounds import bound_calculator, theorem1_pipeline, threshold_chain
from .covering import covering_certificate
from .fourier import spectrum
from .groups import BudgetError, GSet, sumset
from .rectify import diameter, rectify
from .torsion import torsion_cover
from .instances import parse_elements, parse_group, parse_shape
from .serialize import dumps, gset_to_obj, load_instances
from .suite import CHECK_NAMES, SuiteConfig, run_suite

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="addcomb", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_set: bool = True) -> None:
        if with_set:
            p.add_argument("--group", help='ambient group, e.g. "cyclic:101", "window:0:50", "torsion:2:3"')
            p.add_argument("--elements", help='elements, e.g. "0,1,3" or "0,0,1;1,0,1"')
            p.add_argument("--input", help="instance file (single instance)")
        p.add_argument("--format", choices=("human", "structured"), default="human")
        p.add_argument("--out", help="write the structured report to this file")

    p = sub.add_parser("sumset", help="A+B (B defaults to A)")
    common(p)
    p.add_argument("--elements-b", help="second summand; defaults to the first")

    p = sub.add_parser("diam", help="minimal progression cover")
    common(p)

    p = sub.add_parser("spectrum", help="character magnitudes and Parseval residual")
    common(p)
    p.add_argument("--top", type=int, default=8)

    p = sub.add_parser("cover", help="translate-cover certificate for (A, B, B)")
    common(p)
    p.add_argument("--elements-b", help="summand; defaults to A")
    p.add_argument("--budget", type=int, default=18, help="witness search size cap")
    p.add_argument("--check-m", type=int, default=0, help="also verify the iterated inclusion up to m")

    p = sub.add_parser("rectify", help="order-k isomorphism onto an integer set")
    common(p)
    p.add_argument("--order", type=int, default=2, help="number of preserved summands")

    p = sub.add_parser("torsion-cover", help="subgroup-coset certificate in (Z/r)^n")
    common(p)
    p.add_argument("--budget", type=int, default=18)

    p = sub.add_parser("bounds", help="constant-chain calculator, or the full pipeline on a set")
    common(p)
    p.add_argument("--alpha", type=str, help='density, float or exact "p/q"')
    p.add_argument("--doubling", type=float, help="growth parameter K")
    p.add_argument("--order", type=int, help="isomorphism order k for the second threshold")
    p.add_argument("--at-threshold", action="store_true", help="evaluate exactly at the theorem threshold")
    p.add_argument("--delta", type=float, help="pipeline concentration parameter")

    p = sub.add_parser("verify", help="run lemma checks over generated or loaded instances")
    common(p)
    p.add_argument("--shape", help='generator, e.g. "exhaustive:3", "random:8:100"')
    p.add_argument("--checks", default="all", help=f'comma list from {",".join(CHECK_NAMES)}')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=12)
    p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identity)")

    p = sub.add_parser("enumerate", help="materialize an instance stream")
    common(p)
    p.add_argument("--shape", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--limit", type=int, help="cap on the number of instances")

    return top


def _load_set(args: argparse.Namespace) -> GSet:
    if args.input:
        sets = load_instances(args.input)
        if len(sets) != 1:
            raise ValueError(f"{args.input} holds {len(sets)} instances; expected exactly one")
        return sets[0]
    if not args.group or not args.elements:
        raise ValueError("need either --input or both --group and --elements")
    return parse_elements(args.elements, parse_group(args.group))


def _emit(args: argparse.Namespace, report, human: str) -> None:
    text = dumps(report) if args.format == "structured" else human + "\n"
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps(report))


def _set_line(A: GSet) -> str:
    elems = ", ".join(str(x) for x in A.elements)
    return f"{{{elems}}}"


def _cmd_sumset(args) -> int:
    A = _load_set(args)
    B = parse_elements(args.elements_b, A.group) if args.elements_b else A
    S = sumset(A, B)
    _emit(args, gset_to_obj(S), f"|A+B| = {len(S)}: {_set_line(S)}")
    return 0


def _cmd_diam(args) -> int:
    A = _load_set(args)
    w = diameter(A)
    _emit(
        args,
        w,
        f"diameter {w.length} (step {w.step}, start {w.start}); "
        f"A is covered by {{{w.start} + j*{w.step} : 0 <= j <= {w.length}}}",
    )
    return 0


def _cmd_spectrum(args) -> int:
    A = _load_set(args)
    rep = spectrum(A, top=args.top)
    top = ", ".join(f"{idx}:{mag:.6g}" for idx, mag in rep.top)
    _emit(
        args,
        rep,
        f"max nonprincipal |B^| = {rep.max_magnitude:.6g} at {rep.max_index}; "
        f"parseval residual {rep.parseval_residual:.3g}; top: {top}",
    )
    return 0


def _cmd_cover(args) -> int:
    A = _load_set(args)
    B = parse_elements(args.elements_b, A.group) if args.elements_b else A
    cert = covering_certificate(
        A, B, B, witness_budget=args.budget, check_m=args.check_m
    )
    lines = [
        f"translates T ({len(cert.translates)} of them, bound {cert.size_bound}): {_set_line(cert.translates)}",
        f"witness A' of size {len(cert.witness)} with ratio {cert.witness_ratio}"
        + (" (exhaustive)" if cert.witness_is_optimal else " (fallback A'=A)"),
        f"inclusion verified: {cert.inclusion_verified}",
    ]
    if args.check_m:
        lines.append(f"iterated inclusion verified up to m = {cert.m_checked}")
    _emit(args, cert, "\n".join(lines))
    return 0 if cert.inclusion_verified else 1


def _cmd_rectify(args) -> int:
    A = _load_set(args)
    out = rectify(A, args.order)
    if out.witness is None:
        human = (
            f"not rectifiable at order {args.order}: k*diam = {out.required} "
            f">= N = {A.group.modulus}"
        )
    else:
        w = out.witness
        checked = {True: "verified", False: "FAILED", None: "not checked (over budget)"}[w.verified]
        human = (
            f"image {_set_line(w.image)} via x -> {w.dilation}*x - {w.shift}; "
            f"order {w.order}, length {w.length}; multiset check: {checked}"
        )
    _emit(args, out, human)
    return 0


def _cmd_torsion_cover(args) -> int:
    A = _load_set(args)
    cert = torsion_cover(A, witness_budget=args.budget)
    ok = (
        cert.contains_a
        and cert.gen_inclusion_holds
        and cert.size_factor_holds
        and cert.bound_b_holds
    )
    human = (
        f"subgroup of size {cert.subgroup_size} (doubling {cert.doubling}, "
        f"difference ratio {cert.diff_ratio}, route {cert.route})\n"
        f"bounds: (a) {cert.bound_a} raw {cert.bound_a_raw}, "
        f"(b) {cert.bound_b} raw {cert.bound_b_raw}\n"
        f"contains A: {cert.contains_a}; gen inclusion: {cert.gen_inclusion_holds}; "
        f"size factor: {cert.size_factor_holds}"
    )
    _emit(args, cert, human)
    return 0 if ok else 1


def _cmd_bounds(args) -> int:
    if args.group or args.input:
        A = _load_set(args)
        rep = theorem1_pipeline(A, delta=args.delta)
        human = (
            f"N = {rep.modulus}, |A| = {rep.size}, alpha = {rep.alpha}, K = {rep.K:.6g}\n"
            f"gates: alpha {'met' if rep.gate_alpha else 'not met'}, "
            f"tau {'met' if rep.gate_tau else 'not met'} (tau = {rep.tau})\n"
            f"true diameter {rep.diam.length}"
            + (
                f"; bound {rep.diam_bound:.6g} ({'holds' if rep.diam_bound_holds else 'vacuous or violated'})"
                if rep.diam_bound is not None
                else ""
            )
        )
        _emit(args, rep, human)
        return 0
    if args.doubling is None:
        raise ValueError("bounds needs --doubling (with --alpha or --at-threshold), or a set")
    if args.at_threshold:
        rep = threshold_chain(args.doubling, args.order)
    else:
        if args.alpha is None:
            raise ValueError("bounds needs --alpha or --at-threshold")
        alpha = Fraction(args.alpha) if "/" in args.alpha else float(args.alpha)
        rep = bound_calculator(alpha, args.doubling, args.order)
    delta = "n/a" if rep.delta is None else f"{rep.delta:.12g}"
    human = (
        f"log(1/alpha) = {rep.log_inv_alpha:.12g}, threshold log = {rep.log_threshold_thm1:.12g}\n"
        f"alpha below threshold 1: {rep.alpha_below_thm1}"
        + (f"; below threshold 2: {rep.alpha_below_thm2}" if rep.k is not None else "")
        + f"\ndelta = {delta} (< 1/3: {rep.delta_below_third}"
        + (f", < 1/{rep.k}: {rep.delta_below_inv_k}" if rep.k is not None else "")
        + f")\ndiameter bound fraction = {rep.diam_bound_fraction:.12g}"
    )
    _emit(args, rep, human)
    return 0


def _cmd_verify(args) -> int:
    if args.input:
        instances = load_instances(args.input)
    elif args.group and args.shape:
        instances = list(parse_shape(args.shape, parse_group(args.group), args.seed))
    else:
        raise ValueError("verify needs --input, or --group with --shape")
    checks = CHECK_NAMES if args.checks == "all" else tuple(args.checks.split(","))
    config = SuiteConfig(
        checks=checks,
        seed=args.seed,
        witness_budget=args.budget,
        include_timing=args.timing,
    )
    report = run_suite(instances, config)
    human_lines = [f"{len(report.counterexamples)} counterexamples over {report.instance_count} instances"]
    for name, tally in report.tallies.items():
        human_lines.append(
            f"  {name}: {tally.passed} pass, {tally.failed} fail, {tally.skipped} skip"
        )
    _emit(args, report, "\n".join(human_lines))
    return 0 if report.ok else 1


def _cmd_enumerate(args) -> int:
    if not args.group:
        raise ValueError("enumerate needs --group")
    stream = parse_shape(args.shape, parse_group(args.group), args.seed)
    sets = []
    for i, inst in enumerate(stream):
        if args.limit is not None and i >= args.limit:
            break
        sets.append(inst)
    human = "\n".join(_set_line(s) for s in sets) or "(no instances)"
    _emit(args, [gset_to_obj(s) for s in sets], human)
    return 0


_COMMANDS = {
    "sumset": _cmd_sumset,
    "diam": _cmd_diam,
    "spectrum": _cmd_spectrum,
    "cover": _cmd_cover,
    "rectify": _cmd_rectify,
    "torsion-cover": _cmd_torsion_cover,
    "bounds": _cmd_bounds,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, BudgetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
