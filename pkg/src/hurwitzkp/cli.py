"""Command line front end.

Every command writes one JSON document ``{"query", "result", "crosschecks"}``
(keys sorted, rationals as "p/q") or, for tables, CSV with a header row.
Exit codes: 0 success, 1 a verification or cross-check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import acceptance, boson, curves, group_oracle as go, hurwitz as hw
from .blocks import BlockSpec
from .characters import character
from .errors import DomainError, PoleError, ResourceError
from .partitions import Partition, automorphism_count, class_size, dimension, partitions_of
from .series import fmt_rational


class UsageError(Exception):
    pass


# -- argument types (all validation happens while parsing) ------------------------------------


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}") from exc


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _rationals(text: str) -> list[Fraction]:
    return [_rational(x) for x in text.split(",") if x.strip()]


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from exc


def _block(text: str) -> BlockSpec:
    try:
        return BlockSpec.parse(text)
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


# -- parser ------------------------------------------------------------------------------------


def _add_output(p: argparse.ArgumentParser, csv_ok: bool = False):
    p.add_argument("--output", "-o", metavar="PATH", help="write to PATH instead of stdout")
    choices = ["json", "csv"] if csv_ok else ["json"]
    p.add_argument("--format", choices=choices, default="json", help="output format (default json)")


def _add_problem(p: argparse.ArgumentParser, required: bool = True):
    p.add_argument("--mu", type=_partition, required=required, help="first branch profile, e.g. 2,1")
    p.add_argument("--nu", type=_partition, required=required, help="second branch profile, e.g. 1,1,1")
    p.add_argument(
        "--block",
        type=_block,
        action="append",
        default=[],
        metavar="FLAVOR:PARAM",
        help="a block such as monotone:2, strict:1, atlantes:3, free-single:2, free-group:2, "
        "class-sum:3,2, completed:2, hyper-w:1/3, hyper-z:1/2 (repeatable)",
    )
    p.add_argument("--flavor", help="shorthand for a single block; combine with --b or --param")
    p.add_argument("--b", type=_nonneg, help="block parameter for --flavor")
    p.add_argument("--param", help="non-integer block parameter for --flavor (partition or rational)")
    p.add_argument("--mode", choices=["full", "pointwise-fibers"], default="full", help="automorphism convention")
    p.add_argument("--force", action="store_true", help="allow the oracle beyond n = 7")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hurwitzkp", description="Exact Hurwitz numbers, quantum curves and constraint checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hurwitz", help="Hurwitz number via characters, or a table of connected numbers")
    _add_problem(p, required=False)
    p.add_argument("--table", metavar="FAMILY", choices=sorted(hw.SINGLE_BLOCK_FAMILIES + hw.EXP_FAMILIES), help="connected-number table for a family")
    p.add_argument("--max-n", type=_positive, default=4, help="table: largest |mu|")
    p.add_argument("--max-count", type=_nonneg, default=4, help="table: largest number of ramification points (or blocks)")
    p.add_argument("--orbifold", type=_positive, default=1, help="table: nu = (r,...,r)")
    p.add_argument("--power", type=_positive, default=1, help="table: atlantes power")
    _add_output(p, csv_ok=True)

    p = sub.add_parser("oracle", help="brute-force count in the class algebra of S_n")
    _add_problem(p)
    p.add_argument("--literal", action="store_true", help="also enumerate explicit permutation tuples (n <= 5)")
    _add_output(p)

    p = sub.add_parser("jucys", help="symmetric polynomial of Jucys-Murphy elements as class sums")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--basis", choices=["sigma", "h", "p"], required=True)
    p.add_argument("--b", type=_nonneg, required=True)
    p.add_argument("--force", action="store_true", help="allow n > 7")
    _add_output(p, csv_ok=True)

    p = sub.add_parser("qcurve", help="verify that a quantum curve annihilates its wave function")
    p.add_argument("--flavor", choices=curves.FLAVORS, required=True)
    p.add_argument("--r", type=_positive, help="orbifold / strict / atlantes parameter")
    p.add_argument("--t", type=_rationals, help="t~ values, comma separated, e.g. 1,1/2")
    p.add_argument("--c", type=_rational, help="deformation parameter")
    p.add_argument("--M", type=_positive, help="hbar truncation for atlantes (default 22)")
    p.add_argument("--order", type=_positive, default=10, help="verify up to x^order (or x^-order)")
    p.add_argument("--form", choices=["default", "general", "polynomial", "double"], default="default")
    _add_output(p)

    p = sub.add_parser("constraints", help="R_n constraints or the cut-and-join equation on tau")
    p.add_argument("--kind", choices=["R", "cut-and-join"], default="R")
    p.add_argument("--beta", type=_rational, default=Fraction(1, 7))
    p.add_argument("--t-tilde", type=_rationals, default=[Fraction(1, 2), Fraction(-1, 3), Fraction(2)])
    p.add_argument("--n", type=_ints, default=[1, 2], help="which R_n, comma separated")
    p.add_argument("--N", type=_positive, default=6, help="degree truncation")
    p.add_argument("--hbar", type=_rational, default=Fraction(1, 7), help="cut-and-join hbar")
    _add_output(p)

    p = sub.add_parser("elsv-k", help="coefficients K_l of log sum (2k+1)!! U^k")
    p.add_argument("--L", type=_positive, default=6)
    _add_output(p, csv_ok=True)

    p = sub.add_parser("quasipoly", help="polynomiality test of normalized monotone numbers")
    p.add_argument("--g", type=_nonneg, required=True)
    p.add_argument("--ell", type=_positive, required=True)
    p.add_argument("--degree", type=int, help="degree bound (default 3g-3+l)")
    p.add_argument("--max-n", type=_positive, default=8)
    _add_output(p, csv_ok=True)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--criteria", type=_ints, help="subset, e.g. 1,2,6")
    _add_output(p)
    return parser


# -- helpers -----------------------------------------------------------------------------------


def _blocks(args) -> list[BlockSpec]:
    blocks = list(args.block)
    if args.flavor:
        arg = args.param if args.param is not None else args.b
        if arg is None:
            raise UsageError("--flavor needs --b or --param")
        try:
            blocks.insert(0, BlockSpec.parse(f"{args.flavor}:{arg}"))
        except (ValueError, DomainError) as exc:
            raise UsageError(str(exc)) from exc
    elif args.b is not None or args.param is not None:
        raise UsageError("--b/--param need --flavor")
    return blocks


def _oracle_supported(blocks, n, force) -> bool:
    return (n <= go.DEFAULT_LIMIT or force) and all(b.flavor != "hyper_z" for b in blocks)


def _aut_scale(mu, nu, mode) -> Fraction:
    """Factor turning a full-automorphism count into the requested convention."""
    return Fraction(1) if mode == "full" else Fraction(automorphism_count(mu) * automorphism_count(nu))


def _check(method: str, a, b) -> dict:
    return {"method": method, "agrees": a == b}


def _emit(doc, args, csv_text: str | None = None):
    if args.format == "csv":
        text = csv_text
    else:
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _status(crosschecks, ok=True) -> int:
    return 0 if ok and all(c["agrees"] for c in crosschecks) else 1


# -- commands ----------------------------------------------------------------------------------


def cmd_hurwitz(args) -> int:
    if args.table:
        table = hw.connected_numbers(args.table, args.max_n, args.max_count, args.orbifold, args.power)
        query = {"command": "hurwitz", "table": args.table, "max_n": args.max_n, "max_count": args.max_count, "orbifold": args.orbifold, "power": args.power}
        _emit({"query": query, "result": table.rows(), "crosschecks": []}, args, table.to_csv())
        return 0
    if args.mu is None or args.nu is None:
        raise UsageError("--mu and --nu are required (or use --table)")
    if args.format == "csv":
        raise UsageError("csv output is only available with --table")
    blocks = _blocks(args)
    problem = hw.HurwitzProblem(args.mu, args.nu, tuple(blocks), args.mode)
    value = hw.hurwitz_number(problem)
    checks = []
    if _oracle_supported(blocks, problem.n, args.force):
        brute = go.brute_hurwitz(args.mu, args.nu, blocks, force=args.force) * _aut_scale(args.mu, args.nu, args.mode)
        checks.append(_check("oracle", value, brute))
    genus = problem.genus()
    query = dict(problem.to_json(), command="hurwitz", genus=None if genus is None else fmt_rational(genus))
    _emit({"query": query, "result": fmt_rational(value), "crosschecks": checks}, args)
    return _status(checks)


def cmd_oracle(args) -> int:
    blocks = _blocks(args)
    problem = hw.HurwitzProblem(args.mu, args.nu, tuple(blocks), args.mode)
    scale = _aut_scale(args.mu, args.nu, args.mode)
    value = go.brute_hurwitz(args.mu, args.nu, blocks, force=args.force) * scale
    checks = [_check("characters", value, hw.hurwitz_number(problem))]
    if args.literal:
        checks.append(_check("literal enumeration", value, go.literal_hurwitz(args.mu, args.nu, blocks) * scale))
    query = dict(problem.to_json(), command="oracle")
    _emit({"query": query, "result": fmt_rational(value), "crosschecks": checks}, args)
    return _status(checks)


def _central_eigenvalues_agree(elem: go.ClassAlgebraElement, basis: str, b: int) -> bool:
    """The element acts on each irreducible by the matching symmetric function of the contents."""
    sym = {"sigma": hw.elementary, "h": hw.complete, "p": hw.power_sum}[basis]
    n = elem.n
    for lam in partitions_of(n):
        act = sum((c * class_size(a) * character(lam, a) for a, c in elem.coeffs.items()), Fraction(0)) / dimension(lam)
        contents = hw.jucys_contents(lam)
        expected = (n - 1) if (basis == "p" and b == 0) else sym(contents, b)
        if act != expected:
            return False
    return True


def cmd_jucys(args) -> int:
    elem = go.jucys_symmetric(args.n, args.basis, args.b, force=args.force)
    checks = [{"method": "central character", "agrees": _central_eigenvalues_agree(elem, args.basis, args.b)}]
    if args.basis == "sigma":
        checks.append(_check("sum of classes with n - b cycles", elem, go.free_single_element(args.n, args.b)))
    query = {"command": "jucys", "n": args.n, "basis": args.basis, "b": args.b}
    rows = [(k, v) for k, v in elem.to_json().items()]
    _emit({"query": query, "result": elem.to_json(), "crosschecks": checks}, args, _csv(["class", "coefficient"], rows))
    return _status(checks)


def _curve_params(args) -> dict:
    f = args.flavor
    params: dict = {}
    if f in ("monotone_orbifold", "strict", "atlantes"):
        if args.r is None:
            raise UsageError(f"{f} needs --r")
        params["r"] = args.r
        if f == "atlantes":
            params["M"] = args.M or 22
    elif f in ("monotone", "double"):
        if not args.t:
            raise UsageError(f"{f} needs --t")
        params["t"] = args.t
    elif f == "deformation":
        if args.c is None:
            raise UsageError("deformation needs --c")
        params["c"] = args.c
    return params


ALTERNATE_FORMS = {
    "monotone": ("polynomial",),
    "monotone_orbifold": ("general", "polynomial"),
    "simple": ("double",),
}


def cmd_qcurve(args) -> int:
    params = _curve_params(args)
    try:
        curves.curve_operator(args.flavor, params, curves.default_ring(args.flavor, params), args.form)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    rep = curves.verify_curve(args.flavor, params, args.order, args.form)
    checks = []
    for form in ALTERNATE_FORMS.get(args.flavor, ()):
        if form != args.form:
            other = curves.verify_curve(args.flavor, params, args.order, form)
            checks.append({"method": f"{form} form", "agrees": other["status"] == rep["status"]})
    query = {"command": "qcurve", "flavor": args.flavor, "params": curves._param_json(params), "order": args.order, "form": args.form}
    _emit({"query": query, "result": rep, "crosschecks": checks}, args)
    return _status(checks, rep["status"] == "verified")


def cmd_constraints(args) -> int:
    if args.kind == "cut-and-join":
        rep = boson.verify_cut_and_join(args.N, args.hbar)
        query = {"command": "constraints", "kind": "cut-and-join", "N": args.N, "hbar": fmt_rational(args.hbar)}
        _emit({"query": query, "result": rep, "crosschecks": []}, args)
        return 0 if rep["status"] == "verified" else 1
    bad = [n for n in args.n if n < 1 or n > boson.MAX_Y_DEGREE]
    if bad:
        raise UsageError(f"R_n is available for 1 <= n <= {boson.MAX_Y_DEGREE}")
    tau = boson.build_tau_mm(args.N, args.beta, args.t_tilde)
    reports, checks = [], []
    for n in args.n:
        rep = boson.verify_constraints(tau, n)
        reports.append(dict(rep, n=n))
        if n <= 2:
            alt = boson.verify_constraints(tau, n, explicit=True)
            checks.append({"method": f"explicit R_{n}", "agrees": alt["status"] == rep["status"]})
    query = {
        "command": "constraints",
        "kind": "R",
        "N": args.N,
        "beta": fmt_rational(args.beta),
        "t_tilde": [fmt_rational(x) for x in args.t_tilde],
        "n": args.n,
    }
    _emit({"query": query, "result": reports, "crosschecks": checks}, args)
    return _status(checks, all(r["status"] == "verified" for r in reports))


def cmd_elsv_k(args) -> int:
    K = hw.elsv_k_coefficients(args.L)
    checks = [{"method": "re-exponentiation to (2k+1)!!", "agrees": acceptance.k_reexponentiation_check(args.L)}]
    result = [fmt_rational(k) for k in K]
    rows = [(l, v) for l, v in enumerate(result, start=1)]
    _emit({"query": {"command": "elsv-k", "L": args.L}, "result": result, "crosschecks": checks}, args, _csv(["l", "K"], rows))
    return _status(checks)


def cmd_quasipoly(args) -> int:
    rep = hw.quasipolynomiality_check(args.g, args.ell, args.degree, args.max_n)
    query = {"command": "quasipoly", "g": args.g, "ell": args.ell, "degree": rep.degree_bound, "max_n": args.max_n}
    rows = [(",".join(map(str, k)), fmt_rational(v)) for k, v in sorted(rep.samples.items())]
    _emit({"query": query, "result": rep.to_json(), "crosschecks": []}, args, _csv(["mu", "value"], rows))
    return 0 if rep.passed else 1


def cmd_selftest(args) -> int:
    numbers = args.criteria or sorted(acceptance.CRITERIA)
    unknown = [k for k in numbers if k not in acceptance.CRITERIA]
    if unknown:
        raise UsageError(f"unknown criteria {unknown}")
    results = []
    for k in numbers:
        res = acceptance.CRITERIA[k]()
        print(res.line(), file=sys.stderr, flush=True)
        results.append(res)
    passed = sum(r.passed for r in results)
    doc = {
        "query": {"command": "selftest", "criteria": numbers},
        "result": {"passed": passed, "total": len(results), "criteria": [r.to_json() for r in results]},
        "crosschecks": [],
    }
    _emit(doc, args)
    return 0 if passed == len(results) else 1


COMMANDS = {
    "hurwitz": cmd_hurwitz,
    "oracle": cmd_oracle,
    "jucys": cmd_jucys,
    "qcurve": cmd_qcurve,
    "constraints": cmd_constraints,
    "elsv-k": cmd_elsv_k,
    "quasipoly": cmd_quasipoly,
    "selftest": cmd_selftest,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"hurwitzkp: error: {exc}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"hurwitzkp: resource limit: {exc}", file=sys.stderr)
        return 2
    except (DomainError, PoleError) as exc:
        print(f"hurwitzkp: error: {exc}", file=sys.stderr)
        return 2


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
