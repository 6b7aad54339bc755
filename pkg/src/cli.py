"""
CurveSig command line

    python src/cli.py invariants "J 1-<2-> 2+" --p 7 --b 2
    python src/cli.py profile "J 1-<2-> 2+"
    python src/cli.py check "J 1-<12- 15+>" --degree 9
    python src/cli.py family odd_nest --k 4 --check
    python src/cli.py graph "J 1-<2-> 2+" --plus --dot
    python src/cli.py cg --tree tree.json --p 3
    python src/cli.py linking "J"

Exit code 0 on success (whatever the mathematical verdict), 2 on usage
or input errors.
"""
import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from jsonschema import ValidationError, validate
from tabulate import tabulate

from cg import cg_sigma_eta
from curve import curve_data, profile, sig_eta
from errors import CurveSigError
from exact import format_rational, linking_matrix
from graph import build_gamma_hat, plumbing_matrix, to_dot, to_json, tree_from_weights
from prohibit import brute_force_check, family, family_parameters, mt_check
from runlog import RunLog
from scheme import parse_scheme
from schemas import CG_INPUT_SCHEMA, check_document


def _short_label(v):
    if v.ref is None:
        return v.role.value if v.role.value.startswith("u") else f"v{v.id}"
    prefix = {"region": "R", "oval": "o", "arrowhead": "h"}.get(v.role.value, "v")
    return f"{prefix}{v.ref + 1}"


def _emit(args, kind, document, text_lines):
    if args.json:
        print(json.dumps(check_document(kind, document), indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_invariants(args, log):
    scheme = parse_scheme(args.scheme)
    value = sig_eta(scheme, args.p, args.b)
    log.record("invariants", scheme=str(scheme), p=args.p, b=args.b, sig=value.sig, eta=value.eta)
    document = {"scheme": str(scheme), "p": args.p, "b": args.b, "sig": value.sig, "eta": value.eta}
    _emit(args, "invariants", document, [f"sig = {value.sig}, eta = {value.eta}"])


def cmd_profile(args, log):
    scheme = parse_scheme(args.scheme)
    prof = profile(scheme)
    log.record("profile", scheme=str(scheme), breakpoints=len(prof.points), nul=prof.nul)
    _emit(args, "profile", prof.to_dict(), prof.lines())


def _report_lines(report, show_scan):
    lines = [
        f"scheme: {report.scheme}",
        f"degree: {report.m}   bound (m-1)(m-2)/2 = {report.bound}",
        f"Rohlin-Mishachev: {'pass' if report.rm_pass else 'fail'}",
    ]
    w = report.witness
    if w is None:
        lines.append(f"verdict: {report.verdict.value}")
    else:
        lines.append(f"verdict: {report.verdict.value} at p={w.p}, b={w.b}: "
                     f"|{w.sig}| + {w.eta} = {w.lhs} > {w.bound}")
    if show_scan and report.scan:
        rows = [(e.kind, e.where, e.p, e.b, e.sig, e.eta, e.lhs) for e in report.scan]
        lines.append(tabulate(rows, headers=["kind", "where", "p", "b", "sig", "eta", "|sig|+eta"]))
    return lines


def cmd_check(args, log):
    scheme = parse_scheme(args.scheme)
    report = mt_check(scheme, args.degree)
    log.record("check", scheme=str(scheme), m=args.degree, verdict=report.verdict.value,
               rm_pass=report.rm_pass)
    document = report.to_dict()
    lines = _report_lines(report, args.scan)
    if args.brute:
        hit = brute_force_check(scheme, args.degree, args.brute)
        document["brute"] = None if hit is None else {"p": hit.p, "b": hit.b}
        lines.append(f"brute force p <= {args.brute}: "
                     + ("no violation" if hit is None else f"first violation p={hit.p}, b={hit.b}"))
        log.record("brute", max_prime=args.brute, hit=document["brute"])
    _emit(args, "check", document, lines)


def cmd_family(args, log):
    alpha, beta = family_parameters(args.name, args.k)
    scheme = family(args.name, args.k)
    degree = 2 * args.k + 1
    document = {"family": args.name, "k": args.k, "degree": degree, "scheme": str(scheme),
                "alpha": alpha, "beta": beta, "report": None}
    lines = [str(scheme)]
    if args.check:
        report = mt_check(scheme, degree)
        document["report"] = report.to_dict()
        lines += _report_lines(report, False)
    log.record("family", family=args.name, k=args.k, scheme=str(scheme))
    _emit(args, "family", document, lines)


def cmd_graph(args, log):
    scheme = parse_scheme(args.scheme)
    data = curve_data(scheme)
    if args.plus:
        variant, tree = "gamma_plus", data.gamma_plus
    elif args.hat:
        variant, tree = "gamma_hat", build_gamma_hat(scheme)
    else:
        variant, tree = "gamma", data.gamma
    log.record("graph", scheme=str(scheme), variant=variant, vertices=tree.size)

    if args.dot:
        print(to_dot(tree))
        return

    matrix = [[int(x) for x in row] for row in plumbing_matrix(tree)]
    s = list(data.gamma.arrow_vector())
    document = {"scheme": str(scheme), "variant": variant, "tree": to_json(tree),
                "matrix": matrix, "s": s, "delta": data.delta, "c": list(data.c)}
    if args.plus:
        document["c_plus"] = list(data.c_plus)

    values = list(data.c_plus) if args.plus else list(data.c) + [None] * (tree.size - data.gamma.size)
    rows = []
    for v in tree.vertices:
        arrows = " ".join("+" if a.sign > 0 else "-" for a in tree.arrows
                          if a.tail == v.id and a.head is None)
        rows.append((v.id, _short_label(v), v.weight, arrows, values[v.id]))
    lines = [
        f"{variant} of {scheme}: {tree.size} vertices, {len(tree.edges)} edges",
        tabulate(rows, headers=["id", "vertex", "weight", "arrows", "c+" if args.plus else "c"]),
        "",
        "A =",
        tabulate(matrix, tablefmt="plain"),
        "",
        f"s = {s}",
        f"Delta = {data.delta}",
    ]
    _emit(args, "graph", document, lines)


def cmd_cg(args, log):
    try:
        spec = json.loads(Path(args.tree).read_text())
        validate(instance=spec, schema=CG_INPUT_SCHEMA)
    except (OSError, json.JSONDecodeError, ValidationError) as e:
        raise CurveSigError(f"cannot read tree file {args.tree}: {getattr(e, 'message', e)}")
    p = args.p if args.p is not None else spec.get("p")
    if p is None:
        raise CurveSigError("no prime given (use --p or a \"p\" field)")
    if len(spec["charvec"]) != len(spec["weights"]):
        raise CurveSigError("charvec and weights differ in length")
    tree = tree_from_weights(spec["weights"], spec["edges"])
    value = cg_sigma_eta(tree, spec["charvec"], p)
    log.record("cg", p=p, vertices=tree.size, sigma=format_rational(value.sigma), eta=value.eta)
    document = {"p": p, "sigma": format_rational(value.sigma), "eta": value.eta}
    _emit(args, "cg", document,
          [f"sigma = {format_rational(value.sigma)}, eta = {value.eta}"])


def cmd_linking(args, log):
    scheme = parse_scheme(args.scheme)
    gamma = curve_data(scheme).gamma
    L = linking_matrix(gamma)
    labels = [_short_label(v) for v in gamma.vertices]
    cells = [[format_rational(x) for x in row] for row in L]
    log.record("linking", scheme=str(scheme), vertices=gamma.size)
    document = {"scheme": str(scheme), "labels": labels, "matrix": cells}
    _emit(args, "linking", document,
          [tabulate([[lab] + row for lab, row in zip(labels, cells)], headers=[""] + labels,
                    disable_numparse=True)])


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curvesig",
        description="Signature and nullity invariants of complex schemes of real plane curves")
    parser.add_argument("--log", type=str, default=None, help="Write a JSON run log to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="sig_{b/p} and eta_p of a scheme")
    p.add_argument("scheme")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("profile", help="step-function listing of sig over (0, 1/2)")
    p.add_argument("scheme")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("check", help="prohibition verdict for a degree")
    p.add_argument("scheme")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--scan", action="store_true", help="print the full scan table")
    p.add_argument("--brute", type=int, default=None, metavar="P",
                   help="also evaluate every p <= P directly")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("family", help="M-scheme from an infinite family")
    p.add_argument("name", choices=["odd_nest", "double_nest"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--check", action="store_true", help="run the prohibition check at degree 2k+1")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("graph", help="plumbing tree dump with A, s, Delta, c")
    p.add_argument("scheme")
    variant = p.add_mutually_exclusive_group()
    variant.add_argument("--plus", action="store_true", help="Gamma+ (arrows as arrowhead vertices)")
    variant.add_argument("--hat", action="store_true", help="Gamma-hat (extra region arrows)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("cg", help="Casson-Gordon sigma, eta for a generic tree")
    p.add_argument("--tree", required=True, help="JSON file {weights, edges, charvec[, p]}")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cg)

    p = sub.add_parser("linking", help="fiber linking matrix -A^-1 of Gamma")
    p.add_argument("scheme")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_linking)
    return parser


def run(argv=None):
    """Parse argv, run one subcommand, return the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0

    log = RunLog(f"cli_{args.command}", args.log)
    code = 0
    try:
        args.func(args, log)
    except CurveSigError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        log.record("error", ok=False, message=str(e))
        code = 2
    if args.log:
        log.save_log()
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
