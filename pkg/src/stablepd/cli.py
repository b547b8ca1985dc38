"""Command line front end: ``stablepd <command> --ring x1..x4 '<ideal expression>'``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import decomposition as dec
from .corpus import run_fixture_corpus
from .decomposition import MonomialPrime
from .errors import StablePDError
from .homology import betti_table
from .ideal import MonomialIdeal
from .localization import localize
from .parser import parse_document, to_ideal, parse as parse_expr
from .polymatroidal import (
    TransversalSpec,
    VeroneseParams,
    component_graph,
    transversal_ideal,
    transversal_pd,
    transversal_stability,
    veronese,
    veronese_pd,
)
from .ring import Ring
from .stability import classify, is_stable_pd

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _ring(args) -> Ring:
    if not args.ring:
        raise StablePDError("declare the ring with --ring (e.g. --ring x1..x4) or a 'ring ...;' file header")
    try:
        return Ring.parse(args.ring)
    except ValueError as exc:
        raise StablePDError(f"bad --ring: {exc}") from None


def _ideal(args) -> MonomialIdeal:
    if args.file:
        with open(args.file) as fh:
            ring, text = parse_document(fh.read())
    else:
        if args.expr is None:
            raise StablePDError("missing ideal expression")
        ring, text = _ring(args), args.expr
    return to_ideal(parse_expr(text, ring), ring)


def _scalar(name: str, fn: Callable[[MonomialIdeal], int]):
    def run(args, I: MonomialIdeal) -> int:
        value = fn(I)
        _emit(args, str(value), {"ideal": str(I), name: value})
        return EXIT_OK
    return run


def cmd_betti(args, I):
    bt = betti_table(I)
    payload = {
        "ideal": str(I),
        "pd": bt.pd_quotient,
        "depth": bt.depth_quotient,
        "dim": bt.dim_quotient,
        "totals": bt.totals(),
        "graded": [{"i": i, "j": j, "rank": b} for (i, j), b in sorted(bt.graded().items())],
        "multigraded": [{"i": i + 1, "multidegree": str(m), "rank": b} for (i, m), b in bt.entries.items()],
    }
    _emit(args, bt.format(), payload)
    return EXIT_OK


def cmd_decompose(args, I):
    comps = dec.irreducible_decomposition(I)
    _emit(args, "\n".join(map(str, comps)), {"ideal": str(I), "components": [str(q) for q in comps]})
    return EXIT_OK


def cmd_ass(args, I):
    primes = dec.associated_primes(I)
    _emit(args, "\n".join(map(str, primes)), {"ideal": str(I), "ass": [str(p) for p in primes]})
    return EXIT_OK


def cmd_min(args, I):
    primes = dec.minimal_primes(I)
    _emit(args, "\n".join(map(str, primes)), {"ideal": str(I), "min": [str(p) for p in primes]})
    return EXIT_OK


def cmd_localize(args, I):
    if not args.at:
        raise StablePDError("localize needs --at x1,x2,...")
    p = MonomialPrime.from_names(I.ring, [v for v in args.at.split(",") if v.strip()])
    loc = localize(I, p)
    text = f"ring: {loc.ring}\nideal: {loc.ideal}"
    _emit(args, text, {"prime": str(p), "ring": list(loc.ring.names), "ideal": str(loc.ideal)})
    return EXIT_OK


def _report_text(report) -> str:
    lines = [
        f"pd: {report.pd}",
        f"depth: {report.depth}",
        f"dim: {report.dim}",
        f"stable: {str(report.stable).lower()}",
    ]
    if report.witness is not None:
        lines.append(f"witness: {report.witness}")
    lines.append(f"cm: {str(report.cm).lower()}")
    if report.gcm is not None:
        lines.append(f"gcm: {str(report.gcm).lower()}")
    lines.append(f"unmixed: {str(report.unmixed).lower()}")
    lines.append(f"ass_eq_min: {str(report.ass_eq_min).lower()}")
    lines.append("examined:")
    lines.extend(f"  {p} pd={d}" for p, d in report.examined)
    return "\n".join(lines)


def cmd_stable(args, I):
    report = is_stable_pd(I, exhaustive=args.exhaustive)
    _emit(args, _report_text(report), report.to_dict())
    return EXIT_OK


def cmd_classify(args, I):
    report = classify(I)
    _emit(args, _report_text(report), report.to_dict())
    return EXIT_OK


IDEAL_COMMANDS = {
    "pd": _scalar("pd", lambda I: betti_table(I).pd_quotient),
    "depth": _scalar("depth", lambda I: betti_table(I).depth_quotient),
    "dim": _scalar("dim", lambda I: betti_table(I).dim_quotient),
    "betti": cmd_betti,
    "decompose": cmd_decompose,
    "ass": cmd_ass,
    "min": cmd_min,
    "localize": cmd_localize,
    "stable": cmd_stable,
    "classify": cmd_classify,
}


def cmd_veronese(args):
    bounds = tuple(int(a) for a in args.bounds.split(","))
    params = VeroneseParams(args.d, bounds)
    ring = _ring(args) if args.ring else Ring.standard(params.n)
    I = veronese(params, ring)
    if args.then:
        return IDEAL_COMMANDS[args.then](args, I)
    pd = veronese_pd(params)
    _emit(args, f"ideal: {I}\npd_formula: {pd}", {"ideal": str(I), "pd_formula": pd})
    return EXIT_OK


def cmd_transversal(args):
    spec = TransversalSpec.parse(args.primes, _ring(args))
    I = transversal_ideal(spec)
    if args.then:
        return IDEAL_COMMANDS[args.then](args, I)
    graph = component_graph(spec)
    verdict, reason = transversal_stability(spec)
    pd_ideal = transversal_pd(spec)
    comps = [[i + 1 for i in c] for c in graph.components]
    text = "\n".join([
        f"ideal: {I}",
        f"components: {comps}",
        f"pd_ideal_formula: {pd_ideal}",
        f"pd_quotient_formula: {pd_ideal + 1}",
        f"stable_formula: {str(verdict).lower()} ({reason or 'none'})",
    ])
    _emit(args, text, {
        "ideal": str(I),
        "components": comps,
        "pd_ideal_formula": pd_ideal,
        "pd_quotient_formula": pd_ideal + 1,
        "stable_formula": verdict,
        "reason": reason,
    })
    return EXIT_OK


def cmd_corpus(args):
    report = run_fixture_corpus(args.path)
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True, default=str))
    else:
        for c in report.checks:
            print(c.line())
        print(f"{len(report.checks) - len(report.failures)}/{len(report.checks)} checks passed")
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help="variables, e.g. 'x,y,z' or 'x1..x4'")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--exhaustive", action="store_true",
                        help="examine every prime instead of stopping at the first witness")

    parser = argparse.ArgumentParser(prog="stablepd", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in IDEAL_COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("expr", nargs="?", help="ideal expression")
        p.add_argument("-f", "--file", help="read 'ring ...; <expr>' from a file")
        if name == "localize":
            p.add_argument("--at", help="variables of the prime, e.g. x1,x2,x3")

    then = sorted(set(IDEAL_COMMANDS) - {"localize"})
    v = sub.add_parser("veronese", parents=[common])
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--bounds", required=True, help="comma-separated a_1..a_n")
    v.add_argument("--then", choices=then, help="run another command on the ideal")

    t = sub.add_parser("transversal", parents=[common])
    t.add_argument("--primes", required=True, help="e.g. 'x1,x2,x3|x1,x4'")
    t.add_argument("--then", choices=then, help="run another command on the ideal")

    c = sub.add_parser("corpus", parents=[common])
    c.add_argument("path", nargs="?", help="fixture .jsonl file or directory (default: bundled)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "veronese":
            return cmd_veronese(args)
        if args.command == "transversal":
            return cmd_transversal(args)
        if args.command == "corpus":
            return cmd_corpus(args)
        return IDEAL_COMMANDS[args.command](args, _ideal(args))
    except (StablePDError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
