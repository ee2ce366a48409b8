"""Command-line entry point: ``quivercone <subcommand> ...``.

Exit status: 0 success or inside, 1 negative answer, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from . import cone, numeric
from .config import DEFAULT, Tolerances
from .io import InputError, parse_spectrum, read_quiver
from .quiver import DomainError
from .schofield import general_subrep_set


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _Usage(f"{self.prog}: error: {message}")


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quivercone", description="Momentum map images of quiver representations.")
    p.add_argument("--tolerance-config", metavar="FILE", help="JSON overrides for numeric tolerances")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("hat-s", help="list the set tuples indexing the cone inequalities")
    s.add_argument("quiver")
    s.add_argument("--route", choices=("direct", "leg", "both"), default="direct")

    s = sub.add_parser("ineq", help="print the inequality description of the image")
    s.add_argument("quiver")
    s.add_argument("--format", choices=("tuples", "matrix"), default="tuples")

    s = sub.add_parser("member", help="test a spectrum for membership in the image")
    s.add_argument("quiver")
    s.add_argument("--spectrum", required=True, metavar="FILE")
    s.add_argument("--tolerance", default="1e-9")

    s = sub.add_parser("schofield", help="list the general subrepresentation vectors of d")
    s.add_argument("quiver")

    for name in ("maximal", "volume"):
        s = sub.add_parser(name, help=f"compare the direct and criterion answers ({name})")
        s.add_argument("quiver")

    s = sub.add_parser("sample-check", help="sample representations and check their spectra")
    s.add_argument("quiver")
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--field", choices=numeric.FIELDS, default="complex")

    s = sub.add_parser("chain-check", help="explicit chain solution for a sorted spectrum")
    s.add_argument("--spectrum", required=True, metavar='"a1 a2 ..."')
    return p


def _hat_s(args, tol) -> int:
    q, d = read_quiver(args.quiver)
    direct = cone.hat_s_direct(q, d) if args.route in ("direct", "both") else None
    leg = cone.hat_s_via_leg(q, d) if args.route in ("leg", "both") else None
    result = direct if direct is not None else leg
    for k in cone.sorted_tuples(result):
        print(k.render(q.vertices))
    if args.route == "both" and direct != leg:
        print("routes disagree", file=sys.stderr)
        return 1
    return 0


def _ineq(args, tol) -> int:
    q, d = read_quiver(args.quiver)
    print(cone.emit_inequalities(q, d).render(args.format))
    return 0


def _member(args, tol) -> int:
    q, d = read_quiver(args.quiver)
    with open(args.spectrum) as fh:
        s = parse_spectrum(fh.read(), q, args.spectrum)
    try:
        tolerance = Fraction(args.tolerance)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad tolerance {args.tolerance!r}")
    res = cone.membership(q, d, s, tolerance)
    print(f"inside={'yes' if res.inside else 'no'}")
    print(f"trace={res.trace}")
    if res.inside:
        for k in res.tight:
            print(f"tight={k.render(q.vertices)}")
        return 0
    if res.violated is None:
        print("certificate=trace")
    else:
        print(f"certificate={res.violated.render(q.vertices)}")
        print(f"value={s.exact().a(res.violated)}")
    return 1


def _schofield(args, tol) -> int:
    q, d = read_quiver(args.quiver)
    for e in sorted(general_subrep_set(q, d)):
        print(" ".join(map(str, e)))
    return 0


def _maximal(args, tol) -> int:
    q, d = read_quiver(args.quiver)
    direct = cone.is_maximal_image(q, d)
    crit = cone.maximal_image_criterion(q, d)
    print(f"direct={str(direct).lower()}")
    print(f"criterion={str(crit).lower()}")
    print(f"agree={str(direct == crit).lower()}")
    return 0 if direct == crit else 1


def _volume(args, tol) -> int:
    q, d = read_quiver(args.quiver)
    direct = cone.has_positive_volume(q, d)
    crit = cone.sufficient_volume_criterion(q, d)
    pair = cone.complementary_pair(q, d)
    print(f"direct={str(direct).lower()}")
    print(f"criterion={str(crit).lower()}")
    if pair is not None:
        print(f"pair={pair.render(q.vertices)}")
    # the criterion is only sufficient
    consistent = direct or not crit
    print(f"agree={str(consistent).lower()}")
    return 0 if consistent else 1


def _sample_check(args, tol) -> int:
    q, d = read_quiver(args.quiver)
    if args.samples < 0:
        raise InputError("--samples must be nonnegative")
    report = numeric.necessity_oracle(q, d, args.samples, args.field, args.seed, tol)
    tuples = cone.emit_inequalities(q, d).tuples
    print("\n".join(report.lines(q, tuples)))
    return 0 if report.passed else 1


def _chain_check(args, tol) -> int:
    try:
        a = [float(Fraction(w)) for w in args.spectrum.split()]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad spectrum {args.spectrum!r}")
    if not a:
        raise InputError("empty spectrum")
    sol = numeric.chain_construct(a)
    res = numeric.verify_chain(sol, np.diag(a))
    print("theta=" + " ".join(f"{t:.12g}" for t in sol.thetas))
    for i, m in enumerate(sol.matrices, start=1):
        print(f"A{i}=" + np.array2string(m, precision=12, separator=",").replace("\n", ""))
    print("residuals=" + " ".join(f"{r:.3e}" for r in res))
    ok = max(res) <= tol.chain_residual
    print(f"result={'pass' if ok else 'fail'}")
    return 0 if ok else 1


COMMANDS = {
    "hat-s": _hat_s,
    "ineq": _ineq,
    "member": _member,
    "schofield": _schofield,
    "maximal": _maximal,
    "volume": _volume,
    "sample-check": _sample_check,
    "chain-check": _chain_check,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _Usage as exc:
        print(exc, file=sys.stderr)
        return 2
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    try:
        tol = Tolerances.from_file(args.tolerance_config) if args.tolerance_config else DEFAULT
        return COMMANDS[args.command](args, tol)
    except (InputError, DomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
