"""Command-line entry point.

Subcommands: quiver show, poset, hilb {staircases, fixed-points, chi,
intersect}, corner {check, stable, chow}, rep {residual, cyclic},
verify, verify-all.  Data goes to stdout, diagnostics to stderr.
Exit codes: 0 on success, 1 on a domain error, 2 when a verification
or relation check fails.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import corner as corner_mod
from . import staircase as stair_mod
from . import verifier as verifier_mod
from .linalg import matrix_to_strings, random_invertible, scalar_to_str
from .mckay import DynkinType, build_framed_quiver, vertex_to_name
from .reps import QuiverRepresentation, is_cyclic_at_infinity, moment_residual
from .stability import face_poset

DEFAULT_SEED = 20230921


def _dump(payload):
    print(json.dumps(payload, sort_keys=True, indent=2))


def _read_json(path):
    if path in (None, "-"):
        return json.load(sys.stdin)
    with open(path) as handle:
        return json.load(handle)


class DomainError(Exception):
    """Domain error surfaced to the user; exits with code 1."""


def _parse_type(text):
    try:
        return DynkinType.parse(text)
    except ValueError as err:
        raise DomainError(str(err))


def _parse_subset(text, t):
    if text is None or text.strip() == "":
        raise DomainError("--J must list at least one vertex")
    try:
        J = sorted({int(x) for x in text.split(",")})
    except ValueError:
        raise DomainError("--J must be a comma-separated list of integers")
    for j in J:
        if j < 0 or j > t.rank:
            raise DomainError("vertex %d outside 0..%d" % (j, t.rank))
    return frozenset(J)


def cmd_quiver(args):
    t = _parse_type(args.type)
    if args.action == "show":
        _dump(build_framed_quiver(t).to_json())
    return 0


def cmd_poset(args):
    t = _parse_type(args.type)
    poset = face_poset(t)
    if args.format == "dot":
        sys.stdout.write(poset.to_dot())
    else:
        _dump({
            "nodes": [sorted(J) for J in poset.elements],
            "edges": [[sorted(a), sorted(b)] for a, b in poset.hasse_edges],
        })
    return 0


def cmd_hilb(args):
    if args.action == "staircases":
        _dump([s.to_json() for s in stair_mod.enumerate_staircases(args.n)])
    elif args.action == "fixed-points":
        _dump([s.to_json() for s in stair_mod.enumerate_regular_fixed_points(args.r, args.n)])
    elif args.action == "chi":
        sys.stdout.write(stair_mod.euler_series_csv(args.r, args.nmax))
    elif args.action == "intersect":
        staircase = stair_mod.Staircase.from_json(_read_json(args.input))
        _dump(stair_mod.intersect_with_invariants(staircase, args.r).to_json())
    return 0


def cmd_corner(args):
    module = corner_mod.CornerModuleQ0.from_json(_read_json(args.input))
    if args.action == "check":
        t = _parse_type(args.type)
        report = corner_mod.check_relations(module, t)
        _dump({
            "holds": report.holds,
            "commutators": {"[A%d,A%d]" % (i, j): matrix_to_strings(m)
                            for i, j, m in report.commutators},
            "f_residual": matrix_to_strings(report.f_residual),
        })
        return 0 if report.holds else 2
    if args.action == "stable":
        t = _parse_type(args.type) if args.type else None
        stable = corner_mod.is_corner_stable(module, t)
        payload = {"stable": stable}
        if args.check_invariance:
            rng = random.Random(args.seed)
            agree = True
            for _ in range(args.check_invariance):
                p = random_invertible(module.n, rng)
                agree = agree and corner_mod.is_corner_stable(corner_mod.conjugate(module, p)) == stable
            payload["basis_change_invariant"] = agree
        _dump(payload)
        return 0
    # chow
    try:
        points = corner_mod.hilbert_chow(module)
    except corner_mod.NonSplitSpectrumError as err:
        _dump({"points": None,
               "char_polys": [[scalar_to_str(c) for c in p] for p in err.char_polys]})
        return 0
    _dump({"points": [[scalar_to_str(z) for z in pt] for pt in points]})
    return 0


def cmd_rep(args):
    rep = QuiverRepresentation.from_json(_read_json(args.input))
    if args.action == "residual":
        residuals = moment_residual(rep)
        _dump({vertex_to_name(v): matrix_to_strings(m) for v, m in residuals.items()})
    else:
        _dump({"cyclic": is_cyclic_at_infinity(rep)})
    return 0


def cmd_verify(args):
    t = _parse_type(args.type)
    J = _parse_subset(args.J, t)
    report = verifier_mod.verify_bound(t, args.n, J)
    _dump(report.to_json())
    return 0 if report.verified else 2


def cmd_verify_all(args):
    t = _parse_type(args.type)
    reports = verifier_mod.verify_all(t, args.n, workers=args.workers)
    payload = [rep.to_json() for rep in reports]
    if args.out:
        with open(args.out, "w") as handle:
            json.dump(payload, handle, sort_keys=True, indent=2)
            handle.write("\n")
    print(verifier_mod.summarize(reports))
    return 0 if all(rep.verified for rep in reports) else 2


def build_parser():
    parser = argparse.ArgumentParser(prog="kleinhilb")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for randomised checks (default %d)" % DEFAULT_SEED)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quiver", help="framed McKay quiver inspection")
    p.add_argument("action", choices=["show"])
    p.add_argument("--type", required=True, help="Dynkin type, e.g. A3, D4, E8")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("poset", help="face poset of the closed positive chamber")
    p.add_argument("--type", required=True)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("hilb", help="staircase and fixed-point combinatorics")
    p.add_argument("action", choices=["staircases", "fixed-points", "chi", "intersect"])
    p.add_argument("--r", type=int, default=1, help="cyclic type parameter")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--in", dest="input", default=None, help="input JSON path ('-' for stdin)")
    p.set_defaults(func=cmd_hilb)

    p = sub.add_parser("corner", help="corner module checks")
    p.add_argument("action", choices=["check", "stable", "chow"])
    p.add_argument("--type", default=None, help="Dynkin type for the surface relation")
    p.add_argument("--in", dest="input", default=None)
    p.add_argument("--check-invariance", type=int, default=0, metavar="K",
                   help="also test stability under K random basis changes")
    p.set_defaults(func=cmd_corner)

    p = sub.add_parser("rep", help="quiver representation checks")
    p.add_argument("action", choices=["residual", "cyclic"])
    p.add_argument("--in", dest="input", default=None)
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("verify", help="dimension bound for one subset J")
    p.add_argument("--type", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--J", required=True, help="comma-separated vertices, e.g. 0,2")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-all", help="dimension bound for every nonempty J")
    p.add_argument("--type", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None, help="write the full JSON report here")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "corner" and args.action == "check" and not args.type:
        print("corner check needs --type", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except DomainError as err:
        print(str(err), file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
