"""Command-line interface: build algebras, run structural checks, and
verify the deformation theorems.  All output is a single JSON document on
stdout (or --out).

Exit codes: 0 success, 2 validation error, 3 budget exceeded.
"""

import argparse
import json
import os
import sys

from gmpy2 import mpq

from . import cocycles
from .boson import bosonize
from .deform import (DeformedAlgebra, DihedralLiftingData, chi_triviality_scan,
                     verify_theorem_AI, verify_theorem_BIL, verify_theorem_Sn)
from .groups import dihedral, symmetric
from .nichols import BudgetExceeded, TruncatedNichols, matsumoto_agreement
from .racks import cocycle_chi, cocycle_minus_one, conjugation_rack
from .yd import module_M_I, rack_module, valid_I, valid_IL


class ValidationError(Exception):
    pass


def _parse_rational(s):
    return mpq(s)


def _parse_pairs(s):
    """'1,6;2,9' -> [(1, 6), (2, 9)]"""
    out = []
    for part in s.split(";"):
        part = part.strip()
        if not part:
            continue
        bits = part.split(",")
        if len(bits) != 2:
            raise ValidationError("expected i,k pairs separated by ';': %r" % s)
        out.append((int(bits[0]), int(bits[1])))
    return out


def _parse_ints(s):
    return [int(x) for x in s.split(",") if x.strip()]


RACK_CHOICES = {
    "o2:-1": ("transposition", cocycle_minus_one),
    "o2:chi": ("transposition", cocycle_chi),
    "o4:-1": ("fourcycle", cocycle_minus_one),
}


def _build_rack_module(group, spec):
    if spec not in RACK_CHOICES:
        raise ValidationError("unknown rack %r (choices: %s)"
                              % (spec, ", ".join(sorted(RACK_CHOICES))))
    kind, cocycle = RACK_CHOICES[spec]
    n = len(group.perms[0])
    if kind == "transposition":
        rep = group.perms.index(tuple([2, 1] + list(range(3, n + 1))))
    else:
        if n != 4:
            raise ValidationError("o4 rack requires sym:4")
        rep = group.perms.index((2, 3, 4, 1))
    rk = conjugation_rack(group, rep)
    return rack_module(cocycle(rk))


def build_instance(args):
    """(V, make_algebra) from the instance flags; the algebra is built
    lazily since some checks only need the module."""
    kind, _, param = args.group.partition(":")
    if kind == "dihedral":
        m = int(param)
        G = dihedral(m)
        if args.rack:
            raise ValidationError("--rack requires a symmetric group")
        I, L = [], []
        for spec in args.module or []:
            w, _, val = spec.partition(":")
            if w == "ik":
                I.extend(_parse_pairs(val))
            elif w == "ell":
                L.extend(int(x) for x in val.split(","))
            else:
                raise ValidationError("unknown module spec %r" % spec)
        if not I and not L:
            raise ValidationError("dihedral instance needs at least one --module")
        if L:
            if not valid_IL(m, I, L):
                raise ValidationError("(I, L) = (%r, %r) is not a valid datum" % (I, L))
        elif not valid_I(m, I):
            raise ValidationError("I = %r is not a valid datum" % I)
        V = module_M_I(G, I, L)
        default_cap = 2 * (len(I) + len(L)) + 1
    elif kind == "sym":
        n = int(param)
        G = symmetric(n)
        if not args.rack:
            raise ValidationError("symmetric instance needs --rack")
        V = _build_rack_module(G, args.rack)
        default_cap = args.cap if args.cap else (5 if n == 3 else 2)
    else:
        raise ValidationError("unknown group %r" % args.group)
    cap = args.cap or default_cap

    def make():
        B = TruncatedNichols(V, cap=cap, budget=args.budget)
        return bosonize(B, "%s/%s" % (args.group, args.rack or args.module))

    return V, make


def _eta_from_args(V, args, A=None):
    """One or many functionals from --beta / --seed/--draws."""
    if args.beta is not None:
        if getattr(V, "rack", None) is None:
            raise ValidationError("--beta applies to rack modules only")
        coeffs = [_parse_rational(x) for x in args.beta.split(",")]
        orbits = cocycles.pair_orbits(V.rack)
        if len(coeffs) != len(orbits):
            raise ValidationError("--beta needs %d coefficients (one per pair-orbit)"
                                  % len(orbits))
        return [cocycles.rack_class_functional(V, coeffs)]
    rng = cocycles.make_rng(args.seed)
    return [cocycles.random_invariant(V, rng) for _ in range(args.draws)]


def _emit(args, doc, code=0):
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text + "\n")
    else:
        print(text)
    return code


def cmd_build_algebra(args):
    V, make = build_instance(args)
    A = make()
    doc = {"command": "build-algebra",
           "dimension": A.dim,
           "complete": A.complete,
           "hilbert_series": A.B.hilbert_series(),
           "matsumoto_strategies_agree": all(
               matsumoto_agreement(V, d, budget=args.budget)
               for d in range(2, min(5, A.B.cap) + 1)),
           "algebra": A.to_json()}
    return _emit(args, doc)


def cmd_check(args):
    V, make = build_instance(args)
    etas = _eta_from_args(V, args)
    doc = {"command": "check", "subcheck": args.subcheck, "runs": []}
    ok_all = True
    if args.subcheck in ("invariance", "eq12"):
        for eta in etas:
            if args.subcheck == "invariance":
                ok = cocycles.check_invariance(V, eta)
                run = {"pass": ok}
            else:
                eq1, eq2, wit = cocycles.check_eq1_eq2(V, eta)
                ok = eq1 and eq2
                run = {"eq1": eq1, "eq2": eq2, "pass": ok}
                if wit:
                    run["witness"] = [wit[0], [V.labels[i] for i in wit[1]]]
            doc["runs"].append(run)
            ok_all = ok_all and ok
    else:
        A = make()
        if args.subcheck == "hopf-axioms":
            rep = A.verify_hopf_axioms()
            doc["runs"].append(rep)
            ok_all = rep["ok"]
        else:
            for eta in etas:
                if args.subcheck == "hochschild":
                    ok, wit = cocycles.check_hochschild(A, cocycles.lift_functional(A, eta))
                    run = {"pass": ok}
                elif args.subcheck == "mult-cocycle":
                    sigma = cocycles.exp_functional(A, cocycles.lift_functional(A, eta))
                    ok, wit = cocycles.check_multiplicative_cocycle(A, sigma)
                    run = {"pass": ok}
                elif args.subcheck == "commuting":
                    b_ok, c_ok = cocycles.check_commuting_conditions(A, eta)
                    ok, wit = b_ok and c_ok, None
                    run = {"condition_b": b_ok, "condition_c": c_ok, "pass": ok}
                else:
                    raise ValidationError("unknown subcheck %r" % args.subcheck)
                if wit:
                    run["witness"] = wit
                doc["runs"].append(run)
                ok_all = ok_all and ok
    doc["pass"] = ok_all
    return _emit(args, doc)


def _parse_assignments(sets):
    """--set alpha11:0,1=1/2 --set beta12:0,0=2 -> family dicts."""
    fams = {}
    for item in sets or []:
        try:
            head, _, val = item.partition("=")
            fam, _, pos = head.partition(":")
            u, t = (int(x) for x in pos.split(","))
            fams.setdefault(fam, {})[(u, t)] = _parse_rational(val)
        except (ValueError, ZeroDivisionError):
            raise ValidationError("bad coefficient assignment %r" % item)
    return fams


def cmd_verify_theorem(args):
    name = args.theorem
    if name in ("AI", "BIL"):
        m = args.m
        G = dihedral(m)
        I = _parse_pairs(args.I) if args.I else []
        L = _parse_ints(args.L) if args.L else []
        if name == "AI" and L:
            raise ValidationError("theorem AI takes no L summands")
        if L:
            if not valid_IL(m, I, L):
                raise ValidationError("(I, L) = (%r, %r) is not a valid datum" % (I, L))
        elif not valid_I(m, I):
            raise ValidationError("I = %r is not a valid datum" % I)
        fams = _parse_assignments(args.set)
        try:
            data = DihedralLiftingData(m, I, L, **fams)
        except (ValueError, TypeError) as exc:
            raise ValidationError(str(exc))
        V = module_M_I(G, I, L)
        B = TruncatedNichols(V, cap=2 * (len(I) + len(L)) + 1, budget=args.budget)
        A = bosonize(B, name)
        rep, _ = (verify_theorem_AI if name == "AI" else verify_theorem_BIL)(A, data)
    elif name in ("S3", "Q4", "D4"):
        n = 3 if name == "S3" else 4
        G = symmetric(n)
        spec = "o4:-1" if name == "D4" else "o2:-1"
        V = _build_rack_module(G, spec)
        cap = 5 if n == 3 else 2
        A = bosonize(TruncatedNichols(V, cap=cap, budget=args.budget), name)
        rep, _ = verify_theorem_Sn(A, _parse_rational(args.lam), "Q3" if name == "S3" else name)
    elif name == "chi-scan":
        if args.n not in (3, 4, 5):
            raise ValidationError("chi-scan supports n in {3, 4, 5}")
        G = symmetric(args.n)
        V = _build_rack_module(G, "o2:chi")
        A = bosonize(TruncatedNichols(V, cap=2, budget=args.budget), "chi-scan")
        rep = chi_triviality_scan(A)
    else:
        raise ValidationError("unknown theorem %r" % name)
    return _emit(args, rep, 0)


def make_parser():
    p = argparse.ArgumentParser(
        prog="hopfdeform",
        description="Exact construction and cocycle deformation of bosonized "
                    "Nichols algebras over dihedral and symmetric groups.")
    default_budget = int(os.environ.get("HOPFDEFORM_BUDGET", "200000"))
    sub = p.add_subparsers(dest="command", required=True)

    def instance_flags(q):
        q.add_argument("--group", required=True,
                       help="dihedral:M or sym:N (e.g. dihedral:12, sym:3)")
        q.add_argument("--module", action="append",
                       help="dihedral summand: ik:i,k (repeatable; 'ik:2,3;2,9' "
                            "also works) or ell:l")
        q.add_argument("--rack", help="o2:-1 | o2:chi | o4:-1 (symmetric groups)")
        q.add_argument("--cap", type=int, default=0,
                       help="truncation degree (default: enough to finish)")
        q.add_argument("--budget", type=int, default=default_budget,
                       help="max tensor-power dimension")
        q.add_argument("--out", help="write the JSON report to this path")

    b = sub.add_parser("build-algebra", help="build a bosonization and dump it")
    instance_flags(b)
    b.set_defaults(func=cmd_build_algebra)

    c = sub.add_parser("check", help="structural checks")
    c.add_argument("subcheck", choices=["hopf-axioms", "invariance", "eq12",
                                        "hochschild", "mult-cocycle", "commuting"])
    instance_flags(c)
    c.add_argument("--beta", help="comma-separated class-function coefficients, "
                                  "one per conjugation pair-orbit (rack modules)")
    c.add_argument("--seed", type=int, default=0, help="seed for random invariant draws")
    c.add_argument("--draws", type=int, default=1, help="number of random draws")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify-theorem", help="verify a deformation theorem")
    v.add_argument("theorem", choices=["AI", "BIL", "S3", "Q4", "D4", "chi-scan"])
    v.add_argument("--m", type=int, default=12)
    v.add_argument("--I", help="summand pairs, e.g. '2,3;2,9'")
    v.add_argument("--L", help="ell values, e.g. '3'")
    v.add_argument("--set", action="append",
                   help="coefficient, e.g. alpha11:0,1=1/2 (families: alpha11, "
                        "alpha12, beta11, beta12, zeta11, zeta12, xi12)")
    v.add_argument("--lambda", dest="lam", default="1", help="scalar for S3/Q4/D4")
    v.add_argument("--n", type=int, default=4, help="rank for chi-scan")
    v.add_argument("--budget", type=int, default=default_budget)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify_theorem)
    return p


def main(argv=None):
    p = make_parser()
    args = p.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(json.dumps({"error": "validation", "reason": str(exc)}), file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(json.dumps({"error": "budget", "reason": str(exc)}), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
