"""Command-line frontend.

Subcommands: nichols, hopf, tensor, fusion, lattice, uproll, yd-check,
acceptance.  All numeric I/O is exact ("2/3", "zeta(8)^3"); floats appear
only in the optional --numeric-shadow diagnostic column.  Output is
deterministic JSON (sorted keys) or a text rendering of the same data.

Exit codes: 0 success, 1 a check failed, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cyclotomic import CycNum, format_fraction, parse_fraction
from .fusion import fuse
from .grading import (
    BraidedObject,
    cartan_a2_object,
    fermionic2_object,
    parabolic2_object,
    rank1_object,
)
from .hopf import (
    build_ugl11,
    build_uq_h_sl2,
    build_uq_sl2,
    build_usp,
    check_gl11_change_of_variables,
    check_sl2_substitution,
)
from .labels import parse_label
from .lattice import Lattice, triplet_lattice
from .nichols import nichols_dimensions, is_sufficiently_unrolled
from .repcat import decompose_tensor
from .yd import (
    MonodromyError,
    YDModule,
    gl11_preset,
    sp_preset,
    triplet_preset,
    uproll,
    yd_check,
)
from .grading import Bicharacter, Degree, GradingGroup

SCHEMA_VERSION = 1

NICHOLS_PRESETS = {
    "rank1": lambda p: rank1_object(p),
    "a2": lambda p: cartan_a2_object(p),
    "parabolic2": lambda p: parabolic2_object(p),
    "fermions2": lambda p: fermionic2_object(),
}


def _load_config(path: str) -> dict:
    if path.endswith(".toml"):
        try:
            import tomllib  # Python >= 3.11
        except ModuleNotFoundError:
            import tomli as tomllib
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    with open(path) as fh:
        return json.load(fh)


def _emit(args, payload: dict) -> None:
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    if getattr(args, "format", "json") == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _braided_object_from_args(args) -> BraidedObject:
    if args.input:
        data = _load_config(args.input)
        return BraidedObject.from_json(data)
    if not args.preset:
        raise SystemExit(2)
    make = NICHOLS_PRESETS[args.preset]
    return make(args.p)


def cmd_nichols(args) -> int:
    X = _braided_object_from_args(args)
    data = nichols_dimensions(X, args.max_degree)
    dims = {
        ",".join(map(str, counts)): blk.dim
        for counts, blk in sorted(data.components.items())
        if blk.dim > 0
    }
    payload = {
        "dims": dims,
        "hilbert": data.hilbert,
        "complete": data.complete,
        "total_dim": data.total_dim(),
    }
    if not data.complete:
        payload["total_dim_at_least"] = sum(data.hilbert)
    verdict = is_sufficiently_unrolled(X, data)
    payload["sufficiently_unrolled"] = {
        "ok": verdict.ok,
        "truncated": verdict.truncated,
        "witness": [list(w) for w in verdict.witness] if verdict.witness else None,
    }
    if args.relations:
        rels = {}
        for counts, blk in sorted(data.components.items()):
            if not blk.kernel:
                continue
            rels[",".join(map(str, counts))] = [
                {"".join(f"x{a+1}" for a in w) if X.rank > 1
                 else "x^" + str(len(w)): str(c) for w, c in sorted(kv.items())}
                for kv in blk.kernel
            ]
        payload["relations"] = rels
    if args.numeric_shadow:
        payload["numeric_shadow"] = {
            "q_matrix_abs": [[round(abs(q.numeric()), 9) for q in row]
                             for row in X.braid_matrix()],
        }
    _emit(args, payload)
    return 0


HOPF_PRESETS = {
    "uq-sl2": lambda args: build_uq_sl2(args.p),
    "uq-h-sl2": lambda args: build_uq_h_sl2(args.p),
    "usp": lambda args: build_usp(args.p),
    "ugl11": lambda args: build_ugl11(parse_fraction(args.hbar)),
}


def cmd_hopf(args) -> int:
    pres = HOPF_PRESETS[args.preset](args)
    checks = args.check.split(",") if args.check else []
    report = []
    failed = False
    if "relations" in checks or "all" in checks:
        bad = pres.check_counit_kills_relations()
        for name, _ in pres.relations:
            report.append({"check": "counit", "relation": name,
                           "status": "fail" if name in bad else "ok"})
        failed = failed or bool(bad)
    if "coproduct" in checks or "all" in checks:
        bad = pres.check_coproduct_on_relations()
        for name, _ in pres.relations:
            report.append({"check": "coproduct", "relation": name,
                           "status": "fail" if name in bad else "ok"})
        failed = failed or bool(bad)
    if "antipode" in checks or "all" in checks:
        bad = pres.check_antipode()
        for g in pres.order:
            report.append({"check": "antipode", "generator": g,
                           "status": "fail" if g in bad else "ok"})
        failed = failed or bool(bad)
    payload = {"presentation": pres.to_json()}
    if report:
        payload["report"] = report
    if args.preset == "ugl11":
        ok = check_gl11_change_of_variables(parse_fraction(args.hbar))
        payload["change_of_variables"] = "ok" if ok else "fail"
        failed = failed or not ok
    if args.preset in ("uq-sl2", "uq-h-sl2"):
        ok = check_sl2_substitution(args.p)
        payload["sl2_substitution"] = "ok" if ok else "fail"
        failed = failed or not ok
    _emit(args, payload)
    return 1 if failed else 0


def cmd_tensor(args) -> int:
    a = parse_label(args.left, args.p)
    b = parse_label(args.right, args.p)
    dec = decompose_tensor(args.p, a, b)
    payload = {
        "left": str(a),
        "right": str(b),
        "decomposition": [
            {"label": str(lab), "multiplicity": mult}
            for lab, mult in sorted(dec.items(), key=lambda kv: kv[0].sort_key())
        ],
    }
    _emit(args, payload)
    return 0


def cmd_fusion(args) -> int:
    a = parse_label(args.left, args.p)
    b = parse_label(args.right, args.p)
    dec = fuse(a, b, args.p)
    payload = {
        "left": str(a),
        "right": str(b),
        "level": dec.level,
        "decomposition": dec.to_json(),
    }
    _emit(args, payload)
    return 0


def _lattice_from_args(args) -> Lattice:
    if args.input:
        return Lattice.from_json(_load_config(args.input))
    if args.preset == "triplet":
        return triplet_lattice(args.p)
    raise SystemExit(2)


def cmd_lattice(args) -> int:
    L = _lattice_from_args(args)
    if args.action == "even":
        payload = {"even": L.is_even()}
        if not L.is_even():
            payload["violation"] = L.even_violation()
    elif args.action == "dual":
        payload = {"dual_basis": [[format_fraction(x) for x in row]
                                  for row in L.dual_lattice().basis]}
    elif args.action == "discriminant":
        D = L.discriminant_form()
        torsion = D.group.torsion
        payload = {
            "group": "Z" + "xZ".join(map(str, torsion)) if torsion else "trivial",
            "orders": list(torsion),
            "Q": [str(q) for q in D.enumerate_q_values()],
        }
        if args.numeric_shadow:
            payload["Q_numeric"] = [
                [round(q.numeric().real, 9), round(q.numeric().imag, 9)]
                for q in D.enumerate_q_values()
            ]
    else:
        raise SystemExit(2)
    _emit(args, payload)
    return 0


def cmd_uproll(args) -> int:
    if args.preset == "triplet":
        X, R = triplet_preset(args.p)
    elif args.preset == "sp":
        X, R, _ = sp_preset(args.p)
    elif args.preset == "gl11":
        X, R, _ = gl11_preset()
    elif args.braiding and args.lattice:
        X = BraidedObject.from_json(_load_config(args.braiding))
        R = Lattice.from_json(_load_config(args.lattice))
    else:
        raise SystemExit(2)
    try:
        spec = uproll(X, R, target=args.target)
    except MonodromyError as exc:
        _emit(args, {"error": str(exc)})
        return 1
    _emit(args, spec.to_json())
    return 0


def _parse_scalar(x) -> CycNum:
    if isinstance(x, dict):
        return CycNum.from_json(x)
    return CycNum.from_rational(parse_fraction(str(x)))


def cmd_yd_check(args) -> int:
    data = _load_config(args.input)
    p = int(data["p"])
    group = GradingGroup.from_json(data["group"])
    bichar = Bicharacter(group, [[parse_fraction(str(x)) for x in row]
                                 for row in data["exponents"]])
    def degree(row):
        coords = [parse_fraction(str(x)) for x in row]
        return Degree(group, coords[:group.free_rank],
                      [int(x) for x in coords[group.free_rank:]])
    gamma = degree(data["gamma"])
    degrees = [degree(row) for row in data["degrees"]]
    action = [[_parse_scalar(x) for x in row] for row in data["action"]]
    comps = [[[_parse_scalar(x) for x in row] for row in mat]
             for mat in data["coaction_components"]]
    mod = YDModule(p, bichar, gamma, degrees, action, comps)
    rep = yd_check(mod)
    _emit(args, {"ok": rep.ok,
                 "witness": [str(w) for w in rep.witness] if rep.witness else None})
    return 0 if rep.ok else 1


def cmd_acceptance(args) -> int:
    from .acceptance import run_all
    report = run_all(check_determinism=not args.skip_determinism, seed=args.seed)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report, fh, sort_keys=True, indent=2)
    for item in report["criteria"]:
        mark = "PASS" if item["passed"] else "FAIL"
        print(f"{mark}  {item['name']:30s} {item['detail']}")
    print("overall:", "PASS" if report["passed"] else "FAIL")
    return 0 if report["passed"] else 1


def build_parser(config_defaults: dict | None = None):
    top = argparse.ArgumentParser(
        prog="uqcat",
        description="Exact computations with diagonal Nichols algebras, "
                    "quantum group module categories, and the singlet fusion ring.")
    top.add_argument("--config", help="TOML or JSON file with defaults for the flags")
    sub = top.add_subparsers(dest="command", required=True)
    subparsers = []

    def remember(p):
        subparsers.append(p)
        return p

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--numeric-shadow", action="store_true",
                       help="add floating-point diagnostic columns")
        p.add_argument("--seed", type=int, default=20240801,
                       help="seed for randomized property checks")

    p = remember(sub.add_parser("nichols", help="dimensions/relations of a diagonal Nichols algebra"))
    p.add_argument("--preset", choices=sorted(NICHOLS_PRESETS))
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--input", help="braiding file (JSON/TOML)")
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--relations", action="store_true")
    common(p)
    p.set_defaults(func=cmd_nichols)

    p = remember(sub.add_parser("hopf", help="quantum group presentations and their checks"))
    p.add_argument("--preset", choices=sorted(HOPF_PRESETS), required=True)
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--hbar", default="1/2")
    p.add_argument("--check", default="all",
                   help="comma list of relations,coproduct,antipode or all")
    common(p)
    p.set_defaults(func=cmd_hopf)

    p = remember(sub.add_parser("tensor", help="tensor-decompose two weight modules"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    common(p)
    p.set_defaults(func=cmd_tensor)

    p = remember(sub.add_parser("fusion", help="fusion product of two labels"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("left")
    p.add_argument("right")
    common(p)
    p.set_defaults(func=cmd_fusion)

    p = remember(sub.add_parser("lattice", help="dual/discriminant/evenness of a lattice"))
    p.add_argument("--preset", choices=("triplet",))
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--input", help="lattice file (JSON/TOML)")
    p.add_argument("action", choices=("discriminant", "dual", "even"))
    common(p)
    p.set_defaults(func=cmd_lattice)

    p = remember(sub.add_parser("uproll", help="induce a braided object along a lattice algebra"))
    p.add_argument("--preset", choices=("triplet", "sp", "gl11"))
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--braiding", help="braiding file")
    p.add_argument("--lattice", help="lattice file")
    p.add_argument("--target", choices=("local", "all"), default="local")
    common(p)
    p.set_defaults(func=cmd_uproll)

    p = remember(sub.add_parser("yd-check", help="verify a Yetter-Drinfeld module file"))
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_yd_check)

    p = remember(sub.add_parser("acceptance", help="run the acceptance suite"))
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--skip-determinism", action="store_true",
                   help="skip the duplicate run (criterion 12)")
    common(p)
    p.set_defaults(func=cmd_acceptance)

    if config_defaults:
        clean = {k.replace("-", "_"): v for k, v in config_defaults.items()}
        for sp in subparsers:
            known = {a.dest for a in sp._actions}
            sp.set_defaults(**{k: v for k, v in clean.items() if k in known})
    return top


def parser_for_docs() -> argparse.ArgumentParser:
    return build_parser()


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    config_defaults = None
    if "--config" in argv:
        idx = argv.index("--config")
        if idx + 1 < len(argv):
            config_defaults = _load_config(argv[idx + 1])
    parser = build_parser(config_defaults)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
