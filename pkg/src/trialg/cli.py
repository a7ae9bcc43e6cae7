"""Command line interface.

Exit status contract: 0 when every requested check passes, 1 on a
verification failure, 2 on usage or parse errors (including the exhaustive
sweep guardrail, which can be lifted with --sample or TRIALG_MAX_DIM).
"""

from __future__ import annotations

import argparse
import sys

from . import catalog, serialize
from .linalg import Matrix
from .n5 import reduce_n6_to_n5
from .superlie import (
    bracket_from_conjugation,
    check_generation,
    check_ideal_property,
    check_super_jacobi,
    check_transitivity,
    lie_of,
    verify_conjugation,
)
from .trisystem import (
    GuardrailError,
    TriAlgebra,
    TriEvaluator,
    check_n5,
    check_n6,
    check_n8,
    simplicity,
)

USAGE_ERROR = 2
CHECK_FAILED = 1


class UsageError(Exception):
    pass


def _evaluator_variant(args) -> str:
    return getattr(args, "variant", "twisted") or "twisted"


def _build_target(name: str, args) -> tuple[object, dict]:
    """Construct a catalog family; returns (system, recorded parameters)."""
    if name == "o3":
        return catalog.o3(), {}
    if name == "a3t":
        m, n = _need(args, "m"), _need(args, "n")
        return catalog.a3_t(m, n), {"m": m, "n": n}
    if name == "a3st":
        h, k = _need(args, "h"), _need(args, "k")
        return catalog.a3_st(h, k), {"h": h, "k": k}
    if name == "c3":
        n = _need(args, "n")
        if n % 2:
            raise UsageError("c3 takes the even total size via --n (dim 2k means --n 2k)")
        return catalog.c3(n // 2), {"n": n}
    if name == "grassmann-n5":
        k = _need(args, "k")
        system, _form = catalog.grassmann_n5(k)
        return system, {"k": k}
    if name == "p3":
        m = _need(args, "m")
        return catalog.p3(m), {"m": m}
    if name == "sw3":
        if _evaluator_variant(args) == "identity":
            return catalog.sw3(Matrix.identity(2), 1), {"a": [["1", "0"], ["0", "1"]], "phi": "1"}
        return catalog.sw3(), {"a": [["0", "1"], ["-1", "0"]], "phi": "-1"}
    if name == "s3":
        if _evaluator_variant(args) == "identity":
            return catalog.s3(Matrix.identity(2)), {"phi": "identity"}
        return catalog.s3(), {"phi": "-identity"}
    if name == "w3":
        if _evaluator_variant(args) == "identity":
            return catalog.w3(Matrix.identity(3)), {"phi": "identity"}
        return catalog.w3(), {"phi": "diag(1,-1,-1)"}
    raise UsageError(f"unknown family {name!r}")


def _need(args, attr: str) -> int:
    value = getattr(args, attr, None)
    if value is None:
        raise UsageError(f"family requires --{attr}")
    return value


def _load_target(target: str, args):
    """A family name or a JSON file path."""
    if target.endswith(".json"):
        data = serialize.load_path(target)
        kind = data["kind"]
        if kind == "trialgebra":
            return serialize.trialgebra_from_dict(data)
        if kind == "superlie":
            g, _sigma = serialize.superlie_from_dict(data)
            return g
        if kind == "evaluator":
            fam = data["family"]
            params = data.get("params", {})
            ns = argparse.Namespace(
                m=_maybe_int(params.get("m")),
                n=_maybe_int(params.get("n")),
                h=_maybe_int(params.get("h")),
                k=_maybe_int(params.get("k")),
                variant="identity" if params.get("phi") in ("1", "identity") else "twisted",
            )
            system, _ = _build_target(fam, ns)
            return system
        raise UsageError(f"cannot run checks on files of kind {kind!r}")
    system, _ = _build_target(target, args)
    return system


def _maybe_int(v):
    return None if v is None else int(v)


def _add_family_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--h", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--variant", choices=["twisted", "identity"], default="twisted",
                        help="evaluator families: default twisted map or the identity map")


def cmd_build(args) -> int:
    system, params = _build_target(args.family, args)
    if isinstance(system, TriAlgebra):
        data = serialize.trialgebra_to_dict(system)
    else:
        data = serialize.evaluator_params_to_dict(args.family, params)
    text = serialize.dumps(data)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    system = _load_target(args.target, args)
    checker = {"n6": check_n6, "n8": check_n8, "n5": check_n5}[args.axioms]
    if not isinstance(system, (TriAlgebra, TriEvaluator)):
        raise UsageError("verify expects a ternary system (family or trialgebra/evaluator file)")
    report = checker(system, args.degree_cap, sample=args.sample)
    if args.json:
        import json

        print(
            json.dumps(
                {
                    "system": report.system,
                    "axioms": list(report.axioms_checked),
                    "passed": report.passed,
                    "tuples_checked": report.tuples_checked,
                    "violations": [str(v) for v in report.violations],
                    "witnesses_truncated": report.truncated,
                },
                sort_keys=True,
            )
        )
    else:
        print(report.summary())
        for violation in report.violations:
            print(f"  witness: {violation}")
    return 0 if report.passed else CHECK_FAILED


def cmd_lie(args) -> int:
    system = _load_target(args.target, args)
    if not isinstance(system, TriAlgebra):
        raise UsageError("lie expects a finite system")
    lie = lie_of(system)
    g = lie.algebra
    dims = ", ".join(f"{d}: {g.components[d]}" for d in g.DEGREES)
    print(f"{g.name}: components ({dims})")
    degenerate = g.components[0] == 0 and g.components[-1] > 0
    if degenerate:
        print("  degenerate input: degree-0 component is zero")
    ok = True
    jac = check_super_jacobi(g)
    print(f"  super-jacobi: {'pass' if jac.passed else 'FAIL'}")
    ok &= jac.passed
    conj = verify_conjugation(g, lie.sigma)
    print(f"  graded conjugation: {'pass' if conj.passed else 'FAIL'}")
    ok &= conj.passed
    if degenerate:
        # an abelian doubled copy cannot be transitive or ideal-connected
        print("  transitivity, generation, ideal property: skipped (degenerate)")
    else:
        for label, result in (
            ("transitivity", check_transitivity(g)),
            ("generation", check_generation(g)),
            ("ideal property", check_ideal_property(g)),
        ):
            print(f"  {label}: {'pass' if result else 'FAIL'}")
            ok &= result
    recovered = bracket_from_conjugation(g, lie.sigma)
    round_trip = recovered.tensor == system.tensor
    print(f"  round trip: {'pass' if round_trip else 'FAIL'}")
    ok &= round_trip
    if args.out:
        serialize.dump_path(serialize.superlie_to_dict(g, lie.sigma), args.out)
        print(f"wrote {args.out}")
    return 0 if ok else CHECK_FAILED


def cmd_reduce_n5(args) -> int:
    system = _load_target(args.target, args)
    if not isinstance(system, TriAlgebra):
        raise UsageError("reduce-n5 expects a finite system")
    reduced = reduce_n6_to_n5(system)
    report = check_n5(reduced)
    print(report.summary())
    if args.out:
        serialize.dump_path(serialize.trialgebra_to_dict(reduced), args.out)
        print(f"wrote {args.out}")
    return 0 if report.passed else CHECK_FAILED


def cmd_simplicity(args) -> int:
    system = _load_target(args.target, args)
    if not isinstance(system, TriAlgebra):
        raise UsageError("simplicity expects a finite system")
    result = simplicity(system)
    print(f"{system.name}: {result}")
    return 0


def cmd_export(args) -> int:
    return cmd_build(args)


def cmd_import_check(args) -> int:
    data = serialize.load_path(args.path)
    kind = data["kind"]
    if kind == "trialgebra":
        system = serialize.trialgebra_from_dict(data)
        canonical = serialize.trialgebra_to_dict(system)
        print(f"trialgebra {system.name!r}: dim {system.dim}, {len(system.tensor)} bracket entries")
    elif kind == "superlie":
        g, sigma = serialize.superlie_from_dict(data)
        canonical = serialize.superlie_to_dict(g, sigma)
        dims = ", ".join(f"{d}: {g.components[d]}" for d in g.DEGREES)
        print(f"superlie {g.name!r}: components ({dims})")
    elif kind == "evaluator":
        print(f"evaluator family {data['family']!r} with parameters {data.get('params', {})}")
        canonical = serialize.evaluator_params_to_dict(data["family"], data.get("params", {}))
    else:
        raise UsageError(f"unknown kind {kind!r}")
    known = {k: data[k] for k in canonical if k in data}
    if known != canonical:
        print("  round trip: FAIL (file differs from its canonical serialization)")
        return CHECK_FAILED
    print("  round trip: pass")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trialg",
        description="build, verify, and transform exact ternary algebra structure constants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a catalog family and write its JSON record")
    p.add_argument("family")
    _add_family_params(p)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("verify", help="run an axiom sweep on a family or a JSON file")
    p.add_argument("target")
    p.add_argument("--axioms", choices=["n6", "n8", "n5"], default="n6")
    p.add_argument("--degree-cap", type=int, default=3, dest="degree_cap")
    p.add_argument("--sample", type=int)
    p.add_argument("--json", action="store_true", help="machine-readable report on stdout")
    _add_family_params(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("lie", help="build the graded superalgebra and run its checks")
    p.add_argument("target")
    p.add_argument("--check", choices=["all"], default="all")
    p.add_argument("--out")
    _add_family_params(p)
    p.set_defaults(fn=cmd_lie)

    p = sub.add_parser("reduce-n5", help="double an N=6 system into an N=5 system")
    p.add_argument("target")
    p.add_argument("--out")
    _add_family_params(p)
    p.set_defaults(fn=cmd_reduce_n5)

    p = sub.add_parser("simplicity", help="classify a finite system")
    p.add_argument("target")
    _add_family_params(p)
    p.set_defaults(fn=cmd_simplicity)

    p = sub.add_parser("export", help="alias of build")
    p.add_argument("family")
    _add_family_params(p)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_export)

    p = sub.add_parser("import-check", help="parse a JSON record and verify its round trip")
    p.add_argument("path")
    p.set_defaults(fn=cmd_import_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except GuardrailError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
