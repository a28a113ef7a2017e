"""Command-line front end: ``hypermod check|enumerate|classify|verify|search``.

Exit codes: 0 ok, 1 usage, 2 invalid structure, 3 theorem failure (in
contract), 4 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .bitset import intersect_all
from .core import validate_hypermodule, validate_krasner_hyperring
from .errors import CapacityError, HypermodError, StructureFileError, StructureViolation
from .harness import THEOREM_IDS, Analysis, known_target, run_all, run_theorem
from .multiplication import is_cyclic, jacobson_radical_module, omega
from .search import PROPERTY_TARGETS, SearchSpec, hunt
from .substructures import DEFAULT_ENUM_BOUND, classify_ideal, enumerate_hyperideals, maximal_hyperideals
from .textformat import emit, parse_file

SCHEMA = 1
EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_THEOREM, EXIT_CAPACITY = 0, 1, 2, 3, 4


class _Usage(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _report(args, payload: dict, text_lines: list[str]):
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload}, indent=2))
    else:
        print("\n".join(text_lines))


def _load(args, need_module: bool):
    sf = parse_file(args.file)
    if need_module and sf.module is None:
        raise StructureViolation(f"{args.file} has no [module] section")
    return sf


def cmd_check(args) -> int:
    sf = _load(args, False)
    ring_rep = validate_krasner_hyperring(sf.ring)
    payload = {"ring": ring_rep.to_dict()}
    lines = [f"ring: {'valid' if ring_rep.valid else 'INVALID'}"]
    lines += [f"  FAIL {r.name}: {r.witness}" for r in ring_rep.failures()]
    if sf.ring.degenerate:
        lines.append("  WARN degenerate ring (1 = 0)")
    ok = ring_rep.valid
    if sf.module is not None:
        mod_rep = validate_hypermodule(sf.module)
        payload["module"] = mod_rep.to_dict()
        lines.append(f"module: {'valid' if mod_rep.valid else 'INVALID'}")
        lines += [f"  FAIL {r.name}: {r.witness}" for r in mod_rep.failures()]
        ok = ok and mod_rep.valid
        if ok:
            an = Analysis(sf.module, bound=args.bound)
            rep = an.assumptions
            payload["standing_assumptions"] = rep.to_dict()
            for name, (holds, w) in rep.items.items():
                lines.append(f"  {'ok  ' if holds else 'WARN'} standing assumption {name}"
                             + ("" if holds else f": {w}"))
    payload["valid"] = ok
    _report(args, payload, lines)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_enumerate(args) -> int:
    sf = _load(args, args.submodules)
    if args.submodules:
        an = Analysis(sf.module, bound=args.bound)
        masks, fmt, what = an.submodules, sf.module.carrier, "subhypermodules"
    else:
        masks, fmt, what = enumerate_hyperideals(sf.ring, args.bound), sf.ring.carrier, "hyperideals"
    items = [fmt.names(s) for s in masks]
    _report(args, {"kind": what, "count": len(items), "items": items},
            [f"{len(items)} {what}"] + ["  " + fmt.fmt(s) for s in masks])
    return EXIT_OK


def cmd_classify(args) -> int:
    sf = _load(args, False)
    R = sf.ring
    ideals = enumerate_hyperideals(R, args.bound)
    rf = R.carrier.fmt
    rows = [classify_ideal(R, Q, ideals) for Q in ideals]
    maxes = maximal_hyperideals(R, ideals)
    JR = intersect_all(maxes, R.full) if maxes else None
    payload = {"ideals": [{"ideal": R.carrier.names(c.ideal), "maximal": c.is_maximal,
                           "prime": c.is_prime, "primary": c.is_primary,
                           "radical": R.carrier.names(c.radical)} for c in rows],
               "J(R)": None if JR is None else R.carrier.names(JR)}
    lines = ["ideal                maximal prime primary radical"]
    for c in rows:
        lines.append(f"{rf(c.ideal):20} {str(c.is_maximal):7} {str(c.is_prime):5} "
                     f"{str(c.is_primary):7} {rf(c.radical)}")
    lines.append(f"J(R) = {'undefined (no maximal hyperideal)' if JR is None else rf(JR)}")
    if sf.module is not None:
        M = sf.module
        an = Analysis(M, bound=args.bound)
        gen = is_cyclic(M)
        om = omega(M, an.ideals).omega_M
        JM = jacobson_radical_module(M, an.submodules)
        flags = {"faithful": an.faithful, "cyclic": gen is not None,
                 "multiplication": an.multiplication}
        payload.update(flags)
        payload["generator"] = None if gen is None else M.carrier.labels[gen]
        payload["omega(M)"] = R.carrier.names(om)
        payload["J(M)"] = M.carrier.names(JM)
        lines += [f"{k}: {v}" for k, v in flags.items()]
        if not an.multiplication:
            lines.append(f"  not multiplication at N = {M.carrier.fmt(an.certificate.failing)}")
        lines += [f"omega(M) = {rf(om)}", f"J(M) = {M.carrier.fmt(JM)}"]
    _report(args, payload, lines)
    return EXIT_OK


def _verdict_lines(v, indent="") -> list[str]:
    status = "pass" if v.passed else "FAIL"
    tag = " [out of contract]" if v.out_of_contract else ""
    out = [f"{indent}{v.theorem_id:8} {status}  hypotheses={v.hypotheses_hold} "
           f"conclusion={v.conclusion_holds}{tag}"]
    if not v.passed and "counterexample" in v.witness:
        out.append(f"{indent}         counterexample: {json.dumps(v.witness['counterexample'])}")
    if v.directions and not all(v.directions.values()):
        bad = [d for d, ok in v.directions.items() if not ok]
        out.append(f"{indent}         failed directions: {', '.join(bad)}")
    for p in v.parts:
        out += _verdict_lines(p, indent + "  ")
    return out


def cmd_verify(args) -> int:
    sf = _load(args, True)
    target = args.theorem
    if target != "all" and not known_target(target):
        raise _Usage(f"unknown theorem id {target!r}; known: {', '.join(THEOREM_IDS)}")
    an = Analysis(sf.module, bound=args.bound)
    verdicts = run_all(an) if target == "all" else [run_theorem(an, target)]
    failed = [v for v in verdicts if not v.passed and not v.out_of_contract]
    lines = []
    for v in verdicts:
        lines += _verdict_lines(v)
    lines.append(f"{len(verdicts)} checked, {len(failed)} in-contract failure(s)")
    _report(args, {"in_contract": not an.out_of_contract,
                   "verdicts": [v.to_dict() for v in verdicts]}, lines)
    return EXIT_THEOREM if failed else EXIT_OK


def cmd_search(args) -> int:
    if args.random and args.seed is None:
        raise _Usage("--random needs --seed")
    if args.target != "all" and not known_target(args.target) and args.target not in PROPERTY_TARGETS:
        raise _Usage(f"unknown target {args.target!r}")
    spec = SearchSpec(max_ring_size=args.max_size,
                      max_module_size=args.max_module_size or args.max_size,
                      m=args.m, n=args.n, target=args.target,
                      mode="random" if args.random else "exhaustive", seed=args.seed,
                      dedup=not args.no_dedup, count=args.count, jobs=args.jobs)
    hits = hunt(spec)
    prop = spec.target in PROPERTY_TARGETS
    spec_d = {"max_ring_size": spec.max_ring_size, "max_module_size": spec.max_module_size,
              "m": spec.m, "n": spec.n, "target": spec.target, "mode": spec.mode,
              "seed": spec.seed, "dedup": spec.dedup, "count": spec.count}
    items = [{"verdict": h.verdict.to_dict(), "instance": emit(h.module)} for h in hits]
    if prop:
        lines = [f"{len(hits)} instance(s); {spec.target} true for "
                 f"{sum(h.verdict.conclusion_holds for h in hits)}"]
    else:
        lines = [f"{len(hits)} in-contract counterexample(s)"]
    for i, h in enumerate(hits):
        if prop:
            tag = " [out of contract]" if h.verdict.out_of_contract else ""
            lines.append(f"#{i} ring size {h.module.ring.size}, module size {h.module.size}: "
                         f"{spec.target} = {h.verdict.conclusion_holds}{tag}")
            continue
        lines += _verdict_lines(h.verdict)
        lines += ["    " + ln for ln in emit(h.module).splitlines()]
    _report(args, {"spec": spec_d, "hits": items}, lines)
    return EXIT_THEOREM if hits and not prop else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS,
                        help="largest carrier for substructure enumeration")

    p = _ArgParser(prog="hypermod", description="Finite Krasner (m,n)-hyperrings and hypermodules.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--bound", type=int, default=DEFAULT_ENUM_BOUND)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgParser)

    c = sub.add_parser("check", parents=[common], help="validate axioms and standing assumptions")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("enumerate", parents=[common], help="list hyperideals or subhypermodules")
    c.add_argument("file")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--ideals", action="store_true")
    g.add_argument("--submodules", action="store_true")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("classify", parents=[common], help="ideal table and module invariants")
    c.add_argument("file")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("verify", parents=[common], help="evaluate theorem predicates")
    c.add_argument("file")
    c.add_argument("--theorem", default="all")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("search", parents=[common], help="hunt for counterexamples")
    c.add_argument("--max-size", type=int, required=True)
    c.add_argument("--max-module-size", type=int)
    c.add_argument("--m", type=int, default=2)
    c.add_argument("--n", type=int, default=2)
    c.add_argument("--target", default="all")
    c.add_argument("--random", action="store_true")
    c.add_argument("--seed", type=int)
    c.add_argument("--count", type=int, default=20)
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--no-dedup", action="store_true")
    c.set_defaults(func=cmd_search)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except _Usage as e:
        print(f"hypermod: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"hypermod: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except StructureFileError as e:
        for d in e.diagnostics or [e]:
            print(f"{getattr(args, 'file', '')}:{d}", file=sys.stderr)
        return EXIT_INVALID
    except CapacityError as e:
        print(f"hypermod: capacity: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except (StructureViolation, ValueError) as e:
        print(f"hypermod: invalid: {e}", file=sys.stderr)
        return EXIT_INVALID
    except HypermodError as e:
        print(f"hypermod: error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
