"""Command-line entry point.

    aft lp  FILE [--semantics LIST] [--format text|json] [--trace] [--validate]
    aft adf FILE [--semantics LIST] [--format text|json] [--trace] [--validate]
    aft check {lp,adf,tab} FILE [--format text|json]
    aft compare FILE | aft compare --corpus N [--seed S]

FILE may be ``-`` for stdin. Exit codes: 0 success, 1 unreadable or malformed
input, 2 violated internal law (a broken operator or failed check).

Pair-valued results are displayed three-valued: an atom is true when in the
lower bound, false when outside the upper bound, unknown otherwise. JSON
output is schema-stable and carries ``"schema": "aft/1"``.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass

from .adf import adf_approximator, parse_adf
from .approx import (
    Approximator,
    ApproxPair,
    brackets_operator,
    is_exact_approximator,
    is_precision_monotone,
    is_symmetric,
    precision_leq,
    ultimate,
    verify_approximator,
)
from .convex import convex_kripke_kleene, embed_interval
from .corpus import DEFAULT_SEED, random_programs
from .errors import (
    AftError,
    ForeignAtom,
    MissingCondition,
    ParseError,
    TooManyAtoms,
    UndeclaredStatement,
)
from .fixpoints import (
    kripke_kleene,
    partial_stable_fixpoints,
    stable_models,
    supported_fixpoints,
    well_founded,
)
from .lattice import PowersetLattice
from .lp import fitting, parse_program, program_lattice, tp

SEMANTICS = (
    "kk",
    "wf",
    "supported",
    "stable",
    "partial-stable",
    "ultimate-kk",
    "ultimate-wf",
    "convex-kk",
)

_INPUT_ERRORS = (
    ParseError,
    UndeclaredStatement,
    MissingCondition,
    ForeignAtom,
    TooManyAtoms,
    OSError,
    ValueError,
)


@dataclass
class RunConfig:
    """One resolved invocation of the run command."""

    frontend: str
    source: str
    semantics: tuple[str, ...]
    fmt: str = "text"
    trace: bool = False
    validate: bool = False
    seed: int = DEFAULT_SEED


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as handle:
        return handle.read()


def _parse_semantics(raw: str) -> tuple[str, ...]:
    names = [n.strip() for n in raw.split(",") if n.strip()]
    if not names:
        raise ValueError("at least one semantics must be selected")
    if "all" in names:
        return SEMANTICS
    for n in names:
        if n not in SEMANTICS:
            raise ValueError(f"unknown semantics {n!r}; choose from {', '.join(SEMANTICS)} or all")
    return tuple(n for n in SEMANTICS if n in names)


def _load_frontend(frontend: str, text: str):
    if frontend == "lp":
        prog = parse_program(text)
        lat = program_lattice(prog)
        approximator = fitting(prog, lat)
    else:
        framework = parse_adf(text)
        lat = PowersetLattice(framework.statements)
        approximator = adf_approximator(framework, lat)
    return lat, approximator


# -- rendering ---------------------------------------------------------------


def _set_text(members) -> str:
    return "{" + ",".join(sorted(members)) + "}"


def _sets_text(sets) -> str:
    if not sets:
        return "(none)"
    return ", ".join(_set_text(m) for m in sorted(sets, key=lambda m: tuple(sorted(m))))


def _assignment(pair: ApproxPair, atoms) -> dict:
    out = {}
    for a in atoms:
        if a in pair.lower:
            out[a] = "true"
        elif a not in pair.upper:
            out[a] = "false"
        else:
            out[a] = "unknown"
    return out


def _assignment_text(pair: ApproxPair, atoms) -> str:
    if not atoms:
        return "(no atoms)"
    return ", ".join(f"{a}: {v}" for a, v in _assignment(pair, atoms).items())


def _pair_json(pair: ApproxPair, atoms) -> dict:
    return {
        "lower": sorted(pair.lower),
        "upper": sorted(pair.upper),
        "assignment": _assignment(pair, atoms),
    }


def _sets_json(sets) -> list:
    return sorted((sorted(m) for m in sets), key=tuple)


def _pairs_json(pairs, atoms) -> list:
    return sorted(
        (_pair_json(p, atoms) for p in pairs),
        key=lambda d: (d["lower"], d["upper"]),
    )


# -- run ---------------------------------------------------------------------


def _compute(config: RunConfig, lat, approximator):
    base_op = approximator.operator
    results: dict[str, object] = {}
    traces: dict[str, list] = {}
    for name in config.semantics:
        if name == "kk":
            results[name], traces[name] = kripke_kleene(approximator)
        elif name == "wf":
            results[name], traces[name] = well_founded(approximator)
        elif name == "supported":
            results[name] = supported_fixpoints(approximator)
        elif name == "stable":
            results[name] = stable_models(approximator)
        elif name == "partial-stable":
            results[name] = partial_stable_fixpoints(approximator)
        elif name == "ultimate-kk":
            results[name], traces[name] = kripke_kleene(ultimate(lat, base_op))
        elif name == "ultimate-wf":
            results[name], traces[name] = well_founded(ultimate(lat, base_op))
        elif name == "convex-kk":
            results[name], traces[name] = convex_kripke_kleene(lat, base_op)
    return results, traces


def _cmd_run(args) -> int:
    config = RunConfig(
        frontend=args.frontend,
        source=args.source,
        semantics=_parse_semantics(args.semantics),
        fmt=args.fmt,
        trace=args.trace,
        validate=args.validate,
        seed=args.seed,
    )
    lat, approximator = _load_frontend(config.frontend, _read_source(config.source))
    if config.validate:
        verify_approximator(approximator)
    atoms = sorted(lat.universe)
    results, traces = _compute(config, lat, approximator)

    if config.fmt == "json":
        doc: dict = {"schema": "aft/1", "frontend": config.frontend, "atoms": atoms}
        for name, value in results.items():
            if isinstance(value, ApproxPair):
                entry = _pair_json(value, atoms)
                if config.trace:
                    entry["trace"] = [_pair_json(p, atoms) for p in traces[name]]
                doc[name] = entry
            elif name == "partial-stable":
                doc[name] = _pairs_json(value, atoms)
            elif name == "convex-kk":
                entry = {"members": _sets_json(value)}
                if config.trace:
                    entry["trace"] = [_sets_json(s) for s in traces[name]]
                doc[name] = entry
            else:
                doc[name] = _sets_json(value)
        print(json.dumps(doc, indent=2, sort_keys=False))
        return 0

    for name, value in results.items():
        if isinstance(value, ApproxPair):
            print(f"{name}: {_assignment_text(value, atoms)}")
            if config.trace:
                for i, p in enumerate(traces[name]):
                    print(f"  step {i}: {_assignment_text(p, atoms)}")
        elif name == "partial-stable":
            if value:
                rendered = ", ".join(
                    "[" + _assignment_text(p, atoms) + "]"
                    for p in sorted(value, key=lambda p: (sorted(p.lower), sorted(p.upper)))
                )
            else:
                rendered = "(none)"
            print(f"{name}: {rendered}")
        else:
            print(f"{name}: {_sets_text(value)}")
            if name == "convex-kk" and config.trace:
                for i, s in enumerate(traces[name]):
                    print(f"  step {i}: {_sets_text(s)}")
    return 0


# -- check -------------------------------------------------------------------


def _load_tabulated(text: str):
    try:
        doc = json.loads(text)
        universe = frozenset(doc["universe"])
        lat = PowersetLattice(universe)
        table = {}
        for entry in doc["pairs"]:
            in_lo, in_hi = entry["in"]
            out_lo, out_hi = entry["out"]
            table[(frozenset(in_lo), frozenset(in_hi))] = (
                frozenset(out_lo),
                frozenset(out_hi),
            )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed approximator table: {exc}") from exc
    missing = [
        key for key in itertools.product(lat.elements, repeat=2) if key not in table
    ]
    if missing:
        raise ValueError(f"approximator table is not total: missing {missing[0]!r}")
    return lat, Approximator(lat, table, name="tabulated")


def _cmd_check(args) -> int:
    text = _read_source(args.source)
    if args.frontend == "tab":
        lat, approximator = _load_tabulated(text)
    else:
        lat, approximator = _load_frontend(args.frontend, text)
    base_op = approximator.operator

    checks = [("precision-monotone", is_precision_monotone(approximator))]
    if base_op is not None:
        checks.append(("approximates-operator", brackets_operator(approximator, base_op)))
        checks.append(("exact-on-diagonal", is_exact_approximator(approximator, base_op)))
    else:
        checks.append(("approximates-operator", None))
        checks.append(("exact-on-diagonal", None))
    checks.append(("symmetric", is_symmetric(approximator)))

    ok = all(c for _, c in checks if c is not None)
    if args.fmt == "json":
        doc = {
            "schema": "aft/1",
            "mode": "check",
            "ok": bool(ok),
            "checks": [
                {
                    "law": law,
                    "ok": None if c is None else bool(c),
                    "witness": None if c is None or c.holds else repr(c.witness),
                }
                for law, c in checks
            ],
        }
        print(json.dumps(doc, indent=2))
    else:
        for law, c in checks:
            if c is None:
                print(f"{law}: skipped (no base operator)")
            elif c.holds:
                print(f"{law}: ok")
            else:
                print(f"{law}: FAIL  witness: {c.witness!r}")
    return 0 if ok else 2


# -- compare -----------------------------------------------------------------


def _compare_one(prog_text: str):
    prog = parse_program(prog_text)
    lat = program_lattice(prog)
    base_op = tp(prog, lat)
    kk_fit, _ = kripke_kleene(fitting(prog, lat))
    kk_ult, _ = kripke_kleene(ultimate(lat, base_op))
    kk_cvx, _ = convex_kripke_kleene(lat, base_op)
    interval_ult = embed_interval(kk_ult)
    return {
        "kk_fit": kk_fit,
        "kk_ult": kk_ult,
        "kk_cvx": kk_cvx,
        "fit_leq_ult": precision_leq(kk_fit, kk_ult),
        "ult_strict": kk_fit != kk_ult,
        "cvx_within_ult": kk_cvx <= interval_ult,
        "cvx_strict": kk_cvx != interval_ult,
    }


def _cmd_compare(args) -> int:
    if args.corpus is not None:
        programs = random_programs(args.corpus, seed=args.seed)
        ult_gains = 0
        cvx_gains = 0
        for prog in programs:
            row = _compare_one(prog.to_text())
            ult_gains += row["ult_strict"]
            cvx_gains += row["cvx_strict"]
        if args.fmt == "json":
            doc = {
                "schema": "aft/1",
                "mode": "compare-corpus",
                "seed": args.seed,
                "programs": len(programs),
                "gains": {
                    "ultimate_over_fitting": ult_gains,
                    "convex_over_ultimate_interval": cvx_gains,
                },
            }
            print(json.dumps(doc, indent=2))
        else:
            print(f"programs: {len(programs)} (seed {args.seed})")
            print(f"ultimate-kk strictly more precise than fitting-kk: {ult_gains}")
            print(f"convex-kk strictly smaller than ultimate-kk interval: {cvx_gains}")
        return 0

    if args.source is None:
        raise ValueError("compare needs a file or --corpus N")
    text = _read_source(args.source)
    prog = parse_program(text)
    atoms = sorted(prog.atoms)
    row = _compare_one(text)
    if args.fmt == "json":
        doc = {
            "schema": "aft/1",
            "mode": "compare",
            "atoms": atoms,
            "fitting-kk": _pair_json(row["kk_fit"], atoms),
            "ultimate-kk": _pair_json(row["kk_ult"], atoms),
            "convex-kk": {"members": _sets_json(row["kk_cvx"])},
            "comparison": {
                "fitting_leq_ultimate": row["fit_leq_ult"],
                "ultimate_strict_gain": row["ult_strict"],
                "convex_within_ultimate_interval": row["cvx_within_ult"],
                "convex_strict_gain": row["cvx_strict"],
            },
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"fitting-kk: {_assignment_text(row['kk_fit'], atoms)}")
        print(f"ultimate-kk: {_assignment_text(row['kk_ult'], atoms)}")
        print(f"convex-kk: {_sets_text(row['kk_cvx'])}")
        print(
            "ultimate-kk vs fitting-kk: "
            + ("strictly more precise" if row["ult_strict"] else "equal")
        )
        print(
            "convex-kk vs ultimate-kk interval: "
            + ("strictly smaller" if row["cvx_strict"] else "equal")
        )
    return 0


# -- entry -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aft",
        description="Fixpoint semantics of logic programs and dialectical frameworks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for frontend, blurb in (("lp", "normal logic program"), ("adf", "dialectical framework")):
        s = sub.add_parser(frontend, help=f"compute semantics of a {blurb}")
        s.add_argument("source", metavar="file", help="input file, or - for stdin")
        s.add_argument(
            "--semantics",
            default="all",
            help="comma-separated subset of: " + ", ".join(SEMANTICS) + ", all",
        )
        s.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
        s.add_argument("--trace", action="store_true", help="include iteration traces")
        s.add_argument("--validate", action="store_true", help="verify the operator laws first")
        s.add_argument("--seed", type=int, default=DEFAULT_SEED, help=argparse.SUPPRESS)
        s.set_defaults(func=_cmd_run, frontend=frontend)

    c = sub.add_parser("check", help="law-by-law validation of the induced operator")
    c.add_argument("frontend", choices=("lp", "adf", "tab"))
    c.add_argument("source", metavar="file")
    c.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    c.set_defaults(func=_cmd_check)

    m = sub.add_parser("compare", help="precision of interval, ultimate and convex constructions")
    m.add_argument("source", metavar="file", nargs="?")
    m.add_argument("--corpus", type=int, metavar="N", help="scan N seeded random programs instead")
    m.add_argument("--seed", type=int, default=DEFAULT_SEED)
    m.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    m.set_defaults(func=_cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AftError as exc:
        print(f"internal law violated: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
