"""Command-line front end.

Subcommands wire the catalog, constructions, detector, and search oracle
together.  Machine-readable output goes to stdout (plain text by default,
`--format json` for structure); diagnostics go to stderr.  Exit codes:

* 0: success (value found, construction verified, witness found, all agree)
* 2: usage errors (bad flags, bad pattern, malformed input files, guards)
* 3: exhausted with no witness (detect), or an at-least query refuted
* 4: formula without a value (out of range, unknown constant)
* 5: no construction available
* 6: construction failed verification
* 7: inconclusive (budget ran out) or verification skipped without --allow-skip
* 8: verify found a disagreement
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .colorfile import ColoringFormatError, read_coloring, write_coloring
from .core import (
    BudgetExceeded,
    InvalidConstruction,
    InvalidEdge,
    InvalidPattern,
    InvalidVertex,
    Kind,
    NotConstructible,
    PatternSpec,
    VerificationFailed,
    Witness,
)
from .construct import extremal_for
from .detect import find_rainbow
from .formulas import CYCLE_MODES, PROVEN, ar_lookup
from .patterns import PatternSyntaxError, parse_pattern, render_pattern
from .search import (
    INCONCLUSIVE,
    REFUTED,
    SEARCH_MAX_N,
    WITNESS,
    decide_ar_at_least,
    exact_ar,
)

_USAGE_ERRORS = (
    PatternSyntaxError,
    InvalidPattern,
    InvalidEdge,
    InvalidVertex,
    InvalidConstruction,
    ColoringFormatError,
    BudgetExceeded,
    FileNotFoundError,
    ValueError,
)


def _emit(args: argparse.Namespace, payload: dict[str, Any], text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _render_witness(w: Witness) -> str:
    return "; ".join(
        f"{comp} {'-'.join(str(v) for v in verts)}" for comp, verts in w.placements
    )


def _witness_payload(w: Witness) -> list[dict[str, Any]]:
    return [
        {"component": str(comp), "vertices": list(verts)}
        for comp, verts in w.placements
    ]


# ============================================================
# Subcommands
# ============================================================

def _cmd_formula(args: argparse.Namespace) -> int:
    p = parse_pattern(args.pattern)
    res = ar_lookup(p, args.n, cycle_mode=args.cycle_mode)
    payload = {
        "pattern": render_pattern(p),
        "n": args.n,
        "value": res.value,
        "status": res.domain_status,
        "provenance": res.provenance or None,
    }
    if res.value is None:
        suffix = f" ({res.provenance})" if res.provenance else ""
        _emit(args, payload, f"{res.domain_status}{suffix}")
        return 4
    _emit(args, payload, f"{res.value} ({res.provenance}, {res.domain_status})")
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    p = parse_pattern(args.pattern)
    try:
        rep = extremal_for(
            args.n,
            p,
            verify_bound=args.verify_bound,
            use_clique_plus_two=args.clique_plus_two,
        )
    except NotConstructible as exc:
        print(f"not constructible: {exc}", file=sys.stderr)
        return 5
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 6
    write_coloring(args.out, rep.coloring)
    skipped = rep.verified is None
    payload = {
        "pattern": render_pattern(p),
        "n": args.n,
        "colors": rep.claimed_colors,
        "rule": rep.rule,
        "verified": rep.verified,
        "out": args.out,
    }
    state = "verification skipped" if skipped else "verified"
    _emit(
        args,
        payload,
        f"{rep.claimed_colors} colors ({rep.rule}, {state}) -> {args.out}",
    )
    if skipped and not args.allow_skip:
        return 7
    return 0


def _cmd_detect(args: argparse.Namespace) -> int:
    p = parse_pattern(args.pattern)
    coloring = read_coloring(args.coloring)
    out = find_rainbow(coloring, p, budget=args.budget)
    payload = {
        "pattern": render_pattern(p),
        "n": coloring.n,
        "witness": _witness_payload(out.witness) if out.witness else None,
        "exhausted": out.exhausted,
        "nodes": out.nodes_explored,
    }
    if out.witness is not None:
        _emit(args, payload, f"witness: {_render_witness(out.witness)}")
        return 0
    if out.exhausted:
        _emit(
            args,
            payload,
            f"no rainbow {render_pattern(p)} (exhausted, {out.nodes_explored} nodes)",
        )
        return 3
    _emit(
        args,
        payload,
        f"inconclusive (budget ran out after {out.nodes_explored} nodes)",
    )
    return 7


def _cmd_search(args: argparse.Namespace) -> int:
    p = parse_pattern(args.pattern)
    if args.at_least is None:
        res = exact_ar(
            args.n, p, budget=args.budget, tasks=args.tasks, engine=args.engine
        )
        if args.witness_out and res.witness_coloring is not None:
            write_coloring(args.witness_out, res.witness_coloring)
        payload = {
            "pattern": render_pattern(p),
            "n": args.n,
            "value": res.value,
            "exhausted": res.exhausted,
            "stats": {
                "nodes": res.stats.nodes,
                "prunes_by_rainbow": res.stats.prunes_by_rainbow,
                "prunes_by_bound": res.stats.prunes_by_bound,
                "elapsed": res.stats.elapsed,
            },
        }
        kind = "exact" if res.exhausted else "lower bound, budget ran out"
        _emit(
            args,
            payload,
            f"AR({args.n}, {render_pattern(p)}) = {res.value} ({kind}; "
            f"nodes={res.stats.nodes} rainbow_prunes={res.stats.prunes_by_rainbow} "
            f"bound_prunes={res.stats.prunes_by_bound} "
            f"elapsed={res.stats.elapsed:.2f}s)",
        )
        return 0 if res.exhausted else 7
    dec = decide_ar_at_least(
        args.n, p, args.at_least, budget=args.budget, tasks=args.tasks,
        engine=args.engine,
    )
    payload = {
        "pattern": render_pattern(p),
        "n": args.n,
        "at_least": args.at_least,
        "status": dec.status,
        "stats": {
            "nodes": dec.stats.nodes,
            "prunes_by_rainbow": dec.stats.prunes_by_rainbow,
            "prunes_by_bound": dec.stats.prunes_by_bound,
            "elapsed": dec.stats.elapsed,
        },
    }
    if dec.status == WITNESS:
        assert dec.coloring is not None
        if args.witness_out:
            write_coloring(args.witness_out, dec.coloring)
        _emit(
            args,
            payload,
            f"witness: {dec.coloring.color_count} colors with no rainbow "
            f"{render_pattern(p)}",
        )
        return 0
    if dec.status == REFUTED:
        _emit(
            args,
            payload,
            f"refuted: no rainbow-free coloring of K_{args.n} has "
            f"{args.at_least} or more colors",
        )
        return 3
    assert dec.status == INCONCLUSIVE
    _emit(args, payload, f"inconclusive after {dec.stats.nodes} nodes")
    return 7


def _cmd_verify(args: argparse.Namespace) -> int:
    p = parse_pattern(args.pattern)
    if args.n > SEARCH_MAX_N:
        print(
            f"verify needs the search oracle, which is guarded at "
            f"n <= {SEARCH_MAX_N}",
            file=sys.stderr,
        )
        return 2
    is_single_cycle = len(p.components) == 1 and p.components[0].kind is Kind.CYCLE
    if is_single_cycle:
        modes = list(CYCLE_MODES) if args.cycle_mode == "both" else [args.cycle_mode]
    else:
        modes = [None]

    legs = []
    for mode in modes:
        res = ar_lookup(p, args.n, cycle_mode=mode or "oracle_corrected")
        value = res.value if res.domain_status == PROVEN else None
        legs.append((mode, value, res.provenance, res.domain_status))
    if all(value is None for _, value, _, _ in legs):
        print(f"no proven catalog value for {render_pattern(p)} at n={args.n}",
              file=sys.stderr)
        return 4

    sres = exact_ar(args.n, p, budget=args.budget, tasks=args.tasks)
    if not sres.exhausted:
        print("search budget ran out; cannot adjudicate", file=sys.stderr)
        return 7

    construction: int | None = None
    construction_note = "unavailable"
    broken = False
    try:
        rep = extremal_for(args.n, p)
        construction = rep.claimed_colors
        construction_note = str(construction)
    except NotConstructible:
        pass
    except VerificationFailed as exc:
        broken = True
        construction_note = f"failed verification ({exc})"

    mismatch = broken
    lines = [f"search: {sres.value}"]
    leg_payload = []
    for mode, value, provenance, status in legs:
        label = f"formula[{mode}]" if mode else "formula"
        if value is None:
            lines.append(f"{label}: no proven value ({status})")
            leg_payload.append(
                {"mode": mode, "value": None, "provenance": provenance or None}
            )
            continue
        ok = value == sres.value
        mismatch = mismatch or not ok
        lines.append(
            f"{label}: {value} ({provenance})" + ("" if ok else "  <- MISMATCH")
        )
        leg_payload.append(
            {"mode": mode, "value": value, "provenance": provenance}
        )
    if construction is not None and construction != sres.value:
        mismatch = True
        construction_note += "  <- MISMATCH"
    lines.append(f"construction: {construction_note}")

    payload = {
        "pattern": render_pattern(p),
        "n": args.n,
        "search": sres.value,
        "formula": leg_payload,
        "construction": construction,
        "agree": not mismatch,
    }
    if mismatch:
        _emit(args, payload, "mismatch:\n  " + "\n  ".join(lines))
        return 8
    single = legs[0][1]
    _emit(
        args,
        payload,
        f"agree: formula {single}, search {sres.value}, "
        f"construction {construction if construction is not None else 'unavailable'}",
    )
    return 0


_FAMILIES = {
    "matching": ["2P2", "3P2", "4P2", "5P2"],
    "kp4tp2": ["P4", "P4+P2", "P4+2P2", "2P4", "2P4+3P2"],
    "kp3tp2": ["P3+P2", "P3+2P2", "2P3+2P2", "2P3+3P2"],
    "p5tp2": ["P5", "P5+P2", "P5+2P2", "P5+3P2"],
}


def _cmd_table(args: argparse.Namespace) -> int:
    rows = []
    for expr in _FAMILIES[args.family]:
        p = parse_pattern(expr)
        for n in range(p.vertex_count, args.max_n + 1):
            res = ar_lookup(p, n)
            rows.append(
                {
                    "pattern": render_pattern(p),
                    "n": n,
                    "value": res.value,
                    "status": res.domain_status,
                    "provenance": res.provenance or None,
                }
            )
    if args.format == "json":
        print(json.dumps(rows))
        return 0
    print("pattern\tn\tvalue\tstatus\tprovenance")
    for row in rows:
        value = "-" if row["value"] is None else row["value"]
        print(
            f"{row['pattern']}\t{row['n']}\t{value}\t{row['status']}\t"
            f"{row['provenance'] or '-'}"
        )
    return 0


# ============================================================
# Parser and entry point
# ============================================================

def _add_format(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=("text", "json"), default="text")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antiramsey",
        description="Anti-Ramsey values: formula catalog, extremal "
        "constructions, rainbow detection, and an exact search oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("formula", help="look up a catalog value")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cycle-mode", choices=CYCLE_MODES, default="oracle_corrected")
    _add_format(sp)
    sp.set_defaults(func=_cmd_formula)

    sp = sub.add_parser("construct", help="emit an extremal coloring")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--verify-bound", type=int, default=12)
    sp.add_argument("--allow-skip", action="store_true",
                    help="exit 0 even when verification was skipped")
    sp.add_argument("--clique-plus-two", action="store_true",
                    help="enable the perfect-matching-host construction")
    _add_format(sp)
    sp.set_defaults(func=_cmd_construct)

    sp = sub.add_parser("detect", help="look for a rainbow copy in a coloring file")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--budget", type=int, default=None)
    _add_format(sp)
    sp.set_defaults(func=_cmd_detect)

    sp = sub.add_parser("search", help="run the exact oracle")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--at-least", type=int, default=None)
    sp.add_argument("--tasks", type=int, default=1)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--engine", choices=("auto", "numba", "python"), default="auto")
    sp.add_argument("--witness-out", default=None)
    _add_format(sp)
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("verify", help="cross-check formula, search, construction")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cycle-mode", choices=("both",) + CYCLE_MODES, default="both")
    sp.add_argument("--tasks", type=int, default=1)
    sp.add_argument("--budget", type=int, default=None)
    _add_format(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("table", help="print family values with provenance")
    sp.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    sp.add_argument("--max-n", type=int, required=True)
    _add_format(sp)
    sp.set_defaults(func=_cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main(sys.argv[1:]))
