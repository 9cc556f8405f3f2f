"""Command line front end: ``krkit <command> ...``.

Every command prints deterministic output (JSON with sorted keys by default).
Exit status is 0 when all requested checks pass, 1 when any check fails and 2
for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import configparser
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Sequence

from . import branching, mcoeff, weylseq
from . import cartan as C
from . import straighten as S
from .qnum import render
from .report import OutcomeSet

VERIFY_TARGETS = ("sequences", "branching", "m-identities", "modules", "straighten")
VERIFY_CHOICES = VERIFY_TARGETS + ("all",)
FORMATS = ("json", "csv", "text")

DEFAULTS = {
    "types": ",".join(C.TYPES),
    "ell_max": "6",
    "bound": "4",
    "oracle_bound": "2",
    "fuel": str(S.DEFAULT_FUEL),
    "format": "json",
}


class UsageError(Exception):
    pass


# configuration

def load_config(path: Optional[str]) -> Dict[str, str]:
    cfg = dict(DEFAULTS)
    if path:
        parser = configparser.ConfigParser()
        if not parser.read(path):
            raise UsageError(f"cannot read config file {path}")
        if parser.has_section("krkit"):
            for k, v in parser.items("krkit"):
                k = k.replace("-", "_")
                if k not in DEFAULTS:
                    raise UsageError(f"unknown config key {k!r}")
                cfg[k] = v
    return cfg


def _positive(name: str, value) -> int:
    try:
        n = int(value)
    except (TypeError, ValueError):
        raise UsageError(f"{name} must be an integer, got {value!r}")
    if n < 1:
        raise UsageError(f"{name} must be positive")
    return n


def _types(value: str) -> List[str]:
    tags = [t.strip() for t in value.split(",") if t.strip()]
    for t in tags:
        if t not in C.TYPES:
            raise UsageError(f"unknown type {t!r}; expected one of {', '.join(C.TYPES)}")
    if not tags:
        raise UsageError("no types selected")
    return tags


def threads() -> int:
    raw = os.environ.get("KRKIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"KRKIT_THREADS must be an integer, got {raw!r}")


# reports

def make_report(suite: str, outcomes: OutcomeSet, wall: float) -> Dict[str, Any]:
    failed = any(o.failed for o in outcomes.values())
    empty = any(o.checked == 0 for o in outcomes.values()) or not outcomes
    status = "fail" if failed else ("partial" if empty else "pass")
    counters = {o.name: {"checked": o.checked, "failed": o.failed} for o in outcomes.values()}
    examples = [dict(ce, check=o.name) for o in outcomes.values() for ce in o.counterexamples]
    return {
        "suite": suite,
        "status": status,
        "counters": counters,
        "counterexamples": examples,
        "wall_time": round(wall, 3),
    }


def _checks_outcomes(out: OutcomeSet, prefix: str, checks: Dict[str, bool], payload: dict,
                     extra: Sequence[dict] = ()):
    for name, ok in checks.items():
        o = out.get_or_add(f"{prefix}{name}")
        o.record(ok, lambda: dict(payload, details=list(extra)[:3]))


def suite_sequences(types: Sequence[str]) -> OutcomeSet:
    out = OutcomeSet()
    for tag in types:
        cd = C.build(tag)
        for which in "IJ":
            found = weylseq.find_sequences(cd, which)
            out.get_or_add(f"found_{which}").record(bool(found), {"type": tag})
        rep = weylseq.verify_lemma31(cd)
        _checks_outcomes(out, "", rep.checks, {"type": tag, "i": rep.word_I, "j": rep.word_J})
    return out


def suite_branching(types: Sequence[str], ell_max: int) -> OutcomeSet:
    out = OutcomeSet()
    for tag in types:
        cd = C.build(tag)
        for ell in range(1, ell_max + 1):
            rep = branching.verify_C1(ell, cd)
            _checks_outcomes(out, "", rep.checks, {"type": tag, "ell": ell}, rep.counterexamples)
    return out


def suite_m_identities(types: Sequence[str], bound: int, oracle_bound: int) -> OutcomeSet:
    out = OutcomeSet()
    rep = mcoeff.verify_identities(bound)
    for name in mcoeff.IDENTITIES:
        o = out.get_or_add(name)
        o.checked += rep.checked[name]
        o.failed += rep.violations[name]
        o.counterexamples += [ce for ce in rep.counterexamples if ce.get("identity") == name][:10]
    o = out.get_or_add("closed_formula_vs_oracle")
    for tag in types:
        r = mcoeff.verify_oracle(C.build(tag), oracle_bound)
        o.checked += r.oracle_checked
        o.failed += r.oracle_violations
        o.counterexamples += r.counterexamples[:10 - len(o.counterexamples)]
    return out


def suite_modules(names: Sequence[str]) -> OutcomeSet:
    from .uqmod import run_suite

    out = OutcomeSet()
    for name in names:
        for key, o in run_suite(name).items():
            o.name = f"{name}.{key}"
            out[o.name] = o
    return out


def run_target(target: str, cfg: Dict[str, Any]) -> Dict[str, Any]:
    start = time.perf_counter()
    if target == "sequences":
        outcomes = suite_sequences(cfg["types"])
    elif target == "branching":
        outcomes = suite_branching(cfg["types"], cfg["ell_max"])
    elif target == "m-identities":
        outcomes = suite_m_identities(cfg["types"], cfg["bound"], cfg["oracle_bound"])
    elif target == "modules":
        outcomes = suite_modules(cfg.get("suites") or _module_suites())
    elif target == "straighten":
        outcomes = S.verify_straighten(quick=cfg.get("quick", False), tags=cfg["types"])
    else:
        raise UsageError(f"unknown verify target {target!r}")
    return make_report(target, outcomes, time.perf_counter() - start)


def _module_suites():
    from .uqmod import SUITES

    return SUITES


def run_many(targets: Sequence[str], cfg: Dict[str, Any]) -> List[Dict[str, Any]]:
    n = min(threads(), len(targets))
    if n <= 1:
        return [run_target(t, cfg) for t in targets]
    with ProcessPoolExecutor(max_workers=n) as pool:
        futures = [pool.submit(run_target, t, cfg) for t in targets]
        return [f.result() for f in futures]


# output

def _cell(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True, default=str)
    return v


def emit(data: Any, fmt: str, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(json.dumps(data, sort_keys=True, indent=2, default=str) + "\n")
        return
    rows = data if isinstance(data, list) else [data]
    if fmt == "csv":
        buf = io.StringIO()
        if rows and "suite" in rows[0]:
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["suite", "check", "status", "checked", "failed"])
            for r in rows:
                for name, c in sorted(r["counters"].items()):
                    w.writerow([r["suite"], name, "pass" if c["failed"] == 0 and c["checked"] else
                                ("fail" if c["failed"] else "partial"), c["checked"], c["failed"]])
        else:
            keys = sorted({k for r in rows for k in r})
            w = csv.DictWriter(buf, keys, lineterminator="\n")
            w.writeheader()
            for r in rows:
                w.writerow({k: _cell(v) for k, v in r.items()})
        stream.write(buf.getvalue())
        return
    for r in rows:
        if "suite" in r:
            stream.write(f"{r['suite']}: {r['status']} ({r['wall_time']}s)\n")
            for name, c in sorted(r["counters"].items()):
                stream.write(f"  {name}: {c['checked'] - c['failed']}/{c['checked']}\n")
            for ce in r["counterexamples"][:5]:
                stream.write(f"  counterexample: {json.dumps(ce, sort_keys=True, default=str)}\n")
        else:
            for k in sorted(r):
                stream.write(f"{k}: {_cell(r[k])}\n")
            stream.write("\n")


# commands

def cmd_cartan(args, cfg) -> int:
    emit([C.summary(C.build(t)) for t in cfg["types"]], cfg["format"])
    return 0


def cmd_seq(args, cfg) -> int:
    rows = []
    ok = True
    for tag in cfg["types"]:
        cd = C.build(tag)
        rep = weylseq.verify_lemma31(cd)
        ok &= rep.passed
        rows.append({
            "type": tag,
            "i": [str(w) for w in weylseq.find_sequences(cd, "I")],
            "j": [str(w) for w in weylseq.find_sequences(cd, "J")],
            "canonical_i": rep.word_I,
            "canonical_j": rep.word_J,
            "checks": rep.checks,
        })
    emit(rows, cfg["format"])
    return 0 if ok else 1


def cmd_branch(args, cfg) -> int:
    cd = C.build(args.type)
    rep = branching.verify_C1(args.ell, cd)
    if cfg["format"] == "json":
        emit({"type": args.type, "ell": args.ell, "size_S": rep.size_S, "size_T": rep.size_T,
              "total_dim": rep.total_dim, "checks": rep.checks,
              "rows": branching.branch_rows(args.ell, cd)}, "json")
    else:
        emit(branching.branch_rows(args.ell, cd), cfg["format"])
    return 0 if rep.passed else 1


def cmd_verify(args, cfg) -> int:
    targets = list(VERIFY_TARGETS) if args.target == "all" else [args.target]
    if args.suite:
        from .uqmod import SUITES

        for s in args.suite:
            if s not in SUITES:
                raise UsageError(f"unknown module suite {s!r}; expected one of {', '.join(SUITES)}")
        cfg["suites"] = tuple(args.suite)
    cfg["quick"] = args.quick
    reports = run_many(targets, cfg)
    emit(reports, cfg["format"])
    return 0 if all(r["status"] == "pass" for r in reports) else 1


def _axioms(args) -> S.AxiomSet:
    tag = args.type
    if args.axioms == "kr":
        if tag in C.TYPES:
            return S.kr_axioms(tag, args.ell)
        if tag == "A1a1":
            return S.a1_kr_axioms(args.ell)
        raise UsageError(f"KR axioms need one of {', '.join(C.TYPES)} or A1a1")
    if not args.highest:
        raise UsageError("--axioms hw needs --highest, e.g. --highest 1,1")
    try:
        lam = tuple(int(x) for x in args.highest.split(","))
    except ValueError:
        raise UsageError(f"bad --highest {args.highest!r}")
    if len(lam) != len(C.build(tag).nodes):
        raise UsageError("--highest has the wrong number of entries")
    return S.highest_weight_axioms(tag, lam)


def cmd_norm(args, cfg) -> int:
    try:
        X = S.parse_word(args.expr)
        Y = S.parse_word(args.pair) if args.pair else X
    except ValueError as exc:
        raise UsageError(str(exc))
    ax = _axioms(args)
    eng = S.Straightener(ax, cfg["fuel"], keep_trace=args.trace)
    r = S.inner(X, Y, ax, engine=eng)
    D = ax.cd.D
    data = {
        "left": S.word_str(X, "w"),
        "right": S.word_str(Y, "w"),
        "type": args.type,
        "resolved": r.resolved,
        "exhausted": r.exhausted,
        "value": render(r.value, D) if r.value is not None else None,
        "residual": None if r.resolved or r.exhausted else r.render(D, "w"),
        "steps": eng.steps,
    }
    if args.axioms == "kr":
        data["ell"] = args.ell
    if args.trace:
        data["trace"] = eng.trace
    emit(data, cfg["format"])
    return 0 if r.resolved else 1


def build_parser() -> argparse.ArgumentParser:
    def common_flags(default):
        c = argparse.ArgumentParser(add_help=False)
        c.add_argument("--config", default=default, help="INI file with a [krkit] section")
        c.add_argument("--format", default=default, choices=FORMATS)
        c.add_argument("--types", default=default, help="comma-separated type tags")
        return c

    # subcommands must not reset flags given before the command name
    common = common_flags(argparse.SUPPRESS)
    p = argparse.ArgumentParser(prog="krkit", parents=[common_flags(None)],
                                description="Exact checks for near-adjoint KR modules.")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("cartan", parents=[common], help="Cartan data, theta_1, theta_J, gamma_1, gamma_2")
    sub.add_parser("seq", parents=[common], help="reflection sequences i and j with structural checks")

    b = sub.add_parser("branch", parents=[common], help="classical decomposition data for one level")
    b.add_argument("--type", required=True, choices=C.TYPES)
    b.add_argument("--ell", type=int, required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("target", choices=VERIFY_CHOICES)
    v.add_argument("--suite", action="append", help="module suite (repeatable)")
    v.add_argument("--ell-max", type=int)
    v.add_argument("--bound", type=int, help="grid bound for the m-identities")
    v.add_argument("--oracle-bound", type=int, help="grid bound for the coproduct oracle")
    v.add_argument("--quick", action="store_true", help="smaller straightening grids")

    n = sub.add_parser("norm", parents=[common], help="evaluate (X w, Y w) from axioms")
    n.add_argument("expr", help='monomial such as "e2 e1 e0 w"')
    n.add_argument("--pair", help="right-hand monomial (default: the same as expr)")
    n.add_argument("--type", required=True)
    n.add_argument("--ell", type=int, default=1)
    n.add_argument("--axioms", choices=("kr", "hw"), default="kr")
    n.add_argument("--highest", help="highest weight for --axioms hw, e.g. 1,1")
    n.add_argument("--fuel", type=int)
    n.add_argument("--trace", action="store_true")
    return p


def resolve_config(args) -> Dict[str, Any]:
    raw = load_config(args.config)
    for key in ("types", "format"):
        if getattr(args, key, None):
            raw[key] = getattr(args, key)
    for key in ("ell_max", "bound", "oracle_bound", "fuel"):
        val = getattr(args, key, None)
        if val is not None:
            raw[key] = str(val)
    if raw["format"] not in FORMATS:
        raise UsageError(f"format must be one of {', '.join(FORMATS)}")
    cfg: Dict[str, Any] = {"format": raw["format"], "types": _types(raw["types"])}
    for key in ("ell_max", "bound", "oracle_bound", "fuel"):
        cfg[key] = _positive(key, raw[key])
    if cfg["bound"] < 2:
        raise UsageError("bound must be at least 2")
    return cfg


COMMANDS = {"cartan": cmd_cartan, "seq": cmd_seq, "branch": cmd_branch,
            "verify": cmd_verify, "norm": cmd_norm}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        cfg = resolve_config(args)
        if args.command == "norm" and args.type not in C.TYPES + C.FIXTURES:
            raise UsageError(f"unknown type {args.type!r}")
        if args.command == "branch" and args.ell < 1:
            raise UsageError("--ell must be positive")
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"krkit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
