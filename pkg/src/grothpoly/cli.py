"""
Batch verification driver.

Builds (or loads from cache) the Schubert and Grothendieck tables for S_n,
fans the requested checks across worker processes, and emits a deterministic
machine-readable report.
"""
from __future__ import annotations

import argparse
import concurrent.futures
import json
import multiprocessing
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import cache, perms, pipedreams, poly, posets, polytopes
from .verdicts import Verdict

ENGINE = "grothpoly 0.1.0"

ALL_CHECKS = (
    "conj1",
    "conj2",
    "conj3",
    "conj4",
    "coeff",
    "mobius",
    "superset",
    "fms",
    "converse",
    "oracle",
    "euler",
    "rajchgot",
)

DEFAULT_MAX_N = 8


@dataclass
class RunConfig:
    n: int = 5
    checks: Tuple[str, ...] = ALL_CHECKS
    jobs: int = 1
    cache_dir: Optional[str] = None
    fmt: str = "json"
    perm: Optional[tuple] = None
    timings: bool = False

    def validate(self) -> None:
        max_n = int(os.environ.get("GROTH_MAX_N", DEFAULT_MAX_N))
        if not 2 <= self.n <= max_n:
            raise ValueError(f"n={self.n} outside the supported range 2..{max_n}")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.fmt not in ("json", "text"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.perm is not None and len(self.perm) != self.n:
            raise ValueError("--perm length must match --n")


# Shared read-only state for fork-based workers: (config, G table, S table,
# pipe dream buckets or None).
_CTX = None


def _skip(reason: str) -> dict:
    return {"status": "skip", "reason": reason}


def _from_verdict(v: Verdict) -> dict:
    out = {"status": "pass" if v.ok else "fail"}
    if v.witness is not None:
        out["witness"] = _jsonable(v.witness)
    if v.detail:
        out["detail"] = v.detail
    if v.info:
        out["info"] = _jsonable(v.info)
    return out


def _jsonable(obj):
    if isinstance(obj, (tuple, list, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(x) for x in items]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    return obj


def _check_one(w: tuple) -> dict:
    config, table_g, table_s, pd_g, pd_s = _CTX
    started = time.perf_counter()
    g = table_g[w]
    s = table_s[w]
    record = {
        "perm": perms.format_perm(w),
        "length": perms.length(w),
        "deg_g": g.degree(),
        "rajcode": list(perms.rajcode(w)),
        "checks": {},
    }
    checks: Dict[str, dict] = record["checks"]
    for name in config.checks:
        if name == "conj1":
            checks[name] = _from_verdict(posets.check_conjecture_1(w, g))
        elif name == "conj2":
            checks[name] = _from_verdict(posets.check_conjecture_2(w, g))
        elif name == "conj3":
            checks[name] = _from_verdict(posets.check_conjecture_3(w, g))
        elif name == "conj4":
            checks[name] = _from_verdict(polytopes.check_conjecture_4(w, g))
        elif name == "coeff":
            checks[name] = _from_verdict(posets.check_conjecture_coeff(w, g))
        elif name == "mobius":
            if perms.is_zero_one(w):
                checks[name] = _from_verdict(posets.check_conjecture_mobius(w, g))
            else:
                checks[name] = _skip("not a zero-one permutation")
        elif name == "superset":
            checks[name] = _from_verdict(polytopes.check_superset(w, g))
        elif name == "fms":
            checks[name] = _from_verdict(polytopes.check_fms(w, s))
        elif name == "converse":
            checks[name] = _from_verdict(polytopes.check_prop_converse(w, g))
        elif name == "oracle":
            if pd_g is None:
                checks[name] = _skip(f"pipe dream oracle limited to n <= {pipedreams.MAX_GRID}")
            else:
                ok = pd_g[w] == g and pd_s[w] == s
                checks[name] = {"status": "pass" if ok else "fail"}
        elif name == "euler":
            if pd_g is None:
                checks[name] = _skip(f"pipe dream oracle limited to n <= {pipedreams.MAX_GRID}")
            else:
                total = pd_g[w].principal_specialization()
                ok = total == 1
                entry = {"status": "pass" if ok else "fail"}
                if not ok:
                    entry["witness"] = total
                checks[name] = entry
        elif name == "rajchgot":
            rc = perms.rajcode(w)
            ok = g.degree() == sum(rc) and g.leading_exponent() == rc
            entry = {"status": "pass" if ok else "fail"}
            if not ok:
                entry["witness"] = list(g.leading_exponent())
            checks[name] = entry
    if config.timings:
        record["seconds"] = round(time.perf_counter() - started, 6)
    return record


def run(config: RunConfig) -> Tuple[dict, int]:
    """Execute the configured batch; return (report, exit_status)."""
    config.validate()
    started = time.perf_counter()
    table_g = cache.load_or_build(config.cache_dir, config.n, "G")
    table_s = cache.load_or_build(config.cache_dir, config.n, "S")
    need_pd = bool({"oracle", "euler"} & set(config.checks))
    pd_g = pd_s = None
    if need_pd and config.n <= pipedreams.MAX_GRID:
        pd_g = pipedreams.pd_polynomial_all(config.n, "grothendieck")
        pd_s = pipedreams.pd_polynomial_all(config.n, "schubert")

    targets = [config.perm] if config.perm else perms.all_perms(config.n)

    global _CTX
    _CTX = (config, table_g, table_s, pd_g, pd_s)
    try:
        if config.jobs == 1:
            results = [_check_one(w) for w in targets]
        else:
            mp = multiprocessing.get_context("fork")
            with concurrent.futures.ProcessPoolExecutor(
                max_workers=config.jobs, mp_context=mp
            ) as pool:
                results = list(pool.map(_check_one, targets, chunksize=16))
    finally:
        _CTX = None

    results.sort(key=lambda rec: perms.parse_perm(rec["perm"]))
    counts = {"pass": 0, "fail": 0, "skip": 0}
    failures = []
    for rec in results:
        for name, entry in rec["checks"].items():
            counts[entry["status"]] += 1
            if entry["status"] == "fail":
                failures.append({"perm": rec["perm"], "check": name})
    report = {
        "meta": {
            "engine": ENGINE,
            "n": config.n,
            "checks": list(config.checks),
            "perm": perms.format_perm(config.perm) if config.perm else None,
        },
        "summary": {
            "permutations": len(results),
            "pass": counts["pass"],
            "fail": counts["fail"],
            "skip": counts["skip"],
            "all_pass": counts["fail"] == 0,
            "failures": failures,
        },
        "results": results,
    }
    if config.timings:
        report["summary"]["wall_seconds"] = round(time.perf_counter() - started, 6)
    return report, (0 if counts["fail"] == 0 else 1)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    lines = []
    checks = report["meta"]["checks"]
    header = ["perm", "len", "deg"] + checks
    lines.append("  ".join(header))
    for rec in report["results"]:
        row = [rec["perm"], str(rec["length"]), str(rec["deg_g"])]
        for name in checks:
            entry = rec["checks"].get(name, {"status": "-"})
            row.append(entry["status"])
        lines.append("  ".join(row))
    s = report["summary"]
    lines.append(
        f"permutations={s['permutations']} pass={s['pass']} "
        f"fail={s['fail']} skip={s['skip']}"
    )
    for failure in s["failures"]:
        lines.append(f"FAIL {failure['perm']} {failure['check']}")
    return "\n".join(lines) + "\n"


def print_permutation(config: RunConfig) -> str:
    """--mode print: dump the computed objects for a single permutation."""
    if config.perm is None:
        raise ValueError("--mode print requires --perm")
    w = config.perm
    table_g = cache.load_or_build(config.cache_dir, config.n, "G")
    table_s = cache.load_or_build(config.cache_dir, config.n, "S")
    g, s = table_g[w], table_s[w]
    lines = [
        f"perm {perms.format_perm(w)}",
        f"length {perms.length(w)}",
        f"rajcode {','.join(map(str, perms.rajcode(w)))}",
        f"schubert {s.to_text()}",
        f"grothendieck {g.to_text()}",
        "support:",
        polytopes.lattice_set_text(g.support()),
        "poset covers:",
        posets.build_Pw(w, g).hasse_text(),
        "recovered pair (bitmask y z):",
        polytopes.recover_pair(g.support()).to_text(),
    ]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grothverify",
        description="Exact batch verifier for Grothendieck/Schubert polynomial "
        "support structure over S_n.",
    )
    parser.add_argument("--n", type=int, default=5, help="symmetric group size (default 5)")
    parser.add_argument("--perm", type=str, default=None, help="single permutation, one-line notation")
    parser.add_argument(
        "--checks",
        type=str,
        default="all",
        help="comma-separated subset of: " + ",".join(ALL_CHECKS) + " (or 'all')",
    )
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser.add_argument("--cache-dir", type=str, default=None, help="polynomial cache directory")
    parser.add_argument("--format", type=str, default="json", choices=("json", "text"))
    parser.add_argument("--mode", type=str, default="verify", choices=("verify", "print", "cache"))
    parser.add_argument("--timings", action="store_true", help="include timing fields in the report")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    checks = ALL_CHECKS if args.checks == "all" else tuple(args.checks.split(","))
    perm = perms.parse_perm(args.perm) if args.perm else None
    n = len(perm) if perm else args.n
    return RunConfig(
        n=n,
        checks=checks,
        jobs=args.jobs,
        cache_dir=args.cache_dir,
        fmt=args.format,
        perm=perm,
        timings=args.timings,
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = config_from_args(args)
        config.validate()
    except (ValueError, SystemExit) as exc:
        if isinstance(exc, SystemExit):
            return 2 if exc.code else 0
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.mode == "print":
        sys.stdout.write(print_permutation(config))
        return 0
    if args.mode == "cache":
        if not config.cache_dir:
            print("error: --mode cache requires --cache-dir", file=sys.stderr)
            return 2
        cache.load_or_build(config.cache_dir, config.n, "G")
        cache.load_or_build(config.cache_dir, config.n, "S")
        return 0
    report, status = run(config)
    sys.stdout.write(render(report, config.fmt))
    return status


if __name__ == "__main__":
    sys.exit(main())
