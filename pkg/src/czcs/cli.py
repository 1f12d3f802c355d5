"""Command line front end.

Exit codes: 0 success, 1 a property check ran and failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import reference
from .construct import build_set, derived_params, enumerate_params, validate
from .gbf import ConstructionParams, OrderedPartition
from .seqcore import CorrelationProfile, DomainError, ZqSequence, profile
from .verify import (
    accs_profile,
    aacs_profile,
    cs_pairing_check,
    lemma1_check,
    lemma2_check,
    lemma3_check,
    lemma4_check,
    tail_cross_check,
    verify_czcs,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

HEADER_FIELDS = "m,q,delta,partition,lambda,M,N,Z"


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# serialization

def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def format_sequences(params: ConstructionParams, sequences: Sequence[ZqSequence]) -> str:
    M, N, Z = derived_params(params)
    meta = [
        params.m,
        params.q,
        params.delta,
        str(params.partition),
        " ".join(map(str, params.lam)),
        M,
        N,
        Z,
    ]
    lines = [f"# {HEADER_FIELDS}", "# " + ",".join(map(str, meta))]
    lines += [",".join(map(str, s.values)) for s in sequences]
    return "\n".join(lines) + "\n"


def _parse_meta(line: str) -> dict:
    fields = line.split(",")
    if len(fields) != 8:
        raise InputError(f"metadata line has {len(fields)} fields, expected 8")
    m, q, delta, part, lam, M, N, Z = (f.strip() for f in fields)
    try:
        blocks = [[int(i) for i in b.split()] for b in part.split("|")]
        return {
            "params": ConstructionParams(int(m), int(q), int(delta), OrderedPartition(blocks),
                                         tuple(int(x) for x in lam.split())),
            "q": int(q),
            "M": int(M),
            "N": int(N),
            "Z": int(Z),
        }
    except ValueError as exc:
        raise InputError(f"bad metadata line: {exc}") from exc


def parse_sequences(text: str, q: int | None = None) -> tuple[list[ZqSequence], dict | None]:
    """Read a sequence CSV; ``q`` overrides the modulus recorded in the header."""
    meta = None
    rows = []
    comments = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        try:
            rows.append([int(x) for x in line.split(",")])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer residue") from None
    if len(comments) >= 2 and comments[0] == HEADER_FIELDS:
        meta = _parse_meta(comments[1])
    if not rows:
        raise InputError("no sequences in input")
    if len({len(r) for r in rows}) != 1:
        raise InputError(f"ragged rows: lengths {sorted({len(r) for r in rows})}")
    if q is None:
        if meta is None:
            raise InputError("modulus not given and no metadata header present")
        q = meta["q"]
    try:
        return [ZqSequence(q, tuple(r)) for r in rows], meta
    except DomainError as exc:
        raise InputError(str(exc)) from exc


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _write(path: str | None, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _int_list(text: str) -> list[int]:
    """Parse ``"4"``, ``"2,4"`` or ``"4-6"`` style integer lists."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


# ---------------------------------------------------------------------------
# commands

def _load_params(path: str) -> ConstructionParams:
    try:
        obj = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"parameter file is not JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError("parameter file must hold a JSON object")
    try:
        params = ConstructionParams.from_json(obj)
    except DomainError as exc:
        raise InputError(str(exc)) from exc
    problems = validate(params)
    if problems:
        raise InputError("invalid parameters:\n  " + "\n  ".join(problems))
    return params


def cmd_construct(args) -> int:
    params = _load_params(args.params)
    fam = build_set(params)
    report = verify_czcs(fam.sequences, fam.shape.Z)
    _write(args.out, format_sequences(params, fam.sequences))
    report_path = args.report
    if report_path is None and args.out not in (None, "-"):
        report_path = args.out + ".report.json"
    text = canonical_json(report.to_dict())
    if report_path is None:
        sys.stderr.write(text)
    else:
        _write(report_path, text)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    seqs, meta = parse_sequences(_read(args.inp), args.q)
    N = len(seqs[0])
    if args.z is not None:
        Z = args.z
    elif meta is not None:
        Z = meta["Z"]
    else:
        Z = None
    if Z is not None and not 0 <= Z <= N - 1:
        raise InputError(f"ZCZ width {Z} outside 0..{N - 1}")
    if Z is None:
        Z = verify_czcs(seqs, 0).max_zcz
    report = verify_czcs(seqs, Z)
    _write(args.out, canonical_json(report.to_dict()))
    return EXIT_OK if report.passed else EXIT_FAIL


def scan_record(params: ConstructionParams) -> dict:
    fam = build_set(params)
    rep = verify_czcs(fam.sequences, fam.shape.Z)
    M, N, Z = fam.shape
    d = rep.to_dict()
    return {
        "params": params.to_json(),
        "M": M,
        "N": N,
        "Z": Z,
        "passed": rep.passed,
        "cs_ok": rep.cs_ok,
        "max_zcz": rep.max_zcz,
        "zcz_ratio": d["zcz_ratio"],
    }


def scan_configs(ms, qs, deltas=None, lambda_draws=0, seed=0) -> list[ConstructionParams]:
    """Every configuration with zero lambda, then seeded random-lambda draws per (m, q)."""
    configs = []
    rng = random.Random(seed)
    for m in ms:
        for q in qs:
            base = list(enumerate_params(m, q, delta_filter=deltas))
            configs.extend(base)
            for _ in range(lambda_draws if base else 0):
                p = rng.choice(base)
                lam = tuple(rng.randrange(q) for _ in range(m))
                configs.append(ConstructionParams(p.m, p.q, p.delta, p.partition, lam))
    return configs


def cmd_scan(args) -> int:
    configs = scan_configs(_int_list(args.m), _int_list(args.q),
                           _int_list(args.delta) if args.delta else None,
                           args.lambda_draws, args.seed)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            records = list(pool.map(scan_record, configs, chunksize=16))
    else:
        records = [scan_record(p) for p in configs]
    passed = sum(r["passed"] and r["cs_ok"] for r in records)
    summary = {"total": len(records), "passed": passed, "failed": len(records) - passed}
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "q", "delta", "partition", "lambda", "M", "N", "Z",
                    "passed", "cs_ok", "max_zcz", "zcz_ratio"])
        for r in records:
            p = r["params"]
            w.writerow([p["m"], p["q"], p["delta"],
                        "|".join(" ".join(map(str, b)) for b in p["partition"]),
                        " ".join(map(str, p["lambda"])), r["M"], r["N"], r["Z"],
                        int(r["passed"]), int(r["cs_ok"]), r["max_zcz"], r["zcz_ratio"]])
        _write(args.out, buf.getvalue())
    else:
        _write(args.out, canonical_json({"records": records, "summary": summary}))
    print(f"scanned {summary['total']} configurations: {summary['passed']} passed, "
          f"{summary['failed']} failed", file=sys.stderr)
    return EXIT_OK if summary["failed"] == 0 else EXIT_FAIL


def reproduce_cells() -> list[dict]:
    """Compare the worked example family against the embedded published values."""
    fam = build_set(ConstructionParams.from_json(reference.EXAMPLE_PARAMS))
    seqs = fam.sequences
    M, N = len(seqs), fam.shape.N
    cells = []

    def add(table, row, expected, computed, flagged=False):
        for tau in range(N):
            exp = expected[tau] if not flagged and tau < len(expected) else None
            got = computed[tau]
            if flagged:
                status = "flagged"
            else:
                status = "match" if exp == got else "mismatch"
            cells.append({"table": table, "row": row, "tau": tau,
                          "expected": exp, "computed": got, "status": status})

    auto_rows = [[profile(s, s)[t].to_int() for t in range(N)] for s in seqs]
    for i, row in enumerate(auto_rows):
        add("aacf", f"A(a{i})", reference.AACF_ROWS[i], row)
    aacs = aacs_profile(seqs)
    add("aacf", "sum", reference.AACS_ROW, [aacs[t].to_int() for t in range(N)])

    for i in range(M):
        prof = profile(seqs[i], seqs[(i + 1) % M])
        row = [prof[-t].to_int() for t in range(N)]
        expected = reference.ACCF_ROWS[i]
        add("accf", f"C(a{i},a{(i + 1) % M})", expected, row, flagged=len(expected) != N)
    accs = accs_profile(seqs)
    add("accf", "sum", reference.ACCS_ROW, [accs[-t].to_int() for t in range(N)])
    return cells


def _deletion_reconciles(listed: Sequence[int], computed: Sequence[int]) -> int | None:
    """Index i such that dropping ``listed[i:i+extra]`` yields ``computed``."""
    extra = len(listed) - len(computed)
    if extra <= 0:
        return None
    for i in range(len(listed) - extra + 1):
        if list(listed[:i]) + list(listed[i + extra:]) == list(computed):
            return i
    return None


def cmd_reproduce(args) -> int:
    cells = reproduce_cells()
    mismatches = [c for c in cells if c["status"] == "mismatch"]
    if args.format == "json":
        _write(args.out, canonical_json({"cells": cells, "mismatches": len(mismatches)}))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["table", "row", "tau", "expected", "computed", "status"])
        for c in cells:
            w.writerow([c["table"], c["row"], c["tau"],
                        "" if c["expected"] is None else c["expected"], c["computed"], c["status"]])
        _write(args.out, buf.getvalue())
    else:
        lines = []
        rows: dict[tuple[str, str], list[dict]] = {}
        for c in cells:
            rows.setdefault((c["table"], c["row"]), []).append(c)
        for (table, row), cs in rows.items():
            values = ",".join(str(c["computed"]) for c in cs)
            bad = [c for c in cs if c["status"] == "mismatch"]
            if cs[0]["status"] == "flagged":
                idx = int(row[3:row.index(",")])
                listed = reference.ACCF_ROWS[idx]
                cut = _deletion_reconciles(listed, [c["computed"] for c in cs])
                note = f"FLAGGED: listed with {len(listed)} entries, expected {len(cs)}"
                if cut is not None:
                    note += f"; agrees after dropping listed entries {cut}..{cut + len(listed) - len(cs) - 1}"
            elif bad:
                note = "MISMATCH at " + ", ".join(
                    f"tau={c['tau']} (expected {c['expected']}, got {c['computed']})" for c in bad)
            else:
                note = f"{len(cs)}/{len(cs)} cells match"
            lines.append(f"{table:4s} {row:12s} ({values})  {note}")
        lines.append(f"{len(mismatches)} mismatching cells")
        _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK if not mismatches else EXIT_FAIL


def _clean(x: float) -> float:
    return round(x, 12) + 0.0


def _format_profile(prof: CorrelationProfile, fmt: str = "csv") -> str:
    if fmt == "json":
        rows = []
        for tau, v in prof.items():
            z = v.to_complex()
            rows.append({"tau": tau, "real": _clean(z.real), "imag": _clean(z.imag),
                         "counts": list(v.counts)})
        return canonical_json(rows)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["tau", "real", "imag", "counts"])
    for tau, v in prof.items():
        z = v.to_complex()
        w.writerow([tau, f"{_clean(z.real):.12g}", f"{_clean(z.imag):.12g}",
                    " ".join(map(str, v.counts))])
    return buf.getvalue()


def cmd_profile(args) -> int:
    seqs, _ = parse_sequences(_read(args.inp), args.q)
    if args.set_sum:
        prof = aacs_profile(seqs) if args.set_sum == "aacs" else accs_profile(seqs)
    else:
        pair = args.pair or "0,0"
        try:
            i, j = (int(x) for x in pair.split(","))
        except ValueError:
            raise InputError(f"--pair expects 'i,j', got {pair!r}") from None
        if not (0 <= i < len(seqs) and 0 <= j < len(seqs)):
            raise InputError(f"pair indices {i},{j} outside 0..{len(seqs) - 1}")
        prof = profile(seqs[i], seqs[j])
    _write(args.out, _format_profile(prof, args.format))
    return EXIT_OK


def cmd_lemmas(args) -> int:
    lines = []
    failures = 0
    bound1 = args.lemma1_m or args.m
    n1 = sum(1 for m in range(2, bound1 + 1) for d in range(1, m))
    ok1 = sum(lemma1_check(m, d) for m in range(2, bound1 + 1) for d in range(1, m))
    n2 = sum(1 for m in range(2, args.m + 1) for d in range(1, m))
    ok2 = sum(lemma2_check(m, d) for m in range(2, args.m + 1) for d in range(1, m))
    failures += (n1 - ok1) + (n2 - ok2)
    lines.append(f"lemma1: {ok1}/{n1} (m <= {bound1}) pass")
    lines.append(f"lemma2: {ok2}/{n2} (m <= {args.m}) pass")

    configs = scan_configs(range(4, args.scan_m + 1), _int_list(args.q),
                           lambda_draws=args.lambda_draws, seed=args.seed)
    for name, check in (("lemma3", lemma3_check), ("lemma4", lemma4_check),
                        ("cs_pairing", cs_pairing_check), ("tail_cross", tail_cross_check)):
        passed = skipped = 0
        for p in configs:
            out = check(p)
            passed += bool(out)
            skipped += out.skipped
        failures += len(configs) - passed
        line = f"{name}: {passed}/{len(configs)} configurations pass"
        if name == "lemma4":
            line += f", {skipped} pairs skipped (first disagreement at a block head)"
        lines.append(line)
    _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK if failures == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="czcs", description="Construct and verify cross Z-complementary sets.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family from a parameter JSON file")
    p.add_argument("--params", required=True)
    p.add_argument("--out", help="sequence CSV (default stdout)")
    p.add_argument("--report", help="report JSON (default <out>.report.json, or stderr)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a sequence CSV")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--z", type=int, help="ZCZ width to test (default: header Z, else maximal)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="construct and verify every configuration")
    p.add_argument("--m", default="4", help="e.g. 4, 4,5 or 4-6")
    p.add_argument("--q", default="2,4")
    p.add_argument("--delta", help="restrict delta to these values")
    p.add_argument("--lambda-draws", type=int, default=0, help="random lambda draws per (m, q)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("reproduce", help="recompute the worked example correlation tables")
    p.add_argument("--format", choices=("csv", "json"), default=None,
                   help="one record per cell (default: text summary)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("profile", help="emit a correlation profile as CSV")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--pair", help="i,j for C(a_i, a_j)")
    p.add_argument("--set-sum", nargs="?", const="aacs", choices=("aacs", "accs"))
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("lemmas", help="run the brute-force oracles")
    p.add_argument("--m", type=int, default=8, help="bound for the integer lemmas")
    p.add_argument("--lemma1-m", type=int, default=10)
    p.add_argument("--scan-m", type=int, default=5, help="bound for the per-family checks")
    p.add_argument("--q", default="2,4")
    p.add_argument("--lambda-draws", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lemmas)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
