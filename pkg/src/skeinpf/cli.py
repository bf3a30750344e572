"""Command line interface.

Subcommands:

* ``classify``  conjugacy class of a matrix
* ``ck``        Euler product exponents, by formula, enumeration or both
* ``dims``      skein module dimensions per rank
* ``series``    partition function coefficients, optionally with exponents
* ``hh``        twisted block dimension and coinvariants for one cycle type
* ``verify``    full formula-versus-enumeration sweep

Matrices are written "a,b;c,d".  Every subcommand takes --format
json|csv|table (default table).  JSON renders all integers as decimal
strings so arbitrarily large values survive consumers that parse numbers as
doubles; CSV emits one fixed header row per subcommand.  Exit codes: 0 on
success, 2 on bad input, 3 when a cross-check or verification run found a
mismatch.  The enumeration element cap is 10^7 unless overridden by the
SKEINPF_CAP environment variable or the --cap flag (flag wins).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .exactla import cokernel
from .formula import (
    coinvariant_dimension,
    euler_exponent,
    euler_exponents,
    multiset_coefficient,
    skein_dimensions,
)
from .oracle import (
    ELEMENT_CAP,
    TUPLE_CAP,
    CapExceeded,
    block_presentation,
    coinvariant_dimension_bruteforce,
    euler_exponent_burnside,
    hochschild_dimension,
    orbit_report,
    split_presentation,
    twist_presentation,
)
from .partitions import CycleType, enumerate_partitions
from .series import NonIntegralError, expand_euler_product
from .sl2z import (
    ConjugacyClass,
    FiniteOrder,
    Hyperbolic,
    NegativeShear,
    Shear,
    branch_representatives,
    classify,
    format_matrix,
    parse_matrix,
    random_conjugate,
    trace_power,
)


class InputError(ValueError):
    """Bad command line input; reported on stderr with exit code 2."""


def _resolve_cap(flag_value: int | None) -> int:
    if flag_value is not None:
        if flag_value < 1:
            raise InputError("--cap must be positive")
        return flag_value
    raw = os.environ.get("SKEINPF_CAP")
    if raw is None:
        return ELEMENT_CAP
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"SKEINPF_CAP is not an integer: {raw!r}")
    if value < 1:
        raise InputError(f"SKEINPF_CAP must be positive: {raw!r}")
    return value


def _parse_gamma(text: str):
    try:
        return parse_matrix(text)
    except ValueError as exc:
        raise InputError(f"bad matrix {text!r}: {exc}")


def _parse_partition(text: str) -> CycleType:
    try:
        parts = [int(p.strip()) for p in text.split(",") if p.strip()]
        if not parts or any(p < 1 for p in parts):
            raise ValueError("parts must be positive integers")
        return CycleType.from_parts(parts)
    except ValueError as exc:
        raise InputError(f"bad partition {text!r}: {exc}")


_CLASS_LABELS = {1: "Id", 2: "-Id", 3: "-TS-type", 4: "S-type", 6: "TS-type"}


def _class_fields(cls: ConjugacyClass) -> dict:
    if isinstance(cls, Hyperbolic):
        return {"class": "hyperbolic", "order": "infinite", "m": ""}
    if isinstance(cls, FiniteOrder):
        return {"class": _CLASS_LABELS[cls.order], "order": cls.order, "m": ""}
    if isinstance(cls, Shear):
        return {"class": "shear", "order": "infinite", "m": cls.m}
    return {"class": "negative-shear", "order": "infinite", "m": cls.m}


def _stringify(obj):
    # JSON payloads carry every integer as a decimal string.
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {key: _stringify(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(value) for value in obj]
    return obj


def _emit(args, record: dict, rows: list[dict], fields: list[str]) -> None:
    if args.format == "json":
        payload = dict(record)
        payload["rows"] = rows
        json.dump(_stringify(payload), sys.stdout, indent=2)
        sys.stdout.write("\n")
        return
    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(fields)
        for row in rows:
            writer.writerow([row.get(f, "") for f in fields])
        return
    context = "  ".join(f"{key}={value}" for key, value in record.items())
    if context:
        print(context)
    table = [fields] + [[str(row.get(f, "")) for f in fields] for row in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(fields))]
    for line in table:
        print("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())


def cmd_classify(args) -> int:
    g = _parse_gamma(args.gamma)
    cls = classify(g)
    row = {"gamma": format_matrix(g), "trace": g.trace, **_class_fields(cls)}
    _emit(args, {}, [row], ["gamma", "trace", "class", "order", "m"])
    return 0


def cmd_ck(args) -> int:
    g = _parse_gamma(args.gamma)
    if args.max_k < 1:
        raise InputError("--max-k must be positive")
    cap = _resolve_cap(args.cap)
    cls = classify(g)
    record = {"gamma": format_matrix(g), "trace": g.trace, **_class_fields(cls)}
    rows = []
    mismatches = 0
    for k in range(1, args.max_k + 1):
        row: dict = {"k": k, "formula": "", "oracle": "", "verdict": ""}
        if args.mode in ("formula", "both"):
            value = euler_exponent(cls, k)
            if args.inject_fault and k == args.max_k:
                value += 1
            row["formula"] = value
        if args.mode in ("oracle", "both"):
            try:
                row["oracle"] = orbit_report(g, k, cap).orbit_count
            except CapExceeded as exc:
                row["oracle"] = f"skipped(cap={exc.cap})"
        if args.mode == "both":
            if isinstance(row["oracle"], str):
                row["verdict"] = "skipped"
            elif row["formula"] == row["oracle"]:
                row["verdict"] = "ok"
            else:
                row["verdict"] = "mismatch"
                mismatches += 1
        rows.append(row)
    record["mismatches"] = mismatches
    _emit(args, record, rows, ["k", "formula", "oracle", "verdict"])
    return 3 if mismatches else 0


def cmd_dims(args) -> int:
    g = _parse_gamma(args.gamma)
    if args.max_n < 1:
        raise InputError("--max-n must be positive")
    cls = classify(g)
    record = {"gamma": format_matrix(g), "trace": g.trace, **_class_fields(cls)}
    dims = skein_dimensions(cls, args.max_n)
    rows = [{"n": n, "dim": dims[n - 1]} for n in range(1, args.max_n + 1)]
    _emit(args, record, rows, ["n", "dim"])
    return 0


def cmd_series(args) -> int:
    g = _parse_gamma(args.gamma)
    if args.max_n < 1:
        raise InputError("--max-n must be positive")
    cls = classify(g)
    record = {"gamma": format_matrix(g), "trace": g.trace, **_class_fields(cls)}
    exponents = euler_exponents(cls, args.max_n)
    series = expand_euler_product(exponents, args.max_n)
    rows = []
    for n in range(args.max_n + 1):
        row = {"n": n, "coefficient": series.coefficient(n), "exponent": ""}
        if args.euler and n >= 1:
            row["exponent"] = exponents.value(n)
        rows.append(row)
    if args.euler:
        negatives = exponents.negative_positions()
        record["negative_exponents"] = list(negatives) if negatives else "none"
    _emit(args, record, rows, ["n", "coefficient", "exponent"])
    return 0


def cmd_hh(args) -> int:
    g = _parse_gamma(args.gamma)
    ct = _parse_partition(args.partition)
    cap = _resolve_cap(args.cap)
    cls = classify(g)
    record = {
        "gamma": format_matrix(g),
        "partition": str(ct),
        **_class_fields(cls),
    }
    rows = []
    for k, r in ct.multiplicities:
        ck_struct = cokernel(twist_presentation(g, k))
        exponent = euler_exponent(cls, k)
        rows.append(
            {
                "k": k,
                "multiplicity": r,
                "torsion_size": ck_struct.torsion_size,
                "exponent": exponent,
                "multiset_coefficient": multiset_coefficient(exponent, r),
            }
        )
    record["hochschild_dim"] = hochschild_dimension(g, ct, cap)
    record["coinvariant_dim"] = coinvariant_dimension(cls, ct)
    _emit(args, record, rows, ["k", "multiplicity", "torsion_size", "exponent", "multiset_coefficient"])
    return 0


def _sweep_exponents(subjects, max_k, cap, fault) -> list[dict]:
    rows = []
    for label, g in subjects:
        cls = classify(g)
        status, detail = "ok", f"k=1..{max_k}"
        skipped = []
        for k in range(1, max_k + 1):
            formula_value = euler_exponent(cls, k)
            if fault:
                formula_value += 1
                fault = False
            try:
                oracle_value = orbit_report(g, k, cap).orbit_count
            except CapExceeded:
                skipped.append(k)
                continue
            if formula_value != oracle_value:
                status = "mismatch"
                detail = f"k={k}: formula {formula_value}, enumeration {oracle_value}"
                break
        if status == "ok" and skipped:
            status = "skipped"
            detail += " (cap skipped k=" + ",".join(map(str, skipped)) + ")"
        rows.append({"check": "exponents", "subject": label, "detail": detail, "status": status})
    return rows


def _sweep_burnside(subjects, max_k, cap) -> list[dict]:
    rows = []
    for label, g in subjects:
        status, detail = "ok", ""
        checked = 0
        for k in range(1, max_k + 1):
            if trace_power(g.trace, k) == 2:
                continue
            try:
                average = euler_exponent_burnside(g, k)
                count = orbit_report(g, k, cap).orbit_count
            except CapExceeded:
                continue
            except NonIntegralError as exc:
                status, detail = "mismatch", f"k={k}: {exc}"
                break
            checked += 1
            if average != count:
                status, detail = "mismatch", f"k={k}: average {average}, enumeration {count}"
                break
        if status == "ok":
            detail = f"{checked} defined cases agree"
        rows.append({"check": "burnside", "subject": label, "detail": detail, "status": status})
    return rows


def _sweep_coinvariants(subjects, max_n, cap, tuple_cap) -> list[dict]:
    rows = []
    for label, g in subjects:
        cls = classify(g)
        status, detail = "ok", ""
        checked = skipped = 0
        for n in range(1, max_n + 1):
            for ct in enumerate_partitions(n):
                try:
                    brute = coinvariant_dimension_bruteforce(g, ct, tuple_cap, cap)
                except CapExceeded:
                    skipped += 1
                    continue
                checked += 1
                expected = coinvariant_dimension(cls, ct)
                if brute != expected:
                    status = "mismatch"
                    detail = f"[{ct}]: formula {expected}, enumeration {brute}"
                    break
            if status == "mismatch":
                break
        if status == "ok":
            detail = f"{checked} cycle types agree" + (f", {skipped} skipped (cap)" if skipped else "")
        rows.append({"check": "coinvariants", "subject": label, "detail": detail, "status": status})
    return rows


def _sweep_blocks(subjects, max_n) -> list[dict]:
    rows = []
    for label, g in subjects:
        status, detail = "ok", ""
        checked = 0
        for n in range(1, max_n + 1):
            for ct in enumerate_partitions(n):
                merged = cokernel(block_presentation(g, ct))
                split = cokernel(split_presentation(g, ct))
                checked += 1
                if (merged.free_rank, merged.invariant_factors) != (
                    split.free_rank,
                    split.invariant_factors,
                ):
                    status = "mismatch"
                    detail = f"[{ct}]: {merged.invariant_factors} vs {split.invariant_factors}"
                    break
            if status == "mismatch":
                break
        if status == "ok":
            detail = f"{checked} cycle types agree"
        rows.append({"check": "blocks", "subject": label, "detail": detail, "status": status})
    return rows


def _sweep_series(subjects, max_n) -> list[dict]:
    rows = []
    for label, g in subjects:
        cls = classify(g)
        dims = skein_dimensions(cls, max_n)
        series = expand_euler_product(euler_exponents(cls, max_n), max_n)
        status, detail = "ok", f"orders 1..{max_n} agree"
        for n in range(1, max_n + 1):
            if dims[n - 1] != series.coefficient(n):
                status = "mismatch"
                detail = f"n={n}: partition sum {dims[n - 1]}, product {series.coefficient(n)}"
                break
        rows.append({"check": "series", "subject": label, "detail": detail, "status": status})
    return rows


def cmd_verify(args) -> int:
    if args.max_k < 1 or args.max_n < 1:
        raise InputError("--max-k and --max-n must be positive")
    if args.trace_min > args.trace_max:
        raise InputError("--trace-min must not exceed --trace-max")
    cap = _resolve_cap(args.cap)
    tuple_cap = args.tuple_cap if args.tuple_cap is not None else TUPLE_CAP
    base = branch_representatives(args.trace_min, args.trace_max, shear_max=3)
    subjects = [(format_matrix(g), g) for g in base]
    conjugates = [
        (f"{format_matrix(g)} ~ seed {args.seed + i}", random_conjugate(g, args.seed + i))
        for i, g in enumerate(base)
    ]
    rows = _sweep_exponents(subjects + conjugates, args.max_k, cap, args.inject_fault)
    rows += _sweep_burnside(subjects, args.max_k, cap)
    rows += _sweep_coinvariants(subjects, args.max_n, cap, tuple_cap)
    rows += _sweep_blocks(subjects, args.max_n)
    rows += _sweep_series(subjects, args.max_n)
    failed = sum(1 for row in rows if row["status"] == "mismatch")
    skipped = sum(1 for row in rows if row["status"] == "skipped")
    record = {
        "checks": len(rows),
        "failed": failed,
        "skipped": skipped,
        "verdict": "FAIL" if failed else "PASS",
    }
    _emit(args, record, rows, ["check", "subject", "detail", "status"])
    return 3 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeinpf",
        description="Exact skein module dimensions of genus-one mapping tori.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "csv", "table"), default="table")

    p = sub.add_parser("classify", help="conjugacy class of a matrix")
    p.add_argument("--gamma", required=True, help='matrix "a,b;c,d"')
    add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("ck", help="Euler product exponents c_k")
    p.add_argument("--gamma", required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--mode", choices=("formula", "oracle", "both"), default="formula")
    p.add_argument("--cap", type=int, default=None, help="enumeration element cap")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    add_common(p)
    p.set_defaults(func=cmd_ck)

    p = sub.add_parser("dims", help="skein module dimensions per rank")
    p.add_argument("--gamma", required=True)
    p.add_argument("--max-n", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("series", help="partition function coefficients")
    p.add_argument("--gamma", required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--euler", action="store_true", help="include exponents c_k")
    add_common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("hh", help="block dimension and coinvariants for one cycle type")
    p.add_argument("--gamma", required=True)
    p.add_argument("--partition", required=True, help='cycle type, e.g. "3,3,1,1,1"')
    p.add_argument("--cap", type=int, default=None)
    add_common(p)
    p.set_defaults(func=cmd_hh)

    p = sub.add_parser("verify", help="formula versus enumeration sweep")
    p.add_argument("--trace-min", type=int, default=-6)
    p.add_argument("--trace-max", type=int, default=6)
    p.add_argument("--max-k", type=int, default=8)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--tuple-cap", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


# Flags whose values can legitimately start with a dash, like the matrix
# "-1,-1;0,-1".  argparse would read such a value as an option, so these are
# fused into --flag=value form before parsing.
_DASH_VALUE_FLAGS = ("--gamma", "--partition", "--trace-min", "--trace-max", "--seed")


def _fuse_dash_values(argv: list[str]) -> list[str]:
    fused = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _DASH_VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            fused.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            fused.append(tok)
            i += 1
    return fused


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_fuse_dash_values(list(argv)))
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
