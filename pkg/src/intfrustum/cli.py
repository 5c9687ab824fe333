"""Command-line interface.

Exit codes: 0 success, 1 invalid tuple or parameters, 2 usage error,
3 capacity refusal. Machine output is JSON Lines (default) or CSV; volumes
are always written as an integer numerator/denominator pair.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
from dataclasses import dataclass
from typing import Iterable, TextIO

from intfrustum import diophantine as dio
from intfrustum import families as fam
from intfrustum._parallel import default_workers
from intfrustum.exactmath import (
    ArithmeticOverflow,
    CapacityError,
    DomainError,
    format_rational,
)
from intfrustum.frustum import CONDITIONS, FrustumRecord, validate
from intfrustum.search import SearchBounds, cross_check, enumerate_integral

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


@dataclass(frozen=True)
class OutputRecord:
    a: int
    b: int
    c: int
    d: int
    H: int
    t: int
    x: int
    y: int
    volume_num: int
    volume_den: int
    N: int
    M: int
    k1: int
    k2: int
    is_square: bool
    is_integral: bool

    def __post_init__(self):
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            want = bool if f.name.startswith("is_") else int
            if type(value) is not want:
                raise TypeError(f"{f.name} must be {want.__name__}, got {value!r}")
        if self.is_integral and self.volume_den != 1:
            raise ValueError("integral record with volume_den != 1")

    @classmethod
    def from_record(cls, rec: FrustumRecord) -> "OutputRecord":
        f, dq = rec.frustum, rec.derived
        dec = f.decomposition()
        return cls(
            a=f.a, b=f.b, c=f.c, d=f.d, H=f.H, t=f.t,
            x=dq.x, y=dq.y,
            volume_num=dq.volume.numerator, volume_den=dq.volume.denominator,
            N=dec.N, M=dec.M, k1=dec.k1, k2=dec.k2,
            is_square=dq.is_square, is_integral=dq.is_integral,
        )

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "OutputRecord":
        data = json.loads(line)
        if set(data) != set(FIELDS):
            raise ValueError(f"unexpected field set {sorted(data)}")
        return cls(**data)

    def to_csv_row(self) -> list[str]:
        out = []
        for name in FIELDS:
            value = getattr(self, name)
            out.append(("true" if value else "false") if isinstance(value, bool) else str(value))
        return out

    @classmethod
    def from_csv_row(cls, row: dict[str, str]) -> "OutputRecord":
        kwargs = {}
        for name in FIELDS:
            raw = row[name]
            if name.startswith("is_"):
                if raw not in ("true", "false"):
                    raise ValueError(f"{name}: expected true/false, got {raw!r}")
                kwargs[name] = raw == "true"
            else:
                kwargs[name] = int(raw)
        return cls(**kwargs)


FIELDS = tuple(f.name for f in dataclasses.fields(OutputRecord))


def write_records(records: Iterable[OutputRecord], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(FIELDS)
        for r in records:
            writer.writerow(r.to_csv_row())
    else:
        for r in records:
            out.write(r.to_json() + "\n")


def read_records(text: str, fmt: str) -> list[OutputRecord]:
    if fmt == "csv":
        return [OutputRecord.from_csv_row(row) for row in csv.DictReader(io.StringIO(text))]
    return [OutputRecord.from_json(line) for line in text.splitlines() if line.strip()]


def cmd_verify(args, out: TextIO) -> int:
    report = validate(args.dims)
    print("candidate (a, b, c, d, H, t) = " + str(report.candidate), file=out)
    for name, desc in CONDITIONS:
        status = "PASS" if getattr(report, name) else "FAIL"
        print(f"  {status}  {name:<16} {desc}", file=out)
    if report.x is not None:
        print(f"x = {report.x}, y = {report.y}", file=out)
    if report.volume is not None:
        line = f"volume = {format_rational(report.volume)}"
        if report.volume.denominator != 1 and report.overall_valid:
            line += " (not an integer; 3 ∤ H·y·x)"
        elif report.volume.denominator != 1:
            line += " (not an integer)"
        print(line, file=out)
    if report.canonicalizable:
        a, b, c, d, H, t = report.candidate
        print(f"note: canonical orientation is {(b, a, d, c, H, t)}", file=out)
    verdict = "yes" if report.overall_integral else "no"
    print(f"integral regular truncated pyramid: {verdict}", file=out)
    return EXIT_OK if report.overall_integral else EXIT_INVALID


def cmd_enumerate(args, out: TextIO) -> int:
    bounds = SearchBounds(args.t_max, args.d_max)
    records = enumerate_integral(bounds, workers=args.threads)
    write_records((OutputRecord.from_record(r) for r in records), args.format, out)
    return EXIT_OK


def _explain_prop2(l, m, err: TextIO) -> None:  # noqa: E741
    check = fam.prop2_admissible(l, m)
    clauses = ["l >= 2", "m divides l^2 - 1", "1 <= m < l", fam.PROP2_MOD3_CLAUSE]
    for clause in clauses:
        status = "violated" if clause in check.violations else "held"
        print(f"  {clause}: {status}", file=err)
    if check.v is not None:
        print(f"  v = {check.v}", file=err)
    if check.branch:
        print(f"  mod-3 case: {check.branch}", file=err)


def cmd_family(args, out: TextIO, err: TextIO) -> int:
    if args.family == "prop2":
        if args.l_max is not None:
            recs = list(fam.prop2_family(args.l_max, args.D_max or 1))
        else:
            if args.explain:
                _explain_prop2(args.l, args.m, err)
            recs = [fam.build_prop2(fam.Prop2Seed(args.l, args.m, args.D))]
    elif args.family == "prop3":
        if args.c_max is not None:
            recs = list(fam.prop3_family(args.c_max, args.D_max or 1, args.mn_max or 1, args.integral_only))
        else:
            rec = fam.build_prop3(fam.Prop3Seed(args.c, args.D, args.m, args.n))
            if args.explain:
                print("  gcd(m, n) = 1: held", file=err)
                hyx = rec.frustum.H * rec.derived.y * rec.derived.x
                print(f"  3 divides H*y*x = {hyx}: {'held' if hyx % 3 == 0 else 'violated'}", file=err)
            print(f"is_integral = {str(rec.derived.is_integral).lower()}", file=err)
            if not rec.derived.is_integral:
                print(
                    f"warning: square-base family member has volume {format_rational(rec.derived.volume)}, "
                    "not an integer; integral members need 3 | H*y*x",
                    file=err,
                )
            recs = [rec]
    else:
        seed = fam.GeneralSeed(x=args.x, y=args.y, H=args.H, t=args.t, d=args.d)
        recs = [fam.build_general(seed)]
    write_records((OutputRecord.from_record(r) for r in recs), args.format, out)
    return EXIT_OK


def _emit(obj: dict, out: TextIO) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def cmd_solve(args, out: TextIO, parser: argparse.ArgumentParser) -> int:
    if args.equation == "three-squares":
        if args.t_max is not None:
            for s in dio.enumerate_three_squares(args.t_max, workers=args.threads):
                obj = {"x": s.x, "y": s.y, "z": s.z, "t": s.t}
                if args.witness:
                    w = dio.find_params_for(s)
                    obj["witness"] = {"l": w.params.l, "m": w.params.m, "n": w.params.n, "perm": list(w.perm)}
                _emit(obj, out)
        elif None in (args.l, args.m):
            parser.error("three-squares needs --t-max, or --l and --m (and optionally --n)")
        elif args.n is None:
            s = dio.three_squares_subfamily(args.l, args.m)
            _emit({"x": s.x, "y": s.y, "z": s.z, "t": s.t}, out)
        else:
            s = dio.three_squares_from_params(dio.ThreeSquaresParams(args.l, args.m, args.n))
            _emit({"x": s.x, "y": s.y, "z": s.z, "t": s.t}, out)
    else:
        if args.z_max is not None:
            for s in dio.enumerate_two_square(args.z_max, workers=args.threads):
                obj = {"X": s.X, "Y": s.Y, "Z": s.Z}
                if args.witness:
                    p = dio.find_two_square_params(s)
                    obj["witness"] = {"delta": p.delta, "m": p.m, "n": p.n}
                _emit(obj, out)
        elif None in (args.m, args.n):
            parser.error("two-square needs --z-max, or --m and --n (and optionally --delta)")
        else:
            s = dio.two_square_from_params(dio.TwoSquareParams(args.delta, args.m, args.n))
            _emit({"X": s.X, "Y": s.Y, "Z": s.Z}, out)
    return EXIT_OK


def cmd_crosscheck(args, out: TextIO) -> int:
    report = cross_check(SearchBounds(args.t_max, args.d_max), workers=args.threads)
    n_gen, n_ora = report.count_conditional, report.count_oracle
    if report.ok:
        print(f"OK: {n_gen} = {n_ora}, 0 mismatches ({report.elapsed:.2f} s)", file=out)
        return EXIT_OK
    print(f"MISMATCH: generator {n_gen} vs oracle {n_ora}, {len(report.mismatches)} mismatches ({report.elapsed:.2f} s)", file=out)
    for dims in report.only_conditional:
        print(f"  generator only: {dims}", file=out)
    for dims in report.only_oracle:
        print(f"  oracle only: {dims}", file=out)
    return EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intfrustum", description=__doc__.splitlines()[0], allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def threads(p):
        p.add_argument("--threads", type=int, default=default_workers(), help="worker cap (default: CPU count)")

    def fmt(p):
        p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")

    p = sub.add_parser("verify", help="check a six-tuple a b c d H t", allow_abbrev=False)
    p.add_argument("dims", type=int, nargs=6, metavar="N")

    p = sub.add_parser("enumerate", help="list integral frusta within bounds", allow_abbrev=False)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--d-max", type=int)
    fmt(p)
    threads(p)

    p = sub.add_parser("family", help="build members of a parametric family", allow_abbrev=False)
    fsub = p.add_subparsers(dest="family", required=True)
    f2 = fsub.add_parser("prop2", allow_abbrev=False)
    f2.add_argument("--l", type=int)
    f2.add_argument("--m", type=int)
    f2.add_argument("--D", type=int, default=1)
    f2.add_argument("--l-max", type=int, help="sweep all admissible (l, m) up to this l")
    f2.add_argument("--D-max", type=int)
    f3 = fsub.add_parser("prop3", allow_abbrev=False)
    f3.add_argument("--c", type=int)
    f3.add_argument("--D", type=int, default=1)
    f3.add_argument("--m", type=int)
    f3.add_argument("--n", type=int)
    f3.add_argument("--c-max", type=int, help="sweep c, D, m, n up to the given maxima")
    f3.add_argument("--D-max", type=int)
    f3.add_argument("--mn-max", type=int)
    f3.add_argument("--integral-only", action="store_true", help="sweep only members with integer volume")
    fg = fsub.add_parser("general", allow_abbrev=False)
    for name in ("x", "y", "H", "t", "d"):
        fg.add_argument(f"--{name}", type=int, required=True)
    for q in (f2, f3, fg):
        q.add_argument("--explain", action="store_true")
        fmt(q)

    p = sub.add_parser("solve", help="solve t^2=x^2+y^2+z^2 or Z^2=X^2+2Y^2", allow_abbrev=False)
    ssub = p.add_subparsers(dest="equation", required=True)
    s3 = ssub.add_parser("three-squares", allow_abbrev=False)
    s3.add_argument("--l", type=int)
    s3.add_argument("--m", type=int)
    s3.add_argument("--n", type=int)
    s3.add_argument("--t-max", type=int)
    s2 = ssub.add_parser("two-square", allow_abbrev=False)
    s2.add_argument("--delta", type=int, default=1)
    s2.add_argument("--m", type=int)
    s2.add_argument("--n", type=int)
    s2.add_argument("--z-max", type=int)
    for q in (s3, s2):
        q.add_argument("--witness", action="store_true", help="attach the reproducing parameters")
        threads(q)

    p = sub.add_parser("crosscheck", help="compare generator and brute-force oracle", allow_abbrev=False)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--d-max", type=int)
    threads(p)
    return parser


def main(argv=None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "family":
        needed = {
            "prop2": ("l", "m") if getattr(args, "l_max", None) is None else (),
            "prop3": ("c", "m", "n") if getattr(args, "c_max", None) is None else (),
            "general": (),
        }[args.family]
        missing = [f"--{n}" for n in needed if getattr(args, n) is None]
        if missing:
            parser.error(f"family {args.family} needs {' '.join(missing)}")
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be at least 1")

    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "enumerate":
            return cmd_enumerate(args, out)
        if args.command == "family":
            return cmd_family(args, out, err)
        if args.command == "solve":
            return cmd_solve(args, out, parser)
        return cmd_crosscheck(args, out)
    except CapacityError as e:
        print(f"refused: {e}", file=err)
        return EXIT_CAPACITY
    except (DomainError, ArithmeticOverflow) as e:
        print(f"error: {e}", file=err)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
