"""Command-line front end.

Every command writes canonical JSON records (or CSV for ``table``) to
stdout.  Exit codes: 0 success, 1 usage or validation error, 2 degenerate
input to the syzygy oracle, 3 disagreement between independent routes.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Optional, Sequence, TextIO

from . import __version__
from .fp_linalg import is_prime, primes_up_to
from .graded_algebra import (
    ClosedForm,
    CriterionPair,
    FailingDegree,
    WlpVerdict,
    wlp_bruteforce,
)
from .syzygy_gap import (
    DegenerateTriple,
    GapCertificate,
    HanCertificate,
    delta_star_han,
    gap_oracle,
    wlp_han,
)
from .wlp_criterion import char2_degrees, decide_wlp_criterion, exceptional_primes

EXIT_OK, EXIT_USAGE, EXIT_DEGENERATE, EXIT_DISAGREE = 0, 1, 2, 3
CSV_HEADER = ("d", "p", "wlp", "witness_n", "witness_k")


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, int]
    result: dict[str, Any]
    version: str = __version__

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"), ensure_ascii=True)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        data = json.loads(text)
        if list(data) != ["command", "inputs", "result", "version"]:
            raise ValueError(f"unexpected record fields {list(data)}")
        return cls(**data)


def witness_payload(w: object) -> Optional[dict[str, Any]]:
    if w is None:
        return None
    if isinstance(w, CriterionPair):
        return {"kind": "criterion", "part": w.part, "n": w.n, "k": w.k}
    if isinstance(w, FailingDegree):
        return {"kind": "failing_degree", "m": w.m, "rank": w.rank,
                "max_rank": w.max_rank}
    if isinstance(w, ClosedForm):
        return {"kind": "closed_form", "tag": w.tag}
    if isinstance(w, HanCertificate):
        return {"kind": "han", **han_payload(w)}
    raise TypeError(f"unknown witness {w!r}")


def verdict_payload(v: WlpVerdict) -> dict[str, Any]:
    return {"holds": v.holds, "witness": witness_payload(v.witness)}


def gap_payload(c: GapCertificate) -> dict[str, Any]:
    return {"degrees": list(c.degrees), "p": c.p, "alpha": c.alpha,
            "beta": c.beta, "delta": c.delta}


def han_payload(c: HanCertificate) -> dict[str, Any]:
    return {"v": list(c.v), "p": c.p, "s": c.s,
            "u": None if c.u is None else list(c.u),
            "m_numerator": c.m_numerator, "delta_star": c.delta_star}


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise UsageError(f"p={p} is not prime")
    if p >= 2**31:
        raise UsageError(f"p={p} too large")


def cmd_decide(d: int, p: int, method: str = "criterion") -> tuple[OutputRecord, int]:
    _require_prime(p)
    deciders = {
        "criterion": decide_wlp_criterion,
        "bruteforce": wlp_bruteforce,
        "han": wlp_han,
    }
    inputs = {"d": d, "p": p}
    if method != "all":
        v = deciders[method](d, p)
        return OutputRecord("decide", inputs, {"method": method, **verdict_payload(v)}), EXIT_OK
    verdicts = {name: fn(d, p) for name, fn in deciders.items()}
    consistent = len({v.holds for v in verdicts.values()}) == 1
    result = {
        "method": "all",
        "holds": verdicts["criterion"].holds,
        "consistent": consistent,
        "verdicts": {name: verdict_payload(v) for name, v in verdicts.items()},
    }
    return OutputRecord("decide", inputs, result), EXIT_OK if consistent else EXIT_DISAGREE


def cmd_gap(d1: int, d2: int, d3: int, p: int, method: str = "both",
            allow_redundant: bool = False) -> tuple[OutputRecord, int]:
    _require_prime(p)
    inputs = {"d1": d1, "d2": d2, "d3": d3, "p": p}
    result: dict[str, Any] = {"method": method}
    han = oracle = None
    if method in ("han", "both"):
        try:
            han = delta_star_han(d1, d2, d3, p)
        except (ValueError, OverflowError) as exc:
            raise UsageError(str(exc)) from exc
        result["han"] = han_payload(han)
    if method in ("oracle", "both"):
        # DegenerateTriple propagates to main() for exit code 2
        oracle = gap_oracle(d1, d2, d3, p, minimal_only=not allow_redundant)
        result["oracle"] = gap_payload(oracle)
    code = EXIT_OK
    if han is not None and oracle is not None:
        result["agree"] = han.delta_star == oracle.delta
        if not result["agree"]:
            code = EXIT_DISAGREE
    return OutputRecord("gap", inputs, result), code


def cmd_primes(d: int) -> tuple[OutputRecord, int]:
    primes = exceptional_primes(d)
    witnesses = [{"p": p, **witness_payload(decide_wlp_criterion(d, p).witness)}
                 for p in primes]
    result = {"exceptional_primes": primes, "witnesses": witnesses}
    return OutputRecord("primes", {"d": d}, result), EXIT_OK


def table_records(d_max: int, p_max: int) -> list[OutputRecord]:
    primes = primes_up_to(p_max)
    return [OutputRecord("table", {"d": d, "p": p},
                         verdict_payload(decide_wlp_criterion(d, p)))
            for d in range(1, d_max + 1) for p in primes]


def write_table(records: Sequence[OutputRecord], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        for r in records:
            out.write(r.to_json() + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        w = r.result["witness"]
        writer.writerow([
            r.inputs["d"], r.inputs["p"],
            "true" if r.result["holds"] else "false",
            "" if w is None else w["n"],
            "" if w is None else w["k"],
        ])


def cmd_wlp_degrees(t_max: int) -> tuple[OutputRecord, int]:
    if not 1 <= t_max <= 62:
        raise UsageError(f"t_max={t_max} outside [1, 62]")
    return OutputRecord("wlp-degrees", {"t_max": t_max},
                        {"degrees": char2_degrees(t_max)}), EXIT_OK


def verify_cell(d: int, p: int) -> dict[str, Any]:
    """All routes for one (d, p); ``ok`` is false on any disagreement."""
    crit = decide_wlp_criterion(d, p).holds
    brute = wlp_bruteforce(d, p).holds
    han = delta_star_han(d, d, d, p).delta_star <= 1
    try:
        oracle: Optional[bool] = gap_oracle(d, d, d, p).delta <= 1
    except DegenerateTriple:
        oracle = None
    ok = crit == brute == han and oracle in (None, crit)
    return {"d": d, "p": p, "criterion": crit, "bruteforce": brute,
            "han": han, "oracle": oracle, "ok": ok}


def cmd_verify(d_max: int, p_max: int) -> tuple[OutputRecord, int]:
    cells = degenerate = 0
    counterexample = None
    for d in range(1, d_max + 1):
        for p in primes_up_to(p_max):
            cell = verify_cell(d, p)
            cells += 1
            degenerate += cell["oracle"] is None
            if not cell["ok"] and counterexample is None:
                counterexample = cell
    result = {"passed": counterexample is None, "cells": cells,
              "degenerate_oracle_cells": degenerate,
              "counterexample": counterexample}
    code = EXIT_OK if counterexample is None else EXIT_DISAGREE
    return OutputRecord("verify", {"d_max": d_max, "p_max": p_max}, result), code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_at_least(lo: int):
    def parse(text: str) -> int:
        if not re.fullmatch(r"[+-]?[0-9]+", text):
            raise argparse.ArgumentTypeError(f"not a base-10 integer: {text!r}")
        value = int(text)
        if value < lo:
            raise argparse.ArgumentTypeError(f"{value} < {lo}")
        return value
    return parse


def build_parser() -> argparse.ArgumentParser:
    pos = _int_at_least(1)
    prime = _int_at_least(2)
    parser = _Parser(prog="monowlp", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("decide", help="decide WLP for one (d, p)")
    s.add_argument("--d", type=pos, required=True)
    s.add_argument("--p", type=prime, required=True)
    s.add_argument("--method", choices=["criterion", "bruteforce", "han", "all"],
                   default="criterion")

    s = sub.add_parser("gap", help="syzygy gap of (x^d1, y^d2, (x+y)^d3)")
    for name in ("--d1", "--d2", "--d3"):
        s.add_argument(name, type=pos, required=True)
    s.add_argument("--p", type=prime, required=True)
    s.add_argument("--method", choices=["oracle", "han", "both"], default="both")
    s.add_argument("--allow-redundant", action="store_true",
                   help="accept non-minimally generated ideals in the oracle")

    s = sub.add_parser("primes", help="exceptional primes for d")
    s.add_argument("--d", type=pos, required=True)

    s = sub.add_parser("table", help="criterion verdicts over a (d, p) grid")
    s.add_argument("--d-max", type=pos, required=True)
    s.add_argument("--p-max", type=pos, required=True)
    s.add_argument("--format", choices=["json", "csv"], default="json")

    s = sub.add_parser("wlp-degrees", help="d with WLP in characteristic 2")
    s.add_argument("--t-max", type=pos, required=True)

    s = sub.add_parser("verify", help="cross-check all routes over a grid")
    s.add_argument("--d-max", type=pos, required=True)
    s.add_argument("--p-max", type=pos, required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        if args.command == "table":
            write_table(table_records(args.d_max, args.p_max), args.format, out)
            return EXIT_OK
        if args.command == "decide":
            record, code = cmd_decide(args.d, args.p, args.method)
        elif args.command == "gap":
            record, code = cmd_gap(args.d1, args.d2, args.d3, args.p,
                                   args.method, args.allow_redundant)
        elif args.command == "primes":
            record, code = cmd_primes(args.d)
        elif args.command == "wlp-degrees":
            record, code = cmd_wlp_degrees(args.t_max)
        else:
            record, code = cmd_verify(args.d_max, args.p_max)
    except UsageError as exc:
        print(f"monowlp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateTriple as exc:
        print(f"monowlp: degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    out.write(record.to_json() + "\n")
    if args.command == "verify":
        print(f"verify: {time.perf_counter() - started:.2f}s", file=sys.stderr)
    if code == EXIT_DISAGREE:
        print("monowlp: independent routes disagree", file=sys.stderr)
    return code
