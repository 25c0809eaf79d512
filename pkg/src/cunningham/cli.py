"""Command-line frontend: polynomial text parsing, canonical formatting, and
report emission in pretty, JSON, or CSV form.

Exit codes: 0 completed, 1 internal failure, 2 invalid arguments, 3 a
mathematical finding (an observed deviation from the expected reducibility
pattern), so scripts can tell discovery apart from breakage.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass
from typing import TextIO

from .certify import Certificate, IrreducibilityVerdict, decide_irreducible
from .chains import FamilyParams, chain_report, family_seed
from .conjecture import DEFAULT_EXTRA, conjecture_scan
from .factorize import Factorization, factor_over_rationals
from .intchains import int_chain_length, search_int_chains
from .polyz import Polynomial

# ---------------------------------------------------------------- PolyText


class PolyParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_polynomial(text: str) -> Polynomial:
    """Parse sums of terms `c`, `x`, `cx`, `x^e`, `cx^e`; whitespace is free.

    Repeated exponents accumulate.  The Unicode minus sign is accepted as a
    synonym for '-'.
    """
    s = text.replace("−", "-")
    pos = 0
    end = len(s)

    def skip_ws() -> None:
        nonlocal pos
        while pos < end and s[pos].isspace():
            pos += 1

    def read_uint() -> int:
        nonlocal pos
        start = pos
        while pos < end and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise PolyParseError("expected a number", start)
        if pos < end and s[pos] == ".":
            raise PolyParseError("non-integer coefficient", pos)
        return int(s[start:pos])

    terms: list[tuple[int, int]] = []
    skip_ws()
    if pos == end:
        raise PolyParseError("empty input", pos)
    first = True
    while pos < end:
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
            skip_ws()
        elif not first:
            raise PolyParseError(f"expected '+' or '-' before {s[pos]!r}", pos)
        coeff: int | None = None
        if pos < end and s[pos].isdigit():
            coeff = read_uint()
            skip_ws()
        if pos < end and s[pos] == "x":
            pos += 1
            skip_ws()
            exponent = 1
            if pos < end and s[pos] == "^":
                pos += 1
                skip_ws()
                if pos < end and s[pos] == "-":
                    raise PolyParseError("negative exponent", pos)
                exponent = read_uint()
            terms.append((exponent, sign * (coeff if coeff is not None else 1)))
        elif coeff is not None:
            terms.append((0, sign * coeff))
        else:
            raise PolyParseError("expected a term", pos)
        first = False
        skip_ws()
    return Polynomial.from_terms(terms)


def format_polynomial(f: Polynomial) -> str:
    """Canonical descending form: unit coefficients elided, zero terms dropped."""
    if f.is_zero:
        return "0"
    parts: list[str] = []
    for e in range(f.degree, -1, -1):
        c = f.coeffs[e]
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "x" if e == 1 else f"x^{e}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------- reports


@dataclass
class RunReport:
    command: str
    params: dict
    entries: list[dict]
    elapsed_ms: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "schema": "1",
            "command": self.command,
            "params": self.params,
            "entries": self.entries,
            "elapsed_ms": self.elapsed_ms,
        }


def _certificate_dict(cert: Certificate) -> dict:
    out: dict = {"kind": cert.kind}
    if cert.prime is not None:
        out["prime"] = cert.prime
    if cert.primes:
        out["primes"] = list(cert.primes)
    return out


def _factor_list(fac: Factorization) -> list[dict]:
    return [
        {"poly": format_polynomial(g), "multiplicity": e} for g, e in fac.factors
    ]


def _verdict_fields(verdict: IrreducibilityVerdict) -> dict:
    out: dict = {"status": verdict.status}
    if verdict.certificate is not None:
        out["certificate"] = _certificate_dict(verdict.certificate)
    if verdict.witness is not None:
        out["sign"] = verdict.witness.sign
        out["content"] = verdict.witness.content
        out["witness_factors"] = _factor_list(verdict.witness)
    return out


def _certificate_str(cert: dict) -> str:
    extra = ""
    if "prime" in cert:
        extra = f"(p={cert['prime']})"
    elif "primes" in cert:
        extra = "(primes=" + ",".join(str(p) for p in cert["primes"]) + ")"
    return cert["kind"] + extra


def _witness_str(entry: dict) -> str:
    pieces = []
    lead = entry.get("sign", 1) * entry.get("content", 1)
    if lead != 1:
        pieces.append(str(lead))
    for item in entry["witness_factors"]:
        piece = f"({item['poly']})"
        if item["multiplicity"] > 1:
            piece += f"^{item['multiplicity']}"
        pieces.append(piece)
    return " * ".join(pieces)


def _emit_pretty(report: RunReport, out: TextIO) -> None:
    print(f"command: {report.command}", file=out)
    for key, val in report.params.items():
        print(f"  {key} = {val}", file=out)
    for e in report.entries:
        if "primes" in e:
            arrow = " -> ".join(str(q) for q in e["primes"])
            print(
                f"[{e['i']}] {arrow}  (length {e['length']},"
                f" next value {e['next_composite']} is composite)",
                file=out,
            )
            continue
        line = f"[{e['i']}] {e['poly']}  -- {e['status']}"
        if "certificate" in e:
            line += f" ({_certificate_str(e['certificate'])})"
        if "witness_factors" in e:
            line += f" = {_witness_str(e)}"
        if e.get("deviates"):
            line += "  [deviates from expected pattern]"
        print(line, file=out)
    print(f"elapsed_ms: {report.elapsed_ms:.1f}", file=out)


def _emit_json(report: RunReport, out: TextIO) -> None:
    json.dump(report.to_json_dict(), out, indent=2)
    out.write("\n")


def _emit_csv(report: RunReport, out: TextIO) -> None:
    writer = csv.writer(out)
    if report.entries and "primes" in report.entries[0]:
        writer.writerow(["i", "start", "length", "primes", "next_composite"])
        for e in report.entries:
            writer.writerow(
                [e["i"], e["start"], e["length"], " ".join(map(str, e["primes"])), e["next_composite"]]
            )
        return
    writer.writerow(["i", "poly", "status", "certificate", "witness_factors"])
    for e in report.entries:
        cert = _certificate_str(e["certificate"]) if "certificate" in e else ""
        witness = _witness_str(e) if "witness_factors" in e else ""
        writer.writerow([e["i"], e["poly"], e["status"], cert, witness])


_EMITTERS = {"pretty": _emit_pretty, "json": _emit_json, "csv": _emit_csv}


# ---------------------------------------------------------------- commands


def _cmd_factor(args) -> tuple[RunReport, int]:
    f = parse_polynomial(args.poly)
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    fac = factor_over_rationals(f)
    if f.degree == 0:
        status = "constant"
    else:
        status = "irreducible" if fac.is_irreducible else "reducible"
    entry = {
        "i": 1,
        "poly": format_polynomial(f),
        "status": status,
        "sign": fac.sign,
        "content": fac.content,
        "witness_factors": _factor_list(fac),
    }
    return RunReport("factor", {"poly": format_polynomial(f)}, [entry]), 0


def _cmd_verdict(args) -> tuple[RunReport, int]:
    f = parse_polynomial(args.poly)
    if f.is_zero:
        raise ValueError("the zero polynomial has no verdict")
    entry = {"i": 1, "poly": format_polynomial(f)}
    entry.update(_verdict_fields(decide_irreducible(f)))
    return RunReport("verdict", {"poly": format_polynomial(f)}, [entry]), 0


def _chain_entries(report) -> list[dict]:
    entries = []
    for e in report.entries:
        d: dict = {"i": e.index, "poly": format_polynomial(e.poly)}
        d.update(_verdict_fields(e.verdict))
        entries.append(d)
    return entries


def _cmd_chain(args) -> tuple[RunReport, int]:
    seed = parse_polynomial(args.seed)
    rep = chain_report(seed, args.eps, args.through)
    params = {"seed": format_polynomial(seed), "eps": args.eps, "through": args.through}
    return RunReport("chain", params, _chain_entries(rep)), 0


def _cmd_family(args) -> tuple[RunReport, int]:
    params = FamilyParams(args.kind, args.m, args.k)
    through = args.through if args.through is not None else args.k + 6
    if through < 1:
        raise ValueError("--through must be at least 1")
    rep = chain_report(family_seed(params), params.eps, through)
    expected = args.k + 1
    entries = _chain_entries(rep)
    deviations = []
    for entry in entries:
        should_reduce = entry["i"] == expected
        if (entry["status"] == "reducible") != should_reduce:
            entry["deviates"] = True
            deviations.append(entry["i"])
    run_params = {
        "kind": args.kind,
        "m": args.m,
        "k": args.k,
        "through": through,
        "eps": params.eps,
        "expected_reducible_at": expected,
    }
    if deviations:
        print(
            "finding: reducibility pattern deviates at "
            + ", ".join(f"i={i}" for i in deviations)
            + f" (expected reducible only at i={expected})",
            file=sys.stderr,
        )
    return RunReport("family", run_params, entries), 3 if deviations else 0


def _cmd_conjecture(args) -> tuple[RunReport, int]:
    scan = conjecture_scan(args.k, args.extra)
    entries = []
    for e in scan.entries:
        d: dict = {"i": e.j, "poly": format_polynomial(e.poly)}
        d.update(_verdict_fields(e.verdict))
        d["expected_reducible"] = e.expected_reducible
        if e.deviates:
            d["deviates"] = True
        entries.append(d)
    params = {
        "k": scan.params.k,
        "t": scan.params.t,
        "m": scan.params.m,
        "extra": args.extra,
    }
    if not scan.matches_conjecture:
        js = ", ".join(f"j={e.j}" for e in scan.deviations)
        print(
            f"finding: pattern deviates at {js} (expected reducible only at j={scan.params.t})",
            file=sys.stderr,
        )
    return RunReport("conjecture", params, entries), 0 if scan.matches_conjecture else 3


def _int_chain_entry(i: int, chain) -> dict:
    return {
        "i": i,
        "start": chain.start,
        "primes": list(chain.primes),
        "length": chain.length,
        "status": "chain",
        "next_composite": chain.next_value,
    }


def _cmd_intchain(args) -> tuple[RunReport, int]:
    if args.start is not None:
        if args.length is not None or args.bound is not None:
            raise ValueError("--start excludes --length/--bound")
        _, chain = int_chain_length(args.start, args.eps)
        params = {"eps": args.eps, "start": args.start}
        return RunReport("intchain", params, [_int_chain_entry(1, chain)]), 0
    if args.length is None or args.bound is None:
        raise ValueError("need either --start or both --length and --bound")
    found = search_int_chains(args.length, args.eps, args.bound)
    params = {"eps": args.eps, "length": args.length, "bound": args.bound}
    entries = [_int_chain_entry(i, c) for i, c in enumerate(found, start=1)]
    return RunReport("intchain", params, entries), 0


# ---------------------------------------------------------------- frontend


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cunningham",
        description="Polynomial and integer chain toolkit: exact factorization, "
        "irreducibility certificates, chain reports.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("pretty", "json", "csv"), default="pretty",
        help="output format (default: pretty)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", parents=[common], help="factor a polynomial over the rationals")
    p.add_argument("poly", help="polynomial, e.g. '4x^5+2x^4+2x^3+2x^2+x+1'")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("verdict", parents=[common], help="irreducibility verdict with certificate")
    p.add_argument("poly")
    p.set_defaults(func=_cmd_verdict)

    p = sub.add_parser("chain", parents=[common], help="verdicts along x*f+eps iterates of a seed")
    p.add_argument("--seed", required=True, help="starting polynomial")
    p.add_argument("--eps", type=int, choices=(1, -1), required=True)
    p.add_argument("--through", type=int, required=True, help="number of terms to examine")
    p.set_defaults(func=_cmd_chain)

    p = sub.add_parser("family", parents=[common], help="run a built-in seed family chain")
    p.add_argument("--kind", type=int, choices=(1, 2), required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--through", type=int, default=None, help="terms to examine (default k+6)")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("conjecture", parents=[common], help="scan x^j+...+x+m reducibility pattern")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--extra", type=int, default=DEFAULT_EXTRA, help="window beyond t (default 8)")
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("intchain", parents=[common], help="integer prime chains p -> 2p+eps")
    p.add_argument("--eps", type=int, choices=(1, -1), required=True)
    p.add_argument("--start", type=int, help="report the chain from this prime")
    p.add_argument("--length", type=int, help="search for chains of this exact length")
    p.add_argument("--bound", type=int, help="search starts below this bound")
    p.set_defaults(func=_cmd_intchain)

    return parser


def run(argv=None, out: TextIO | None = None) -> int:
    """Parse argv, execute, emit the report; returns the process exit code."""
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    begin = time.perf_counter()
    try:
        report, code = args.func(args)
    except ValueError as exc:  # includes PolyParseError and parameter errors
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1
    report.elapsed_ms = (time.perf_counter() - begin) * 1000.0
    _EMITTERS[args.format](report, out)
    return code


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
