"""Command-line front end: ``report``, ``scan``, ``oracle-verify`` and ``center``.

Exit codes: 0 success, 1 oracle law failure, 2 bad input, 3 budget exceeded
(or instances skipped for budget in ``oracle-verify``).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from math import gcd
from typing import Optional, Sequence

from . import __version__, center, classify, invariants, oracle
from .core import SkewParams, parse_inline, parse_params, validate_and_normalize
from .errors import ArithmeticOverflow, BudgetExceeded, SkewParamsError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


@dataclass(frozen=True)
class ReportDocument:
    """Everything known about one ring, in a fixed serialization order."""

    input: dict
    invariants: dict
    classification: dict
    center: Optional[dict]
    crosschecks: list

    def to_dict(self) -> dict:
        return {
            "input": self.input,
            "invariants": self.invariants,
            "classification": self.classification,
            "center": self.center,
            "crosschecks": self.crosschecks,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls(**json.loads(text))


def build_report(p: SkewParams, with_center: bool = True, budget: int = center.RESIDUE_BUDGET) -> ReportDocument:
    cls_dict = classify.classification_report(p).to_dict()
    checks = cls_dict.pop("crosschecks")
    return ReportDocument(
        input=p.to_dict(),
        invariants=invariants.exponent_invariants(p).to_dict(),
        classification=cls_dict,
        center=center.center_presentation(p, budget).to_dict() if with_center else None,
        crosschecks=checks,
    )


def _poly_str(coeffs: Sequence[int]) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if k and abs(c) == 1:
            terms.append(("-" if c < 0 else "+") + mono)
        else:
            terms.append(f"{c:+d}" + ("" if k == 0 else "*" + mono))
    s = "".join(terms).lstrip("+")
    return s or "0"


def _word_str(u: Sequence[int]) -> str:
    parts = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(u) if e]
    return "*".join(parts) or "1"


def render_pretty(doc: ReportDocument) -> str:
    inp, inv, cl = doc.input, doc.invariants, doc.classification
    lines = [f"n = {inp['n']}, ell = {inp['ell']}", "B ="]
    lines += ["  " + " ".join(f"{v:>3}" for v in row) for row in inp["b"]]
    lines.append("")
    for key in ("f", "oj", "oa", "od", "pg", "o_phi"):
        lines.append(f"{key:<8} {tuple(inv[key])}")
    lines.append(f"|O|      {inv['order_O']}")
    lines.append(f"|H|      {inv['order_H']}")
    lines.append("")
    for key in ("auslander", "regular", "gorenstein", "calabi_yau"):
        lines.append(f"{key:<11} {'yes' if cl[key] else 'no'}")
    w = cl["reflection_witness"]
    if w:
        lines.append(f"reflection  u={tuple(w['u'])} scales x{w['axis']} by xi^{w['lambda']}")
    else:
        lines.append("reflection  none")
    lines.append(f"singular    {cl['isolated_singularities_note']}")
    if doc.center is not None:
        c = doc.center
        red = c["series"]["reduced"]
        lines.append("")
        lines.append("center generators: " + ", ".join(_word_str(g) for g in c["generators"]))
        lines.append(f"hilbert series: ({_poly_str(red['numerator'])}) / ({_poly_str(red['denominator'])})")
        lines.append(f"hypersurface shape: {'yes' if c['numerator_cyclotomic'] else 'no'}")
    if doc.crosschecks:
        lines.append("")
        lines.append("crosschecks:")
        for chk in doc.crosschecks:
            lines.append(f"  {chk['name']:<18} {str(chk['value']).lower():<6} {chk['status']}")
    return "\n".join(lines)


def _read_params(args) -> SkewParams:
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                return parse_params(fh.read())
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from exc
    if args.b is not None:
        if args.ell is None:
            raise InputError("--b needs --ell")
        return parse_inline(args.b, int(args.ell))
    raise InputError("give --input FILE or --ell N --b ROWS")


def cmd_report(args) -> int:
    doc = build_report(_read_params(args), with_center=not args.no_center, budget=args.budget)
    print(render_pretty(doc) if args.pretty else doc.to_json())
    return EXIT_OK


def cmd_center(args) -> int:
    p = _read_params(args)
    pres = center.center_presentation(p, args.budget)
    bound = args.degree_bound if args.degree_bound is not None else 2 * p.ell
    expansion = center.expand_series(pres.series, bound)
    if args.pretty:
        red = pres.series.reduced_numerator, pres.series.reduced_denominator
        print("generators: " + ", ".join(_word_str(g) for g in pres.generators))
        print(f"series: ({_poly_str(red[0])}) / ({_poly_str(red[1])})")
        print(f"hypersurface shape: {'yes' if pres.numerator_cyclotomic else 'no'}")
        print(f"coefficients 0..{bound}: " + " ".join(map(str, expansion)))
    else:
        out = {"input": p.to_dict(), **pres.to_dict(), "expansion": expansion}
        print(json.dumps(out))
    return EXIT_OK


def parse_ell_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi) if sep else int(lo)
    except ValueError as exc:
        raise InputError(f"bad --ell range {text!r}") from exc
    if a < 2 or b < a:
        raise InputError(f"bad --ell range {text!r}")
    return list(range(a, b + 1))


def _from_upper(n: int, ell: int, upper: Sequence[int]) -> list[list[int]]:
    b = [[0] * n for _ in range(n)]
    it = iter(upper)
    for i in range(n):
        for j in range(i + 1, n):
            b[i][j] = next(it) % ell
            b[j][i] = -b[i][j] % ell
    return b


def canonical_upper(n: int, ell: int, upper: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least upper triangle over simultaneous row/column permutations."""
    b = _from_upper(n, ell, upper)
    return min(
        tuple(b[s[i]][s[j]] for i in range(n) for j in range(i + 1, n)) for s in permutations(range(n))
    )


def scan_grid(n: int, ells: Sequence[int], only: Optional[tuple[int, ...]] = None, canonical: bool = False):
    """Minimal noncommutative upper triangles, lexicographic in ``(ell, entries)``."""
    m = n * (n - 1) // 2
    for ell in ells:
        cands = [tuple(v % ell for v in only)] if only is not None else product(range(ell), repeat=m)
        for upper in cands:
            if gcd(ell, *upper) != 1:
                continue
            if canonical and canonical_upper(n, ell, upper) != upper:
                continue
            yield ell, upper


def scan_row(task: tuple[int, int, tuple[int, ...]]) -> str:
    n, ell, upper = task
    p = validate_and_normalize(_from_upper(n, ell, upper), ell)
    prof = invariants.exponent_invariants(p)
    flags = (classify.is_small(p), classify.is_regular(p), classify.is_gorenstein(p), classify.is_calabi_yau(p))
    cols = [str(ell), ",".join(map(str, upper)), ",".join(map(str, prof.f)), str(prof.order_O)]
    return "\t".join(cols + [str(x).lower() for x in flags])


SCAN_HEADER = "ell\tb\tf\torder_O\tauslander\tregular\tgorenstein\tcalabi_yau"


def cmd_scan(args) -> int:
    ells = parse_ell_range(args.ell)
    n = args.n
    m = n * (n - 1) // 2
    only = None
    if args.only:
        try:
            only = tuple(int(v) for v in args.only.split(","))
        except ValueError as exc:
            raise InputError(f"bad --only {args.only!r}") from exc
        if len(only) != m:
            raise InputError(f"--only needs {m} entries for n={n}")
    grid_size = len(ells) if only else sum(ell**m for ell in ells)
    if grid_size > args.max_rows:
        raise BudgetExceeded(f"BudgetExceeded: grid of {grid_size} matrices exceeds --max-rows {args.max_rows}")
    tasks = [(n, ell, upper) for ell, upper in scan_grid(n, ells, only, args.canonical)]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(scan_row, tasks, chunksize=max(1, len(tasks) // (4 * args.workers))))
    else:
        rows = [scan_row(t) for t in tasks]
    out = [SCAN_HEADER] + rows
    counts = {k: sum(r.split("\t")[4 + i] == "true" for r in rows) for i, k in enumerate(SCAN_HEADER.split("\t")[4:])}
    out.append(f"# rows={len(rows)} " + " ".join(f"{k}={v}" for k, v in counts.items()))
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def cmd_oracle_verify(args) -> int:
    if args.input or args.b is not None:
        instances = [("input", _read_params(args))]
    else:
        instances = list(oracle.corpus().items())
        rng = random.Random(args.seed)
        instances += [(f"random-{k}", oracle.random_params(rng)) for k in range(args.count)]

    def on_result(name, p, laws, skipped):
        if skipped:
            print(f"SKIP {name} ell={p.ell} b={list(map(list, p.b))}: {skipped}")
            return
        bad = [law for law, ok in laws if not ok]
        if bad:
            print(f"FAIL {name} ell={p.ell} b={list(map(list, p.b))}: {', '.join(bad)}")

    passed, failed, skipped = oracle.run_verification(instances, args.budget, on_result)
    n_corpus = sum(1 for name, _ in instances if not name.startswith(("random-", "input")))
    if n_corpus:
        print(f"{n_corpus} corpus instances checked")
    if len(instances) > n_corpus:
        print(f"{len(instances) - n_corpus} other instances checked")
    print(f"passed={passed} failed={failed} skipped={skipped}")
    if failed:
        return EXIT_FAIL
    return EXIT_BUDGET if skipped else EXIT_OK


def _add_input(sp) -> None:
    sp.add_argument("--input", help="JSON or 'ell=' text file")
    sp.add_argument("--ell", type=int, help="order of the root of unity")
    sp.add_argument("--b", help="inline matrix, rows separated by ';'")
    sp.add_argument("--budget", type=int, default=center.RESIDUE_BUDGET, help="residue enumeration cap")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewcenter", description="Centers of PI skew polynomial rings")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("report", help="full report for one ring")
    _add_input(sp)
    sp.add_argument("--pretty", action="store_true", help="human-readable text instead of JSON")
    sp.add_argument("--no-center", action="store_true", help="skip generators and Hilbert series")
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("center", help="center generators and Hilbert series")
    _add_input(sp)
    sp.add_argument("--pretty", action="store_true")
    sp.add_argument("--degree-bound", type=int, help="expand the series up to this degree (default 2*ell)")
    sp.set_defaults(func=cmd_center)

    sp = sub.add_parser("scan", help="TSV classification table over a grid")
    sp.add_argument("--n", type=int, choices=(2, 3, 4), required=True)
    sp.add_argument("--ell", required=True, help="value or range like 2..4")
    sp.add_argument("--only", help="single upper triangle, e.g. 15,10,6")
    sp.add_argument("--canonical", action="store_true", help="one representative per variable permutation")
    sp.add_argument("--max-rows", type=int, default=10**6)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("oracle-verify", help="check the fast path against brute force")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--input")
    sp.add_argument("--ell", type=int)
    sp.add_argument("--b")
    sp.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_oracle_verify)
    return ap


def _diagnostic(exc: Exception) -> str:
    msg = str(exc)
    name = type(exc).__name__
    return msg if msg.startswith(name) else f"{name}: {msg}"


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SkewParamsError, ArithmeticOverflow, InputError) as exc:
        print(f"error: {_diagnostic(exc)}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {_diagnostic(exc)}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
