"""Command-line front end.

    upsilon-torsion orders --knot twisted:6,1
    upsilon-torsion upsilon --knot torus:3,4 --format csv --samples 200
    upsilon-torsion sweep --p-range 4..9 --k-range 1..3 --jobs 4

Exit codes: 0 success, 1 invalid input, 2 internal consistency failure,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from decimal import Decimal, localcontext
from fractions import Fraction

from .alexander import Torus, Twisted, alexander_twisted_closed, alexander_twisted_morton, genus_from_spec, parse_knot
from .closedform import closed_orders, upsilon_closed_form
from .errors import ConsistencyError, InvalidInput, InvalidKnotSpec
from .persistence import barcode_at, barcode_by_ranks
from .staircase import staircase_from_gaps
from .upsilon import extract_orders, ord_from_longest_gap, upsilon_torsion

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_MISMATCH = 0, 1, 2, 3
SUBCOMMANDS = ("alexander", "gaps", "staircase", "upsilon", "orders", "verify", "sweep")
ORACLE_SEED = 20240531


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def frac(x: Fraction) -> str:
    """Exact ``"num/den"`` rendering (always with a denominator)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def decimal12(x: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 12
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return format(d.normalize(), "f") if d else "0"


def _range(text: str, field: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise InvalidInput(f"{field}: expected 'a..b', got {text!r}") from None
    if not sep or a > b:
        raise InvalidInput(f"{field}: expected 'a..b' with a <= b, got {text!r}")
    return range(a, b + 1)


# -- records ---------------------------------------------------------------


def _upsilon_pairs(u):
    return [[frac(b), frac(v)] for b, v in zip(u.breakpoints, u.values)]


def run_checks(spec, u, orders, stair) -> list[dict]:
    """Named checks for ``verify``; each carries ``internal`` to pick the exit code."""
    checks = []

    def add(name, passed, detail="", internal=False):
        checks.append({"name": name, "passed": bool(passed), "detail": detail, "internal": internal})

    sym = all(u(2 - b) == v for b, v in zip(u.breakpoints, u.values))
    add("symmetry", sym, "U(t) = U(2-t) at every breakpoint", internal=True)

    rng = random.Random(ORACLE_SEED)
    agree = True
    for _ in range(5):
        den = rng.randint(1, 97)
        t = Fraction(rng.randint(0, 2 * den), den)
        if barcode_at(stair, t).multiset() != barcode_by_ranks(stair, t).multiset():
            agree = False
    add("barcode_oracle", agree, "column reduction = rank oracle at 5 random t", internal=True)

    longest = ord_from_longest_gap(spec.gaps())
    add("ord_longest_gap", orders.ord == longest, f"slope {orders.ord}, longest gap {longest}")

    if isinstance(spec, Twisted):
        p, k = spec.p, spec.k
        if p >= 3:
            add("quotient_vs_sum", alexander_twisted_morton(p, k) == alexander_twisted_closed(p, k),
                "quotient form = literal sum")
        want_ord, want_prime = closed_orders(p)
        add("family_ord", orders.ord == want_ord, f"Ord = {orders.ord}, expected {want_ord}")
        if want_prime is not None:
            add("family_ord_prime", orders.ord_prime == want_prime,
                f"Ord' = {frac(orders.ord_prime)}, expected {frac(want_prime)}")
        if p == 2 or p >= 4:
            add("closed_form_upsilon", u == upsilon_closed_form(p), "engine = closed form")
    elif isinstance(spec, Torus):
        add("torus_ord", orders.ord == spec.p - 1, f"Ord = {orders.ord}, expected {spec.p - 1}")
        if spec.q == spec.p + 1:
            want = Fraction(spec.p // 2)
            add("torus_ord_prime", orders.ord_prime == want,
                f"Ord' = {frac(orders.ord_prime)}, expected {frac(want)}")
    return checks


def build_record(command: str, knot: str) -> dict:
    try:
        spec = parse_knot(knot)
    except InvalidInput as exc:
        raise InvalidKnotSpec(f"knot {knot!r}: {exc}") from None
    rec: dict = {"knot": knot}
    poly = spec.alexander()
    if command in ("alexander", "verify"):
        rec["alexander"] = poly.to_dense()
    gaps = spec.gaps()
    if command in ("gaps", "verify"):
        rec["gaps"] = list(gaps)
        rec["genus"] = genus_from_spec(gaps)
    stair = staircase_from_gaps(gaps)
    if command == "staircase":
        rec.update(stair.as_dict())
        return rec
    if command in ("alexander", "gaps"):
        return rec
    u = upsilon_torsion(stair)
    orders = extract_orders(u)
    if command in ("upsilon", "verify"):
        rec["upsilon"] = _upsilon_pairs(u)
    if command in ("orders", "verify"):
        rec["ord"] = orders.ord
        rec["ord_prime"] = frac(orders.ord_prime)
    if command == "verify":
        rec["checks"] = run_checks(spec, u, orders, stair)
    rec["_u"] = u
    return rec


def sweep_row(pk: tuple[int, int]) -> dict:
    p, k = pk
    u = upsilon_torsion(staircase_from_gaps(Twisted(p, k).gaps()))
    o = extract_orders(u)
    return {"p": p, "k": k, "ord": o.ord, "ord_prime": frac(o.ord_prime),
            "breakpoints": len(u.breakpoints)}


def run_sweep(p_range: range, k_range: range, jobs: int) -> list[dict]:
    cells = [(p, k) for p in p_range for k in k_range]
    if jobs <= 1:
        rows = [sweep_row(c) for c in cells]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(sweep_row, cells))
    return sorted(rows, key=lambda r: (r["p"], r["k"]))


# -- rendering -------------------------------------------------------------


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render_csv(command: str, rec: dict, samples: int | None) -> str:
    if command == "alexander":
        return _csv(enumerate(rec["alexander"]), ["exponent", "coefficient"])
    if command == "gaps":
        return _csv(enumerate(rec["gaps"]), ["index", "gap"])
    if command == "staircase":
        targets = {}
        for a in rec["arrows"]:
            targets.setdefault(a["source"], []).append(str(a["target"]))
        rows = [[g["index"], g["x"], g["y"], g["grading"], ";".join(targets.get(g["index"], []))]
                for g in rec["generators"]]
        return _csv(rows, ["index", "x", "y", "grading", "targets"])
    if command == "upsilon":
        u = rec["_u"]
        if samples:
            pts = [Fraction(2 * i, samples) for i in range(samples + 1)]
            return _csv([[decimal12(t), decimal12(u(t))] for t in pts], ["t", "value"])
        return _csv(rec["upsilon"], ["t", "value"])
    if command == "orders":
        return _csv([[rec["ord"], rec["ord_prime"]]], ["ord", "ord_prime"])
    if command == "verify":
        return _csv([[c["name"], "pass" if c["passed"] else "fail", c["detail"]] for c in rec["checks"]],
                    ["check", "result", "detail"])
    raise AssertionError(command)


def render_json(rec: dict) -> str:
    return json.dumps({k: v for k, v in rec.items() if not k.startswith("_")}, indent=2)


# -- entry point -----------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="upsilon-torsion", description="Upsilon torsion function of L-space knots.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        if name == "sweep":
            sp.add_argument("--p-range", required=True)
            sp.add_argument("--k-range", required=True)
            sp.add_argument("--jobs", type=int, default=1)
        else:
            sp.add_argument("--knot", required=True,
                            help="torus:p,q | twisted:p,k | gaps:a1,a2,... | alex:c0,c1,...")
        if name == "upsilon":
            sp.add_argument("--samples", type=int, default=None)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        if args.command == "sweep":
            if args.jobs < 1:
                raise InvalidInput(f"jobs: must be >= 1, got {args.jobs}")
            rows = run_sweep(_range(args.p_range, "p-range"), _range(args.k_range, "k-range"), args.jobs)
            if args.format == "json":
                out.write(json.dumps(rows, indent=2) + "\n")
            else:
                header = ["p", "k", "ord", "ord_prime", "breakpoints"]
                out.write(_csv([[r[h] for h in header] for r in rows], header))
            return EXIT_OK
        samples = getattr(args, "samples", None)
        if samples is not None and samples < 1:
            raise InvalidInput(f"samples: must be >= 1, got {samples}")
        rec = build_record(args.command, args.knot)
    except InvalidInput as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ConsistencyError as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL

    if args.format == "json":
        out.write(render_json(rec) + "\n")
    else:
        out.write(render_csv(args.command, rec, samples))

    if args.command == "verify":
        failed = [c for c in rec["checks"] if not c["passed"]]
        for c in failed:
            err.write(f"FAIL {c['name']}: {c['detail']}\n")
        if any(c["internal"] for c in failed):
            return EXIT_INTERNAL
        if failed:
            return EXIT_MISMATCH
    return EXIT_OK


def main() -> None:
    sys.exit(run())
