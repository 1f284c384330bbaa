"""Command-line entry point: ``biform-counter <command> ...``.

Every command writes a table (CSV with a versioned comment header, or JSON)
and exits 0 on success, 1 if a hard check failed, 2 on usage errors and 3 when
a resource guard tripped.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from dataclasses import dataclass, field
from math import gcd, isqrt

SCHEMA = "biform-counter v1"
PRNG = "MT19937"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    bound: int | None = None
    method: str = "fiber"
    shards: int = 1
    seed: int = 0
    sieve_limit: int | None = None
    eps: float = 1 / 6
    output_path: str | None = None
    format: str = "csv"
    timings: bool = False
    extra: dict = field(default_factory=dict)


@dataclass
class Result:
    columns: list
    rows: list
    ok: bool = True
    notes: list = field(default_factory=list)


def _rng(seed: int) -> random.Random:
    return random.Random(seed & (2**64 - 1))


def _elapsed(cfg, t0):
    return round(time.perf_counter() - t0, 3) if cfg.timings else ""


def cmd_count(cfg: RunConfig) -> Result:
    from .counting import count_total

    if cfg.bound is None or cfg.bound < 1:
        raise UsageError("count needs --bound >= 1")
    rec = count_total(cfg.bound, cfg.method, cfg.shards)
    el = round(rec.elapsed, 3) if cfg.timings else ""
    return Result(["B", "method", "count", "elapsed_s", "shards"],
                  [[rec.bound, rec.method, rec.count, el, rec.shards]])


def bijection_grid(bmax: int) -> list[int]:
    grid = {B for B in (10, 100, 1000, 10000) if B <= bmax}
    B = 4
    while B <= bmax:
        grid.add(B)
        B *= 2
    return sorted(grid)


def cmd_verify_bijection(cfg: RunConfig) -> Result:
    from .counting import count_brute
    from .param import count_T

    bmax = cfg.extra.get("bmax") or cfg.bound or 1000
    rows, ok = [], True
    for B in bijection_grid(bmax):
        t0 = time.perf_counter()
        n = count_brute(B).count
        t = count_T(B)
        good = t == 4 * n
        ok &= good
        rows.append([B, n, t, good, _elapsed(cfg, t0)])
    return Result(["B", "brute", "T", "T_equals_4N", "elapsed_s"], rows, ok)


def random_primitive(rng, lim):
    while True:
        w = tuple(rng.randint(-lim, lim) for _ in range(3))
        if gcd(gcd(w[0], w[1]), w[2]) == 1:
            return w


def random_coprime(rng, lim):
    while True:
        u = tuple(rng.choice((-1, 1)) * rng.randint(1, lim) for _ in range(3))
        if gcd(u[0], u[1]) == 1 and gcd(u[0], u[2]) == 1 and gcd(u[1], u[2]) == 1:
            return u


LEMMA1_GRID_W = ((1, 1, 1), (1, 2, 3), (1, -1, 0), (1, 0, 0), (2, 3, 5), (7, -11, 13), (1, 1, -2), (3, 5, 8))
LEMMA2_GRID_U = ((1, 1, -1), (1, 1, -2), (1, 2, -3), (2, 3, -5), (1, -1, 1), (3, 5, -7))
LEMMA4_GRID_F = ((1, 1, 1), (1, 1, -2), (1, 2, -3))


def cmd_bounds(cfg: RunConfig) -> Result:
    from . import boxes

    lemma = cfg.extra.get("lemma")
    maxpow = cfg.extra.get("maxpow", 6)
    samples = cfg.extra.get("samples", 1000)
    rng = _rng(cfg.seed)
    cols = ["source", "params", "box", "observed", "envelope", "ratio"]
    rows, ok = [], True
    if lemma == 1:
        cols.append("holds")
        cases = [("grid", w, b.bounds) for w in LEMMA1_GRID_W for b in boxes.dyadic_grid(maxpow)]
        for _ in range(samples):
            w = random_primitive(rng, 1000)
            cases.append(("sample", w, tuple(rng.uniform(1, 1000) for _ in range(3))))
        for src, w, b in cases:
            r = boxes.lemma1_report(w, b)
            holds = r.observed <= r.envelope
            ok &= holds
            rows.append([src, w, b, r.observed, r.envelope, r.ratio, holds])
    elif lemma == 2:
        cases = [("grid", u, b.bounds) for u in LEMMA2_GRID_U for b in boxes.dyadic_grid(maxpow)]
        for _ in range(samples):
            u = random_coprime(rng, 50)
            cases.append(("sample", u, tuple(float(rng.randint(1, 64)) for _ in range(3))))
        for src, u, b in cases:
            r = boxes.lemma2_report(u, b)
            rows.append([src, u, b, r.observed, r.envelope, r.ratio])
    elif lemma == 3:
        for f in ((1, 1, 1), (1, 1, -2), (1, 2, -3)):
            for b in boxes.dyadic_grid(min(maxpow, 3)):
                r = boxes.lemma3_report(f, b, cfg.eps)
                rows.append(["grid", f, b.bounds, r.observed, r.envelope, r.ratio])
    elif lemma == 4:
        vgrid = [boxes.Box3((float(2**k),) * 3) for k in range(min(maxpow, 4) + 1)]
        cases = [("grid", f, ub.bounds, vb.bounds) for f in LEMMA4_GRID_F
                 for ub in boxes.dyadic_grid(maxpow) for vb in vgrid]
        for _ in range(samples):
            f = random_coprime(rng, 7)
            ub = tuple(float(rng.randint(1, 64)) for _ in range(3))
            vb = tuple(float(rng.randint(1, 16)) for _ in range(3))
            cases.append(("sample", f, ub, vb))
        cols = ["source", "params", "ubox", "vbox", "observed", "envelope", "ratio"]
        for src, f, ub, vb in cases:
            r = boxes.lemma4_report(f, ub, vb, cfg.eps)
            rows.append([src, f, ub, vb, r.observed, r.envelope, r.ratio])
    else:
        raise UsageError("bounds needs --lemma in {1, 2, 3, 4}")
    return Result(cols, rows, ok)


def cmd_solvable(cfg: RunConfig) -> Result:
    from .conic import find_solution, is_soluble, search_decide

    u = cfg.extra["coeffs"]
    if not all(u):
        raise UsageError("coefficients must be nonzero")
    sol = is_soluble(u)
    wit = find_solution(u)
    ok = (wit is not None) == sol
    check = ""
    if gcd(u[0], u[1]) == 1 and gcd(u[0], u[2]) == 1 and gcd(u[1], u[2]) == 1:
        s = search_decide(u)
        check = "inconclusive" if s is None else ("agree" if s == sol else "disagree")
        ok &= check == "agree"
    verdict = "soluble" if sol else "insoluble"
    return Result(["a", "b", "c", "verdict", "witness", "search_check"],
                  [[u[0], u[1], u[2], verdict, "" if wit is None else wit, check]], ok)


def cmd_sk(cfg: RunConfig) -> Result:
    from .counting import sk_exact, sk_mainterm

    rng = _rng(cfg.seed)
    samples = cfg.extra.get("samples", 100)
    bmax = cfg.bound or 10**6
    rows, ok = [], True
    for _ in range(samples):
        y, k, B = sample_sk(rng, bmax)
        ex = sk_exact(y, B, k)
        mt = sk_mainterm(y, B, k)
        env = 8 * (B**0.5 / (k * y[2] ** 0.5) + 1)
        good = abs(ex - mt) <= env
        ok &= good
        rows.append([y, k, B, ex, mt, abs(ex - mt) / env, good])
    return Result(["y", "k", "B", "exact", "main_term", "err_over_envelope", "within"], rows, ok)


def sample_sk(rng, bmax):
    while True:
        y2 = rng.randint(1, 12)
        y0 = rng.randint(1, 12)
        y1 = rng.randint(1, 12)
        if gcd(y0, y2) == 1:
            break
    k = rng.randint(1, 4)
    B = rng.randint(4 * k * k * y2, bmax)
    return (y0, y1, y2), k, B


def cmd_fit(cfg: RunConfig) -> Result:
    from .asymfit import fit_constant
    from .counting import count_total

    bounds = cfg.extra.get("bounds") or [10**3, 10**4, 10**5, 10**6]
    recs = [count_total(B, cfg.method, cfg.shards) for B in bounds]
    rep = fit_constant(recs)
    rows = [[B, N, r] for B, N, r in rep.rows]
    notes = [f"fitted_c={rep.fitted_c!r}", f"lower_const={rep.lower_const!r}",
             f"stability={rep.stability!r}", f"unstable={rep.unstable}"]
    return Result(["B", "N", "ratio"], rows, True, notes)


def cmd_parametrize(cfg: RunConfig) -> Result:
    from .param import decompose, recompose, validate

    x, y = cfg.extra["x"], cfg.extra["y"]
    t = decompose(x, y)
    ok = validate(t) and recompose(t) == (tuple(x), tuple(y))
    return Result(["f", "g", "h", "u", "v", "valid"], [[t.f, t.g, t.h, t.u, t.v, ok]], ok)


COMMANDS = {
    "count": cmd_count,
    "verify-bijection": cmd_verify_bijection,
    "bounds": cmd_bounds,
    "solvable": cmd_solvable,
    "sk": cmd_sk,
    "fit": cmd_fit,
    "parametrize": cmd_parametrize,
}


def _cell(v):
    if isinstance(v, tuple):
        return " ".join(str(x) for x in v)
    if isinstance(v, float):
        return repr(v)
    return v


def render(cfg: RunConfig, res: Result) -> str:
    if cfg.format == "json":
        doc = {"schema": SCHEMA, "command": cfg.command, "seed": cfg.seed, "prng": PRNG,
               "ok": res.ok, "notes": res.notes,
               "rows": [dict(zip(res.columns, [list(c) if isinstance(c, tuple) else c for c in r]))
                        for r in res.rows]}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    buf.write(f"# {SCHEMA}, command={cfg.command}, seed={cfg.seed}, prng={PRNG}\n")
    for n in res.notes:
        buf.write(f"# {n}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(res.columns)
    for r in res.rows:
        w.writerow([_cell(c) for c in r])
    return buf.getvalue()


def run(cfg: RunConfig, out=None) -> int:
    from .arith import SieveTooSmall
    from .projective import BoundTooLarge

    out = out or sys.stdout
    if cfg.sieve_limit:
        os.environ["BIFORM_SIEVE_LIMIT"] = str(cfg.sieve_limit)
    if cfg.eps <= 0:
        print("error: eps must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        res = COMMANDS[cfg.command](cfg)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (BoundTooLarge, SieveTooSmall, OverflowError, MemoryError) as e:
        print(f"resource guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    text = render(cfg, res)
    if cfg.output_path:
        try:
            with open(cfg.output_path, "w") as fh:
                fh.write(text)
        except OSError as e:
            print(f"cannot write {cfg.output_path}: {e}", file=sys.stderr)
            return EXIT_USAGE
    else:
        out.write(text)
    if not res.ok:
        print("hard check failed", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _int_list(s):
    return [int(v) for v in s.split(",") if v]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="64-bit seed for sampled inputs")
    common.add_argument("--shards", type=int, default=1)
    common.add_argument("--sieve-limit", type=int, default=None,
                        help="cap for the factor sieve (default: $BIFORM_SIEVE_LIMIT or 10^7)")
    common.add_argument("--eps", type=float, default=1 / 6)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", default=None, help="write here instead of stdout")
    common.add_argument("--timings", action="store_true",
                        help="fill elapsed_s columns (output is then not byte-reproducible)")

    p = argparse.ArgumentParser(prog="biform-counter", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="exact N(B)")
    c.add_argument("--bound", type=int, required=True)
    c.add_argument("--method", choices=("brute", "fiber", "param"), default="fiber")

    v = sub.add_parser("verify-bijection", parents=[common], help="T(B) = 4 N(B) over a grid")
    v.add_argument("--bmax", type=int, default=1000)

    b = sub.add_parser("bounds", parents=[common], help="box counts against envelopes")
    b.add_argument("--lemma", type=int, choices=(1, 2, 3, 4), required=True)
    b.add_argument("--maxpow", type=int, default=6)
    b.add_argument("--samples", type=int, default=1000)

    s = sub.add_parser("solvable", parents=[common], help="decide a v0^2 + b v1^2 + c v2^2 = 0")
    s.add_argument("coeffs", type=int, nargs=3)

    k = sub.add_parser("sk", parents=[common], help="S_k exact against B / (k^2 y2^3)")
    k.add_argument("--bound", type=int, default=10**6, help="largest sampled B")
    k.add_argument("--samples", type=int, default=100)

    f = sub.add_parser("fit", parents=[common], help="fit N(B) = c B log B")
    f.add_argument("--bounds", type=_int_list, default=None, help="comma separated B values")
    f.add_argument("--method", choices=("brute", "fiber", "param"), default="fiber")

    m = sub.add_parser("parametrize", parents=[common], help="gcd parametrisation of a point")
    m.add_argument("point", type=int, nargs=6, metavar="N", help="x0 x1 x2 y0 y1 y2")
    return p


def config_from_args(a) -> RunConfig:
    extra = {}
    for key in ("bmax", "lemma", "maxpow", "samples", "coeffs", "bounds"):
        if hasattr(a, key):
            extra[key] = getattr(a, key)
    if a.command == "parametrize":
        extra["x"], extra["y"] = tuple(a.point[:3]), tuple(a.point[3:])
    if a.command == "solvable":
        extra["coeffs"] = tuple(a.coeffs)
    return RunConfig(command=a.command, bound=getattr(a, "bound", None), method=getattr(a, "method", "fiber"),
                     shards=a.shards, seed=a.seed, sieve_limit=a.sieve_limit, eps=a.eps,
                     output_path=a.output, format=a.format, timings=a.timings, extra=extra)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.shards < 1:
        print("error: --shards must be positive", file=sys.stderr)
        return EXIT_USAGE
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
