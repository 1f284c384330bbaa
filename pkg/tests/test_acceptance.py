"""One test per acceptance criterion. Each prints a single PASS/FAIL line
(also collected into the pytest terminal summary)."""

import random
import time
from math import gcd

import pytest

from biform import boxes
from biform.asymfit import fit_constant, zeta2_inv_sq
from biform.cli import LEMMA1_GRID_W, LEMMA2_GRID_U, LEMMA4_GRID_F, main, random_coprime, random_primitive, sample_sk
from biform.conic import is_soluble, search_decide
from biform.counting import brute_points, count_brute, count_total, sk_exact, sk_mainterm
from biform.param import count_T, decompose, recompose, validate

from conftest import ACCEPTANCE_LINES

SEED = 20240601


def report(n, ok, detail):
    line = f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


def test_1_exact_small_count():
    t0 = time.perf_counter()
    vals = (count_brute(4).count, count_total(4, "fiber").count, count_total(4, "param").count)
    small = [count_brute(B).count for B in (1, 2, 3)]
    dt = time.perf_counter() - t0
    ok = vals == (12, 12, 12) and small == [0, 0, 0] and dt < 1
    assert report(1, ok, f"N(4) brute/fiber/param = {vals}, N(1..3) = {small}, {dt:.3f}s")


def test_2_bijection_identity():
    grid = sorted({2**k for k in range(2, 15)} | {10, 100, 1000, 10000})
    t0 = time.perf_counter()
    bad = [B for B in grid if count_T(B) != 4 * count_brute(B).count]
    dt = time.perf_counter() - t0
    ok = not bad and dt < 300
    assert report(2, ok, f"T(B) = 4 N(B) on {len(grid)} bounds up to 2^14, mismatches {bad}, {dt:.1f}s")


def test_3_linear_box_bound():
    rng = random.Random(SEED)
    worst, viol, n = 0.0, 0, 0
    cases = []
    for _ in range(10**4):
        cases.append((random_primitive(rng, 1000), tuple(rng.uniform(1, 1000) for _ in range(3))))
    ws = list(LEMMA1_GRID_W) + [random_primitive(rng, 1000) for _ in range(20)]
    cases += [(w, b) for w in ws for b in boxes.dyadic_grid(8)]
    for w, b in cases:
        r = boxes.lemma1_report(w, b)
        viol += r.observed > r.envelope
        worst = max(worst, r.ratio)
        n += 1
    assert report(3, viol == 0, f"{viol} violations over {n} (w, box) pairs, max ratio {worst:.4f}")


def test_4_conic_oracle_equivalence():
    t0 = time.perf_counter()
    L = 40
    n, bad = 0, []
    for a in range(-L, L + 1):
        for b in range(-L, L + 1):
            if not a or not b or gcd(a, b) != 1:
                continue
            for c in range(-L, L + 1):
                if c and gcd(a, c) == 1 and gcd(b, c) == 1:
                    n += 1
                    s = search_decide((a, b, c))
                    if s is None or s != is_soluble((a, b, c)):
                        bad.append(((a, b, c), s))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 600
    assert report(4, ok, f"{len(bad)} disagreements or inconclusive over {n} triples, {dt:.1f}s; first {bad[:3]}")


def test_5_envelope_ratios():
    rng = random.Random(SEED)
    r2 = [boxes.lemma2_report(u, b).ratio for u in LEMMA2_GRID_U for b in boxes.dyadic_grid(6)]
    for _ in range(1000):
        r2.append(boxes.lemma2_report(random_coprime(rng, 50),
                                      tuple(rng.uniform(1, 64) for _ in range(3))).ratio)
    vgrid = [(float(2**k),) * 3 for k in range(5)]
    r4 = []
    worst4 = (0.0, None)
    for f in LEMMA4_GRID_F:
        for ub in boxes.dyadic_grid(6):
            for vb in vgrid:
                r = boxes.lemma4_report(f, ub, vb)
                r4.append(r.ratio)
                if r.ratio > worst4[0]:
                    worst4 = (r.ratio, (f, ub.bounds, vb))
    for _ in range(1000):
        f = random_coprime(rng, 7)
        r = boxes.lemma4_report(f, tuple(rng.uniform(1, 64) for _ in range(3)),
                                tuple(rng.uniform(1, 16) for _ in range(3)))
        r4.append(r.ratio)
    m2, m4 = max(r2), max(r4)
    ok = m2 <= 10 and m4 <= 10 and m2 < float("inf") and m4 < float("inf")
    assert report(5, ok, f"max ratio quadratic {m2:.3f} over {len(r2)}, mixed {m4:.3f} over {len(r4)} "
                         f"(worst mixed at f, U, V = {worst4[1]})")


def test_6_growth_rate():
    t0 = time.perf_counter()
    recs = [count_total(B, "fiber", shards=8) for B in (10**3, 10**4, 10**5, 10**6)]
    dt = time.perf_counter() - t0
    rep = fit_constant(recs)
    ratios = [r for _, _, r in rep.rows]
    in_band = all(0.3 <= r <= 3 for r in ratios)
    stable = rep.stability < 0.25
    above = rep.fitted_c > 0.9 * zeta2_inv_sq()
    ok = in_band and stable and above and dt <= 900
    counts = [r.count for r in recs]
    assert report(6, ok, f"N = {counts}, N/(B log B) = {[round(r, 3) for r in ratios]} "
                         f"(band [0.3, 3]: {in_band}), stability {rep.stability:.3f}, "
                         f"fitted_c {rep.fitted_c:.3f} vs 0.9/zeta(2)^2 = {0.9 * zeta2_inv_sq():.3f}, {dt:.1f}s")


def test_7_fiber_formula():
    rng = random.Random(SEED)
    worst = 0.0
    bad = 0
    for _ in range(100):
        y, k, B = sample_sk(rng, 10**6)
        assert gcd(y[0], y[2]) == 1
        err = abs(sk_exact(y, B, k) - sk_mainterm(y, B, k))
        env = 8 * (B**0.5 / (k * y[2] ** 0.5) + 1)
        bad += err > env
        worst = max(worst, err / env)
    assert report(7, bad == 0, f"{bad} of 100 outside the envelope, max err/envelope {worst:.4f}")


def test_8_roundtrip():
    pts = brute_points(10**4)
    bad_pts = 0
    for x, y in pts:
        t = decompose(x.coords, y.coords)
        bad_pts += not (validate(t) and recompose(t) == (x.coords, y.coords))
    total, tuples = count_T(1000, collect=True)
    bad_t = 0
    for t in tuples:
        x, y = recompose(t)
        bad_t += not (validate(t) and decompose(x, y) == t)
    ok = bad_pts == 0 and bad_t == 0 and len(tuples) == total
    assert report(8, ok, f"{bad_pts} failures over {len(pts)} points (B = 10^4), "
                         f"{bad_t} over {len(tuples)} tuples (B = 10^3)")


def test_9_shard_determinism(tmp_path):
    counts = {}
    for s in (1, 2, 4, 8):
        out = tmp_path / f"s{s}.csv"
        assert main(["count", "--bound", "100000", "--method", "fiber", "--shards", str(s), "--output", str(out)]) == 0
        row = [l for l in out.read_text().splitlines() if not l.startswith("#")][1]
        counts[s] = int(row.split(",")[2])
    ok = len(set(counts.values())) == 1
    assert report(9, ok, f"N(10^5) by shard count {counts}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
