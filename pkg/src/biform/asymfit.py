"""Fit N(B) = c B log B (natural log) to exact counts and report stability."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field

STABILITY_LIMIT = 0.25


class InsufficientData(ValueError):
    pass


def zeta2_inv_sq() -> float:
    """1 / zeta(2)^2 = 36 / pi^4."""
    return 36 / math.pi**4


@dataclass
class GrowthReport:
    rows: list = field(default_factory=list)  # (B, N, N / (B log B))
    fitted_c: float = 0.0
    lower_const: float = field(default_factory=zeta2_inv_sq)
    stability: float = 0.0

    @property
    def unstable(self) -> bool:
        return self.stability > STABILITY_LIMIT

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["B", "N", "ratio"])
        for B, N, r in self.rows:
            w.writerow([B, N, repr(r)])
        w.writerow([])
        w.writerow(["fitted_c", repr(self.fitted_c)])
        w.writerow(["lower_const", repr(self.lower_const)])
        w.writerow(["stability", repr(self.stability)])
        return buf.getvalue()

    def to_json(self) -> str:
        d = asdict(self)
        d["rows"] = [list(r) for r in self.rows]
        d["unstable"] = self.unstable
        return json.dumps(d, indent=2, sort_keys=True)


def fit_constant(records) -> GrowthReport:
    """Least squares for c in ratio space: c is the mean of N / (B log B).

    ``records`` holds CountRecord objects or (B, N) pairs.
    """
    pts = {}
    for r in records:
        B, N = (r.bound, r.count) if hasattr(r, "bound") else r
        if B >= 3:
            pts[int(B)] = N
    if len(pts) < 3:
        raise InsufficientData("need at least three records with distinct B >= 3")
    rows = [(B, N, N / (B * math.log(B))) for B, N in sorted(pts.items())]
    ratios = [r for _, _, r in rows]
    c = math.fsum(ratios) / len(ratios)
    stab = 0.0
    for a, b in zip(ratios, ratios[1:]):
        if a > 0:
            stab = max(stab, abs(b - a) / a)
    return GrowthReport(rows, c, zeta2_inv_sq(), stab)
