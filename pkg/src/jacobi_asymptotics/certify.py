"""Grid certification: check every remainder bound against the recurrence."""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .coeffs import coefficients_at
from .expand import DEFAULT_CONVENTION, Convention, evaluate, phase
from .oracle import RATIONAL_N_CAP, oracle_value_at, oracle_value_rational
from .params import DomainError, Parameters, Region, RegionPoint, validate
from .scaled import ScaledReal

DEFAULT_SLACK = 1e-9
ROUNDING_FLOOR = 1e-13
NODE_LEVEL = 1e-3

CSV_COLUMNS = ("n", "gamma", "alpha", "beta", "p", "region", "approx_mantissa",
               "approx_exp2", "exact_mantissa", "exact_exp2", "zeta_hat", "bound",
               "ratio", "pass", "flags")


@dataclass(frozen=True)
class GridSpec:
    region: Region
    n: tuple[int, ...]
    gamma: tuple[float, ...]
    alpha: tuple[float, ...] = ()
    beta: tuple[float, ...] = ()
    p: tuple[int, ...] = (1,)
    pairs: tuple[tuple[float, float], ...] | None = None
    oracle: str = "scaled"
    slack: float = DEFAULT_SLACK
    convention: Convention = DEFAULT_CONVENTION

    def __post_init__(self):
        object.__setattr__(self, "region", Region(self.region))
        object.__setattr__(self, "convention", Convention(self.convention))
        object.__setattr__(self, "n", tuple(sorted(int(v) for v in self.n)))
        for name in ("gamma", "alpha", "beta"):
            object.__setattr__(self, name, tuple(float(v) for v in getattr(self, name)))
        object.__setattr__(self, "p", tuple(int(v) for v in self.p))
        if self.pairs is not None:
            object.__setattr__(self, "pairs",
                               tuple((float(a), float(b)) for a, b in self.pairs))
        if self.oracle not in ("scaled", "rational"):
            raise DomainError(f"unknown oracle mode {self.oracle!r}")

    def exponent_pairs(self):
        if self.pairs is not None:
            return list(self.pairs)
        return list(itertools.product(self.alpha, self.beta))

    def points(self):
        """Grid points in a fixed order: gamma, (alpha, beta), p, then n ascending."""
        for g in self.gamma:
            for a, b in self.exponent_pairs():
                for p in self.p:
                    for n in self.n:
                        yield n, g, a, b, p

    @classmethod
    def from_dict(cls, d: dict) -> GridSpec:
        keys = {"region", "n", "gamma", "alpha", "beta", "p", "pairs", "oracle", "slack",
                "convention"}
        unknown = set(d) - keys
        if unknown:
            raise DomainError(f"unknown grid keys: {sorted(unknown)}")
        return cls(**d)


@dataclass(frozen=True)
class CertificateRecord:
    n: int
    gamma: float
    alpha: float
    beta: float
    p: int
    region: Region
    approx: ScaledReal
    exact: ScaledReal
    zeta_hat: float
    bound: float
    passed: bool
    n_threshold: int = 1
    flags: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ratio(self) -> float:
        return abs(self.zeta_hat) / self.bound

    @property
    def above_threshold(self) -> bool:
        return self.n >= self.n_threshold

    def row(self) -> dict:
        return {
            "n": str(self.n),
            "gamma": f"{self.gamma:.17g}",
            "alpha": f"{self.alpha:.17g}",
            "beta": f"{self.beta:.17g}",
            "p": str(self.p),
            "region": self.region.value,
            "approx_mantissa": f"{self.approx.mantissa:.17g}",
            "approx_exp2": str(self.approx.exponent),
            "exact_mantissa": f"{self.exact.mantissa:.17g}",
            "exact_exp2": str(self.exact.exponent),
            "zeta_hat": f"{self.zeta_hat:.17g}",
            "bound": f"{self.bound:.17g}",
            "ratio": f"{self.ratio:.17g}",
            "pass": "true" if self.passed else "false",
            "flags": ";".join(self.flags),
        }


def _oracle(region: RegionPoint, n: int, params: Parameters, mode: str) -> ScaledReal:
    if mode == "rational":
        return oracle_value_rational(region, n, params)
    return oracle_value_at(region, n, params)


def certify_point(n: int, gamma: float, params: Parameters, p: int, region,
                  slack: float = DEFAULT_SLACK, oracle: str = "scaled",
                  convention: Convention = DEFAULT_CONVENTION) -> CertificateRecord:
    point = RegionPoint(Region(region), gamma)
    result = evaluate(point, n, params, p, convention)
    exact = _oracle(point, n, params, oracle)
    if not math.isfinite(exact.mantissa):  # pragma: no cover - ScaledReal cannot overflow
        raise OverflowError("oracle overflow")
    zeta = float(exact / result.prefactor) - result.normalized_sum
    bound = result.bundle.certified_bound
    flags = list(result.flags)
    if point.kind is Region.OSC and abs(math.cos(phase(n, gamma, params))) < NODE_LEVEL:
        flags.append("near-node")
    return CertificateRecord(n=n, gamma=point.gamma, alpha=float(params.alpha),
                             beta=float(params.beta), p=p, region=point.kind,
                             approx=result.value, exact=exact, zeta_hat=zeta, bound=bound,
                             passed=abs(zeta) <= bound * (1 + slack),
                             n_threshold=result.bundle.n_threshold, flags=tuple(flags))


@dataclass
class SweepReport:
    records: list[CertificateRecord]
    summary: dict

    def csv_text(self) -> str:
        return records_to_csv(self.records)

    def json_text(self) -> str:
        return json.dumps({"records": [r.row() for r in self.records],
                           "summary": self.summary}, indent=1)


def _validate_grid(grid: GridSpec):
    for n, g, a, b, p in grid.points():
        if n < 1 or p < 1:
            raise DomainError(f"grid point n={n}, p={p}: need n >= 1 and p >= 1")
        if grid.oracle == "rational" and n > RATIONAL_N_CAP:
            raise DomainError(f"grid point n={n} exceeds the rational oracle cap {RATIONAL_N_CAP}")
        try:
            point = RegionPoint(grid.region, g)
            params = Parameters(a, b)
        except DomainError as exc:
            raise DomainError(f"grid point gamma={g}, alpha={a}, beta={b}: {exc}") from None
        report = validate(point, params)
        if not report.valid:
            raise DomainError(f"grid point gamma={g}, alpha={a}, beta={b}: {report.reason()}")


def _summary(records, wall_ms: float) -> dict:
    def stats(rs):
        if not rs:
            return {"n_points": 0, "pass_rate": 1.0, "worst_ratio": 0.0}
        return {"n_points": len(rs),
                "pass_rate": sum(r.passed for r in rs) / len(rs),
                "worst_ratio": max(r.ratio for r in rs)}

    above = [r for r in records if r.above_threshold]
    below = [r for r in records if not r.above_threshold]
    out = stats(records)
    out["pass_rate_above_threshold"] = stats(above)["pass_rate"]
    out["below_threshold"] = {"n_points": len(below), "passed": sum(r.passed for r in below)}
    out["per_p"] = {str(p): stats([r for r in records if r.p == p])
                    for p in sorted({r.p for r in records})}
    out["wall_ms"] = round(wall_ms, 3)
    return out


def sweep(grid: GridSpec, threads: int = 1) -> SweepReport:
    """Certify every grid point; output order is the grid order for any ``threads``."""
    _validate_grid(grid)
    start = time.perf_counter()
    points = list(grid.points())
    # fill the coefficient memo up front so workers only read it
    for g in grid.gamma:
        for a, b in grid.exponent_pairs():
            for p in grid.p:
                coefficients_at(RegionPoint(grid.region, g), Parameters(a, b), p)

    def task(pt):
        n, g, a, b, p = pt
        return certify_point(n, g, Parameters(a, b), p, grid.region, grid.slack,
                             grid.oracle, grid.convention)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(task, points))
    else:
        records = [task(pt) for pt in points]
    wall = (time.perf_counter() - start) * 1e3
    return SweepReport(records, _summary(records, wall))


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(r.row())
    return buf.getvalue()


def _envelope(n: int, gamma: float, params: Parameters, p: int, convention) -> float:
    """Amplitude of the oscillatory remainder near degree ``n``.

    The remainder is ``Re(E_n e^{i theta_n})`` with ``E_n`` varying slowly in
    ``n``; two consecutive degrees determine ``E_n`` up to ``O(1/n)``.
    """
    vals = []
    for m in (n, n + 1):
        vals.append((certify_point(m, gamma, params, p, Region.OSC,
                                   convention=convention).zeta_hat,
                     phase(m, gamma, params)))
    (z0, t0), (z1, t1) = vals
    mat = np.array([[math.cos(t0), -math.sin(t0)], [math.cos(t1), -math.sin(t1)]])
    re, im = np.linalg.solve(mat, [z0, z1])
    return math.hypot(re, im)


def convergence_slope(gamma: float, params: Parameters, p: int, region, n_list,
                      convention: Convention = DEFAULT_CONVENTION):
    """Least-squares slope of ``log|remainder|`` against ``log n``.

    Returns ``None`` (skip) when ``|A_p| <= 1e-10``: the remainder is then of
    higher order and no slope of ``-p`` is expected. In the oscillatory
    region the remainder amplitude is used rather than its raw value, whose
    sign changes with the phase.
    """
    point = RegionPoint(Region(region), gamma)
    table = coefficients_at(point, params, p)
    if abs(table.A[p]) <= 1e-10:
        return None
    xs, ys = [], []
    for n in n_list:
        if point.kind is Region.OUTER:
            rec = certify_point(n, gamma, params, p, Region.OUTER)
            r = abs(rec.zeta_hat)
        else:
            r = _envelope(n, gamma, params, p, Convention(convention))
        if r <= ROUNDING_FLOOR:
            continue
        xs.append(math.log(n))
        ys.append(math.log(r))
    if len(xs) < 4:
        raise ValueError(f"only {len(xs)} usable points for the slope fit (need 4)")
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)
