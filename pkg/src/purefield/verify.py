"""Independent checks of the closed forms against Newton polygons and brute force."""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from . import core
from .arith import is_squarefree, unit_power_valuation
from .errors import OreRegularityError, PureFieldError, ReducibleError
from .newton import (
    IntPolynomial,
    NewtonPolygon,
    build_polygon,
    lattice_count,
    ore_index_valuation,
)


def shifted_polynomial(p: int, s: int, a: int) -> IntPolynomial:
    """Expand (x + a)^(p^s) - a."""
    if a % p == 0:
        raise ValueError(f"{p} divides {a}")
    n = p**s
    coeffs = [math.comb(n, k) * a ** (n - k) for k in range(n + 1)]
    coeffs[0] -= a
    return IntPolynomial(tuple(coeffs))


def predicted_vertices(p: int, s: int, r: int) -> list[tuple[int, int]]:
    """Vertex set of the p-polygon of (x + a)^(p^s) - a when v_p(a^(p-1) - 1) = r + 1 >= 2."""
    if r < 1:
        raise ValueError("r must be at least 1")
    n = p**s
    if r > s:
        top = s
    elif p != 2:
        top = r
    else:
        top = r - 1
    return [(0, 0)] + [(n - p ** (s - i), i) for i in range(1, top + 1)] + [(n, r + 1)]


def _expected_vertices(p: int, s: int, a: int) -> list[tuple[int, int]]:
    r = unit_power_valuation(a, p) - 1
    if r == 0:
        return [(0, 0), (p**s, 1)]
    return predicted_vertices(p, s, r)


def check_vertex_prediction(p: int, s: int, a: int) -> bool:
    poly = build_polygon(shifted_polynomial(p, s, a), p)
    return list(poly.vertices) == _expected_vertices(p, s, a)


def check_global_relation(n: int, a: int) -> bool:
    f = core.validate(n, a)
    d = core.discriminant(f).value()
    ind = core.theta_index(f).value()
    return d * ind * ind == core.power_basis_discriminant(n, a)


def brute_lattice_count(poly: NewtonPolygon) -> int:
    """Scan every (x, y) with 1 <= x < n, 1 <= y <= max height."""
    if poly.vertices[0] != (0, 0):
        raise ValueError("polygon must start at the origin")
    top = max(y for _, y in poly.vertices)
    count = 0
    for x in range(1, poly.width):
        h = poly.height_at(x)
        for y in range(1, top + 1):
            if h >= y:
                count += 1
    return count


@dataclass
class SweepReport:
    n_max: int
    a_max: int
    pairs: int = 0
    validated: int = 0
    skipped_reducible: int = 0
    skipped_hypothesis: int = 0
    checks_passed: int = 0
    polygons_checked: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: SweepReport) -> SweepReport:
        return SweepReport(
            n_max=max(self.n_max, other.n_max),
            a_max=max(self.a_max, other.a_max),
            pairs=self.pairs + other.pairs,
            validated=self.validated + other.validated,
            skipped_reducible=self.skipped_reducible + other.skipped_reducible,
            skipped_hypothesis=self.skipped_hypothesis + other.skipped_hypothesis,
            checks_passed=self.checks_passed + other.checks_passed,
            polygons_checked=self.polygons_checked + other.polygons_checked,
            failures=sorted(self.failures + other.failures, key=_failure_key),
            wall_time=self.wall_time + other.wall_time,
        )

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> SweepReport:
        return cls(**data)


def _failure_key(f: dict):
    return (f["n"], f["a"], f["check"], f.get("prime") or 0)


@lru_cache(maxsize=None)
def _shifted_route(p: int, s: int, a: int):
    """Polygon data for (x + a)^(p^s) - a: (vertices, fast count, brute count, ore count or None)."""
    g = shifted_polynomial(p, s, a)
    poly = build_polygon(g, p)
    try:
        ore = ore_index_valuation(g, p)
    except OreRegularityError:
        ore = None
    return list(poly.vertices), lattice_count(poly), brute_lattice_count(poly), ore


@lru_cache(maxsize=None)
def _pure_route(n: int, a: int, q: int):
    g = IntPolynomial.x_n_minus_a(n, a)
    poly = build_polygon(g, q)
    try:
        ore = ore_index_valuation(g, q)
    except OreRegularityError:
        ore = None
    return lattice_count(poly), brute_lattice_count(poly), ore


def _jsonable(value):
    if isinstance(value, core.FactoredInteger):
        return value.format()
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


class _Tally:
    def __init__(self, report: SweepReport, n: int, a: int):
        self.report, self.n, self.a = report, n, a

    def check(self, name, expected, actual, prime=None):
        if expected == actual:
            self.report.checks_passed += 1
        else:
            self.report.failures.append(
                {"check": name, "n": self.n, "a": self.a, "prime": prime,
                 "expected": _jsonable(expected), "actual": _jsonable(actual)}
            )


def check_pair(n: int, a: int, report: SweepReport) -> None:
    """Run every cross-check for one (n, a), recording into ``report``."""
    report.pairs += 1
    try:
        f = core.validate(n, a)
    except PureFieldError as exc:
        if isinstance(exc, ReducibleError):
            report.skipped_reducible += 1
        else:
            report.skipped_hypothesis += 1
        return
    report.validated += 1
    tally = _Tally(report, n, a)

    disc = core.discriminant(f)
    index = core.theta_index(f)
    reference = core.power_basis_discriminant(n, a)
    tally.check("global_relation", reference, disc.value() * index.value() ** 2)

    for d in f.p_data:
        if d.r < 0:
            continue
        vertices, fast, brute, ore = _shifted_route(d.p, d.s, a)
        report.polygons_checked += 1
        tally.check("lattice_oracle", brute, fast, d.p)
        tally.check("vertex_prediction", _expected_vertices(d.p, d.s, a), vertices, d.p)
        expected = core.index_p_valuation(d.p, d.s, d.cofactor, d.r)
        actual = None if ore is None else d.cofactor * ore
        tally.check("route_p", expected, actual, d.p)

    for (q, t), m in zip(f.a_factors, f.q_gcds):
        fast, brute, ore = _pure_route(n, a, q)
        report.polygons_checked += 1
        tally.check("lattice_oracle", brute, fast, q)
        tally.check("route_q", core.index_q_valuation(n, t, m), ore, q)

    mono, _ = core.is_monogenic(f)
    tally.check("monogenic_vs_index", mono, index.is_one())
    tally.check("monogenic_vs_disc", mono, abs(disc.value()) == abs(reference))

    if abs(a) > 1 and is_squarefree(a):
        if n == 8:
            tally.check("octic_table", disc, core.octic_table(a))
        if len(f.n_factors) == 1:
            p, s = f.n_factors.factors[0]
            tally.check("prime_power", disc, core.discriminant_prime_power(p, s, a))


def _sweep_degree(args) -> SweepReport:
    n, n_max, a_max = args
    report = SweepReport(n_max, a_max)
    start = time.perf_counter()
    for m in range(2, a_max + 1):
        for a in (m, -m):
            check_pair(n, a, report)
    report.wall_time = time.perf_counter() - start
    return report


def sweep(n_max: int, a_max: int, workers: int | None = None) -> SweepReport:
    """Cross-check every 2 <= n <= n_max, 2 <= |a| <= a_max.

    Degrees are independent work items; with ``workers`` > 1 they run in
    separate processes and the per-degree reports are merged.
    """
    if n_max < 2 or a_max < 2:
        raise ValueError("n_max and a_max must be at least 2")
    start = time.perf_counter()
    items = [(n, n_max, a_max) for n in range(2, n_max + 1)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep_degree, items))
    else:
        parts = [_sweep_degree(item) for item in items]
    report = SweepReport(n_max, a_max)
    for part in parts:
        report = report.merge(part)
    report.wall_time = time.perf_counter() - start
    return report
