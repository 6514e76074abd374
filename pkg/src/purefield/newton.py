"""p-adic Newton polygons, residual polynomials and Ore's lattice-point index count.

A monic polynomial c_0 + c_1 x + ... + x^n contributes the point
(n - i, v_p(c_i)) for every nonzero c_i. The polygon is the lower convex
hull of those points, read left to right from (0, 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import require_prime, vp
from .errors import OreRegularityError


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer coefficients, ``coefficients[i]`` multiplying x^i."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if len(self.coefficients) < 2:
            raise ValueError("polynomial must have degree at least 1")
        if self.coefficients[-1] != 1:
            raise ValueError("polynomial must be monic")
        if self.coefficients[0] == 0:
            raise ValueError("constant coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def x_n_minus_a(cls, n: int, a: int) -> IntPolynomial:
        return cls((-a,) + (0,) * (n - 1) + (1,))

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        return out + "".join(f" {s} {b}" for s, b in terms[1:])


@dataclass(frozen=True)
class Edge:
    start: tuple[int, int]
    end: tuple[int, int]

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def rise(self) -> int:
        return self.end[1] - self.start[1]

    @property
    def slope(self) -> Fraction:
        return Fraction(self.rise, self.length)

    @property
    def denominator(self) -> int:
        """Least e > 0 with e * slope integral."""
        return self.slope.denominator

    @property
    def degree(self) -> int:
        """Degree t = length / e of the residual polynomial of this edge."""
        return self.length // self.denominator

    def height_at(self, x: int) -> Fraction:
        return self.start[1] + Fraction((x - self.start[0]) * self.rise, self.length)


@dataclass(frozen=True)
class NewtonPolygon:
    prime: int
    vertices: tuple[tuple[int, int], ...]

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(Edge(u, v) for u, v in zip(self.vertices, self.vertices[1:]))

    @property
    def width(self) -> int:
        return self.vertices[-1][0]

    def height_at(self, x: int) -> Fraction:
        if not self.vertices[0][0] <= x <= self.width:
            raise ValueError(f"abscissa {x} outside the polygon")
        for edge in self.edges:
            if x <= edge.end[0]:
                return edge.height_at(x)
        return Fraction(self.vertices[-1][1])

    def is_eisenstein(self) -> bool:
        return self.vertices == ((0, 0), (self.width, 1))


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Monotone-chain lower hull; collinear interior points are dropped."""
    hull: list[tuple[int, int]] = []
    for pt in sorted(points):
        if hull and hull[-1][0] == pt[0]:
            continue  # sorted, so the earlier point with this abscissa is lower
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


def valuation_points(g: IntPolynomial, p: int) -> list[tuple[int, int]]:
    n = g.degree
    return [(n - i, vp(c, p)) for i, c in enumerate(g.coefficients) if c != 0]


def build_polygon(g: IntPolynomial, p: int) -> NewtonPolygon:
    require_prime(p)
    return NewtonPolygon(p, tuple(lower_hull(valuation_points(g, p))))


@dataclass(frozen=True)
class ResidualPolynomial:
    """Monic polynomial over F_p, ``coefficients[i]`` multiplying Y^i."""

    prime: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("Y" if i == 1 else f"Y^{i}")
            terms.append(mono if (mono and c == 1) else f"{c}{mono}")
        return "+".join(terms)


def residual_polynomial(g: IntPolynomial, p: int, edge: Edge) -> ResidualPolynomial:
    """Polynomial over F_p read off the points of ``g`` lying on ``edge``.

    Point k along the edge (abscissa start + k*e) gives the coefficient of
    Y^(t-k). The result is scaled to be monic; for the first edge the scale
    is 1, and for later edges it differs from the residual polynomial of the
    matching p-adic factor only by a unit of F_p.
    """
    if edge.slope <= 0:
        raise ValueError("residual polynomial needs an edge of positive slope")
    n = g.degree
    e, t = edge.denominator, edge.degree
    step = edge.rise // (edge.length // e)  # e * slope
    x0, y0 = edge.start
    raw = [0] * (t + 1)
    for k in range(t + 1):
        c = g.coefficients[n - (x0 + k * e)]
        level = y0 + k * step
        if c == 0:
            continue
        v = vp(c, p)
        if v < level:
            raise AssertionError(f"point ({x0 + k * e}, {v}) lies below the polygon")
        if v == level:
            raw[t - k] = (c // p**level) % p
    lead = raw[t]
    if lead == 0 or raw[0] == 0:
        raise AssertionError("edge endpoints must carry nonzero residues")
    inv = pow(lead, -1, p)
    return ResidualPolynomial(p, tuple(c * inv % p for c in raw))


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = a[:]
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_separable_mod_p(T: ResidualPolynomial) -> bool:
    """True iff gcd(T, T') over F_p is a nonzero constant."""
    p = T.prime
    f = [c % p for c in T.coefficients]
    while f and f[-1] == 0:
        f.pop()
    if not f:
        raise ValueError("zero polynomial")
    deriv = [i * c % p for i, c in enumerate(f)][1:]
    while deriv and deriv[-1] == 0:
        deriv.pop()
    return len(_poly_gcd(f, deriv, p)) == 1


def triangle_count(n: int, t: int) -> int:
    """Lattice points with x, y >= 1 in the triangle (0,0),(n,0),(n,t), off the line x = n."""
    if n < 1 or t < 1:
        raise ValueError("n and t must be positive")
    twice = (n - 1) * (t - 1) + math.gcd(n, t) - 1
    assert twice % 2 == 0
    return twice // 2


def _check_origin(poly: NewtonPolygon) -> None:
    if poly.vertices[0] != (0, 0):
        raise ValueError("polygon must start at the origin")
    if any(edge.slope <= 0 for edge in poly.edges):
        raise ValueError("polygon slopes must be positive")


def lattice_count(poly: NewtonPolygon) -> int:
    """Points with positive coordinates on or below the polygon, excluding the column x = n.

    Each edge contributes a rectangle of height y0 plus the triangle above it;
    the last column is subtracted at the end.
    """
    _check_origin(poly)
    total = 0
    for edge in poly.edges:
        total += edge.length * edge.start[1] + triangle_count(edge.length, edge.rise) + edge.rise
    return total - poly.vertices[-1][1]


def is_x_power_mod_p(g: IntPolynomial, p: int) -> bool:
    return all(c % p == 0 for c in g.coefficients[:-1])


def ore_index_valuation(g: IntPolynomial, p: int) -> int:
    """v_p of the index of Z[root of g] via Ore's theorem.

    Requires g = x^n (mod p); raises OreRegularityError when some edge's
    residual polynomial has a repeated factor.
    """
    require_prime(p)
    if not is_x_power_mod_p(g, p):
        raise ValueError(f"polynomial is not congruent to x^n modulo {p}")
    poly = build_polygon(g, p)
    for edge in poly.edges:
        T = residual_polynomial(g, p, edge)
        if not is_separable_mod_p(T):
            raise OreRegularityError(p, T)
    return lattice_count(poly)
