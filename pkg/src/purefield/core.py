"""Closed-form discriminant and index of pure fields Q(theta), theta^n = a.

Every formula here assumes the input went through :func:`validate`:
x^n - a must be irreducible, and each prime p | n must either not divide a
or divide it to a power prime to p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import (
    PrimeFactorization,
    factorize,
    is_squarefree,
    unit_power_valuation,
    xn_minus_a_irreducible,
)
from .errors import HypothesisError, ReducibleError


@dataclass(frozen=True)
class FactoredInteger:
    sign: int
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)) or any(e < 1 for _, e in self.factors):
            raise ValueError("factors must have distinct increasing primes and positive exponents")

    @classmethod
    def from_map(cls, sign: int, exponents: dict[int, int]) -> FactoredInteger:
        return cls(sign, tuple(sorted((p, e) for p, e in exponents.items() if e)))

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def exponent(self, p: int) -> int:
        return dict(self.factors).get(p, 0)

    def is_one(self) -> bool:
        return self.sign == 1 and not self.factors

    def format(self, signed: bool = True) -> str:
        body = " * ".join(f"{p}^{e}" for p, e in self.factors) or "1"
        if not signed:
            return body if self.sign == 1 else "-" + body
        return ("+ " if self.sign == 1 else "- ") + body

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class PrimeData:
    """Per-prime data for a prime p dividing n."""

    p: int
    s: int
    cofactor: int  # n / p^s
    r: int  # v_p(a^(p-1) - 1) - 1, or -1 when p | a


@dataclass(frozen=True)
class ValidatedPureField:
    n: int
    a: int
    n_factors: PrimeFactorization
    a_factors: PrimeFactorization
    p_data: tuple[PrimeData, ...] = field(repr=False)
    # m_j = gcd(n, t_j) for each q_j | a, in the order of a_factors
    q_gcds: tuple[int, ...] = field(repr=False)

    @property
    def sign(self) -> int:
        return 1 if self.a > 0 else -1


def validate(n: int, a: int) -> ValidatedPureField:
    """Check irreducibility and the valuation hypothesis, caching per-prime data."""
    if n < 2:
        raise ValueError("degree n must be at least 2")
    if a == 0:
        raise ValueError("a must be nonzero")
    if not xn_minus_a_irreducible(n, a):
        raise ReducibleError(n, a)
    n_factors = factorize(n)
    a_factors = factorize(abs(a))
    p_data = []
    for p, s in n_factors:
        t = a_factors.exponent(p)
        if t and t % p == 0:
            raise HypothesisError(p, t)
        r = -1 if t else unit_power_valuation(a, p) - 1
        p_data.append(PrimeData(p, s, n // p**s, r))
    q_gcds = tuple(math.gcd(n, t) for _, t in a_factors)
    for (q, _), m in zip(a_factors, q_gcds):
        assert m % q != 0, "hypothesis implies q does not divide gcd(n, t)"
    return ValidatedPureField(n, a, n_factors, a_factors, tuple(p_data), q_gcds)


def index_q_valuation(n: int, t: int, m: int) -> int:
    """Exponent of a prime q | a (with v_q(a) = t, m = gcd(n, t)) in the index."""
    twice = (n - 1) * (t - 1) + m - 1
    if twice % 2:
        raise AssertionError(f"non-integral index valuation for n={n}, t={t}, m={m}")
    return twice // 2


def _geometric_tail(p: int, s: int, r: int) -> int:
    # sum of p^(s-j) for j = 1..min(r, s)
    return sum(p ** (s - j) for j in range(1, min(r, s) + 1))


def index_p_valuation(p: int, s: int, n_i: int, r: int) -> int:
    """Exponent of a prime p | n, p not dividing a, in the index."""
    if r <= 0:
        return 0
    return n_i * _geometric_tail(p, s, r)


def theta_index(f: ValidatedPureField) -> FactoredInteger:
    """[A_K : Z[theta]] in factored form."""
    exps: dict[int, int] = {}
    for d in f.p_data:
        if d.r >= 0:
            exps[d.p] = exps.get(d.p, 0) + index_p_valuation(d.p, d.s, d.cofactor, d.r)
    for (q, t), m in zip(f.a_factors, f.q_gcds):
        exps[q] = exps.get(q, 0) + index_q_valuation(f.n, t, m)
    return FactoredInteger.from_map(1, exps)


def discriminant_sign(n: int, a: int) -> int:
    sign = -1 if ((n - 1) * (n - 2) // 2) % 2 else 1
    if a < 0 and n % 2 == 0:
        sign = -sign
    return sign


def discriminant(f: ValidatedPureField) -> FactoredInteger:
    n = f.n
    exps: dict[int, int] = {}
    for d in f.p_data:
        v = n * d.s
        if d.r > 0:
            v -= 2 * d.cofactor * _geometric_tail(d.p, d.s, d.r)
        exps[d.p] = exps.get(d.p, 0) + v
    for (q, _), m in zip(f.a_factors, f.q_gcds):
        exps[q] = exps.get(q, 0) + n - m
    return FactoredInteger.from_map(discriminant_sign(n, f.a), exps)


def discriminant_prime_power(p: int, s: int, a: int) -> FactoredInteger:
    """Discriminant of Q(a^(1/p^s)) for squarefree a != +-1."""
    if abs(a) == 1 or not is_squarefree(a):
        raise ValueError("a must be squarefree and different from +-1")
    n = p**s
    validate(n, a)
    exps = {q: n - 1 for q, _ in factorize(abs(a))}
    r = -1 if a % p == 0 else unit_power_valuation(a, p) - 1
    nu = s * n
    if r > 0:
        nu -= 2 * _geometric_tail(p, s, r)
    exps[p] = exps.get(p, 0) + nu
    return FactoredInteger.from_map(discriminant_sign(n, a), exps)


# a mod 16 -> power of 2 for squarefree a (a = 2 mod 4 covers the even residues)
_OCTIC_TWO_POWER = {
    1: 10, 9: 12, 5: 16, 13: 16,
    2: 24, 6: 24, 10: 24, 14: 24,
    3: 24, 7: 24, 11: 24, 15: 24,
}


def octic_table(a: int) -> FactoredInteger:
    """Discriminant of Q(a^(1/8)) by the mod-16 case split, a squarefree."""
    if abs(a) == 1 or not is_squarefree(a):
        raise ValueError("a must be squarefree and different from +-1")
    if not xn_minus_a_irreducible(8, a):
        raise ReducibleError(8, a)
    two_power = _OCTIC_TWO_POWER[a % 16]
    exps = {q: 7 for q, _ in factorize(abs(a))}
    exps[2] = exps.get(2, 0) + two_power
    # -2^k a^7: the sign flips again when a < 0
    return FactoredInteger.from_map(-1 if a > 0 else 1, exps)


@dataclass(frozen=True)
class Witness:
    prime: int
    reason: str

    def to_dict(self) -> dict:
        return {"prime": self.prime, "reason": self.reason}


def is_monogenic(f: ValidatedPureField) -> tuple[bool, Witness | None]:
    """Whether 1, theta, ..., theta^(n-1) is an integral basis, with a witness if not."""
    for q, t in f.a_factors:
        if t >= 2:
            return False, Witness(q, "a_not_squarefree")
    for d in f.p_data:
        if d.r > 0:
            return False, Witness(d.p, "p_squared_divides_a^(p-1)-1")
    return True, None


def monogenic(n: int, a: int) -> tuple[bool, Witness | None]:
    """Monogenicity for any irreducible x^n - a.

    A non-squarefree a is decided without the valuation hypothesis, which
    only matters for computing the discriminant.
    """
    if n < 2 or a == 0:
        raise ValueError("need n >= 2 and a != 0")
    if not xn_minus_a_irreducible(n, a):
        raise ReducibleError(n, a)
    for q, t in factorize(abs(a)):
        if t >= 2:
            return False, Witness(q, "a_not_squarefree")
    return is_monogenic(validate(n, a))


def power_basis_discriminant(n: int, a: int) -> int:
    """(-1)^((n-1)(n-2)/2) n^n a^(n-1), the discriminant of 1, theta, ..., theta^(n-1)."""
    sign = -1 if ((n - 1) * (n - 2) // 2) % 2 else 1
    return sign * n**n * a ** (n - 1)


def residue_class(f: ValidatedPureField) -> tuple[int, int]:
    """(a mod M, M) with M the product of p^(s+1) over p^s || n."""
    modulus = 1
    for p, s in f.n_factors:
        modulus *= p ** (s + 1)
    return f.a % modulus, modulus


__all__ = [
    "FactoredInteger",
    "PrimeData",
    "ValidatedPureField",
    "Witness",
    "validate",
    "index_q_valuation",
    "index_p_valuation",
    "theta_index",
    "discriminant",
    "discriminant_prime_power",
    "octic_table",
    "is_monogenic",
    "monogenic",
    "power_basis_discriminant",
    "residue_class",
]
