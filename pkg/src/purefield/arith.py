"""Exact integer utilities: valuations, primality, factorization, perfect powers."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator

# Deterministic for n < 3.3 * 10**24; a strong probable-prime test beyond that.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_TRIAL_LIMIT = 10**6
_SMALL_PRIMES: list[int] = []


def _small_primes() -> list[int]:
    if not _SMALL_PRIMES:
        limit = _TRIAL_LIMIT
        sieve = bytearray([1]) * (limit + 1)
        sieve[0] = sieve[1] = 0
        for i in range(2, math.isqrt(limit) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
        _SMALL_PRIMES.extend(i for i, flag in enumerate(sieve) if flag)
    return _SMALL_PRIMES


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed witness set (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


@dataclass(frozen=True)
class PrimeFactorization:
    """Prime/exponent pairs in increasing prime order."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be distinct and increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be positive")

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def as_list(self) -> list[tuple[int, int]]:
        return list(self.factors)


def vp(x: int, p: int) -> int:
    """Exponent of the largest power of ``p`` dividing ``x``."""
    if x == 0:
        raise ValueError("valuation of zero undefined")
    require_prime(p)
    x = abs(x)
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def vp_factorial(m: int, p: int) -> int:
    """Legendre's formula: sum of floor(m / p^j) over j >= 1."""
    if m < 0:
        raise ValueError("m must be non-negative")
    require_prime(p)
    total = 0
    while m:
        m //= p
        total += m
    return total


def binom_vp(p: int, s: int, u: int) -> int:
    """Valuation at ``p`` of C(p^s, u) for 1 <= u <= p^s, which is s - v_p(u)."""
    require_prime(p)
    if s < 1:
        raise ValueError("s must be positive")
    if not 1 <= u <= p**s:
        raise ValueError(f"u = {u} outside 1..{p}^{s}")
    return s - vp(u, p)


def _pollard_rho(n: int) -> int:
    # Brent's cycle detection; n is odd composite without small factors.
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    root = math.isqrt(n)
    if root * root == n:
        _split(root, out)
        _split(root, out)
        return
    d = _pollard_rho(n)
    _split(d, out)
    _split(n // d, out)


def factorize(m: int) -> PrimeFactorization:
    """Trial division up to 10^6, then Pollard rho on the cofactor."""
    if m < 1:
        raise ValueError("factorize requires m >= 1")
    found: dict[int, int] = {}
    for p in _small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    if m > 1:
        _split(m, found)
    return PrimeFactorization(tuple(sorted(found.items())))


def unit_power_valuation(a: int, p: int) -> int:
    """Return v_p(a^(p-1) - 1) for p not dividing a.

    The power is never expanded: the modulus p^k is doubled while
    a^(p-1) stays congruent to 1, then the exact k is binary searched.
    """
    require_prime(p)
    if a % p == 0:
        raise ValueError(f"{p} divides {a}")
    if a == 1 or (a == -1 and p != 2):
        raise ValueError("infinite valuation: a^(p-1) = 1")

    def holds(k: int) -> bool:
        return pow(a, p - 1, p**k) == 1 % p**k

    lo, hi = 1, 2  # holds(lo) is true by Fermat
    while holds(hi):
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if holds(mid):
            lo = mid
        else:
            hi = mid
    return lo


def integer_root(x: int, k: int) -> int | None:
    """Exact k-th root of ``x`` in Z, or None when ``x`` is not a k-th power."""
    if k < 1:
        raise ValueError("k must be positive")
    if x < 0:
        if k % 2 == 0:
            return None
        r = integer_root(-x, k)
        return None if r is None else -r
    if x < 2:
        return x
    lo, hi = 1, 1 << (x.bit_length() // k + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        v = mid**k
        if v == x:
            return mid
        if v < x:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def xn_minus_a_irreducible(n: int, a: int) -> bool:
    """Capelli's criterion for x^n - a over Q."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if a == 0:
        return False
    for p in factorize(n).primes:
        if integer_root(a, p) is not None:
            return False
    if n % 4 == 0 and a < 0 and (-a) % 4 == 0:
        if integer_root(-a // 4, 4) is not None:
            return False
    return True


def is_squarefree(m: int) -> bool:
    return all(e == 1 for _, e in factorize(abs(m)))
