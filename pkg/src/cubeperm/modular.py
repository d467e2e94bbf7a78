"""Modular arithmetic over Z/pZ: primality, primitive roots, cubic residues."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import NotPrime, WrongResidueClass

P_LIMIT = 2**31
SCAN_LIMIT = 10**6

# Deterministic for every n < 3.3e24, which covers 64-bit inputs.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
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
        raise NotPrime(f"{p} is not prime")
    if p >= P_LIMIT:
        raise NotPrime(f"{p} exceeds the supported bound 2^31")


def require_one_mod_three(p: int) -> None:
    require_prime(p)
    if p % 3 != 1:
        raise WrongResidueClass(f"p={p} is not congruent to 1 mod 3")


@dataclass(frozen=True)
class PrimeModulus:
    p: int
    n: int | None = field(init=False)

    def __post_init__(self) -> None:
        require_prime(self.p)
        if self.p == 2:
            raise NotPrime("p must be an odd prime")
        object.__setattr__(self, "n", (self.p - 1) // 3 if self.p % 3 == 1 else None)


def pow_mod(base: int, exp: int, m: int) -> int:
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base, exp, m)


def legendre_symbol(a: int, p: int) -> int:
    """Euler's criterion; returns -1, 0 or +1."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m by trial division, ascending."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


def totient(m: int) -> int:
    result = m
    for q in prime_factors(m):
        result -= result // q
    return result


def is_primitive_root(g: int, p: int) -> bool:
    g %= p
    if g == 0:
        return False
    return all(pow(g, (p - 1) // q, p) != 1 for q in _factors_of_p_minus_1(p))


@lru_cache(maxsize=4096)
def _factors_of_p_minus_1(p: int) -> tuple[int, ...]:
    return tuple(prime_factors(p - 1))


@lru_cache(maxsize=1024)
def _primitive_roots(p: int) -> tuple[int, ...]:
    require_prime(p)
    if p == 2:
        return (1,)
    qs = _factors_of_p_minus_1(p)
    cofactors = [(p - 1) // q for q in qs]
    return tuple(g for g in range(2, p) if all(pow(g, e, p) != 1 for e in cofactors))


def primitive_roots(p: int) -> list[int]:
    """All primitive roots in (0, p), ascending."""
    return list(_primitive_roots(p))


def smallest_primitive_root(p: int) -> int:
    require_prime(p)
    qs = _factors_of_p_minus_1(p)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    return 1  # p == 2


@lru_cache(maxsize=1024)
def _cubic_residues(p: int) -> tuple[int, ...]:
    require_one_mod_three(p)
    n = (p - 1) // 3
    return tuple(x for x in range(1, p) if pow(x, n, p) == 1)


def cubic_residues_sorted(p: int) -> list[int]:
    """The n = (p-1)/3 cubic residues in (0, p), ascending."""
    return list(_cubic_residues(p))


def tonelli_shanks(a: int, p: int) -> int:
    """Some square root of a quadratic residue a modulo an odd prime p."""
    a %= p
    if a == 0:
        return 0
    if legendre_symbol(a, p) != 1:
        raise ValueError(f"{a} is not a quadratic residue mod {p}")
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre_symbol(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _sqrt_minus3_scan(p: int) -> int:
    for t in range(1, p):
        if (t * t + 3) % p == 0:
            return t
    raise WrongResidueClass(f"-3 is not a square mod {p}")


def _sqrt_minus3_ts(p: int) -> int:
    t = tonelli_shanks(p - 3, p)
    return min(t, p - t)


def sqrt_minus3(p: int) -> int:
    """The smaller root t in (0, p) of t^2 = -3 mod p."""
    require_one_mod_three(p)
    if p < SCAN_LIMIT:
        return _sqrt_minus3_scan(p)
    return _sqrt_minus3_ts(p)


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes in [lo, hi], by sieve."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(hi**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, hi + 1, i)))
    return [i for i in range(max(lo, 2), hi + 1) if sieve[i]]
