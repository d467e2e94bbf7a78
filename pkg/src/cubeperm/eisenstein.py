"""Eisenstein integers a + b*w (w = exp(2*pi*i/3)) and the cubic residue symbol.

Primary means congruent to 2 mod 3, i.e. a = 2 and b = 0 (mod 3), the
Ireland-Rosen convention. Some texts normalize to -1 mod 3 instead; the two
differ by a sign and give different (r, s) signs downstream, so everything in
this package assumes the "2 mod 3" choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    EisensteinOverflow,
    InternalInconsistency,
    NotCoprimeToThree,
    NotPrimitiveRoot,
    ZeroDivisor,
)
from .modular import require_one_mod_three, smallest_primitive_root, sqrt_minus3

NORM_LIMIT = 2**63


@dataclass(frozen=True, slots=True)
class EisensteinInt:
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a * self.a - self.a * self.b + self.b * self.b >= NORM_LIMIT:
            raise EisensteinOverflow(f"norm of {self} exceeds 2^63")

    def __add__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: EisensteinInt) -> EisensteinInt:
        # (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, with w^2 = -1 - w
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    def conj(self) -> EisensteinInt:
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_primary(self) -> bool:
        return self.a % 3 == 2 and self.b % 3 == 0

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}w"


ZERO = EisensteinInt(0, 0)
ONE = EisensteinInt(1, 0)
OMEGA = EisensteinInt(0, 1)
UNITS = (ONE, OMEGA, EisensteinInt(-1, -1), -ONE, -OMEGA, EisensteinInt(1, 1))


def parse(text: str) -> EisensteinInt:
    """Inverse of ``str``: '2+3w' -> EisensteinInt(2, 3)."""
    body = text.strip()
    if not body.endswith("w"):
        raise ValueError(f"cannot parse {text!r}")
    body = body[:-1]
    cut = max(body.rfind("+"), body.rfind("-"))
    if cut <= 0:
        raise ValueError(f"cannot parse {text!r}")
    return EisensteinInt(int(body[:cut]), int(body[cut:]))


def divrem(u: EisensteinInt, v: EisensteinInt) -> tuple[EisensteinInt, EisensteinInt]:
    """Euclidean division with norm(rem) < norm(v); ties round to even."""
    if v.is_zero():
        raise ZeroDivisor("division by zero in Z[w]")
    num = u * v.conj()
    nv = v.norm()
    q = EisensteinInt(round(Fraction(num.a, nv)), round(Fraction(num.b, nv)))
    rem = u - q * v
    if rem.norm() >= nv:
        raise InternalInconsistency(f"divrem({u}, {v}) left remainder {rem}")
    return q, rem


def gcd(u: EisensteinInt, v: EisensteinInt) -> EisensteinInt:
    """A greatest common divisor, defined up to a unit."""
    while not v.is_zero():
        u, v = v, divrem(u, v)[1]
    return u


def primary_associate(z: EisensteinInt) -> EisensteinInt:
    if z.norm() % 3 == 0:
        raise NotCoprimeToThree(f"norm({z}) = {z.norm()} is divisible by 3")
    hits = [u * z for u in UNITS if (u * z).is_primary()]
    if len(hits) != 1:
        raise InternalInconsistency(f"{z} has {len(hits)} primary associates")
    return hits[0]


def omega_image(pi: EisensteinInt, p: int | None = None) -> int:
    """Residue w mod p with w = omega (mod pi); a root of x^2 + x + 1."""
    if p is None:
        p = pi.norm()
    if pi.b % p == 0:
        raise ZeroDivisor(f"{pi} has p | b; not a degree-one prime")
    w = -pi.a * pow(pi.b, -1, p) % p
    if (w * w + w + 1) % p:
        raise InternalInconsistency(f"omega image {w} of {pi} is not a cube root of unity")
    return w


def prime_above(p: int) -> EisensteinInt:
    """Primary pi with norm p, anchored to the minimal square root of -3."""
    require_one_mod_three(p)
    t = sqrt_minus3(p)
    w0 = (t - 1) * pow(2, -1, p) % p
    pi = primary_associate(gcd(EisensteinInt(p, 0), EisensteinInt(w0, -1)))
    if pi.norm() != p or omega_image(pi, p) != w0:
        raise InternalInconsistency(f"prime_above({p}) produced {pi}")
    return pi


@dataclass(frozen=True, slots=True)
class CubicSymbolValue:
    """0, 1, w or w^2, stored as exponent (None for zero)."""

    exponent: int | None

    def is_zero(self) -> bool:
        return self.exponent is None

    def __mul__(self, other: CubicSymbolValue) -> CubicSymbolValue:
        if self.exponent is None or other.exponent is None:
            return SYMBOL_ZERO
        return CubicSymbolValue((self.exponent + other.exponent) % 3)

    def __pow__(self, k: int) -> CubicSymbolValue:
        if self.exponent is None:
            return SYMBOL_ZERO
        return CubicSymbolValue(self.exponent * k % 3)

    def __str__(self) -> str:
        return {None: "0", 0: "1", 1: "w", 2: "w^2"}[self.exponent]


SYMBOL_ZERO = CubicSymbolValue(None)
SYMBOL_ONE = CubicSymbolValue(0)
SYMBOL_OMEGA = CubicSymbolValue(1)
SYMBOL_OMEGA2 = CubicSymbolValue(2)


def symbol_exponent(k: int, p: int, w: int) -> int | None:
    """Exponent e with k^((p-1)/3) = w^e (mod p); None when p | k.

    This is the hot path for the counting routines, hence the bare ints.
    """
    if k % p == 0:
        return None
    v = pow(k, (p - 1) // 3, p)
    if v == 1:
        return 0
    if v == w:
        return 1
    if v == w * w % p:
        return 2
    raise InternalInconsistency(f"{k}^((p-1)/3) = {v} is not a cube root of unity mod {p}")


def cubic_symbol(k: int, pi: EisensteinInt, p: int | None = None) -> CubicSymbolValue:
    """(k / pi)_3 evaluated in F_p through the image of w."""
    if p is None:
        p = pi.norm()
    return CubicSymbolValue(symbol_exponent(k, p, omega_image(pi, p)))


def symbol_table(p: int, w: int) -> list[int | None]:
    """Exponents of (x / pi)_3 for x = 0..p-1 with w the image of omega.

    Built from a generator's discrete log, O(p) instead of O(p log p).
    """
    g = smallest_primitive_root(p)
    eg = symbol_exponent(g, p, w)
    table: list[int | None] = [None] * p
    x = 1
    for i in range(p - 1):
        table[x] = eg * i % 3
        x = x * g % p
    return table


def choose_pi(p: int, g: int) -> EisensteinInt:
    """The primary prime above p for which (g / pi)_3 = w."""
    pi = prime_above(p)
    e = symbol_exponent(g, p, omega_image(pi, p))
    if e == 1:
        chosen = pi
    elif e == 2:
        chosen = primary_associate(pi.conj())
    else:
        raise NotPrimitiveRoot(f"{g} is a cube mod {p}")
    if symbol_exponent(g, p, omega_image(chosen, p)) != 1:
        raise InternalInconsistency(f"choose_pi({p}, {g}) gave symbol != w")
    return chosen
