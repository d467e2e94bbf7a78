"""The representation 4p = r^2 + 3s^2 and class numbers h(-p)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import InternalInconsistency, NoRepresentation, NormalizationFailure, WrongResidueClass
from .modular import legendre_symbol, require_one_mod_three, require_prime


@dataclass(frozen=True)
class FormRepresentation:
    r: int
    s: int


def represent_4p(p: int) -> tuple[int, int]:
    """The unique (r, |s|) with 4p = r^2 + 3s^2, r = 1 and s = 0 (mod 3)."""
    require_one_mod_three(p)
    found = []
    for s in range(0, isqrt(4 * p // 3) + 1, 3):
        rest = 4 * p - 3 * s * s
        r = isqrt(rest)
        if r * r == rest:
            found.append((r if r % 3 == 1 else -r, s))
    if not found:
        raise NoRepresentation(f"no admissible 4p = r^2 + 3s^2 for p={p}")
    if len(found) > 1:
        raise InternalInconsistency(f"4*{p} has several admissible representations: {found}")
    return found[0]


def normalize_rs(p: int, g: int) -> FormRepresentation:
    """Fix the sign of s so that 3s = (2 g^n + 1) r (mod p)."""
    r, s_abs = represent_4p(p)
    t = (2 * pow(g, (p - 1) // 3, p) + 1) * r
    ok = [s for s in (s_abs, -s_abs) if (3 * s - t) % p == 0]
    if len(ok) != 1:
        raise NormalizationFailure(f"p={p}, g={g}: signs satisfying the congruence: {ok}")
    return FormRepresentation(r, ok[0])


def _require_three_mod_four(p: int) -> None:
    require_prime(p)
    if p % 4 != 3 or p == 3:
        raise WrongResidueClass(f"p={p} is not a prime > 3 congruent to 3 mod 4")


def half_range_residue_counts(p: int) -> tuple[int, int]:
    """(R, N): quadratic residues and non-residues in (0, p/2)."""
    R = sum(1 for x in range(1, (p + 1) // 2) if legendre_symbol(x, p) == 1)
    return R, (p - 1) // 2 - R


def class_number(p: int) -> int:
    """h(-p) = (R - N) / (2 - (2/p)) for p = 3 mod 4."""
    _require_three_mod_four(p)
    R, N = half_range_residue_counts(p)
    h, rem = divmod(R - N, 2 - legendre_symbol(2, p))
    if rem or h <= 0:
        raise InternalInconsistency(f"class number formula gave {R - N}/{2 - legendre_symbol(2, p)} at p={p}")
    return h


def reduced_forms(p: int) -> list[tuple[int, int, int]]:
    """Reduced primitive forms (A, B, C) of discriminant -p."""
    _require_three_mod_four(p)
    forms = []
    for A in range(1, isqrt(p // 3) + 1):
        for B in range(-A + 1, A + 1):
            num = B * B + p
            if num % (4 * A):
                continue
            C = num // (4 * A)
            if C < A or (A == C and B < 0):
                continue
            if gcd(gcd(A, B), C) == 1:
                forms.append((A, B, C))
    return forms


def class_number_forms_oracle(p: int) -> int:
    return len(reduced_forms(p))


def parity_step_comparison(p: int) -> tuple[int, int]:
    """(R mod 2, (h(-p) + 1)/2 mod 2) for p = 3 mod 4.

    The two sides are reported, not assumed equal.
    """
    R, _ = half_range_residue_counts(p)
    return R % 2, (class_number(p) + 1) // 2 % 2


def three_is_cube(p: int, g: int) -> bool:
    return normalize_rs(p, g).s % 9 == 0


def x2_243y2_solvable(p: int) -> bool:
    """Whether 4p = X^2 + 243 Y^2 has an integral solution (direct search)."""
    for y in range(isqrt(4 * p // 243) + 1):
        rest = 4 * p - 243 * y * y
        if isqrt(rest) ** 2 == rest:
            return True
    return False
