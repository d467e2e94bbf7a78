"""Permutation signs: s_p(g), the cubing map tau_p, and the numerator identities."""

from __future__ import annotations

from dataclasses import dataclass

from .check import PASS, CheckResult, fail
from .errors import NotABijection, NotPrimitiveRoot, WrongResidueClass
from .modular import (
    cubic_residues_sorted,
    is_primitive_root,
    prime_factors,
    primitive_roots,
    require_one_mod_three,
    require_prime,
)


def _validate(one_line: list[int]) -> None:
    n = len(one_line)
    if sorted(one_line) != list(range(1, n + 1)):
        raise NotABijection(f"{one_line!r} is not a permutation of 1..{n}")


def permutation_sign(one_line: list[int]) -> int:
    """Sign by cycle decomposition: (-1)^(n - #cycles)."""
    one_line = list(one_line)
    _validate(one_line)
    n = len(one_line)
    seen = [False] * (n + 1)
    cycles = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = one_line[j - 1]
    return -1 if (n - cycles) % 2 else 1


def _count_inversions(xs: list[int]) -> int:
    if len(xs) < 2:
        return 0
    mid = len(xs) // 2
    left, right = xs[:mid], xs[mid:]
    inv = _count_inversions(left) + _count_inversions(right)
    left.sort()
    right.sort()
    i = 0
    for y in right:
        while i < len(left) and left[i] <= y:
            i += 1
        inv += len(left) - i
    return inv


def permutation_sign_inversions(one_line: list[int]) -> int:
    """Sign by inversion parity, counted with a divide-and-conquer pass."""
    one_line = list(one_line)
    _validate(one_line)
    return -1 if _count_inversions(one_line) % 2 else 1


@dataclass(frozen=True)
class PermutationRecord:
    p: int
    g: int
    sorted: tuple[int, ...]
    sequence: tuple[int, ...]
    one_line: tuple[int, ...]
    sign: int


def build_s_p(p: int, g: int) -> PermutationRecord:
    """s_p(g): ranks of g^3, g^6, ..., g^(3n) among the sorted cubic residues.

    The inverse permutation has the same sign, so the matching direction
    does not affect ``sign``.
    """
    require_one_mod_three(p)
    if not is_primitive_root(g, p):
        raise NotPrimitiveRoot(f"{g} is not a primitive root mod {p}")
    crs = cubic_residues_sorted(p)
    rank = {a: i + 1 for i, a in enumerate(crs)}
    g3 = pow(g, 3, p)
    seq = []
    x = 1
    for _ in crs:
        x = x * g3 % p
        seq.append(x)
    one_line = [rank[v] for v in seq]
    return PermutationRecord(p, g % p, tuple(crs), tuple(seq), tuple(one_line), permutation_sign(one_line))


def sign_s_p(p: int, g: int) -> int:
    return build_s_p(p, g).sign


def tau_sign(p: int) -> tuple[int, int]:
    """(sign of x -> x^3 on 1..p-1 by enumeration, (-1)^((p+1)/2))."""
    require_prime(p)
    if p % 3 != 2 or p == 2:
        raise WrongResidueClass(f"p={p} is not an odd prime congruent to 2 mod 3")
    brute = permutation_sign([pow(x, 3, p) for x in range(1, p)])
    return brute, (-1) ** ((p + 1) // 2)


def discriminant_product(xs: list[int], p: int) -> int:
    """prod_{i<j} (xs[j] - xs[i]) mod p."""
    acc = 1
    for j in range(1, len(xs)):
        xj = xs[j]
        for xi in xs[:j]:
            acc = acc * (xj - xi) % p
    return acc


def numerator_eval(p: int, g: int) -> tuple[int, int]:
    """(prod_{i<j} (g^(3j) - g^(3i)) mod p by direct product, closed form G(g) mod p)."""
    require_one_mod_three(p)
    n = (p - 1) // 3
    g3 = pow(g, 3, p)
    powers = [pow(g3, i, p) for i in range(1, n + 1)]
    P = discriminant_product(powers, p)
    if p % 4 == 3:
        G = (-1) ** ((n - 2) // 4) * pow(n, n // 2, p) % p
    else:
        G = (-1) ** ((n - 4) // 4) * pow(n, n // 2, p) * pow(g, (p - 1) // 4, p) % p
    return P, G


def check_numerators(p: int) -> CheckResult:
    for g in primitive_roots(p):
        P, G = numerator_eval(p, g)
        if P != G:
            return fail(f"p={p} g={g}: direct product {P} != closed form {G}")
    return PASS


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_div_exact(a: list[int], b: list[int]) -> list[int]:
    """a / b for monic b, raising if the division leaves a remainder."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


def _mobius(m: int) -> int:
    qs = prime_factors(m)
    for q in qs:
        if m % (q * q) == 0:
            return 0
    return -1 if len(qs) % 2 else 1


def cyclotomic_polynomial(m: int) -> list[int]:
    """Integer coefficients of Phi_m, lowest degree first.

    Uses Phi_m = prod_{d | m} (T^d - 1)^mu(m/d): multiply the positive factors,
    then divide out the negative ones exactly.
    """
    num, den = [1], [1]
    for d in range(1, m + 1):
        if m % d:
            continue
        mu = _mobius(m // d)
        if mu == 0:
            continue
        factor = [-1] + [0] * (d - 1) + [1]
        if mu == 1:
            num = _poly_mul(num, factor)
        else:
            den = _poly_mul(den, factor)
    return _poly_div_exact(num, den)


def poly_from_roots_mod(roots: list[int], p: int) -> list[int]:
    """Coefficients of prod (T - x) over F_p, lowest degree first."""
    coeffs = [1]
    for x in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] = (nxt[i] - x * c) % p
            nxt[i + 1] = (nxt[i + 1] + c) % p
        coeffs = nxt
    return coeffs


def phi_split_check(p: int) -> CheckResult:
    """Phi_{p-1}(T) = prod over primitive roots x of (T - x), coefficientwise mod p."""
    require_prime(p)
    phi = [c % p for c in cyclotomic_polynomial(p - 1)]
    split = poly_from_roots_mod(primitive_roots(p), p)
    if phi != split:
        return fail(f"p={p}: Phi_(p-1) mod p = {phi}, product over primitive roots = {split}")
    return PASS
