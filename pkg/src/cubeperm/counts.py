"""Counting quantities over F_p: delta, alpha, beta, gamma, N(k), r_k.

Each closed-form count is paired with a direct enumeration, and the
``check_*`` functions compare the two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .check import PASS, CheckResult, fail
from .eisenstein import EisensteinInt, omega_image, symbol_table
from .errors import InternalInconsistency, WrongResidueClass, ZeroK
from .modular import cubic_residues_sorted, require_one_mod_three


@dataclass(frozen=True)
class CountsRecord:
    delta: int
    alpha: int
    beta: int
    gamma: int


def residue_counts(p: int, pi: EisensteinInt) -> CountsRecord:
    require_one_mod_three(p)
    sym = symbol_table(p, omega_image(pi, p))
    half = (p - 1) // 2
    delta = sum(1 for x in range(1, p) if 4 * x < p and sym[x] == 0)
    by_class = [0, 0, 0]
    for x in range(1, half + 1):
        if pow(x, half, p) == 1:
            by_class[sym[x]] += 1
    return CountsRecord(delta, *by_class)


def half_range_classes(p: int, pi: EisensteinInt) -> tuple[list[int], list[int], list[int]]:
    """(A_1, A_w, A_w^2): the integers in (0, p/2) split by cubic symbol."""
    sym = symbol_table(p, omega_image(pi, p))
    classes: tuple[list[int], list[int], list[int]] = ([], [], [])
    for x in range(1, (p + 1) // 2):
        classes[sym[x]].append(x)
    return classes


def n_formula(p: int, r: int, s: int, exponent: int) -> int:
    """Closed form for N(k) given the symbol class of k."""
    if exponent == 0:
        return p + r - 8
    num = 2 * p - r + 3 * s - 4 if exponent == 1 else 2 * p - r - 3 * s - 4
    if num % 2:
        raise InternalInconsistency(f"N(k) numerator {num} is odd at p={p}")
    return num // 2


def n_brute_table(p: int) -> list[int]:
    """N(k) for k = 0..p-1 by enumerating ordered pairs of cubic residues.

    Each nonzero cube has exactly three cube roots, so the count over
    (x, y) in (0, p)^2 is nine times the count over residue pairs.
    """
    crs = cubic_residues_sorted(p)
    counts = [0] * p
    for u in crs:
        for v in crs:
            counts[(v - u) % p] += 1
    counts[0] = 0
    return [9 * c for c in counts]


def n_brute_direct(p: int, k: int) -> int:
    """N(k) straight from the definition, O(p^2); for small p only."""
    cubes = [pow(x, 3, p) for x in range(1, p)]
    return sum(1 for cx in cubes for cy in cubes if (cy - cx - k) % p == 0)


def difference_counts(p: int, pi: EisensteinInt, r: int, s: int, k: int) -> tuple[int, int]:
    """(enumerated N(k), closed-form N(k))."""
    if k % p == 0:
        raise ZeroK("k must be nonzero mod p")
    require_one_mod_three(p)
    k %= p
    crs = cubic_residues_sorted(p)
    members = set(crs)
    brute = 9 * sum(1 for u in crs if (u + k) % p in members)
    sym = symbol_table(p, omega_image(pi, p))
    return brute, n_formula(p, r, s, sym[k])


def check_lemma_2_1(p: int, pi: EisensteinInt, r: int, s: int) -> CheckResult:
    """Enumerated N(k) equals the closed form for every 0 < k < p."""
    sym = symbol_table(p, omega_image(pi, p))
    brute = n_brute_table(p)
    formulas = [n_formula(p, r, s, e) for e in range(3)]
    for k in range(1, p):
        if brute[k] != formulas[sym[k]]:
            return fail(f"p={p} k={k}: enumerated {brute[k]} != formula {formulas[sym[k]]}")
    return PASS


def r_table(p: int) -> list[int]:
    """r_k for k = 1..p-1 (index 0 is a zero placeholder).

    r_k counts cubic-residue pairs x < y at exact difference y - x = k; the
    symbol condition is pi-independent since symbol 1 means cubic residue.
    """
    crs = cubic_residues_sorted(p)
    r = [0] * p
    for i, x in enumerate(crs):
        for y in crs[i + 1 :]:
            r[y - x] += 1
    return r


def check_eq_2_4(p: int, pi: EisensteinInt, r: int, s: int) -> CheckResult:
    """r_k + r_{p-k} = N(k)/9 for all k, plus the divisibilities by 9 and 18."""
    if (p + r - 8) % 9:
        return fail(f"p={p}: 9 does not divide p+r-8 = {p + r - 8}")
    for sign in (1, -1):
        if (2 * p - r + sign * 3 * s - 4) % 18:
            return fail(f"p={p}: 18 does not divide 2p-r{'+' if sign > 0 else '-'}3s-4")
    rk = r_table(p)
    sym = symbol_table(p, omega_image(pi, p))
    for k in range(1, p):
        target = n_formula(p, r, s, sym[k])
        if 9 * (rk[k] + rk[p - k]) != target:
            return fail(f"p={p} k={k}: r_k + r_(p-k) = {rk[k] + rk[p - k]}, N(k)/9 = {target}/9")
    return PASS


def lemma_2_2_sides(p: int) -> tuple[int, int]:
    """(sum of r_(p-k) over 0 < k < p/2, #cubic residues in (0, p/4))."""
    rk = r_table(p)
    lhs = sum(rk[p - k] for k in range(1, (p + 1) // 2))
    rhs = sum(1 for x in cubic_residues_sorted(p) if 4 * x < p)
    return lhs, rhs


def check_lemma_2_2(p: int) -> CheckResult:
    lhs, rhs = lemma_2_2_sides(p)
    if (lhs - rhs) % 2:
        return fail(f"p={p}: {lhs} and {rhs} differ in parity")
    return PASS


def _prod_mod(xs: list[int], p: int) -> int:
    acc = 1
    for x in xs:
        acc = acc * x % p
    return acc


def check_lemma_2_3(p: int, pi: EisensteinInt, counts: CountsRecord | None = None) -> CheckResult:
    """The three half-range product congruences, with w standing in for omega."""
    if p % 12 != 7:
        raise WrongResidueClass(f"p={p} is not 7 mod 12")
    if counts is None:
        counts = residue_counts(p, pi)
    w = omega_image(pi, p)
    a1, aw, aw2 = half_range_classes(p, pi)
    expected = (
        (-1) ** (1 + counts.alpha) % p,
        (-1) ** (1 + counts.beta) * w * w % p,
        (-1) ** (1 + counts.gamma) * w % p,
    )
    for label, xs, want in zip(("A_1", "A_w", "A_w^2"), (a1, aw, aw2), expected):
        got = _prod_mod(xs, p)
        if got != want:
            return fail(f"p={p}: product over {label} is {got}, expected {want}")
    return PASS
