"""Per-prime context, the closed-form sign, and the range audit harness.

Theorem-formula disagreements are findings and are recorded in the report.
Any disagreement between a lemma and its enumeration oracle is treated as an
implementation failure.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import binform, counts, permsign
from .binform import FormRepresentation
from .check import PASS, CheckResult, fail
from .counts import CountsRecord
from .eisenstein import EisensteinInt, choose_pi, omega_image, symbol_exponent
from .errors import (
    CubePermError,
    InternalInconsistency,
    NonIntegralExponent,
    NotPrimitiveRoot,
    WrongResidueClass,
)
from .modular import (
    cubic_residues_sorted,
    is_primitive_root,
    primes_between,
    primitive_roots,
    require_one_mod_three,
    smallest_primitive_root,
    totient,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimeContext:
    p: int
    n: int
    g: int
    pi: EisensteinInt
    w: int
    rep: FormRepresentation
    counts: CountsRecord
    h: int | None

    @property
    def r(self) -> int:
        return self.rep.r

    @property
    def s(self) -> int:
        return self.rep.s


def build_context(p: int, g: int | None = None) -> PrimeContext:
    require_one_mod_three(p)
    if g is None:
        g = smallest_primitive_root(p)
    elif not is_primitive_root(g, p):
        raise NotPrimitiveRoot(f"{g} is not a primitive root mod {p}")
    g %= p
    pi = choose_pi(p, g)
    w = omega_image(pi, p)
    rep = binform.normalize_rs(p, g)
    if (rep.r, rep.s) != (2 * pi.a - pi.b, pi.b):
        raise InternalInconsistency(f"p={p} g={g}: (r, s) = {rep} but pi = {pi}")
    brute, formula = counts.difference_counts(p, pi, rep.r, rep.s, g)
    if brute != formula:
        raise InternalInconsistency(f"p={p} g={g}: N(g) enumerated {brute}, formula {formula}")
    h = binform.class_number(p) if p % 4 == 3 else None
    return PrimeContext(p, (p - 1) // 3, g, pi, w, rep, counts.residue_counts(p, pi), h)


def formula_exponent(ctx: PrimeContext) -> Fraction:
    """The five-term exponent as an exact rational."""
    c, r, s = ctx.counts, ctx.r, ctx.s
    return (
        Fraction(c.delta)
        + (1 + c.alpha) * (1 + r)
        + Fraction((ctx.h + 1 - 2 * c.alpha) * (2 - r + 3 * s), 4)
        + s * (1 + c.gamma)
        + Fraction(ctx.n - 2, 4)
    )


def theorem_formula_sign(ctx: PrimeContext) -> tuple[int, int]:
    """(exponent, (-1)^exponent) for p = 7 mod 12."""
    if ctx.p % 12 != 7:
        raise WrongResidueClass(f"p={ctx.p} is not 7 mod 12")
    e = formula_exponent(ctx)
    if e.denominator != 1:
        raise NonIntegralExponent(f"p={ctx.p} g={ctx.g}: exponent {e} is not an integer")
    e = int(e)
    return e, -1 if e % 2 else 1


def denominator_identity_check(ctx: PrimeContext) -> CheckResult:
    """prod_{i<j}(a_j - a_i) against the regrouped product over the A-sets."""
    p, r, s = ctx.p, ctx.r, ctx.s
    if p % 12 != 7:
        raise WrongResidueClass(f"p={p} is not 7 mod 12")
    nums = (p + r - 8, 2 * p - r + 3 * s - 4, 2 * p - r - 3 * s - 4)
    dens = (9, 18, 18)
    if any(x % d or x < 0 for x, d in zip(nums, dens)):
        return fail(f"p={p}: exponents {nums} over {dens} are not nonnegative integers")
    exps = [x // d for x, d in zip(nums, dens)]
    lhs = permsign.discriminant_product(cubic_residues_sorted(p), p)
    rhs = (-1) ** ctx.counts.delta % p
    for xs, e in zip(counts.half_range_classes(p, ctx.pi), exps):
        prod = 1
        for x in xs:
            prod = prod * x % p
        rhs = rhs * pow(prod, e, p) % p
    if lhs != rhs:
        return fail(f"p={p}: prod(a_j - a_i) = {lhs}, regrouped = {rhs}")
    return PASS


def omega_classes(p: int) -> list[list[int]]:
    """Primitive roots split by g^n mod p, ordered by smallest member."""
    n = (p - 1) // 3
    buckets: dict[int, list[int]] = {}
    for g in primitive_roots(p):
        buckets.setdefault(pow(g, n, p), []).append(g)
    return sorted(buckets.values())


@dataclass(frozen=True)
class ClassRow:
    class_rep: int
    members: tuple[int, ...]
    pi: EisensteinInt
    w: int
    r: int
    s: int
    beta: int
    gamma: int
    exponent: int | Fraction
    formula_sign: int | None
    agrees: bool

    @property
    def class_size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class TheoremReport:
    p: int
    case: str
    ctx: PrimeContext
    actual_sign: int
    classes: tuple[ClassRow, ...] = ()
    balance: tuple[int, int] | None = None

    @property
    def mod12(self) -> int:
        return self.p % 12

    def class_of(self, g: int) -> ClassRow:
        for row in self.classes:
            if g % self.p in row.members:
                return row
        raise KeyError(g)


def _class_row(ctx: PrimeContext, members: list[int], actual: int) -> ClassRow:
    try:
        exponent, sign = theorem_formula_sign(ctx)
    except NonIntegralExponent:
        exponent, sign = formula_exponent(ctx), None
    return ClassRow(
        ctx.g, tuple(members), ctx.pi, ctx.w, ctx.r, ctx.s,
        ctx.counts.beta, ctx.counts.gamma, exponent, sign, sign == actual,
    )


def audit_prime(p: int, g: int | None = None) -> TheoremReport:
    """Brute-force signs for every primitive root plus the closed form per omega-class.

    ``g`` selects which context is reported at top level (default: smallest root).
    """
    ctx = build_context(p, g)
    case = "II" if binform.three_is_cube(p, ctx.g) else "I"
    signs = {x: permsign.sign_s_p(p, x) for x in primitive_roots(p)}
    actual = signs[ctx.g]
    if p % 12 == 1:
        plus = sum(1 for v in signs.values() if v == 1)
        minus = len(signs) - plus
        if plus != minus:
            raise InternalInconsistency(f"p={p}: sign counts unbalanced ({plus}, {minus})")
        for x, v in signs.items():
            if v * signs[pow(x, -1, p)] != -1:
                raise InternalInconsistency(f"p={p}: sign(s_p({x})) * sign(s_p({x}^-1)) != -1")
        return TheoremReport(p, case, ctx, actual, balance=(plus, minus))

    if len(set(signs.values())) != 1:
        raise InternalInconsistency(f"p={p}: sign(s_p(g)) depends on g: {signs}")
    rows = []
    for members in omega_classes(p):
        rep_ctx = ctx if ctx.g == members[0] else build_context(p, members[0])
        for x in members:
            # counts are functions of pi, so pinning pi and (r, s) pins the whole context
            if choose_pi(p, x) != rep_ctx.pi or binform.normalize_rs(p, x) != rep_ctx.rep:
                raise InternalInconsistency(f"p={p}: context not constant on the class of {members[0]}")
        rows.append(_class_row(rep_ctx, members, actual))
    return TheoremReport(p, case, ctx, actual, classes=tuple(rows))


# Range harness ---------------------------------------------------------------


@dataclass(frozen=True)
class Suite:
    name: str
    applies: Callable[[int], bool]
    cap: int | None
    run: Callable[[int], CheckResult]


def _ctx_check(fn: Callable[[PrimeContext], CheckResult]) -> Callable[[int], CheckResult]:
    def run(p: int) -> CheckResult:
        return fn(build_context(p))

    return run


def _lemma_2_1(ctx: PrimeContext) -> CheckResult:
    return counts.check_lemma_2_1(ctx.p, ctx.pi, ctx.r, ctx.s)


def _eq_2_4(ctx: PrimeContext) -> CheckResult:
    return counts.check_eq_2_4(ctx.p, ctx.pi, ctx.r, ctx.s)


def _lemma_2_3(ctx: PrimeContext) -> CheckResult:
    return counts.check_lemma_2_3(ctx.p, ctx.pi, ctx.counts)


def _class_number(p: int) -> CheckResult:
    h, oracle = binform.class_number(p), binform.class_number_forms_oracle(p)
    if h != oracle:
        return fail(f"p={p}: counting formula {h}, reduced forms {oracle}")
    if h % 2 == 0:
        return fail(f"p={p}: h(-p) = {h} is even")
    return PASS


def _cross_structure(p: int) -> CheckResult:
    for members in omega_classes(p):
        g = members[0]
        pi = choose_pi(p, g)
        rep = binform.normalize_rs(p, g)
        if (rep.r, rep.s) != (2 * pi.a - pi.b, pi.b):
            return fail(f"p={p} g={g}: normalized (r, s) = ({rep.r}, {rep.s}), pi = {pi}")
    return PASS


def _three_is_cube(p: int) -> CheckResult:
    g = smallest_primitive_root(p)
    by_s = binform.three_is_cube(p, g)
    by_symbol = symbol_exponent(3, p, omega_image(choose_pi(p, g), p)) == 0
    by_form = binform.x2_243y2_solvable(p)
    if not by_s == by_symbol == by_form:
        return fail(f"p={p}: s=0 mod 9 {by_s}, symbol {by_symbol}, X^2+243Y^2 {by_form}")
    return PASS


def _theorem_i(p: int) -> CheckResult:
    signs = {g: permsign.sign_s_p(p, g) for g in primitive_roots(p)}
    plus = sum(1 for v in signs.values() if v == 1)
    if 2 * plus != totient(p - 1):
        return fail(f"p={p}: {plus} positive signs out of {len(signs)}")
    for g, v in signs.items():
        if v * signs[pow(g, -1, p)] != -1:
            return fail(f"p={p} g={g}: sign(s_p(g)) * sign(s_p(g^-1)) != -1")
    return PASS


def _theorem_ii_independence(p: int) -> CheckResult:
    signs = {permsign.sign_s_p(p, g) for g in primitive_roots(p)}
    if len(signs) != 1:
        return fail(f"p={p}: signs {sorted(signs)} across primitive roots")
    return PASS


def _one_mod_three(p: int) -> bool:
    return p % 3 == 1


def _seven_mod_twelve(p: int) -> bool:
    return p % 12 == 7


LEMMA_SUITES = (
    Suite("lemma_2_1", _one_mod_three, 500, _ctx_check(_lemma_2_1)),
    Suite("eq_2_4", _one_mod_three, 300, _ctx_check(_eq_2_4)),
    Suite("lemma_2_2", _one_mod_three, 1000, counts.check_lemma_2_2),
    Suite("lemma_2_3", _seven_mod_twelve, 1000, _ctx_check(_lemma_2_3)),
    Suite("lemma_2_4", _one_mod_three, 500, permsign.check_numerators),
    Suite("eq_2_2", _one_mod_three, 100, permsign.phi_split_check),
    Suite("denominator", _seven_mod_twelve, 2000, _ctx_check(denominator_identity_check)),
    Suite("class_number", _seven_mod_twelve, 2000, _class_number),
    Suite("cross_structure", _one_mod_three, 2000, _cross_structure),
    Suite("three_is_cube", _one_mod_three, 2000, _three_is_cube),
)

THEOREM_SUITES = (
    Suite("theorem_i", lambda p: p % 12 == 1, 2000, _theorem_i),
    Suite("theorem_ii_independence", _seven_mod_twelve, 2000, _theorem_ii_independence),
)


def _tau(p: int) -> CheckResult:
    brute, formula = permsign.tau_sign(p)
    if brute != formula:
        return fail(f"p={p}: sign(tau_p) = {brute}, formula {formula}")
    return PASS


# Residue classes outside p = 1 mod 3; only run with scope "side".
SIDE_SUITES = (
    Suite("tau", lambda p: p % 3 == 2 and p > 2, 1000, _tau),
    Suite("class_number_all", lambda p: p % 4 == 3 and p > 3, 2000, _class_number),
    Suite("eq_2_2_all", lambda p: p > 2, 100, permsign.phi_split_check),
)

SCOPES = ("lemmas", "theorem", "all", "side")


def suites_for(scope: str) -> tuple[Suite, ...]:
    if scope == "lemmas":
        return LEMMA_SUITES
    if scope == "theorem":
        return THEOREM_SUITES
    if scope == "all":
        return LEMMA_SUITES + THEOREM_SUITES
    if scope == "side":
        return SIDE_SUITES
    raise ValueError(f"unknown scope {scope!r}")


@dataclass
class PrimeOutcome:
    p: int
    report: TheoremReport | None = None
    checks: dict[str, CheckResult] = field(default_factory=dict)
    error: str | None = None


def audit_one(p: int, scope: str = "all", caps: bool = True, g: int | None = None) -> PrimeOutcome:
    """Everything the selected scope runs for a single prime; never raises."""
    out = PrimeOutcome(p)
    if scope in ("theorem", "all") and p % 3 == 1:
        try:
            out.report = audit_prime(p, g)
        except CubePermError as exc:
            out.error = f"{type(exc).__name__}: {exc}"
    for suite in suites_for(scope):
        if not suite.applies(p) or (caps and suite.cap is not None and p > suite.cap):
            continue
        if suite in THEOREM_SUITES:
            # audit_prime already enforced balance, pairing and g-independence
            out.checks[suite.name] = PASS if out.report else fail(out.error or f"p={p}")
            continue
        try:
            out.checks[suite.name] = suite.run(p)
        except CubePermError as exc:
            out.checks[suite.name] = fail(f"{type(exc).__name__}: {exc}")
    return out


@dataclass
class SuiteTally:
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)


@dataclass
class RangeSummary:
    p_min: int
    p_max: int
    scope: str
    outcomes: list[PrimeOutcome]
    tallies: dict[str, SuiteTally]
    errors: list[str]

    @property
    def reports(self) -> list[TheoremReport]:
        return [o.report for o in self.outcomes if o.report is not None]

    @property
    def ok(self) -> bool:
        """No lemma, oracle or audit failure (theorem-formula findings excluded)."""
        return not self.errors and all(t.failed == 0 for t in self.tallies.values())

    def agreement(self) -> dict[str, int]:
        """How often the closed form matches the true sign, per omega-class.

        The "first" class is the one containing the smallest primitive root.
        """
        stats = dict(primes=0, first_class=0, second_class=0, both=0, neither=0, anomalies=0)
        for rep in self.reports:
            if not rep.classes:
                continue
            flags = [row.agrees for row in rep.classes]
            stats["primes"] += 1
            stats["first_class"] += flags[0]
            stats["second_class"] += flags[1]
            stats["both"] += all(flags)
            stats["neither"] += not any(flags)
            stats["anomalies"] += sum(row.formula_sign is None for row in rep.classes)
        return stats


def audit_range(
    p_min: int,
    p_max: int,
    scope: str = "all",
    jobs: int = 1,
    caps: bool = True,
) -> RangeSummary:
    """Audit every prime in [p_min, p_max] the scope applies to, ordered by p."""
    if scope == "side":
        primes = primes_between(max(p_min, 3), p_max)
    else:
        primes = [p for p in primes_between(max(p_min, 5), p_max) if p % 3 == 1]
    if jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(audit_one, primes, [scope] * len(primes), [caps] * len(primes)))
    else:
        outcomes = [audit_one(p, scope, caps) for p in primes]
    return summarize(p_min, p_max, scope, outcomes)


def summarize(p_min: int, p_max: int, scope: str, outcomes: list[PrimeOutcome]) -> RangeSummary:
    outcomes = sorted(outcomes, key=lambda o: o.p)
    tallies = {s.name: SuiteTally() for s in suites_for(scope)}
    errors = []
    for o in outcomes:
        for name, res in o.checks.items():
            t = tallies[name]
            if res:
                t.passed += 1
            else:
                t.failed += 1
                t.failures.append(res.detail or f"p={o.p}")
        if o.error:
            errors.append(f"p={o.p}: {o.error}")
    for name, t in tallies.items():
        if t.failed:
            log.warning("%s: %d failures, first: %s", name, t.failed, t.failures[0])
    return RangeSummary(p_min, p_max, scope, outcomes, tallies, errors)
