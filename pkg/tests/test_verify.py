from fractions import Fraction

import pytest

import oracles
from cubeperm.counts import CountsRecord
from cubeperm.eisenstein import EisensteinInt as E
from cubeperm.errors import NotPrime, NotPrimitiveRoot, NonIntegralExponent, WrongResidueClass
from cubeperm.modular import primitive_roots
from cubeperm.verify import (
    audit_one,
    audit_prime,
    audit_range,
    build_context,
    denominator_identity_check,
    formula_exponent,
    omega_classes,
    theorem_formula_sign,
)

ONE_MOD_3 = [p for p in range(7, 250) if p % 3 == 1 and oracles.is_prime(p)]
SEVEN_MOD_12 = [p for p in range(7, 500) if p % 12 == 7 and oracles.is_prime(p)]


def test_context_7():
    c = build_context(7, 3)
    assert (c.n, c.pi, c.w, c.r, c.s, c.h) == (2, E(-1, -3), 2, 1, -3, 1)
    assert c.counts == CountsRecord(1, 1, 0, 1)


def test_context_19():
    c = build_context(19, 2)
    assert (c.n, c.pi, c.w, c.r, c.s, c.h) == (6, E(2, -3), 7, 7, -3, 1)
    assert c.counts == CountsRecord(1, 2, 1, 3)


def test_context_13():
    c = build_context(13, 2)
    assert (c.n, c.pi, c.w, c.r, c.s, c.h) == (4, E(-4, -3), 3, -5, -3, None)
    want = oracles.half_range_counts(13, -4, -3)
    assert (c.counts.delta, c.counts.alpha, c.counts.beta, c.counts.gamma) == want


def test_context_defaults_to_smallest_root():
    assert build_context(19).g == 2


@pytest.mark.parametrize("p, g, err", [(21, None, NotPrime), (11, None, WrongResidueClass), (13, 5, NotPrimitiveRoot)])
def test_context_errors(p, g, err):
    with pytest.raises(err):
        build_context(p, g)


@pytest.mark.parametrize("p", ONE_MOD_3)
def test_context_constant_on_omega_classes(p):
    for members in omega_classes(p):
        ref = build_context(p, members[0])
        for g in members[1:4]:
            c = build_context(p, g)
            assert (c.pi, c.rep, c.counts) == (ref.pi, ref.rep, ref.counts)


@pytest.mark.parametrize("p, g, expected", [(7, 3, (-1, -1)), (19, 2, (21, -1)), (19, 13, (30, 1))])
def test_theorem_formula_examples(p, g, expected):
    assert theorem_formula_sign(build_context(p, g)) == expected


def test_formula_term_can_be_fractional():
    # at (19, g=2) the (2 - r + 3s)/4 term alone is -14/4; only the product is integral
    c = build_context(19, 2)
    assert Fraction(2 - c.r + 3 * c.s, 4) == Fraction(-7, 2)
    assert formula_exponent(c) == 21


def test_non_integral_exponent_is_reported():
    c = build_context(19, 2)
    bent = type(c)(c.p, c.n + 1, c.g, c.pi, c.w, c.rep, c.counts, c.h)
    with pytest.raises(NonIntegralExponent):
        theorem_formula_sign(bent)


def test_theorem_formula_wrong_class():
    with pytest.raises(WrongResidueClass):
        theorem_formula_sign(build_context(13))


@pytest.mark.parametrize("p", [7, 19, 31])
def test_denominator_anchors(p):
    assert denominator_identity_check(build_context(p))


def test_denominator_exponents_at_19():
    c = build_context(19, 2)
    assert ((19 + c.r - 8) // 9, (38 - c.r + 3 * c.s - 4) // 18, (38 - c.r - 3 * c.s - 4) // 18) == (2, 1, 2)


@pytest.mark.parametrize("p", SEVEN_MOD_12)
def test_denominator_sweep(p):
    for members in omega_classes(p):
        assert denominator_identity_check(build_context(p, members[0]))


def test_audit_13_balance():
    rep = audit_prime(13)
    assert rep.balance == (2, 2)
    assert [oracles.sign_s_p(13, g) for g in (2, 6, 7, 11)] == [-1, -1, 1, 1]


def test_audit_7_rows():
    rep = audit_prime(7)
    assert rep.actual_sign == -1
    a, b = rep.class_of(3), rep.class_of(5)
    assert (a.formula_sign, a.agrees) == (-1, True)
    assert (b.formula_sign, b.agrees) == (1, False)


def test_audit_19_rows():
    rep = audit_prime(19)
    assert rep.actual_sign == 1
    a, b = rep.class_of(2), rep.class_of(13)
    assert (a.formula_sign, a.agrees) == (-1, False)
    assert (b.formula_sign, b.agrees) == (1, True)
    assert a.members == (2, 3, 14) and b.members == (10, 13, 15)


def test_audit_with_explicit_g():
    rep = audit_prime(19, 13)
    assert rep.ctx.g == 13 and rep.ctx.s == 3
    assert rep.class_of(13).class_rep == 10


@pytest.mark.parametrize("p", ONE_MOD_3)
def test_audit_invariants(p):
    rep = audit_prime(p)
    signs = {g: oracles.sign_s_p(p, g) for g in primitive_roots(p)}
    if p % 12 == 1:
        assert sum(rep.balance) == oracles.phi(p - 1)
        assert rep.balance[0] == rep.balance[1]
        assert not rep.classes
    else:
        assert set(signs.values()) == {rep.actual_sign}
        assert len(rep.classes) == 2
        assert sum(row.class_size for row in rep.classes) == len(signs)
        assert rep.classes[0].s == -rep.classes[1].s
    assert rep.case == ("II" if 3 in oracles.cubes(p) else "I")


def test_audit_range_small():
    summary = audit_range(5, 20)
    assert [o.p for o in summary.outcomes] == [7, 13, 19]
    assert summary.ok
    assert all(t.failed == 0 for t in summary.tallies.values())
    assert summary.agreement() == dict(primes=2, first_class=1, second_class=1, both=0, neither=0, anomalies=0)


def test_audit_range_empty():
    summary = audit_range(5, 5)
    assert summary.outcomes == [] and summary.ok
    assert all(t.passed == t.failed == 0 for t in summary.tallies.values())


def test_audit_range_100_every_lemma_passes():
    summary = audit_range(5, 100, scope="lemmas")
    qualifying = [p for p in range(5, 101) if p % 3 == 1 and oracles.is_prime(p)]
    assert [o.p for o in summary.outcomes] == qualifying
    t = summary.tallies
    for name in ("lemma_2_1", "eq_2_4", "lemma_2_2", "lemma_2_4", "cross_structure", "three_is_cube"):
        assert (t[name].passed, t[name].failed) == (len(qualifying), 0)
    seven = [p for p in qualifying if p % 12 == 7]
    for name in ("lemma_2_3", "denominator", "class_number"):
        assert (t[name].passed, t[name].failed) == (len(seven), 0)
    assert t["eq_2_2"].passed == len(qualifying)


def test_audit_range_parallel_matches_serial():
    a = audit_range(5, 120, jobs=1)
    b = audit_range(5, 120, jobs=2)
    assert [o.p for o in a.outcomes] == [o.p for o in b.outcomes]
    assert a.reports == b.reports
    assert {k: (v.passed, v.failed) for k, v in a.tallies.items()} == {k: (v.passed, v.failed) for k, v in b.tallies.items()}


def test_side_scope():
    summary = audit_range(3, 60, scope="side")
    assert summary.ok
    assert summary.tallies["tau"].passed == len([p for p in range(5, 61) if p % 3 == 2 and oracles.is_prime(p)])


def test_caps_skip_expensive_suites():
    out = audit_one(601, scope="lemmas")
    assert "lemma_2_1" not in out.checks and "lemma_2_2" in out.checks
    out = audit_one(601, scope="lemmas", caps=False)
    assert "lemma_2_1" in out.checks


def test_failures_are_collected_not_raised(monkeypatch):
    from cubeperm import verify

    def broken(p, g=None):
        raise verify.InternalInconsistency("boom")

    monkeypatch.setattr(verify, "audit_prime", broken)
    summary = audit_range(5, 20, scope="theorem")
    assert not summary.ok
    assert len(summary.errors) == 3
    assert summary.tallies["theorem_i"].failed == 1
