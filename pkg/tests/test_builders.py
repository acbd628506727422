from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from numerals.builders import (EXISTS, FORALL, BuildError, base_numeral,
                               build_numeral, dyadic_numeral,
                               fundamental_sequence, other_flavor, other_side,
                               parse_recipe, staged_child_numeral,
                               strip_double_neg, successor_numeral)
from numerals.dyadics import Dyadic, ONE, ZERO
from numerals.engine import Engine, TruncationSchedule
from numerals.formulas import (Atomic, CInf, CSup, GeneratedFamily, Neg,
                               family_member, free_vars, serialize)
from numerals.ordinals import OMEGA, from_int, parse_ordinal
from numerals.reals import (LEFT, RIGHT, ConstantSource, RealSourceError,
                            Sigma2Source, get_cut, get_extraction,
                            lift_successor, sigma2_predicate)
from numerals.spaces import builtin_suite

F = Fraction
NU_E0 = "(inf x0 (dist x0 x0))"
NU_A0 = "(sup x0 (dist x0 x0))"

units = st.integers(0, 8).flatmap(
    lambda e: st.integers(0, 2 ** e).map(lambda n: Dyadic(n, e)))


def code(r, flavor):
    return serialize(dyadic_numeral(r, flavor))


def test_dyadic_numeral_base_shapes():
    assert code(ZERO, EXISTS) == NU_E0
    assert code(ZERO, FORALL) == NU_A0
    assert code(ONE, EXISTS) == "(neg %s)" % NU_A0
    assert code(ONE, FORALL) == "(neg %s)" % NU_E0
    assert code(Dyadic(1, 1), EXISTS) == "(half (neg %s))" % NU_A0
    assert code(Dyadic(3, 2), EXISTS) == \
        "(neg (half (half (neg %s))))" % NU_E0


def test_dyadic_numeral_rejects():
    with pytest.raises(BuildError):
        dyadic_numeral(Dyadic(3, 1), EXISTS)
    with pytest.raises(BuildError):
        dyadic_numeral(F(1, 2), EXISTS)
    with pytest.raises(BuildError):
        dyadic_numeral(ZERO, "some")


@settings(max_examples=60, deadline=None)
@given(units, st.sampled_from([EXISTS, FORALL]))
def test_dyadic_numeral_value(r, flavor):
    eng = Engine()
    phi = dyadic_numeral(r, flavor)
    assert not free_vars(phi)
    for space in builtin_suite()[:3]:
        assert eng.eval_exact(phi, space) == r


@settings(max_examples=60, deadline=None)
@given(units)
def test_dyadic_numeral_duality(r):
    mirror = strip_double_neg(Neg(dyadic_numeral(ONE - r, FORALL)))
    if r != Dyadic(1, 1):
        assert serialize(mirror) == code(r, EXISTS)
    else:
        eng = Engine()
        point = builtin_suite()[0]
        assert eng.eval_exact(mirror, point) == \
            eng.eval_exact(dyadic_numeral(r, EXISTS), point) == r


def test_strip_double_neg():
    nu = dyadic_numeral(ZERO, EXISTS)
    assert strip_double_neg(Neg(Neg(Neg(nu)))) == Neg(nu)
    assert strip_double_neg(nu) == nu


def test_helpers():
    assert other_side(RIGHT) == LEFT and other_side(LEFT) == RIGHT
    assert other_flavor(EXISTS) == FORALL and other_flavor(FORALL) == EXISTS


def test_upper_cut_family_members():
    fam = GeneratedFamily("dyadic-upper-cut", "1/3")
    hits = [Dyadic(1, 1), Dyadic(3, 2), Dyadic(3, 3)]
    for k, hit in enumerate(hits):
        assert serialize(family_member(fam, 2 * k)) == code(hit, EXISTS)
    for n in (1, 3, 5):
        assert serialize(family_member(fam, n)) == code(ONE, EXISTS)


def test_lower_cut_family_members():
    fam = GeneratedFamily("dyadic-lower-cut", "1/3")
    assert serialize(family_member(fam, 0)) == code(Dyadic(1, 2), FORALL)
    assert serialize(family_member(fam, 1)) == code(ZERO, FORALL)


def test_trivial_cuts_use_endpoints_only():
    upper_one = GeneratedFamily("dyadic-upper-cut", "1")
    lower_zero = GeneratedFamily("dyadic-lower-cut", "0")
    for n in range(8):
        assert serialize(family_member(upper_one, n)) == code(ONE, EXISTS)
        assert serialize(family_member(lower_zero, n)) == NU_A0


def test_base_numeral_shapes():
    phi = base_numeral(RIGHT, get_cut("1/3", RIGHT))
    assert serialize(phi) == '(cinf (gen dyadic-upper-cut "1/3"))'
    psi = base_numeral(LEFT, get_cut("sqrt-half", LEFT))
    assert serialize(psi) == '(csup (gen dyadic-lower-cut "sqrt-half"))'
    with pytest.raises(BuildError):
        base_numeral(LEFT, get_cut("1/3", RIGHT))


def test_staged_child_numeral_members():
    pred = sigma2_predicate("geometric-above", "1/3")
    kids = lift_successor(Sigma2Source(pred), RIGHT)
    phi = staged_child_numeral(kids(11))
    assert serialize(phi) == \
        '(csup (gen staged-approx "(stage geometric-above \\"1/3\\" 11)"))'
    ex = get_extraction(pred)
    for t in (1, 16, 64):
        member = family_member(phi.family, t)
        assert serialize(member) == code(ex.r_approx(11, t), FORALL)


def test_successor_numeral_explicit():
    members = [dyadic_numeral(Dyadic(1, 1), FORALL),
               dyadic_numeral(Dyadic(1, 2), FORALL)]
    phi = successor_numeral(RIGHT, members)
    assert isinstance(phi, CInf)
    assert isinstance(successor_numeral(LEFT, members), CSup)
    with pytest.raises(BuildError):
        successor_numeral(RIGHT, [Atomic(0, 1)])


def test_fundamental_sequence_map():
    seq = fundamental_sequence(OMEGA)
    assert seq(5) == from_int(5)
    assert fundamental_sequence(parse_ordinal("w^2"))(3) == parse_ordinal("w*3")
    with pytest.raises(BuildError):
        fundamental_sequence(from_int(3))


def test_build_level_one():
    phi = build_numeral(RIGHT, from_int(1), ConstantSource(F(1, 2), from_int(1)))
    assert serialize(phi) == '(cinf (gen dyadic-upper-cut "1/2"))'


def test_build_level_one_left_half_value():
    phi = build_numeral(LEFT, from_int(1), ConstantSource(F(1, 2), from_int(1)))
    eng = Engine()
    tv = eng.truncation_value(phi, builtin_suite()[0],
                              TruncationSchedule.uniform(64))
    assert tv == Dyadic(31, 6)


def test_build_level_two():
    src = Sigma2Source(sigma2_predicate("geometric-above", "1/3"))
    phi = build_numeral(RIGHT, from_int(2), src)
    assert isinstance(phi, CInf)
    assert phi.family.generator == "successor-members"
    child = family_member(phi.family, 0)
    assert isinstance(child, CSup)
    assert child.family.generator == "staged-approx"


def test_build_limit_level():
    phi = build_numeral(RIGHT, OMEGA, ConstantSource(F(1, 2), OMEGA))
    assert isinstance(phi, CInf)
    assert phi.family.generator == "limit-members"
    first = family_member(phi.family, 0)
    assert serialize(first) == '(cinf (gen dyadic-upper-cut "1/2"))'
    third = family_member(phi.family, 3)
    assert isinstance(third, CInf)
    assert third.family.generator == "successor-members"


def test_build_guards():
    src = Sigma2Source(sigma2_predicate("geometric-above", "1/3"))
    with pytest.raises(BuildError):
        build_numeral(LEFT, from_int(2), src)
    with pytest.raises(BuildError):
        build_numeral(RIGHT, from_int(3), src)
    with pytest.raises(BuildError):
        build_numeral(RIGHT, from_int(0), ConstantSource(F(0), from_int(0)))
    with pytest.raises(BuildError):
        build_numeral("up", from_int(1), ConstantSource(F(0), from_int(1)))


def test_recipe_round_trip():
    texts = ['(numeral right 1 (real builtin "1/3"))',
             '(numeral left 2 (real sigma2-left geometric-below "2/3"))',
             '(numeral right w (real leveled right w (members constant "1/2")))']
    for text in texts:
        recipe = parse_recipe(text)
        assert recipe.descriptor == text
        assert not free_vars(recipe.build())


def test_recipe_build_matches_driver():
    recipe = parse_recipe('(numeral right 1 (real builtin "1/3"))')
    assert serialize(recipe.build()) == '(cinf (gen dyadic-upper-cut "1/3"))'


def test_recipe_rejects():
    for text in ['(recipe right 1 (real builtin "1/3"))',
                 '(numeral up 1 (real builtin "1/3"))',
                 '(numeral right spam (real builtin "1/3"))',
                 '(numeral right 1)',
                 'numeral']:
        with pytest.raises(BuildError):
            parse_recipe(text)
    with pytest.raises(RealSourceError):
        parse_recipe('(numeral right 1 (real mystery "1/3"))')
    with pytest.raises(BuildError):
        parse_recipe('(numeral right 2 (real builtin "1/3"))').build()
