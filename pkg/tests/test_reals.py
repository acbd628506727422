from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from numerals.dyadics import Dyadic
from numerals.ordinals import OMEGA, from_int, parse_ordinal
from numerals.reals import (ENUM, FROM_ABOVE, FROM_BELOW, LEFT, RIGHT,
                            BuiltinSource, ConstantSource, GeometricSource,
                            LeveledSource, RealSourceError, Sigma2Source,
                            StagedChildSource, builtin_real,
                            extract_seq_left_sigma2, extract_seq_right_sigma2,
                            get_cut, get_extraction, lift_successor,
                            limit_decomposition, pair, parse_real_source,
                            parse_target, sigma2_predicate, transform_R1,
                            unpair)

F = Fraction

# the fixed interleaving of unit dyadics, zigzag integers and signed
# Calkin-Wilf fractions, frozen as a regression anchor
PREFIX = [F(0), F(1, 2), F(1), F(1, 4), F(1, 3), F(3, 4), F(-1), F(1, 8),
          F(-1, 3), F(3, 8), F(3, 2), F(5, 8), F(2, 3), F(7, 8), F(2),
          F(1, 16), F(-2, 3), F(3, 16), F(-1, 2), F(5, 16), F(4, 3),
          F(7, 16), F(5, 4), F(9, 16), F(-4, 3)]


def test_enumeration_prefix():
    assert [ENUM.q(n) for n in range(25)] == PREFIX


def test_enumeration_injective_prefix():
    seen = [ENUM.q(n) for n in range(400)]
    assert len(set(seen)) == 400


def test_pair_examples():
    assert pair(0, 0) == 0
    assert pair(3, 1) == 11
    assert unpair(11) == (3, 1)


@given(st.integers(0, 500), st.integers(0, 500))
def test_pair_unpair_round_trip(a, b):
    assert unpair(pair(a, b)) == (a, b)


@given(st.integers(0, 10 ** 6))
def test_unpair_pair_round_trip(n):
    a, b = unpair(n)
    assert pair(a, b) == n


def test_target_signs():
    third = parse_target("1/3")
    assert third.cmp_to(F(1, 4)) == 1
    assert third.cmp_to(F(1, 3)) == 0
    assert third.cmp_to(F(1, 2)) == -1
    root = parse_target("sqrt-half")
    assert root.cmp_to(F(5, 8)) == 1
    assert root.cmp_to(F(3, 4)) == -1
    assert root.cmp_to(F(1, 2)) == 1
    assert root.cmp_to(F(0)) == 1
    assert root.cmp_to(F(1)) == -1


def test_target_rejects():
    for text in ["spam", "3/2", "-1/4", "1/0"]:
        with pytest.raises(RealSourceError):
            parse_target(text)


def test_right_cut_of_third():
    cut = get_cut("1/3", RIGHT)
    for i in range(100):
        assert cut.element(i) > F(1, 3)
    assert [cut.hit(k) for k in range(6)] == \
        [Dyadic(1, 1), Dyadic(3, 2), Dyadic(3, 3), Dyadic(5, 3),
         Dyadic(7, 3), Dyadic(7, 4)]


def test_left_cut_of_third():
    cut = get_cut("1/3", LEFT)
    for i in range(100):
        assert cut.element(i) < F(1, 3)
    assert [cut.hit(k) for k in range(6)] == \
        [Dyadic(1, 2), Dyadic(1, 3), Dyadic(1, 4), Dyadic(3, 4),
         Dyadic(5, 4), Dyadic(1, 5)]


def test_left_cut_of_half_deep_hit():
    assert get_cut("1/2", LEFT).hit(30) == Dyadic(31, 6)


def test_trivial_cut_has_no_unit_hits():
    cut = get_cut("1", RIGHT)
    for i in range(100):
        assert cut.element(i) > 1
    cut = get_cut("0", LEFT)
    for i in range(100):
        assert cut.element(i) < 0


def test_cut_next_walks_elements():
    left, right = builtin_real("sqrt-half")
    assert left.side == LEFT and right.side == RIGHT
    first = [right.next() for _ in range(10)]
    assert first == [right.element(i) for i in range(10)]


def test_sqrt_half_cut_brackets():
    left, right = builtin_real("sqrt-half")
    lo = max(left.element(i) for i in range(200))
    hi = min(right.element(i) for i in range(200))
    assert lo < hi
    assert hi - lo < F(1, 32)
    assert lo * lo < F(1, 2) < hi * hi


def test_predicate_threshold_logic():
    pred = sigma2_predicate("geometric-above", "1/3")
    assert pred.side == RIGHT
    assert pred.R(3, 0, F(1, 2))            # 1/2 > 1/3 + 1/8
    assert not pred.R(3, 0, F(11, 24))      # exactly the threshold
    assert pred.R(3, 7, F(1, 2)) == pred.R(3, 0, F(1, 2))
    assert pred.neg_witness(3, F(1, 2)) is None
    assert pred.neg_witness(3, F(11, 24)) == 0


def test_lagged_predicate_needs_large_x1():
    pred = sigma2_predicate("lagged-above", "1/3")
    assert pred.R(3, 3, F(0))               # small x1 always passes
    assert not pred.R(3, 4, F(0))
    assert pred.neg_witness(3, F(0)) == 4


def test_predicate_rejects():
    with pytest.raises(RealSourceError):
        sigma2_predicate("exponential-above", "1/3")
    for param in ["spam", "1/0", "3/2"]:
        with pytest.raises(RealSourceError):
            sigma2_predicate("geometric-above", param)


def test_transform_guard_sides():
    tr = transform_R1(sigma2_predicate("geometric-above", "1/3"))
    # x0 = 11 decodes to e = 3, j = 1, so q_j = 1/2 and the guard is q >= 1/2
    assert tr.holds(11, 0, F(1, 2))
    assert not tr.holds(11, 0, F(1, 4))
    assert tr.neg_witness(11, F(1, 4)) == 0
    assert tr.neg_witness(11, F(1, 2)) is None
    tl = transform_R1(sigma2_predicate("geometric-below", "2/3"))
    assert tl.holds(11, 0, F(1, 2))
    assert not tl.holds(11, 0, F(3, 4))


@pytest.mark.parametrize("name,param", [
    ("geometric-above", "1/3"), ("lagged-above", "2/7"),
    ("geometric-below", "2/3"), ("lagged-below", "5/7")])
def test_transform_witness_matches_brute_force(name, param):
    tr = transform_R1(sigma2_predicate(name, param))
    qs = [F(0), F(1, 3), F(11, 24), F(1, 2), F(2, 3), F(1)]
    for x0 in range(40):
        for q in qs:
            brute = next((x1 for x1 in range(60)
                          if not tr.holds(x0, x1, q)), None)
            assert tr.neg_witness(x0, q) == brute


def test_transform_monotone_in_q():
    tr = transform_R1(sigma2_predicate("geometric-above", "1/3"))
    qs = sorted([F(0), F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(1)])
    for x0 in range(30):
        for x1 in range(5):
            held = [tr.holds(x0, x1, q) for q in qs]
            # once true it stays true as q grows
            assert held == sorted(held)


def test_staged_values_right():
    ex = extract_seq_right_sigma2(sigma2_predicate("geometric-above", "1/3"))
    grid = (1, 4, 16, 64, 256, 1024)
    assert [ex.s_approx(11, t) for t in grid] == \
        [Dyadic(0, 0), Dyadic(1, 2), Dyadic(3, 3), Dyadic(15, 5),
         Dyadic(63, 7), Dyadic(255, 9)]
    for m in range(20):
        vals = [ex.s_approx(m, t) for t in grid]
        assert vals == sorted(vals)
        assert all(Dyadic(0, 0) <= v <= Dyadic(1, 0) for v in vals)
    assert ex.limit_s(10) == F(1)
    assert ex.limit_s(11) == F(1, 2)
    assert ex.limit_r(10) == F(1)
    assert ex.limit_r(11) == F(1, 2)
    assert ex.r_approx(32, 1024) == Dyadic(255, 9)
    staged = ex.staged(11)
    assert staged.direction == FROM_BELOW
    assert staged.approx(64) == ex.r_approx(11, 64)


def test_staged_values_left():
    ex = extract_seq_left_sigma2(sigma2_predicate("geometric-below", "2/3"))
    grid = (1, 4, 16, 64, 256, 1024)
    assert [ex.s_approx(11, t) for t in grid] == \
        [Dyadic(1, 0), Dyadic(1, 0), Dyadic(5, 3), Dyadic(17, 5),
         Dyadic(65, 7), Dyadic(257, 9)]
    for m in range(20):
        vals = [ex.s_approx(m, t) for t in grid]
        assert vals == sorted(vals, reverse=True)
    assert ex.limit_s(11) == F(1, 2)
    assert ex.limit_r(10) == F(0)
    assert ex.limit_r(11) == F(1, 2)
    assert ex.r_approx(32, 1024) == Dyadic(257, 9)
    assert ex.staged(11).direction == FROM_ABOVE


def test_prefix_extremum_monotone_in_n():
    ex = extract_seq_right_sigma2(sigma2_predicate("geometric-above", "1/3"))
    vals = [ex.r_approx(n, 256) for n in range(33)]
    assert vals == sorted(vals, reverse=True)
    exl = extract_seq_left_sigma2(sigma2_predicate("geometric-below", "2/3"))
    vals = [exl.r_approx(n, 256) for n in range(33)]
    assert vals == sorted(vals)


def test_extraction_side_guards():
    right = sigma2_predicate("geometric-above", "1/3")
    left = sigma2_predicate("geometric-below", "2/3")
    with pytest.raises(RealSourceError):
        extract_seq_right_sigma2(left)
    with pytest.raises(RealSourceError):
        extract_seq_left_sigma2(right)
    assert get_extraction(right) is get_extraction(right)


def test_source_round_trips():
    texts = ['(real builtin "sqrt-half")',
             '(real constant "1/2" 1)',
             '(real constant "2/7" w^2+3)',
             '(real sigma2-right geometric-above "1/3")',
             '(real sigma2-left lagged-below "5/7")',
             '(real geometric right 3 "1/3")',
             '(real leveled right w (members constant "1/2"))',
             '(real leveled left w*2 (members geometric "2/3"))']
    for text in texts:
        assert parse_real_source(text).descriptor == text


def test_source_levels_and_sides():
    assert parse_real_source('(real builtin "1/3")').level == from_int(1)
    assert parse_real_source('(real builtin "1/3")').side is None
    src = parse_real_source('(real sigma2-right geometric-above "1/3")')
    assert src.level == from_int(2)
    assert src.side == RIGHT
    lvl = parse_real_source('(real leveled right w (members constant "1/2"))')
    assert lvl.level == OMEGA
    assert lvl.cmp_to(F(1, 4)) == 1
    assert lvl.cmp_to(F(1, 2)) == 0


def test_source_rejects():
    bad = ['(real)',
           '(real builtin "seven-ish")',
           '(real constant "3/2" 1)',
           '(real constant "1/2" 0)',
           '(real constant 1/2 1)',
           '(real sigma2-left geometric-above "1/3")',
           '(real geometric right 1 "1/3")',
           '(real geometric right w "1/3")',
           '(real geometric up 3 "1/3")',
           '(real leveled right 3 (members constant "1/2"))',
           '(real leveled right w (members harmonic "1/2"))',
           '(real mystery "1/3")',
           '(dist x0 x1)']
    for text in bad:
        with pytest.raises(RealSourceError):
            parse_real_source(text)


def test_lift_level_one_running_extrema():
    kids = lift_successor(BuiltinSource("1/3"), RIGHT)
    assert kids.direction == "nonincreasing"
    vals = [kids(n).value for n in range(25)]
    assert vals[0] == F(1)
    assert vals[1] == F(1, 2)
    assert vals[9] == F(3, 8)
    assert vals == sorted(vals, reverse=True)
    assert all(v >= F(1, 3) for v in vals)
    assert kids(0).level.is_zero()
    low = lift_successor(BuiltinSource("1/3"), LEFT)
    assert low.direction == "nondecreasing"
    lvals = [low(n).value for n in range(25)]
    assert lvals == sorted(lvals)
    assert all(F(0) <= v <= F(1, 3) for v in lvals)
    assert lvals[3] == F(1, 4)


def test_lift_successor_sigma2():
    src = Sigma2Source(sigma2_predicate("geometric-above", "1/3"))
    kids = lift_successor(src, RIGHT)
    assert kids.direction == "nonincreasing"
    child = kids(11)
    assert isinstance(child, StagedChildSource)
    assert child.side == LEFT
    assert child.level == from_int(1)
    assert child.cmp_to(F(1, 2)) == 0
    assert kids(10).cmp_to(F(1, 2)) == 1
    assert child.staged.approx(1024) == Dyadic(255, 9)


def test_lift_successor_geometric():
    src = parse_real_source('(real geometric right 3 "1/3")')
    kids = lift_successor(src, RIGHT)
    assert [kids(n).value for n in range(3)] == [F(1), F(5, 6), F(7, 12)]
    assert kids(0).level == from_int(2)
    low = lift_successor(parse_real_source('(real geometric left 3 "2/3")'),
                         LEFT)
    assert [low(n).value for n in range(3)] == [F(0), F(1, 6), F(5, 12)]


def test_lift_guards():
    with pytest.raises(RealSourceError):
        lift_successor(Sigma2Source(sigma2_predicate("geometric-above", "1/3")),
                       LEFT)
    with pytest.raises(RealSourceError):
        lift_successor(ConstantSource(F(1, 2), from_int(0)), RIGHT)
    with pytest.raises(RealSourceError):
        lift_successor(ConstantSource(F(1, 2), OMEGA), RIGHT)


def test_limit_decomposition_geometric():
    src = parse_real_source('(real leveled right w (members geometric "1/3"))')
    member = limit_decomposition(src, RIGHT)
    assert [member(n).value for n in range(3)] == [F(1), F(5, 6), F(7, 12)]
    assert member(0).level == from_int(1)
    assert member(1).level == from_int(1)
    assert member(2).level == from_int(2)
    assert member(7).level == from_int(7)


def test_limit_decomposition_constant():
    src = parse_real_source('(real leveled left w (members constant "1/2"))')
    member = limit_decomposition(src, LEFT)
    for n in range(6):
        assert member(n).value == F(1, 2)
        assert member(n).level == from_int(max(1, n))


def test_limit_decomposition_above_omega():
    src = parse_real_source('(real leveled right w^2 (members constant "1/2"))')
    member = limit_decomposition(src, RIGHT)
    assert member(3).level == parse_ordinal("w*3")


def test_limit_decomposition_guards():
    with pytest.raises(RealSourceError):
        limit_decomposition(BuiltinSource("1/3"), RIGHT)
    src = parse_real_source('(real leveled right w (members constant "1/2"))')
    with pytest.raises(RealSourceError):
        limit_decomposition(src, LEFT)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 60), st.sampled_from(["1/3", "2/7", "sqrt-half"]))
def test_cut_elements_stay_on_their_side(i, name):
    target = parse_target(name)
    assert target.cmp_to(get_cut(name, RIGHT).element(i)) < 0
    assert target.cmp_to(get_cut(name, LEFT).element(i)) > 0
