"""Numeral builders: dyadic numerals, the level-1 base case from cut
enumerators, successor and limit steps, and the recipe driver.

A numeral here is a sentence whose value is the same real in every metric
space. The recursion is the standard one: at level 1 a right numeral is a
countable inf of existential dyadic numerals drawn from the right cut; a
successor level wraps the opposite-side numerals of the lifted child
sequence; a limit level wraps same-side numerals along the fundamental
sequence. Infinite families are realized as registered generators so the
whole construction serializes to a finite code.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import reals, sexpr
from .dyadics import Dyadic, ZERO, ONE, HALF, in_unit
from .formulas import (Atomic, CInf, CSup, ExplicitFamily, GeneratedFamily, Half,
                       InfQ, Neg, SupQ, family_member, free_vars,
                       register_generator)
from .ordinals import OrdinalCNF, from_int, parse_ordinal
from .reals import LEFT, RIGHT, LEVEL_ONE

EXISTS = "exists"
FORALL = "forall"


class BuildError(Exception):
    pass


def other_side(side):
    return LEFT if side == RIGHT else RIGHT


def other_flavor(flavor):
    return FORALL if flavor == EXISTS else EXISTS


# ------------------------------------------------------------ dyadic numerals


def dyadic_numeral(r, flavor):
    """The finitary sentence of value r, for either quantifier flavor.

    r = 0 is the defining base (inf respectively sup of d(x0,x0));
    r > 1/2 unfolds as the complement of 1-r with flipped flavor;
    0 < r <= 1/2 halves. Terminates in at most 2k+2 steps for
    denominator 2^k.
    """
    if flavor not in (EXISTS, FORALL):
        raise BuildError("flavor must be exists or forall")
    if not isinstance(r, Dyadic):
        raise BuildError("dyadic numerals need a Dyadic value, got %r" % (r,))
    if not in_unit(r):
        raise BuildError("value %s outside [0,1]" % r)
    if r == ZERO:
        body = Atomic(0, 0)
        return InfQ(0, body) if flavor == EXISTS else SupQ(0, body)
    if r > HALF:
        return Neg(dyadic_numeral(ONE - r, other_flavor(flavor)))
    return Half(dyadic_numeral(r + r, flavor))


def strip_double_neg(phi):
    while isinstance(phi, Neg) and isinstance(phi.body, Neg):
        phi = phi.body.body
    return phi


# ----------------------------------------------------------- level-1 numerals


class DyadicCutGenerator:
    """Members of the level-1 family for one side of a cut.

    Even indices carry the dyadic cut members in (0,1) in the order the
    fixed enumeration finds them; odd indices repeat the endpoint constant
    (1 on the right, 0 on the left), which also covers the degenerate cuts
    with no dyadic members at all.
    """

    def __init__(self, side):
        self.side = side
        self.flavor = EXISTS if side == RIGHT else FORALL
        self.endpoint = ONE if side == RIGHT else ZERO

    def _trivial(self, params):
        target = reals.parse_target(params)
        probe = Fraction(1) if self.side == RIGHT else Fraction(0)
        return target.cmp_to(probe) == 0

    def member(self, params, n):
        if n % 2 == 1 or self._trivial(params):
            return dyadic_numeral(self.endpoint, self.flavor)
        hit = reals.get_cut(params, self.side).hit(n // 2)
        return dyadic_numeral(hit, self.flavor)

    def level_bound(self, params):
        return from_int(1)

    def monotone(self, params):
        return None


def base_numeral(side, enumerator):
    """Level-1 numeral from a cut enumerator; inf on the right, sup left."""
    if enumerator.side != side:
        raise BuildError("enumerator is %s-sided, wanted %s"
                         % (enumerator.side, side))
    name = "dyadic-upper-cut" if side == RIGHT else "dyadic-lower-cut"
    family = GeneratedFamily(name, enumerator.target.text)
    return CInf(family) if side == RIGHT else CSup(family)


class StagedApproxGenerator:
    """Level-1 family for one extracted limit r_n, known only by stages.

    Member t is the dyadic numeral of the stage-t approximation; for a
    right-sided predicate these rise from below and the wrapping CSup is
    the left child numeral, mirrored on the other side.
    """

    @staticmethod
    @lru_cache(maxsize=None)
    def _parse(params):
        node = sexpr.read(params)
        if not isinstance(node, sexpr.Group) or len(node) != 4 \
                or node[0] != "stage":
            raise BuildError('staged-approx params must be '
                             '(stage pred-name "param" index)')
        pred = reals.sigma2_predicate(str(node[1]), str(node[2]))
        index = int(str(node[3]))
        return pred, index

    def member(self, params, t):
        pred, index = self._parse(params)
        value = reals.get_extraction(pred).r_approx(index, t)
        flavor = FORALL if pred.side == RIGHT else EXISTS
        return dyadic_numeral(value, flavor)

    def level_bound(self, params):
        return from_int(1)

    def monotone(self, params):
        pred, _ = self._parse(params)
        return "nondecreasing" if pred.side == RIGHT else "nonincreasing"


def staged_child_numeral(source):
    params = "(stage %s %s %d)" % (source.pred.name,
                                   sexpr.quote(source.pred.param), source.index)
    family = GeneratedFamily("staged-approx", params)
    return CSup(family) if source.side == LEFT else CInf(family)


# ----------------------------------------------------- successor and limit


def successor_numeral(side, family):
    """Wrap a family of opposite-side numerals in one infinitary node."""
    if not isinstance(family, (ExplicitFamily, GeneratedFamily)):
        family = ExplicitFamily(tuple(family))
    probe = range(family.known_size) if family.known_size is not None \
        else range(3)
    for n in probe:
        fv = free_vars(family_member(family, n))
        if fv:
            raise BuildError("family member %d has free variables %s"
                             % (n, sorted(fv)))
    return CInf(family) if side == RIGHT else CSup(family)


def fundamental_sequence(alpha):
    """The canonical cofinal sequence of a limit ordinal, as a map."""
    if not alpha.is_limit():
        raise BuildError("%s is not a limit ordinal" % alpha)
    return alpha.fundamental


@lru_cache(maxsize=None)
def _succ_parse(params):
    node = sexpr.read(params)
    if not isinstance(node, sexpr.Group) or len(node) != 4 or node[0] != "succ":
        raise BuildError("successor params must be (succ side level descriptor)")
    side = str(node[1])
    if side not in (LEFT, RIGHT):
        raise BuildError("bad side %r" % side)
    level = parse_ordinal(str(node[2]))
    source = reals._source_from(node[3])
    if source.level != level:
        raise BuildError("source declares level %s, successor step says %s"
                         % (source.level, level))
    children = reals.lift_successor(source, side)
    return side, level, children


class SuccessorMembersGenerator:
    """Members of a successor-level numeral: the child numerals one level
    down on the opposite side, values moving monotonically to the real."""

    def member(self, params, n):
        side, level, children = _succ_parse(params)
        return build_numeral(other_side(side), level.predecessor(), children(n))

    def level_bound(self, params):
        return _succ_parse(params)[1]

    def monotone(self, params):
        return _succ_parse(params)[2].direction


@lru_cache(maxsize=None)
def _limit_parse(params):
    node = sexpr.read(params)
    if not isinstance(node, sexpr.Group) or len(node) != 4 or node[0] != "limit":
        raise BuildError("limit params must be (limit side level descriptor)")
    side = str(node[1])
    if side not in (LEFT, RIGHT):
        raise BuildError("bad side %r" % side)
    level = parse_ordinal(str(node[2]))
    source = reals._source_from(node[3])
    if source.level != level:
        raise BuildError("source declares level %s, limit step says %s"
                         % (source.level, level))
    member = reals.limit_decomposition(source, side)
    return side, level, member


class LimitMembersGenerator:
    """Members of a limit-level numeral: same-side numerals at the levels of
    the fundamental sequence, with prefix-combined values."""

    def member(self, params, n):
        side, _level, member = _limit_parse(params)
        src = member(n)
        return build_numeral(side, src.level, src)

    def level_bound(self, params):
        return _limit_parse(params)[1]

    def monotone(self, params):
        side = _limit_parse(params)[0]
        return "nonincreasing" if side == RIGHT else "nondecreasing"


# ------------------------------------------------------------------- driver


def build_numeral(side, level, source):
    """The transfinite-recursion driver; dispatches on the level shape."""
    if side not in (LEFT, RIGHT):
        raise BuildError("side must be left or right, got %r" % side)
    if source.side is not None and source.side != side:
        raise BuildError("source is %s-sided, recipe says %s"
                         % (source.side, side))
    if level != source.level:
        raise BuildError("source declares level %s, recipe says %s"
                         % (source.level, level))
    if level.is_zero():
        raise BuildError("numerals start at level 1")
    if level == LEVEL_ONE:
        if isinstance(source, reals.StagedChildSource):
            return staged_child_numeral(source)
        if isinstance(source, reals.BuiltinSource):
            return base_numeral(side, reals.get_cut(source.text, side))
        if isinstance(source, reals.ConstantSource):
            return base_numeral(side, reals.get_cut(str(source.value), side))
        raise BuildError("cannot build a level-1 numeral from %s"
                         % type(source).__name__)
    if level.is_successor():
        params = "(succ %s %s %s)" % (side, level, source.descriptor)
        _succ_parse(params)  # fail fast on incoherent sources
        return successor_numeral(side, GeneratedFamily("successor-members", params))
    if isinstance(source, reals.ConstantSource):
        source = reals.LeveledSource(side, level, "constant", source.value)
    params = "(limit %s %s %s)" % (side, level, source.descriptor)
    _limit_parse(params)
    family = GeneratedFamily("limit-members", params)
    return CInf(family) if side == RIGHT else CSup(family)


# ------------------------------------------------------------------ recipes


@dataclass(frozen=True)
class NumeralRecipe:
    side: str
    level: OrdinalCNF
    source: object

    @property
    def descriptor(self):
        return "(numeral %s %s %s)" % (self.side, self.level,
                                       self.source.descriptor)

    def build(self):
        return build_numeral(self.side, self.level, self.source)


def parse_recipe(text):
    try:
        node = sexpr.read(text)
    except sexpr.SexprError as err:
        raise BuildError("bad recipe: %s" % err) from None
    if not isinstance(node, sexpr.Group) or len(node) != 4 \
            or node[0] != "numeral":
        raise BuildError("recipe must be (numeral side level real-source)")
    side = str(node[1])
    if side not in (LEFT, RIGHT):
        raise BuildError("bad side %r" % side)
    try:
        level = parse_ordinal(str(node[2]))
    except ValueError as err:
        raise BuildError(str(err)) from None
    source = reals._source_from(node[3])
    return NumeralRecipe(side, level, source)


register_generator("dyadic-upper-cut", DyadicCutGenerator(RIGHT))
register_generator("dyadic-lower-cut", DyadicCutGenerator(LEFT))
register_generator("staged-approx", StagedApproxGenerator())
register_generator("successor-members", SuccessorMembersGenerator())
register_generator("limit-members", LimitMembersGenerator())
