"""Reals in [0,1] given by cut enumerators, arithmetical predicates, and
leveled families, plus the sequence extractions that feed the numeral
builders.

Everything here is anchored to two fixed, documented constants:

* the rational enumeration q_n, which interleaves three streams:
  q_0 = 0; odd n give the dyadics of (0,1) in refinement order (1/2, 1/4,
  3/4, 1/8, 3/8, ...); n = 2 mod 4 give the dyadics outside [0,1) by
  zigzagging integer parts; n = 0 mod 4 (n >= 4) give the non-dyadic
  rationals via the Calkin-Wilf sequence with alternating signs;
* the Cantor pairing pair(a,b) = (a+b)(a+b+1)/2 + b with its inverse.

Both are part of the artifact's contract: changing either changes every
extracted sequence, so the tests freeze prefixes of both.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from . import sexpr
from .dyadics import Dyadic, ZERO, ONE, from_fraction, is_dyadic_fraction
from .ordinals import OrdinalCNF, from_int, parse_ordinal

RIGHT = "right"
LEFT = "left"

FROM_BELOW = "from-below"
FROM_ABOVE = "from-above"
LIMIT_DIR = "limit"


class RealSourceError(Exception):
    pass


def clamp01(q):
    if q < 0:
        return Fraction(0)
    if q > 1:
        return Fraction(1)
    return Fraction(q)


# ------------------------------------------------------------ pairing codec


def pair(a, b):
    return (a + b) * (a + b + 1) // 2 + b


def unpair(n):
    w = (math.isqrt(8 * n + 1) - 1) // 2
    b = n - w * (w + 1) // 2
    return w - b, b


# ----------------------------------------------------- rational enumeration


def _unit_dyadic(i):
    """i-th dyadic of (0,1) in refinement order: 1/2, 1/4, 3/4, 1/8, ..."""
    k = (i + 1).bit_length()
    t = (i + 1) - (1 << (k - 1))
    return Fraction(2 * t + 1, 1 << k)


def _zigzag(a):
    # 0, 1, 2, 3, ... -> 1, -1, 2, -2, ...
    mag = a // 2 + 1
    return mag if a % 2 == 0 else -mag


class RationalEnumeration:
    """The fixed bijective enumeration n -> q_n of the rationals."""

    def __init__(self):
        self._cw_nondyadic = []
        self._cw_last = Fraction(1)
        self._cw_drawn = 1
        self._memo = [Fraction(0)]

    def _cw_extend(self, upto):
        # Calkin-Wilf: x' = 1/(2*floor(x) - x + 1) walks every positive
        # rational exactly once; keep the non-dyadic ones.
        while len(self._cw_nondyadic) <= upto:
            x = self._cw_last
            x = 1 / (2 * (x.numerator // x.denominator) - x + 1)
            self._cw_last = x
            self._cw_drawn += 1
            if not is_dyadic_fraction(x):
                self._cw_nondyadic.append(x)

    def q(self, n):
        if n < 0:
            raise ValueError("negative enumeration index")
        memo = self._memo
        if n < len(memo):
            return memo[n]
        for k in range(len(memo), n + 1):
            memo.append(self._value(k))
        return memo[n]

    def _value(self, n):
        if n % 2 == 1:
            return _unit_dyadic((n - 1) // 2)
        if n % 4 == 2:
            a, b = unpair((n - 2) // 4)
            whole = _zigzag(a)
            return whole + (_unit_dyadic(b - 1) if b else Fraction(0))
        m = (n - 4) // 4
        self._cw_extend(m // 2)
        x = self._cw_nondyadic[m // 2]
        return x if m % 2 == 0 else -x


ENUM = RationalEnumeration()


# ------------------------------------------------------- comparison targets


class RationalTarget:
    def __init__(self, value, text=None):
        self.value = Fraction(value)
        self.text = text if text is not None else str(self.value)

    def cmp_to(self, q):
        """sign(r - q), decided exactly."""
        d = self.value - q
        return (d > 0) - (d < 0)


class SqrtHalfTarget:
    """The square root of 1/2, compared by cross-multiplied squaring."""

    text = "sqrt-half"

    def cmp_to(self, q):
        if q <= 0:
            return 1
        if q >= 1:
            return -1
        # sqrt(1/2) vs p/d  <=>  d^2 vs 2 p^2; equality cannot occur
        p, d = q.numerator, q.denominator
        return 1 if d * d > 2 * p * p else -1


_NAMED_TARGETS = {"sqrt-half": SqrtHalfTarget}


def parse_target(text):
    """A builtin-real name: a rational literal in [0,1] or a known constant."""
    text = text.strip()
    if text in _NAMED_TARGETS:
        return _NAMED_TARGETS[text]()
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise RealSourceError("unknown builtin real %r" % text) from None
    if not 0 <= value <= 1:
        raise RealSourceError("builtin real %s outside [0,1]" % text)
    return RationalTarget(value, text)


# ------------------------------------------------------------ cut enumerators


class CutEnumerator:
    """Total enumeration of one Dedekind cut of a target real.

    Stage i inspects q_i; if it belongs to the cut it is emitted, otherwise
    the previous emission is repeated (seeded with a far member of the cut,
    2 on the right and -1 on the left, so stage 0 is already total).
    """

    def __init__(self, target, side):
        if side not in (LEFT, RIGHT):
            raise ValueError("side must be left or right")
        self.target = target
        self.side = side
        self._seed = Fraction(2) if side == RIGHT else Fraction(-1)
        self._elements = []      # padded stream, grown on demand
        self._hits = []          # dyadic cut members in (0,1), in stage order
        self._hit_stages = []    # the stage each hit appeared at
        self._pos = 0            # consumer cursor for next()

    def raw(self, i):
        """q_i when q_i is in the cut, else None."""
        q = ENUM.q(i)
        c = self.target.cmp_to(q)
        if self.side == RIGHT:
            return q if c < 0 else None
        return q if c > 0 else None

    def _grow(self, upto):
        while len(self._elements) <= upto:
            i = len(self._elements)
            q = self.raw(i)
            if q is None:
                q = self._elements[-1] if self._elements else self._seed
            else:
                if is_dyadic_fraction(q) and 0 < q < 1:
                    self._hits.append(from_fraction(q))
                    self._hit_stages.append(i)
            self._elements.append(q)

    def element(self, i):
        self._grow(i)
        return self._elements[i]

    def next(self):
        q = self.element(self._pos)
        self._pos += 1
        return q

    def hit(self, k):
        """The k-th dyadic cut member in (0,1), in order of discovery.

        Terminates for every nontrivial cut: the cut contains a tail of the
        unit dyadics, which the enumeration visits at every other odd index.
        Callers must handle the trivial cuts (right cut of 1, left cut of 0)
        themselves; the growth cap turns a misuse into an error, not a hang.
        """
        while len(self._hits) <= k:
            if len(self._elements) >= (1 << 24):
                raise RuntimeError("cut of %s has fewer than %d dyadic members"
                                   % (self.target.text, k + 1))
            self._grow(len(self._elements) + 1024)
        return self._hits[k]


_CUTS = {}


def get_cut(target_text, side):
    key = (target_text, side)
    if key not in _CUTS:
        _CUTS[key] = CutEnumerator(parse_target(target_text), side)
    return _CUTS[key]


def builtin_real(name):
    """Both cut enumerators (left, right) of a named computable real."""
    parse_target(name)  # unknown names fail here
    return get_cut(name, LEFT), get_cut(name, RIGHT)


# --------------------------------------------------------- sigma-2 predicates
#
# Each predicate family encodes one real r as a total decidable relation
# R(x0, x1, q) with: q > r <=> exists x0 forall x1 R (right side), and
# q < r <=> exists x0 forall x1 R (left side). The witnesses decay like
# 2^-x0; the "lagged" variants additionally make the x1 search nontrivial.

_PREDICATE_SIDES = {
    "geometric-above": RIGHT,
    "lagged-above": RIGHT,
    "geometric-below": LEFT,
    "lagged-below": LEFT,
}


@dataclass(frozen=True)
class Sigma2Predicate:
    name: str
    param: str

    @cached_property
    def side(self):
        return _PREDICATE_SIDES[self.name]

    @cached_property
    def c(self):
        return Fraction(self.param)

    @lru_cache(maxsize=None)
    def _threshold(self, x0):
        gap = Fraction(1, 1 << x0)
        return self.c + gap if self.side == RIGHT else self.c - gap

    def R(self, x0, x1, q):
        cut = self._threshold(x0)
        if self.name == "geometric-above":
            return q > cut
        if self.name == "lagged-above":
            return q > cut or x1 <= x0
        if self.name == "geometric-below":
            return q < cut
        return q < cut or x1 <= x0

    def neg_witness(self, x0, q):
        """Least x1 with not R(x0, x1, q), or None when R holds for all x1."""
        cut = self._threshold(x0)
        passed = q <= cut if self.side == RIGHT else q >= cut
        if not passed:
            return None
        return 0 if self.name.startswith("geometric") else x0 + 1


def sigma2_predicate(name, param):
    if name not in _PREDICATE_SIDES:
        raise RealSourceError("unknown predicate %r" % name)
    pred = Sigma2Predicate(name, param)
    try:
        c = pred.c
    except (ValueError, ZeroDivisionError):
        raise RealSourceError("predicate parameter %r is not rational" % param) from None
    if not 0 <= c <= 1:
        raise RealSourceError("predicate value %s outside [0,1]" % param)
    return pred


@dataclass(frozen=True)
class TransformedR1:
    """R1(x0,x1,q) <=> q_{(x0)_1} <= q and R((x0)_0, x1, q_{(x0)_1}).

    On the right side this is closed upward in q; the left mirror flips the
    guard and is closed downward.
    """

    pred: Sigma2Predicate

    def holds(self, x0, x1, q):
        e, j = unpair(x0)
        qj = ENUM.q(j)
        if self.pred.side == RIGHT:
            return qj <= q and self.pred.R(e, x1, qj)
        return q <= qj and self.pred.R(e, x1, qj)

    def neg_witness(self, x0, q):
        """Least x1 refuting R1(x0, x1, q), or None."""
        e, j = unpair(x0)
        qj = ENUM.q(j)
        if self.pred.side == RIGHT:
            if q < qj:
                return 0
        else:
            if qj < q:
                return 0
        return self.pred.neg_witness(e, qj)


def transform_R1(pred):
    return TransformedR1(pred)


# -------------------------------------------------------- staged extraction


@lru_cache(maxsize=None)
def _unit_dyadic_entry(i):
    """q_i as a Dyadic when it lies in (0,1) and is dyadic, else None."""
    q = ENUM.q(i)
    if is_dyadic_fraction(q) and 0 < q < 1:
        return from_fraction(q)
    return None


class StagedReal:
    """A real exposed through stage approximations approx(t)."""

    def __init__(self, direction, fn):
        self.direction = direction
        self._fn = fn

    def approx(self, t):
        return self._fn(t)


class SequenceExtraction:
    """The monotone sequence extracted from one sigma-2 predicate.

    Right side: S_n = (-inf,0) union {q < 1 : exists x1 not R1(n,x1,q)},
    s_n = sup S_n, r_n = min{s_0..s_n}; stage t bounds both searches (the
    first t rationals, witnesses x1 < t) and keeps only dyadic finds in
    (0,1), so every approximation is a Dyadic and grows toward r_n from
    below. The left side mirrors everything: infima, running maxima,
    approximations falling from above.
    """

    def __init__(self, pred):
        self.pred = pred
        self.r1 = TransformedR1(pred)
        self.side = pred.side
        self._base = ZERO if self.side == RIGHT else ONE
        self._rows = {}      # m -> list of s-approximations by stage
        self._pending = {}   # m -> {witness bound -> [Dyadic]}
        self._best = {}      # m -> current extremum
        self._prefix = {}    # t -> list of prefix extrema over m

    def _extend_row(self, m, t):
        row = self._rows.setdefault(m, [self._base])
        if len(row) > t:
            return
        pend = self._pending.setdefault(m, {})
        # everything but the guard against q_j is constant along the row
        e, j = unpair(m)
        qj = ENUM.q(j)
        qj_num, qj_den = qj.numerator, qj.denominator
        core_wb = self.pred.neg_witness(e, qj)
        right = self.side == RIGHT
        best = self._best.get(m, self._base)
        while len(row) <= t:
            stage = len(row)  # appending the value at this stage
            arrivals = pend.pop(stage - 1, None)
            d = _unit_dyadic_entry(stage - 1)  # rational entering the search
            if d is not None:
                lhs = d.num * qj_den
                rhs = qj_num << d.exp
                if right:
                    wb = core_wb if lhs >= rhs else 0  # q < q_j refutes the guard
                else:
                    wb = 0 if lhs > rhs else core_wb
                if wb is not None:
                    if wb < stage:
                        if arrivals is None:
                            arrivals = [d]
                        else:
                            arrivals.append(d)
                    else:
                        pend.setdefault(wb, []).append(d)
            if arrivals:
                for found in arrivals:
                    if (found > best) if right else (found < best):
                        best = found
            row.append(best)
        self._best[m] = best

    def s_approx(self, m, t):
        """Stage-t approximation of s_m, as a Dyadic."""
        self._extend_row(m, t)
        return self._rows[m][t]

    def r_approx(self, n, t):
        """Stage-t approximation of r_n = prefix extremum of s_0..s_n."""
        prefix = self._prefix.setdefault(t, [])
        while len(prefix) <= n:
            value = self.s_approx(len(prefix), t)
            if prefix:
                head = prefix[-1]
                value = min(head, value) if self.side == RIGHT else \
                    max(head, value)
            prefix.append(value)
        return prefix[n]

    def staged(self, n):
        direction = FROM_BELOW if self.side == RIGHT else FROM_ABOVE
        return StagedReal(direction, lambda t: self.r_approx(n, t))

    # exact limits, by direct evaluation of the defining sets

    def limit_s(self, m):
        e, j = unpair(m)
        qj = ENUM.q(j)
        if self.pred.neg_witness(e, qj) is not None:
            return Fraction(1) if self.side == RIGHT else Fraction(0)
        return clamp01(qj)

    def limit_r(self, n):
        vals = [self.limit_s(m) for m in range(n + 1)]
        return min(vals) if self.side == RIGHT else max(vals)


_EXTRACTIONS = {}


def get_extraction(pred):
    key = (pred.name, pred.param)
    if key not in _EXTRACTIONS:
        _EXTRACTIONS[key] = SequenceExtraction(pred)
    return _EXTRACTIONS[key]


def extract_seq_right_sigma2(pred):
    if pred.side != RIGHT:
        raise RealSourceError("predicate %s is not right-sided" % pred.name)
    return get_extraction(pred)


def extract_seq_left_sigma2(pred):
    if pred.side != LEFT:
        raise RealSourceError("predicate %s is not left-sided" % pred.name)
    return get_extraction(pred)


# --------------------------------------------------------------- real sources
#
# A RealSource is a description of a real with a declared recursion level;
# the numeral builders dispatch on its kind. Sources whose side is None fit
# either side of a recipe.

LEVEL_ONE = from_int(1)
LEVEL_TWO = from_int(2)


@dataclass(frozen=True)
class BuiltinSource:
    text: str

    side = None
    level = LEVEL_ONE

    @property
    def target(self):
        return parse_target(self.text)

    def cmp_to(self, q):
        return self.target.cmp_to(q)

    @property
    def descriptor(self):
        return "(real builtin %s)" % sexpr.quote(self.text)


@dataclass(frozen=True)
class ConstantSource:
    value: Fraction
    level: OrdinalCNF

    side = None

    def cmp_to(self, q):
        d = self.value - q
        return (d > 0) - (d < 0)

    @property
    def descriptor(self):
        return "(real constant %s %s)" % (sexpr.quote(str(self.value)), self.level)


@dataclass(frozen=True)
class Sigma2Source:
    pred: Sigma2Predicate

    level = LEVEL_TWO

    @property
    def side(self):
        return self.pred.side

    def cmp_to(self, q):
        d = self.pred.c - q
        return (d > 0) - (d < 0)

    @property
    def descriptor(self):
        tag = "sigma2-right" if self.side == RIGHT else "sigma2-left"
        return "(real %s %s %s)" % (tag, self.pred.name, sexpr.quote(self.pred.param))


@dataclass(frozen=True)
class GeometricSource:
    """A rational at a declared successor level >= 2; its successor children
    are the constants value +/- 2^-n pushed one level down on the other side."""

    side_tag: str
    level: OrdinalCNF
    value: Fraction

    @property
    def side(self):
        return self.side_tag

    def cmp_to(self, q):
        d = self.value - q
        return (d > 0) - (d < 0)

    @property
    def descriptor(self):
        return "(real geometric %s %s %s)" % (self.side_tag, self.level,
                                              sexpr.quote(str(self.value)))


@dataclass(frozen=True)
class LeveledSource:
    """A limit-level real given with its cofinal member scheme.

    scheme "constant": every member is the value itself at level h(n);
    scheme "geometric": member n approaches the value from the declared
    side's far end, again at level h(n). h(n) walks the fundamental
    sequence of the limit, floored at 1.
    """

    side_tag: str
    level: OrdinalCNF
    scheme: str
    value: Fraction

    @property
    def side(self):
        return self.side_tag

    def cmp_to(self, q):
        d = self.value - q
        return (d > 0) - (d < 0)

    def h(self, n):
        lvl = self.level.fundamental(n)
        return lvl if not lvl.is_zero() else LEVEL_ONE

    def member_value(self, n):
        """Prefix-combined member value: running min (right) or max (left)."""
        if self.scheme == "constant":
            return self.value
        if self.side_tag == RIGHT:
            return clamp01(self.value + Fraction(1, 1 << n))
        return clamp01(self.value - Fraction(1, 1 << n))

    @property
    def descriptor(self):
        return "(real leveled %s %s (members %s %s))" % (
            self.side_tag, self.level, self.scheme, sexpr.quote(str(self.value)))


@dataclass(frozen=True)
class StagedChildSource:
    """Level-1 source for r_n of an extraction, known only through stages."""

    pred: Sigma2Predicate
    index: int

    level = LEVEL_ONE

    @property
    def side(self):
        # children sit on the opposite side of the parent predicate
        return LEFT if self.pred.side == RIGHT else RIGHT

    @property
    def staged(self):
        return get_extraction(self.pred).staged(self.index)

    def cmp_to(self, q):
        d = get_extraction(self.pred).limit_r(self.index) - q
        return (d > 0) - (d < 0)


RealSource = (BuiltinSource | ConstantSource | Sigma2Source | GeometricSource
              | LeveledSource | StagedChildSource)


def _rational_text(node, what):
    if not isinstance(node, sexpr.QuotedString):
        raise RealSourceError("%s must be a quoted rational" % what)
    try:
        value = Fraction(str(node))
    except (ValueError, ZeroDivisionError):
        raise RealSourceError("%s %r is not rational" % (what, str(node))) from None
    return value


def _level_of(node):
    try:
        return parse_ordinal(str(node))
    except ValueError as err:
        raise RealSourceError(str(err)) from None


def _source_from(node):
    if not isinstance(node, sexpr.Group) or not node or node[0] != "real":
        raise RealSourceError("expected (real ...)")
    if len(node) < 2:
        raise RealSourceError("empty real descriptor")
    kind = str(node[1])
    args = node[2:]
    if kind == "builtin":
        if len(args) != 1 or not isinstance(args[0], sexpr.QuotedString):
            raise RealSourceError('(real builtin "name") takes one quoted name')
        parse_target(str(args[0]))
        return BuiltinSource(str(args[0]))
    if kind == "constant":
        if len(args) != 2:
            raise RealSourceError('(real constant "value" level) takes two arguments')
        value = _rational_text(args[0], "constant value")
        if not 0 <= value <= 1:
            raise RealSourceError("constant %s outside [0,1]" % value)
        level = _level_of(args[1])
        if level.is_zero():
            raise RealSourceError("constant level must be at least 1")
        return ConstantSource(value, level)
    if kind in ("sigma2-right", "sigma2-left"):
        if len(args) != 2 or not isinstance(args[1], sexpr.QuotedString):
            raise RealSourceError('(real %s name "param") takes a predicate name '
                                  'and a quoted parameter' % kind)
        pred = sigma2_predicate(str(args[0]), str(args[1]))
        want = RIGHT if kind == "sigma2-right" else LEFT
        if pred.side != want:
            raise RealSourceError("predicate %s is %s-sided" % (pred.name, pred.side))
        return Sigma2Source(pred)
    if kind == "geometric":
        if len(args) != 3:
            raise RealSourceError('(real geometric side level "value") takes three '
                                  'arguments')
        side = str(args[0])
        if side not in (LEFT, RIGHT):
            raise RealSourceError("side must be left or right")
        level = _level_of(args[1])
        if not level.is_successor() or level <= LEVEL_ONE:
            raise RealSourceError("geometric level must be a successor >= 2")
        value = _rational_text(args[2], "geometric value")
        if not 0 <= value <= 1:
            raise RealSourceError("geometric value %s outside [0,1]" % value)
        return GeometricSource(side, level, value)
    if kind == "leveled":
        if len(args) != 3 or not isinstance(args[2], sexpr.Group):
            raise RealSourceError('(real leveled side level (members scheme "value")) '
                                  'takes a side, a level, and a members block')
        side = str(args[0])
        if side not in (LEFT, RIGHT):
            raise RealSourceError("side must be left or right")
        level = _level_of(args[1])
        if not level.is_limit():
            raise RealSourceError("leveled sources need a limit level, got %s" % level)
        mem = args[2]
        if len(mem) != 3 or mem[0] != "members" \
                or str(mem[1]) not in ("constant", "geometric"):
            raise RealSourceError("members block must be "
                                  '(members constant|geometric "value")')
        value = _rational_text(mem[2], "member value")
        if not 0 <= value <= 1:
            raise RealSourceError("leveled value %s outside [0,1]" % value)
        return LeveledSource(side, level, str(mem[1]), value)
    raise RealSourceError("unknown real-source kind %r" % kind)


def parse_real_source(text):
    try:
        node = sexpr.read(text)
    except sexpr.SexprError as err:
        raise RealSourceError("bad real descriptor: %s" % err) from None
    return _source_from(node)


# --------------------------------------------------- successor / limit steps


@dataclass(frozen=True)
class SuccessorChildren:
    """Lazy child sequence of a successor-level source.

    direction declares how child values move: nonincreasing toward the
    real for right-side parents, nondecreasing for left-side ones.
    """

    child: object  # n -> RealSource
    direction: str

    def __call__(self, n):
        return self.child(n)


def _running_cut_extremum(source, side, n):
    # r_n = min{1, s_0..s_n} over the right cut, max{0, ...} over the left
    cut = get_cut(source.text if isinstance(source, BuiltinSource)
                  else str(source.value), side)
    vals = [cut.element(i) for i in range(n + 1)]
    if side == RIGHT:
        return min([Fraction(1)] + vals)
    return max([Fraction(0)] + vals)


def lift_successor(source, side):
    """The child sequence one level down that converges to the source real.

    side is the recipe side of the parent numeral; children land on the
    opposite side at the predecessor level. At level 1 the children are the
    running extrema of the cut enumeration itself (plain rationals at level
    0, no longer buildable as numerals; exposed for direct inspection).
    """
    if source.side is not None and source.side != side:
        raise RealSourceError("source is %s-sided, recipe says %s"
                              % (source.side, side))
    level = source.level
    if level.is_zero():
        raise RealSourceError("nothing to lift at level 0")
    if level == LEVEL_ONE:
        if isinstance(source, (BuiltinSource, ConstantSource)):
            zero = from_int(0)
            def child(n, _src=source, _side=side):
                return ConstantSource(_running_cut_extremum(_src, _side, n), zero)
            return SuccessorChildren(
                child, "nonincreasing" if side == RIGHT else "nondecreasing")
        raise RealSourceError("cannot lift %s at level 1" % type(source).__name__)
    if not level.is_successor():
        raise RealSourceError("level %s is a limit; use limit_decomposition" % level)
    down = level.predecessor()
    direction = "nonincreasing" if side == RIGHT else "nondecreasing"
    if isinstance(source, Sigma2Source):
        pred = source.pred
        def child(n, _pred=pred):
            return StagedChildSource(_pred, n)
        return SuccessorChildren(child, direction)
    if isinstance(source, ConstantSource):
        def child(n, _v=source.value, _lvl=down):
            return ConstantSource(_v, _lvl)
        return SuccessorChildren(child, direction)
    if isinstance(source, GeometricSource):
        value = source.value
        def child(n, _v=value, _lvl=down, _side=side):
            if _side == RIGHT:
                return ConstantSource(clamp01(_v + Fraction(1, 1 << n)), _lvl)
            return ConstantSource(clamp01(_v - Fraction(1, 1 << n)), _lvl)
        return SuccessorChildren(child, direction)
    raise RealSourceError("cannot lift %s at level %s" % (type(source).__name__, level))


def limit_decomposition(source, side):
    """Members of a limit-level source: prefix-combined values at levels h(n).

    Right: running minima of the member scheme, so values fall to the real;
    left: running maxima rising to it. Members keep the parent's side.
    """
    if not isinstance(source, LeveledSource):
        raise RealSourceError("limit decomposition needs a leveled source")
    if source.side != side:
        raise RealSourceError("source is %s-sided, recipe says %s"
                              % (source.side, side))
    def member(n, _src=source, _side=side):
        vals = [_src.member_value(k) for k in range(n + 1)]
        value = min(vals) if _side == RIGHT else max(vals)
        return ConstantSource(value, _src.h(n))
    return member
