"""Evaluation and verification.

Finitary formulas evaluate exactly (every truth value is dyadic). An
infinitary node under a truncation schedule yields a certified one-sided
enclosure: a truncated CInf is [0, min of member upper bounds], a truncated
CSup is [max of member lower bounds, 1]; the tail of the family is never
guessed, so two-sided intervals come only from sandwiching dual numerals.
Separately, truncation_value computes the exact value of the truncated
formula itself, which serves as the active estimate in convergence reports.

All evaluation is memoized on (formula code, space, environment, schedule
tail); family generation is pure, so member formulas with equal codes share
results.
"""

from dataclasses import dataclass
from fractions import Fraction

from .dyadics import (Dyadic, Enclosure, ZERO, ONE, dotminus, enclosure_apply,
                      half, neg, point)
from .formulas import (Atomic, CInf, CSup, DotMinus, ExplicitFamily,
                       GeneratedFamily, Half, InfQ, Neg, PI, Rank, SIGMA, SupQ,
                       classify, family_member, free_vars, get_generator)
from .reals import RIGHT


class EngineError(Exception):
    pass


class SandwichError(EngineError):
    """The paired enclosures do not overlap: the inputs disagree on the real."""


@dataclass(frozen=True)
class TruncationSchedule:
    """Family prefix lengths by nesting level; the last entry repeats for
    deeper nodes. default(N) gives inner nodes a 4x budget, since inner
    families control the accuracy of each member."""

    depths: tuple

    def __post_init__(self):
        if isinstance(self.depths, int):
            object.__setattr__(self, "depths", (self.depths,))
        else:
            object.__setattr__(self, "depths", tuple(self.depths))
        if not self.depths:
            raise ValueError("schedule needs at least one depth")
        for d in self.depths:
            if d < 1:
                raise ValueError("depths must be positive, got %d" % d)

    @classmethod
    def uniform(cls, n):
        return cls((n,))

    @classmethod
    def default(cls, n):
        return cls((n, 4 * n))


def _freeze_env(env):
    if not env:
        return ()
    if isinstance(env, dict):
        return tuple(sorted(env.items()))
    return tuple(sorted(env))


def _bind(env, var, p):
    out = [(v, q) for (v, q) in env if v != var]
    out.append((var, p))
    out.sort()
    return tuple(out)


def _lookup(env, var):
    for v, p in env:
        if v == var:
            return p
    raise EngineError("unbound variable x%d" % var)


@dataclass(frozen=True)
class ConvergenceRow:
    depth: int
    enclosure: Enclosure
    estimate: Dyadic
    distance: Fraction = None  # signed estimate - truth, when truth is known

    @property
    def width(self):
        return self.enclosure.width


@dataclass(frozen=True)
class VerificationReport:
    entries: tuple           # (space name, Enclosure)
    agreement: tuple         # (name, name, bool) for every pair
    agreement_ok: bool
    convergence: tuple       # ConvergenceRow ladder
    monotone_ok: bool
    tolerance_ok: bool
    classification_expected: Rank
    classification_actual: object  # Rank, or an error string
    classification_ok: bool

    @property
    def ok(self):
        return (self.agreement_ok and self.monotone_ok and self.tolerance_ok
                and self.classification_ok)


class Engine:
    def __init__(self):
        self._exact = {}
        self._encl = {}
        self._value = {}
        self._finitary = {}
        self._space_tokens = {}
        self._pinned_spaces = []
        self.atomic_evals = 0

    def _token(self, space):
        tok = self._space_tokens.get(id(space))
        if tok is None:
            tok = len(self._pinned_spaces)
            self._space_tokens[id(space)] = tok
            self._pinned_spaces.append(space)
        return tok

    def _is_finitary(self, phi):
        cached = self._finitary.get(phi.code)
        if cached is not None:
            return cached
        if isinstance(phi, Atomic):
            out = True
        elif isinstance(phi, (Neg, Half, InfQ, SupQ)):
            out = self._is_finitary(phi.body)
        elif isinstance(phi, DotMinus):
            out = self._is_finitary(phi.left) and self._is_finitary(phi.right)
        else:
            out = False
        self._finitary[phi.code] = out
        return out

    # ------------------------------------------------------ exact evaluation

    def eval_exact(self, phi, space, env=None):
        """The exact dyadic value of a finitary formula."""
        return self._exact_eval(phi, space, self._token(space), _freeze_env(env))

    def _exact_eval(self, phi, space, tok, env):
        key = (phi.code, tok, env)
        hit = self._exact.get(key)
        if hit is not None:
            return hit
        if isinstance(phi, Atomic):
            self.atomic_evals += 1
            val = space.d(_lookup(env, phi.left), _lookup(env, phi.right))
        elif isinstance(phi, Neg):
            val = neg(self._exact_eval(phi.body, space, tok, env))
        elif isinstance(phi, DotMinus):
            val = dotminus(self._exact_eval(phi.left, space, tok, env),
                           self._exact_eval(phi.right, space, tok, env))
        elif isinstance(phi, Half):
            val = half(self._exact_eval(phi.body, space, tok, env))
        elif isinstance(phi, InfQ):
            val = min(self._exact_eval(phi.body, space, tok, _bind(env, phi.var, p))
                      for p in range(space.size))
        elif isinstance(phi, SupQ):
            val = max(self._exact_eval(phi.body, space, tok, _bind(env, phi.var, p))
                      for p in range(space.size))
        else:
            raise EngineError("eval_exact needs a finitary formula, got %s"
                              % type(phi).__name__)
        self._exact[key] = val
        return val

    # -------------------------------------------------- enclosure evaluation

    def eval_enclosure(self, phi, space, schedule, env=None):
        """A certified enclosure of the formula's value under the schedule."""
        return self._encl_eval(phi, space, self._token(space), _freeze_env(env),
                               schedule.depths)

    def _encl_eval(self, phi, space, tok, env, tail):
        if self._is_finitary(phi):
            return point(self._exact_eval(phi, space, tok, env))
        key = (phi.code, tok, env, tail)
        hit = self._encl.get(key)
        if hit is not None:
            return hit
        if isinstance(phi, Neg):
            out = enclosure_apply("neg", [self._encl_eval(phi.body, space, tok,
                                                          env, tail)])
        elif isinstance(phi, Half):
            out = enclosure_apply("half", [self._encl_eval(phi.body, space, tok,
                                                           env, tail)])
        elif isinstance(phi, DotMinus):
            out = enclosure_apply("dotminus",
                                  [self._encl_eval(phi.left, space, tok, env, tail),
                                   self._encl_eval(phi.right, space, tok, env, tail)])
        elif isinstance(phi, InfQ):
            out = enclosure_apply("min",
                                  [self._encl_eval(phi.body, space, tok,
                                                   _bind(env, phi.var, p), tail)
                                   for p in range(space.size)])
        elif isinstance(phi, SupQ):
            out = enclosure_apply("max",
                                  [self._encl_eval(phi.body, space, tok,
                                                   _bind(env, phi.var, p), tail)
                                   for p in range(space.size)])
        elif isinstance(phi, CInf):
            out = self._family_encl(phi.family, space, tok, env, tail, True)
        elif isinstance(phi, CSup):
            out = self._family_encl(phi.family, space, tok, env, tail, False)
        else:
            raise EngineError("not a formula: %r" % (phi,))
        self._encl[key] = out
        return out

    def _prefix_count(self, family, depth):
        if family.known_size is not None:
            return min(depth, family.known_size)
        return depth

    def _family_encl(self, family, space, tok, env, tail, is_inf):
        depth = tail[0]
        inner = tail[1:] if len(tail) > 1 else tail
        count = self._prefix_count(family, depth)
        short = self._monotone_shortcut(family, space, tok, env, inner, count,
                                        is_inf)
        if short is not None:
            return short
        if is_inf:
            best = min(self._encl_eval(family_member(family, n), space, tok,
                                       env, inner).hi
                       for n in range(count))
            return Enclosure(ZERO, best)
        best = max(self._encl_eval(family_member(family, n), space, tok,
                                   env, inner).lo
                   for n in range(count))
        return Enclosure(best, ONE)

    def _monotone_shortcut(self, family, space, tok, env, inner, count, is_inf):
        """Skip the full prefix scan when the generator declares a value
        direction: the prefix extremum then sits at a known end. The claim
        is spot-checked on sampled members and must see degenerate member
        enclosures; anything else falls back to the full scan."""
        if not isinstance(family, GeneratedFamily) or count < 4:
            return None
        direction = get_generator(family.generator).monotone(family.params)
        if direction not in ("nonincreasing", "nondecreasing"):
            return None
        picks = sorted({0, count // 2, count - 1})
        encls = [self._encl_eval(family_member(family, n), space, tok, env, inner)
                 for n in picks]
        if not all(e.is_point() for e in encls):
            return None
        vals = [e.lo for e in encls]
        if direction == "nonincreasing":
            ordered = all(a >= b for a, b in zip(vals, vals[1:]))
            low, high = vals[-1], vals[0]
        else:
            ordered = all(a <= b for a, b in zip(vals, vals[1:]))
            low, high = vals[0], vals[-1]
        if not ordered:
            return None
        if is_inf:
            return Enclosure(ZERO, low)
        return Enclosure(high, ONE)

    # --------------------------------------------------- truncation diagonal

    def truncation_value(self, phi, space, schedule, env=None):
        """Exact value of the schedule-truncated formula (the active
        estimate; not a certified bound on the untruncated value)."""
        return self._value_eval(phi, space, self._token(space), _freeze_env(env),
                                schedule.depths)

    def _value_eval(self, phi, space, tok, env, tail):
        if self._is_finitary(phi):
            return self._exact_eval(phi, space, tok, env)
        key = (phi.code, tok, env, tail)
        hit = self._value.get(key)
        if hit is not None:
            return hit
        if isinstance(phi, Neg):
            out = neg(self._value_eval(phi.body, space, tok, env, tail))
        elif isinstance(phi, Half):
            out = half(self._value_eval(phi.body, space, tok, env, tail))
        elif isinstance(phi, DotMinus):
            out = dotminus(self._value_eval(phi.left, space, tok, env, tail),
                           self._value_eval(phi.right, space, tok, env, tail))
        elif isinstance(phi, InfQ):
            out = min(self._value_eval(phi.body, space, tok,
                                       _bind(env, phi.var, p), tail)
                      for p in range(space.size))
        elif isinstance(phi, SupQ):
            out = max(self._value_eval(phi.body, space, tok,
                                       _bind(env, phi.var, p), tail)
                      for p in range(space.size))
        elif isinstance(phi, (CInf, CSup)):
            depth = tail[0]
            inner = tail[1:] if len(tail) > 1 else tail
            count = self._prefix_count(phi.family, depth)
            vals = (self._value_eval(family_member(phi.family, n), space, tok,
                                     env, inner)
                    for n in range(count))
            out = min(vals) if isinstance(phi, CInf) else max(vals)
        else:
            raise EngineError("not a formula: %r" % (phi,))
        self._value[key] = out
        return out

    # ------------------------------------------------------------- harness

    def sandwich(self, left_numeral, right_numeral, space, schedule):
        """Two-sided enclosure from a dual pair of numerals of one real."""
        low = self.eval_enclosure(left_numeral, space, schedule)
        high = self.eval_enclosure(right_numeral, space, schedule)
        if low.lo > high.hi:
            raise SandwichError(
                "lower bound %s exceeds upper bound %s: the two formulas are "
                "not numerals of one real" % (low.lo, high.hi))
        return Enclosure(low.lo, high.hi)

    def independence_check(self, phi, spaces, schedule):
        """Enclosures across spaces with pairwise agreement flags."""
        entries = tuple((sp.name, self.eval_enclosure(phi, sp, schedule))
                        for sp in spaces)
        agreement = []
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                agreement.append((entries[i][0], entries[j][0],
                                  entries[i][1] == entries[j][1]))
        agreement = tuple(agreement)
        ok = all(flag for _, _, flag in agreement)
        return VerificationReport(entries, agreement, ok, (), True, True,
                                  None, None, True)

    def classification_check(self, recipe, phi):
        expected = Rank(SIGMA if recipe.side == RIGHT else PI, recipe.level)
        return classify(phi) == expected

    def convergence_report(self, phi, space, depths, truth=None):
        """Enclosure ladder over depths; the sound endpoint must be monotone.

        For a Sigma-rooted sentence the upper endpoints are asserted
        nonincreasing, for Pi-rooted the lower endpoints nondecreasing.
        truth, when given as a Fraction, adds signed estimate distances.
        """
        rank = classify(phi)
        rows = []
        for n in depths:
            sched = TruncationSchedule.default(n)
            rows.append(ConvergenceRow(n, self.eval_enclosure(phi, space, sched),
                                       self.truncation_value(phi, space, sched)))
        for prev, cur in zip(rows, rows[1:]):
            if rank.flavor == SIGMA and cur.enclosure.hi > prev.enclosure.hi:
                raise EngineError(
                    "upper bound rose from %s to %s between depths %d and %d"
                    % (prev.enclosure.hi, cur.enclosure.hi, prev.depth, cur.depth))
            if rank.flavor == PI and cur.enclosure.lo < prev.enclosure.lo:
                raise EngineError(
                    "lower bound fell from %s to %s between depths %d and %d"
                    % (prev.enclosure.lo, cur.enclosure.lo, prev.depth, cur.depth))
        if truth is not None:
            rows = [ConvergenceRow(r.depth, r.enclosure, r.estimate,
                                   r.estimate.as_fraction() - truth)
                    for r in rows]
        return tuple(rows)

    def verify_recipe(self, recipe, spaces, depth, tol_exp):
        """The full harness: independence, convergence, classification."""
        phi = recipe.build()
        sched = TruncationSchedule.default(depth)
        indep = self.independence_check(phi, spaces, sched)
        ladder = sorted({max(1, depth // 16), max(1, depth // 4), depth})
        monotone_ok = True
        try:
            rows = self.convergence_report(phi, spaces[0], ladder)
        except EngineError:
            monotone_ok = False
            rows = tuple(
                ConvergenceRow(n, self.eval_enclosure(
                    phi, spaces[0], TruncationSchedule.default(n)),
                    self.truncation_value(phi, spaces[0],
                                          TruncationSchedule.default(n)))
                for n in ladder)
        tol = Fraction(1, 1 << tol_exp)
        est = rows[-1].estimate.as_fraction()
        tolerance_ok = (recipe.source.cmp_to(est - tol) >= 0
                        and recipe.source.cmp_to(est + tol) <= 0)
        expected = Rank(SIGMA if recipe.side == RIGHT else PI, recipe.level)
        try:
            actual = classify(phi)
            classification_ok = actual == expected and not free_vars(phi)
        except Exception as err:  # classification errors are a verdict here
            actual = "error: %s" % err
            classification_ok = False
        return VerificationReport(indep.entries, indep.agreement,
                                  indep.agreement_ok, rows, monotone_ok,
                                  tolerance_ok, expected, actual,
                                  classification_ok)
