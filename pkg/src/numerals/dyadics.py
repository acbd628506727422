"""Exact dyadic rationals and closed dyadic intervals inside [0, 1].

A dyadic is num / 2**exp in lowest terms (exp == 0 or num odd). All the
connective arithmetic of the logic stays inside the dyadics: negation,
truncated subtraction, halving, min and max never leave the class, so
evaluation over a finite structure with dyadic distances is exact.
"""

from dataclasses import dataclass
from fractions import Fraction


def _canonical(num, exp):
    if exp < 0:
        num <<= -exp
        exp = 0
    while exp > 0 and num % 2 == 0:
        num //= 2
        exp -= 1
    return num, exp


@dataclass(frozen=True, order=False)
class Dyadic:
    """num / 2**exp, canonicalized so exp == 0 or num is odd."""

    num: int
    exp: int = 0

    def __post_init__(self):
        num, exp = _canonical(self.num, self.exp)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    # comparisons via cross-shifting, no Fraction round trip

    def _cmp(self, other):
        a = self.num << max(0, other.exp - self.exp)
        b = other.num << max(0, self.exp - other.exp)
        return (a > b) - (a < b)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __add__(self, other):
        e = max(self.exp, other.exp)
        return Dyadic((self.num << (e - self.exp)) + (other.num << (e - other.exp)), e)

    def __sub__(self, other):
        e = max(self.exp, other.exp)
        return Dyadic((self.num << (e - self.exp)) - (other.num << (e - other.exp)), e)

    def __mul__(self, other):
        return Dyadic(self.num * other.num, self.exp + other.exp)

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def as_fraction(self):
        return Fraction(self.num, 1 << self.exp)

    def __float__(self):
        return self.num / (1 << self.exp)

    def __str__(self):
        if self.exp == 0:
            return str(self.num)
        return "%d/%d" % (self.num, 1 << self.exp)

    def __repr__(self):
        return "Dyadic(%s)" % self


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)


def from_fraction(f):
    """Fraction -> Dyadic, rejecting non-dyadic denominators."""
    d = f.denominator
    exp = d.bit_length() - 1
    if (1 << exp) != d:
        raise ValueError("not a dyadic rational: %s" % f)
    return Dyadic(f.numerator, exp)


def is_dyadic_fraction(f):
    d = f.denominator
    return (1 << (d.bit_length() - 1)) == d


def parse_dyadic(text):
    """Accept "3/8", "3/2^3", "1", "0.75" style inputs."""
    text = text.strip()
    try:
        if "^" in text:
            numpart, exppart = text.split("/", 1)
            base, exp = exppart.split("^", 1)
            if base.strip() != "2":
                raise ValueError
            return Dyadic(int(numpart), int(exp))
        f = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError("cannot parse dyadic %r" % text) from None
    return from_fraction(f)


def in_unit(d):
    return ZERO <= d <= ONE


def require_unit(d, what="value"):
    if not in_unit(d):
        raise ValueError("%s out of [0,1]: %s" % (what, d))
    return d


# the three pointwise connectives on truth values

def neg(d):
    return ONE - d


def dotminus(a, b):
    c = a - b
    return c if c > ZERO else ZERO


def half(d):
    return d * HALF


@dataclass(frozen=True)
class Enclosure:
    """A closed dyadic subinterval [lo, hi] of [0, 1]."""

    lo: Dyadic
    hi: Dyadic

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty enclosure [%s, %s]" % (self.lo, self.hi))
        require_unit(self.lo, "enclosure lo")
        require_unit(self.hi, "enclosure hi")

    @property
    def width(self):
        return self.hi - self.lo

    def is_point(self):
        return self.lo == self.hi

    def contains(self, d):
        return self.lo <= d <= self.hi

    def __str__(self):
        return "[%s, %s]" % (self.lo, self.hi)


def point(d):
    return Enclosure(d, d)


FULL = Enclosure(ZERO, ONE)


class ArityError(Exception):
    pass


def enclosure_apply(conn, args):
    """Apply a connective to enclosures, monotonicity-aware.

    neg is antitone so the endpoints swap; dotminus is antitone in its
    second argument; half, min and max are monotone in every argument.
    """
    if conn == "neg":
        if len(args) != 1:
            raise ArityError("neg takes one enclosure")
        (a,) = args
        return Enclosure(neg(a.hi), neg(a.lo))
    if conn == "half":
        if len(args) != 1:
            raise ArityError("half takes one enclosure")
        (a,) = args
        return Enclosure(half(a.lo), half(a.hi))
    if conn == "dotminus":
        if len(args) != 2:
            raise ArityError("dotminus takes two enclosures")
        a, b = args
        return Enclosure(dotminus(a.lo, b.hi), dotminus(a.hi, b.lo))
    if conn == "min":
        if not args:
            raise ArityError("min needs at least one enclosure")
        return Enclosure(min(a.lo for a in args), min(a.hi for a in args))
    if conn == "max":
        if not args:
            raise ArityError("max needs at least one enclosure")
        return Enclosure(max(a.lo for a in args), max(a.hi for a in args))
    raise ValueError("unknown connective %r" % conn)
