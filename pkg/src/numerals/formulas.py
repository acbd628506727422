"""Formula syntax for [0,1]-valued logic over the language with one symbol d.

The finitary layer is Atomic / Neg / DotMinus / Half / InfQ / SupQ. The two
infinitary connectives CInf and CSup take a countable family of formulas,
given either explicitly (a finite tuple, for tests and truncations) or as a
named generator plus a parameter string. Generators live in a registry so
that a formula code is just text: `(gen dyadic-upper-cut "1/3")` names the
family without materializing it.

Grammar (whitespace-insensitive, prefix form):

    formula := (dist VAR VAR) | (neg formula) | (dotminus formula formula)
             | (half formula) | (inf VAR formula) | (sup VAR formula)
             | (cinf family) | (csup family)
    family  := (list formula+) | (gen NAME "param-text")
    VAR     := x<digits>
"""

from dataclasses import dataclass
from functools import cached_property

from . import sexpr
from .ordinals import OrdinalCNF, ZERO_ORD, from_int

SIGMA = "Sigma"
PI = "Pi"
FINITARY = "Finitary"


class FormulaError(Exception):
    pass


class FormulaSyntaxError(FormulaError):
    def __init__(self, message, position):
        super().__init__("%s (at offset %d)" % (message, position))
        self.position = position


class UnknownGeneratorError(FormulaError):
    pass


class ExhaustedFamilyError(FormulaError):
    """Index past the end of an explicit family."""


class ClassificationError(FormulaError):
    pass


# ---------------------------------------------------------------- AST nodes


@dataclass(frozen=True)
class Atomic:
    left: int
    right: int

    @cached_property
    def code(self):
        return "(dist x%d x%d)" % (self.left, self.right)

    def __str__(self):
        return self.code


@dataclass(frozen=True)
class Neg:
    body: "Formula"

    @cached_property
    def code(self):
        return "(neg %s)" % self.body.code

    def __str__(self):
        return self.code


@dataclass(frozen=True)
class DotMinus:
    left: "Formula"
    right: "Formula"

    @cached_property
    def code(self):
        return "(dotminus %s %s)" % (self.left.code, self.right.code)

    def __str__(self):
        return self.code


@dataclass(frozen=True)
class Half:
    body: "Formula"

    @cached_property
    def code(self):
        return "(half %s)" % self.body.code

    def __str__(self):
        return self.code


@dataclass(frozen=True)
class InfQ:
    var: int
    body: "Formula"

    @cached_property
    def code(self):
        return "(inf x%d %s)" % (self.var, self.body.code)

    def __str__(self):
        return self.code


@dataclass(frozen=True)
class SupQ:
    var: int
    body: "Formula"

    @cached_property
    def code(self):
        return "(sup x%d %s)" % (self.var, self.body.code)

    def __str__(self):
        return self.code


@dataclass(frozen=True)
class ExplicitFamily:
    members: tuple

    def __post_init__(self):
        if not self.members:
            raise ValueError("explicit family needs at least one member")

    @cached_property
    def code(self):
        return "(list %s)" % " ".join(m.code for m in self.members)

    def member(self, n):
        if 0 <= n < len(self.members):
            return self.members[n]
        raise ExhaustedFamilyError(
            "index %d out of range for family of %d" % (n, len(self.members)))

    @property
    def known_size(self):
        return len(self.members)


@dataclass(frozen=True)
class GeneratedFamily:
    generator: str
    params: str

    @cached_property
    def code(self):
        return "(gen %s %s)" % (self.generator, sexpr.quote(self.params))

    def member(self, n):
        if n < 0:
            raise ValueError("negative family index")
        return get_generator(self.generator).member(self.params, n)

    known_size = None


@dataclass(frozen=True)
class CInf:
    family: "FamilySpec"

    @cached_property
    def code(self):
        return "(cinf %s)" % self.family.code

    def __str__(self):
        return self.code


@dataclass(frozen=True)
class CSup:
    family: "FamilySpec"

    @cached_property
    def code(self):
        return "(csup %s)" % self.family.code

    def __str__(self):
        return self.code


Formula = Atomic | Neg | DotMinus | Half | InfQ | SupQ | CInf | CSup
FamilySpec = ExplicitFamily | GeneratedFamily


def family_member(family, n):
    """The n-th member formula; pure in (family, n)."""
    return family.member(n)


def serialize(phi):
    return phi.code


# ---------------------------------------------------------- generator registry
#
# A generator is any object with three methods, each pure in its arguments:
#   member(params, n) -> Formula         the n-th family member
#   level_bound(params) -> OrdinalCNF    level of the wrapping infinitary node
#   monotone(params) -> str | None       "nonincreasing" / "nondecreasing"
#                                        declared value direction of members
# The level bound is trusted but spot-checked on a short prefix by classify.

_GENERATORS = {}


def register_generator(name, gen):
    _GENERATORS[name] = gen


def get_generator(name):
    try:
        return _GENERATORS[name]
    except KeyError:
        raise UnknownGeneratorError("unknown generator %r" % name) from None


def known_generators():
    return sorted(_GENERATORS)


# ------------------------------------------------------------------- parsing


def _var_index(tok):
    if isinstance(tok, sexpr.Atom) and len(tok) > 1 and tok[0] == "x" and tok[1:].isdigit():
        return int(tok[1:])
    pos = getattr(tok, "position", 0)
    raise FormulaSyntaxError("expected a variable like x0, got %r" % str(tok), pos)


def _family_from(node):
    if not isinstance(node, sexpr.Group) or not node:
        pos = getattr(node, "position", 0)
        raise FormulaSyntaxError("expected (list ...) or (gen ...)", pos)
    head = node[0]
    if head == "list":
        if len(node) < 2:
            raise FormulaSyntaxError("(list ...) needs at least one member", node.position)
        return ExplicitFamily(tuple(_formula_from(item) for item in node[1:]))
    if head == "gen":
        if len(node) != 3 or not isinstance(node[1], sexpr.Atom) \
                or not isinstance(node[2], sexpr.QuotedString):
            raise FormulaSyntaxError('(gen ...) takes a name and a "param" string',
                                     node.position)
        get_generator(str(node[1]))  # unknown generator fails at parse time
        return GeneratedFamily(str(node[1]), str(node[2]))
    raise FormulaSyntaxError("unknown family form %r" % str(head), node.position)


def _formula_from(node):
    if not isinstance(node, sexpr.Group) or not node:
        pos = getattr(node, "position", 0)
        raise FormulaSyntaxError("expected a parenthesized formula", pos)
    head = node[0]
    if not isinstance(head, sexpr.Atom):
        raise FormulaSyntaxError("formula head must be a symbol", node.position)
    args = node[1:]
    if head == "dist":
        if len(args) != 2:
            raise FormulaSyntaxError("dist takes two variables", node.position)
        return Atomic(_var_index(args[0]), _var_index(args[1]))
    if head == "neg":
        if len(args) != 1:
            raise FormulaSyntaxError("neg takes one formula", node.position)
        return Neg(_formula_from(args[0]))
    if head == "half":
        if len(args) != 1:
            raise FormulaSyntaxError("half takes one formula", node.position)
        return Half(_formula_from(args[0]))
    if head == "dotminus":
        if len(args) != 2:
            raise FormulaSyntaxError("dotminus takes two formulas", node.position)
        return DotMinus(_formula_from(args[0]), _formula_from(args[1]))
    if head in ("inf", "sup"):
        if len(args) != 2:
            raise FormulaSyntaxError("%s takes a variable and a body" % head,
                                     node.position)
        cls = InfQ if head == "inf" else SupQ
        return cls(_var_index(args[0]), _formula_from(args[1]))
    if head in ("cinf", "csup"):
        if len(args) != 1:
            raise FormulaSyntaxError("%s takes one family" % head, node.position)
        cls = CInf if head == "cinf" else CSup
        return cls(_family_from(args[0]))
    raise FormulaSyntaxError("unknown formula head %r" % str(head), node.position)


def parse(code):
    try:
        node = sexpr.read(code)
    except sexpr.SexprError as err:
        raise FormulaSyntaxError(str(err).rsplit(" (at", 1)[0], err.position) from None
    return _formula_from(node)


# -------------------------------------------------------------- free variables


def free_vars(phi):
    if isinstance(phi, Atomic):
        return {phi.left, phi.right}
    if isinstance(phi, (Neg, Half)):
        return free_vars(phi.body)
    if isinstance(phi, DotMinus):
        return free_vars(phi.left) | free_vars(phi.right)
    if isinstance(phi, (InfQ, SupQ)):
        return free_vars(phi.body) - {phi.var}
    fam = phi.family
    if isinstance(fam, ExplicitFamily):
        out = set()
        for m in fam.members:
            out |= free_vars(m)
        return out
    # members of a generated family share their free variables
    return free_vars(family_member(fam, 0))


# ------------------------------------------------------------- classification


@dataclass(frozen=True)
class Rank:
    flavor: str
    level: OrdinalCNF

    def __post_init__(self):
        if self.flavor not in (SIGMA, PI, FINITARY):
            raise ValueError("bad flavor %r" % self.flavor)
        if self.flavor == FINITARY and not self.level.is_zero():
            raise ValueError("finitary rank must sit at level 0")

    def __str__(self):
        if self.flavor == FINITARY:
            return FINITARY
        return "%s %s" % (self.flavor, self.level)


def pi_level(rank):
    """Least b such that the rank counts as Pi_b (the hierarchy is cumulative)."""
    if rank.flavor == FINITARY:
        return ZERO_ORD
    if rank.flavor == PI:
        return rank.level
    return rank.level + from_int(1)


def sigma_level(rank):
    if rank.flavor == FINITARY:
        return ZERO_ORD
    if rank.flavor == SIGMA:
        return rank.level
    return rank.level + from_int(1)


_SPOT_CHECK = 3


def _classify_family(family, flavor, member_level):
    if isinstance(family, ExplicitFamily):
        top = ZERO_ORD
        for m in family.members:
            lvl = member_level(classify(m))
            if lvl > top:
                top = lvl
        return Rank(flavor, top + from_int(1))
    gen = get_generator(family.generator)
    alpha = gen.level_bound(family.params)
    for n in range(_SPOT_CHECK):
        lvl = member_level(classify(family.member(n)))
        if not lvl < alpha:
            raise ClassificationError(
                "family %s member %d has level %s, not below declared bound %s"
                % (family.generator, n, lvl, alpha))
    return Rank(flavor, alpha)


def classify(phi):
    """Least rank of a formula in the Sigma/Pi hierarchy.

    CInf forms Sigma levels and CSup forms Pi levels; negation swaps the
    flavor; half and the point quantifiers are rank-neutral. DotMinus is
    only supported over finitary operands.
    """
    if isinstance(phi, Atomic):
        return Rank(FINITARY, ZERO_ORD)
    if isinstance(phi, Neg):
        r = classify(phi.body)
        if r.flavor == FINITARY:
            return r
        return Rank(PI if r.flavor == SIGMA else SIGMA, r.level)
    if isinstance(phi, (Half, InfQ, SupQ)):
        return classify(phi.body)
    if isinstance(phi, DotMinus):
        a = classify(phi.left)
        b = classify(phi.right)
        if a.flavor != FINITARY or b.flavor != FINITARY:
            raise ClassificationError("dotminus over infinitary operands")
        return Rank(FINITARY, ZERO_ORD)
    if isinstance(phi, CInf):
        return _classify_family(phi.family, SIGMA, pi_level)
    if isinstance(phi, CSup):
        return _classify_family(phi.family, PI, sigma_level)
    raise TypeError("not a formula: %r" % (phi,))
