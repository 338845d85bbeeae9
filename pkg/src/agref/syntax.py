"""Syntax trees for the input language: terms, literals, rules.

Terms come in two layers.  Precomputed terms (numerals, symbolic constants,
negated constants, #inf/#sup, and function/tuple terms built from
precomputed parts only) are values: the universe a program is materialized
over is a finite set of them, and they carry a total order.  General terms
add variables and the arithmetic/interval operations; once ground, those
denote *sets* of precomputed terms (see termeval).
"""

from dataclasses import dataclass


class _Extreme:
  """#inf / #sup, the least and greatest precomputed terms."""

  __slots__ = ("text",)

  def __init__(self, text):
    self.text = text

  def __repr__(self):
    return self.text


INF = _Extreme("#inf")
SUP = _Extreme("#sup")


@dataclass(frozen=True, slots=True)
class Numeral:
  value: int


@dataclass(frozen=True, slots=True)
class SymbolicConstant:
  name: str


@dataclass(frozen=True, slots=True)
class Variable:
  name: str


@dataclass(frozen=True, slots=True)
class FunctionTerm:
  """f(t1,...,tn), or a negated constant/function -f(t1,...,tn).

  Zero-argument positive function terms do not exist; make_function
  canonicalizes them to SymbolicConstant.  Zero-argument negated ones are
  the negated constants.
  """

  name: str
  args: tuple
  negated: bool = False


@dataclass(frozen=True, slots=True)
class BinOp:
  """Arithmetic or interval operation; op is one of + - * / .."""

  op: str
  left: object
  right: object


@dataclass(frozen=True, slots=True)
class TupleTerm:
  elements: tuple


def make_function(name, args=(), negated=False):
  args = tuple(args)
  if not args and not negated:
    return SymbolicConstant(name)
  return FunctionTerm(name, args, negated)


RELATIONS = ("<", "<=", ">", ">=", "=", "!=")
AGGREGATE_NAMES = ("count", "sum", "sum+", "min", "max")
ARITH_OPS = ("+", "-", "*", "/", "..")

# Ranks for the total order on precomputed terms.  Only three facts are
# imposed from outside: #inf is least, #sup is greatest, numerals are
# ordered by value.  The rest (constants before negated constants before
# compound functions before tuples, each lexicographically) is this
# implementation's documented choice.
_RANK_INF = 0
_RANK_NUMERAL = 1
_RANK_CONSTANT = 2
_RANK_NEGCONST = 3
_RANK_FUNCTION = 4
_RANK_TUPLE = 5
_RANK_SUP = 6
_RANK_VARIABLE = 7
_RANK_BINOP = 8


def term_key(t):
  """Sort key giving the total order on precomputed terms.

  Also defined on variables and operations (ranked above #sup) so that any
  list of terms can be sorted deterministically; order among those carries
  no meaning.
  """
  if t is INF:
    return (_RANK_INF,)
  if t is SUP:
    return (_RANK_SUP,)
  if isinstance(t, Numeral):
    return (_RANK_NUMERAL, t.value)
  if isinstance(t, SymbolicConstant):
    return (_RANK_CONSTANT, t.name)
  if isinstance(t, FunctionTerm):
    if not t.args:
      return (_RANK_NEGCONST, t.name)
    return (_RANK_FUNCTION, t.name, t.negated, len(t.args),
            tuple(term_key(a) for a in t.args))
  if isinstance(t, TupleTerm):
    return (_RANK_TUPLE, len(t.elements),
            tuple(term_key(e) for e in t.elements))
  if isinstance(t, Variable):
    return (_RANK_VARIABLE, t.name)
  if isinstance(t, BinOp):
    return (_RANK_BINOP, t.op, term_key(t.left), term_key(t.right))
  raise TypeError(f"not a term: {t!r}")


def tuple_key(terms):
  return tuple(term_key(t) for t in terms)


def is_precomputed(t):
  if t is INF or t is SUP:
    return True
  if isinstance(t, (Numeral, SymbolicConstant)):
    return True
  if isinstance(t, FunctionTerm):
    return all(is_precomputed(a) for a in t.args)
  if isinstance(t, TupleTerm):
    return all(is_precomputed(e) for e in t.elements)
  return False


# ---------------------------------------------------------------------------
# Atoms, literals, rules.


@dataclass(frozen=True, slots=True)
class Pool:
  """Alternatives of term tuples; the argument list of an atom is one pool.

  p(1,2;3,4) has alternatives ((1,2),(3,4)); a plain argument list is the
  one-alternative pool.
  """

  alternatives: tuple  # of tuples of terms, at least one


@dataclass(frozen=True, slots=True)
class Atom:
  name: str
  negated: bool
  pool: Pool


@dataclass(frozen=True, slots=True)
class SymbolicLiteral:
  """depth counts leading nots: 0 = A, 1 = not A, 2 = not not A."""

  depth: int
  atom: Atom


@dataclass(frozen=True, slots=True)
class ArithmeticLiteral:
  left: object
  rel: str
  right: object


class _Falsum:
  __slots__ = ()

  def __repr__(self):
    return "#false"


FALSUM = _Falsum()


@dataclass(frozen=True, slots=True)
class ConditionalLiteral:
  """head : condition.  head is a symbolic/arithmetic literal or FALSUM;
  a bare literal in a rule body is the empty-condition case."""

  head: object
  condition: tuple


@dataclass(frozen=True, slots=True)
class AggregateElement:
  terms: tuple      # tuple of terms
  condition: tuple  # of symbolic/arithmetic literals


@dataclass(frozen=True, slots=True)
class AggregateAtom:
  """name{elements} with an optional bound on each side.

  left is (term, rel), right is (rel, term), at least one present.
  """

  name: str
  elements: tuple
  left: object = None
  right: object = None


@dataclass(frozen=True, slots=True)
class AggregateLiteral:
  depth: int
  atom: AggregateAtom


@dataclass(frozen=True, slots=True)
class Choice:
  """{A}: choose any subset of the atom's instances."""

  atom: Atom


# Sugared forms, removed by desugar().

@dataclass(frozen=True, slots=True)
class LparseElement:
  literal: SymbolicLiteral
  condition: tuple


@dataclass(frozen=True, slots=True)
class LparseAggregate:
  """s1 { L1 : Ls1 ; ... } s2 with either bound optional."""

  lower: object
  elements: tuple
  upper: object


@dataclass(frozen=True, slots=True)
class LparseLiteral:
  """Body occurrence of an lparse aggregate, possibly under not / not not."""

  depth: int
  aggregate: LparseAggregate


@dataclass(frozen=True, slots=True)
class HeadAggregateElement:
  terms: tuple
  literal: SymbolicLiteral
  condition: tuple


@dataclass(frozen=True, slots=True)
class HeadAggregate:
  name: str
  elements: tuple
  left: object = None
  right: object = None


# Rules.  After desugaring only Rule and ChoiceRule remain.

@dataclass(frozen=True, slots=True)
class Rule:
  head: tuple  # of symbolic/arithmetic literals; empty = constraint
  body: tuple  # of ConditionalLiteral / AggregateLiteral / LparseLiteral


@dataclass(frozen=True, slots=True)
class ChoiceRule:
  choice: Choice
  body: tuple


@dataclass(frozen=True, slots=True)
class HeadAggregateRule:
  aggregate: HeadAggregate
  body: tuple


@dataclass(frozen=True, slots=True)
class LparseHeadRule:
  aggregate: LparseAggregate
  body: tuple


def atom_as_term(name, negated, args):
  """The term image of an atom, used in term representations of literals."""
  return make_function(name, args, negated)


# ---------------------------------------------------------------------------
# Generic traversal: collecting variables, substituting, predicates.


def _children(obj):
  """Immediate sub-objects that may contain terms."""
  if isinstance(obj, (FunctionTerm,)):
    return obj.args
  if isinstance(obj, BinOp):
    return (obj.left, obj.right)
  if isinstance(obj, TupleTerm):
    return obj.elements
  if isinstance(obj, Pool):
    return tuple(t for alt in obj.alternatives for t in alt)
  if isinstance(obj, Atom):
    return (obj.pool,)
  if isinstance(obj, SymbolicLiteral):
    return (obj.atom,)
  if isinstance(obj, ArithmeticLiteral):
    return (obj.left, obj.right)
  if isinstance(obj, ConditionalLiteral):
    head = () if obj.head is FALSUM else (obj.head,)
    return head + obj.condition
  if isinstance(obj, AggregateElement):
    return obj.terms + obj.condition
  if isinstance(obj, AggregateAtom):
    parts = list(obj.elements)
    if obj.left is not None:
      parts.append(obj.left[0])
    if obj.right is not None:
      parts.append(obj.right[1])
    return tuple(parts)
  if isinstance(obj, AggregateLiteral):
    return (obj.atom,)
  if isinstance(obj, Choice):
    return (obj.atom,)
  if isinstance(obj, LparseElement):
    return (obj.literal,) + obj.condition
  if isinstance(obj, LparseAggregate):
    parts = list(obj.elements)
    if obj.lower is not None:
      parts.append(obj.lower)
    if obj.upper is not None:
      parts.append(obj.upper)
    return tuple(parts)
  if isinstance(obj, LparseLiteral):
    return (obj.aggregate,)
  if isinstance(obj, HeadAggregateElement):
    return obj.terms + (obj.literal,) + obj.condition
  if isinstance(obj, HeadAggregate):
    parts = list(obj.elements)
    if obj.left is not None:
      parts.append(obj.left[0])
    if obj.right is not None:
      parts.append(obj.right[1])
    return tuple(parts)
  if isinstance(obj, Rule):
    return obj.head + obj.body
  if isinstance(obj, ChoiceRule):
    return (obj.choice,) + obj.body
  if isinstance(obj, (HeadAggregateRule, LparseHeadRule)):
    return (obj.aggregate,) + obj.body
  return ()


def variables_in(obj):
  """Set of variable names occurring anywhere in obj."""
  if isinstance(obj, Variable):
    return {obj.name}
  out = set()
  for c in _children(obj):
    out |= variables_in(c)
  return out


def is_ground(obj):
  if isinstance(obj, Variable):
    return False
  return all(is_ground(c) for c in _children(obj))


def is_interval_free(obj):
  if isinstance(obj, BinOp) and obj.op == "..":
    return False
  return all(is_interval_free(c) for c in _children(obj))


def substitute(obj, sub):
  """Replace variables named in sub (name -> term) throughout obj."""
  if obj is INF or obj is SUP or obj is FALSUM:
    return obj
  if isinstance(obj, Variable):
    return sub.get(obj.name, obj)
  if isinstance(obj, (Numeral, SymbolicConstant)):
    return obj
  if isinstance(obj, FunctionTerm):
    return FunctionTerm(obj.name, tuple(substitute(a, sub) for a in obj.args),
                        obj.negated)
  if isinstance(obj, BinOp):
    return BinOp(obj.op, substitute(obj.left, sub), substitute(obj.right, sub))
  if isinstance(obj, TupleTerm):
    return TupleTerm(tuple(substitute(e, sub) for e in obj.elements))
  if isinstance(obj, Pool):
    return Pool(tuple(tuple(substitute(t, sub) for t in alt)
                      for alt in obj.alternatives))
  if isinstance(obj, Atom):
    return Atom(obj.name, obj.negated, substitute(obj.pool, sub))
  if isinstance(obj, SymbolicLiteral):
    return SymbolicLiteral(obj.depth, substitute(obj.atom, sub))
  if isinstance(obj, ArithmeticLiteral):
    return ArithmeticLiteral(substitute(obj.left, sub), obj.rel,
                             substitute(obj.right, sub))
  if isinstance(obj, ConditionalLiteral):
    return ConditionalLiteral(substitute(obj.head, sub),
                              tuple(substitute(l, sub) for l in obj.condition))
  if isinstance(obj, AggregateElement):
    return AggregateElement(tuple(substitute(t, sub) for t in obj.terms),
                            tuple(substitute(l, sub) for l in obj.condition))
  if isinstance(obj, AggregateAtom):
    left = None if obj.left is None else (substitute(obj.left[0], sub),
                                          obj.left[1])
    right = None if obj.right is None else (obj.right[0],
                                            substitute(obj.right[1], sub))
    return AggregateAtom(obj.name,
                         tuple(substitute(e, sub) for e in obj.elements),
                         left, right)
  if isinstance(obj, AggregateLiteral):
    return AggregateLiteral(obj.depth, substitute(obj.atom, sub))
  if isinstance(obj, Choice):
    return Choice(substitute(obj.atom, sub))
  if isinstance(obj, LparseElement):
    return LparseElement(substitute(obj.literal, sub),
                         tuple(substitute(l, sub) for l in obj.condition))
  if isinstance(obj, LparseAggregate):
    lower = None if obj.lower is None else substitute(obj.lower, sub)
    upper = None if obj.upper is None else substitute(obj.upper, sub)
    return LparseAggregate(lower,
                           tuple(substitute(e, sub) for e in obj.elements),
                           upper)
  if isinstance(obj, LparseLiteral):
    return LparseLiteral(obj.depth, substitute(obj.aggregate, sub))
  if isinstance(obj, HeadAggregateElement):
    return HeadAggregateElement(tuple(substitute(t, sub) for t in obj.terms),
                                substitute(obj.literal, sub),
                                tuple(substitute(l, sub)
                                      for l in obj.condition))
  if isinstance(obj, HeadAggregate):
    left = None if obj.left is None else (substitute(obj.left[0], sub),
                                          obj.left[1])
    right = None if obj.right is None else (obj.right[0],
                                            substitute(obj.right[1], sub))
    return HeadAggregate(obj.name,
                         tuple(substitute(e, sub) for e in obj.elements),
                         left, right)
  if isinstance(obj, Rule):
    return Rule(tuple(substitute(h, sub) for h in obj.head),
                tuple(substitute(b, sub) for b in obj.body))
  if isinstance(obj, ChoiceRule):
    return ChoiceRule(substitute(obj.choice, sub),
                      tuple(substitute(b, sub) for b in obj.body))
  if isinstance(obj, HeadAggregateRule):
    return HeadAggregateRule(substitute(obj.aggregate, sub),
                             tuple(substitute(b, sub) for b in obj.body))
  if isinstance(obj, LparseHeadRule):
    return LparseHeadRule(substitute(obj.aggregate, sub),
                          tuple(substitute(b, sub) for b in obj.body))
  raise TypeError(f"cannot substitute into {obj!r}")
