"""Expansion of the three abbreviations into core rules.

Core rules are Rule and ChoiceRule whose bodies hold only conditional and
aggregate literals.  Removed here:

  * brace expressions in bodies, s1 { L : Ls ; ... } s2, which stand for
    count aggregates over the literals' term representations;
  * brace expressions in heads, which stand for bounded head aggregates;
  * head aggregates s1 <1 name{t : L : Ls ; ...} <2 s2, which stand for a
    constraint rejecting missed bounds plus one choice rule per positive
    element literal.

The term representation of a literal with d leading nots over atom p(t)
is the tuple (d, p(t)): the literal's shape re-encoded as terms.
"""

from .errors import DesugarError
from .syntax import (
    Numeral, Atom, SymbolicLiteral, ConditionalLiteral, AggregateElement,
    AggregateAtom, AggregateLiteral, Choice, LparseLiteral, LparseAggregate,
    HeadAggregateElement, HeadAggregate, Rule, ChoiceRule, HeadAggregateRule,
    LparseHeadRule, atom_as_term, is_interval_free,
)


def _plain_args(atom, where):
  """The single argument tuple of an atom that must not use pooling."""
  if len(atom.pool.alternatives) != 1:
    raise DesugarError(f"pooling is not allowed in {where}")
  return atom.pool.alternatives[0]


def _term_representation(lit, where):
  """(depth, atom-as-term) for a literal of the restricted shapes."""
  args = _plain_args(lit.atom, where)
  return (Numeral(lit.depth),
          atom_as_term(lit.atom.name, lit.atom.negated, args))


def _lparse_to_aggregate(lp, depth):
  """Body reading: a count aggregate atom over term representations."""
  if lp.lower is None and lp.upper is None:
    raise DesugarError(
        "a brace expression in a body needs a bound on at least one side")
  elements = []
  for el in lp.elements:
    if not is_interval_free(el.literal):
      raise DesugarError(
          "interval in a brace expression literal; "
          "write the aggregate out explicitly")
    rep = _term_representation(el.literal, "brace expression literals")
    elements.append(AggregateElement(rep, (el.literal,) + el.condition))
  left = None if lp.lower is None else (lp.lower, "<=")
  right = None if lp.upper is None else ("<=", lp.upper)
  return AggregateLiteral(depth,
                          AggregateAtom("count", tuple(elements), left, right))


def _lparse_to_head_aggregate(lp):
  elements = []
  for el in lp.elements:
    if not is_interval_free(el.literal):
      raise DesugarError(
          "interval in a brace expression literal; "
          "write the choice as a head aggregate explicitly")
    rep = _term_representation(el.literal, "brace expression literals")
    elements.append(HeadAggregateElement(rep, el.literal, el.condition))
  left = None if lp.lower is None else (lp.lower, "<=")
  right = None if lp.upper is None else ("<=", lp.upper)
  return HeadAggregate("count", tuple(elements), left, right)


def _desugar_body(body):
  out = []
  for lit in body:
    if isinstance(lit, LparseLiteral):
      out.append(_lparse_to_aggregate(lit.aggregate, lit.depth))
    else:
      out.append(lit)
  return tuple(out)


def _expand_head_aggregate(agg, body):
  """The constraint plus the choice rules a head aggregate stands for."""
  rules = []
  if agg.left is not None or agg.right is not None:
    elements = []
    for el in agg.elements:
      # the element literal moves in front of its condition
      elements.append(AggregateElement(el.terms, (el.literal,) + el.condition))
    inner = AggregateAtom(agg.name, tuple(elements), agg.left, agg.right)
    rules.append(Rule((), body + (AggregateLiteral(1, inner),)))
  for el in agg.elements:
    if el.literal.depth != 0:
      continue
    extra = tuple(ConditionalLiteral(l, ()) for l in el.condition)
    rules.append(ChoiceRule(Choice(el.literal.atom), body + extra))
  return rules


def desugar_rule(rule):
  """The list of core rules a rule stands for."""
  if isinstance(rule, Rule):
    return [Rule(rule.head, _desugar_body(rule.body))]
  if isinstance(rule, ChoiceRule):
    return [ChoiceRule(rule.choice, _desugar_body(rule.body))]
  body = _desugar_body(rule.body)
  if isinstance(rule, LparseHeadRule):
    agg = _lparse_to_head_aggregate(rule.aggregate)
    return _expand_head_aggregate(agg, body)
  if isinstance(rule, HeadAggregateRule):
    for el in rule.aggregate.elements:
      _plain_args(el.literal.atom, "head aggregate element literals")
    return _expand_head_aggregate(rule.aggregate, body)
  raise TypeError(f"not a rule: {rule!r}")


def desugar_program(rules):
  out = []
  for r in rules:
    out.extend(desugar_rule(r))
  return tuple(out)
