"""Text rendering for syntax trees and for translated formulas.

Terms print compactly (no spaces around operations, minimal parentheses);
comparisons and bounds get spaces.  The output parses back to the same
tree, except that evaluation-produced negative numerals reparse as 0-n
with the same denotation.
"""

from .syntax import (
    INF, SUP, FALSUM, Numeral, SymbolicConstant, Variable, FunctionTerm,
    BinOp, TupleTerm, Pool, Atom, SymbolicLiteral, ArithmeticLiteral,
    ConditionalLiteral, AggregateElement, AggregateAtom, AggregateLiteral,
    Choice, LparseElement, LparseAggregate, LparseLiteral,
    HeadAggregateElement, HeadAggregate, Rule, ChoiceRule,
    HeadAggregateRule, LparseHeadRule,
)
from . import formula as fm

_PREC = {"..": 1, "+": 2, "-": 2, "*": 3, "/": 3}


def term_text(t):
  if t is INF:
    return "#inf"
  if t is SUP:
    return "#sup"
  if isinstance(t, Numeral):
    return str(t.value)
  if isinstance(t, (SymbolicConstant, Variable)):
    return t.name
  if isinstance(t, FunctionTerm):
    sign = "-" if t.negated else ""
    if not t.args:
      return sign + t.name
    return f"{sign}{t.name}({','.join(term_text(a) for a in t.args)})"
  if isinstance(t, TupleTerm):
    if len(t.elements) == 1:
      return f"({term_text(t.elements[0])},)"
    return f"({','.join(term_text(e) for e in t.elements)})"
  if isinstance(t, BinOp):
    prec = _PREC[t.op]
    left = term_text(t.left)
    if isinstance(t.left, BinOp) and _PREC[t.left.op] < prec:
      left = f"({left})"
    right = term_text(t.right)
    # operations associate to the left, so a same-precedence right child
    # needs parentheses to survive a round trip
    if isinstance(t.right, BinOp) and _PREC[t.right.op] <= prec:
      right = f"({right})"
    return f"{left}{t.op}{right}"
  raise TypeError(f"not a term: {t!r}")


def _pool_text(pool):
  return ";".join(",".join(term_text(t) for t in alt)
                  for alt in pool.alternatives)


def atom_text(atom):
  sign = "-" if atom.negated else ""
  if atom.pool.alternatives == ((),):
    return sign + atom.name
  return f"{sign}{atom.name}({_pool_text(atom.pool)})"


def literal_text(lit):
  """A symbolic or arithmetic literal, or FALSUM."""
  if lit is FALSUM:
    return "#false"
  if isinstance(lit, SymbolicLiteral):
    return "not " * lit.depth + atom_text(lit.atom)
  if isinstance(lit, ArithmeticLiteral):
    return f"{term_text(lit.left)} {lit.rel} {term_text(lit.right)}"
  raise TypeError(f"not a simple literal: {lit!r}")


def _agg_element_text(e):
  terms = ",".join(term_text(t) for t in e.terms)
  if not e.condition:
    return terms
  cond = ", ".join(literal_text(l) for l in e.condition)
  return f"{terms} : {cond}"


def aggregate_atom_text(agg):
  body = "; ".join(_agg_element_text(e) for e in agg.elements)
  out = f"#{agg.name}{{{body}}}"
  if agg.left is not None:
    s, rel = agg.left
    out = f"{term_text(s)} {rel} {out}"
  if agg.right is not None:
    rel, s = agg.right
    out = f"{out} {rel} {term_text(s)}"
  return out


def _lparse_element_text(e):
  out = literal_text(e.literal)
  if e.condition:
    out += " : " + ", ".join(literal_text(l) for l in e.condition)
  return out


def lparse_text(lp):
  body = "; ".join(_lparse_element_text(e) for e in lp.elements)
  out = f"{{{body}}}"
  if lp.lower is not None:
    out = f"{term_text(lp.lower)} {out}"
  if lp.upper is not None:
    out = f"{out} {term_text(lp.upper)}"
  return out


def _head_agg_element_text(e):
  terms = ",".join(term_text(t) for t in e.terms)
  out = f"{terms} : {literal_text(e.literal)}"
  if e.condition:
    out += " : " + ", ".join(literal_text(l) for l in e.condition)
  return out


def head_aggregate_text(agg):
  body = "; ".join(_head_agg_element_text(e) for e in agg.elements)
  out = f"#{agg.name}{{{body}}}"
  if agg.left is not None:
    s, rel = agg.left
    out = f"{term_text(s)} {rel} {out}"
  if agg.right is not None:
    rel, s = agg.right
    out = f"{out} {rel} {term_text(s)}"
  return out


def body_literal_text(lit):
  if isinstance(lit, ConditionalLiteral):
    head = literal_text(lit.head)
    if not lit.condition:
      return head
    return f"{head} : " + ", ".join(literal_text(l) for l in lit.condition)
  if isinstance(lit, AggregateLiteral):
    return "not " * lit.depth + aggregate_atom_text(lit.atom)
  if isinstance(lit, LparseLiteral):
    return "not " * lit.depth + lparse_text(lit.aggregate)
  raise TypeError(f"not a body literal: {lit!r}")


def body_text(body):
  # a conditional literal with a condition must be chained with ';',
  # anything else with ','
  parts = []
  for i, lit in enumerate(body):
    parts.append(body_literal_text(lit))
    if i + 1 < len(body):
      greedy = (isinstance(lit, ConditionalLiteral) and lit.condition)
      parts.append("; " if greedy else ", ")
  return "".join(parts)


def rule_text(rule):
  if isinstance(rule, Rule):
    head = "; ".join(literal_text(h) for h in rule.head)
  elif isinstance(rule, ChoiceRule):
    head = f"{{{atom_text(rule.choice.atom)}}}"
  elif isinstance(rule, HeadAggregateRule):
    head = head_aggregate_text(rule.aggregate)
  elif isinstance(rule, LparseHeadRule):
    head = lparse_text(rule.aggregate)
  else:
    raise TypeError(f"not a rule: {rule!r}")
  if not rule.body:
    if not head:
      raise ValueError("a rule needs a head or a body")
    return f"{head}."
  body = body_text(rule.body)
  if head:
    return f"{head} :- {body}."
  return f":- {body}."


def program_text(rules):
  return "\n".join(rule_text(r) for r in rules)


# -- formulas


def ground_atom_text(a):
  sign = "-" if a.negated else ""
  if not a.args:
    return sign + a.name
  return f"{sign}{a.name}({','.join(term_text(t) for t in a.args)})"


def formula_text(f):
  if isinstance(f, fm.GroundAtom):
    return ground_atom_text(f)
  if isinstance(f, fm.Conj):
    if not f.parts:
      return "#true"
    return "&{" + ", ".join(formula_text(p) for p in f.parts) + "}"
  if isinstance(f, fm.Disj):
    if not f.parts:
      return "#false"
    return "|{" + ", ".join(formula_text(p) for p in f.parts) + "}"
  if isinstance(f, fm.Impl):
    return f"({formula_text(f.antecedent)} -> {formula_text(f.consequent)})"
  raise TypeError(f"not a formula: {f!r}")
