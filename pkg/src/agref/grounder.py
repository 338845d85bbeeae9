"""Materializing a program over a finite universe.

The semantics quantifies variables over all precomputed terms, of which
there are infinitely many.  This module replaces that quantification by a
finite universe: the two extremes, a contiguous range of numerals, every
symbolic constant the program mentions, and (when fn_depth > 0) function
and tuple terms nested up to that depth over the smaller universe.  The
numeral range defaults to an estimate covering everything the program's
own arithmetic can reach from its literal numerals, zero included, and
can be pinned explicitly instead.  Results agree with the unrestricted
semantics exactly when everything relevant to the program lies inside the
universe; that is the tool's standing caveat, and the cure is a wider
--int-range.

Translation then follows the two-valued scheme: a literal turns into the
conjunction (or disjunction) of its instances' atoms, rules substitute
every universe term for each global variable, conditional literals close
over their local variables, and aggregate atoms are expanded by
simplify.aggregate_formula from their instantiated elements.
"""

import itertools

from .errors import GroundingError
from .formula import TRUE, FALSE, ground_atom, conj, disj, impl, neg
from .simplify import (
    DEFAULT_AGG_BUDGET, DEFAULT_DOMINANCE_CAP, aggregate_formula, mirror,
)
from .syntax import (
    INF, SUP, FALSUM, Numeral, SymbolicConstant, FunctionTerm, BinOp,
    TupleTerm, SymbolicLiteral, ArithmeticLiteral, ConditionalLiteral,
    AggregateLiteral, ChoiceRule, _children, term_key, variables_in,
    substitute,
)
from .termeval import eval_term, eval_tuple, eval_pool, relation_holds

UNIVERSE_CAP = 10 ** 6
INSTANCE_CAP = 5 * 10 ** 6

TRUE_OR_FALSE = {True: TRUE, False: FALSE}


class Universe:
  """The finite set of terms variables range over, sorted."""

  __slots__ = ("terms", "_set")

  def __init__(self, terms):
    self.terms = tuple(sorted(dict.fromkeys(terms), key=term_key))
    self._set = frozenset(self.terms)

  def __len__(self):
    return len(self.terms)

  def __iter__(self):
    return iter(self.terms)

  def __contains__(self, t):
    return t in self._set


def _walk(obj):
  stack = [obj]
  while stack:
    node = stack.pop()
    yield node
    stack.extend(_children(node))


def _corner_range(t):
  """Overapproximate numeral bounds of a term, None when not numeric."""
  if isinstance(t, Numeral):
    return (t.value, t.value)
  if not isinstance(t, BinOp):
    return None
  a = _corner_range(t.left)
  b = _corner_range(t.right)
  if a is None or b is None:
    return None
  if t.op == "..":
    return (a[0], b[1]) if a[0] <= b[1] else None
  if t.op == "+":
    return (a[0] + b[0], a[1] + b[1])
  if t.op == "-":
    return (a[0] - b[1], a[1] - b[0])
  if t.op == "*":
    corners = [x * y for x in a for y in b]
    return (min(corners), max(corners))
  # floor division: quotient extremes happen at divisor corners or at the
  # divisors of least magnitude
  divisors = {b[0], b[1]}
  if b[0] <= 1 <= b[1]:
    divisors.add(1)
  if b[0] <= -1 <= b[1]:
    divisors.add(-1)
  divisors.discard(0)
  if not divisors:
    return None
  corners = [x // d for x in a for d in divisors]
  return (min(corners), max(corners))


def estimate_int_range(program):
  """Default numeral range: zero plus everything any (sub)term of the
  program evaluates into, estimated by corner arithmetic."""
  lo = hi = 0
  for rule in program:
    for node in _walk(rule):
      rng = _corner_range(node)
      if rng is not None:
        lo = min(lo, rng[0])
        hi = max(hi, rng[1])
  return lo, hi


def build_universe(program, int_range=None, fn_depth=0):
  if int_range is None:
    lo, hi = estimate_int_range(program)
  else:
    lo, hi = int_range
  if hi - lo + 1 > UNIVERSE_CAP:
    raise GroundingError(
        "numeral range %d..%d holds more than %d terms; narrow --int-range"
        % (lo, hi, UNIVERSE_CAP))
  terms = {INF, SUP}
  terms.update(Numeral(v) for v in range(lo, hi + 1))
  functions = set()
  tuple_arities = set()
  for rule in program:
    for node in _walk(rule):
      if isinstance(node, SymbolicConstant):
        terms.add(node)
      elif isinstance(node, FunctionTerm) and not node.negated and node.args:
        functions.add((node.name, len(node.args)))
      elif isinstance(node, TupleTerm):
        tuple_arities.add(len(node.elements))
  layer = set(terms)
  for _ in range(fn_depth):
    base = tuple(sorted(layer, key=term_key))
    grown = set(layer)
    for name, arity in sorted(functions):
      if len(base) ** arity + len(grown) > UNIVERSE_CAP:
        raise GroundingError(
            "function closure exceeds %d terms; lower --fn-depth"
            % UNIVERSE_CAP)
      grown.update(FunctionTerm(name, args)
                   for args in itertools.product(base, repeat=arity))
    for arity in sorted(tuple_arities):
      if len(base) ** arity + len(grown) > UNIVERSE_CAP:
        raise GroundingError(
            "tuple closure exceeds %d terms; lower --fn-depth"
            % UNIVERSE_CAP)
      grown.update(TupleTerm(elts)
                   for elts in itertools.product(base, repeat=arity))
    layer = grown
  return Universe(layer)


# -- global variables and instantiation

def _global_contribution(part):
  if isinstance(part, ConditionalLiteral):
    bound = set()
    for c in part.condition:
      bound |= variables_in(c)
    return variables_in(part.head) - bound
  if isinstance(part, AggregateLiteral):
    out = set()
    if part.atom.left is not None:
      out |= variables_in(part.atom.left[0])
    if part.atom.right is not None:
      out |= variables_in(part.atom.right[1])
    return out
  return variables_in(part)


def global_variables(rule):
  """Variables substituted over the whole universe, sorted by name."""
  out = set()
  if isinstance(rule, ChoiceRule):
    out |= variables_in(rule.choice)
    parts = rule.body
  else:
    parts = rule.head + rule.body
  for part in parts:
    out |= _global_contribution(part)
  return tuple(sorted(out))


def rule_instances(rule, universe, instance_cap=INSTANCE_CAP):
  gvars = global_variables(rule)
  if len(universe) ** len(gvars) > instance_cap:
    raise GroundingError(
        "%d global variables over %d universe terms exceed %d instances; "
        "narrow --int-range" % (len(gvars), len(universe), instance_cap))
  for combo in itertools.product(universe.terms, repeat=len(gvars)):
    yield substitute(rule, dict(zip(gvars, combo)))


# -- translation of ground literals

def _atom_instances(atom):
  return tuple(ground_atom(atom.name, ts, atom.negated)
               for ts in eval_pool(atom.pool))


def tau_any(lit):
  """The disjunctive reading of a ground literal."""
  if lit is FALSUM:
    return FALSE
  if isinstance(lit, ArithmeticLiteral):
    lefts = eval_term(lit.left)
    rights = eval_term(lit.right)
    ok = any(relation_holds(u, lit.rel, v) for u in lefts for v in rights)
    return TRUE_OR_FALSE[ok]
  if lit.depth == 0:
    return disj(_atom_instances(lit.atom))
  if lit.depth == 1:
    return neg(tau_all(SymbolicLiteral(0, lit.atom)))
  return neg(neg(tau_any(SymbolicLiteral(0, lit.atom))))


def tau_all(lit):
  """The conjunctive reading, used in rule heads."""
  if lit is FALSUM:
    return FALSE
  if isinstance(lit, ArithmeticLiteral):
    lefts = eval_term(lit.left)
    rights = eval_term(lit.right)
    ok = all(relation_holds(u, lit.rel, v) for u in lefts for v in rights)
    return TRUE_OR_FALSE[ok]
  if lit.depth == 0:
    return conj(_atom_instances(lit.atom))
  if lit.depth == 1:
    return neg(tau_any(SymbolicLiteral(0, lit.atom)))
  return neg(neg(tau_all(SymbolicLiteral(0, lit.atom))))


def conditional_formula(cl, universe, instance_cap=INSTANCE_CAP):
  """Close a conditional literal over its local variables."""
  lvars = tuple(sorted(variables_in(cl)))
  if len(universe) ** len(lvars) > instance_cap:
    raise GroundingError(
        "conditional literal with %d local variables exceeds %d instances; "
        "narrow --int-range" % (len(lvars), instance_cap))
  parts = []
  for combo in itertools.product(universe.terms, repeat=len(lvars)):
    inst = substitute(cl, dict(zip(lvars, combo)))
    cond = conj(tuple(tau_any(c) for c in inst.condition))
    parts.append(impl(cond, tau_any(inst.head)))
  return conj(parts)


def aggregate_literal_formula(alit, universe, rewrite=True,
                              agg_budget=DEFAULT_AGG_BUDGET,
                              dominance_cap=DEFAULT_DOMINANCE_CAP,
                              instance_cap=INSTANCE_CAP):
  atom = alit.atom
  elements = []
  for el in atom.elements:
    lvars = tuple(sorted(variables_in(el)))
    if len(universe) ** len(lvars) > instance_cap:
      raise GroundingError(
          "aggregate element with %d local variables exceeds %d instances; "
          "narrow --int-range" % (len(lvars), instance_cap))
    for combo in itertools.product(universe.terms, repeat=len(lvars)):
      inst = substitute(el, dict(zip(lvars, combo)))
      den = frozenset(eval_tuple(inst.terms))
      cond = conj(tuple(tau_any(c) for c in inst.condition))
      elements.append((den, cond))
  checks = []
  if atom.left is not None:
    term, rel = atom.left
    checks.append((mirror(rel), eval_term(term)))
  if atom.right is not None:
    rel, term = atom.right
    checks.append((rel, eval_term(term)))
  f = aggregate_formula(atom.name, elements, checks, rewrite, agg_budget,
                        dominance_cap)
  for _ in range(alit.depth):
    f = neg(f)
  return f


def _body_formulas(body, universe, rewrite, agg_budget, dominance_cap,
                   instance_cap):
  out = []
  for part in body:
    if isinstance(part, ConditionalLiteral):
      out.append(conditional_formula(part, universe, instance_cap))
    elif isinstance(part, AggregateLiteral):
      out.append(aggregate_literal_formula(
          part, universe, rewrite, agg_budget, dominance_cap, instance_cap))
    else:
      raise TypeError(f"unexpected body part {part!r}; desugar first")
  return tuple(out)


def translate_instance(rule, universe, rewrite=True,
                       agg_budget=DEFAULT_AGG_BUDGET,
                       dominance_cap=DEFAULT_DOMINANCE_CAP,
                       instance_cap=INSTANCE_CAP):
  """Formula of one ground rule instance."""
  if isinstance(rule, ChoiceRule):
    head = conj(tuple(disj((a, neg(a)))
                      for a in _atom_instances(rule.choice.atom)))
    body = rule.body
  else:
    head = disj(tuple(tau_all(h) for h in rule.head))
    body = rule.body
  if not body:
    return head
  parts = _body_formulas(body, universe, rewrite, agg_budget, dominance_cap,
                         instance_cap)
  return impl(conj(parts), head)


def translate_program(rules, universe, rewrite=True,
                      agg_budget=DEFAULT_AGG_BUDGET,
                      dominance_cap=DEFAULT_DOMINANCE_CAP,
                      instance_cap=INSTANCE_CAP):
  """One formula per rule instance, in rule then substitution order."""
  out = []
  for rule in rules:
    for inst in rule_instances(rule, universe, instance_cap):
      out.append(translate_instance(inst, universe, rewrite, agg_budget,
                                    dominance_cap, instance_cap))
  return out
