"""Formulas for aggregate atoms, literal and simplified.

An instantiated aggregate atom is handed over as a bare list of elements,
each a pair (denotation, condition): the set of term tuples the element
contributes and the formula its condition translates to.  Bounds arrive
as (relation, denotation-of-the-bound-term) pairs oriented so that the
aggregated value sits on the left of the relation.

A subset of the elements justifies the atom when the aggregated value of
the union of its denotations stands in the required relation to some
member of every bound's denotation (one witness per bound,
independently).  The literal translation, raw_formula, says "whenever all
of a non-justifying subset holds, some element outside it holds too",
conjoined over every non-justifying subset.  That is exponential in the
number of elements, so it is kept behind a budget.

The rewrites produce smaller strongly equivalent formulas:

  * several bounds split into a conjunction of single-bound atoms (the
    non-justifying subsets of the conjunction are exactly the union of
    the per-bound ones, so this is an identity on the literal formula);
  * an equality bound with a one-term denotation splits into <= and >=
    (not valid for wider bound denotations, where the two directions may
    pick different witnesses);
  * a count over single-valued elements compares against a threshold
    number of elements; at least k becomes a disjunction over the
    k-element subsets with pairwise distinct values of the conjunction
    of their conditions, at most k the dual conjunction over (k+1)-sized
    subsets.  Subsets with repeated values are dominated by their cores,
    and dropping them is an absorption valid in the logic of
    here-and-there;
  * any aggregate whose justifying family is upward closed is a
    disjunction over the minimal justifying subsets, downward closed the
    dual; the family is scanned semantically, which caps the element
    count, but it decides monotonicity exactly instead of guessing from
    the aggregate name.

classify_monotonicity is the fast by-name table of the same directions.
The scan is what the solver trusts; the table is exported because it is
cheap documentation and the tests hold it against the scan.
"""

import itertools

from .errors import BudgetError
from .formula import TRUE, FALSE, conj, disj, impl, neg
from .syntax import Numeral
from .termeval import aggregate_value, relation_holds

DEFAULT_AGG_BUDGET = 16
DEFAULT_DOMINANCE_CAP = 12

_MIRROR = {"<": ">", "<=": ">=", ">": "<", ">=": "<=", "=": "=", "!=": "!="}


def mirror(rel):
  """The relation with its sides swapped."""
  return _MIRROR[rel]


def _holds(value, rel, bound_den):
  return any(relation_holds(value, rel, t) for t in bound_den)


def justifies(name, elements, picked, checks):
  """Does the picked subset of element indices justify the atom?"""
  tuples = set()
  for k in picked:
    tuples |= elements[k][0]
  value = aggregate_value(name, tuples)
  return all(_holds(value, rel, den) for rel, den in checks)


def raw_formula(name, elements, checks, agg_budget=DEFAULT_AGG_BUDGET):
  """The literal translation: one implication per non-justifying subset."""
  n = len(elements)
  if n > agg_budget:
    raise BudgetError(
        "aggregate with %d elements exceeds the subset-enumeration budget "
        "of %d; raise --agg-budget or keep simplification on" %
        (n, agg_budget))
  conjuncts = []
  for picked in itertools.chain.from_iterable(
      itertools.combinations(range(n), k) for k in range(n + 1)):
    if justifies(name, elements, picked, checks):
      continue
    inside = set(picked)
    conjuncts.append(impl(
        conj(elements[k][1] for k in inside),
        disj(elements[k][1] for k in range(n) if k not in inside)))
  return conj(conjuncts)


def classify_monotonicity(name, rel, elements=()):
  """+1 when growing the subset can only keep the atom true, -1 when it
  can only keep it false, 0 when neither is promised.  sum is signed by
  the weights actually present."""
  if rel in ("=", "!="):
    return 0
  grows = rel in (">", ">=")
  if name in ("count", "sum+"):
    direction = 1
  elif name == "max":
    direction = 1
  elif name == "min":
    direction = -1
  else:  # sum: fixed sign only without mixed weights
    weights = [t[0].value if t and isinstance(t[0], Numeral) else 0
               for den, _ in elements for t in den]
    if all(w >= 0 for w in weights):
      direction = 1
    elif all(w <= 0 for w in weights):
      direction = -1
    else:
      return 0
  return direction if grows else -direction


def _count_threshold(rel, bound_den, top):
  """Largest contiguous description of {k : count k satisfies the bound}
  over 0..top: ('up', k0), ('down', k1), 'all', or 'none'.  Total order
  on terms makes the satisfied set one-sided for order relations."""
  sat = [k for k in range(top + 1)
         if _holds(Numeral(k), rel, bound_den)]
  if not sat:
    return ("none", 0)
  if len(sat) == top + 1:
    return ("all", 0)
  if rel in (">", ">="):
    return ("up", sat[0])
  return ("down", sat[-1])


def _distinct_value_subsets(entries, size):
  """Subsets of the given size whose single values are pairwise distinct;
  entries are (value, condition) pairs."""
  for combo in itertools.combinations(range(len(entries)), size):
    seen = set()
    ok = True
    for k in combo:
      v = entries[k][0]
      if v in seen:
        ok = False
        break
      seen.add(v)
    if ok:
      yield combo


def _count_rewrite(elements, rel, bound_den, agg_budget):
  """Threshold form of a count with an order bound; None when an element
  denotes several tuples at once (then counting is not per-element)."""
  entries = []
  for den, cond in elements:
    if len(den) > 1:
      return None
    if den:
      entries.append((next(iter(den)), cond))
  entries = list(dict.fromkeys(entries))
  distinct = len(set(v for v, _ in entries))
  kind, k = _count_threshold(rel, bound_den, distinct)
  if kind == "all":
    return TRUE
  if kind == "none":
    return FALSE
  cap = 2 ** agg_budget
  if kind == "up":
    need = k
    if _family_too_big(entries, need, cap):
      raise BudgetError(
          "count expansion over %d elements choose %d exceeds %d terms; "
          "raise --agg-budget" % (len(entries), need, cap))
    return disj(conj(entries[i][1] for i in combo)
                for combo in _distinct_value_subsets(entries, need))
  need = k + 1
  if _family_too_big(entries, need, cap):
    raise BudgetError(
        "count expansion over %d elements choose %d exceeds %d terms; "
        "raise --agg-budget" % (len(entries), need, cap))
  return conj(neg(conj(entries[i][1] for i in combo))
              for combo in _distinct_value_subsets(entries, need))


def _family_too_big(entries, size, cap):
  count = 0
  for _ in _distinct_value_subsets(entries, size):
    count += 1
    if count > cap:
      return True
  return False


def _lattice_rewrite(name, elements, checks, dominance_cap):
  """Disjunction over minimal justifying subsets when the family is
  upward closed, the dual when downward closed, else None.  Scans the
  whole subset lattice, so only for few elements."""
  core = [e for e in dict.fromkeys(elements) if e[0]]
  if len(core) > dominance_cap:
    return None
  n = len(core)
  just = []
  for mask in range(2 ** n):
    picked = [k for k in range(n) if mask >> k & 1]
    just.append(justifies(name, core, picked, checks))
  up = all(not just[m] or just[m | (1 << k)]
           for m in range(2 ** n) for k in range(n))
  down = all(not just[m] or just[m & ~(1 << k)]
             for m in range(2 ** n) for k in range(n))
  if up:
    minimal = [m for m in range(2 ** n) if just[m]
               and not any(m >> k & 1 and just[m & ~(1 << k)]
                           for k in range(n))]
    return disj(conj(core[k][1] for k in range(n) if m >> k & 1)
                for m in minimal)
  if down:
    # a downward closed family fails exactly on the supersets of the
    # minimal non-justifying subsets
    minimal_out = [m for m in range(2 ** n) if not just[m]
                   and not any(m >> k & 1 and not just[m & ~(1 << k)]
                               for k in range(n))]
    return conj(neg(conj(core[k][1] for k in range(n) if m >> k & 1))
                for m in minimal_out)
  return None


def _single_bound_formula(name, elements, rel, bound_den, rewrite,
                          agg_budget, dominance_cap):
  if rewrite:
    if not bound_den:
      return FALSE  # no witness for the bound, never justified
    if rel == "=":
      if len(bound_den) == 1:
        return conj((
            _single_bound_formula(name, elements, "<=", bound_den, True,
                                  agg_budget, dominance_cap),
            _single_bound_formula(name, elements, ">=", bound_den, True,
                                  agg_budget, dominance_cap)))
    elif rel != "!=":
      if name == "count":
        got = _count_rewrite(elements, rel, bound_den, agg_budget)
        if got is not None:
          return got
      got = _lattice_rewrite(name, elements, ((rel, bound_den),),
                             dominance_cap)
      if got is not None:
        return got
  return raw_formula(name, elements, ((rel, bound_den),), agg_budget)


def aggregate_formula(name, elements, checks, rewrite=True,
                      agg_budget=DEFAULT_AGG_BUDGET,
                      dominance_cap=DEFAULT_DOMINANCE_CAP):
  """Formula for an instantiated aggregate atom.

  elements: sequence of (frozenset of term tuples, condition formula).
  checks: (relation, bound denotation) pairs, value on the left.
  """
  elements = tuple(elements)
  checks = tuple((rel, tuple(den)) for rel, den in checks)
  if not checks:
    raise ValueError("aggregate atom needs at least one bound")
  if not rewrite:
    return raw_formula(name, elements, checks, agg_budget)
  if len(checks) > 1:
    # the non-justifying subsets of the conjunction are the union of the
    # per-bound ones, so splitting is exact
    return conj(tuple(
        aggregate_formula(name, elements, (c,), True, agg_budget,
                          dominance_cap)
        for c in checks))
  rel, den = checks[0]
  return _single_bound_formula(name, elements, rel, den, True,
                               agg_budget, dominance_cap)
