"""Denotations of ground terms and pools, relations, aggregate functions.

A ground term denotes a finite set of precomputed terms: intervals denote
all numerals in range, arithmetic over non-numerals denotes nothing, and
function/tuple terms multiply out their arguments.  Denotations are kept
as tuples sorted by the term order so everything downstream is
deterministic.
"""

import itertools

from .errors import BudgetError
from .syntax import (
    INF, SUP, Numeral, SymbolicConstant, Variable, FunctionTerm, BinOp,
    TupleTerm, Pool, term_key,
)

INTERVAL_CAP = 10 ** 6


def _sorted_unique(terms):
  out = sorted(set(terms), key=term_key)
  return tuple(out)


def eval_term(t):
  """The set of precomputed terms a ground term denotes, sorted."""
  if t is INF or t is SUP:
    return (t,)
  if isinstance(t, (Numeral, SymbolicConstant)):
    return (t,)
  if isinstance(t, FunctionTerm):
    return _sorted_unique(
        FunctionTerm(t.name, args, t.negated)
        for args in itertools.product(*(eval_term(a) for a in t.args)))
  if isinstance(t, TupleTerm):
    return _sorted_unique(
        TupleTerm(elts)
        for elts in itertools.product(*(eval_term(e) for e in t.elements)))
  if isinstance(t, BinOp):
    lefts = eval_term(t.left)
    rights = eval_term(t.right)
    vals = set()
    for a in lefts:
      if not isinstance(a, Numeral):
        continue
      for b in rights:
        if not isinstance(b, Numeral):
          continue
        if t.op == "+":
          vals.add(a.value + b.value)
        elif t.op == "-":
          vals.add(a.value - b.value)
        elif t.op == "*":
          vals.add(a.value * b.value)
        elif t.op == "/":
          if b.value != 0:
            vals.add(a.value // b.value)
        elif t.op == "..":
          if b.value - a.value > INTERVAL_CAP:
            raise BudgetError(
                "interval %d..%d is wider than %d values" %
                (a.value, b.value, INTERVAL_CAP))
          vals.update(range(a.value, b.value + 1))
        else:
          raise ValueError(f"unknown operation {t.op}")
    return tuple(Numeral(v) for v in sorted(vals))
  if isinstance(t, Variable):
    raise ValueError(f"cannot evaluate non-ground term {t!r}")
  raise TypeError(f"not a term: {t!r}")


def eval_tuple(terms):
  """Denotation of a term tuple: sorted tuple of precomputed-term tuples."""
  combos = itertools.product(*(eval_term(t) for t in terms))
  return _sorted_unique_tuples(combos)


def _sorted_unique_tuples(tuples):
  seen = set(tuples)
  return tuple(sorted(seen, key=lambda ts: tuple(term_key(t) for t in ts)))


def eval_pool(pool):
  """Denotation of a pool: union over its alternatives."""
  assert isinstance(pool, Pool)
  out = set()
  for alt in pool.alternatives:
    out.update(eval_tuple(alt))
  return _sorted_unique_tuples(out)


def relation_holds(r1, rel, r2):
  """Compare two precomputed terms; = is syntactic, order is the term order."""
  if rel == "=":
    return r1 == r2
  if rel == "!=":
    return r1 != r2
  k1, k2 = term_key(r1), term_key(r2)
  if rel == "<":
    return k1 < k2
  if rel == "<=":
    return k1 <= k2
  if rel == ">":
    return k1 > k2
  if rel == ">=":
    return k1 >= k2
  raise ValueError(f"unknown relation {rel}")


def _weight(ts):
  if ts and isinstance(ts[0], Numeral):
    return ts[0].value
  return 0


def aggregate_value(name, tuples, assume_infinite=False):
  """Apply an aggregate function to a set of precomputed-term tuples.

  assume_infinite gives the defined value for infinite sets (count and the
  positive-weight case of sum+ grow without bound, sum is stipulated 0);
  useful only for tests, since materialized sets are always finite.
  """
  if assume_infinite:
    return {"count": SUP, "sum": Numeral(0), "sum+": SUP,
            "min": INF, "max": SUP}[name]
  tuples = set(tuples)
  if name == "count":
    return Numeral(len(tuples))
  if name == "sum":
    return Numeral(sum(_weight(ts) for ts in tuples))
  if name == "sum+":
    return Numeral(sum(w for ts in tuples if (w := _weight(ts)) > 0))
  if name in ("min", "max"):
    # tuples without a first element contribute nothing
    firsts = [ts[0] for ts in tuples if ts]
    if not firsts:
      return SUP if name == "min" else INF
    firsts.sort(key=term_key)
    return firsts[0] if name == "min" else firsts[-1]
  raise ValueError(f"unknown aggregate {name}")
