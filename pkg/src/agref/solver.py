"""Stable model enumeration for finite sets of formulas.

A set I of atoms is a stable model of a formula set when I is minimal
among the sets satisfying every formula's reduct with respect to I.  The
straightforward procedure (try every I, then every J inside it) is what
stable_models_bruteforce does, and it is the oracle the real solver is
tested against.

stable_models gets the same answers through a pipeline of reductions,
each of which provably preserves the stable models:

  * formulas that are valid in the logic of here-and-there are dropped; a
    cheap three-valued evaluation (every atom unknown) certifies most of
    the junk produced by materializing rules over a universe;
  * atoms are forced by unit-style propagation over the classical
    reading; every stable model is in particular a classical model;
  * only atoms with a positive occurrence outside negated subformulas can
    appear in a stable model (negated subformulas contribute the same
    truth value for every candidate inside a fixed reduct, and a true
    atom with only negative occurrences elsewhere could be dropped
    without breaking any reduct, contradicting minimality).  All other
    atoms are replaced by falsity and the formulas folded;
  * the remaining atoms are searched exhaustively with propagation-based
    pruning, each total classical model is verified, and its minimality
    is checked on the folded reducts, where propagation usually pins
    every atom without any branching.

The folding rules used here (dropping truth from conjunctions and falsity
from disjunctions, short-circuiting absorbers, unwrapping singletons, and
rewriting implications with a constant side) each commute with taking
reducts against the candidates under consideration, which is what keeps
the minimality check honest on the folded formulas.

All search work is metered: the node budget turns runaway searches into a
SearchBudgetError instead of an answer.
"""

import itertools

from .errors import SearchBudgetError
from .formula import (
    TRUE, FALSE, GroundAtom, Conj, Disj, conj_of, disj_of, impl,
    atoms_of, atom_sort_key, fold, reduct, satisfies,
)

_F, _U, _T = 0, 1, 2


class _Budget:
  __slots__ = ("left",)

  def __init__(self, n):
    self.left = n

  def spend(self, n=1):
    self.left -= n
    if self.left < 0:
      raise SearchBudgetError(
          "model search exceeded the node budget; raise --search-budget "
          "to keep going")


# -- three-valued here-and-there evaluation with all atoms unknown

def _impl3(a, c):
  if a == _F or c == _T:
    return _T
  if a == _T and c == _F:
    return _F
  return _U


_ht3_memo = {}


def _ht3(f):
  """(here, there) value pair under the all-atoms-unknown abstraction."""
  hit = _ht3_memo.get(f)
  if hit is not None:
    return hit
  if isinstance(f, GroundAtom):
    v = (_U, _U)
  elif isinstance(f, Conj):
    h = t = _T
    for p in f.parts:
      ph, pt = _ht3(p)
      h = min(h, ph)
      t = min(t, pt)
    v = (h, t)
  elif isinstance(f, Disj):
    h = t = _F
    for p in f.parts:
      ph, pt = _ht3(p)
      h = max(h, ph)
      t = max(t, pt)
    v = (h, t)
  else:
    ah, at = _ht3(f.antecedent)
    ch, ct = _ht3(f.consequent)
    t = _impl3(at, ct)
    v = (min(_impl3(ah, ch), t), t)
  _ht3_memo[f] = v
  return v


def ht_valid_cheap(f):
  """True only for formulas certified valid in here-and-there logic."""
  return _ht3(f)[0] == _T


# -- classical three-valued evaluation under a partial assignment

def _eval3(f, assign, memo):
  v = memo.get(f)
  if v is not None:
    return v
  if isinstance(f, GroundAtom):
    b = assign.get(f)
    v = _U if b is None else (_T if b else _F)
  elif isinstance(f, Conj):
    v = _T
    for p in f.parts:
      pv = _eval3(p, assign, memo)
      if pv == _F:
        v = _F
        break
      if pv == _U:
        v = _U
  elif isinstance(f, Disj):
    v = _F
    for p in f.parts:
      pv = _eval3(p, assign, memo)
      if pv == _T:
        v = _T
        break
      if pv == _U:
        v = _U
  else:
    v = _impl3(_eval3(f.antecedent, assign, memo),
               _eval3(f.consequent, assign, memo))
  memo[f] = v
  return v


class _Conflict(Exception):
  pass


def _sweep(formulas, assign):
  """One propagation sweep; the atom values forced by requiring every
  formula true, or a _Conflict."""
  memo = {}
  forced = {}

  def record(atom, val):
    old = forced.get(atom)
    if old is not None and old != val:
      raise _Conflict
    forced[atom] = val

  def need_true(f):
    v = _eval3(f, assign, memo)
    if v == _F:
      raise _Conflict
    if v == _T:
      return
    if isinstance(f, GroundAtom):
      record(f, True)
    elif isinstance(f, Conj):
      for p in f.parts:
        need_true(p)
    elif isinstance(f, Disj):
      open_part = None
      for p in f.parts:
        if _eval3(p, assign, memo) != _F:
          if open_part is not None:
            return  # two ways left, nothing forced
          open_part = p
      need_true(open_part)
    else:
      if _eval3(f.antecedent, assign, memo) == _T:
        need_true(f.consequent)
      elif _eval3(f.consequent, assign, memo) == _F:
        need_false(f.antecedent)

  def need_false(f):
    v = _eval3(f, assign, memo)
    if v == _T:
      raise _Conflict
    if v == _F:
      return
    if isinstance(f, GroundAtom):
      record(f, False)
    elif isinstance(f, Disj):
      for p in f.parts:
        need_false(p)
    elif isinstance(f, Conj):
      open_part = None
      for p in f.parts:
        if _eval3(p, assign, memo) != _T:
          if open_part is not None:
            return
          open_part = p
      need_false(open_part)
    else:
      # a false implication fixes both sides
      need_true(f.antecedent)
      need_false(f.consequent)

  for f in formulas:
    need_true(f)
  return forced


def _propagate(formulas, assign, budget):
  """Extend assign with everything forced; False on conflict."""
  while True:
    budget.spend()
    try:
      forced = _sweep(formulas, assign)
    except _Conflict:
      return False
    new = {a: v for a, v in forced.items() if assign.get(a) is None}
    if not new:
      return True
    for a, v in new.items():
      if assign.get(a, v) != v:
        return False
      assign[a] = v


# -- positive support

def _positive_support(f, pol, out):
  if isinstance(f, GroundAtom):
    if pol:
      out.add(f)
  elif isinstance(f, (Conj, Disj)):
    for p in f.parts:
      _positive_support(p, pol, out)
  else:
    if f.consequent is FALSE:
      return  # negated subformula: constant across candidates in a reduct
    _positive_support(f.antecedent, not pol, out)
    _positive_support(f.consequent, pol, out)


def _subst_false(f, dead, memo):
  hit = memo.get(f)
  if hit is not None:
    return hit
  if isinstance(f, GroundAtom):
    out = FALSE if f in dead else f
  elif isinstance(f, Conj):
    out = conj_of(_subst_false(p, dead, memo) for p in f.parts)
  elif isinstance(f, Disj):
    out = disj_of(_subst_false(p, dead, memo) for p in f.parts)
  else:
    out = impl(_subst_false(f.antecedent, dead, memo),
               _subst_false(f.consequent, dead, memo))
  memo[f] = out
  return out


def _preprocess(formulas, budget):
  """(work formulas, root assignment) or None when no classical model."""
  work = [f for f in formulas if not ht_valid_cheap(f)]
  assign = {}
  while True:
    if not _propagate(work, assign, budget):
      return None
    support = set()
    for f in work:
      _positive_support(f, True, support)
    occurring = set()
    for f in work:
      occurring |= atoms_of(f)
    dead = {a for a in occurring
            if (a not in support and assign.get(a) is not True)
            or assign.get(a) is False}
    if not dead:
      return work, assign
    memo = {}
    next_work = []
    for f in work:
      g = fold(_subst_false(f, dead, memo))
      if g is TRUE:
        continue
      if g is FALSE:
        return None
      next_work.append(g)
    work = next_work
    assign = {a: v for a, v in assign.items() if v and a not in dead}


def _check_minimal(work, model, budget):
  """Is model minimal among the sets satisfying its reducts of work?"""
  reducts = []
  for f in work:
    g = fold(reduct(f, model))
    if g is TRUE:
      continue
    reducts.append(g)
  assign = {}
  if not _propagate(reducts, assign, budget):
    return True  # nothing below the model satisfies the reducts
  pinned = {a for a, v in assign.items() if v}
  free = sorted((a for a in model if a not in pinned), key=atom_sort_key)
  if not free:
    return True
  # search for a proper submodel: some free atom must go false
  def rec(assign, idx):
    budget.spend()
    current = dict(assign)
    if not _propagate(reducts, current, budget):
      return False
    while idx < len(free) and free[idx] in current:
      idx += 1
    if idx == len(free):
      if all(current.get(a, False) for a in model):
        return False  # found only the model itself
      memo = {}
      return all(_eval3(f, current, memo) == _T for f in reducts)
    for val in (False, True):
      child = dict(current)
      child[free[idx]] = val
      if rec(child, idx + 1):
        return True
    return False

  return not rec(assign, 0)


def stable_models(formulas, search_budget=2 ** 22):
  """All stable models, sorted; each model is a frozenset of atoms."""
  budget = _Budget(search_budget)
  formulas = list(formulas)
  pre = _preprocess(formulas, budget)
  if pre is None:
    return []
  work, root = pre
  branch = set()
  for f in work:
    branch |= atoms_of(f)
  branch |= {a for a, v in root.items() if v}
  branch = sorted(branch, key=atom_sort_key)
  models = []

  def rec(assign, idx):
    budget.spend()
    current = dict(assign)
    if not _propagate(work, current, budget):
      return
    while idx < len(branch) and branch[idx] in current:
      idx += 1
    if idx == len(branch):
      memo = {}
      if all(_eval3(f, current, memo) == _T for f in work):
        model = frozenset(a for a, v in current.items() if v)
        if _check_minimal(work, model, budget):
          models.append(model)
      return
    for val in (False, True):
      child = dict(current)
      child[branch[idx]] = val
      rec(child, idx + 1)

  rec(root, 0)
  models.sort(key=lambda m: sorted(atom_sort_key(a) for a in m))
  return models


def stable_models_bruteforce(formulas, extra_atoms=()):
  """Direct implementation of the definition; exponential, test-sized."""
  formulas = list(formulas)
  sig = set(extra_atoms)
  for f in formulas:
    sig |= atoms_of(f)
  sig = sorted(sig, key=atom_sort_key)
  models = []
  for bits in itertools.product((False, True), repeat=len(sig)):
    candidate = frozenset(a for a, b in zip(sig, bits) if b)
    reducts = [reduct(f, candidate) for f in formulas]
    if not all(satisfies(candidate, g) for g in reducts):
      continue
    inside = sorted(candidate, key=atom_sort_key)
    proper = False
    for k in range(len(inside)):
      for smaller in itertools.combinations(inside, k):
        j = frozenset(smaller)
        if all(satisfies(j, g) for g in reducts):
          proper = True
          break
      if proper:
        break
    if not proper:
      models.append(candidate)
  models.sort(key=lambda m: sorted(atom_sort_key(a) for a in m))
  return models
