"""Propositional formulas over ground atoms, with hash-consing.

Every formula is built through the factories here and interned: equal
structure is the same object, so equality is identity, sets of formulas
are cheap, and passes over a formula can memoize by node.  Conjunctions
and disjunctions keep their parts sorted and deduplicated by a canonical
key, which also gives a deterministic order everywhere.

TRUE is the empty conjunction, FALSE the empty disjunction, and neg(F)
abbreviates F -> FALSE.  The smart constructors conj()/disj() drop
identity elements, short-circuit on absorbing ones and unwrap singletons;
implications are never rewritten by construction, since the translation
and the reduct machinery need them verbatim.
"""

from .syntax import tuple_key
from .errors import BudgetError


class GroundAtom:
  __slots__ = ("name", "negated", "args", "key")

  def __repr__(self):
    sign = "-" if self.negated else ""
    if not self.args:
      return f"{sign}{self.name}"
    return f"{sign}{self.name}({','.join(map(repr, self.args))})"


class Conj:
  __slots__ = ("parts", "key")

  def __repr__(self):
    return "&{" + ", ".join(map(repr, self.parts)) + "}"


class Disj:
  __slots__ = ("parts", "key")

  def __repr__(self):
    return "|{" + ", ".join(map(repr, self.parts)) + "}"


class Impl:
  __slots__ = ("antecedent", "consequent", "key")

  def __repr__(self):
    return f"({self.antecedent!r} -> {self.consequent!r})"


_table = {}


def ground_atom(name, args=(), negated=False):
  args = tuple(args)
  tk = ("a", name, negated, args)
  hit = _table.get(tk)
  if hit is not None:
    return hit
  a = GroundAtom.__new__(GroundAtom)
  a.name = name
  a.negated = negated
  a.args = args
  a.key = (0, name, negated, tuple_key(args))
  _table[tk] = a
  return a


def _normalize(parts):
  parts = dict.fromkeys(parts)  # identity dedup; interning makes it exact
  return tuple(sorted(parts, key=lambda f: f.key))


def conj_of(parts):
  """Plain conjunction: sorts and deduplicates, nothing else."""
  parts = _normalize(parts)
  tk = ("c", parts)
  hit = _table.get(tk)
  if hit is not None:
    return hit
  f = Conj.__new__(Conj)
  f.parts = parts
  f.key = (1, tuple(p.key for p in parts))
  _table[tk] = f
  return f


def disj_of(parts):
  parts = _normalize(parts)
  tk = ("d", parts)
  hit = _table.get(tk)
  if hit is not None:
    return hit
  f = Disj.__new__(Disj)
  f.parts = parts
  f.key = (2, tuple(p.key for p in parts))
  _table[tk] = f
  return f


def impl(antecedent, consequent):
  tk = ("i", antecedent, consequent)
  hit = _table.get(tk)
  if hit is not None:
    return hit
  f = Impl.__new__(Impl)
  f.antecedent = antecedent
  f.consequent = consequent
  f.key = (3, antecedent.key, consequent.key)
  _table[tk] = f
  return f


TRUE = conj_of(())
FALSE = disj_of(())


def conj(parts):
  out = {}
  for p in parts:
    if p is TRUE:
      continue
    if p is FALSE:
      return FALSE
    out[p] = None
  if len(out) == 1:
    return next(iter(out))
  return conj_of(out)


def disj(parts):
  out = {}
  for p in parts:
    if p is FALSE:
      continue
    if p is TRUE:
      return TRUE
    out[p] = None
  if len(out) == 1:
    return next(iter(out))
  return disj_of(out)


def neg(f):
  return impl(f, FALSE)


def atom_sort_key(a):
  """Order used when printing models: by name, sign, then arguments."""
  return (a.name, a.negated, tuple_key(a.args))


_atoms_memo = {}


def atoms_of(f):
  """Frozenset of atoms occurring in f."""
  hit = _atoms_memo.get(f)
  if hit is not None:
    return hit
  if isinstance(f, GroundAtom):
    out = frozenset((f,))
  elif isinstance(f, (Conj, Disj)):
    out = frozenset().union(*(atoms_of(p) for p in f.parts)) \
        if f.parts else frozenset()
  else:
    out = atoms_of(f.antecedent) | atoms_of(f.consequent)
  _atoms_memo[f] = out
  return out


def _eval_cl(f, model, memo):
  v = memo.get(f)
  if v is not None:
    return v
  if isinstance(f, GroundAtom):
    v = f in model
  elif isinstance(f, Conj):
    v = all(_eval_cl(p, model, memo) for p in f.parts)
  elif isinstance(f, Disj):
    v = any(_eval_cl(p, model, memo) for p in f.parts)
  else:
    v = (not _eval_cl(f.antecedent, model, memo)
         or _eval_cl(f.consequent, model, memo))
  memo[f] = v
  return v


def satisfies(model, f):
  """Classical satisfaction; model is a set of atoms."""
  return _eval_cl(f, model, {})


def reduct(f, model, _memo=None, _clmemo=None):
  """The reduct of f with respect to model, built literally: false atoms
  and falsified implications become FALSE, everything else keeps shape."""
  if _memo is None:
    _memo = {}
    _clmemo = {}
  hit = _memo.get(f)
  if hit is not None:
    return hit
  if isinstance(f, GroundAtom):
    out = f if f in model else FALSE
  elif isinstance(f, Conj):
    out = conj_of(reduct(p, model, _memo, _clmemo) for p in f.parts)
  elif isinstance(f, Disj):
    out = disj_of(reduct(p, model, _memo, _clmemo) for p in f.parts)
  elif not (not _eval_cl(f.antecedent, model, _clmemo)
            or _eval_cl(f.consequent, model, _clmemo)):
    out = FALSE
  else:
    out = impl(reduct(f.antecedent, model, _memo, _clmemo),
               reduct(f.consequent, model, _memo, _clmemo))
  _memo[f] = out
  return out


_fold_memo = {}


def fold(f):
  """Remove constants: units and absorbers in junctions, constant-headed
  implications.  Each rewrite commutes with taking reducts, which is what
  lets the solver fold before minimality checking."""
  hit = _fold_memo.get(f)
  if hit is not None:
    return hit
  if isinstance(f, GroundAtom):
    out = f
  elif isinstance(f, Conj):
    out = conj(fold(p) for p in f.parts)
  elif isinstance(f, Disj):
    out = disj(fold(p) for p in f.parts)
  else:
    a = fold(f.antecedent)
    c = fold(f.consequent)
    if a is TRUE:
      out = c
    elif a is FALSE or c is TRUE:
      out = TRUE
    else:
      out = impl(a, c)
  _fold_memo[f] = out
  return out


def ht_satisfies(j, i, f, _memo=None, _clmemo=None):
  """Satisfaction at the here-and-there pair (j, i), j a subset of i."""
  if _memo is None:
    _memo = {}
    _clmemo = {}
  v = _memo.get(f)
  if v is not None:
    return v
  if isinstance(f, GroundAtom):
    v = f in j
  elif isinstance(f, Conj):
    v = all(ht_satisfies(j, i, p, _memo, _clmemo) for p in f.parts)
  elif isinstance(f, Disj):
    v = any(ht_satisfies(j, i, p, _memo, _clmemo) for p in f.parts)
  else:
    v = ((not ht_satisfies(j, i, f.antecedent, _memo, _clmemo)
          or ht_satisfies(j, i, f.consequent, _memo, _clmemo))
         and (not _eval_cl(f.antecedent, i, _clmemo)
              or _eval_cl(f.consequent, i, _clmemo)))
  _memo[f] = v
  return v


def ht_valid(f, max_atoms=14):
  return ht_counterexample(f, TRUE, max_atoms) is None


def ht_counterexample(f, g, max_atoms=14):
  """A here-and-there pair on which f and g disagree, or None.

  Enumerates all 3^n pairs over the occurring atoms, so n is capped.
  """
  sig = sorted(atoms_of(f) | atoms_of(g), key=atom_sort_key)
  if len(sig) > max_atoms:
    raise BudgetError(
        f"strong-equivalence check over {len(sig)} atoms exceeds the cap "
        f"of {max_atoms}")
  return _search_ce(f, g, sig, 0, frozenset(), frozenset())


def _search_ce(f, g, sig, k, j, i):
  if k == len(sig):
    if ht_satisfies(j, i, f) != ht_satisfies(j, i, g):
      return (set(j), set(i))
    return None
  a = sig[k]
  for nj, ni in ((j, i), (j, i | {a}), (j | {a}, i | {a})):
    ce = _search_ce(f, g, sig, k + 1, nj, ni)
    if ce is not None:
      return ce
  return None


def strongly_equivalent(f, g, max_atoms=14):
  """True when f and g have the same here-and-there models, hence are
  interchangeable inside any larger formula without affecting stable
  models."""
  return ht_counterexample(f, g, max_atoms) is None


def count_nodes(f):
  """Distinct subformulas reachable from f."""
  seen = set()

  def walk(g):
    if g in seen:
      return
    seen.add(g)
    if isinstance(g, (Conj, Disj)):
      for p in g.parts:
        walk(p)
    elif isinstance(g, Impl):
      walk(g.antecedent)
      walk(g.consequent)

  walk(f)
  return len(seen)
