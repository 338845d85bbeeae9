"""Formula layer: interning, satisfaction, reducts, folding, and the
here-and-there checks behind the simplifier."""

import pytest
from hypothesis import given, settings, strategies as st

from agref.errors import BudgetError
from agref.formula import (
    TRUE, FALSE, ground_atom, conj_of, disj_of, impl, conj, disj, neg,
    atoms_of, atom_sort_key, satisfies, reduct, fold, ht_satisfies,
    ht_valid, ht_counterexample, strongly_equivalent, count_nodes,
)

p = ground_atom("p")
q = ground_atom("q")
r = ground_atom("r")


def test_interning_identity():
  assert ground_atom("p") is p
  assert conj_of((p, q)) is conj_of((q, p))
  assert conj_of((p, p, q)) is conj_of((q, p))
  assert disj_of((p, q)) is disj_of((q, p))
  assert impl(p, q) is impl(p, q)
  assert impl(p, q) is not impl(q, p)
  assert TRUE is conj_of(())
  assert FALSE is disj_of(())


def test_smart_constructors():
  assert conj((p, TRUE)) is p
  assert conj((p, FALSE)) is FALSE
  assert conj(()) is TRUE
  assert disj((p, FALSE)) is p
  assert disj((p, TRUE)) is TRUE
  assert disj(()) is FALSE
  assert conj((p,)) is p
  assert disj((p,)) is p
  # the raw builders keep singletons and constants
  assert conj_of((p,)) is not p
  assert conj_of((p, TRUE)).parts == (TRUE, p) or TRUE in conj_of((p, TRUE)).parts


def test_neg_shape():
  assert neg(p) is impl(p, FALSE)


def test_atoms_of():
  f = impl(conj_of((p, neg(q))), disj_of((r,)))
  assert atoms_of(f) == frozenset((p, q, r))
  assert atoms_of(TRUE) == frozenset()


def test_satisfies():
  f = impl(p, q)
  assert satisfies(set(), f)
  assert satisfies({q}, f)
  assert not satisfies({p}, f)
  assert satisfies({p, q}, f)
  assert satisfies(set(), TRUE)
  assert not satisfies(set(), FALSE)


def test_reduct_double_negation():
  # p when not not p; the empty-set reduct collapses to falsity implies
  # falsity, which the empty set satisfies
  f = impl(neg(neg(p)), p)
  assert reduct(f, frozenset()) is impl(FALSE, FALSE)
  assert satisfies(frozenset(), reduct(f, frozenset()))
  g = reduct(f, frozenset((p,)))
  assert g is impl(impl(FALSE, FALSE), p)
  assert satisfies({p}, g)
  assert not satisfies(set(), g)


def test_reduct_false_atom_and_failed_implication():
  assert reduct(p, frozenset()) is FALSE
  assert reduct(p, frozenset((p,))) is p
  assert reduct(impl(p, q), frozenset((p,))) is FALSE
  assert reduct(impl(p, q), frozenset((p, q))) is impl(p, q)


def test_fold_rules():
  assert fold(conj_of((TRUE, p))) is p
  assert fold(conj_of((FALSE, p))) is FALSE
  assert fold(disj_of((FALSE, p))) is p
  assert fold(disj_of((TRUE, p))) is TRUE
  assert fold(impl(TRUE, p)) is p
  assert fold(impl(FALSE, p)) is TRUE
  assert fold(impl(p, TRUE)) is TRUE
  assert fold(neg(p)) is neg(p)
  nested = impl(conj_of((p, TRUE)), disj_of((q, FALSE)))
  assert fold(nested) is impl(p, q)


def test_ht_satisfaction():
  # a negated formula only looks at the larger world
  assert ht_satisfies(set(), {p}, neg(neg(p)))
  assert not ht_satisfies(set(), {p}, p)
  assert ht_satisfies({p}, {p}, p)
  # implications are checked at both worlds
  f = impl(p, q)
  assert ht_satisfies(set(), {p, q}, f)
  assert not ht_satisfies({p}, {p, q}, f)


def test_ht_valid():
  assert ht_valid(impl(p, p))
  assert not ht_valid(disj_of((p, neg(p))))
  assert ht_valid(neg(neg(disj_of((p, neg(p))))))
  assert ht_valid(TRUE)
  assert not ht_valid(FALSE)


def test_strong_equivalence():
  assert not strongly_equivalent(neg(neg(p)), p)
  ce = ht_counterexample(neg(neg(p)), p)
  assert ce is not None
  j, i = ce
  assert ht_satisfies(j, i, neg(neg(p))) != ht_satisfies(j, i, p)
  # absorption is a strong equivalence
  assert strongly_equivalent(disj_of((p, conj_of((p, q)))), p)
  assert strongly_equivalent(conj_of((p, disj_of((p, q)))), p)
  assert strongly_equivalent(p, p)


def test_strong_equivalence_budget():
  big = conj_of(tuple(ground_atom("x%d" % k) for k in range(15)))
  with pytest.raises(BudgetError):
    strongly_equivalent(big, TRUE)
  # at the cap it still runs
  small = conj_of(tuple(ground_atom("x%d" % k) for k in range(3)))
  assert not strongly_equivalent(small, TRUE)


def test_atom_sort_key():
  a1 = ground_atom("p", (), False)
  a2 = ground_atom("p", (), True)
  a3 = ground_atom("q")
  assert sorted([a3, a2, a1], key=atom_sort_key) == [a1, a2, a3]


def test_count_nodes():
  assert count_nodes(p) == 1
  assert count_nodes(impl(p, q)) == 3
  assert count_nodes(conj_of((p, q))) == 3


ATOMS = tuple(ground_atom(n) for n in "abcde")


def formulas(max_leaves=12):
  leaf = st.sampled_from(ATOMS + (TRUE, FALSE))
  return st.recursive(
      leaf,
      lambda kids: st.one_of(
          st.lists(kids, max_size=3).map(conj_of),
          st.lists(kids, max_size=3).map(disj_of),
          st.tuples(kids, kids).map(lambda t: impl(t[0], t[1])),
          kids.map(neg),
      ),
      max_leaves=max_leaves)


def models():
  return st.sets(st.sampled_from(ATOMS)).map(frozenset)


@given(formulas(), models(), models())
@settings(max_examples=200)
def test_persistence(f, i, j0):
  j = j0 & i
  if ht_satisfies(j, i, f):
    assert satisfies(i, f)


@given(formulas(), models(), models())
@settings(max_examples=200)
def test_reduct_characterizes_ht(f, i, j0):
  j = j0 & i
  assert satisfies(j, reduct(f, i)) == ht_satisfies(j, i, f)


@given(formulas(), models())
@settings(max_examples=200)
def test_reduct_self_satisfaction(f, i):
  assert satisfies(i, f) == satisfies(i, reduct(f, i))


@given(formulas(), models(), models())
@settings(max_examples=200)
def test_fold_is_strongly_equivalent(f, i, j0):
  j = j0 & i
  assert ht_satisfies(j, i, f) == ht_satisfies(j, i, fold(f))
