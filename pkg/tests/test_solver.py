"""Stable model enumeration, checked against the brute-force oracle."""

import pytest
from hypothesis import given, settings, strategies as st

from agref.errors import SearchBudgetError
from agref.formula import (
    TRUE, FALSE, ground_atom, conj_of, disj_of, impl, neg,
)
from agref.solver import (
    ht_valid_cheap, stable_models, stable_models_bruteforce,
)
from agref.formula import ht_valid

p = ground_atom("p")
q = ground_atom("q")
r = ground_atom("r")


def names(model):
  return tuple(sorted(a.name for a in model))


def as_names(models):
  return [names(m) for m in models]


def test_empty_program():
  assert stable_models([]) == [frozenset()]


def test_fact():
  assert as_names(stable_models([p])) == [("p",)]


def test_plain_implication_has_empty_model():
  assert stable_models([impl(p, q)]) == [frozenset()]


def test_negation_as_failure():
  # p when not q
  assert as_names(stable_models([impl(neg(q), p)])) == [("p",)]


def test_double_negation_two_models():
  models = stable_models([impl(neg(neg(p)), p)])
  assert as_names(models) == [(), ("p",)]


def test_choice_formula():
  models = stable_models([disj_of((p, neg(p)))])
  assert as_names(models) == [(), ("p",)]


def test_constraint_prunes():
  choice = disj_of((p, neg(p)))
  assert as_names(stable_models([choice, neg(p)])) == [()]
  assert as_names(stable_models([choice, neg(neg(p))])) == [("p",)]


def test_disjunction_minimality():
  assert as_names(stable_models([disj_of((p, q))])) == [("p",), ("q",)]


def test_positive_loop_unfounded():
  assert stable_models([impl(p, q), impl(q, p)]) == [frozenset()]


def test_constraint_only_program_unsat():
  # requiring p without any way to derive it
  assert stable_models([neg(neg(p))]) == []


def test_inconsistent_constraints():
  assert stable_models([p, neg(p)]) == []


def test_grid_choice_disjunction():
  cells = tuple(ground_atom("c%d" % k) for k in range(4))
  f = disj_of((conj_of(cells), neg(disj_of(cells))))
  models = stable_models([f])
  assert len(models) == 2
  assert frozenset() in models
  assert frozenset(cells) in models


def test_choice_conjunction_sixteen():
  cells = tuple(ground_atom("c%d" % k) for k in range(4))
  f = conj_of(tuple(disj_of((c, neg(c))) for c in cells))
  models = stable_models([f])
  assert len(models) == 16


def test_dead_atom_pruned():
  # q has no positive occurrence anywhere, so it is never in a model
  models = stable_models([impl(q, p)])
  assert models == [frozenset()]


def test_forced_by_constraint_still_needs_support():
  # "q must be true" as a constraint gives q no derivation
  assert stable_models([neg(neg(q))]) == []
  # adding a choice for q repairs it
  assert as_names(stable_models([neg(neg(q)), disj_of((q, neg(q)))])) \
      == [("q",)]


def test_budget_refusal():
  cells = tuple(ground_atom("c%d" % k) for k in range(6))
  f = conj_of(tuple(disj_of((c, neg(c))) for c in cells))
  with pytest.raises(SearchBudgetError):
    stable_models([f], search_budget=5)
  assert len(stable_models([f])) == 64


def test_deterministic_order():
  f = conj_of((disj_of((p, neg(p))), disj_of((q, neg(q)))))
  first = stable_models([f])
  second = stable_models([f])
  assert first == second
  assert as_names(first) == [(), ("p",), ("p", "q"), ("q",)]


def test_bruteforce_agrees_on_goldens():
  programs = [
      [],
      [p],
      [impl(p, q)],
      [impl(neg(q), p)],
      [impl(neg(neg(p)), p)],
      [disj_of((p, q))],
      [disj_of((p, neg(p))), neg(p)],
      [impl(p, q), impl(q, p)],
      [neg(neg(p))],
      [p, neg(p)],
      [conj_of((disj_of((p, neg(p))), disj_of((q, neg(q))))), impl(conj_of((p, q)), FALSE)],
  ]
  for fs in programs:
    assert stable_models(fs) == stable_models_bruteforce(fs), fs


ATOMS = tuple(ground_atom(n) for n in "abcd")


def small_formulas():
  leaf = st.sampled_from(ATOMS + (TRUE, FALSE))
  return st.recursive(
      leaf,
      lambda kids: st.one_of(
          st.lists(kids, max_size=3).map(conj_of),
          st.lists(kids, max_size=3).map(disj_of),
          st.tuples(kids, kids).map(lambda t: impl(t[0], t[1])),
          kids.map(neg),
      ),
      max_leaves=8)


@given(st.lists(small_formulas(), max_size=4))
@settings(max_examples=150, deadline=None)
def test_matches_bruteforce(fs):
  assert stable_models(fs) == stable_models_bruteforce(fs)


@given(small_formulas())
@settings(max_examples=200)
def test_cheap_validity_is_sound(f):
  if ht_valid_cheap(f):
    assert ht_valid(f)
