"""Built-in oracle suites.

Each suite generates random inputs from a seeded generator, answers them
twice (once with the production path, once with something too simple to
be wrong) and reports the number of agreements.  The CLI exposes them as
--mode check; the acceptance tests run them at larger sizes.
"""

import random

from .formula import (
    FALSE, TRUE, conj_of, disj_of, ground_atom, impl, neg,
    strongly_equivalent,
)
from .simplify import aggregate_formula
from .solver import stable_models, stable_models_bruteforce
from .syntax import Numeral


def random_formula(rng, atoms, size):
  """A random formula, biased toward small shapes."""
  if size <= 1 or rng.random() < 0.3:
    r = rng.random()
    if r < 0.06:
      return TRUE
    if r < 0.12:
      return FALSE
    return rng.choice(atoms)
  kind = rng.randrange(5)
  if kind <= 1:
    n = rng.randint(0, 3)
    parts = [random_formula(rng, atoms, size // (n + 1)) for _ in range(n)]
    return (conj_of if kind == 0 else disj_of)(parts)
  if kind <= 3:
    return impl(random_formula(rng, atoms, size // 2),
                random_formula(rng, atoms, size // 2))
  return neg(random_formula(rng, atoms, size - 1))


def random_formula_set(rng, max_sigma=10):
  # mostly small signatures, occasionally the full width
  width = rng.choice((2, 2, 3, 3, 3, 4, 4, 5, 5, 6, 7, max_sigma))
  atoms = tuple(ground_atom("a%d" % k) for k in range(width))
  return [random_formula(rng, atoms, rng.randint(2, 10))
          for _ in range(rng.randint(1, 4))], atoms


def random_aggregate(rng):
  names = ("count", "sum", "sum+", "min", "max")
  rels = ("<", "<=", ">", ">=", "=", "!=")
  letters = tuple(ground_atom(c) for c in "pqrs")
  elements = []
  for k in range(rng.randint(1, 4)):
    width = rng.randint(0, 2)
    dens = frozenset(
        (Numeral(rng.randint(-2, 3)),) for _ in range(width))
    elements.append((dens, letters[k]))
  checks = tuple(
      (rng.choice(rels),
       tuple(Numeral(rng.randint(-1, 4))
             for _ in range(rng.randint(1, 2))))
      for _ in range(rng.randint(1, 2)))
  return rng.choice(names), tuple(elements), checks


def suite_solver_bruteforce(seed=0, trials=100, max_sigma=6):
  """stable_models against exhaustive enumeration."""
  rng = random.Random(seed)
  bad = 0
  for _ in range(trials):
    formulas, atoms = random_formula_set(rng, max_sigma)
    got = stable_models(formulas)
    want = stable_models_bruteforce(formulas, extra_atoms=atoms)
    if got != want:
      bad += 1
  return trials, bad


def suite_aggregate_rewrites(seed=0, trials=100):
  """Rewritten aggregate translations against the literal one."""
  rng = random.Random(seed)
  bad = 0
  for _ in range(trials):
    name, elements, checks = random_aggregate(rng)
    on = aggregate_formula(name, elements, checks)
    off = aggregate_formula(name, elements, checks, rewrite=False)
    if not strongly_equivalent(on, off):
      bad += 1
  return trials, bad


def queens_solutions(n):
  """All n-queens placements, one column index per row, by backtracking."""
  out = []
  cols = []

  def place(row):
    if row == n:
      out.append(tuple(cols))
      return
    for col in range(n):
      if any(col == c or row + col == r + c or row - col == r - c
             for r, c in enumerate(cols)):
        continue
      cols.append(col)
      place(row + 1)
      cols.pop()

  place(0)
  return out


def run_all(seed=0):
  """(name, trials, failures) for every suite; used by --mode check."""
  out = []
  for name, suite in (("solver-vs-bruteforce", suite_solver_bruteforce),
                      ("aggregate-rewrites", suite_aggregate_rewrites)):
    trials, bad = suite(seed)
    out.append((name, trials, bad))
  return out
