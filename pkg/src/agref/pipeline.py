"""End-to-end runs: program text in, printable report out.

The four modes mirror the stages: core stops after abbreviation
expansion, ground after the translation to formulas, models runs the
solver, and check ignores the input and runs the built-in oracle suites.
Failures map to exit codes through the error hierarchy: problems in the
source are 2, semantic refusals (budgets, bad structure) are 1.
"""

from dataclasses import dataclass, field

from . import selfcheck
from .desugar import desugar_program
from .errors import AgError, SourceError
from .formula import Conj, atom_sort_key, ground_atom
from .grounder import build_universe, translate_program
from .parser import parse_program
from .printer import formula_text, ground_atom_text, rule_text
from .simplify import DEFAULT_AGG_BUDGET
from .solver import stable_models

DEFAULT_SEARCH_BUDGET = 2 ** 22

MODES = ("models", "ground", "core", "check")


@dataclass
class RunConfig:
  program: str = ""
  constants: dict = field(default_factory=dict)
  mode: str = "models"
  int_range: object = None     # (lo, hi) or None for the estimate
  fn_depth: int = 0
  models_limit: object = None  # int truncates after sorting
  simplify: bool = True
  agg_budget: int = DEFAULT_AGG_BUDGET
  search_budget: int = DEFAULT_SEARCH_BUDGET
  list_inconsistent: bool = False


@dataclass
class RunReport:
  mode: str
  exit_code: int
  lines: list
  models: object = None        # models mode: lists of atom texts
  inconsistent: object = None


def load_rules(cfg):
  return desugar_program(parse_program(cfg.program, cfg.constants))


def ground(cfg, rules):
  universe = build_universe(rules, cfg.int_range, cfg.fn_depth)
  formulas = translate_program(rules, universe, rewrite=cfg.simplify,
                               agg_budget=cfg.agg_budget)
  return universe, formulas


def is_consistent(model):
  """No atom together with its strong negation."""
  return not any(a.negated and ground_atom(a.name, a.args) in model
                 for a in model)


def model_atoms(model):
  return [ground_atom_text(a) for a in sorted(model, key=atom_sort_key)]


def dump_lines(formulas):
  """One formula per line; a top-level conjunction is already a set of
  formulas, so its parts get their own lines."""
  seen = {}
  for f in formulas:
    for part in (f.parts if isinstance(f, Conj) else (f,)):
      seen[formula_text(part)] = None
  return sorted(seen)


def _models_report(cfg, formulas):
  models = stable_models(formulas, cfg.search_budget)
  kept = [m for m in models if is_consistent(m)]
  dropped = [m for m in models if not is_consistent(m)]
  if cfg.models_limit is not None:
    kept = kept[:cfg.models_limit]
  shown = [model_atoms(m) for m in kept]
  filtered = [model_atoms(m) for m in dropped]
  lines = ["model:" + "".join(" " + a for a in atoms) for atoms in shown]
  if cfg.list_inconsistent:
    lines += ["inconsistent:" + "".join(" " + a for a in atoms)
              for atoms in filtered]
  lines.append("count: %d" % len(shown))
  return RunReport("models", 0, lines, models=shown,
                   inconsistent=filtered)


def _check_report():
  lines = []
  failures = 0
  for name, trials, bad in selfcheck.run_all():
    failures += bad
    lines.append("%s: %s (%d/%d)" %
                 ("pass" if bad == 0 else "fail", name, trials - bad,
                  trials))
  return RunReport("check", 1 if failures else 0, lines)


def run(cfg):
  try:
    if cfg.mode == "check":
      return _check_report()
    if cfg.mode not in MODES:
      raise AgError(f"unknown mode {cfg.mode!r}")
    rules = load_rules(cfg)
    if cfg.mode == "core":
      return RunReport("core", 0, [rule_text(r) for r in rules])
    universe, formulas = ground(cfg, rules)
    if cfg.mode == "ground":
      return RunReport("ground", 0, dump_lines(formulas))
    return _models_report(cfg, formulas)
  except SourceError as e:
    return RunReport(cfg.mode, e.exit_code, [f"error: {e}"])
  except AgError as e:
    return RunReport(cfg.mode, e.exit_code, [f"refused: {e}"])
