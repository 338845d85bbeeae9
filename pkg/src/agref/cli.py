"""Command line front end.

A thin client of the service layer: the arguments become one request
object, answered in process by the same handlers the HTTP service uses,
or remotely when --server points at a running instance.
"""

import argparse
import sys

from .pipeline import (
    DEFAULT_AGG_BUDGET, DEFAULT_SEARCH_BUDGET, MODES,
)

_ENDPOINT = {"models": "solve", "ground": "ground", "core": "core",
             "check": "check"}


def _parse_constants(pairs, parser):
  out = {}
  for pair in pairs or ():
    name, sep, value = pair.partition("=")
    try:
      if not sep or not name:
        raise ValueError
      out[name] = int(value)
    except ValueError:
      parser.error(f"expected NAME=INT, got {pair!r}")
  return out


def _parse_range(text, parser):
  if text is None:
    return None
  lo, sep, hi = text.partition("..")
  try:
    if not sep:
      raise ValueError
    return (int(lo), int(hi))
  except ValueError:
    parser.error(f"expected LO..HI, got {text!r}")


def _build_parser():
  p = argparse.ArgumentParser(
      prog="agref",
      description="Translate a program to propositional formulas over a "
                  "finite universe and enumerate its stable models.")
  p.add_argument("file", nargs="?",
                 help="program file, - for stdin (unused by --mode check)")
  p.add_argument("--mode", choices=MODES, default="models")
  p.add_argument("-c", "--const", action="append", metavar="NAME=INT",
                 help="substitute a numeral for a constant name")
  p.add_argument("--int-range", metavar="LO..HI",
                 help="numeral part of the universe (default: estimated "
                      "from the program)")
  p.add_argument("--fn-depth", type=int, default=0, metavar="K",
                 help="close the universe under functions K levels deep")
  p.add_argument("--models", type=int, default=None, metavar="N",
                 help="print at most N models (after sorting)")
  p.add_argument("--no-simplify", action="store_true",
                 help="translate aggregates literally, no rewrites")
  p.add_argument("--agg-budget", type=int, default=DEFAULT_AGG_BUDGET,
                 metavar="K")
  p.add_argument("--search-budget", type=int,
                 default=DEFAULT_SEARCH_BUDGET, metavar="K")
  p.add_argument("--dump-core", action="store_true",
                 help="shorthand for --mode core")
  p.add_argument("--ground", action="store_true",
                 help="shorthand for --mode ground")
  p.add_argument("--list-inconsistent", action="store_true",
                 help="also show candidates dropped for containing an "
                      "atom with its strong negation")
  p.add_argument("--server", metavar="URL",
                 help="send the request to a running service instead of "
                      "answering in process")
  return p


def _read_program(path, parser):
  if path == "-":
    return sys.stdin.read()
  try:
    with open(path, encoding="utf-8") as handle:
      return handle.read()
  except OSError as e:
    parser.error(str(e))


def main(argv=None):
  parser = _build_parser()
  args = parser.parse_args(argv)
  mode = args.mode
  if args.ground:
    mode = "ground"
  if args.dump_core:
    mode = "core"
  program = ""
  if mode != "check":
    if args.file is None:
      parser.error("a program file is required outside --mode check")
    program = _read_program(args.file, parser)
  request = {
      "program": program,
      "constants": _parse_constants(args.const, parser),
      "int_range": _parse_range(args.int_range, parser),
      "fn_depth": args.fn_depth,
      "models_limit": args.models,
      "simplify": not args.no_simplify,
      "agg_budget": args.agg_budget,
      "search_budget": args.search_budget,
      "list_inconsistent": args.list_inconsistent,
  }
  if args.server:
    import httpx
    resp = httpx.post(f"{args.server.rstrip('/')}/{_ENDPOINT[mode]}",
                      json=request, timeout=600.0)
    resp.raise_for_status()
    data = resp.json()
  else:
    from . import service
    handler = getattr(service, _ENDPOINT[mode])
    data = handler(service.SolveRequest(**request)).model_dump()
  for line in data["lines"]:
    print(line)
  return data["exit_code"]


if __name__ == "__main__":
  sys.exit(main())
