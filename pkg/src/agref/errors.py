"""Exception types shared across the package.

Exit-code mapping used by the CLI lives here so the service layer and the
CLI agree: source rejection (lexing/parsing) is exit 2, any semantic refusal
(bad structure, blown budget) is exit 1.
"""


class AgError(Exception):
  """Base class for all errors raised deliberately by this package."""

  exit_code = 1


class SourceError(AgError):
  """A problem in the program text itself."""

  exit_code = 2

  def __init__(self, message, line=None, col=None):
    self.line = line
    self.col = col
    if line is not None:
      message = f"{line}:{col}: {message}"
    super().__init__(message)


class LexError(SourceError):
  pass


class ParseError(SourceError):
  pass


class DesugarError(AgError):
  """An abbreviation does not meet the preconditions for its expansion."""


class GroundingError(AgError):
  """The program cannot be materialized over the configured universe."""


class BudgetError(AgError):
  """A configured size cap was exceeded; names the cap and the flag."""


class SearchBudgetError(BudgetError):
  """Model search exceeded --search-budget nodes."""
