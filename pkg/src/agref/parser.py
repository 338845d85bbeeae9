"""Lexer and recursive-descent parser for the ASCII surface syntax.

Grammar notes, where they are not obvious from the code:

  * `..` binds loosest, then `+ -`, then `* /`, all left-associative;
    unary minus binds tightest and stands for 0 - t.
  * `-` directly before an identifier forms a negated atom and is only
    accepted in atom positions; arithmetic negation of a symbolic constant
    must be written 0-c.
  * pooling (`;` between argument tuples) is accepted only inside the
    parentheses of an atom, mirroring the shape of the language: f(a;b) is
    neither a term nor a pool.
  * a conditional literal in a body swallows following comma-separated
    literals into its condition; the next body literal must be attached
    with `;`.
"""

from .errors import LexError, ParseError
from .syntax import (
    INF, SUP, FALSUM, Numeral, SymbolicConstant, Variable, BinOp, TupleTerm,
    Pool, Atom, SymbolicLiteral, ArithmeticLiteral, ConditionalLiteral,
    AggregateElement, AggregateAtom, AggregateLiteral, Choice, LparseElement,
    LparseAggregate, LparseLiteral, HeadAggregateElement, HeadAggregate,
    Rule, ChoiceRule, HeadAggregateRule, LparseHeadRule,
    make_function, RELATIONS,
)


class Token:
  __slots__ = ("kind", "value", "line", "col")

  def __init__(self, kind, value, line, col):
    self.kind = kind
    self.value = value
    self.line = line
    self.col = col

  def __repr__(self):
    return f"Token({self.kind!r}, {self.value!r})"


_PUNCT = (":-", "..", "<=", ">=", "!=",
          ".", ",", ";", ":", "(", ")", "{", "}",
          "+", "-", "*", "/", "<", ">", "=")

_HASH_WORDS = ("inf", "sup", "count", "sum", "min", "max", "false")

AGG_TOKENS = ("#count", "#sum", "#sum+", "#min", "#max")


def tokenize(text):
  toks = []
  i = 0
  line, col = 1, 1

  def advance(k):
    nonlocal i, line, col
    for _ in range(k):
      if text[i] == "\n":
        line += 1
        col = 1
      else:
        col += 1
      i += 1

  n = len(text)
  while i < n:
    c = text[i]
    if c in " \t\r\n":
      advance(1)
      continue
    if c == "%":
      while i < n and text[i] != "\n":
        advance(1)
      continue
    startl, startc = line, col
    if c.isdigit():
      j = i
      while j < n and text[j].isdigit():
        j += 1
      toks.append(Token("num", int(text[i:j]), startl, startc))
      advance(j - i)
      continue
    if c.isalpha() or c == "_":
      j = i
      while j < n and (text[j].isalnum() or text[j] == "_"):
        j += 1
      word = text[i:j]
      advance(j - i)
      if word == "not":
        toks.append(Token("not", "not", startl, startc))
      elif word[0] == "_":
        raise LexError(f"identifiers cannot start with '_': {word}",
                       startl, startc)
      elif word[0].isupper():
        toks.append(Token("var", word, startl, startc))
      else:
        toks.append(Token("ident", word, startl, startc))
      continue
    if c == "#":
      j = i + 1
      while j < n and text[j].isalpha():
        j += 1
      word = text[i + 1:j]
      if word not in _HASH_WORDS:
        raise LexError(f"unknown directive #{word}", startl, startc)
      if word == "sum" and j < n and text[j] == "+":
        word = "sum+"
        j += 1
      toks.append(Token("#" + word, "#" + word, startl, startc))
      advance(j - i)
      continue
    for p in _PUNCT:
      if text.startswith(p, i):
        toks.append(Token(p, p, startl, startc))
        advance(len(p))
        break
    else:
      raise LexError(f"unexpected character {c!r}", startl, startc)
  toks.append(Token("eof", None, line, col))
  return toks


_TERM_START = ("num", "ident", "var", "(", "-", "#inf", "#sup")


def _shown(tok):
  if tok.kind == "eof":
    return "end of input"
  return repr(tok.value)


class Parser:
  def __init__(self, text, constants=None):
    self.toks = tokenize(text)
    self.pos = 0
    self.constants = dict(constants or {})

  # -- token helpers

  def peek(self, k=0):
    j = min(self.pos + k, len(self.toks) - 1)
    return self.toks[j]

  def at(self, kind, k=0):
    return self.peek(k).kind == kind

  def eat(self):
    tok = self.toks[self.pos]
    if tok.kind != "eof":
      self.pos += 1
    return tok

  def expect(self, kind, what=None):
    tok = self.peek()
    if tok.kind != kind:
      raise ParseError(f"expected {what or kind}, found {_shown(tok)}",
                       tok.line, tok.col)
    return self.eat()

  def fail(self, msg):
    tok = self.peek()
    raise ParseError(msg + f" (found {_shown(tok)})", tok.line, tok.col)

  def at_rel(self):
    return self.peek().kind in RELATIONS

  # -- terms

  def parse_term(self):
    t = self.parse_addsub()
    while self.at(".."):
      self.eat()
      t = BinOp("..", t, self.parse_addsub())
    return t

  def parse_addsub(self):
    t = self.parse_muldiv()
    while self.at("+") or self.at("-"):
      op = self.eat().kind
      t = BinOp(op, t, self.parse_muldiv())
    return t

  def parse_muldiv(self):
    t = self.parse_unary()
    while self.at("*") or self.at("/"):
      op = self.eat().kind
      t = BinOp(op, t, self.parse_unary())
    return t

  def parse_unary(self):
    if self.at("-"):
      self.eat()
      if self.at("ident"):
        self.fail("negated constants are not terms; "
                  "write 0-c for arithmetic negation")
      return BinOp("-", Numeral(0), self.parse_unary())
    return self.parse_primary()

  def parse_primary(self):
    tok = self.peek()
    if tok.kind == "num":
      self.eat()
      return Numeral(tok.value)
    if tok.kind == "#inf":
      self.eat()
      return INF
    if tok.kind == "#sup":
      self.eat()
      return SUP
    if tok.kind == "var":
      self.eat()
      return Variable(tok.value)
    if tok.kind == "ident":
      self.eat()
      if self.at("("):
        self.eat()
        args = []
        if not self.at(")"):
          args.append(self.parse_term())
          while self.at(","):
            self.eat()
            args.append(self.parse_term())
        if self.at(";"):
          self.fail("pooling is only allowed in atom arguments")
        self.expect(")")
        return make_function(tok.value, args)
      if tok.value in self.constants:
        return Numeral(self.constants[tok.value])
      return SymbolicConstant(tok.value)
    if tok.kind == "(":
      self.eat()
      if self.at(")"):
        self.eat()
        return TupleTerm(())
      first = self.parse_term()
      if self.at(","):
        elems = [first]
        while self.at(","):
          self.eat()
          if self.at(")"):  # trailing comma: one-tuple and friends
            break
          elems.append(self.parse_term())
        self.expect(")")
        return TupleTerm(tuple(elems))
      self.expect(")")
      return first
    self.fail("expected a term")

  def parse_termlist(self):
    terms = [self.parse_term()]
    while self.at(","):
      self.eat()
      terms.append(self.parse_term())
    return tuple(terms)

  # -- atoms and simple literals

  def at_atom_start(self):
    return (self.at("ident")
            or (self.at("-") and self.at("ident", 1)))

  def parse_atom(self):
    negated = False
    if self.at("-"):
      self.eat()
      negated = True
    name = self.expect("ident", "a predicate name").value
    if self.at("("):
      self.eat()
      pool = self.parse_pool()
      self.expect(")")
    else:
      pool = Pool(((),))
    return Atom(name, negated, pool)

  def parse_pool(self):
    if self.at(")"):
      return Pool(((),))
    alts = [self.parse_termlist()]
    while self.at(";"):
      self.eat()
      alts.append(self.parse_termlist())
    return Pool(tuple(alts))

  def parse_not_depth(self):
    depth = 0
    while self.at("not"):
      self.eat()
      depth += 1
    if depth > 2:
      self.fail("at most two nots may be stacked")
    return depth

  def parse_slit_or_alit(self):
    """A symbolic or arithmetic literal (conditions, heads, aggregates)."""
    depth = self.parse_not_depth()
    if self.at_atom_start():
      save = self.pos
      atom = self.parse_atom()
      nxt = self.peek().kind
      if nxt not in RELATIONS and nxt not in ("+", "-", "*", "/", "..", "{"):
        return SymbolicLiteral(depth, atom)
      self.pos = save
    if depth:
      self.fail("not applies only to atoms and aggregates")
    left = self.parse_term()
    if not self.at_rel():
      self.fail("expected a comparison")
    rel = self.eat().kind
    right = self.parse_term()
    return ArithmeticLiteral(left, rel, right)

  def parse_condition(self):
    """The ': L1, ..., Lk' tail of a conditional literal, possibly empty."""
    self.expect(":")
    lits = []
    while self.at_atom_start() or self.at("not") or self.peek().kind in _TERM_START:
      lits.append(self.parse_slit_or_alit())
      if self.at(","):
        self.eat()
        continue
      break
    return tuple(lits)

  # -- aggregates

  def parse_agg_elements(self):
    elements = []
    while not self.at("}"):
      terms = ()
      if not self.at(":"):
        terms = self.parse_termlist()
      cond = ()
      if self.at(":"):
        cond = self.parse_condition()
      elements.append(AggregateElement(terms, cond))
      if self.at(";"):
        self.eat()
        continue
      break
    return tuple(elements)

  def parse_aggregate(self, left):
    name = self.eat().value[1:]  # drop the '#'
    self.expect("{")
    elements = self.parse_agg_elements()
    self.expect("}")
    right = None
    if self.at_rel():
      rel = self.eat().kind
      right = (rel, self.parse_term())
    if left is None and right is None:
      self.fail("an aggregate atom needs a bound on at least one side")
    return AggregateAtom(name, elements, left, right)

  def parse_lparse_elements(self):
    elements = []
    while not self.at("}"):
      depth = self.parse_not_depth()
      lit = SymbolicLiteral(depth, self.parse_atom())
      cond = ()
      if self.at(":"):
        cond = self.parse_condition()
      elements.append(LparseElement(lit, cond))
      if self.at(";"):
        self.eat()
        continue
      break
    return tuple(elements)

  def parse_lparse(self, lower):
    self.expect("{")
    elements = self.parse_lparse_elements()
    self.expect("}")
    upper = None
    if self.peek().kind in _TERM_START and not (
        self.at("-") and self.at("ident", 1)):
      upper = self.parse_term()
    return LparseAggregate(lower, elements, upper)

  # -- body

  def parse_body_literal(self):
    depth = self.parse_not_depth()
    if self.peek().kind in AGG_TOKENS:
      return AggregateLiteral(depth, self.parse_aggregate(None))
    if self.at("{"):
      return LparseLiteral(depth, self.parse_lparse(None))
    if self.at("#false"):
      if depth:
        self.fail("not cannot apply to #false")
      self.eat()
      cond = self.parse_condition() if self.at(":") else ()
      return ConditionalLiteral(FALSUM, cond)
    if self.at_atom_start():
      save = self.pos
      atom = self.parse_atom()
      nxt = self.peek().kind
      if nxt not in RELATIONS and nxt not in ("+", "-", "*", "/", "..", "{"):
        lit = SymbolicLiteral(depth, atom)
        cond = self.parse_condition() if self.at(":") else ()
        return ConditionalLiteral(lit, cond)
      self.pos = save
    if self.peek().kind not in _TERM_START:
      self.fail("expected a body literal")
    left = self.parse_term()
    if self.at("{"):
      return LparseLiteral(depth, self.parse_lparse(left))
    if not self.at_rel():
      self.fail("expected a comparison or aggregate")
    rel = self.eat().kind
    if self.peek().kind in AGG_TOKENS:
      return AggregateLiteral(depth, self.parse_aggregate((left, rel)))
    if depth:
      self.fail("not applies only to atoms and aggregates")
    right = self.parse_term()
    alit = ArithmeticLiteral(left, rel, right)
    cond = self.parse_condition() if self.at(":") else ()
    return ConditionalLiteral(alit, cond)

  def parse_body(self):
    lits = [self.parse_body_literal()]
    while self.at(",") or self.at(";"):
      self.eat()
      lits.append(self.parse_body_literal())
    return tuple(lits)

  # -- heads and rules

  def parse_head_aggregate(self, left):
    name = self.eat().value[1:]
    self.expect("{")
    elements = []
    while not self.at("}"):
      terms = ()
      if not self.at(":"):
        terms = self.parse_termlist()
      self.expect(":", "':' before the element's literal")
      depth = self.parse_not_depth()
      lit = SymbolicLiteral(depth, self.parse_atom())
      cond = ()
      if self.at(":"):
        cond = self.parse_condition()
      elements.append(HeadAggregateElement(terms, lit, cond))
      if self.at(";"):
        self.eat()
        continue
      break
    self.expect("}")
    right = None
    if self.at_rel():
      rel = self.eat().kind
      right = (rel, self.parse_term())
    return HeadAggregate(name, tuple(elements), left, right)

  def parse_rule(self):
    if self.at(":-"):
      self.eat()
      body = self.parse_body()
      self.expect(".")
      return Rule((), body)

    head = self.parse_head()
    if self.at(":-"):
      self.eat()
      body = self.parse_body()
    else:
      body = ()
    self.expect(".")

    kind, payload = head
    if kind == "disj":
      return Rule(payload, body)
    if kind == "choice":
      return ChoiceRule(Choice(payload), body)
    if kind == "lparse":
      return LparseHeadRule(payload, body)
    return HeadAggregateRule(payload, body)

  def parse_head(self):
    if self.at("{"):
      return self.finish_brace_head(None)
    if self.peek().kind in AGG_TOKENS:
      return ("hagg", self.parse_head_aggregate(None))
    if self.peek().kind in _TERM_START:
      # a head may start with a term only as the lower bound of an lparse
      # expression or of a bounded aggregate, or in an arithmetic literal;
      # try the bound reading first and backtrack if it goes nowhere
      save = self.pos
      t = None
      try:
        t = self.parse_term()
      except ParseError:
        self.pos = save
      if t is not None:
        if self.at("{"):
          return self.finish_brace_head(t)
        if self.at_rel() and self.peek(1).kind in AGG_TOKENS:
          rel = self.eat().kind
          return ("hagg", self.parse_head_aggregate((t, rel)))
        self.pos = save
    disjuncts = [self.parse_slit_or_alit()]
    if self.at(":"):
      self.fail("conditional literals cannot appear in heads")
    while self.at(";"):
      self.eat()
      disjuncts.append(self.parse_slit_or_alit())
      if self.at(":"):
        self.fail("conditional literals cannot appear in heads")
    return ("disj", tuple(disjuncts))

  def finish_brace_head(self, lower):
    lp = self.parse_lparse(lower)
    if (lp.lower is None and lp.upper is None and len(lp.elements) == 1
        and lp.elements[0].condition == ()
        and lp.elements[0].literal.depth == 0):
      return ("choice", lp.elements[0].literal.atom)
    return ("lparse", lp)

  def parse_program(self):
    rules = []
    while not self.at("eof"):
      rules.append(self.parse_rule())
    return tuple(rules)


def parse_program(text, constants=None):
  """Parse a program; constants maps names to integers substituted in
  term positions."""
  return Parser(text, constants).parse_program()


def parse_rule(text, constants=None):
  p = Parser(text, constants)
  rule = p.parse_rule()
  if not p.at("eof"):
    p.fail("trailing input after rule")
  return rule


def parse_term_text(text, constants=None):
  p = Parser(text, constants)
  t = p.parse_term()
  if not p.at("eof"):
    p.fail("trailing input after term")
  return t
