import pytest

from agref.desugar import desugar_program, desugar_rule
from agref.errors import DesugarError
from agref.parser import parse_program, parse_rule
from agref.printer import rule_text
from agref.syntax import (
    Numeral, FunctionTerm, Variable, Rule, ChoiceRule, AggregateLiteral,
    SymbolicLiteral, ConditionalLiteral,
)


def one(src, **kw):
  rules = desugar_rule(parse_rule(src, **kw))
  assert len(rules) == 1
  return rules[0]


class TestBodyBraces:
  def test_count_over_term_representations(self):
    r = one(":- 2 {q(X,Y) : d1(X,Y,D)}.")
    lit = r.body[0]
    assert isinstance(lit, AggregateLiteral)
    assert lit.depth == 0
    agg = lit.atom
    assert agg.name == "count"
    assert agg.left == (Numeral(2), "<=")
    assert agg.right is None
    el = agg.elements[0]
    assert el.terms == (Numeral(0),
                        FunctionTerm("q", (Variable("X"), Variable("Y"))))
    # the element literal itself leads the condition
    assert el.condition[0] == SymbolicLiteral(
        0, parse_rule("q(X,Y).").head[0].atom)
    assert el.condition[1].atom.name == "d1"

  def test_depth_in_term_representation(self):
    r = one(":- {not p; not not q} 1.")
    els = r.body[0].atom.elements
    assert els[0].terms[0] == Numeral(1)
    assert els[1].terms[0] == Numeral(2)
    assert r.body[0].atom.left is None
    assert r.body[0].atom.right == ("<=", Numeral(1))

  def test_not_over_braces(self):
    r = one(":- not 1 {p} 2.")
    assert r.body[0].depth == 1

  def test_negated_atom_representation(self):
    r = one(":- 1 {-p(a)}.")
    el = r.body[0].atom.elements[0]
    assert el.terms[1].negated

  def test_no_bounds_rejected(self):
    with pytest.raises(DesugarError):
      desugar_rule(parse_rule(":- {p : q}."))

  def test_interval_rejected(self):
    with pytest.raises(DesugarError):
      desugar_rule(parse_rule(":- 1 {p(1..2)}."))

  def test_pool_rejected(self):
    with pytest.raises(DesugarError):
      desugar_rule(parse_rule(":- 1 {p(a;b)}."))


class TestHeadBraces:
  def test_choice_rules_and_constraint(self):
    rules = desugar_rule(parse_rule("1 {p(X) : q(X); r} 2 :- s(X)."))
    assert len(rules) == 3
    guard, ch1, ch2 = rules
    assert isinstance(guard, Rule) and guard.head == ()
    assert rule_text(guard) == \
        ":- s(X), not 1 <= #count{0,p(X) : p(X), q(X); 0,r : r} <= 2."
    assert isinstance(ch1, ChoiceRule)
    assert ch1.choice.atom.name == "p"
    # body carries the original body plus the element's condition
    assert rule_text(ch1) == "{p(X)} :- s(X), q(X)."
    assert rule_text(ch2) == "{r} :- s(X)."

  def test_no_bounds_no_constraint(self):
    rules = desugar_rule(parse_rule("{p; q}."))
    assert [rule_text(r) for r in rules] == ["{p}.", "{q}."]

  def test_not_literal_gets_no_choice_rule(self):
    rules = desugar_rule(parse_rule("{p; not q} 1."))
    texts = [rule_text(r) for r in rules]
    assert texts == [
        ":- not #count{0,p : p; 1,q : not q} <= 1.",
        "{p}.",
    ]

  def test_native_choice_untouched(self):
    rules = desugar_rule(parse_rule("{q(1..n,1..n)}."))
    assert len(rules) == 1
    assert isinstance(rules[0], ChoiceRule)


class TestHeadAggregates:
  def test_expansion(self):
    rules = desugar_rule(parse_rule(
        "#sum{X : p(X) : q(X)} >= 2 :- r."))
    assert [rule_text(r) for r in rules] == [
        ":- r, not #sum{X : p(X), q(X)} >= 2.",
        "{p(X)} :- r, q(X).",
    ]

  def test_lower_bound_kept(self):
    rules = desugar_rule(parse_rule("2 < #count{X : p(X)}."))
    assert rule_text(rules[0]) == ":- not 2 < #count{X : p(X)}."

  def test_intervals_allowed_in_explicit_head_aggregates(self):
    rules = desugar_rule(parse_rule("#count{0,p(1..2) : p(1..2)} <= 3."))
    assert len(rules) == 2
    assert isinstance(rules[1], ChoiceRule)

  def test_pool_in_element_literal_rejected(self):
    with pytest.raises(DesugarError):
      desugar_rule(parse_rule("#count{0 : p(a;b)} <= 1."))


class TestGolden:
  def test_diagonal_rule(self):
    # the brace form of the diagonal constraint expands to a bounded count
    # over term representations, with the literal leading the condition
    r = one(":- D = 1..n*2-1, 2 {q(X,Y) : d2(X,Y,D)}.")
    assert rule_text(r) == \
        ":- D = 1..n*2-1, 2 <= #count{0,q(X,Y) : q(X,Y), d2(X,Y,D)}."

  def test_core_rules_pass_through(self):
    src = [
        "{q(1..n,1..n)}.",
        ":- X = 1..n, not #count{Y : q(X,Y)} = 1.",
        "d1(X,Y,X-Y+n) :- X = 1..n, Y = 1..n.",
        "p(X;Y) :- q(X,Y).",
    ]
    prog = parse_program("\n".join(src))
    assert [rule_text(r) for r in desugar_program(prog)] == src
