import pytest
from hypothesis import given, strategies as st

from agref.syntax import (
    INF, SUP, Numeral, SymbolicConstant, FunctionTerm, BinOp, TupleTerm,
    Pool, term_key,
)
from agref.termeval import (
    eval_term, eval_tuple, eval_pool, relation_holds, aggregate_value,
)


def n(v):
  return Numeral(v)


def values(t):
  return [x.value for x in eval_term(t)]


class TestEvalTerm:
  def test_interval(self):
    assert values(BinOp("..", n(2), n(4))) == [2, 3, 4]

  def test_empty_denotations(self):
    # 1..0, 1/0 and 1+a all denote nothing
    assert eval_term(BinOp("..", n(1), n(0))) == ()
    assert eval_term(BinOp("/", n(1), n(0))) == ()
    assert eval_term(BinOp("+", n(1), SymbolicConstant("a"))) == ()

  def test_interval_times_two(self):
    t = BinOp("*", BinOp("..", n(1), n(3)), n(2))
    assert values(t) == [2, 4, 6]

  def test_division_floors(self):
    assert values(BinOp("/", n(-3), n(2))) == [-2]
    assert values(BinOp("/", n(7), n(2))) == [3]

  def test_nested_function(self):
    t = FunctionTerm("f", (BinOp("..", n(1), n(2)),))
    assert eval_term(t) == (FunctionTerm("f", (n(1),)),
                            FunctionTerm("f", (n(2),)))

  def test_tuple_product(self):
    t = TupleTerm((BinOp("..", n(1), n(2)), SymbolicConstant("a")))
    assert len(eval_term(t)) == 2

  def test_interval_of_intervals(self):
    # (1..2)..(1..3): lower from {1,2}, upper from {1,3}
    t = BinOp("..", BinOp("..", n(1), n(2)), BinOp("..", n(1), n(3)))
    assert values(t) == [1, 2, 3]

  def test_precomputed_fixed(self):
    c = FunctionTerm("f", (n(1), SymbolicConstant("a")))
    assert eval_term(c) == (c,)
    assert eval_term(INF) == (INF,)


class TestPools:
  def test_tuple_denotation(self):
    # [1..2, 1..2] multiplies out
    ts = eval_tuple((BinOp("..", n(1), n(2)), BinOp("..", n(1), n(2))))
    assert len(ts) == 4
    assert (n(1), n(2)) in ts

  def test_pool_union(self):
    p = Pool(((n(1), n(2)), (n(3), BinOp("..", n(4), n(5)))))
    assert eval_pool(p) == ((n(1), n(2)), (n(3), n(4)), (n(3), n(5)))

  def test_precomputed_tuple_is_singleton(self):
    assert eval_tuple((n(1), SymbolicConstant("a"))) == ((n(1), SymbolicConstant("a")),)


class TestRelations:
  def test_equality_is_syntactic(self):
    assert relation_holds(n(1), "=", n(1))
    assert not relation_holds(n(1), "=", SymbolicConstant("a"))
    assert relation_holds(n(1), "!=", SymbolicConstant("a"))

  def test_order_across_kinds(self):
    assert relation_holds(INF, "<", n(-100))
    assert relation_holds(n(100), "<", SymbolicConstant("a"))
    assert relation_holds(SymbolicConstant("z"), "<", TupleTerm(()))
    assert relation_holds(TupleTerm(()), "<", SUP)

  def test_numeral_order(self):
    assert relation_holds(n(2), "<=", n(2))
    assert not relation_holds(n(3), "<", n(3))
    assert relation_holds(n(5), ">=", n(-5))


class TestAggregates:
  def test_count(self):
    assert aggregate_value("count", {(n(1),), (n(2),)}) == n(2)
    assert aggregate_value("count", set()) == n(0)

  def test_sum_weights(self):
    # weight is the first member when a numeral, else 0
    ts = {(n(3), SymbolicConstant("a")), (n(-1),), (SymbolicConstant("b"),), ()}
    assert aggregate_value("sum", ts) == n(2)
    assert aggregate_value("sum+", ts) == n(3)

  def test_min_max(self):
    ts = {(n(4),), (SymbolicConstant("a"), n(9)), (n(1), n(7))}
    assert aggregate_value("min", ts) == n(1)
    assert aggregate_value("max", ts) == SymbolicConstant("a")

  def test_min_max_empty(self):
    assert aggregate_value("min", set()) == SUP
    assert aggregate_value("max", set()) == INF

  def test_min_max_ignore_empty_tuples(self):
    assert aggregate_value("min", {()}) == SUP
    assert aggregate_value("max", {(), (n(2),)}) == n(2)

  def test_infinite_case_values(self):
    assert aggregate_value("count", set(), assume_infinite=True) == SUP
    assert aggregate_value("sum", set(), assume_infinite=True) == n(0)
    assert aggregate_value("sum+", set(), assume_infinite=True) == SUP
    assert aggregate_value("min", set(), assume_infinite=True) == INF
    assert aggregate_value("max", set(), assume_infinite=True) == SUP


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6),
       st.lists(st.integers(-20, 20), min_size=1, max_size=6))
def test_interval_matches_python_range(lows, highs):
  lo = BinOp("..", n(min(lows)), n(max(lows)))
  t = BinOp("..", lo, n(max(highs)))
  expect = set()
  for a in range(min(lows), max(lows) + 1):
    expect.update(range(a, max(highs) + 1))
  assert values(t) == sorted(expect)


@given(st.sets(st.tuples(st.integers(-9, 9), st.integers(-9, 9)), max_size=8))
def test_sum_matches_python(pairs):
  ts = {(n(a), n(b)) for a, b in pairs}
  assert aggregate_value("sum", ts) == n(sum(a for a, _ in pairs))
