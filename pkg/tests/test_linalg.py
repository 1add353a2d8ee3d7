from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from oracles import sympy_rank
from regdecomp.linalg import Span, complement_basis, independent_subset, rank, rref

small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def matrices(max_rows=6, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=0, max_size=max_rows)
        .map(lambda rows: (rows, c)))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_sympy(mc):
    rows, _ = mc
    assert rank(rows) == sympy_rank(rows)


@settings(max_examples=100, deadline=None)
@given(matrices(), st.data())
def test_membership_matches_sympy(mc, data):
    rows, c = mc
    v = data.draw(st.lists(small, min_size=c, max_size=c))
    inside = sympy_rank(rows + [v]) == sympy_rank(rows)
    assert (v in Span(rows)) == inside


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rref_matches_sympy(mc):
    rows, c = mc
    ours = rref(rows, c)
    if not rows:
        assert ours == ()
        return
    m, _ = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).rref()
    theirs = tuple(tuple(Fraction(int(x.p), int(x.q)) for x in m.row(i))
                   for i in range(m.rows) if any(m.row(i)))
    assert ours == theirs


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_complement_completes_to_full_rank(mc):
    rows, c = mc
    s = Span(rows)
    extra = complement_basis(s, c)
    assert s.dim + len(extra) == c
    assert rank(list(rows) + extra) == c


def test_span_basics():
    s = Span([[1, 1, 0], [0, 1, 1]])
    assert s.dim == 2
    assert [1, 0, -1] in s
    assert [1, 0, 0] not in s
    assert not s.add([2, 3, 1])
    assert s.add([0, 0, 1])
    assert independent_subset([[1, 0], [2, 0], [0, 1], [1, 1]]) == [0, 2]
    # sparse dict input is accepted as well
    assert {"x": Fraction(1, 2)} in Span([{"x": 3}])
